#include "doctest.h"

#include <map>
#include <stdexcept>

#include "stabkit/bipartition.hpp"
#include "stabkit/geometry.hpp"

using namespace stabkit;

namespace {

std::uint64_t choose2(int n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

}  // namespace

TEST_CASE("partition_from_pair follows the directed-line rule") {
  const PointSet ps({{0, 0}, {4, 0}, {2, 3}});
  // Point 2 is left of 0->1, so it joins point 0's side.
  const Bipartition b01 = partition_from_pair(ps, 0, 1);
  CHECK(b01.side_a_indices() == std::vector<int>{0, 2});
  // Reversing the pair swaps which endpoint collects the left side, which
  // lands on the same unordered partition.
  const Bipartition b10 = partition_from_pair(ps, 1, 0);
  CHECK(b10 == b01);
  CHECK_THROWS_AS(partition_from_pair(ps, 1, 1), std::invalid_argument);
}

TEST_CASE("canonical form keeps point 0 on side A and both sides nonempty") {
  CHECK_THROWS_AS(make_bipartition(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_bipartition(0xF, 4), std::invalid_argument);
  const Bipartition b = make_bipartition(0b0110, 4);
  CHECK(b.side_a(0));
  CHECK(b.side_a_indices() == std::vector<int>{0, 3});
}

TEST_CASE("representative set has exactly C(n,2) members") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 3 + static_cast<int>(seed % 7);
    const PointSet ps = random_general_position(n, seed * 31 + 5);
    const RepresentativeSet reps = representative_partitions(ps);
    CHECK(reps.partitions.size() == choose2(n));
  }
  CHECK_THROWS_AS(representative_partitions(PointSet({{0, 0}, {1, 1}, {2, 2}})),
                  std::invalid_argument);
}

TEST_CASE("the pair map is exactly two-to-one") {
  const PointSet ps = random_general_position(7, 99);
  std::map<std::uint64_t, int> hits;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      if (i != j) ++hits[partition_from_pair(ps, i, j).mask];
    }
  }
  CHECK(hits.size() == choose2(7));
  for (const auto& [mask, count] : hits) CHECK(count == 2);
}

TEST_CASE("every member is realizable and every realizable split is a member") {
  for (std::uint64_t seed = 3; seed < 9; ++seed) {
    const int n = 5 + static_cast<int>(seed % 3);
    const PointSet ps = random_general_position(n, seed * 77);
    const RepresentativeSet reps = representative_partitions(ps);
    for (const Bipartition& b : reps.partitions) {
      CHECK(hulls_disjoint(ps, b));
    }
    // Enumerate all canonical bipartitions and compare against hull
    // disjointness, the definitional realizability test.
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; mask += 2) {
      const Bipartition b = make_bipartition(mask, n);
      CHECK(reps.contains(b) == hulls_disjoint(ps, b));
    }
  }
}

TEST_CASE("both sides of every representative partition are nonempty") {
  const PointSet ps = random_general_position(8, 1234);
  for (const Bipartition& b : representative_partitions(ps).partitions) {
    CHECK(b.side_a_indices().size() >= 1);
    CHECK(b.side_b_indices().size() >= 1);
    CHECK(b.side_a_indices().size() + b.side_b_indices().size() ==
          static_cast<std::size_t>(8));
  }
}

TEST_CASE("bipartition rendering") {
  const Bipartition b = make_bipartition(0b0101, 4);
  CHECK(b.to_string() == "{0, 2} | {1, 3}");
}
