#include "doctest.h"

#include <stdexcept>

#include "stabkit/enumerate.hpp"
#include "stabkit/search.hpp"
#include "support.hpp"

using namespace stabkit;

namespace {

SearchOptions bnb_options() {
  SearchOptions opt;
  opt.mode = SearchMode::kBranchAndBound;
  return opt;
}

PointSet convex5() {
  return PointSet({{0, 100000},
                   {-95106, 30902},
                   {-58779, -80902},
                   {58779, -80902},
                   {95106, 30902}});
}

}  // namespace

TEST_CASE("three points: every spanning tree is a path with stabbing 2") {
  const PointSet ps = random_general_position(3, 8);
  const SearchOutcome r = min_stab_tree(ps);
  CHECK(r.optimum == 2);
  CHECK(r.explored == 3);
  CHECK(r.witnesses.size() == 3);  // all trees are optimal here
}

TEST_CASE("two points: the single edge") {
  const PointSet ps = random_general_position(2, 9);
  CHECK(min_stab_tree(ps).optimum == 1);
  CHECK(min_stab_path(ps).optimum == 1);
  CHECK(min_stab_matching(ps).optimum == 1);
}

TEST_CASE("witnesses evaluate to the reported optimum") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const PointSet ps = random_general_position(6, seed * 3 + 2);
    const RepresentativeSet reps = representative_partitions(ps);
    const SearchOutcome r = min_stab_tree(ps);
    REQUIRE(!r.witnesses.empty());
    for (const EdgeList& w : r.witnesses) {
      GeometricGraph g(ps, w);
      CHECK(is_spanning_tree(g));
      CHECK(stabbing_number(g, reps) == r.optimum);
    }
  }
}

TEST_CASE("exhaustive counters equal the closed forms") {
  const PointSet ps = random_general_position(7, 4);
  CHECK(min_stab_tree(ps).explored == 16807);  // 7^5
  CHECK(min_stab_path(ps).explored == 2520);   // 7!/2
  const PointSet ps6 = random_general_position(6, 4);
  CHECK(min_stab_matching(ps6).explored == 15);  // 5!!
}

TEST_CASE("path search on convex position finds the hull walk") {
  // Any line meets a convex polyline at most twice, so the hull-order path
  // is optimal; the spec's upper bound n-1 holds with room.
  const SearchOutcome r = min_stab_path(convex5());
  CHECK(r.optimum == 2);
  CHECK(r.optimum <= 4);
  CHECK(r.explored == 60);
}

TEST_CASE("paths are trees: tree optimum never exceeds path optimum") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const PointSet ps = random_general_position(n, seed + 40);
    CHECK(min_stab_tree(ps).optimum <= min_stab_path(ps).optimum);
  }
}

TEST_CASE("matching search rejects odd sets") {
  CHECK_THROWS_AS(min_stab_matching(random_general_position(5, 2)),
                  std::invalid_argument);
}

TEST_CASE("branch-and-bound equals exhaustive search") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);  // 4..8
    const PointSet ps = random_general_position(n, seed * 17 + 6);
    const SearchOutcome ex = min_stab_tree(ps);
    const SearchOutcome bb = min_stab_tree(ps, bnb_options());
    CHECK(ex.optimum == bb.optimum);
    CHECK(ex.explored == spanning_tree_count(n));
  }
}

TEST_CASE("bnb path and matching agree with exhaustive") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const PointSet ps = random_general_position(6, seed * 5 + 11);
    CHECK(min_stab_path(ps, bnb_options()).optimum ==
          min_stab_path(ps).optimum);
    CHECK(min_stab_matching(ps, bnb_options()).optimum ==
          min_stab_matching(ps).optimum);
  }
}

TEST_CASE("threaded exhaustive tree search is schedule independent") {
  const PointSet ps = random_general_position(7, 123);
  SearchOptions two;
  two.threads = 2;
  const SearchOutcome a = min_stab_tree(ps);
  const SearchOutcome b = min_stab_tree(ps, two);
  CHECK(a.optimum == b.optimum);
  CHECK(a.explored == b.explored);
}

TEST_CASE("triangulation search on convex quads picks the better diagonal") {
  // Two triangulations; both have the same stabbing number by symmetry.
  const PointSet square({{0, 0}, {100, 0}, {100, 100}, {0, 100}});
  const SearchOutcome r = min_stab_triangulation(square);
  CHECK(r.explored == 2);
  CHECK(r.optimum == 3);  // a line can cross two sides plus the diagonal
  const SearchOutcome rb = min_stab_triangulation(square, bnb_options());
  CHECK(rb.optimum == r.optimum);
}

TEST_CASE("witness lists are canonical and capped") {
  SearchOptions opt;
  opt.witness_cap = 2;
  const PointSet ps = random_general_position(5, 31);
  const SearchOutcome r = min_stab_tree(ps, opt);
  CHECK(r.witnesses.size() <= 2);
  for (const EdgeList& w : r.witnesses) {
    CHECK(std::is_sorted(w.begin(), w.end()));
  }
  CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
}
