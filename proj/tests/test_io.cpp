#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "stabkit/constructions.hpp"
#include "stabkit/io.hpp"
#include "stabkit/search.hpp"
#include "stabkit/svg.hpp"

using namespace stabkit;
using nlohmann::json;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("point set JSON round trip") {
  const PointSet ps({{0, 0}, {-5, 7}, {123456, -9}});
  const json j = points_to_json(ps);
  CHECK(points_from_json(j) == ps);

  const std::string path = temp_path("stabkit_points_rt.json");
  write_json_file(path, j);
  CHECK(read_points_file(path) == ps);
  std::remove(path.c_str());
}

TEST_CASE("graph JSON round trip") {
  const GeometricGraph g(PointSet({{0, 0}, {10, 0}, {5, 9}}),
                         {{0, 1}, {1, 2}});
  const json j = graph_to_json(g);
  const GeometricGraph back = graph_from_json(j);
  CHECK(back.points() == g.points());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("parse errors carry diagnostics") {
  const std::string path = temp_path("stabkit_bad.json");
  {
    std::ofstream out(path);
    out << "{\"points\": [[1, 2], [3]]}";
  }
  CHECK_THROWS_WITH_AS(read_points_file(path),
                       doctest::Contains("point 1"), std::runtime_error);
  {
    std::ofstream out(path);
    out << "{\"points\": [[1, 2]], \"edges\": [[0, 5]]}";
  }
  CHECK_THROWS_AS(read_graph_file(path), std::runtime_error);
  {
    std::ofstream out(path);
    out << "not json";
  }
  CHECK_THROWS_WITH_AS(read_points_file(path), doctest::Contains("invalid"),
                       std::runtime_error);
  std::remove(path.c_str());
  CHECK_THROWS_WITH_AS(read_points_file("/nonexistent/nope.json"),
                       doctest::Contains("cannot open"), std::runtime_error);
}

TEST_CASE("search reports carry the documented fields") {
  const PointSet ps = random_general_position(5, 77);
  const SearchOutcome outcome = min_stab_tree(ps);
  const json j = search_outcome_to_json(outcome, "tree", "exhaustive");
  CHECK(j["schema"] == 1);
  CHECK(j["optimum"] == outcome.optimum);
  CHECK(j["explored"] == outcome.explored);
  CHECK(j.contains("witness_edges"));
  CHECK(j.contains("seconds"));
  // Reports re-parse to the same verdicts.
  const json reparsed = json::parse(j.dump());
  CHECK(reparsed == j);
}

TEST_CASE("bundle writer produces the four files") {
  const std::string dir = temp_path("stabkit_bundle_test");
  write_bundle(dir, gen_matching_cex(5));
  for (const char* name :
       {"small.json", "big.json", "witness.json", "validation.json"}) {
    CHECK(std::filesystem::exists(std::filesystem::path(dir) / name));
  }
  const json v = json::parse(
      std::ifstream((std::filesystem::path(dir) / "validation.json")));
  CHECK(v["all_pass"] == true);
  CHECK(v["schema"] == 1);
  const PointSet small =
      read_points_file((std::filesystem::path(dir) / "small.json").string());
  CHECK(small.size() == 10);
  std::filesystem::remove_all(dir);
}

TEST_CASE("content hash is stable and input sensitive") {
  const PointSet ps({{1, 2}, {3, 4}});
  const std::string h = content_hash(points_to_json(ps));
  CHECK(h == content_hash(points_to_json(ps)));
  CHECK(h != content_hash(points_to_json(PointSet({{1, 2}, {3, 5}}))));
  CHECK(h.size() == 16);
}

TEST_CASE("svg output is deterministic with the expected element counts") {
  const ConstructionBundle b = gen_tree_cex_9();
  const std::string svg1 = render_svg(b.witness);
  const std::string svg2 = render_svg(b.witness);
  CHECK(svg1 == svg2);

  auto count_occurrences = [](const std::string& hay, const std::string& part) {
    int count = 0;
    for (std::size_t pos = hay.find(part); pos != std::string::npos;
         pos = hay.find(part, pos + part.size())) {
      ++count;
    }
    return count;
  };
  CHECK(count_occurrences(svg1, "<circle") == 10);
  CHECK(count_occurrences(svg1, "<line") == 9);
  CHECK(count_occurrences(svg1, "<text") == 10);

  const GeometricGraph bare(PointSet({{0, 0}, {9, 1}, {4, 7}}), {});
  const std::string svg3 = render_svg(bare);
  CHECK(count_occurrences(svg3, "<circle") == 3);
  CHECK(count_occurrences(svg3, "<line") == 0);
}

TEST_CASE("svg overlay draws one separating line") {
  const PointSet ps({{0, 0}, {100, 0}, {50, 90}});
  const GeometricGraph g(ps, {{0, 1}});
  const RepresentativeSet reps = representative_partitions(ps);
  const std::string svg = render_svg(g, reps[0]);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
}
