#include "stabkit/io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stabkit {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("invalid JSON in '" + path + "': " + e.what());
  }
}

std::vector<Point> parse_point_array(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw std::runtime_error(where + ": \"points\" must be an array");
  }
  std::vector<Point> points;
  points.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& entry = j[i];
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw std::runtime_error(where + ": point " + std::to_string(i) +
                               " must be an [x, y] integer pair");
    }
    try {
      points.emplace_back(entry[0].get<std::int64_t>(),
                          entry[1].get<std::int64_t>());
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(where + ": point " + std::to_string(i) + ": " +
                               e.what());
    }
  }
  return points;
}

}  // namespace

json points_to_json(const PointSet& ps) {
  json pts = json::array();
  for (const Point& p : ps.points()) pts.push_back({p.x, p.y});
  return json{{"points", pts}};
}

PointSet points_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points")) {
    throw std::runtime_error("point file: missing \"points\" field");
  }
  return PointSet(parse_point_array(j["points"], "point file"));
}

json graph_to_json(const GeometricGraph& g) {
  json out = points_to_json(g.points());
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  out["edges"] = edges;
  return out;
}

GeometricGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("edges")) {
    throw std::runtime_error("graph file: needs \"points\" and \"edges\"");
  }
  PointSet ps(parse_point_array(j["points"], "graph file"));
  if (!j["edges"].is_array()) {
    throw std::runtime_error("graph file: \"edges\" must be an array");
  }
  EdgeList edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const json& entry = j["edges"][i];
    if (!entry.is_array() || entry.size() != 2 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw std::runtime_error("graph file: edge " + std::to_string(i) +
                               " must be a [u, v] index pair");
    }
    edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  try {
    return GeometricGraph(std::move(ps), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("graph file: ") + e.what());
  }
}

json search_outcome_to_json(const SearchOutcome& outcome,
                            const std::string& structure_class,
                            const std::string& mode) {
  json witnesses = json::array();
  for (const EdgeList& w : outcome.witnesses) {
    json edges = json::array();
    for (const Edge& e : w) edges.push_back({e.u, e.v});
    witnesses.push_back(edges);
  }
  return json{{"schema", 1},
              {"class", structure_class},
              {"mode", mode},
              {"optimum", outcome.optimum},
              {"witness_edges",
               outcome.witnesses.empty() ? json::array() : witnesses[0]},
              {"witnesses", witnesses},
              {"explored", outcome.explored},
              {"seconds", outcome.seconds}};
}

json validation_to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const ValidationCheck& c : report.checks) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  return json{{"schema", 1}, {"all_pass", report.all_pass()}, {"checks", checks}};
}

PointSet read_points_file(const std::string& path) {
  return points_from_json(load_json(path));
}

GeometricGraph read_graph_file(const std::string& path) {
  return graph_from_json(load_json(path));
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << j.dump(2) << "\n";
}

void write_bundle(const std::string& dir, const ConstructionBundle& bundle) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  write_json_file((base / "small.json").string(), points_to_json(bundle.small));
  write_json_file((base / "big.json").string(), points_to_json(bundle.big));
  write_json_file((base / "witness.json").string(),
                  graph_to_json(bundle.witness));
  json validation = validation_to_json(bundle.validation);
  validation["kind"] = bundle.kind;
  validation["removed"] = bundle.removed;
  write_json_file((base / "validation.json").string(), validation);
}

std::string content_hash(const json& j) {
  const std::string dump = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace stabkit
