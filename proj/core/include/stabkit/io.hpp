#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "stabkit/constructions.hpp"
#include "stabkit/geometry.hpp"
#include "stabkit/graph.hpp"
#include "stabkit/search.hpp"

namespace stabkit {

/// File formats:
///   points: {"points": [[x, y], ...]}           (index = label)
///   graph:  {"points": [...], "edges": [[u, v], ...]}
/// Parse failures throw std::runtime_error with file/field diagnostics.

nlohmann::json points_to_json(const PointSet& ps);
PointSet points_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const GeometricGraph& g);
GeometricGraph graph_from_json(const nlohmann::json& j);

nlohmann::json search_outcome_to_json(const SearchOutcome& outcome,
                                      const std::string& structure_class,
                                      const std::string& mode);

nlohmann::json validation_to_json(const ValidationReport& report);

PointSet read_points_file(const std::string& path);
GeometricGraph read_graph_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// Writes small.json, big.json, witness.json and validation.json into dir.
void write_bundle(const std::string& dir, const ConstructionBundle& bundle);

/// FNV-1a hash of a canonical dump, for report provenance.
std::string content_hash(const nlohmann::json& j);

}  // namespace stabkit
