#pragma once

#include <optional>
#include <string>

#include "stabkit/bipartition.hpp"
#include "stabkit/graph.hpp"

namespace stabkit {

/// Renders points as labeled disks and edges as segments. When a partition
/// is given, a separating line is overlaid, placed through the midpoint of
/// the closest cross-side point pair, perpendicular to it. Output is
/// byte-deterministic for equal inputs.
std::string render_svg(const GeometricGraph& g,
                       const std::optional<Bipartition>& overlay = {});

void write_svg_file(const std::string& path, const GeometricGraph& g,
                    const std::optional<Bipartition>& overlay = {});

}  // namespace stabkit
