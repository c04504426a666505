#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "stabkit/bipartition.hpp"
#include "stabkit/geometry.hpp"

namespace stabkit {

/// An unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

/// A straight-line graph over a point set. Immutable by convention: the
/// reduction operations below return new graphs, so instances can be shared
/// freely across threads.
class GeometricGraph {
 public:
  GeometricGraph() = default;
  /// Edges are canonicalized and sorted. Throws on self-loops, duplicate
  /// edges, or out-of-range indices.
  GeometricGraph(PointSet points, EdgeList edges);

  const PointSet& points() const { return points_; }
  const EdgeList& edges() const { return edges_; }
  int size() const { return points_.size(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int degree(int v) const;
  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;

 private:
  PointSet points_;
  EdgeList edges_;
};

/// Number of edges with endpoints on opposite sides of b, i.e. the number
/// of witness-edge crossings of any line realizing b.
int cut_size(const GeometricGraph& g, const Bipartition& b);

/// Per-partition cut counts aligned with a RepresentativeSet; memoization
/// aid for search and reporting.
struct EdgeCutProfile {
  std::vector<int> counts;
  int max_count = 0;
  int argmax = -1;
};

EdgeCutProfile edge_cut_profile(const GeometricGraph& g,
                                const RepresentativeSet& reps);

/// Maximum cut over the representative set; 0 for edgeless graphs.
int stabbing_number(const GeometricGraph& g, const RepresentativeSet& reps);

/// Deletes the single edge at a degree-1 vertex. Throws if deg(v) != 1.
GeometricGraph remove_degree1(const GeometricGraph& g, int v);

/// Replaces the two edges at a degree-2 vertex by the segment joining its
/// neighbors. Throws if deg(v) != 2 or if that segment is already an edge.
GeometricGraph contract_degree2(const GeometricGraph& g, int v);

/// True iff the edge set is acyclic.
bool is_forest(const GeometricGraph& g);
bool is_spanning_tree(const GeometricGraph& g);

/// Keeps only edges with both endpoints in `keep`.
GeometricGraph induced_subgraph(const GeometricGraph& g,
                                const std::vector<int>& keep);

/// Iteratively removes degree-1 vertices and contracts degree-2 vertices,
/// never touching the three special vertices, until every non-special
/// vertex has degree >= 3 or is gone. Vertices of degree 0 count as removed
/// unless special. Work queue is processed in ascending index order, so the
/// result is deterministic. Throws if g is not a forest or the specials are
/// not three distinct vertices.
GeometricGraph reduce_with_specials(const GeometricGraph& g,
                                    const std::array<int, 3>& specials);

/// Live vertices of a reduction result: the specials plus every vertex of
/// positive degree.
std::vector<int> live_vertices(const GeometricGraph& g,
                               const std::array<int, 3>& specials);

/// Connected components among the given vertices (edges outside are
/// ignored).
int component_count(const GeometricGraph& g, const std::vector<int>& among);

}  // namespace stabkit
