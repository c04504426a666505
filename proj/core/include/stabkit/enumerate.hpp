#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stabkit/geometry.hpp"
#include "stabkit/graph.hpp"

namespace stabkit {

/// Exhaustive enumerators for the structure classes the search minimizes
/// over. All enumeration orders are fixed (lexicographic), so visit counts
/// and sequences are reproducible. Enumerators are single-consumer streams:
/// the callback is invoked once per structure with a scratch edge list that
/// must be copied if kept.

using EdgeVisitor = std::function<void(const EdgeList&)>;

/// Number of labeled spanning trees of K_n (Cayley: n^(n-2)).
std::uint64_t spanning_tree_count(int n);

/// Decodes the length n-2 Pruefer sequence into the unique labeled tree.
EdgeList prufer_decode(const std::vector<int>& seq, int n);

/// Yields every labeled spanning tree of K_n exactly once, in lexicographic
/// Pruefer order. Requires 3 <= n <= 64.
void spanning_trees(int n, const EdgeVisitor& visit);

/// Yields every undirected Hamiltonian vertex ordering exactly once
/// (n!/2 paths, lexicographic by the orientation with first < last).
/// Requires n >= 2.
void hamiltonian_paths(int n, const EdgeVisitor& visit);

/// Yields every perfect matching exactly once ((n-1)!! matchings,
/// lexicographic lowest-unmatched-first). Throws on odd n; requires n >= 2.
void perfect_matchings(int n, const EdgeVisitor& visit);

/// Yields every triangulation of the point set exactly once, as a maximal
/// set of pairwise non-crossing segments, grown by backtracking over the
/// lexicographically sorted candidate edge list. Requires general position.
/// Exhaustive enumeration is intended for n <= ~12.
void triangulations(const PointSet& ps, const EdgeVisitor& visit);

/// Expected edge count of any triangulation: 3n - 3 - h, with h the number
/// of convex hull vertices.
int triangulation_edge_count(const PointSet& ps);

/// Number of convex hull vertices (general position assumed).
int hull_size(const PointSet& ps);

}  // namespace stabkit
