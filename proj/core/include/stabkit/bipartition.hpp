#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabkit/geometry.hpp"

namespace stabkit {

/// A realizable 2-coloring of a point set, standing in for the equivalence
/// class of all lines inducing that split. Canonical form keeps point 0 on
/// side A (bit set), so equal masks mean equal partitions.
///
/// The exhaustive machinery is limited to n <= 64 so masks fit in one word.
struct Bipartition {
  std::uint64_t mask = 0;
  int n = 0;

  bool side_a(int i) const { return (mask >> i) & 1u; }
  /// True iff the partition separates i from j.
  bool separates(int i, int j) const { return side_a(i) != side_a(j); }

  /// Indices of side A (ascending); side B is the complement.
  std::vector<int> side_a_indices() const;
  std::vector<int> side_b_indices() const;

  /// "{a0, a1, ...} | {b0, ...}" with ascending indices, for reports.
  std::string to_string() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Canonicalizes an arbitrary nonempty, non-full mask: flips it so that
/// bit 0 is set.
Bipartition make_bipartition(std::uint64_t mask, int n);

/// The partition induced by the directed line through points i -> j:
/// side of i gains the points to its left, side of j the points to its
/// right, then the result is canonicalized. Throws on i == j or n > 64.
Bipartition partition_from_pair(const PointSet& ps, int i, int j);

/// All partitions induced by lines, one representative per line class.
struct RepresentativeSet {
  std::vector<Bipartition> partitions;
  int n = 0;

  int size() const { return static_cast<int>(partitions.size()); }
  const Bipartition& operator[](int i) const { return partitions[i]; }
  bool contains(const Bipartition& b) const;
};

/// Enumerates partition_from_pair over all ordered pairs and deduplicates.
/// For an n-point set in general position the result has exactly C(n,2)
/// members; any other count throws (internal invariant failure). Requires
/// general position and 2 <= n <= 64.
RepresentativeSet representative_partitions(const PointSet& ps);

/// Definitional realizability test, independent of partition_from_pair:
/// the two sides' convex hulls are disjoint (no pair of cross-side segments
/// properly crosses, and neither side has a point inside the other side's
/// hull). Intended for tests and validators; O(n^4).
bool hulls_disjoint(const PointSet& ps, const Bipartition& b);

}  // namespace stabkit
