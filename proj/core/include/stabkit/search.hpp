#pragma once

#include <cstdint>
#include <vector>

#include "stabkit/bipartition.hpp"
#include "stabkit/geometry.hpp"
#include "stabkit/graph.hpp"

namespace stabkit {

enum class SearchMode {
  kExhaustive,
  kBranchAndBound,
};

struct SearchOptions {
  SearchMode mode = SearchMode::kExhaustive;
  /// Worker threads for the exhaustive tree search; the Pruefer space is
  /// split into contiguous lexicographic blocks dispatched to workers, with
  /// a shared read-only representative set and an atomically merged
  /// incumbent. The reported optimum and explored count are
  /// schedule-independent. Other searches run single-threaded.
  int threads = 1;
  /// Maximum number of optimal structures kept. Witness edge lists are
  /// sorted and the witness list is sorted before reporting.
  int witness_cap = 16;
};

struct SearchOutcome {
  int optimum = 0;
  std::vector<EdgeList> witnesses;
  /// Exhaustive mode: structures enumerated (equals the closed-form count:
  /// n^(n-2) trees, n!/2 paths, (n-1)!! matchings, the triangulation count).
  /// Branch-and-bound mode: search nodes visited, except for
  /// triangulations, where both modes enumerate every structure.
  std::uint64_t explored = 0;
  double seconds = 0.0;
};

/// Minimum stabbing number over all spanning trees of P.
SearchOutcome min_stab_tree(const PointSet& ps, const SearchOptions& opt = {});

/// Minimum stabbing number over all Hamiltonian paths of P.
SearchOutcome min_stab_path(const PointSet& ps, const SearchOptions& opt = {});

/// Minimum stabbing number over all perfect matchings of P (|P| even).
SearchOutcome min_stab_matching(const PointSet& ps,
                                const SearchOptions& opt = {});

/// Minimum stabbing number over all triangulations of P.
SearchOutcome min_stab_triangulation(const PointSet& ps,
                                     const SearchOptions& opt = {});

}  // namespace stabkit
