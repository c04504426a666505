#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stabkit/geometry.hpp"
#include "stabkit/graph.hpp"

namespace stabkit {

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  void add(std::string name, bool pass, std::string detail = "");
  bool all_pass() const;
  std::string first_failure() const;
};

/// Index roles inside the big point set of a tree counterexample.
/// Layout: [x1, y1, chain..., x2, y2, z2, x3, y3, z3, O] where chain is
/// z1 alone for the 9-point base and p_1..p_k for the generalized family.
struct TreeCexLayout {
  int x1 = 0, y1 = 0;
  std::vector<int> chain;
  int x2 = 0, y2 = 0, z2 = 0;
  int x3 = 0, y3 = 0, z3 = 0;
  int origin = 0;
};

/// Index roles inside the big point set of a triangulation counterexample.
/// chain1 runs top to bottom on the left, chain2 mirrored on the right,
/// q/q1 are the two added channel points (q nearer chain1).
struct TriCexLayout {
  int per_chain = 0;
  std::vector<int> chain1;
  std::vector<int> chain2;
  int q = 0;
  int q1 = 0;
};

/// Index roles inside the big point set of a matching counterexample.
/// partner[i] pairs each point with its doubled copy.
struct MatchingCexLayout {
  int k = 0;
  int x = 0, x_partner = 0;
  std::vector<int> hull;          // p_1..p_k
  std::vector<int> hull_partner;  // p'_1..p'_k
  std::vector<std::pair<int, int>> partner_pairs;
};

/// A generated counterexample: small is big with `removed` deleted (labels
/// shifted down consistently), and witness is the structure on big whose
/// stabbing number beats every structure on small.
struct ConstructionBundle {
  std::string kind;  // "tree9", "tree", "triangulation", "matching"
  PointSet small;
  PointSet big;
  std::vector<int> removed;
  GeometricGraph witness;
  ValidationReport validation;

  std::optional<TreeCexLayout> tree;
  std::optional<TriCexLayout> tri;
  std::optional<MatchingCexLayout> matching;
};

/// The 9-point pinwheel whose tree stabbing number drops from 4 to 3 when
/// the center is added. Throws if the baked coordinates fail validation.
ConstructionBundle gen_tree_cex_9();

/// The generalized n-point family (n >= 9): the first arm tip is replaced
/// by a flat convex chain of n-8 points hugging y1, and the opposite arm
/// tip is pushed outward. Throws on n < 9 or validation failure.
ConstructionBundle gen_tree_cex(int n);

/// Two facing convex chains of n points each (n even, >= 4); the big set
/// adds two channel points whose fans cap the stabbing number of a
/// triangulation, while every triangulation of the small set must cross the
/// middle at least 2n-1 times.
ConstructionBundle gen_tri_cex(int n);

/// k hull points plus an inner point, all doubled within a small radius
/// (k >= 5; the inner-point crossing condition is unsatisfiable for k <= 4).
ConstructionBundle gen_matching_cex(int k);

/// Exact per-condition validators; generators run these and refuse to emit
/// failing bundles. Callable on mutated bundles in tests.
ValidationReport validate_tree_cex(const ConstructionBundle& bundle);
ValidationReport validate_tri_cex(const ConstructionBundle& bundle);
ValidationReport validate_matching_cex(const ConstructionBundle& bundle);

/// Stabbing-number ceiling the triangulation witness must meet:
/// n + 4*ceil(log2 n) + 3.
int tri_cex_bound(int per_chain);

}  // namespace stabkit
