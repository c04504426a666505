#include "stabkit/bipartition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace stabkit {

namespace {

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

std::vector<int> Bipartition::side_a_indices() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (side_a(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> Bipartition::side_b_indices() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (!side_a(i)) out.push_back(i);
  }
  return out;
}

std::string Bipartition::to_string() const {
  auto render = [](const std::vector<int>& side) {
    std::string s = "{";
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (i > 0) s += ", ";
      s += std::to_string(side[i]);
    }
    s += "}";
    return s;
  };
  return render(side_a_indices()) + " | " + render(side_b_indices());
}

Bipartition make_bipartition(std::uint64_t mask, int n) {
  if (n < 2 || n > 64) {
    throw std::invalid_argument("Bipartition supports 2 <= n <= 64");
  }
  mask &= full_mask(n);
  if (mask == 0 || mask == full_mask(n)) {
    throw std::invalid_argument("Bipartition requires both sides nonempty");
  }
  if (!(mask & 1u)) mask = ~mask & full_mask(n);
  return Bipartition{mask, n};
}

Bipartition partition_from_pair(const PointSet& ps, int i, int j) {
  const int n = ps.size();
  if (n < 2 || n > 64) {
    throw std::invalid_argument("partition_from_pair supports 2 <= n <= 64");
  }
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("partition_from_pair: bad pair");
  }
  std::uint64_t left = std::uint64_t{1} << i;  // i joins the left side
  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    if (orientation(ps[i], ps[j], ps[k]) == Orientation::kCounterClockwise) {
      left |= std::uint64_t{1} << k;
    }
  }
  return make_bipartition(left, n);
}

bool RepresentativeSet::contains(const Bipartition& b) const {
  for (const Bipartition& p : partitions) {
    if (p.mask == b.mask) return true;
  }
  return false;
}

RepresentativeSet representative_partitions(const PointSet& ps) {
  const int n = ps.size();
  if (n < 2 || n > 64) {
    throw std::invalid_argument(
        "representative_partitions supports 2 <= n <= 64");
  }
  if (!is_general_position(ps)) {
    throw std::invalid_argument(
        "representative_partitions requires general position");
  }
  RepresentativeSet out;
  out.n = n;
  std::unordered_set<std::uint64_t> seen;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Bipartition b = partition_from_pair(ps, i, j);
      if (seen.insert(b.mask).second) out.partitions.push_back(b);
    }
  }
  const std::size_t expected =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  if (out.partitions.size() != expected) {
    throw std::runtime_error(
        "representative_partitions: count != C(n,2), got " +
        std::to_string(out.partitions.size()) + " for n=" + std::to_string(n));
  }
  return out;
}

bool hulls_disjoint(const PointSet& ps, const Bipartition& b) {
  const std::vector<int> a = b.side_a_indices();
  const std::vector<int> c = b.side_b_indices();
  if (a.empty() || c.empty()) return false;
  // Cross-side segment crossings.
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        for (std::size_t l = k + 1; l < c.size(); ++l) {
          if (segments_properly_cross(ps[a[i]], ps[a[j]], ps[c[k]],
                                      ps[c[l]])) {
            return false;
          }
        }
      }
    }
  }
  // Containment: a point of one side inside a triangle of the other.
  auto inside_some_triangle = [&](const std::vector<int>& tri_side, int p) {
    for (std::size_t i = 0; i < tri_side.size(); ++i) {
      for (std::size_t j = i + 1; j < tri_side.size(); ++j) {
        for (std::size_t k = j + 1; k < tri_side.size(); ++k) {
          const Orientation o1 = orientation(ps[tri_side[i]], ps[tri_side[j]], ps[p]);
          const Orientation o2 = orientation(ps[tri_side[j]], ps[tri_side[k]], ps[p]);
          const Orientation o3 = orientation(ps[tri_side[k]], ps[tri_side[i]], ps[p]);
          if (o1 == o2 && o2 == o3 && o1 != Orientation::kCollinear) {
            return true;
          }
        }
      }
    }
    return false;
  };
  for (int p : c) {
    if (inside_some_triangle(a, p)) return false;
  }
  for (int p : a) {
    if (inside_some_triangle(c, p)) return false;
  }
  return true;
}

}  // namespace stabkit
