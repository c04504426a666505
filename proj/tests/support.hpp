#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "stabkit/geometry.hpp"
#include "stabkit/graph.hpp"

namespace stabkit::test {

/// Independent line-sampling stabbing oracle: doubles all coordinates, then
/// tries every line through two distinct pairwise point sums (midpoints of
/// the doubled set), skipping lines that hit a doubled input point, and
/// counts proper segment crossings by raw sign tests. Shares no code with
/// the partition-based evaluator.
inline int line_sample_stab(const GeometricGraph& g) {
  const PointSet& ps = g.points();
  const int n = ps.size();
  struct XY {
    __int128 x, y;
  };
  std::vector<XY> doubled(n);
  for (int i = 0; i < n; ++i) {
    doubled[i] = {2 * static_cast<__int128>(ps[i].x),
                  2 * static_cast<__int128>(ps[i].y)};
  }
  std::vector<XY> mids;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      mids.push_back({doubled[i].x / 2 + doubled[j].x / 2,
                      doubled[i].y / 2 + doubled[j].y / 2});
    }
  }
  auto side = [](const XY& a, const XY& b, const XY& p) -> int {
    const __int128 v = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  };
  int best = 0;
  for (std::size_t a = 0; a < mids.size(); ++a) {
    for (std::size_t b = a + 1; b < mids.size(); ++b) {
      if (mids[a].x == mids[b].x && mids[a].y == mids[b].y) continue;
      bool through_point = false;
      for (int i = 0; i < n && !through_point; ++i) {
        through_point = side(mids[a], mids[b], doubled[i]) == 0;
      }
      if (through_point) continue;
      int crossings = 0;
      for (const Edge& e : g.edges()) {
        if (side(mids[a], mids[b], doubled[e.u]) !=
            side(mids[a], mids[b], doubled[e.v])) {
          ++crossings;
        }
      }
      best = std::max(best, crossings);
    }
  }
  return best;
}

/// Random graph over a fresh general-position set: each candidate edge is
/// kept with probability ~prob_percent/100.
inline GeometricGraph random_graph(int n, std::uint64_t seed,
                                   int prob_percent = 40) {
  PointSet ps = random_general_position(n, seed);
  std::uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(next() % 100) < prob_percent) {
        edges.emplace_back(u, v);
      }
    }
  }
  return GeometricGraph(std::move(ps), std::move(edges));
}

/// Random spanning forest: a random tree with each edge kept independently.
inline GeometricGraph random_forest(int n, std::uint64_t seed,
                                    int keep_percent = 70) {
  PointSet ps = random_general_position(n, seed);
  std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  EdgeList edges;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(next() % v);
    if (static_cast<int>(next() % 100) < keep_percent) {
      edges.emplace_back(u, v);
    }
  }
  return GeometricGraph(std::move(ps), std::move(edges));
}

}  // namespace stabkit::test
