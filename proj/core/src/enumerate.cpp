#include "stabkit/enumerate.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <stdexcept>

namespace stabkit {

namespace {

constexpr int kMaxSegments = 128;  // enough for C(16,2) = 120 candidates
using SegmentBits = std::bitset<kMaxSegments>;

}  // namespace

std::uint64_t spanning_tree_count(int n) {
  if (n < 1) throw std::invalid_argument("spanning_tree_count: n < 1");
  if (n <= 2) return 1;
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

EdgeList prufer_decode(const std::vector<int>& seq, int n) {
  if (static_cast<int>(seq.size()) != n - 2 || n < 2) {
    throw std::invalid_argument("prufer_decode: sequence length must be n-2");
  }
  EdgeList edges;
  edges.reserve(n - 1);
  std::vector<int> degree(n, 1);
  for (int c : seq) {
    if (c < 0 || c >= n) throw std::invalid_argument("prufer_decode: label");
    ++degree[c];
  }
  // Classic linear decode: `ptr` scans for the smallest leaf not yet used,
  // `leaf` tracks the current leaf which may drop below `ptr`.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int c : seq) {
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (ptr < n && degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

void spanning_trees(int n, const EdgeVisitor& visit) {
  if (n < 3 || n > 64) {
    throw std::invalid_argument("spanning_trees requires 3 <= n <= 64");
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    visit(prufer_decode(seq, n));
    // Mixed-radix odometer, base n, most significant digit first.
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) {
      seq[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++seq[pos];
  }
}

void hamiltonian_paths(int n, const EdgeVisitor& visit) {
  if (n < 2) throw std::invalid_argument("hamiltonian_paths: n < 2");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList edges(n - 1);
  do {
    if (perm.front() > perm.back()) continue;  // one orientation per path
    for (int i = 0; i + 1 < n; ++i) edges[i] = Edge(perm[i], perm[i + 1]);
    visit(edges);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace {

void matchings_rec(int n, std::vector<bool>& used, EdgeList& acc,
                   const EdgeVisitor& visit) {
  int lo = 0;
  while (lo < n && used[lo]) ++lo;
  if (lo == n) {
    visit(acc);
    return;
  }
  used[lo] = true;
  for (int j = lo + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    acc.emplace_back(lo, j);
    matchings_rec(n, used, acc, visit);
    acc.pop_back();
    used[j] = false;
  }
  used[lo] = false;
}

}  // namespace

void perfect_matchings(int n, const EdgeVisitor& visit) {
  if (n < 2) throw std::invalid_argument("perfect_matchings: n < 2");
  if (n % 2 != 0) {
    throw std::invalid_argument("perfect_matchings: n must be even");
  }
  std::vector<bool> used(n, false);
  EdgeList acc;
  acc.reserve(n / 2);
  matchings_rec(n, used, acc, visit);
}

namespace {

struct TriangulationSearch {
  const std::vector<Edge>* candidates = nullptr;
  const std::vector<SegmentBits>* cross = nullptr;
  int m = 0;
  const EdgeVisitor* visit = nullptr;
  EdgeList chosen;

  // `pending` holds excluded edges that are still compatible with the chosen
  // set; each must eventually be crossed by a chosen edge or the leaf is not
  // maximal and gets discarded.
  void rec(int idx, const SegmentBits& forbidden, const SegmentBits& pending) {
    if (idx == m) {
      if (pending.none()) (*visit)(chosen);
      return;
    }
    if (forbidden[idx]) {
      rec(idx + 1, forbidden, pending);
      return;
    }
    const SegmentBits& cx = (*cross)[idx];
    chosen.push_back((*candidates)[idx]);
    rec(idx + 1, forbidden | cx, pending & ~cx);
    chosen.pop_back();
    // Excluding idx only makes sense if a later compatible edge can still
    // cross it; otherwise every completion would be non-maximal.
    SegmentBits killers = cx & ~forbidden;
    for (int k = 0; k <= idx; ++k) killers.reset(k);
    if (killers.any()) {
      SegmentBits p = pending;
      p.set(idx);
      rec(idx + 1, forbidden, p);
    }
  }
};

}  // namespace

void triangulations(const PointSet& ps, const EdgeVisitor& visit) {
  const int n = ps.size();
  if (n < 2) {
    throw std::invalid_argument("triangulations: need at least 2 points");
  }
  if (!is_general_position(ps)) {
    throw std::invalid_argument("triangulations requires general position");
  }
  std::vector<Edge> candidates;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  }
  const int m = static_cast<int>(candidates.size());
  if (m > kMaxSegments) {
    throw std::invalid_argument("triangulations: point set too large");
  }
  std::vector<SegmentBits> cross(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (segments_properly_cross(ps[candidates[i].u], ps[candidates[i].v],
                                  ps[candidates[j].u], ps[candidates[j].v])) {
        cross[i].set(j);
        cross[j].set(i);
      }
    }
  }
  TriangulationSearch search;
  search.candidates = &candidates;
  search.cross = &cross;
  search.m = m;
  search.visit = &visit;
  search.chosen.reserve(m);
  search.rec(0, SegmentBits{}, SegmentBits{});
}

int hull_size(const PointSet& ps) {
  const int n = ps.size();
  if (n <= 2) return n;
  int h = 0;
  // A point is a hull vertex iff some directed line through it and another
  // point has everything on one side.
  for (int i = 0; i < n; ++i) {
    bool on_hull = false;
    for (int j = 0; j < n && !on_hull; ++j) {
      if (j == i) continue;
      bool all_left = true;
      bool all_right = true;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Orientation o = orientation(ps[i], ps[j], ps[k]);
        if (o != Orientation::kCounterClockwise) all_left = false;
        if (o != Orientation::kClockwise) all_right = false;
      }
      on_hull = all_left || all_right;
    }
    if (on_hull) ++h;
  }
  return h;
}

int triangulation_edge_count(const PointSet& ps) {
  return 3 * ps.size() - 3 - hull_size(ps);
}

}  // namespace stabkit
