#include "stabkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "stabkit/enumerate.hpp"

namespace stabkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// For every candidate edge of K_n, the representative partitions that
/// separate its endpoints. Edge ids follow the lexicographic (u, v) order.
struct CutTable {
  int n = 0;
  int partitions = 0;
  std::vector<Edge> candidates;
  std::vector<std::vector<std::uint16_t>> per_edge;

  CutTable(const PointSet& ps, const RepresentativeSet& reps)
      : n(ps.size()), partitions(reps.size()) {
    candidates.reserve(n * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
    }
    per_edge.resize(candidates.size());
    for (std::size_t e = 0; e < candidates.size(); ++e) {
      for (int h = 0; h < reps.size(); ++h) {
        if (reps[h].separates(candidates[e].u, candidates[e].v)) {
          per_edge[e].push_back(static_cast<std::uint16_t>(h));
        }
      }
    }
  }

  int edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
  }
};

void canonicalize_witnesses(std::vector<EdgeList>& witnesses, int cap) {
  for (EdgeList& w : witnesses) std::sort(w.begin(), w.end());
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()),
                  witnesses.end());
  if (static_cast<int>(witnesses.size()) > cap) witnesses.resize(cap);
}

/// Evaluates one structure given as edge ids. Returns its stabbing number,
/// or an overestimate-free early exit: values strictly greater than `cutoff`
/// may be reported as any value > cutoff.
int evaluate_structure(const CutTable& ct, const int* edge_ids, int count,
                       std::uint8_t* scratch, int cutoff) {
  std::memset(scratch, 0, static_cast<std::size_t>(ct.partitions));
  int maxc = 0;
  for (int i = 0; i < count; ++i) {
    for (std::uint16_t h : ct.per_edge[edge_ids[i]]) {
      const int c = ++scratch[h];
      if (c > maxc) maxc = c;
    }
    if (maxc > cutoff) return maxc;
  }
  return maxc;
}

struct LocalBest {
  int best = std::numeric_limits<int>::max();
  std::vector<EdgeList> witnesses;
  std::uint64_t explored = 0;

  void offer(int value, const EdgeList& structure, int cap) {
    if (value < best) {
      best = value;
      witnesses.clear();
      witnesses.push_back(structure);
    } else if (value == best &&
               static_cast<int>(witnesses.size()) < cap) {
      witnesses.push_back(structure);
    }
  }
};

// ---------------------------------------------------------------------------
// Exhaustive spanning-tree search over the Pruefer space.
// ---------------------------------------------------------------------------

/// Buffer-reusing Pruefer decode (same algorithm as prufer_decode).
void decode_into(const int* seq, int n, int* degree, Edge* out) {
  for (int i = 0; i < n; ++i) degree[i] = 1;
  for (int i = 0; i < n - 2; ++i) ++degree[seq[i]];
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    const int c = seq[i];
    out[i] = Edge(leaf, c);
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (ptr < n && degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  out[n - 2] = Edge(leaf, n - 1);
}

struct TreeBlockWorker {
  const CutTable* ct = nullptr;
  int n = 0;
  int prefix_len = 0;
  std::atomic<std::uint64_t>* next_block = nullptr;
  std::uint64_t block_count = 0;
  std::atomic<int>* incumbent = nullptr;
  int cap = 16;
  LocalBest local;

  void run() {
    const int tail_len = n - 2 - prefix_len;
    std::vector<int> seq(n - 2, 0);
    std::vector<int> degree(n);
    std::vector<Edge> edges(n - 1);
    std::vector<int> ids(n - 1);
    std::vector<std::uint8_t> scratch(ct->partitions);
    EdgeList edge_copy(n - 1);

    for (std::uint64_t block = next_block->fetch_add(1);
         block < block_count; block = next_block->fetch_add(1)) {
      std::uint64_t b = block;
      for (int d = prefix_len - 1; d >= 0; --d) {
        seq[d] = static_cast<int>(b % n);
        b /= n;
      }
      for (int d = 0; d < tail_len; ++d) seq[prefix_len + d] = 0;
      while (true) {
        decode_into(seq.data(), n, degree.data(), edges.data());
        for (int i = 0; i < n - 1; ++i) {
          ids[i] = ct->edge_id(edges[i].u, edges[i].v);
        }
        const int cutoff =
            std::min(local.best, incumbent->load(std::memory_order_relaxed));
        const int stab = evaluate_structure(*ct, ids.data(), n - 1,
                                            scratch.data(), cutoff);
        ++local.explored;
        if (stab <= cutoff) {
          edge_copy.assign(edges.begin(), edges.end());
          local.offer(stab, edge_copy, cap);
          if (stab < incumbent->load(std::memory_order_relaxed)) {
            int seen = incumbent->load(std::memory_order_relaxed);
            while (stab < seen && !incumbent->compare_exchange_weak(
                                      seen, stab, std::memory_order_relaxed)) {
            }
          }
        }
        int pos = n - 3;
        while (pos >= prefix_len && seq[pos] == n - 1) {
          seq[pos] = 0;
          --pos;
        }
        if (pos < prefix_len) break;
        ++seq[pos];
      }
    }
  }
};

SearchOutcome exhaustive_tree_search(const PointSet& ps,
                                     const RepresentativeSet& reps,
                                     const SearchOptions& opt) {
  const auto start = Clock::now();
  const int n = ps.size();
  const CutTable ct(ps, reps);

  const int prefix_len = std::min(2, n - 2);
  std::uint64_t block_count = 1;
  for (int i = 0; i < prefix_len; ++i) block_count *= n;

  std::atomic<std::uint64_t> next_block{0};
  std::atomic<int> incumbent{std::numeric_limits<int>::max()};
  const int threads =
      std::max(1, std::min<int>(opt.threads,
                                static_cast<int>(block_count)));

  std::vector<TreeBlockWorker> workers(threads);
  for (TreeBlockWorker& w : workers) {
    w.ct = &ct;
    w.n = n;
    w.prefix_len = prefix_len;
    w.next_block = &next_block;
    w.block_count = block_count;
    w.incumbent = &incumbent;
    w.cap = opt.witness_cap;
  }
  if (threads == 1) {
    workers[0].run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (TreeBlockWorker& w : workers) {
      pool.emplace_back([&w] { w.run(); });
    }
    for (std::thread& t : pool) t.join();
  }

  SearchOutcome out;
  out.optimum = std::numeric_limits<int>::max();
  for (const TreeBlockWorker& w : workers) {
    out.explored += w.local.explored;
    out.optimum = std::min(out.optimum, w.local.best);
  }
  for (const TreeBlockWorker& w : workers) {
    if (w.local.best == out.optimum) {
      out.witnesses.insert(out.witnesses.end(), w.local.witnesses.begin(),
                           w.local.witnesses.end());
    }
  }
  canonicalize_witnesses(out.witnesses, opt.witness_cap);
  out.seconds = seconds_since(start);
  return out;
}

// ---------------------------------------------------------------------------
// Branch-and-bound spanning-tree search: edges are considered in the fixed
// lexicographic order; per-partition running cut counts prune any branch
// whose current maximum already reaches the incumbent.
// ---------------------------------------------------------------------------

struct TreeBnb {
  const CutTable* ct = nullptr;
  int n = 0;
  int m = 0;
  int cap = 16;
  std::vector<int> parent;
  std::vector<int> counts;
  EdgeList current;
  int cur_max = 0;
  int incumbent = std::numeric_limits<int>::max();
  std::vector<EdgeList> witnesses;
  std::uint64_t nodes = 0;

  int find(int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  void rec(int idx) {
    ++nodes;
    if (static_cast<int>(current.size()) == n - 1) {
      if (cur_max < incumbent) {
        incumbent = cur_max;
        witnesses.clear();
        witnesses.push_back(current);
      } else if (cur_max == incumbent &&
                 static_cast<int>(witnesses.size()) < cap) {
        witnesses.push_back(current);
      }
      return;
    }
    if (idx == m) return;
    if (m - idx < n - 1 - static_cast<int>(current.size())) return;

    const Edge& e = ct->candidates[idx];
    const int ru = find(e.u);
    const int rv = find(e.v);
    if (ru != rv) {
      const int saved_max = cur_max;
      for (std::uint16_t h : ct->per_edge[idx]) {
        const int c = ++counts[h];
        if (c > cur_max) cur_max = c;
      }
      if (cur_max < incumbent) {
        parent[ru] = rv;
        current.push_back(e);
        rec(idx + 1);
        current.pop_back();
        parent[ru] = ru;
      }
      for (std::uint16_t h : ct->per_edge[idx]) --counts[h];
      cur_max = saved_max;
    }
    rec(idx + 1);
  }
};

SearchOutcome bnb_tree_search(const PointSet& ps,
                              const RepresentativeSet& reps,
                              const SearchOptions& opt) {
  const auto start = Clock::now();
  const int n = ps.size();
  const CutTable ct(ps, reps);
  TreeBnb bnb;
  bnb.ct = &ct;
  bnb.n = n;
  bnb.m = static_cast<int>(ct.candidates.size());
  bnb.cap = opt.witness_cap;
  bnb.parent.resize(n);
  std::iota(bnb.parent.begin(), bnb.parent.end(), 0);
  bnb.counts.assign(ct.partitions, 0);
  bnb.rec(0);

  SearchOutcome out;
  out.optimum = bnb.incumbent;
  out.witnesses = std::move(bnb.witnesses);
  canonicalize_witnesses(out.witnesses, opt.witness_cap);
  out.explored = bnb.nodes;
  out.seconds = seconds_since(start);
  return out;
}

// ---------------------------------------------------------------------------
// Paths, matchings, triangulations.
// ---------------------------------------------------------------------------

SearchOutcome evaluate_stream(const PointSet& ps,
                              const RepresentativeSet& reps,
                              const SearchOptions& opt,
                              const std::function<void(const EdgeVisitor&)>&
                                  enumerate) {
  const auto start = Clock::now();
  const CutTable ct(ps, reps);
  std::vector<std::uint8_t> scratch(std::max(1, ct.partitions));
  std::vector<int> ids;
  LocalBest local;
  enumerate([&](const EdgeList& edges) {
    ids.clear();
    for (const Edge& e : edges) ids.push_back(ct.edge_id(e.u, e.v));
    const int stab =
        evaluate_structure(ct, ids.data(), static_cast<int>(ids.size()),
                           scratch.data(), local.best);
    ++local.explored;
    if (stab <= local.best) local.offer(stab, edges, opt.witness_cap);
  });
  SearchOutcome out;
  out.optimum = local.best;
  out.witnesses = std::move(local.witnesses);
  canonicalize_witnesses(out.witnesses, opt.witness_cap);
  out.explored = local.explored;
  out.seconds = seconds_since(start);
  return out;
}

struct PathBnb {
  const CutTable* ct = nullptr;
  int n = 0;
  int cap = 16;
  std::vector<int> perm;
  std::vector<bool> used;
  std::vector<int> counts;
  int cur_max = 0;
  int incumbent = std::numeric_limits<int>::max();
  std::vector<EdgeList> witnesses;
  std::uint64_t nodes = 0;

  void rec(int depth) {
    ++nodes;
    if (depth == n) {
      if (perm.front() > perm.back()) return;  // one orientation per path
      EdgeList edges;
      edges.reserve(n - 1);
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(perm[i], perm[i + 1]);
      if (cur_max < incumbent) {
        incumbent = cur_max;
        witnesses.clear();
        witnesses.push_back(std::move(edges));
      } else if (cur_max == incumbent &&
                 static_cast<int>(witnesses.size()) < cap) {
        witnesses.push_back(std::move(edges));
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      const int saved_max = cur_max;
      const int eid =
          depth > 0 ? ct->edge_id(perm[depth - 1], v) : -1;
      if (eid >= 0) {
        for (std::uint16_t h : ct->per_edge[eid]) {
          const int c = ++counts[h];
          if (c > cur_max) cur_max = c;
        }
      }
      if (cur_max <= incumbent) {
        used[v] = true;
        perm[depth] = v;
        rec(depth + 1);
        used[v] = false;
      }
      if (eid >= 0) {
        for (std::uint16_t h : ct->per_edge[eid]) --counts[h];
      }
      cur_max = saved_max;
    }
  }
};

struct MatchingBnb {
  const CutTable* ct = nullptr;
  int n = 0;
  int cap = 16;
  std::vector<bool> used;
  EdgeList current;
  std::vector<int> counts;
  int cur_max = 0;
  int incumbent = std::numeric_limits<int>::max();
  std::vector<EdgeList> witnesses;
  std::uint64_t nodes = 0;

  void rec() {
    ++nodes;
    int lo = 0;
    while (lo < n && used[lo]) ++lo;
    if (lo == n) {
      if (cur_max < incumbent) {
        incumbent = cur_max;
        witnesses.clear();
        witnesses.push_back(current);
      } else if (cur_max == incumbent &&
                 static_cast<int>(witnesses.size()) < cap) {
        witnesses.push_back(current);
      }
      return;
    }
    used[lo] = true;
    for (int j = lo + 1; j < n; ++j) {
      if (used[j]) continue;
      const int saved_max = cur_max;
      const int eid = ct->edge_id(lo, j);
      for (std::uint16_t h : ct->per_edge[eid]) {
        const int c = ++counts[h];
        if (c > cur_max) cur_max = c;
      }
      if (cur_max < incumbent) {
        used[j] = true;
        current.emplace_back(lo, j);
        rec();
        current.pop_back();
        used[j] = false;
      }
      for (std::uint16_t h : ct->per_edge[eid]) --counts[h];
      cur_max = saved_max;
    }
    used[lo] = false;
  }
};

SearchOutcome single_structure_outcome(const PointSet& ps,
                                       const RepresentativeSet& reps,
                                       EdgeList edges) {
  GeometricGraph g(ps, edges);
  SearchOutcome out;
  out.optimum = stabbing_number(g, reps);
  out.witnesses.push_back(g.edges());
  out.explored = 1;
  return out;
}

}  // namespace

SearchOutcome min_stab_tree(const PointSet& ps, const SearchOptions& opt) {
  const int n = ps.size();
  if (n < 2) throw std::invalid_argument("min_stab_tree: need n >= 2");
  const RepresentativeSet reps = representative_partitions(ps);
  if (n == 2) return single_structure_outcome(ps, reps, {Edge(0, 1)});
  if (opt.mode == SearchMode::kExhaustive) {
    return exhaustive_tree_search(ps, reps, opt);
  }
  return bnb_tree_search(ps, reps, opt);
}

SearchOutcome min_stab_path(const PointSet& ps, const SearchOptions& opt) {
  const int n = ps.size();
  if (n < 2) throw std::invalid_argument("min_stab_path: need n >= 2");
  const RepresentativeSet reps = representative_partitions(ps);
  if (n == 2) return single_structure_outcome(ps, reps, {Edge(0, 1)});
  if (opt.mode == SearchMode::kExhaustive) {
    return evaluate_stream(ps, reps, opt, [n](const EdgeVisitor& v) {
      hamiltonian_paths(n, v);
    });
  }
  const auto start = Clock::now();
  const CutTable ct(ps, reps);
  PathBnb bnb;
  bnb.ct = &ct;
  bnb.n = n;
  bnb.cap = opt.witness_cap;
  bnb.perm.resize(n);
  bnb.used.assign(n, false);
  bnb.counts.assign(ct.partitions, 0);
  bnb.rec(0);
  SearchOutcome out;
  out.optimum = bnb.incumbent;
  out.witnesses = std::move(bnb.witnesses);
  canonicalize_witnesses(out.witnesses, opt.witness_cap);
  out.explored = bnb.nodes;
  out.seconds = seconds_since(start);
  return out;
}

SearchOutcome min_stab_matching(const PointSet& ps, const SearchOptions& opt) {
  const int n = ps.size();
  if (n < 2) throw std::invalid_argument("min_stab_matching: need n >= 2");
  if (n % 2 != 0) {
    throw std::invalid_argument("min_stab_matching: odd point count");
  }
  const RepresentativeSet reps = representative_partitions(ps);
  if (n == 2) return single_structure_outcome(ps, reps, {Edge(0, 1)});
  if (opt.mode == SearchMode::kExhaustive) {
    return evaluate_stream(ps, reps, opt, [n](const EdgeVisitor& v) {
      perfect_matchings(n, v);
    });
  }
  const auto start = Clock::now();
  const CutTable ct(ps, reps);
  MatchingBnb bnb;
  bnb.ct = &ct;
  bnb.n = n;
  bnb.cap = opt.witness_cap;
  bnb.used.assign(n, false);
  bnb.counts.assign(ct.partitions, 0);
  bnb.rec();
  SearchOutcome out;
  out.optimum = bnb.incumbent;
  out.witnesses = std::move(bnb.witnesses);
  canonicalize_witnesses(out.witnesses, opt.witness_cap);
  out.explored = bnb.nodes;
  out.seconds = seconds_since(start);
  return out;
}

SearchOutcome min_stab_triangulation(const PointSet& ps,
                                     const SearchOptions& opt) {
  const int n = ps.size();
  if (n < 2) {
    throw std::invalid_argument("min_stab_triangulation: need n >= 2");
  }
  const RepresentativeSet reps = representative_partitions(ps);
  if (n == 2) return single_structure_outcome(ps, reps, {Edge(0, 1)});
  // Both modes enumerate every triangulation; the incumbent only
  // short-circuits the per-structure evaluation (sound because cut counts
  // grow monotonically as edges are added), so explored is the
  // triangulation count either way.
  return evaluate_stream(ps, reps, opt, [&ps](const EdgeVisitor& v) {
    triangulations(ps, v);
  });
}

}  // namespace stabkit
