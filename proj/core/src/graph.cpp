#include "stabkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stabkit {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

GeometricGraph::GeometricGraph(PointSet points, EdgeList edges)
    : points_(std::move(points)), edges_(std::move(edges)) {
  const int n = points_.size();
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument("GeometricGraph: edge index out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("GeometricGraph: self-loop");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("GeometricGraph: duplicate edge");
  }
}

int GeometricGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.u == v || e.v == v) ++d;
  }
  return d;
}

bool GeometricGraph::has_edge(int u, int v) const {
  const Edge probe(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), probe);
}

std::vector<int> GeometricGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cut_size(const GeometricGraph& g, const Bipartition& b) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (b.separates(e.u, e.v)) ++count;
  }
  return count;
}

EdgeCutProfile edge_cut_profile(const GeometricGraph& g,
                                const RepresentativeSet& reps) {
  EdgeCutProfile profile;
  profile.counts.reserve(reps.size());
  for (int i = 0; i < reps.size(); ++i) {
    const int c = cut_size(g, reps[i]);
    profile.counts.push_back(c);
    if (c > profile.max_count) {
      profile.max_count = c;
      profile.argmax = i;
    }
  }
  return profile;
}

int stabbing_number(const GeometricGraph& g, const RepresentativeSet& reps) {
  return edge_cut_profile(g, reps).max_count;
}

GeometricGraph remove_degree1(const GeometricGraph& g, int v) {
  if (g.degree(v) != 1) {
    throw std::invalid_argument("remove_degree1: vertex degree is not 1");
  }
  EdgeList edges;
  edges.reserve(g.edges().size() - 1);
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) edges.push_back(e);
  }
  return GeometricGraph(g.points(), std::move(edges));
}

GeometricGraph contract_degree2(const GeometricGraph& g, int v) {
  if (g.degree(v) != 2) {
    throw std::invalid_argument("contract_degree2: vertex degree is not 2");
  }
  const std::vector<int> nbrs = g.neighbors(v);
  if (g.has_edge(nbrs[0], nbrs[1])) {
    throw std::invalid_argument(
        "contract_degree2: neighbors already adjacent");
  }
  EdgeList edges;
  edges.reserve(g.edges().size() - 1);
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) edges.push_back(e);
  }
  edges.emplace_back(nbrs[0], nbrs[1]);
  return GeometricGraph(g.points(), std::move(edges));
}

bool is_forest(const GeometricGraph& g) {
  UnionFind uf(g.size());
  for (const Edge& e : g.edges()) {
    if (!uf.unite(e.u, e.v)) return false;
  }
  return true;
}

bool is_spanning_tree(const GeometricGraph& g) {
  return g.size() >= 1 && g.edge_count() == g.size() - 1 && is_forest(g);
}

GeometricGraph induced_subgraph(const GeometricGraph& g,
                                const std::vector<int>& keep) {
  std::vector<bool> in(g.size(), false);
  for (int v : keep) {
    if (v < 0 || v >= g.size()) {
      throw std::invalid_argument("induced_subgraph: index out of range");
    }
    in[v] = true;
  }
  EdgeList edges;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) edges.push_back(e);
  }
  return GeometricGraph(g.points(), std::move(edges));
}

GeometricGraph reduce_with_specials(const GeometricGraph& g,
                                    const std::array<int, 3>& specials) {
  if (!is_forest(g)) {
    throw std::invalid_argument("reduce_with_specials: graph has a cycle");
  }
  std::vector<bool> special(g.size(), false);
  for (int s : specials) {
    if (s < 0 || s >= g.size()) {
      throw std::invalid_argument("reduce_with_specials: special out of range");
    }
    if (special[s]) {
      throw std::invalid_argument("reduce_with_specials: specials not distinct");
    }
    special[s] = true;
  }

  const int n = g.size();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto erase_neighbor = [&](int from, int gone) {
    auto& lst = adj[from];
    lst.erase(std::find(lst.begin(), lst.end(), gone));
  };

  // Ascending-index work queue over non-special vertices of degree 1 or 2.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (special[v]) continue;
      const std::size_t deg = adj[v].size();
      if (deg == 1) {
        const int w = adj[v][0];
        adj[v].clear();
        erase_neighbor(w, v);
        changed = true;
      } else if (deg == 2) {
        const int w1 = adj[v][0];
        const int w2 = adj[v][1];
        // In a forest the two neighbors are never adjacent (that would be a
        // cycle), so the contraction is always legal here.
        adj[v].clear();
        erase_neighbor(w1, v);
        erase_neighbor(w2, v);
        adj[w1].push_back(w2);
        adj[w2].push_back(w1);
        changed = true;
      }
    }
  }

  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int w : adj[u]) {
      if (u < w) edges.emplace_back(u, w);
    }
  }
  return GeometricGraph(g.points(), std::move(edges));
}

std::vector<int> live_vertices(const GeometricGraph& g,
                               const std::array<int, 3>& specials) {
  std::vector<bool> live(g.size(), false);
  for (int s : specials) live[s] = true;
  for (const Edge& e : g.edges()) {
    live[e.u] = true;
    live[e.v] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    if (live[v]) out.push_back(v);
  }
  return out;
}

int component_count(const GeometricGraph& g, const std::vector<int>& among) {
  UnionFind uf(g.size());
  std::vector<bool> in(g.size(), false);
  for (int v : among) in[v] = true;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) uf.unite(e.u, e.v);
  }
  std::vector<int> roots;
  for (int v : among) {
    const int r = uf.find(v);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
      roots.push_back(r);
    }
  }
  return static_cast<int>(roots.size());
}

}  // namespace stabkit
