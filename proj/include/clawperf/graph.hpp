// Immutable small-graph value type on at most 64 vertices.
// Adjacency is stored as one 64-bit neighborhood row per vertex, so set
// operations (intersection with a neighborhood, subset tests) are single
// machine-word instructions.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clawperf {

// A set of vertices out of {0..63}, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

namespace vs {

inline int count(VertexSet s) { return std::popcount(s); }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet single(int v) { return VertexSet{1} << v; }
inline VertexSet universe(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int first(VertexSet s) { return std::countr_zero(s); }

// Calls f(v) for every vertex of s in increasing order.
template <typename F>
void for_each(VertexSet s, F f) {
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

inline std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  out.reserve(count(s));
  for_each(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet from_vector(const std::vector<int>& vs_) {
  VertexSet s = 0;
  for (int v : vs_) s |= single(v);
  return s;
}

}  // namespace vs

struct Graph {
  // adj[v] = open neighborhood of v. Invariants: symmetric, irreflexive,
  // all bits below order().
  std::vector<std::uint64_t> adj;

  Graph() = default;
  explicit Graph(int n) : adj(n, 0) {
    if (n < 0 || n > kMaxOrder) throw std::invalid_argument("graph order out of range");
  }

  int order() const { return static_cast<int>(adj.size()); }

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 0 || v < 0 || u >= order() || v >= order())
      throw std::invalid_argument("edge endpoint out of range");
    adj[u] |= vs::single(v);
    adj[v] |= vs::single(u);
  }

  int degree(int v) const { return std::popcount(adj[v]); }

  int edge_count() const {
    int twice = 0;
    for (auto row : adj) twice += std::popcount(row);
    return twice / 2;
  }

  VertexSet vertices() const { return vs::universe(order()); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
      vs::for_each(adj[u] & ~(vs::universe(u + 1)), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  bool operator==(const Graph&) const = default;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n > kMaxOrder) throw std::invalid_argument("graph order exceeds 64");
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph complement(const Graph& g) {
  int n = g.order();
  Graph h(n);
  for (int v = 0; v < n; ++v) h.adj[v] = ~g.adj[v] & g.vertices() & ~vs::single(v);
  return h;
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
  int total = 0;
  for (const auto& p : parts) total += p.order();
  if (total > kMaxOrder) throw std::invalid_argument("disjoint union exceeds 64 vertices");
  Graph g(total);
  int base = 0;
  for (const auto& p : parts) {
    for (int v = 0; v < p.order(); ++v) g.adj[base + v] = p.adj[v] << base;
    base += p.order();
  }
  return g;
}

// Induced subgraph on the vertices of `keep`, relabeled by ascending order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (keep & ~g.vertices()) throw std::invalid_argument("induced set has out-of-range vertex");
  std::vector<int> verts = vs::to_vector(keep);
  Graph h(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

inline Graph delete_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices() & ~vs::single(v));
}

// Parent graph plus one new last vertex with the given neighborhood.
inline Graph with_vertex(const Graph& g, VertexSet nbhd) {
  int n = g.order();
  if (n + 1 > kMaxOrder) throw std::invalid_argument("graph order exceeds 64");
  if (nbhd & ~g.vertices()) throw std::invalid_argument("neighborhood out of range");
  Graph h(n + 1);
  for (int v = 0; v < n; ++v) h.adj[v] = g.adj[v] | (((nbhd >> v) & 1u) << n);
  h.adj[n] = nbhd;
  return h;
}

// Vertices reachable from `start` staying inside `within`.
inline VertexSet reach(const Graph& g, int start, VertexSet within) {
  VertexSet seen = vs::single(start) & within;
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    vs::for_each(frontier, [&](int v) { next |= g.adj[v]; });
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

inline bool is_connected_within(const Graph& g, VertexSet within) {
  if (!within) return false;
  return reach(g, vs::first(within), within) == within;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("is_connected: empty graph");
  return is_connected_within(g, g.vertices());
}

// True iff g is the cycle C_n (n >= 3): connected and 2-regular.
inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

inline bool is_odd_cycle_graph(const Graph& g) {
  return is_cycle_graph(g) && g.order() % 2 == 1;
}

inline int triangle_count(const Graph& g) {
  int n = g.order(), cnt = 0;
  for (int u = 0; u < n; ++u)
    vs::for_each(g.adj[u] & ~vs::universe(u + 1), [&](int v) {
      cnt += vs::count(g.adj[u] & g.adj[v] & ~vs::universe(v + 1));
    });
  return cnt;
}

}  // namespace clawperf
