// Exact invariants: clique number, independence number, chromatic number.
// Branch-and-bound with a greedy colouring bound for cliques; iterative
// deepening over k-colourability for chi. Desk scale only.
#pragma once

#include <algorithm>
#include <optional>

#include "clawperf/graph.hpp"

namespace clawperf {

struct CliqueResult {
  int size = 0;
  VertexSet witness = 0;
};

namespace detail {

// Greedy colouring of the candidate set; emits vertices ordered by colour
// class so that the colour index is an upper bound for the clique extension.
inline void colour_order(const Graph& g, VertexSet cand, std::vector<int>& order,
                         std::vector<int>& bound) {
  order.clear();
  bound.clear();
  int colour = 0;
  while (cand) {
    ++colour;
    VertexSet avail = cand;
    while (avail) {
      int v = vs::first(avail);
      avail &= ~(g.adj[v] | vs::single(v));
      cand &= ~vs::single(v);
      order.push_back(v);
      bound.push_back(colour);
    }
  }
}

inline void clique_expand(const Graph& g, VertexSet r, int rsize, VertexSet cand,
                          CliqueResult& best) {
  if (!cand) {
    if (rsize > best.size) best = {rsize, r};
    return;
  }
  std::vector<int> order, bound;
  colour_order(g, cand, order, bound);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    if (rsize + bound[i] <= best.size) return;
    int v = order[i];
    clique_expand(g, r | vs::single(v), rsize + 1, cand & g.adj[v], best);
    cand &= ~vs::single(v);
  }
}

}  // namespace detail

inline CliqueResult max_clique(const Graph& g) {
  CliqueResult best;
  if (g.order() == 0) return best;
  detail::clique_expand(g, 0, 0, g.vertices(), best);
  return best;
}

inline int clique_number(const Graph& g) { return max_clique(g).size; }

// alpha(G) as a maximum clique of the complement; returns a witness set.
inline CliqueResult max_independent_set(const Graph& g) { return max_clique(complement(g)); }

inline int independence_number(const Graph& g) { return max_independent_set(g).size; }

namespace detail {

inline bool colour_rec(const Graph& g, const std::vector<int>& order, size_t i, int k,
                       int used, std::vector<int>& col) {
  if (i == order.size()) return true;
  int v = order[i];
  std::uint32_t taken = 0;
  vs::for_each(g.adj[v], [&](int u) {
    if (col[u] >= 0) taken |= 1u << col[u];
  });
  int limit = std::min(k, used + 1);  // new colours are interchangeable
  for (int c = 0; c < limit; ++c) {
    if ((taken >> c) & 1u) continue;
    col[v] = c;
    if (colour_rec(g, order, i + 1, k, std::max(used, c + 1), col)) return true;
    col[v] = -1;
  }
  return false;
}

}  // namespace detail

inline bool is_k_colourable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  std::vector<int> order(g.order());
  for (int v = 0; v < g.order(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> col(g.order(), -1);
  return detail::colour_rec(g, order, 0, k, 0, col);
}

inline constexpr int kChromaticExactLimit = 18;

inline int chromatic_number(const Graph& g) {
  if (g.order() > kChromaticExactLimit)
    throw std::invalid_argument("chromatic_number: order too large for exact mode");
  if (g.order() == 0) return 0;
  for (int k = clique_number(g);; ++k)
    if (is_k_colourable(g, k)) return k;
}

}  // namespace clawperf
