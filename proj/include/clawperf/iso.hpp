// Induced-subgraph containment, isomorphism testing and canonical forms.
//
// Containment: backtracking over pattern vertices (most-constrained order)
// with forward-checked host candidate masks.
// Canonical form: iterative neighbourhood-colour refinement, then
// individualization over colour classes, taking the lexicographically
// smallest adjacency bit string. Equal-leaf automorphisms prune symmetric
// branches, which keeps cliques and twin-heavy graphs tractable.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "clawperf/graph.hpp"

namespace clawperf {

// Injective map pattern vertex -> host vertex with the induced condition.
struct Embedding {
  std::vector<int> map;
};

inline bool embedding_valid(const Graph& host, const Graph& pattern, const Embedding& e) {
  int pn = pattern.order();
  if (static_cast<int>(e.map.size()) != pn) return false;
  for (int u = 0; u < pn; ++u) {
    if (e.map[u] < 0 || e.map[u] >= host.order()) return false;
    for (int v = u + 1; v < pn; ++v) {
      if (e.map[u] == e.map[v]) return false;
      if (pattern.has_edge(u, v) != host.has_edge(e.map[u], e.map[v])) return false;
    }
  }
  return true;
}

namespace detail {

struct PatternPlan {
  std::vector<int> order;  // pattern vertices, most-constrained first
  std::vector<int> slot;   // inverse: pattern vertex -> position
};

inline PatternPlan plan_pattern(const Graph& p) {
  int n = p.order();
  PatternPlan plan;
  plan.slot.assign(n, -1);
  std::vector<char> used(n, 0);
  for (int k = 0; k < n; ++k) {
    int best = -1, best_conn = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      int conn = vs::count(p.adj[v] & vs::from_vector(plan.order));
      int deg = p.degree(v);
      if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
        best = v;
        best_conn = conn;
        best_deg = deg;
      }
    }
    used[best] = 1;
    plan.slot[best] = k;
    plan.order.push_back(best);
  }
  return plan;
}

inline bool embed_rec(const Graph& host, const Graph& pat, const PatternPlan& plan, int k,
                      std::vector<VertexSet>& cand, std::vector<int>& image) {
  int pn = pat.order();
  if (k == pn) return true;
  int pv = plan.order[k];
  VertexSet options = cand[k];
  while (options) {
    int hv = vs::first(options);
    options &= ~vs::single(hv);
    image[pv] = hv;
    std::vector<VertexSet> saved(cand.begin() + k + 1, cand.end());
    bool feasible = true;
    for (int j = k + 1; j < pn; ++j) {
      int qv = plan.order[j];
      if (pat.has_edge(pv, qv))
        cand[j] &= host.adj[hv];
      else
        cand[j] &= ~host.adj[hv];
      cand[j] &= ~vs::single(hv);
      if (!cand[j]) {
        feasible = false;
        break;
      }
    }
    if (feasible && embed_rec(host, pat, plan, k + 1, cand, image)) return true;
    std::copy(saved.begin(), saved.end(), cand.begin() + k + 1);
    image[pv] = -1;
  }
  return false;
}

inline std::optional<Embedding> find_embedding(const Graph& host, const Graph& pat,
                                               int required_host_vertex) {
  int pn = pat.order(), hn = host.order();
  if (pn > hn || pn == 0) {
    if (pn == 0) return Embedding{};
    return std::nullopt;
  }
  if (pat.edge_count() > host.edge_count()) return std::nullopt;
  PatternPlan plan = plan_pattern(pat);
  std::vector<VertexSet> base(pn);
  for (int k = 0; k < pn; ++k) {
    VertexSet c = 0;
    int pd = pat.degree(plan.order[k]);
    for (int hv = 0; hv < hn; ++hv)
      if (host.degree(hv) >= pd) c |= vs::single(hv);
    base[k] = c;
  }
  auto run = [&](int forced_slot) -> std::optional<Embedding> {
    std::vector<VertexSet> cand = base;
    if (forced_slot >= 0) cand[forced_slot] &= vs::single(required_host_vertex);
    if (forced_slot >= 0 && !cand[forced_slot]) return std::nullopt;
    std::vector<int> image(pn, -1);
    // move the forced slot to the front of its own search: cheapest is to
    // just rely on the mask; the search order is fixed by the plan.
    if (detail::embed_rec(host, pat, plan, 0, cand, image)) {
      Embedding e;
      e.map = image;
      return e;
    }
    return std::nullopt;
  };
  if (required_host_vertex < 0) return run(-1);
  for (int pv = 0; pv < pn; ++pv) {
    if (host.degree(required_host_vertex) < pat.degree(pv)) continue;
    auto r = run(plan.slot[pv]);
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
  return detail::find_embedding(host, pattern, -1);
}

// Embedding whose image must use the given host vertex; the workhorse of
// incremental freeness checks during enumeration.
inline std::optional<Embedding> contains_induced_using(const Graph& host, const Graph& pattern,
                                                       int host_vertex) {
  return detail::find_embedding(host, pattern, host_vertex);
}

inline bool is_free(const Graph& g, const std::vector<Graph>& patterns) {
  for (const auto& p : patterns)
    if (contains_induced(g, p)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

namespace detail {

using Partition = std::vector<VertexSet>;  // ordered cells

// Coarsest equitable refinement; cell order depends only on structure
// (splits ordered by neighbour count, ascending).
inline void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter = cells[s];
      for (size_t d = 0; d < cells.size(); ++d) {
        if (vs::count(cells[d]) <= 1) continue;
        // bucket by count of neighbours in the splitter
        int counts[kMaxOrder + 1];
        VertexSet buckets[kMaxOrder + 1];
        int used = 0;
        vs::for_each(cells[d], [&](int v) {
          int c = vs::count(g.adj[v] & splitter);
          int b = -1;
          for (int t = 0; t < used; ++t)
            if (counts[t] == c) b = t;
          if (b < 0) {
            b = used++;
            counts[b] = c;
            buckets[b] = 0;
          }
          buckets[b] |= vs::single(v);
        });
        if (used <= 1) continue;
        std::vector<int> idx(used);
        for (int t = 0; t < used; ++t) idx[t] = t;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return counts[a] < counts[b]; });
        Partition next;
        next.reserve(cells.size() + used - 1);
        for (size_t t = 0; t < cells.size(); ++t) {
          if (t == d)
            for (int b : idx) next.push_back(buckets[b]);
          else
            next.push_back(cells[t]);
        }
        cells.swap(next);
        changed = true;
        break;
      }
    }
  }
}

// Adjacency bits of the first `k` ordered vertices, column-major upper
// triangle, packed MSB-first into bytes.
inline std::string pack_prefix(const Graph& g, const std::vector<int>& perm, int k) {
  std::string out;
  int acc = 0, nbits = 0;
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(perm[i], perm[j]) ? 1 : 0);
      if (++nbits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

// Lexicographic bit-level compare of a k-vertex prefix string against the
// same-length prefix of the full best string. <0, 0, >0.
inline int compare_prefix(const std::string& partial, int bits, const std::string& best) {
  int full = bits / 8, rem = bits % 8;
  for (int i = 0; i < full; ++i) {
    unsigned char a = partial[i], b = best[i];
    if (a != b) return a < b ? -1 : 1;
  }
  if (rem > 0) {
    unsigned char mask = static_cast<unsigned char>(0xFF << (8 - rem));
    unsigned char a = partial[full] & mask, b = best[full] & mask;
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::string best;
  std::vector<int> best_perm;
  bool have_best = false;
  std::vector<std::vector<int>> auts;  // discovered automorphisms

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  void leaf(const Partition& cells) {
    std::vector<int> perm;
    perm.reserve(n);
    for (auto c : cells) perm.push_back(vs::first(c));
    std::string s = pack_prefix(g, perm, n);
    if (!have_best || s < best) {
      best = std::move(s);
      best_perm = std::move(perm);
      have_best = true;
    } else if (s == best) {
      std::vector<int> a(n);
      for (int k = 0; k < n; ++k) a[best_perm[k]] = perm[k];
      auts.push_back(std::move(a));
    }
  }

  // Union-find over vertices, using automorphisms fixing `prefix` pointwise.
  std::vector<int> orbits_fixing(const std::vector<int>& prefix) {
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& a : auts) {
      bool fixes = true;
      for (int p : prefix)
        if (a[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) {
        int x = find(v), y = find(a[v]);
        if (x != y) parent[x] = y;
      }
    }
    for (int v = 0; v < n; ++v) parent[v] = find(v);
    return parent;
  }

  void rec(Partition cells, std::vector<int>& prefix) {
    refine(g, cells);
    int run = 0;
    std::vector<int> lead;
    for (auto c : cells) {
      if (vs::count(c) != 1) break;
      lead.push_back(vs::first(c));
      ++run;
    }
    if (have_best && run >= 2) {
      std::string partial = pack_prefix(g, lead, run);
      if (compare_prefix(partial, run * (run - 1) / 2, best) > 0) return;
    }
    if (run == static_cast<int>(cells.size())) {
      leaf(cells);
      return;
    }
    // smallest-first cell selection among non-singletons
    size_t target = cells.size();
    int target_size = kMaxOrder + 1;
    for (size_t i = 0; i < cells.size(); ++i) {
      int c = vs::count(cells[i]);
      if (c > 1 && c < target_size) {
        target = i;
        target_size = c;
      }
    }
    std::vector<int> tried;
    VertexSet cell = cells[target];
    vs::for_each(cell, [&](int v) {
      if (!tried.empty()) {
        std::vector<int> orb = orbits_fixing(prefix);
        for (int u : tried)
          if (orb[u] == orb[v]) return;
      }
      Partition child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(vs::single(v));
          child.push_back(cells[i] & ~vs::single(v));
        } else {
          child.push_back(cells[i]);
        }
      }
      prefix.push_back(v);
      rec(std::move(child), prefix);
      prefix.pop_back();
      tried.push_back(v);
    });
  }
};

}  // namespace detail

struct CanonResult {
  std::string form;            // order byte + packed canonical adjacency bits
  std::vector<int> labelling;  // canonical position -> vertex
};

inline CanonResult canonical(const Graph& g) {
  int n = g.order();
  CanonResult res;
  res.form.push_back(static_cast<char>(n));
  if (n == 0) return res;
  detail::CanonSearch search(g);
  detail::Partition start{g.vertices()};
  std::vector<int> prefix;
  search.rec(std::move(start), prefix);
  res.form += search.best;
  res.labelling = search.best_perm;
  return res;
}

inline std::string canonical_form(const Graph& g) { return canonical(g).form; }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

// Full automorphism group by backtracking; intended for small catalog graphs.
inline std::vector<std::vector<int>> all_automorphisms(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      out.push_back(map);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (g.has_edge(u, v) != g.has_edge(map[u], w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[w] = 1;
      map[v] = w;
      rec(v + 1);
      used[w] = 0;
      map[v] = -1;
    }
  };
  rec(0);
  return out;
}

inline std::vector<int> vertex_orbits(const Graph& g) {
  int n = g.order();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& a : all_automorphisms(g))
    for (int v = 0; v < n; ++v) {
      int x = find(v), y = find(a[v]);
      if (x != y) parent[x] = y;
    }
  for (int v = 0; v < n; ++v) parent[v] = find(v);
  return parent;
}

}  // namespace clawperf
