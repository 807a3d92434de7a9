// Exhaustive isomorph-free generation of small graphs under hereditary
// freeness constraints, and the exhaustive verifications of the lemmas and
// proof-internal claims built on top of it.
//
// Generation is by vertex-addition canonical augmentation: a child is kept
// iff deleting its canonically chosen vertex lands back on the parent's
// isomorphism class. Freeness is checked incrementally against patterns
// touching the new vertex only, which is complete for hereditary classes.
#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <thread>
#include <unordered_set>

#include "clawperf/classify.hpp"

namespace clawperf {

struct EnumerationQuery {
  int n_max = 0;
  std::vector<Graph> forbidden;  // hereditary filter
  bool require_connected = false;
  std::optional<int> min_alpha;
  bool exclude_odd_cycles = false;
  int workers = 1;
};

struct EnumerationStats {
  std::vector<std::uint64_t> free_classes;  // per order 0..n_max
  std::vector<std::uint64_t> emitted;       // per order, after emission filters
  std::uint64_t candidates = 0;
  double wall_ms = 0;
};

namespace detail {

inline bool new_vertex_keeps_free(const Graph& child, const std::vector<Graph>& patterns) {
  int nv = child.order() - 1;
  for (const auto& p : patterns) {
    if (p.order() == 0 || p.order() > child.order()) continue;
    if (contains_induced_using(child, p, nv)) return false;
  }
  return true;
}

struct LevelEntry {
  Graph g;
  std::string canon;
};

// All accepted children of one parent, in ascending neighbourhood order.
inline std::vector<LevelEntry> children_of(const LevelEntry& parent,
                                           const std::vector<Graph>& forbidden,
                                           std::uint64_t* candidates) {
  std::vector<LevelEntry> out;
  int n = parent.g.order();
  std::unordered_set<std::string> seen;
  for (VertexSet nbhd = 0; nbhd < (VertexSet{1} << n); ++nbhd) {
    ++*candidates;
    Graph child = with_vertex(parent.g, nbhd);
    if (!new_vertex_keeps_free(child, forbidden)) continue;
    CanonResult c = canonical(child);
    if (!seen.insert(c.form).second) continue;  // duplicate from this parent
    int deleted = c.labelling.back();
    if (canonical_form(delete_vertex(child, deleted)) != parent.canon) continue;
    out.push_back({std::move(child), std::move(c.form)});
  }
  return out;
}

}  // namespace detail

// Visits exactly one representative per isomorphism class of graphs of
// order 1..n_max satisfying the query; deterministic visit order for a
// fixed query, independent of the worker count. The visitor may return
// false to stop the search.
inline std::uint64_t enumerate_graphs(const EnumerationQuery& q,
                                      const std::function<bool(const Graph&)>& visit,
                                      EnumerationStats* stats = nullptr) {
  auto t0 = std::chrono::steady_clock::now();
  EnumerationStats local;
  local.free_classes.assign(q.n_max + 1, 0);
  local.emitted.assign(q.n_max + 1, 0);
  std::uint64_t visited = 0;
  bool stop = false;

  auto emit = [&](const Graph& g) {
    int n = g.order();
    ++local.free_classes[n];
    if (q.require_connected && !is_connected(g)) return;
    if (q.exclude_odd_cycles && is_odd_cycle_graph(g)) return;
    if (q.min_alpha && independence_number(g) < *q.min_alpha) return;
    ++local.emitted[n];
    ++visited;
    if (!visit(g)) stop = true;
  };

  std::vector<detail::LevelEntry> level;
  if (q.n_max >= 1) {
    Graph k1(1);
    if (is_free(k1, q.forbidden)) {
      level.push_back({k1, canonical_form(k1)});
      emit(k1);
    }
  }
  for (int n = 2; n <= q.n_max && !level.empty() && !stop; ++n) {
    std::vector<std::vector<detail::LevelEntry>> buckets(level.size());
    int workers = std::max(1, q.workers);
    if (workers == 1) {
      for (size_t i = 0; i < level.size() && !stop; ++i)
        buckets[i] = detail::children_of(level[i], q.forbidden, &local.candidates);
    } else {
      std::atomic<size_t> next{0};
      std::vector<std::uint64_t> cand(workers, 0);
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (size_t i = next.fetch_add(1); i < level.size(); i = next.fetch_add(1))
            buckets[i] = detail::children_of(level[i], q.forbidden, &cand[w]);
        });
      for (auto& t : pool) t.join();
      for (auto c : cand) local.candidates += c;
    }
    std::vector<detail::LevelEntry> next_level;
    for (auto& bucket : buckets)
      for (auto& entry : bucket) {
        if (!stop) emit(entry.g);
        next_level.push_back(std::move(entry));
      }
    level.swap(next_level);
  }
  local.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (stats) *stats = local;
  return visited;
}

// ---------------------------------------------------------------------------
// Exception derivation and lemma verifications
// ---------------------------------------------------------------------------

// All connected {K1,3, 2K1uK3}-free graphs with alpha >= 4, not odd cycles,
// imperfect, of order <= n_max.
inline std::vector<Graph> derive_exceptions(const Catalog& cat, int n_max = 11,
                                            int workers = 1) {
  EnumerationQuery q;
  q.n_max = n_max;
  q.forbidden = {claw_graph(), cat.named("2K1uK3")};
  q.require_connected = true;
  q.min_alpha = 4;
  q.exclude_odd_cycles = true;
  q.workers = workers;
  std::vector<Graph> out;
  enumerate_graphs(q, [&](const Graph& g) {
    if (!is_perfect(g).perfect) out.push_back(g);
    return true;
  });
  return out;
}

struct SweepReport {
  bool pass = true;
  std::optional<Graph> counterexample;
  std::uint64_t members_checked = 0;
  // lemma 5 vacuity bookkeeping: members containing the target cycle at all
  std::uint64_t members_with_cycle = 0;
};

// Statement (1): H1-free members have no induced C7.
// Statement (2): {H2..H7}-free members have no induced C5.
// `hs` overrides the H-list of the tested statement (mutation hook).
inline SweepReport verify_lemma5_statement(const Catalog& cat, int n_max, int statement,
                                           std::optional<std::vector<std::string>> hs =
                                               std::nullopt,
                                           int workers = 1) {
  int target = statement == 1 ? 7 : 5;
  std::vector<std::string> names =
      hs ? *hs
         : (statement == 1 ? std::vector<std::string>{"H1"}
                           : std::vector<std::string>{"H2", "H3", "H4", "H5", "H6", "H7"});
  EnumerationQuery q;
  q.n_max = n_max;
  q.forbidden = {claw_graph()};
  for (const auto& name : names) q.forbidden.push_back(cat.named(name));
  q.require_connected = true;
  q.min_alpha = 4;
  q.workers = workers;
  SweepReport rep;
  enumerate_graphs(q, [&](const Graph& g) {
    ++rep.members_checked;
    if (find_induced_cycle(g, target)) {
      ++rep.members_with_cycle;
      if (rep.pass) {
        rep.pass = false;
        rep.counterexample = g;
      }
    }
    return true;
  });
  return rep;
}

// Every connected {K1,3, 2K1uK3}-free graph with alpha >= 4 of order
// <= n_max, not isomorphic to a listed exception, is {C5, C7}-free.
inline SweepReport verify_lemma6(const Catalog& cat, int n_max,
                                 std::optional<std::vector<Graph>> exceptions = std::nullopt,
                                 int workers = 1) {
  std::vector<Graph> ex;
  if (exceptions) {
    ex = *exceptions;
  } else {
    for (const auto& [idx, g] : exception_list(cat)) ex.push_back(g);
  }
  std::vector<std::string> ex_canon;
  for (const auto& g : ex) ex_canon.push_back(canonical_form(g));
  EnumerationQuery q;
  q.n_max = n_max;
  q.forbidden = {claw_graph(), cat.named("2K1uK3")};
  q.require_connected = true;
  q.min_alpha = 4;
  q.workers = workers;
  SweepReport rep;
  enumerate_graphs(q, [&](const Graph& g) {
    ++rep.members_checked;
    if (!find_induced_cycle(g, 5) && !find_induced_cycle(g, 7)) return true;
    ++rep.members_with_cycle;
    std::string c = canonical_form(g);
    for (const auto& e : ex_canon)
      if (c == e) return true;
    rep.pass = false;
    rep.counterexample = g;
    return false;
  });
  return rep;
}

// Theorem statement (1) at desk scale: every member of the class for
// X in script-X is perfect.
inline SweepReport verify_case1(const Catalog& cat, int n_max, const std::string& x_name,
                                int workers = 1) {
  Graph x = cat.named(x_name);
  EnumerationQuery q;
  q.n_max = n_max;
  q.forbidden = {claw_graph(), x};
  q.require_connected = true;
  q.min_alpha = 4;
  q.exclude_odd_cycles = true;
  q.workers = workers;
  SweepReport rep;
  enumerate_graphs(q, [&](const Graph& g) {
    ++rep.members_checked;
    if (!is_perfect(g).perfect) {
      rep.pass = false;
      rep.counterexample = g;
      return false;
    }
    return true;
  });
  return rep;
}

// Every connected {K1,3, B_{1,2}}-free graph with alpha >= 4 (odd cycles
// included; the theorem has no such exclusion) is perfect or an inflation
// of C_k with k odd, k >= 9.
inline SweepReport verify_bull_theorem(int n_max, int workers = 1) {
  EnumerationQuery q;
  q.n_max = n_max;
  q.forbidden = {claw_graph(), b_graph(1, 2)};
  q.require_connected = true;
  q.min_alpha = 4;
  q.workers = workers;
  SweepReport rep;
  enumerate_graphs(q, [&](const Graph& g) {
    ++rep.members_checked;
    if (is_perfect(g).perfect) return true;
    ++rep.members_with_cycle;
    auto infl = recognize_inflation(g);
    if (!infl || infl->k < 9 || infl->k % 2 == 0) {
      rep.pass = false;
      rep.counterexample = g;
      return false;
    }
    return true;
  });
  return rep;
}

// Lemma 7's dichotomy: every graph X with order <= n_max that is not an
// induced subgraph of one of the six listed graphs contains one of the
// fifteen unavoidable graphs.
inline SweepReport verify_unavoidability(const Catalog& cat, int n_max = 7,
                                         std::optional<std::vector<Graph>> witnesses =
                                             std::nullopt,
                                         int workers = 1) {
  std::vector<Graph> ws;
  if (witnesses) {
    ws = *witnesses;
  } else {
    for (const auto& name : unavoidable_names()) ws.push_back(cat.named(name));
  }
  std::vector<Graph> maximal;
  for (const auto& name : script_x_names()) maximal.push_back(cat.named(name));
  maximal.push_back(cat.named("2K1uK3"));
  EnumerationQuery q;
  q.n_max = n_max;
  q.workers = workers;
  SweepReport rep;
  enumerate_graphs(q, [&](const Graph& x) {
    for (const auto& m : maximal)
      if (contains_induced(m, x)) return true;
    ++rep.members_checked;
    for (const auto& w : ws)
      if (contains_induced(x, w)) return true;
    rep.pass = false;
    rep.counterexample = x;
    return false;
  });
  return rep;
}

// ---------------------------------------------------------------------------
// H6 attachment analysis
// ---------------------------------------------------------------------------

struct H6ExtensionType {
  VertexSet neighbourhood = 0;  // orbit representative inside H6
  int orbit_size = 0;
};

struct H6ExtensionReport {
  std::vector<H6ExtensionType> single_orbits;  // expected: exactly 3 (A, B, C)
  std::vector<Graph> two_vertex_classes;       // expected: exactly 3 options
};

inline H6ExtensionReport h6_extension_orbits(const Catalog& cat) {
  Graph h6 = cat.named("H6");
  Graph co = cat.named("2K1uK3");
  auto class_free = [&](const Graph& g) {
    return !contains_induced(g, claw_graph()) && !contains_induced(g, co);
  };
  int n = h6.order();
  std::vector<VertexSet> valid;
  for (VertexSet s = 1; s < (VertexSet{1} << n); ++s)
    if (class_free(with_vertex(h6, s))) valid.push_back(s);

  H6ExtensionReport rep;
  auto auts = all_automorphisms(h6);
  auto orbit_of = [&](VertexSet s) {
    std::set<VertexSet> images;
    for (const auto& a : auts) {
      VertexSet image = 0;
      vs::for_each(s, [&](int v) { image |= vs::single(a[v]); });
      images.insert(image);
    }
    return images;
  };
  std::set<VertexSet> covered;
  for (VertexSet s : valid) {
    if (covered.count(s)) continue;
    auto orbit = orbit_of(s);
    covered.insert(orbit.begin(), orbit.end());
    rep.single_orbits.push_back({*orbit.begin(), static_cast<int>(orbit.size())});
  }

  // two-vertex extensions up to isomorphism; the first vertex may be fixed
  // to an orbit representative
  std::set<std::string> seen;
  for (const auto& t : rep.single_orbits) {
    Graph base = with_vertex(h6, t.neighbourhood);
    for (VertexSet s = 1; s < (VertexSet{1} << n); ++s)
      for (int adj = 0; adj < 2; ++adj) {
        Graph g = with_vertex(base, s | (adj ? vs::single(n) : 0));
        if (!class_free(g)) continue;
        if (seen.insert(canonical_form(g)).second) rep.two_vertex_classes.push_back(g);
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Cycle contexts: the edge-count inequality and claim cd2
// ---------------------------------------------------------------------------

// An induced cycle C in a host graph together with a maximum independent
// set I and the count e of edges between C and I \ C.
struct CycleContext {
  Graph host;
  VertexSet cycle_set = 0;
  int ell = 0;
  VertexSet independent = 0;
  int e = 0;
};

inline CycleContext make_cycle_context(const Graph& host, VertexSet cycle_set) {
  CycleContext ctx;
  ctx.host = host;
  ctx.cycle_set = cycle_set;
  Graph cyc = induced_subgraph(host, cycle_set);
  if (!is_cycle_graph(cyc)) throw std::invalid_argument("cycle context: C must induce a cycle");
  ctx.ell = vs::count(cycle_set);
  ctx.independent = max_independent_set(host).witness;
  VertexSet outside = ctx.independent & ~cycle_set;
  int e = 0;
  vs::for_each(outside, [&](int v) { e += vs::count(host.adj[v] & cycle_set); });
  ctx.e = e;
  return ctx;
}

struct EdgeBoundResult {
  bool pass = true;
  int e = 0;
  int bound_statement = 0;  // 2l - 4|I cap (C u N(C))| + 4|I cap N(C)|
  int bound_proof = 0;      // 2l - 4|I cap C|
};

// Claim: e <= 2*ell - 4|I cap (C u N(C))| + 4|I cap N(C)|, equivalently
// e <= 2*ell - 4|I cap C|; both algebraic forms are checked for mutual
// consistency.
inline EdgeBoundResult verify_edge_bound(const CycleContext& ctx) {
  VertexSet n_of_c = 0;
  vs::for_each(ctx.cycle_set, [&](int v) { n_of_c |= ctx.host.adj[v]; });
  n_of_c &= ~ctx.cycle_set;
  int i_c = vs::count(ctx.independent & ctx.cycle_set);
  int i_cnc = vs::count(ctx.independent & (ctx.cycle_set | n_of_c));
  int i_nc = vs::count(ctx.independent & n_of_c);
  EdgeBoundResult res;
  res.e = ctx.e;
  res.bound_statement = 2 * ctx.ell - 4 * i_cnc + 4 * i_nc;
  res.bound_proof = 2 * ctx.ell - 4 * i_c;
  if (res.bound_statement != res.bound_proof)
    throw std::logic_error("edge bound: algebraic forms disagree");
  res.pass = res.e <= res.bound_proof;
  return res;
}

struct Cd2Result {
  bool applicable = false;  // preconditions hold
  bool pass = true;
};

// Claim cd2: in a claw-free host, a vertex with a neighbour in C and a
// neighbour outside C u N(C) has its C-neighbourhood inducing K2.
inline Cd2Result verify_claim_cd2(const Graph& host, VertexSet cycle_set, int x) {
  Graph cyc = induced_subgraph(host, cycle_set);
  if (!is_cycle_graph(cyc) || cyc.order() < 5)
    throw std::invalid_argument("cd2: C must induce a cycle of length >= 5");
  if (vs::contains(cycle_set, x)) throw std::invalid_argument("cd2: x must lie outside C");
  if (contains_induced(host, claw_graph()))
    throw std::invalid_argument("cd2: host must be K1,3-free");
  Cd2Result res;
  VertexSet in_c = host.adj[x] & cycle_set;
  if (!in_c) return res;
  VertexSet n_of_c = 0;
  vs::for_each(cycle_set, [&](int v) { n_of_c |= host.adj[v]; });
  VertexSet outside = host.adj[x] & ~(cycle_set | n_of_c);
  if (!outside) return res;
  res.applicable = true;
  Graph prof = induced_subgraph(host, in_c);
  res.pass = prof.order() == 2 && prof.edge_count() == 1;
  return res;
}

struct ObservationSweepReport {
  bool pass = true;
  std::uint64_t hosts = 0;
  std::uint64_t cycles = 0;
  std::uint64_t attachments = 0;
  std::uint64_t cd2_applicable = 0;
  std::optional<Graph> counterexample;
  std::string what;
};

// Zero violations of the edge bound, claim cd2 and the attachment profile
// over all claw-free hosts with an induced C5 or C7, order <= n_max.
inline ObservationSweepReport verify_observation_sweeps(int n_max = 10, int workers = 1) {
  EnumerationQuery q;
  q.n_max = n_max;
  q.forbidden = {claw_graph()};
  q.workers = workers;
  ObservationSweepReport rep;
  enumerate_graphs(q, [&](const Graph& g) {
    bool counted = false;
    for (int len : {5, 7}) {
      for (const auto& cyc : all_induced_cycles(g, len)) {
        if (!counted) {
          ++rep.hosts;
          counted = true;
        }
        ++rep.cycles;
        VertexSet cs = vs::from_vector(cyc);
        CycleContext ctx = make_cycle_context(g, cs);
        if (!verify_edge_bound(ctx).pass) {
          rep.pass = false;
          rep.counterexample = g;
          rep.what = "edge bound";
          return false;
        }
        VertexSet outside_with_nbr = 0;
        vs::for_each(g.vertices() & ~cs, [&](int x) {
          if (g.adj[x] & cs) outside_with_nbr |= vs::single(x);
        });
        bool stop = false;
        vs::for_each(outside_with_nbr, [&](int x) {
          if (stop) return;
          ++rep.attachments;
          if (attachment_profile(g, cs, x).violation) {
            rep.pass = false;
            rep.counterexample = g;
            rep.what = "attachment profile";
            stop = true;
            return;
          }
          Cd2Result cd2 = verify_claim_cd2(g, cs, x);
          if (cd2.applicable) ++rep.cd2_applicable;
          if (!cd2.pass) {
            rep.pass = false;
            rep.counterexample = g;
            rep.what = "claim cd2";
            stop = true;
          }
        });
        if (stop) return false;
      }
    }
    return true;
  });
  return rep;
}

}  // namespace clawperf
