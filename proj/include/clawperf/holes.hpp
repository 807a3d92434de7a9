// Odd-hole / odd-antihole detection and the SPGT-based perfectness decider
// with certificates.
//
// Two tiers: a DFS over induced paths targeting one cycle length at a time
// (fast path), and an exhaustive subset scan (trivially correct fallback,
// used as the test oracle).
#pragma once

#include <optional>

#include "clawperf/graph.hpp"
#include "clawperf/invariants.hpp"
#include "clawperf/iso.hpp"

namespace clawperf {

struct HoleCertificate {
  enum class Kind { hole, antihole };
  Kind kind = Kind::hole;
  std::vector<int> cycle;  // induced chordless cycle, in order

  int length() const { return static_cast<int>(cycle.size()); }
};

namespace detail {

// DFS for an induced cycle of exactly the target length. Path invariant:
// start vertex is the cycle minimum, the next vertex is smaller than the
// last (kills the reversed traversal), interior vertices are pairwise
// non-adjacent except consecutively, and only the closing vertex may see
// the start.
inline bool induced_cycle_rec(const Graph& g, int target, std::vector<int>& path,
                              VertexSet on_path, VertexSet forbidden) {
  int depth = static_cast<int>(path.size());
  int start = path[0], last = path.back();
  if (depth == target) return g.has_edge(last, start);
  VertexSet options = g.adj[last] & ~forbidden & ~on_path;
  // the start is the cycle minimum
  options &= ~vs::universe(start + 1);
  if (depth >= 2 && depth + 1 < target) options &= ~g.adj[start];  // middle: chordless
  if (depth + 1 == target) options &= g.adj[start];                // closing edge
  bool found = false;
  vs::for_each(options, [&](int v) {
    if (found) return;
    if (depth + 1 == target && v > path[1]) return;  // one traversal direction
    // `last` becomes an interior vertex; its other neighbours get chord-banned
    VertexSet add = depth >= 2 ? (g.adj[last] & ~vs::single(v)) : 0;
    path.push_back(v);
    if (induced_cycle_rec(g, target, path, on_path | vs::single(v), forbidden | add))
      found = true;
    else
      path.pop_back();
  });
  return found;
}

}  // namespace detail

// An induced (chordless) cycle of exactly the given length, if any.
inline std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int length) {
  if (length < 3 || length > g.order()) return std::nullopt;
  for (int s = 0; s + length <= g.order(); ++s) {
    std::vector<int> path{s};
    if (detail::induced_cycle_rec(g, length, path, vs::single(s), 0)) {
      // enforce direction canonically: path[1] < path.back()
      if (path.size() >= 3 && path[1] > path.back()) std::reverse(path.begin() + 1, path.end());
      return path;
    }
  }
  return std::nullopt;
}

// All induced cycles of the given length (vertex sets may repeat in
// different traversal orders are not emitted; one ordered cycle per set).
inline std::vector<std::vector<int>> all_induced_cycles(const Graph& g, int length) {
  std::vector<std::vector<int>> out;
  if (length < 3 || length > g.order()) return out;
  // exhaustive over subsets for small hosts: every subset inducing a
  // connected 2-regular graph is a chordless cycle
  std::vector<int> verts;
  std::function<void(int, VertexSet)> rec = [&](int next, VertexSet chosen) {
    int have = vs::count(chosen);
    if (have == length) {
      bool regular = true;
      vs::for_each(chosen, [&](int v) {
        if (vs::count(g.adj[v] & chosen) != 2) regular = false;
      });
      if (regular && is_connected_within(g, chosen)) {
        // order the cycle
        std::vector<int> cyc;
        int start = vs::first(chosen);
        int prev = -1, cur = start;
        do {
          cyc.push_back(cur);
          VertexSet nb = g.adj[cur] & chosen;
          int a = vs::first(nb);
          int b = vs::first(nb & ~vs::single(a));
          int nxt = (a == prev) ? b : a;
          prev = cur;
          cur = nxt;
        } while (cur != start);
        out.push_back(cyc);
      }
      return;
    }
    if (next >= g.order() || have + (g.order() - next) < length) return;
    rec(next + 1, chosen | vs::single(next));
    rec(next + 1, chosen);
  };
  rec(0, 0);
  return out;
}

inline std::optional<HoleCertificate> find_odd_hole(const Graph& g) {
  for (int len = 5; len <= g.order(); len += 2)
    if (auto cyc = find_induced_cycle(g, len))
      return HoleCertificate{HoleCertificate::Kind::hole, *cyc};
  return std::nullopt;
}

// Certificate lives in complement(G); a length-5 antihole coincides with a
// 5-hole (C5 is self-complementary), reported as kind=hole in the host.
inline std::optional<HoleCertificate> find_odd_antihole(const Graph& g) {
  if (auto c5 = find_induced_cycle(g, 5))
    return HoleCertificate{HoleCertificate::Kind::hole, *c5};
  Graph co = complement(g);
  for (int len = 7; len <= g.order(); len += 2)
    if (auto cyc = find_induced_cycle(co, len))
      return HoleCertificate{HoleCertificate::Kind::antihole, *cyc};
  return std::nullopt;
}

// Re-validates a certificate against its host, independent of the search.
inline bool certificate_valid(const Graph& g, const HoleCertificate& cert) {
  int len = cert.length();
  if (len < 5 || len % 2 == 0) return false;
  const Graph host = cert.kind == HoleCertificate::Kind::hole ? g : complement(g);
  VertexSet seen = 0;
  for (int v : cert.cycle) {
    if (v < 0 || v >= host.order() || vs::contains(seen, v)) return false;
    seen |= vs::single(v);
  }
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (host.has_edge(cert.cycle[i], cert.cycle[j]) != consecutive) return false;
    }
  return true;
}

struct PerfectnessResult {
  bool perfect = true;
  std::optional<HoleCertificate> certificate;
};

inline PerfectnessResult is_perfect(const Graph& g) {
  if (auto h = find_odd_hole(g)) return {false, h};
  if (auto a = find_odd_antihole(g)) return {false, a};
  return {};
}

// Slow verified fallback: any odd subset >= 5 inducing a connected
// 2-regular graph, in G or its complement.
inline bool has_odd_hole_exhaustive(const Graph& g) {
  int n = g.order();
  for (int len = 5; len <= n; len += 2)
    if (!all_induced_cycles(g, len).empty()) return true;
  return false;
}

inline bool is_perfect_exhaustive(const Graph& g) {
  return !has_odd_hole_exhaustive(g) && !has_odd_hole_exhaustive(complement(g));
}

inline constexpr int kPerfectByDefinitionLimit = 9;

// chi(G') = omega(G') on every induced subgraph; the definition itself.
inline bool is_perfect_by_definition(const Graph& g) {
  int n = g.order();
  if (n > kPerfectByDefinitionLimit)
    throw std::invalid_argument("is_perfect_by_definition: order too large");
  for (VertexSet s = 1; s < (VertexSet{1} << n); ++s) {
    Graph h = induced_subgraph(g, s);
    int w = clique_number(h);
    if (!is_k_colourable(h, w)) return false;
  }
  return true;
}

struct BenRebeaResult {
  bool pass = true;
  // set when the hypotheses hold; violation iff antihole present but no C5
  bool applicable = false;
  std::optional<HoleCertificate> antihole;
};

// Ben Rebea's lemma as a consistency check: a connected claw-free graph
// with alpha >= 3 containing an odd antihole must contain an induced C5.
inline BenRebeaResult ben_rebea_check(const Graph& g) {
  BenRebeaResult res;
  if (g.order() == 0 || !is_connected(g)) return res;
  static const Graph claw = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  if (contains_induced(g, claw)) return res;
  if (independence_number(g) < 3) return res;
  res.applicable = true;
  Graph co = complement(g);
  std::optional<HoleCertificate> anti;
  for (int len = 5; len <= g.order(); len += 2)
    if (auto cyc = find_induced_cycle(co, len)) {
      anti = HoleCertificate{HoleCertificate::Kind::antihole, *cyc};
      break;
    }
  if (!anti) return res;
  res.antihole = anti;
  res.pass = find_induced_cycle(g, 5).has_value();
  return res;
}

}  // namespace clawperf
