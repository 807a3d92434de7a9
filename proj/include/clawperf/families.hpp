// Constructors for the infinite witness families F1-F4 and cycle
// inflations, the inflation recognizer, and the cycle-attachment profiler.
#pragma once

#include <numeric>

#include "clawperf/catalog.hpp"
#include "clawperf/graph.hpp"
#include "clawperf/holes.hpp"
#include "clawperf/invariants.hpp"
#include "clawperf/iso.hpp"

namespace clawperf {

enum class FamilyId { F1, F2, F3, F4, None };

inline const char* family_name(FamilyId id) {
  switch (id) {
    case FamilyId::F1: return "F1";
    case FamilyId::F2: return "F2";
    case FamilyId::F3: return "F3";
    case FamilyId::F4: return "F4";
    default: return "none";
  }
}

struct FamilySpec {
  enum class Kind { F1, F2, F3, F4, Inflation };
  Kind kind = Kind::F1;
  int param = 0;                    // ell (odd, >= 9) for F1/F2; t >= 0 for F3/F4
  int k = 0;                        // inflation cycle length, >= 5
  std::vector<int> multiplicities;  // inflation class sizes, all >= 1
};

// New vertex adjacent to v and all its neighbours (a true twin of v).
inline Graph add_true_twin(const Graph& g, int v) {
  return with_vertex(g, g.adj[v] | vs::single(v));
}

inline Graph inflate_cycle(int k, const std::vector<int>& multiplicities) {
  if (k < 5) throw std::invalid_argument("inflate_cycle: k >= 5");
  if (static_cast<int>(multiplicities.size()) != k)
    throw std::invalid_argument("inflate_cycle: need k multiplicities");
  int total = 0;
  for (int m : multiplicities) {
    if (m < 1) throw std::invalid_argument("inflate_cycle: multiplicities >= 1");
    total += m;
  }
  if (total > kMaxOrder) throw std::invalid_argument("inflate_cycle: total exceeds 64");
  Graph g(total);
  std::vector<std::pair<int, int>> range(k);  // [begin, end) of each class
  int at = 0;
  for (int i = 0; i < k; ++i) {
    range[i] = {at, at + multiplicities[i]};
    at += multiplicities[i];
  }
  for (int i = 0; i < k; ++i) {
    auto [b, e] = range[i];
    for (int u = b; u < e; ++u)
      for (int v = u + 1; v < e; ++v) g.add_edge(u, v);  // class clique
    auto [nb, ne] = range[(i + 1) % k];
    for (int u = b; u < e; ++u)
      for (int v = nb; v < ne; ++v) g.add_edge(u, v);  // join to next class
  }
  return g;
}

namespace detail {

// Lexicographically minimal rotation/reflection of a cyclic sequence.
inline std::vector<int> dihedral_min(const std::vector<int>& seq) {
  int k = static_cast<int>(seq.size());
  std::vector<int> best = seq;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> s = seq;
    if (dir) std::reverse(s.begin(), s.end());
    for (int r = 0; r < k; ++r) {
      std::vector<int> rot(k);
      for (int i = 0; i < k; ++i) rot[i] = s[(i + r) % k];
      if (rot < best) best = rot;
    }
  }
  return best;
}

}  // namespace detail

struct InflationResult {
  int k = 0;
  std::vector<int> multiplicities;  // dihedral-canonical
};

// Succeeds iff G is an inflation of C_k for some k >= 5: partition by
// closed-neighbourhood equality (true twins; classes are automatically
// cliques, uniformly joined) and verify the quotient is a cycle.
inline std::optional<InflationResult> recognize_inflation(const Graph& g) {
  int n = g.order();
  if (n < 5) return std::nullopt;
  std::vector<VertexSet> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = g.adj[v] | vs::single(v);
  std::vector<int> cls(n, -1);
  std::vector<int> rep;
  for (int v = 0; v < n; ++v) {
    for (size_t c = 0; c < rep.size(); ++c)
      if (closed[v] == closed[rep[c]]) {
        cls[v] = static_cast<int>(c);
        break;
      }
    if (cls[v] < 0) {
      cls[v] = static_cast<int>(rep.size());
      rep.push_back(v);
    }
  }
  int k = static_cast<int>(rep.size());
  if (k < 5) return std::nullopt;
  Graph quotient(k);
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(rep[a], rep[b])) quotient.add_edge(a, b);
  if (!is_cycle_graph(quotient)) return std::nullopt;
  // walk the quotient cycle collecting class sizes
  std::vector<int> size(k, 0);
  for (int v = 0; v < n; ++v) ++size[cls[v]];
  std::vector<int> seq;
  int prev = -1, cur = 0;
  do {
    seq.push_back(size[cur]);
    VertexSet nb = quotient.adj[cur];
    int a = vs::first(nb), b = vs::first(nb & ~vs::single(a));
    int nxt = (a == prev) ? b : a;
    prev = cur;
    cur = nxt;
  } while (cur != 0);
  return InflationResult{k, detail::dihedral_min(seq)};
}

inline Graph build_family(const Catalog& cat, const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::F1:
    case FamilySpec::Kind::F2: {
      int ell = spec.param;
      if (ell < 9 || ell % 2 == 0)
        throw std::invalid_argument("F1/F2 parameter must be odd and >= 9");
      VertexSet nbhd = spec.kind == FamilySpec::Kind::F1 ? vs::from_vector({0, 1})
                                                         : vs::from_vector({0, 1, 2});
      return with_vertex(cycle_graph(ell), nbhd);
    }
    case FamilySpec::Kind::F3:
    case FamilySpec::Kind::F4: {
      if (spec.param < 0) throw std::invalid_argument("F3/F4 parameter must be >= 0");
      const char* base_name = spec.kind == FamilySpec::Kind::F3 ? "F3_base" : "F4_base";
      const CatalogEntry* e = cat.find(base_name);
      if (!e) throw std::invalid_argument(std::string("catalog missing ") + base_name);
      auto it = e->labels.find("distinguished");
      if (it == e->labels.end())
        throw std::invalid_argument(std::string(base_name) + " lacks a distinguished vertex");
      Graph g = e->graph;
      for (int t = 0; t < spec.param; ++t) g = add_true_twin(g, it->second);
      return g;
    }
    case FamilySpec::Kind::Inflation:
      return inflate_cycle(spec.k, spec.multiplicities);
  }
  throw std::logic_error("unreachable");
}

enum class AttachmentType { K2, P3, P4, C5, TwoK2 };

inline const char* attachment_name(AttachmentType t) {
  switch (t) {
    case AttachmentType::K2: return "K2";
    case AttachmentType::P3: return "P3";
    case AttachmentType::P4: return "P4";
    case AttachmentType::C5: return "C5";
    case AttachmentType::TwoK2: return "2K2";
  }
  return "?";
}

struct AttachmentResult {
  std::optional<AttachmentType> type;
  // set only when the host is claw-free yet the profile falls outside the
  // allowed set; must never happen (test hook)
  bool violation = false;
};

// Classifies the graph induced by N(x) on an induced cycle C of length >= 5.
inline AttachmentResult attachment_profile(const Graph& g, VertexSet cycle_set, int x) {
  Graph cyc = induced_subgraph(g, cycle_set);
  if (!is_cycle_graph(cyc) || cyc.order() < 5)
    throw std::invalid_argument("attachment_profile: C must induce a cycle of length >= 5");
  if (vs::contains(cycle_set, x))
    throw std::invalid_argument("attachment_profile: x must lie outside C");
  VertexSet s = g.adj[x] & cycle_set;
  if (!s) throw std::invalid_argument("attachment_profile: x has no neighbour on C");
  Graph h = induced_subgraph(g, s);
  int k = h.order(), m = h.edge_count();
  auto degrees_sorted = [&] {
    std::vector<int> d;
    for (int v = 0; v < k; ++v) d.push_back(h.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  }();
  AttachmentResult res;
  if (k == 2 && m == 1)
    res.type = AttachmentType::K2;
  else if (k == 3 && m == 2 && is_connected(h))
    res.type = AttachmentType::P3;
  else if (k == 4 && m == 3 && is_connected(h) && degrees_sorted == std::vector<int>{1, 1, 2, 2})
    res.type = AttachmentType::P4;
  else if (k == 5 && is_cycle_graph(h) && vs::count(cycle_set) == 5)
    res.type = AttachmentType::C5;
  else if (k == 4 && m == 2 && degrees_sorted == std::vector<int>{1, 1, 1, 1} &&
           vs::count(cycle_set) >= 6)
    res.type = AttachmentType::TwoK2;
  if (!res.type) res.violation = !contains_induced(g, claw_graph()).has_value();
  return res;
}

inline std::vector<std::string> family_freeness_names(FamilyId id) {
  switch (id) {
    case FamilyId::F1: return {"C4", "C5", "C6", "C7", "K4", "D", "H"};
    case FamilyId::F2: return {"B"};
    case FamilyId::F3: return {"5K1", "3K1uK2", "K1uZ2", "3K2", "K2uP4"};
    case FamilyId::F4: return {"K2uK3"};
    default: return {};
  }
}

// pass iff G is claw-free, connected, alpha >= 4, contains an induced odd
// hole, and avoids its family's stated pattern list.
inline std::vector<std::string> check_family_properties(const Catalog& cat, const Graph& g,
                                                        FamilyId id) {
  std::vector<std::string> failures;
  if (contains_induced(g, claw_graph())) failures.push_back("not K1,3-free");
  if (!is_connected(g)) failures.push_back("not connected");
  if (independence_number(g) < 4) failures.push_back("independence number below 4");
  if (!find_odd_hole(g)) failures.push_back("no induced odd hole");
  for (const auto& name : family_freeness_names(id))
    if (contains_induced(g, cat.named(name)))
      failures.push_back("contains forbidden " + name);
  return failures;
}

struct BullObservationResult {
  bool pass = true;
  bool applicable = false;    // all hypotheses hold
  std::string branch;         // which hypothesis failed, or "applicable"
  std::vector<int> cycle_lengths;  // induced cycle lengths >= 2p+3 found
  std::optional<InflationResult> recognized;
};

// Observation: a connected {K1,3, B_{1,p}}-free graph containing an induced
// C_k with k >= 2p+3 is an inflation of C_k.
inline BullObservationResult observation_bull_check(const Graph& g, int p) {
  if (p < 2) throw std::invalid_argument("observation_bull_check: p >= 2");
  BullObservationResult res;
  if (g.order() == 0 || !is_connected(g)) {
    res.branch = "not connected";
    return res;
  }
  if (contains_induced(g, claw_graph())) {
    res.branch = "not K1,3-free";
    return res;
  }
  if (contains_induced(g, b_graph(1, p))) {
    res.branch = "contains B_{1,p}";
    return res;
  }
  for (int len = 2 * p + 3; len <= g.order(); ++len)
    if (find_induced_cycle(g, len)) res.cycle_lengths.push_back(len);
  if (res.cycle_lengths.empty()) {
    res.branch = "no induced C_k with k >= 2p+3";
    return res;
  }
  res.applicable = true;
  res.branch = "applicable";
  res.recognized = recognize_inflation(g);
  res.pass = res.recognized.has_value() && res.cycle_lengths.size() == 1 &&
             res.recognized->k == res.cycle_lengths.front();
  return res;
}

}  // namespace clawperf
