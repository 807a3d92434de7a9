#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "clawperf/catalog.hpp"
#include "clawperf/graph.hpp"
#include "clawperf/iso.hpp"

using namespace clawperf;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

// brute-force isomorphism: try all vertex bijections
bool iso_brute(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.order());
  for (int i = 0; i < a.order(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u)
      for (int v = u + 1; v < a.order() && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// brute-force induced containment via subsets + brute iso
bool contains_brute(const Graph& host, const Graph& pat) {
  int n = host.order(), k = pat.order();
  if (k > n) return false;
  std::vector<int> pick(k);
  std::function<bool(int, int)> rec = [&](int i, int from) -> bool {
    if (i == k) {
      VertexSet s = 0;
      for (int v : pick) s |= vs::single(v);
      return iso_brute(induced_subgraph(host, s), pat);
    }
    for (int v = from; v < n; ++v) {
      pick[i] = v;
      if (rec(i + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

TEST_CASE("containment basics") {
  Graph p6 = path_graph(6), p4 = path_graph(4), c9 = cycle_graph(9);
  auto e = contains_induced(p6, p4);
  REQUIRE(e.has_value());
  REQUIRE(embedding_valid(p6, p4, *e));
  REQUIRE_FALSE(contains_induced(c9, claw_graph()).has_value());
  // Z1 inside Z2
  auto z = contains_induced(z_graph(2), z_graph(1));
  REQUIRE(z.has_value());
  REQUIRE(embedding_valid(z_graph(2), z_graph(1), *z));
}

TEST_CASE("is_free") {
  REQUIRE(is_free(cycle_graph(9), {claw_graph(), b_graph(1, 2)}));
  REQUIRE_FALSE(is_free(path_graph(6), {path_graph(4)}));
}

TEST_CASE("containment matches brute force on random pairs") {
  std::mt19937 rng(31);
  for (int t = 0; t < 150; ++t) {
    Graph host = random_graph(rng, 4 + t % 5, 0.45);
    Graph pat = random_graph(rng, 2 + t % 4, 0.5);
    bool fast = contains_induced(host, pat).has_value();
    bool slow = contains_brute(host, pat);
    REQUIRE(fast == slow);
    if (fast) REQUIRE(embedding_valid(host, pat, *contains_induced(host, pat)));
  }
}

TEST_CASE("containment with a required vertex") {
  Graph c9 = cycle_graph(9);
  Graph f19 = with_vertex(c9, vs::from_vector({0, 1}));  // adds vertex 9
  Graph k3 = complete_graph(3);
  // the only triangle is {0,1,9}
  REQUIRE(contains_induced_using(f19, k3, 9).has_value());
  REQUIRE(contains_induced_using(f19, k3, 0).has_value());
  REQUIRE_FALSE(contains_induced_using(f19, k3, 4).has_value());
  auto e = contains_induced_using(f19, k3, 9);
  REQUIRE(embedding_valid(f19, k3, *e));
  bool uses = false;
  for (int v : e->map) uses |= (v == 9);
  REQUIRE(uses);
}

TEST_CASE("canonical form: 11 classes on 4 vertices, brute-force derived") {
  std::set<std::string> forms;
  for (int mask = 0; mask < 64; ++mask) {
    Graph g(4);
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    forms.insert(canonical_form(g));
  }
  REQUIRE(forms.size() == 11);
}

TEST_CASE("canonical form invariant under relabeling") {
  std::mt19937 rng(37);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 11;
    Graph g = random_graph(rng, n, 0.2 + 0.06 * (t % 10));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(canonical_form(g) == canonical_form(relabel(g, perm)));
    REQUIRE(canonical_form(g) == canonical_form(complement(complement(g))));
  }
  // highly symmetric inputs
  REQUIRE(canonical_form(complete_graph(12)) == canonical_form(complete_graph(12)));
  std::vector<int> perm(12);
  for (int i = 0; i < 12; ++i) perm[i] = (i * 5 + 3) % 12;
  REQUIRE(canonical_form(cycle_graph(12)) == canonical_form(relabel(cycle_graph(12), perm)));
}

TEST_CASE("canonical labelling reproduces the canonical string") {
  std::mt19937 rng(41);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(rng, 2 + t % 9, 0.5);
    auto c = canonical(g);
    REQUIRE(static_cast<int>(c.labelling.size()) == g.order());
    Graph h = relabel(g, [&] {
      std::vector<int> inv(g.order());
      for (int pos = 0; pos < g.order(); ++pos) inv[c.labelling[pos]] = pos;
      return inv;
    }());
    // h is g written in canonical order; its identity labelling must give
    // the same form
    REQUIRE(canonical_form(h) == c.form);
  }
}

TEST_CASE("are_isomorphic agrees with brute force") {
  std::mt19937 rng(43);
  // exhaustive-ish: all pairs among random pools at small n
  for (int n = 2; n <= 6; ++n) {
    std::vector<Graph> pool;
    for (int t = 0; t < 14; ++t) pool.push_back(random_graph(rng, n, 0.5));
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = i; j < pool.size(); ++j)
        REQUIRE(are_isomorphic(pool[i], pool[j]) == iso_brute(pool[i], pool[j]));
  }
  // positives by construction at n = 7
  for (int t = 0; t < 30; ++t) {
    Graph g = random_graph(rng, 7, 0.5);
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(are_isomorphic(g, relabel(g, perm)));
  }
  REQUIRE(are_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  REQUIRE(are_isomorphic(disjoint_union({Graph(1), z_graph(1)}),
                         disjoint_union({z_graph(1), Graph(1)})));
}

TEST_CASE("hereditariness of freeness on random induced subgraphs") {
  std::mt19937 rng(47);
  std::vector<Graph> patterns{claw_graph(), b_graph(1, 2)};
  int checked = 0;
  while (checked < 40) {
    Graph g = random_graph(rng, 9, 0.35);
    if (!is_free(g, patterns)) continue;
    ++checked;
    std::uniform_int_distribution<VertexSet> d(0, vs::universe(9));
    for (int t = 0; t < 20; ++t) REQUIRE(is_free(induced_subgraph(g, d(rng) & vs::universe(9)), patterns));
  }
}

TEST_CASE("containment chain K1 < P3 < P5 < K1uP5") {
  Catalog cat;
  Graph k1 = cat.named("K1"), p3 = cat.named("P3"), p5 = cat.named("P5"),
        k1up5 = cat.named("K1uP5");
  REQUIRE(contains_induced(p3, k1).has_value());
  REQUIRE(contains_induced(p5, p3).has_value());
  REQUIRE(contains_induced(k1up5, p5).has_value());
  REQUIRE(contains_induced(k1up5, k1).has_value());
}

TEST_CASE("automorphisms and orbits") {
  auto auts = all_automorphisms(cycle_graph(5));
  REQUIRE(auts.size() == 10);  // dihedral group
  auto orb = vertex_orbits(cycle_graph(5));
  for (int v = 1; v < 5; ++v) REQUIRE(orb[v] == orb[0]);
  auto orb_path = vertex_orbits(path_graph(4));
  REQUIRE(orb_path[0] == orb_path[3]);
  REQUIRE(orb_path[1] == orb_path[2]);
  REQUIRE(orb_path[0] != orb_path[1]);
}
