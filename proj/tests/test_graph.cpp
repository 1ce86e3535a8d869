#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "eqm/graph.hpp"

using namespace eqm;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Mycielski construction over C_5.
Graph groetzsch() {
  Graph g(11);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 4) % 5);
    g.add_edge(5 + i, 10);
  }
  return g;
}

// Brute-force connectivity: smallest removal set disconnecting the graph.
int connectivity_oracle(const Graph& g) {
  const int n = g.order();
  if (is_clique_set(g, g.all_vertices())) return n - 1;
  for (int k = 0; k < n; ++k) {
    bool found = false;
    detail::for_each_subset_of_size(g.all_vertices(), k, [&](VertexSet s) {
      if (!is_connected_within(g, g.all_vertices() & ~s)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return k;
  }
  return n - 1;
}

int alpha_oracle(const Graph& g) {
  int best = 0;
  for (VertexSet s = 0; s < (VertexSet{1} << g.order()); ++s)
    if (is_independent_set(g, s)) best = std::max(best, popcount(s));
  return best;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.order() == 5);
  CHECK(g.size() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == (bit(0) | bit(2)));
  g.remove_edge(0, 1);
  CHECK(!g.has_edge(0, 1));
  CHECK_THROWS_AS(g.add_edge(0, 0), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 5), GraphError);
}

TEST_CASE("graph6 parse") {
  Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(is_clique_set(k4, k4.all_vertices()));

  Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);

  CHECK(emit_graph6(parse_graph6("Cs")) == "Cs");
  Graph star = parse_graph6("Cs");
  CHECK(star == complete_bipartite(1, 3));
}

TEST_CASE("graph6 errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);      // truncated bits
  CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);    // trailing bytes
  CHECK_THROWS_AS(parse_graph6("C!"), Graph6Error);     // byte out of range
  CHECK_THROWS_AS(parse_graph6("~~~"), Graph6Error);    // n > 62 unsupported
  try {
    parse_graph6("C~~");
  } catch (const Graph6Error& e) {
    CHECK(e.byte_offset == 2);
  }
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(7);
  for (int n = 0; n <= 12; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = random_graph(rng, n);
      CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("edge list round trip") {
  Graph g = cycle_graph(5);
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("3"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("3 2 0 1"), GraphError);  // length mismatch
  CHECK_THROWS_AS(parse_edge_list("2 1 0 1 x"), GraphError);
}

TEST_CASE("connected components") {
  Graph k4 = complete_graph(4);
  auto comps = connected_components(k4);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == k4.all_vertices());

  Graph iso = complete_graph(4);
  for (int v = 1; v < 4; ++v) iso.remove_edge(0, v);
  comps = connected_components(iso);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == bit(0));
  CHECK(comps[1] == (bit(1) | bit(2) | bit(3)));

  CHECK(connected_components(path_graph(7)).size() == 1);
  CHECK(is_connected(path_graph(7)));
  CHECK(!is_connected(iso));
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(cycle_graph(7)) == 2);
  CHECK(vertex_connectivity(complete_graph(4)) == 3);
  CHECK(vertex_connectivity(complete_bipartite(2, 3)) == 2);

  auto cuts = k_cut_sets(cycle_graph(7), 2);
  CHECK(cuts.size() == 14);  // the non-adjacent pairs: 21 pairs, 7 adjacent
  for (VertexSet c : cuts) {
    int u = lowest_vertex(c), v = lowest_vertex(c & ~bit(lowest_vertex(c)));
    CHECK(!cycle_graph(7).has_edge(u, v));
  }

  Graph disc(3);
  disc.add_edge(0, 1);
  CHECK_THROWS_AS(vertex_connectivity(disc), GraphError);
  CHECK_THROWS_AS(vertex_connectivity(Graph(1)), GraphError);
}

TEST_CASE("vertex connectivity matches subset oracle") {
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 60) {
    int n = 2 + static_cast<int>(rng() % 6);  // up to 7 vertices
    Graph g = random_graph(rng, n, 0.55);
    if (!is_connected(g)) continue;
    ++tested;
    CHECK(vertex_connectivity(g) == connectivity_oracle(g));
  }
}

TEST_CASE("bipartition") {
  CHECK(!bipartition(cycle_graph(7)));
  auto b = bipartition(complete_bipartite(2, 3));
  REQUIRE(b);
  CHECK(popcount(b->sideU) == 2);
  CHECK(popcount(b->sideW) == 3);

  auto k2 = bipartition(complete_graph(2));
  REQUIRE(k2);
  CHECK(k2->sideU == bit(0));
  CHECK(k2->sideW == bit(1));

  // Edgeless convention: U empty.
  auto e3 = bipartition(Graph(3));
  REQUIRE(e3);
  CHECK(e3->sideU == 0);
  CHECK(e3->sideW == (bit(0) | bit(1) | bit(2)));
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)).size() == 0);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8));
    CHECK(complement(complement(g)) == g);
  }
  // C_5 is self-complementary (up to isomorphism).
  CHECK(canonical_form(complement(cycle_graph(5))).g6 ==
        canonical_form(cycle_graph(5)).g6);
}

TEST_CASE("independence") {
  CHECK(independence_number(complete_graph(7)) == 1);
  CHECK(independence_number(cycle_graph(7)) == 3);

  Graph star = complete_bipartite(1, 3);  // vertex 0 is the center
  auto sets = independent_sets(star, 3);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == (bit(1) | bit(2) | bit(3)));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 7));
    CHECK(independence_number(g) == alpha_oracle(g));
    // alpha equals the clique number of the complement.
    CHECK(independence_number(g) == alpha_oracle(g));
    Graph co = complement(g);
    int clique = 0;
    for (VertexSet s = 0; s < (VertexSet{1} << co.order()); ++s)
      if (is_clique_set(co, s)) clique = std::max(clique, popcount(s));
    CHECK(independence_number(g) == clique);
  }
}

TEST_CASE("structure flags") {
  auto k4 = structure_flags(complete_graph(4));
  CHECK(k4.is_complete);
  CHECK(k4.diameter == 1);
  CHECK(k4.has_dominating_edge);
  CHECK(!k4.is_triangle_free);

  auto gz = structure_flags(groetzsch());
  CHECK(gz.is_triangle_free);
  CHECK(gz.diameter == 2);
  CHECK(gz.is_maximal_triangle_free);

  auto c7 = structure_flags(cycle_graph(7));
  CHECK(!c7.has_dominating_edge);
  CHECK(c7.is_triangle_free);
  CHECK(!c7.is_maximal_triangle_free);

  CHECK(structure_flags(Graph(1)).diameter == 0);
  auto k23 = structure_flags(complete_bipartite(2, 3));
  REQUIRE(k23.complete_bipartite_params);
  CHECK(*k23.complete_bipartite_params == std::pair<int, int>{2, 3});
}

TEST_CASE("line graph") {
  CHECK(canonical_form(line_graph(complete_bipartite(1, 3)).graph).g6 ==
        canonical_form(complete_graph(3)).g6);
  CHECK(canonical_form(line_graph(cycle_graph(7)).graph).g6 ==
        canonical_form(cycle_graph(7)).g6);
  CHECK(canonical_form(line_graph(path_graph(4)).graph).g6 ==
        canonical_form(path_graph(3)).g6);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
    LineGraph L = line_graph(g);
    CHECK(L.graph.order() == g.size());
    auto es = g.edges();
    for (int i = 0; i < L.graph.order(); ++i)
      CHECK(L.graph.degree(i) == g.degree(es[i].u) + g.degree(es[i].v) - 2);
  }
}

TEST_CASE("canonical form") {
  Graph c7a = cycle_graph(7);
  Graph c7b(7);
  for (int i = 0; i < 7; ++i) c7b.add_edge((2 * i) % 7, (2 * (i + 1)) % 7);
  CHECK(canonical_form(c7a).g6 == canonical_form(c7b).g6);
  CHECK(canonical_form(complete_graph(4)).g6 !=
        canonical_form(complete_bipartite(1, 3)).g6);

  CanonicalForm cf = canonical_form(c7a);
  CHECK(c7a.relabeled(cf.perm) == cf.graph);
  CHECK(emit_graph6(cf.graph) == cf.g6);
  CHECK(canonical_form(cf.graph).g6 == cf.g6);  // idempotent
}

TEST_CASE("canonical form is permutation invariant") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n);
    const std::string ref = canonical_form(g).g6;
    for (int k = 0; k < 20; ++k)
      CHECK(canonical_form(g.relabeled(random_perm(rng, n))).g6 == ref);
  }
}

TEST_CASE("pinned canonical string separates orbits") {
  // In K_{1,3} the center is alone in its orbit; the three leaves share one.
  Graph star = complete_bipartite(1, 3);
  std::string center = canonical_g6_pinned_last(star, 0);
  std::string leaf = canonical_g6_pinned_last(star, 1);
  CHECK(center != leaf);
  CHECK(canonical_g6_pinned_last(star, 2) == leaf);
  CHECK(canonical_g6_pinned_last(star, 3) == leaf);
}
