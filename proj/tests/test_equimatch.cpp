#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqm/census.hpp"
#include "eqm/equimatch.hpp"

using namespace eqm;

TEST_CASE("equimatchability") {
  CHECK(is_equimatchable(cycle_graph(7)).value);
  CHECK(is_equimatchable(complete_bipartite(1, 3)).value);
  CHECK(is_equimatchable(Graph(3)).value);  // edgeless convention

  auto p7 = is_equimatchable(path_graph(7));
  CHECK(!p7.value);
  REQUIRE(p7.witness);
  std::set<int> sizes{p7.witness->first.size(), p7.witness->second.size()};
  CHECK(sizes == std::set<int>{2, 3});
}

TEST_CASE("vertex classes") {
  Graph star = complete_bipartite(1, 3);  // center is vertex 0
  CHECK(vertex_class(star, 0) == VertexClass::Strong);
  CHECK(vertex_class(star, 1) == VertexClass::Weak);
  for (int v = 0; v < 4; ++v)
    CHECK(vertex_class(cycle_graph(4), v) == VertexClass::Strong);
  for (int v = 0; v < 7; ++v)
    CHECK(vertex_class(cycle_graph(7), v) == VertexClass::Weak);
}

TEST_CASE("G - v equimatchability prediction") {
  CHECK(g_minus_v_equimatchable_predicted(complete_bipartite(1, 3), 0));
  CHECK(is_equimatchable(complete_bipartite(1, 3).minus_vertex(0)).value);

  for (int v = 0; v < 7; ++v) {
    CHECK(!g_minus_v_equimatchable_predicted(cycle_graph(7), v));
    CHECK(!is_equimatchable(cycle_graph(7).minus_vertex(v)).value);
  }
  CHECK(g_minus_v_equimatchable_predicted(cycle_graph(4), 0));

  CHECK_THROWS_AS(g_minus_v_equimatchable_predicted(path_graph(7), 0),
                  GraphError);
}

TEST_CASE("critical edges, definition method") {
  for (const auto& e : cycle_graph(7).edges())
    CHECK(is_critical_edge_definition(cycle_graph(7), e.u, e.v));
  for (const auto& e : complete_bipartite(1, 3).edges())
    CHECK(!is_critical_edge_definition(complete_bipartite(1, 3), e.u, e.v));
  for (const auto& e : complete_graph(4).edges())
    CHECK(is_critical_edge_definition(complete_graph(4), e.u, e.v));
  CHECK_THROWS_AS(is_critical_edge_definition(cycle_graph(7), 0, 2),
                  GraphError);  // not an edge
}

TEST_CASE("critical edges, matching method") {
  CHECK(is_critical_edge_matching(complete_graph(4), 0, 1));
  CHECK(is_critical_edge_matching(cycle_graph(7), 0, 1));
  for (const auto& e : complete_graph(7).edges())
    CHECK(!is_critical_edge_matching(complete_graph(7), e.u, e.v));
}

TEST_CASE("critical-edge methods agree on all small equimatchable graphs") {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (!is_equimatchable(g).value) continue;
      for (const auto& e : g.edges())
        CHECK(is_critical_edge_definition(g, e.u, e.v) ==
              is_critical_edge_matching(g, e.u, e.v));
    }
}

TEST_CASE("criticality classes") {
  CHECK(is_ECE(complete_graph(4)).value);

  CHECK(is_ECE(cycle_graph(7)).value);
  CHECK(is_VCE(cycle_graph(7)).value);
  auto ese7 = is_ESE(cycle_graph(7));
  CHECK(!ese7.value);
  CHECK(ese7.offending_edge);  // a critical edge witnesses non-stability

  Graph k7 = complete_graph(7);
  CHECK(!is_ECE(k7).value);
  auto v7 = is_VCE(k7);
  CHECK(!v7.value);
  CHECK(v7.offending_vertex);
  CHECK(is_ESE(k7).value);
  CHECK(is_EFC(k7));

  auto ece_p7 = is_ECE(path_graph(7));
  CHECK(!ece_p7.value);
  CHECK(ece_p7.equim_witness);  // not even equimatchable

  // K_1 conventions: not VCE, vacuously ECE/ESE over an empty edge set.
  CHECK(!is_VCE(Graph(1)).value);
  CHECK(is_ECE(Graph(1)).value);
}

TEST_CASE("independent-triple witness") {
  CHECK(!efc_triple_witness(cycle_graph(7)));
  CHECK(!efc_triple_witness(complete_graph(7)));

  auto w = efc_triple_witness(cycle_graph(9));
  REQUIRE(w);
  CHECK(popcount(*w) == 3);
  CHECK(is_independent_set(cycle_graph(9), *w));
  CHECK(perfect_matching_avoiding(cycle_graph(9), *w));

  CHECK_THROWS_AS(efc_triple_witness(cycle_graph(4)), GraphError);
}

TEST_CASE("well-covered and shedding") {
  CHECK(is_well_covered(complete_graph(3)));
  for (int v = 0; v < 3; ++v) CHECK(is_shedding_vertex(complete_graph(3), v));

  CHECK(!is_well_covered(path_graph(3)));

  CHECK(is_well_covered(cycle_graph(7)));
  for (int v = 0; v < 7; ++v) CHECK(!is_shedding_vertex(cycle_graph(7), v));
}

TEST_CASE("ECE and ESE are disjoint on small graphs") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (g.size() < 1) continue;
      CHECK(!(is_ECE(g).value && is_ESE(g).value));
    }
}

TEST_CASE("VCE exclusions on small graphs") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (bipartition(g)) CHECK(!is_VCE(g).value);
      if (is_clique_set(g, g.all_vertices())) CHECK(!is_VCE(g).value);
    }
}

TEST_CASE("property report consistency") {
  PropertyReport r = property_report(cycle_graph(7));
  CHECK(r.n == 7);
  CHECK(r.m == 7);
  CHECK(*r.nu == 3);
  CHECK(*r.connectivity == 2);
  CHECK(*r.maximal_sizes == std::set<int>{3});
  CHECK(*r.equimatchable);
  CHECK(*r.factor_critical);
  CHECK(*r.efc);
  CHECK(*r.ece);
  CHECK(*r.vce);
  CHECK(!*r.ese);
  CHECK(!*r.bipartite);
  CHECK(!*r.randomly_matchable);

  nlohmann::json j = report_to_json(r);
  CHECK(j["flags"]["ece"] == true);
  CHECK(j["witnesses"].contains("critical_edge"));

  // Negative flags carry witnesses.
  PropertyReport p7 = property_report(path_graph(7));
  CHECK(report_to_json(p7)["witnesses"].contains("unequal_maximal_matchings"));

  // Flag implications across a swath of small graphs.
  for (const Graph& g : enumerate_connected(5)) {
    PropertyReport x = property_report(g);
    if (*x.ece && g.size() >= 1) CHECK(*x.equimatchable);
    if (*x.efc) CHECK((*x.factor_critical && *x.equimatchable));
    if (*x.randomly_matchable) CHECK(*x.equimatchable);
  }
}

TEST_CASE("report options limit work") {
  ReportOptions none = ReportOptions::none();
  PropertyReport r = property_report(cycle_graph(7), none);
  CHECK(!r.nu);
  CHECK(!r.ece);
  nlohmann::json j = report_to_json(r);
  CHECK(j["flags"].empty());
}
