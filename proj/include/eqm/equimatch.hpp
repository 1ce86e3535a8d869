#ifndef EQM_EQUIMATCH_HPP
#define EQM_EQUIMATCH_HPP

// Decision layer: equimatchability, strong/weak vertices, critical edges
// (definition and matching methods), ECE / VCE / ESE / EFC tests, and the
// well-covered / shedding-vertex tests used by the line-graph bridge.

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "eqm/graph.hpp"
#include "eqm/matching.hpp"

namespace eqm {

// Matching within `allowed` saturating every vertex of `need` (need must be
// a subset of allowed's closed span; edges may leave `need`).
inline std::optional<Matching> matching_saturating(const Graph& g,
                                                   VertexSet need,
                                                   VertexSet allowed) {
  Matching m;
  auto rec = [&](auto&& self, VertexSet todo, VertexSet left) -> bool {
    if (todo == 0) return true;
    const int x = lowest_vertex(todo);
    EQM_FOR_EACH_VERTEX(w, g.neighbors(x) & left) {
      if (w == x) continue;
      m.add(x, w);
      if (self(self, todo & ~bit(x) & ~bit(w), left & ~bit(x) & ~bit(w)))
        return true;
      m.edges.pop_back();
    }
    return false;
  };
  if (!rec(rec, need & allowed, allowed)) return std::nullopt;
  m.normalize();
  return m;
}

struct EquimatchResult {
  bool value = false;
  // Two maximal matchings of different sizes when not equimatchable.
  std::optional<std::pair<Matching, Matching>> witness;

  explicit operator bool() const { return value; }
};

inline EquimatchResult is_equimatchable(const Graph& g) {
  MaximalSizes ms = maximal_matching_sizes(g, /*short_circuit=*/true);
  EquimatchResult r;
  r.value = ms.sizes.size() <= 1;
  if (!r.value) {
    auto it = ms.witness.begin();
    Matching a = it->second;
    Matching b = std::next(it)->second;
    r.witness = {std::move(a), std::move(b)};
  }
  return r;
}

// ---------------------------------------------------------------------------
// Strong / weak vertices

enum class VertexClass { Strong, Weak };

// Strong: every maximal matching saturates v. When the graph is
// equimatchable, cross-checked against nu(G-v) = nu(G) - 1.
inline VertexClass vertex_class(const Graph& g, int v) {
  bool strong = true;
  enumerate_maximal_matchings(g, [&](const Matching& m) {
    if (!(m.covered() & bit(v))) {
      strong = false;
      return false;
    }
    return true;
  });
  if (is_equimatchable(g).value) {
    const int nu = max_matching_size(g);
    const int nu_minus = max_matching_size(g.minus_vertex(v));
    if (strong != (nu_minus == nu - 1))
      throw GraphError("strong-vertex enumeration disagrees with nu identity");
  }
  return strong ? VertexClass::Strong : VertexClass::Weak;
}

// Predicted equimatchability of G-v: v strong, or all of N(v) strong in G-v.
// The prediction is compared against the direct answer by the theorem
// registry, not here.
inline bool g_minus_v_equimatchable_predicted(const Graph& g, int v) {
  if (!is_equimatchable(g).value)
    throw GraphError("g_minus_v prediction requires an equimatchable graph");
  if (vertex_class(g, v) == VertexClass::Strong) return true;
  std::vector<int> labels;
  Graph h = g.induced(g.all_vertices() & ~bit(v), &labels);
  for (int u = 0; u < h.order(); ++u) {
    if (!(g.neighbors(v) & bit(labels[u]))) continue;
    if (vertex_class(h, u) == VertexClass::Weak) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Critical edges

inline bool is_critical_edge_definition(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw GraphError("critical-edge test: edge not present");
  if (!is_equimatchable(g).value)
    throw GraphError("critical-edge test requires an equimatchable graph");
  return !is_equimatchable(g.minus_edge(u, v)).value;
}

// Lemma form: uv is critical iff some matching contains uv and saturates
// N({u,v}).
inline bool is_critical_edge_matching(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw GraphError("critical-edge test: edge not present");
  if (!is_equimatchable(g).value)
    throw GraphError("critical-edge test requires an equimatchable graph");
  const VertexSet t =
      (g.neighbors(u) | g.neighbors(v)) & ~bit(u) & ~bit(v);
  return matching_saturating(g, t, g.all_vertices() & ~bit(u) & ~bit(v))
      .has_value();
}

// ---------------------------------------------------------------------------
// Criticality classes

struct CriticalityResult {
  bool value = false;
  std::optional<Edge> offending_edge;   // edge whose removal stays equimatchable
  std::optional<int> offending_vertex;  // vertex whose removal stays equimatchable
  std::optional<std::pair<Matching, Matching>> equim_witness;

  explicit operator bool() const { return value; }
};

inline CriticalityResult is_ECE(const Graph& g) {
  CriticalityResult r;
  auto eq = is_equimatchable(g);
  if (!eq.value) {
    r.equim_witness = std::move(eq.witness);
    return r;
  }
  for (const auto& e : g.edges()) {
    if (is_equimatchable(g.minus_edge(e.u, e.v)).value) {
      r.offending_edge = e;
      return r;
    }
  }
  r.value = true;
  return r;
}

inline CriticalityResult is_VCE(const Graph& g) {
  CriticalityResult r;
  auto eq = is_equimatchable(g);
  if (!eq.value) {
    r.equim_witness = std::move(eq.witness);
    return r;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (is_equimatchable(g.minus_vertex(v)).value) {
      r.offending_vertex = v;
      return r;
    }
  }
  r.value = true;
  return r;
}

inline CriticalityResult is_ESE(const Graph& g) {
  CriticalityResult r;
  auto eq = is_equimatchable(g);
  if (!eq.value) {
    r.equim_witness = std::move(eq.witness);
    return r;
  }
  for (const auto& e : g.edges()) {
    if (!is_equimatchable(g.minus_edge(e.u, e.v)).value) {
      r.offending_edge = e;  // a critical edge: not edge-stable
      return r;
    }
  }
  r.value = true;
  return r;
}

inline bool is_EFC(const Graph& g) {
  return is_factor_critical(g) && is_equimatchable(g).value;
}

// Independent triple I with a perfect matching of G \ I; exists iff the
// factor-critical graph is not equimatchable.
inline std::optional<VertexSet> efc_triple_witness(const Graph& g) {
  if (!is_factor_critical(g))
    throw GraphError("efc_triple_witness requires a factor-critical graph");
  MatchingOracle o(g);
  std::optional<VertexSet> witness;
  independent_sets(g, 3, [&](VertexSet triple) {
    if (o.has_perfect_matching(g.all_vertices() & ~triple)) {
      witness = triple;
      return false;
    }
    return true;
  });
  if (witness.has_value() == is_equimatchable(g).value)
    throw GraphError("efc triple witness disagrees with equimatchability");
  return witness;
}

// ---------------------------------------------------------------------------
// Well-covered / shedding (line-graph bridge vocabulary)

template <typename F>
void enumerate_maximal_independent_sets(const Graph& g, F&& fn) {
  auto rec = [&](auto&& self, VertexSet chosen, VertexSet dominated,
                 VertexSet excluded) -> bool {
    const VertexSet undecided = g.all_vertices() & ~dominated & ~excluded;
    if (undecided == 0) {
      if (excluded & ~dominated) return true;  // some excluded vertex addable
      return fn(chosen);
    }
    const int u = lowest_vertex(undecided);
    if (!self(self, chosen | bit(u), dominated | bit(u) | g.neighbors(u),
              excluded))
      return false;
    return self(self, chosen, dominated, excluded | bit(u));
  };
  rec(rec, 0, 0, 0);
}

inline bool is_well_covered(const Graph& g) {
  int seen = -1;
  bool wc = true;
  enumerate_maximal_independent_sets(g, [&](VertexSet s) {
    const int k = popcount(s);
    if (seen == -1) seen = k;
    else if (seen != k) {
      wc = false;
      return false;
    }
    return true;
  });
  return wc;
}

// x is shedding iff every independent set of G - N[x] extends by some
// neighbor of x.
inline bool is_shedding_vertex(const Graph& g, int x) {
  const VertexSet residual = g.all_vertices() & ~g.neighbors(x) & ~bit(x);
  auto rec = [&](auto&& self, VertexSet avail, VertexSet compat) -> bool {
    if (compat == 0) return false;
    EQM_FOR_EACH_VERTEX(w, avail) {
      const VertexSet higher = avail & ~((bit(w) << 1) - 1);
      if (!self(self, higher & ~g.neighbors(w), compat & ~g.neighbors(w)))
        return false;
    }
    return true;
  };
  return rec(rec, residual, g.neighbors(x));
}

// ---------------------------------------------------------------------------
// PropertyReport

struct PropertyReport {
  int n = 0;
  int m = 0;
  std::optional<int> nu;
  std::optional<int> connectivity;
  std::optional<std::set<int>> maximal_sizes;
  std::optional<bool> equimatchable, factor_critical, randomly_matchable,
      bipartite, efc, ece, vce, ese, well_covered;
  nlohmann::json witnesses = nlohmann::json::object();
};

inline nlohmann::json matching_to_json(const Matching& m) {
  nlohmann::json a = nlohmann::json::array();
  Matching s = m;
  s.normalize();
  for (const auto& e : s.edges)
    a.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
  return a;
}

inline nlohmann::json vertex_set_to_json(VertexSet s) {
  nlohmann::json a = nlohmann::json::array();
  EQM_FOR_EACH_VERTEX(v, s) a.push_back(v);
  return a;
}

struct ReportOptions {
  bool basics = true;        // nu, connectivity, maximal sizes
  bool equimatchable = true;
  bool factor_critical = true;
  bool randomly_matchable = true;
  bool bipartite = true;
  bool efc = true;
  bool ece = true;
  bool vce = true;
  bool ese = true;
  bool well_covered = false;  // opt-in; meaningful for line graphs

  static ReportOptions none() {
    ReportOptions o;
    o.basics = o.equimatchable = o.factor_critical = o.randomly_matchable =
        o.bipartite = o.efc = o.ece = o.vce = o.ese = false;
    return o;
  }
};

inline PropertyReport property_report(const Graph& g,
                                      const ReportOptions& opt = {}) {
  PropertyReport r;
  r.n = g.order();
  r.m = g.size();
  if (opt.basics) {
    r.nu = max_matching_size(g);
    if (is_connected(g) && g.order() >= 2)
      r.connectivity = vertex_connectivity(g);
    r.maximal_sizes = maximal_matching_sizes(g).sizes;
  }
  if (opt.equimatchable || opt.efc || opt.ece || opt.vce || opt.ese) {
    auto eq = is_equimatchable(g);
    r.equimatchable = eq.value;
    if (eq.witness) {
      r.witnesses["unequal_maximal_matchings"] = {
          matching_to_json(eq.witness->first),
          matching_to_json(eq.witness->second)};
    }
  }
  if (opt.factor_critical || opt.efc)
    r.factor_critical = is_factor_critical(g);
  if (opt.randomly_matchable && is_connected(g))
    r.randomly_matchable = is_randomly_matchable(g);
  if (opt.bipartite) r.bipartite = bipartition(g).has_value();
  if (opt.efc) r.efc = *r.factor_critical && *r.equimatchable;
  if (opt.ece) {
    auto e = is_ECE(g);
    r.ece = e.value;
    if (e.offending_edge)
      r.witnesses["non_critical_edge"] = std::to_string(e.offending_edge->u) +
                                         "-" +
                                         std::to_string(e.offending_edge->v);
  }
  if (opt.vce) {
    auto v = is_VCE(g);
    r.vce = v.value;
    if (v.offending_vertex)
      r.witnesses["vertex_with_equimatchable_removal"] = *v.offending_vertex;
  }
  if (opt.ese) {
    auto e = is_ESE(g);
    r.ese = e.value;
    if (*r.equimatchable && e.offending_edge)
      r.witnesses["critical_edge"] = std::to_string(e.offending_edge->u) + "-" +
                                     std::to_string(e.offending_edge->v);
  }
  if (opt.well_covered) r.well_covered = is_well_covered(g);
  return r;
}

inline nlohmann::json report_to_json(const PropertyReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  if (r.nu) j["nu"] = *r.nu;
  if (r.connectivity) j["connectivity"] = *r.connectivity;
  if (r.maximal_sizes)
    j["maximal_sizes"] = std::vector<int>(r.maximal_sizes->begin(),
                                          r.maximal_sizes->end());
  nlohmann::json flags = nlohmann::json::object();
  auto put = [&](const char* k, const std::optional<bool>& v) {
    if (v) flags[k] = *v;
  };
  put("equimatchable", r.equimatchable);
  put("factor_critical", r.factor_critical);
  put("randomly_matchable", r.randomly_matchable);
  put("bipartite", r.bipartite);
  put("efc", r.efc);
  put("ece", r.ece);
  put("vce", r.vce);
  put("ese", r.ese);
  put("well_covered", r.well_covered);
  j["flags"] = flags;
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace eqm

#endif  // EQM_EQUIMATCH_HPP
