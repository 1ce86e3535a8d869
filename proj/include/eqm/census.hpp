#ifndef EQM_CENSUS_HPP
#define EQM_CENSUS_HPP

// Exhaustive enumeration of non-isomorphic graphs by canonical augmentation,
// a predicate census over the connected ones, and a theorem registry that
// re-verifies the paper's claims at desk scale.

#include <atomic>
#include <chrono>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "eqm/equimatch.hpp"
#include "eqm/families.hpp"
#include "eqm/graph.hpp"
#include "eqm/matching.hpp"

namespace eqm {

constexpr int kCensusMaxN = 10;

namespace detail {

template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min<std::size_t>(workers, count);
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Canonical augmentation. A child on k+1 vertices (new vertex labeled k) is
// accepted iff the new vertex lies in the canonical-deletion orbit: the orbit
// of the vertex carrying the largest canonical label. Orbit membership is
// decided by comparing pinned-last canonical strings, which coincide exactly
// for vertices in a common automorphism orbit. Per-parent dedup then yields
// every isomorphism class exactly once across all parents.

inline std::vector<Graph> extend_parent(const Graph& parent) {
  const int k = parent.order();
  std::vector<std::pair<std::string, Graph>> accepted;
  std::set<std::string> seen;
  for (VertexSet mask = 0; mask < (VertexSet{1} << k); ++mask) {
    Graph child(k + 1);
    for (const auto& e : parent.edges()) child.add_edge(e.u, e.v);
    EQM_FOR_EACH_VERTEX(v, mask) child.add_edge(v, k);
    CanonicalForm cf = canonical_form(child);
    if (seen.count(cf.g6)) continue;
    int q = -1;
    for (int v = 0; v <= k; ++v)
      if (cf.perm[v] == k) q = v;
    if (q != k &&
        canonical_g6_pinned_last(child, k) != canonical_g6_pinned_last(child, q))
      continue;
    seen.insert(cf.g6);
    accepted.emplace_back(cf.g6, std::move(cf.graph));
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(accepted.size());
  for (auto& [g6, g] : accepted) out.push_back(std::move(g));
  return out;
}

// Lazily built per-level store of all graphs (connected or not), shared by
// census and verify runs.
class CensusCache {
 public:
  static CensusCache& instance() {
    static CensusCache c;
    return c;
  }

  const std::vector<Graph>& all_graphs(int n, int workers = 1) {
    if (n < 1 || n > kCensusMaxN)
      throw GraphError("census bound must be between 1 and " +
                       std::to_string(kCensusMaxN));
    std::lock_guard<std::mutex> lock(mu_);
    for (int level = 1; level <= n; ++level) {
      if (levels_.count(level)) continue;
      if (level == 1) {
        levels_[1] = {Graph(1)};
        continue;
      }
      const auto& parents = levels_.at(level - 1);
      std::vector<std::vector<Graph>> shards(parents.size());
      detail::parallel_for(parents.size(), workers, [&](std::size_t i) {
        shards[i] = extend_parent(parents[i]);
      });
      std::vector<std::pair<std::string, Graph>> merged;
      for (auto& shard : shards)
        for (auto& g : shard) merged.emplace_back(emit_graph6(g), std::move(g));
      std::sort(merged.begin(), merged.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<Graph> level_graphs;
      level_graphs.reserve(merged.size());
      for (auto& [g6, g] : merged) level_graphs.push_back(std::move(g));
      levels_[level] = std::move(level_graphs);
    }
    return levels_.at(n);
  }

 private:
  std::mutex mu_;
  std::map<int, std::vector<Graph>> levels_;
};

// One canonical representative per isomorphism class of connected graphs on
// exactly n vertices, in canonical-string order.
inline std::vector<Graph> enumerate_connected(int n, int workers = 1) {
  std::vector<Graph> out;
  for (const Graph& g : CensusCache::instance().all_graphs(n, workers))
    if (is_connected(g)) out.push_back(g);
  return out;
}

inline std::vector<Graph> parse_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Predicate census

inline const std::map<std::string, std::function<bool(const Graph&)>>&
predicate_registry() {
  static const std::map<std::string, std::function<bool(const Graph&)>> reg = {
      {"equimatchable", [](const Graph& g) { return is_equimatchable(g).value; }},
      {"factor_critical", [](const Graph& g) { return is_factor_critical(g); }},
      {"randomly_matchable",
       [](const Graph& g) { return is_randomly_matchable(g); }},
      {"bipartite", [](const Graph& g) { return bipartition(g).has_value(); }},
      {"efc", [](const Graph& g) { return is_EFC(g); }},
      // The census-layer ECE/ESE predicates require at least one edge.
      {"ece", [](const Graph& g) { return g.size() >= 1 && is_ECE(g).value; }},
      {"vce", [](const Graph& g) { return is_VCE(g).value; }},
      {"ese", [](const Graph& g) { return g.size() >= 1 && is_ESE(g).value; }},
  };
  return reg;
}

struct CensusRecord {
  std::string g6;
  PropertyReport report;
  std::optional<std::string> family_label;  // EFC partition label when EFC
};

inline std::vector<CensusRecord> run_census(
    int n, const std::vector<std::string>& predicates, int workers = 1) {
  const auto& reg = predicate_registry();
  std::vector<std::function<bool(const Graph&)>> preds;
  for (const auto& name : predicates) {
    auto it = reg.find(name);
    if (it == reg.end()) throw GraphError("unknown predicate '" + name + "'");
    preds.push_back(it->second);
  }
  const std::vector<Graph> graphs = enumerate_connected(n, workers);
  std::vector<std::optional<CensusRecord>> slots(graphs.size());
  detail::parallel_for(graphs.size(), workers, [&](std::size_t i) {
    const Graph& g = graphs[i];
    for (const auto& p : preds)
      if (!p(g)) return;
    CensusRecord rec;
    rec.g6 = emit_graph6(g);
    rec.report = property_report(g);
    if (rec.report.efc && *rec.report.efc && g.size() >= 1)
      rec.family_label = efc_label_name(classify_efc(g).label);
    slots[i] = std::move(rec);
  });
  std::vector<CensusRecord> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

inline nlohmann::json census_record_to_json(const CensusRecord& r) {
  nlohmann::json j = report_to_json(r.report);
  j["graph6"] = r.g6;
  if (r.family_label) j["family"] = *r.family_label;
  return j;
}

// ---------------------------------------------------------------------------
// Theorem registry

struct Counterexample {
  std::string g6;
  std::string clause;
};

struct VerifyReport {
  std::string id;
  int n_max = 0;
  long scanned = 0;
  std::vector<Counterexample> counterexamples;
  bool conjecture = false;  // appendix checks rest on an unpublished manuscript
  bool capped = false;
  double elapsed_s = 0.0;
};

namespace detail {

// nullopt: claim holds (or graph not eligible); string: failing clause.
using Check = std::function<std::optional<std::string>(const Graph&)>;

struct TheoremEntry {
  const char* id;
  bool conjecture;
  Check check;
};

inline bool is_even_clique(const Graph& g) {
  return g.order() >= 2 && g.order() % 2 == 0 &&
         is_clique_set(g, g.all_vertices());
}

inline bool is_balanced_biclique(const Graph& g) {
  if (g.order() < 2 || g.order() % 2 != 0) return false;
  auto s = complete_bipartite_split(g, g.all_vertices());
  return s && popcount(s->sideU) == popcount(s->sideW);
}

// Is g - v an induced K_{2r} or K_{r,r} for some vertex v? (The graphs are
// odd-order, so these are the only induced subgraphs of order n-1 to check.)
inline bool has_near_randomly_matchable_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    Graph h = g.minus_vertex(v);
    if (is_even_clique(h) || is_balanced_biclique(h)) return true;
  }
  return false;
}

inline std::vector<int> cut_vertices(const Graph& g) {
  std::vector<int> cuts;
  if (g.order() < 3) return cuts;
  for (int v = 0; v < g.order(); ++v)
    if (connected_components(g, g.all_vertices() & ~bit(v)).size() >= 2)
      cuts.push_back(v);
  return cuts;
}

inline bool saturated_by_every_maximal(const Graph& g, int v) {
  bool all = true;
  enumerate_maximal_matchings(g, [&](const Matching& m) {
    if (!(m.covered() & bit(v))) {
      all = false;
      return false;
    }
    return true;
  });
  return all;
}

// v is adjacent to at least two adjacent vertices inside comp, and comp
// induces K_{2t} or K_{r,r}.
inline bool efc_component_shape(const Graph& g, int v, VertexSet comp) {
  Graph h = g.induced(comp);
  if (!is_even_clique(h) && !is_balanced_biclique(h)) return false;
  const VertexSet nv = g.neighbors(v) & comp;
  EQM_FOR_EACH_VERTEX(x, nv)
    if (g.neighbors(x) & nv & ~((bit(x) << 1) - 1)) return true;
  return false;
}

inline const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> reg = [] {
    std::vector<TheoremEntry> r;
    auto add = [&](const char* id, bool conj, Check c) {
      r.push_back({id, conj, std::move(c)});
    };

    add("plummer-trichotomy", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.order() < 3 || vertex_connectivity(g) < 2) return std::nullopt;
          if (!is_equimatchable(g).value) return std::nullopt;
          if (is_factor_critical(g) || bipartition(g) || is_even_clique(g))
            return std::nullopt;
          return "2-connected equimatchable but neither factor-critical nor "
                 "bipartite nor an even clique";
        });

    add("bip-equim-lemma", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!bipartition(g)) return std::nullopt;
          const bool lhs = bipartite_equim_test(g);
          const bool rhs = is_equimatchable(g).value;
          if (lhs == rhs) return std::nullopt;
          return std::string("Hall-style condition says ") +
                 (lhs ? "equimatchable" : "not equimatchable") +
                 " but enumeration disagrees";
        });

    add("bip-saturates-U", false,
        [](const Graph& g) -> std::optional<std::string> {
          auto b = bipartition(g);
          if (!b) return std::nullopt;
          bool all_saturate = true;
          enumerate_maximal_matchings(g, [&](const Matching& m) {
            if ((b->sideU & ~m.covered()) != 0) {
              all_saturate = false;
              return false;
            }
            return true;
          });
          if (all_saturate == is_equimatchable(g).value) return std::nullopt;
          return "equimatchability does not match every-maximal-matching-"
                 "saturates-U";
        });

    add("cut-vertex-components", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_equimatchable(g).value) return std::nullopt;
          for (int v : cut_vertices(g))
            for (VertexSet comp :
                 connected_components(g, g.all_vertices() & ~bit(v)))
              if (!is_equimatchable(g.induced(comp)).value)
                return "component of G - v not equimatchable (v=" +
                       std::to_string(v) + ")";
          return std::nullopt;
        });

    add("efc-triple", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_factor_critical(g)) return std::nullopt;
          MatchingOracle o(g);
          bool found = false;
          independent_sets(g, 3, [&](VertexSet triple) {
            if (o.has_perfect_matching(g.all_vertices() & ~triple)) {
              found = true;
              return false;
            }
            return true;
          });
          if (found != !is_equimatchable(g).value)
            return "independent-triple criterion disagrees with "
                   "equimatchability";
          return std::nullopt;
        });

    add("one-exposed", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_EFC(g)) return std::nullopt;
          std::optional<std::string> bad;
          enumerate_maximal_matchings(g, [&](const Matching& m) {
            const int exposed = g.order() - 2 * m.size();
            if (exposed != 1) {
              bad = "maximal matching leaves " + std::to_string(exposed) +
                    " vertices exposed";
              return false;
            }
            return true;
          });
          return bad;
        });

    add("isolating-structure", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_EFC(g) || g.order() < 3 || vertex_connectivity(g) < 2)
            return std::nullopt;
          for (int v = 0; v < g.order(); ++v) {
            auto m = isolating_matching(g, v);
            if (!m) continue;
            const VertexSet rest =
                g.all_vertices() & ~m->covered() & ~bit(v);
            if (rest == 0) continue;
            Graph h = g.induced(rest);
            if (!is_even_clique(h) && !is_balanced_biclique(h))
              return "G minus isolating matching of v=" + std::to_string(v) +
                     " is neither an even clique nor a balanced biclique";
          }
          return std::nullopt;
        });

    add("strong-iff-nu", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_equimatchable(g).value) return std::nullopt;
          const int nu = max_matching_size(g);
          for (int v = 0; v < g.order(); ++v) {
            const bool strong = saturated_by_every_maximal(g, v);
            const bool drop = max_matching_size(g.minus_vertex(v)) == nu - 1;
            if (strong != drop)
              return "strong(v) != (nu(G-v)=nu(G)-1) at v=" +
                     std::to_string(v);
          }
          return std::nullopt;
        });

    add("gv-equim-prop", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_equimatchable(g).value) return std::nullopt;
          for (int v = 0; v < g.order(); ++v) {
            const bool predicted = g_minus_v_equimatchable_predicted(g, v);
            const bool actual = is_equimatchable(g.minus_vertex(v)).value;
            if (predicted != actual)
              return "strong-vertex prediction wrong at v=" +
                     std::to_string(v);
          }
          return std::nullopt;
        });

    add("vce-2connected", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.order() < 3 || !is_VCE(g).value) return std::nullopt;
          if (vertex_connectivity(g) < 2) return "VCE-graph with a cut vertex";
          return std::nullopt;
        });

    add("no-bipartite-vce", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!bipartition(g)) return std::nullopt;
          if (is_VCE(g).value) return "bipartite VCE-graph";
          return std::nullopt;
        });

    add("kt-not-vce", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.order() < 2 || !is_clique_set(g, g.all_vertices()))
            return std::nullopt;
          if (is_VCE(g).value) return "complete graph is VCE";
          return std::nullopt;
        });

    add("vce-characterization", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.order() < 3 || g.order() % 2 == 0) return std::nullopt;
          if (vertex_connectivity(g) < 2) return std::nullopt;
          const bool lhs = is_VCE(g).value;
          const bool rhs =
              is_EFC(g) && !has_near_randomly_matchable_vertex(g);
          if (lhs == rhs) return std::nullopt;
          return lhs ? "VCE but not a (K_2r,K_rr)-free EFC-graph"
                     : "(K_2r,K_rr)-free EFC-graph but not VCE";
        });

    add("efc-not-vce", false,
        [](const Graph& g) -> std::optional<std::string> {
          const auto cuts = cut_vertices(g);
          if (cuts.empty()) return std::nullopt;
          const bool efc = is_EFC(g);
          for (int v : cuts) {
            bool shape = true;
            for (VertexSet comp :
                 connected_components(g, g.all_vertices() & ~bit(v)))
              if (!efc_component_shape(g, v, comp)) shape = false;
            if (shape != efc)
              return efc ? "EFC cut vertex lacks the K_rr/K_2t component shape"
                         : "component shape holds at a cut vertex of a "
                           "non-EFC graph";
          }
          return std::nullopt;
        });

    add("critical-edge-lemma", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.order() < 3 || !is_equimatchable(g).value) return std::nullopt;
          for (const auto& e : g.edges()) {
            const bool def = is_critical_edge_definition(g, e.u, e.v);
            const bool mat = is_critical_edge_matching(g, e.u, e.v);
            if (def != mat)
              return "criticality methods disagree on edge " +
                     std::to_string(e.u) + "-" + std::to_string(e.v);
          }
          return std::nullopt;
        });

    add("no-dominating-edge", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_factor_critical(g)) return std::nullopt;
          if (g.size() < 1 || !is_ECE(g).value) return std::nullopt;
          for (const auto& e : g.edges())
            if ((g.neighbors(e.u) | g.neighbors(e.v)) == g.all_vertices())
              return "dominating edge " + std::to_string(e.u) + "-" +
                     std::to_string(e.v) + " in a factor-critical ECE-graph";
          return std::nullopt;
        });

    add("rm-implies-ece", false,
        [](const Graph& g) -> std::optional<std::string> {
          // K_2 is the degenerate exception: removing its only edge leaves an
          // equimatchable graph, so its single edge is not critical.
          if (g.order() < 3 || !is_randomly_matchable(g)) return std::nullopt;
          if (!is_ECE(g).value) return "randomly matchable but not ECE";
          return std::nullopt;
        });

    add("ece-2connected", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.order() < 3 || g.size() < 1 || !is_ECE(g).value)
            return std::nullopt;
          if (vertex_connectivity(g) < 2) return "ECE-graph with a cut vertex";
          return std::nullopt;
        });

    add("ece-trichotomy", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.size() < 1 || !is_ECE(g).value) return std::nullopt;
          if (is_factor_critical(g) || bipartition(g) || is_even_clique(g))
            return std::nullopt;
          return "ECE but neither factor-critical nor bipartite nor an even "
                 "clique";
        });

    add("bipartite-ece-thm", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!bipartition(g)) return std::nullopt;
          if (g.order() == 2 && g.size() == 1) return std::nullopt;  // K_2
          const bool lhs = bipartite_ece_test(g);
          const bool rhs = g.size() >= 1 && is_ECE(g).value;
          if (g.size() == 0) return std::nullopt;
          if (lhs == rhs) return std::nullopt;
          return "bipartite Hall-style ECE condition disagrees with the "
                 "definition";
        });

    add("fcece-min7", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_factor_critical(g) || g.size() < 1 || !is_ECE(g).value)
            return std::nullopt;
          if (g.order() < 7) return "factor-critical ECE-graph of order " +
                                    std::to_string(g.order());
          return std::nullopt;
        });

    add("conn2-characterization", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_factor_critical(g) || g.order() < 7) return std::nullopt;
          if (vertex_connectivity(g) != 2) return std::nullopt;
          const bool ece = is_ECE(g).value;
          const bool classified = classify_conn2(g).has_value();
          if (ece == classified) return std::nullopt;
          return ece ? "factor-critical ECE with connectivity 2 not matching "
                       "Types I-V"
                     : "Types I-V match on a non-ECE graph";
        });

    add("k2r-blocks-ece", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.order() % 2 == 0 || !is_factor_critical(g)) return std::nullopt;
          if (g.size() < 1 || !is_ECE(g).value) return std::nullopt;
          if (has_near_randomly_matchable_vertex(g))
            return "factor-critical ECE-graph with induced K_2r or K_rr on "
                   "n-1 vertices";
          return std::nullopt;
        });

    add("fcece-subset-vce", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_factor_critical(g) || g.size() < 1 || !is_ECE(g).value)
            return std::nullopt;
          if (!is_VCE(g).value) return "factor-critical ECE-graph not VCE";
          return std::nullopt;
        });

    add("efc-partition", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.size() < 1 || !is_EFC(g)) return std::nullopt;
          try {
            classify_efc(g);
          } catch (const GraphError& err) {
            return std::string("EFC partition failed: ") + err.what();
          }
          return std::nullopt;
        });

    add("ese-family-relations", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.size() >= 1 && is_ECE(g).value && is_ESE(g).value)
            return "graph is both ECE and ESE";
          if (g.size() < 1 || !is_EFC(g)) return std::nullopt;
          const EfcLabel label = classify_efc(g).label;
          const bool ese = g.size() >= 1 && is_ESE(g).value;
          if ((label == EfcLabel::FamA || label == EfcLabel::FamB ||
               label == EfcLabel::FamE) &&
              ese)
            return std::string(efc_label_name(label)) + " member is ESE";
          if ((label == EfcLabel::FamC || label == EfcLabel::FamD) && !ese)
            return std::string(efc_label_name(label)) + " member is not ESE";
          return std::nullopt;
        });

    add("linegraph-bridge", false,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.order() > 6 || g.size() < 2) return std::nullopt;
          const Graph L = line_graph(g).graph;
          const bool wc = is_well_covered(L);
          if (is_equimatchable(g).value != wc)
            return "equimatchable(G) != well-covered(L(G))";
          bool shedding = false;
          for (int x = 0; x < L.order() && !shedding; ++x)
            if (is_shedding_vertex(L, x)) shedding = true;
          if (is_ECE(g).value != (wc && !shedding))
            return "ECE(G) != (well-covered(L) and no shedding vertex)";
          return std::nullopt;
        });

    add("appendix-two-components", true,
        [](const Graph& g) -> std::optional<std::string> {
          if (g.order() < 4 || !is_factor_critical(g)) return std::nullopt;
          if (g.size() < 1 || !is_ECE(g).value) return std::nullopt;
          const int k = vertex_connectivity(g);
          if (k < 3) return std::nullopt;
          for (VertexSet cut : k_cut_sets(g, k))
            if (connected_components(g, g.all_vertices() & ~cut).size() != 2)
              return "k-cut leaves more than two components";
          return std::nullopt;
        });

    add("appendix-conn3", true,
        [](const Graph& g) -> std::optional<std::string> {
          if (!is_factor_critical(g)) return std::nullopt;
          if (g.order() < 9 || vertex_connectivity(g) != 3) return std::nullopt;
          bool eligible_cut = false;
          std::optional<std::string> bad;
          const bool ece = g.size() >= 1 && is_ECE(g).value;
          for (VertexSet cut : k_cut_sets(g, 3)) {
            auto comps = connected_components(g, g.all_vertices() & ~cut);
            if (comps.size() != 2 || popcount(comps[0]) < 3 ||
                popcount(comps[1]) < 3)
              continue;
            eligible_cut = true;
            const bool matched =
                match_conn3(g, cut, comps[0], comps[1]).has_value();
            if (matched != ece) {
              bad = ece ? "3-connected FC-ECE cut not matching Types VI-VIII"
                        : "Types VI-VIII match on a non-ECE graph";
              break;
            }
          }
          (void)eligible_cut;
          return bad;
        });

    return r;
  }();
  return reg;
}

// ---------------------------------------------------------------------------
// Connectivity-4 candidates: complements of maximal triangle-free graphs.

inline Graph groetzsch_graph() {
  // Mycielski construction over C_5: u_0..u_4 cycle, w_i adjacent to the
  // cycle neighbors of u_i, z adjacent to every w_i.
  Graph g(11);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 4) % 5);
    g.add_edge(5 + i, 10);
  }
  return g;
}

// One deterministic pass over the non-edges in the given order; adding edges
// only grows common neighborhoods, so one pass reaches maximality.
inline Graph greedy_triangle_free_completion(Graph g, int variant) {
  const int n = g.order();
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (variant == 1) {
    std::reverse(pairs.begin(), pairs.end());
  } else if (variant == 2) {
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) {
                       return a.first + a.second < b.first + b.second;
                     });
  }
  for (auto [u, v] : pairs)
    if (!g.has_edge(u, v) && !(g.neighbors(u) & g.neighbors(v)))
      g.add_edge(u, v);
  return g;
}

inline std::vector<Graph> conn4_candidates() {
  std::vector<Graph> tf;
  tf.push_back(groetzsch_graph());
  for (int n : {11, 13})
    for (int variant : {0, 1, 2})
      tf.push_back(greedy_triangle_free_completion(cycle_graph(n), variant));
  std::vector<Graph> out;
  out.reserve(tf.size());
  for (const Graph& t : tf) out.push_back(complement(t));
  return out;
}

inline VerifyReport verify_conn4(int cap) {
  VerifyReport rep;
  rep.id = "appendix-conn4-equiv";
  rep.conjecture = true;
  for (const Graph& g : conn4_candidates()) {
    ++rep.scanned;
    if (g.order() % 2 == 0 || !is_connected(g)) continue;
    const int k = vertex_connectivity(g);
    if (k < 4 || g.order() < 2 * k + 3) continue;
    int delta = g.order();
    for (int v = 0; v < g.order(); ++v) delta = std::min(delta, g.degree(v));
    if (delta <= k) continue;
    const bool ece = is_ECE(g).value;
    bool dominating = false;
    for (const auto& e : g.edges())
      if ((g.neighbors(e.u) | g.neighbors(e.v)) == g.all_vertices())
        dominating = true;
    const bool rhs = independence_number(g) == 2 && !dominating;
    if (ece != rhs && static_cast<int>(rep.counterexamples.size()) < cap)
      rep.counterexamples.push_back(
          {emit_graph6(canonical_form(g).graph),
           ece ? "ECE but alpha != 2 or a dominating edge exists"
               : "alpha = 2 without dominating edge but not ECE"});
    else if (ece != rhs)
      rep.capped = true;
  }
  return rep;
}

}  // namespace detail

inline std::vector<std::string> verify_ids() {
  std::vector<std::string> ids;
  for (const auto& e : detail::theorem_registry()) ids.push_back(e.id);
  ids.push_back("appendix-conn4-equiv");
  return ids;
}

inline VerifyReport verify(const std::string& id, int n_max, int workers = 1,
                           int cap = 25) {
  const auto t0 = std::chrono::steady_clock::now();
  if (id == "appendix-conn4-equiv") {
    VerifyReport rep = detail::verify_conn4(cap);
    rep.n_max = n_max;
    rep.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
  }
  const detail::TheoremEntry* entry = nullptr;
  for (const auto& e : detail::theorem_registry())
    if (id == e.id) entry = &e;
  if (!entry) throw GraphError("unregistered theorem id '" + id + "'");
  VerifyReport rep;
  rep.id = id;
  rep.n_max = n_max;
  rep.conjecture = entry->conjecture;
  std::mutex mu;
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Graph> graphs = enumerate_connected(n, workers);
    std::vector<std::optional<std::string>> fails(graphs.size());
    detail::parallel_for(graphs.size(), workers, [&](std::size_t i) {
      fails[i] = entry->check(graphs[i]);
    });
    rep.scanned += static_cast<long>(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (!fails[i]) continue;
      if (static_cast<int>(rep.counterexamples.size()) < cap)
        rep.counterexamples.push_back({emit_graph6(graphs[i]), *fails[i]});
      else
        rep.capped = true;
    }
  }
  rep.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

inline nlohmann::json verify_report_to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["theorem"] = r.id;
  j["n_max"] = r.n_max;
  j["scanned"] = r.scanned;
  j["pass"] = r.counterexamples.empty();
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& c : r.counterexamples)
    j["counterexamples"].push_back({{"graph6", c.g6}, {"clause", c.clause}});
  if (r.capped) j["counterexamples_capped"] = true;
  if (r.conjecture) j["conjecture_grade"] = true;
  j["elapsed_s"] = r.elapsed_s;
  return j;
}

}  // namespace eqm

#endif  // EQM_CENSUS_HPP
