#ifndef EQM_MATCHING_HPP
#define EQM_MATCHING_HPP

// Matching primitives: maximum matching, duplicate-free maximal-matching
// enumeration, perfect matchings on vertex subsets, factor-criticality,
// randomly-matchable classification, isolating matchings, Hall violators.
// All routines are exact; sizes here are desk scale (n <= ~13 for the
// exponential parts).

#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "eqm/graph.hpp"

namespace eqm {

struct Matching {
  std::vector<Edge> edges;  // sorted lexicographically

  VertexSet covered() const {
    VertexSet c = 0;
    for (const auto& e : edges) c |= bit(e.u) | bit(e.v);
    return c;
  }
  int size() const { return static_cast<int>(edges.size()); }

  void add(int u, int v) {
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  void normalize() { std::sort(edges.begin(), edges.end()); }

  friend bool operator==(const Matching&, const Matching&) = default;
};

// Memoized subset oracle for one host graph. Masks fully determine the
// subproblem, so one cache serves every derived query.
class MatchingOracle {
 public:
  explicit MatchingOracle(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }

  int max_matching_size(VertexSet mask) {
    if (auto it = nu_memo_.find(mask); it != nu_memo_.end()) return it->second;
    int v = pick_active(mask);
    int best;
    if (v < 0) {
      best = 0;
    } else {
      best = max_matching_size(mask & ~bit(v));  // v stays exposed
      EQM_FOR_EACH_VERTEX(w, g_.neighbors(v) & mask)
        best = std::max(best, 1 + max_matching_size(mask & ~bit(v) & ~bit(w)));
    }
    nu_memo_.emplace(mask, best);
    return best;
  }

  bool has_perfect_matching(VertexSet mask) {
    if (popcount(mask) % 2 != 0) return false;
    if (mask == 0) return true;
    if (auto it = pm_memo_.find(mask); it != pm_memo_.end()) return it->second;
    const int v = lowest_vertex(mask);
    bool ok = false;
    EQM_FOR_EACH_VERTEX(w, g_.neighbors(v) & mask) {
      if (has_perfect_matching(mask & ~bit(v) & ~bit(w))) {
        ok = true;
        break;
      }
    }
    pm_memo_.emplace(mask, ok);
    return ok;
  }

  // Lexicographically greedy witness, built from the oracle answers.
  std::optional<Matching> perfect_matching(VertexSet mask) {
    if (!has_perfect_matching(mask)) return std::nullopt;
    Matching m;
    while (mask) {
      const int v = lowest_vertex(mask);
      EQM_FOR_EACH_VERTEX(w, g_.neighbors(v) & mask) {
        if (has_perfect_matching(mask & ~bit(v) & ~bit(w))) {
          m.add(v, w);
          mask &= ~bit(v) & ~bit(w);
          break;
        }
      }
    }
    m.normalize();
    return m;
  }

  Matching max_matching(VertexSet mask) {
    Matching m;
    int target = max_matching_size(mask);
    while (target > 0) {
      const int v = pick_active(mask);
      bool matched = false;
      EQM_FOR_EACH_VERTEX(w, g_.neighbors(v) & mask) {
        if (1 + max_matching_size(mask & ~bit(v) & ~bit(w)) == target) {
          m.add(v, w);
          mask &= ~bit(v) & ~bit(w);
          --target;
          matched = true;
          break;
        }
      }
      if (!matched) mask &= ~bit(v);
    }
    m.normalize();
    return m;
  }

 private:
  // Least vertex in mask with a neighbor in mask, or -1.
  int pick_active(VertexSet mask) const {
    EQM_FOR_EACH_VERTEX(v, mask)
      if (g_.neighbors(v) & mask) return v;
    return -1;
  }

  const Graph& g_;
  std::unordered_map<VertexSet, int> nu_memo_;
  std::unordered_map<VertexSet, char> pm_memo_;
};

inline int max_matching_size(const Graph& g) {
  MatchingOracle o(g);
  return o.max_matching_size(g.all_vertices());
}

inline Matching max_matching(const Graph& g) {
  MatchingOracle o(g);
  return o.max_matching(g.all_vertices());
}

inline bool has_perfect_matching(const Graph& g) {
  MatchingOracle o(g);
  return o.has_perfect_matching(g.all_vertices());
}

inline std::optional<Matching> perfect_matching_avoiding(const Graph& g,
                                                         VertexSet excluded) {
  MatchingOracle o(g);
  return o.perfect_matching(g.all_vertices() & ~excluded);
}

// ---------------------------------------------------------------------------
// Maximal-matching enumeration.
//
// Depth-first branching on the lexicographically least vertex that still has
// an uncovered usable neighbor: one branch per incident edge, plus a branch
// where the vertex commits to staying exposed. A leaf is emitted iff the
// exposed vertices form an independent set, which is exactly maximality.
// Each maximal matching corresponds to a unique trace, so the enumeration is
// duplicate-free. Callback returns false to stop.

namespace detail {

template <typename F>
bool enumerate_maximal_rec(const Graph& g, VertexSet covered, VertexSet exposed,
                           Matching& m, F&& fn) {
  int u = -1;
  EQM_FOR_EACH_VERTEX(v, g.all_vertices() & ~covered & ~exposed) {
    if (g.neighbors(v) & ~covered & ~exposed) {
      u = v;
      break;
    }
  }
  if (u < 0) {
    // No extendable vertex outside the committed-exposed set; the matching
    // is maximal iff no committed vertex still sees an uncovered vertex.
    EQM_FOR_EACH_VERTEX(x, exposed)
      if (g.neighbors(x) & ~covered) return true;  // infeasible leaf
    return fn(const_cast<const Matching&>(m));
  }
  EQM_FOR_EACH_VERTEX(w, g.neighbors(u) & ~covered & ~exposed) {
    m.add(u, w);
    const bool go = enumerate_maximal_rec(g, covered | bit(u) | bit(w), exposed, m, fn);
    m.edges.pop_back();
    if (!go) return false;
  }
  // u stays exposed; still legal only if its neighbors all get covered later.
  return enumerate_maximal_rec(g, covered, exposed | bit(u), m, fn);
}

}  // namespace detail

template <typename F>
void enumerate_maximal_matchings(const Graph& g, F&& fn) {
  Matching m;
  detail::enumerate_maximal_rec(g, 0, 0, m, fn);
}

struct MaximalSizes {
  std::set<int> sizes;
  std::map<int, Matching> witness;  // one maximal matching per size seen
};

// With short_circuit, stops as soon as two distinct sizes are known.
inline MaximalSizes maximal_matching_sizes(const Graph& g,
                                           bool short_circuit = false) {
  MaximalSizes out;
  enumerate_maximal_matchings(g, [&](const Matching& m) {
    if (!out.sizes.count(m.size())) {
      out.sizes.insert(m.size());
      Matching w = m;
      w.normalize();
      out.witness.emplace(m.size(), std::move(w));
      if (short_circuit && out.sizes.size() >= 2) return false;
    }
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

inline bool is_factor_critical(const Graph& g) {
  const int n = g.order();
  if (n % 2 == 0) return false;
  MatchingOracle o(g);
  for (int v = 0; v < n; ++v)
    if (!o.has_perfect_matching(g.all_vertices() & ~bit(v))) return false;
  return true;
}

namespace detail {

inline bool randomly_matchable_by_shape(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0 || n == 0) return false;
  if (is_clique_set(g, g.all_vertices())) return true;  // K_{2n}
  auto f = complete_bipartite_split(g, g.all_vertices());
  return f && f->sideU != 0 && popcount(f->sideU) == popcount(f->sideW);
}

// Definition check: every matching extends to a perfect matching, which for
// a finite graph is the same as every maximal matching being perfect.
inline bool randomly_matchable_by_definition(const Graph& g) {
  const int n = g.order();
  bool ok = true;
  enumerate_maximal_matchings(g, [&](const Matching& m) {
    if (2 * m.size() != n) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace detail

// Classification answer (K_{2n} / K_{n,n}); cross-checked against the
// definitional answer whenever the graph is small enough to enumerate.
inline bool is_randomly_matchable(const Graph& g) {
  if (!is_connected(g)) throw GraphError("randomly-matchable test needs a connected graph");
  if (g.order() == 0) return true;
  const bool shape = detail::randomly_matchable_by_shape(g);
  if (g.order() <= 10 &&
      shape != detail::randomly_matchable_by_definition(g))
    throw GraphError("randomly-matchable classification disagrees with definition");
  return shape;
}

// ---------------------------------------------------------------------------
// Matching isolating v: saturates N(v), avoids v, and {v} is a component of
// the leftover graph. Returns an inclusion-minimal one when any exists.

inline std::optional<Matching> isolating_matching(const Graph& g, int v) {
  const VertexSet nv = g.neighbors(v);
  MatchingOracle o(g);
  // Search lexicographically for a matching in G - v saturating N(v).
  VertexSet avail = g.all_vertices() & ~bit(v);
  Matching m;
  // Recursive saturation of N(v) vertices in increasing order.
  auto rec = [&](auto&& self, VertexSet need, VertexSet left) -> bool {
    if (need == 0) return true;
    const int x = lowest_vertex(need);
    EQM_FOR_EACH_VERTEX(w, g.neighbors(x) & left & ~bit(v)) {
      m.add(x, w);
      if (self(self, need & ~bit(x) & ~bit(w), left & ~bit(x) & ~bit(w)))
        return true;
      m.edges.pop_back();
    }
    return false;
  };
  if (!rec(rec, nv, avail)) return std::nullopt;
  // Minimalize: drop edges while the remainder still isolates v.
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      Matching probe;
      for (std::size_t j = 0; j < m.edges.size(); ++j)
        if (j != i) probe.edges.push_back(m.edges[j]);
      if ((nv & ~probe.covered()) == 0) {
        m = probe;
        shrunk = true;
        break;
      }
    }
  }
  m.normalize();
  return m;
}

// ---------------------------------------------------------------------------
// Hall violator: S subseteq side with |N(S)| < |S|, or nullopt when the side
// can be saturated (the positive case is cross-checked by exhibiting a
// saturating matching).

inline std::optional<VertexSet> hall_violator(const Graph& g, VertexSet side) {
  if (!is_independent_set(g, side))
    throw GraphError("hall_violator: side must be an independent set");
  const int k = popcount(side);
  for (int s = 1; s <= k; ++s) {
    std::optional<VertexSet> found;
    detail::for_each_subset_of_size(side, s, [&](VertexSet sub) {
      if (popcount(g.neighbors_of_set(sub)) < popcount(sub)) {
        found = sub;
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  // Hall's condition holds: a saturating matching must exist. Build one with
  // augmenting paths over the side-to-rest edges.
  std::vector<int> match_of(static_cast<std::size_t>(g.order()), -1);
  auto augment = [&](auto&& self, int u, VertexSet& seen) -> bool {
    EQM_FOR_EACH_VERTEX(w, g.neighbors(u) & ~seen) {
      seen |= bit(w);
      if (match_of[w] == -1 || self(self, match_of[w], seen)) {
        match_of[w] = u;
        return true;
      }
    }
    return false;
  };
  int saturated = 0;
  EQM_FOR_EACH_VERTEX(u, side) {
    VertexSet seen = 0;
    if (augment(augment, u, seen)) ++saturated;
  }
  if (saturated != k)
    throw GraphError("hall_violator: no violator found but side not saturable");
  return std::nullopt;
}

}  // namespace eqm

#endif  // EQM_MATCHING_HPP
