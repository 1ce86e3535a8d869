#ifndef EQM_GRAPH_HPP
#define EQM_GRAPH_HPP

// Small simple-graph toolkit: bitmask adjacency, graph6 I/O, connectivity,
// bipartitions, independence, line graphs and a canonical form for
// isomorphism-class bookkeeping. Vertices are 0..n-1 with n <= 62 so a
// vertex set fits in one machine word.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqm {

using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 62;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }
inline VertexSet bit(int v) { return VertexSet{1} << v; }

// Iterate set bits low to high.
#define EQM_FOR_EACH_VERTEX(v, set_expr)                                     \
  for (eqm::VertexSet eqm_it_ = (set_expr); eqm_it_ != 0;                    \
       eqm_it_ &= eqm_it_ - 1)                                               \
    if (const int v = eqm::lowest_vertex(eqm_it_); true)

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Graph6Error : GraphError {
  std::size_t byte_offset;
  Graph6Error(const std::string& what, std::size_t offset)
      : GraphError(what + " (byte " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
};

struct Edge {
  int u, v;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw GraphError("vertex count out of range");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }
  int size() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m += popcount(adj_[v]);
    return m / 2;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("loop edge rejected");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }
  bool has_edge(int u, int v) const { return (adj_[u] & bit(v)) != 0; }

  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  VertexSet all_vertices() const {
    return n_ == 0 ? 0 : (~VertexSet{0} >> (64 - n_));
  }

  // Neighbors of a vertex set (union of open neighborhoods, minus nothing).
  VertexSet neighbors_of_set(VertexSet s) const {
    VertexSet r = 0;
    EQM_FOR_EACH_VERTEX(v, s) r |= adj_[v];
    return r;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    for (int u = 0; u < n_; ++u)
      EQM_FOR_EACH_VERTEX(v, adj_[u] & ~((bit(u) << 1) - 1))
        es.push_back({u, v});
    return es;
  }

  // Induced subgraph on `keep`, vertices relabeled in increasing order.
  // old_labels (optional out) maps new index -> old vertex.
  Graph induced(VertexSet keep, std::vector<int>* old_labels = nullptr) const {
    std::vector<int> map_new(static_cast<std::size_t>(n_), -1);
    std::vector<int> olds;
    EQM_FOR_EACH_VERTEX(v, keep) {
      map_new[v] = static_cast<int>(olds.size());
      olds.push_back(v);
    }
    Graph h(static_cast<int>(olds.size()));
    for (int i = 0; i < h.order(); ++i)
      EQM_FOR_EACH_VERTEX(w, adj_[olds[i]] & keep)
        if (map_new[w] > i) h.add_edge(i, map_new[w]);
    if (old_labels) *old_labels = std::move(olds);
    return h;
  }

  Graph minus_vertex(int v) const {
    check_vertex(v);
    return induced(all_vertices() & ~bit(v));
  }
  Graph minus_edge(int u, int v) const {
    if (!has_edge(u, v)) throw GraphError("edge not present");
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
  }

  // Permuted copy: vertex v becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      EQM_FOR_EACH_VERTEX(v, adj_[u])
        if (v > u) g.add_edge(perm[u], perm[v]);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// Standard families

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// ---------------------------------------------------------------------------
// graph6 (short form): header byte n+63, then the upper triangle in
// column-major order, 6 bits per byte, each byte offset by 63.

inline Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw Graph6Error("empty graph6 line", 0);
  const int n = static_cast<int>(static_cast<unsigned char>(line[0])) - 63;
  if (n < 0 || n > kMaxVertices)
    throw Graph6Error("graph6 header out of range (n=" + std::to_string(n) + ")", 0);
  Graph g(n);
  const int nbits = n * (n - 1) / 2;
  const std::size_t need = 1 + static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() < need)
    throw Graph6Error("truncated graph6 bit section", line.size());
  if (line.size() > need)
    throw Graph6Error("trailing bytes after graph6 data", need);
  int bitpos = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bitpos) {
      const std::size_t byte = 1 + static_cast<std::size_t>(bitpos / 6);
      const int c = static_cast<unsigned char>(line[byte]) - 63;
      if (c < 0 || c > 63)
        throw Graph6Error("graph6 byte out of range", byte);
      if ((c >> (5 - bitpos % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Padding bits of the final byte must be zero.
  if (nbits % 6 != 0) {
    const int c = static_cast<unsigned char>(line[need - 1]) - 63;
    if ((c & ((1 << (6 - nbits % 6)) - 1)) != 0)
      throw Graph6Error("nonzero graph6 padding bits", need - 1);
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nb = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nb = 0;
      }
    }
  }
  if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
  return out;
}

/// Human edge-list text format: "n m\nu v\n...".
inline Graph parse_edge_list(const std::string& text) {
  std::vector<long> nums;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      long x = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        x = x * 10 + (text[i++] - '0');
      nums.push_back(x);
    } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else {
      throw GraphError("unexpected character in edge list");
    }
  }
  if (nums.size() < 2) throw GraphError("edge list needs a 'n m' header");
  const long n = nums[0], m = nums[1];
  if (nums.size() != static_cast<std::size_t>(2 + 2 * m))
    throw GraphError("edge list length does not match header");
  Graph g(static_cast<int>(n));
  for (long e = 0; e < m; ++e)
    g.add_edge(static_cast<int>(nums[2 + 2 * e]), static_cast<int>(nums[3 + 2 * e]));
  return g;
}

inline std::string emit_edge_list(const Graph& g) {
  auto es = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(es.size()) + "\n";
  for (const auto& e : es)
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity

inline VertexSet component_of(const Graph& g, int start, VertexSet within) {
  VertexSet comp = bit(start), frontier = bit(start);
  while (frontier) {
    VertexSet next = 0;
    EQM_FOR_EACH_VERTEX(v, frontier) next |= g.neighbors(v) & within;
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp;
}

inline std::vector<VertexSet> connected_components(const Graph& g,
                                                   VertexSet within) {
  std::vector<VertexSet> comps;
  VertexSet left = within;
  while (left) {
    VertexSet c = component_of(g, lowest_vertex(left), within);
    comps.push_back(c);
    left &= ~c;
  }
  return comps;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.all_vertices());
}

inline bool is_connected_within(const Graph& g, VertexSet within) {
  if (within == 0) return true;
  return component_of(g, lowest_vertex(within), within) == within;
}

inline bool is_connected(const Graph& g) {
  return is_connected_within(g, g.all_vertices());
}

namespace detail {
// Visit all k-subsets of the set bits in `universe`, low-to-high lexicographic.
template <typename F>
bool for_each_subset_of_size(VertexSet universe, int k, F&& fn,
                             VertexSet chosen = 0) {
  if (k == 0) return fn(chosen);
  EQM_FOR_EACH_VERTEX(v, universe) {
    // Keep only higher vertices available for the rest of this subset.
    if (!for_each_subset_of_size(universe & ~(bit(v + 1) - 1) & ~bit(v), k - 1,
                                 fn, chosen | bit(v)))
      return false;
  }
  return true;
}
}  // namespace detail

// Exhaustive cut search, increasing size. Connectivity of K_n is n-1.
inline int vertex_connectivity(const Graph& g) {
  if (!is_connected(g)) throw GraphError("connectivity of a disconnected graph");
  const int n = g.order();
  if (n < 2) throw GraphError("connectivity needs at least 2 vertices");
  for (int k = 0; k <= n - 2; ++k) {
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
  return n - 1;  // complete graph
}

inline std::vector<VertexSet> k_cut_sets(const Graph& g, int k) {
  if (!is_connected(g)) throw GraphError("cut sets of a disconnected graph");
  std::vector<VertexSet> cuts;
  detail::for_each_subset_of_size(g.all_vertices(), k, [&](VertexSet s) {
    if (popcount(g.all_vertices() & ~s) >= 2 &&
        !is_connected_within(g, g.all_vertices() & ~s))
      cuts.push_back(s);
    return true;
  });
  return cuts;
}

// ---------------------------------------------------------------------------
// Bipartition

struct Bipartition {
  VertexSet sideU = 0;  // |U| <= |W|
  VertexSet sideW = 0;
};

// Two-coloring of a connected graph; normalized so |U| <= |W| with the
// lexicographically smaller side as U on ties. Edgeless graphs get U = empty.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  VertexSet side[2] = {0, 0};
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    side[0] |= bit(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      EQM_FOR_EACH_VERTEX(v, g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          side[color[v]] |= bit(v);
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b{side[0], side[1]};
  const int c0 = popcount(b.sideU), c1 = popcount(b.sideW);
  const bool swap =
      c1 < c0 ||
      (c0 == c1 && (b.sideW & -b.sideW) < (b.sideU & -b.sideU) && c0 > 0);
  if (swap) std::swap(b.sideU, b.sideW);
  return b;
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

// ---------------------------------------------------------------------------
// Independence

inline bool is_independent_set(const Graph& g, VertexSet s) {
  EQM_FOR_EACH_VERTEX(v, s)
    if (g.neighbors(v) & s) return false;
  return true;
}

namespace detail {
inline int alpha_rec(const Graph& g, VertexSet avail) {
  if (avail == 0) return 0;
  // Branch on a max-degree vertex within avail: take it or discard it.
  int best_v = -1, best_d = -1;
  EQM_FOR_EACH_VERTEX(v, avail) {
    const int d = popcount(g.neighbors(v) & avail);
    if (d > best_d) {
      best_d = d;
      best_v = v;
    }
  }
  if (best_d == 0) return popcount(avail);  // all isolated: take everything
  const int with = 1 + alpha_rec(g, avail & ~bit(best_v) & ~g.neighbors(best_v));
  const int without = alpha_rec(g, avail & ~bit(best_v));
  return std::max(with, without);
}
}  // namespace detail

inline int independence_number(const Graph& g) {
  return detail::alpha_rec(g, g.all_vertices());
}

// Yields every independent set of size exactly k, lexicographic order.
// Callback returns false to stop early.
template <typename F>
void independent_sets(const Graph& g, int k, F&& fn) {
  detail::for_each_subset_of_size(g.all_vertices(), k, [&](VertexSet s) {
    if (is_independent_set(g, s)) return fn(s);
    return true;
  });
}

inline std::vector<VertexSet> independent_sets(const Graph& g, int k) {
  std::vector<VertexSet> out;
  independent_sets(g, k, [&](VertexSet s) {
    out.push_back(s);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Structure flags

struct StructureFlags {
  bool is_complete = false;
  std::optional<std::pair<int, int>> complete_bipartite_params;  // (a,b), a<=b
  bool is_triangle_free = false;
  int diameter = 0;
  bool has_dominating_edge = false;
  bool is_maximal_triangle_free = false;
};

inline bool is_clique_set(const Graph& g, VertexSet s) {
  EQM_FOR_EACH_VERTEX(v, s)
    if ((g.neighbors(v) & s) != (s & ~bit(v))) return false;
  return true;
}

// If the induced subgraph on s is a complete bipartite graph K_{a,b}
// (a,b >= 1, no edges inside the parts), return its parts.
inline std::optional<Bipartition> complete_bipartite_split(const Graph& g,
                                                           VertexSet s) {
  if (popcount(s) < 2 || !is_connected_within(g, s)) return std::nullopt;
  std::vector<int> labels;
  Graph h = g.induced(s, &labels);
  auto b = bipartition(h);
  if (!b) return std::nullopt;
  EQM_FOR_EACH_VERTEX(u, b->sideU)
    if ((h.neighbors(u) & b->sideW) != b->sideW) return std::nullopt;
  Bipartition out;
  EQM_FOR_EACH_VERTEX(u, b->sideU) out.sideU |= bit(labels[u]);
  EQM_FOR_EACH_VERTEX(w, b->sideW) out.sideW |= bit(labels[w]);
  return out;
}

inline bool has_triangle(const Graph& g) {
  for (const auto& e : g.edges())
    if (g.neighbors(e.u) & g.neighbors(e.v)) return true;
  return false;
}

inline int diameter(const Graph& g) {
  if (g.order() == 0) throw GraphError("diameter of the empty graph");
  if (!is_connected(g)) throw GraphError("diameter of a disconnected graph");
  int diam = 0;
  for (int s = 0; s < g.order(); ++s) {
    VertexSet seen = bit(s), frontier = bit(s);
    int dist = 0;
    while (seen != g.all_vertices()) {
      VertexSet next = 0;
      EQM_FOR_EACH_VERTEX(v, frontier) next |= g.neighbors(v);
      frontier = next & ~seen;
      seen |= frontier;
      ++dist;
    }
    diam = std::max(diam, dist);
  }
  return diam;
}

inline StructureFlags structure_flags(const Graph& g) {
  StructureFlags f;
  f.is_complete = is_clique_set(g, g.all_vertices());
  if (auto b = complete_bipartite_split(g, g.all_vertices()))
    f.complete_bipartite_params = {popcount(b->sideU), popcount(b->sideW)};
  f.is_triangle_free = !has_triangle(g);
  f.diameter = diameter(g);
  for (const auto& e : g.edges()) {
    VertexSet closed = g.neighbors(e.u) | g.neighbors(e.v) | bit(e.u) | bit(e.v);
    if (closed == g.all_vertices()) {
      f.has_dominating_edge = true;
      break;
    }
  }
  if (f.is_triangle_free) {
    f.is_maximal_triangle_free = true;
    for (int u = 0; u < g.order() && f.is_maximal_triangle_free; ++u)
      for (int v = u + 1; v < g.order(); ++v)
        if (!g.has_edge(u, v) && !(g.neighbors(u) & g.neighbors(v))) {
          f.is_maximal_triangle_free = false;
          break;
        }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Line graph

struct LineGraph {
  Graph graph;
  std::vector<Edge> vertex_edges;  // line-graph vertex i represents this edge
};

inline LineGraph line_graph(const Graph& g) {
  LineGraph lg;
  lg.vertex_edges = g.edges();
  const int m = static_cast<int>(lg.vertex_edges.size());
  if (m > kMaxVertices) throw GraphError("line graph exceeds vertex cap");
  lg.graph = Graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Edge &a = lg.vertex_edges[i], &b = lg.vertex_edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        lg.graph.add_edge(i, j);
    }
  return lg;
}

// ---------------------------------------------------------------------------
// Canonical form: equitable refinement + individualization search with
// automorphism pruning. Exact; throws when the node budget runs out.

struct CanonicalForm {
  Graph graph;            // canonically relabeled copy
  std::string g6;         // canonical graph6 string
  std::vector<int> perm;  // perm[old vertex] = canonical label
};

struct CanonicalBudgetError : GraphError {
  using GraphError::GraphError;
};

namespace detail {

class Canonicalizer {
 public:
  Canonicalizer(const Graph& g, long budget) : g_(g), budget_(budget) {}

  // cells: ordered partition; cell order is preserved by refinement, so a
  // trailing singleton stays in the last canonical position.
  void run(std::vector<std::vector<int>> cells) {
    refine(cells);
    search(cells);
    if (best_perm_.empty()) throw GraphError("canonical search found no leaf");
  }

  const std::string& best_key() const { return best_key_; }
  const std::vector<int>& best_perm() const { return best_perm_; }

 private:
  void refine(std::vector<std::vector<int>>& cells) {
    for (;;) {
      // Signature of v: per cell, how many neighbors v has in it.
      std::vector<VertexSet> masks(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) masks[c] |= bit(v);
      std::vector<std::vector<int>> next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> key;
          key.reserve(masks.size());
          for (VertexSet m : masks) key.push_back(popcount(g_.neighbors(v) & m));
          keyed.emplace_back(std::move(key), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<int> cur{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(cur));
            cur.clear();
          }
          cur.push_back(keyed[i].second);
        }
        next.push_back(std::move(cur));
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) break;
    }
  }

  void leaf(const std::vector<std::vector<int>>& cells) {
    const int n = g_.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    int pos = 0;
    for (const auto& cell : cells) perm[cell[0]] = pos++;
    std::string key;
    key.reserve(static_cast<std::size_t>(n) * n);
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inv[perm[v]] = v;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        key.push_back(g_.has_edge(inv[i], inv[j]) ? '1' : '0');
    if (best_key_.empty() || key < best_key_) {
      best_key_ = key;
      best_perm_ = perm;
    } else if (key == best_key_) {
      // best_perm_^{-1} o perm is an automorphism.
      std::vector<int> binv(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) binv[best_perm_[v]] = v;
      std::vector<int> aut(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) aut[v] = binv[perm[v]];
      generators_.push_back(std::move(aut));
    }
  }

  void search(std::vector<std::vector<int>> cells) {
    if (--budget_ < 0)
      throw CanonicalBudgetError("canonical form search budget exceeded");
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    // Base vertices individualized so far are exactly the singleton cells
    // preceding any branching; collect all singletons for the fix test.
    std::vector<int> base;
    for (const auto& cell : cells)
      if (cell.size() == 1) base.push_back(cell[0]);

    std::vector<int> tried;
    for (int v : cells[target]) {
      if (in_orbit_of_tried(v, tried, base)) continue;
      tried.push_back(v);
      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int u : cells[c])
            if (u != v) rest.push_back(u);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[c]);
        }
      }
      refine(child);
      search(std::move(child));
    }
  }

  bool in_orbit_of_tried(int v, const std::vector<int>& tried,
                         const std::vector<int>& base) const {
    if (tried.empty()) return false;
    const int n = g_.order();
    // Orbits under the subgroup of found generators fixing the base pointwise.
    std::vector<int> uf(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    bool any = false;
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int b : base)
        if (gen[b] != b) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n; ++x) {
        int a = find(x), b = find(gen[x]);
        if (a != b) uf[a] = b;
      }
    }
    if (!any) return false;
    for (int t : tried)
      if (find(t) == find(v)) return true;
    return false;
  }

  const Graph& g_;
  long budget_;
  std::string best_key_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g, long budget = 8'000'000) {
  CanonicalForm cf;
  const int n = g.order();
  cf.perm.resize(static_cast<std::size_t>(n));
  if (n == 0) {
    cf.graph = g;
    cf.g6 = emit_graph6(g);
    return cf;
  }
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[v] = v;
  detail::Canonicalizer c(g, budget);
  c.run({all});
  cf.perm = c.best_perm();
  cf.graph = g.relabeled(cf.perm);
  cf.g6 = emit_graph6(cf.graph);
  return cf;
}

// Canonical string minimized over permutations that place `pinned` last.
// Used by the orderly enumeration: the pinned vertex is in the canonical
// deletion orbit iff this equals the unrestricted canonical string.
inline std::string canonical_g6_pinned_last(const Graph& g, int pinned,
                                            long budget = 8'000'000) {
  const int n = g.order();
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != pinned) rest.push_back(v);
  detail::Canonicalizer c(g, budget);
  std::vector<std::vector<int>> cells;
  if (!rest.empty()) cells.push_back(std::move(rest));
  cells.push_back({pinned});
  c.run(std::move(cells));
  std::vector<int> perm = c.best_perm();
  return emit_graph6(g.relabeled(perm));
}

}  // namespace eqm

#endif  // EQM_GRAPH_HPP
