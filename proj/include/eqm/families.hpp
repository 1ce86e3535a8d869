#ifndef EQM_FAMILIES_HPP
#define EQM_FAMILIES_HPP

// Constructive generators for the named families (Types I-VIII, families
// A-E, even cliques, balanced and near-balanced bicliques), a compact
// descriptor grammar for the CLI, and classifiers recognizing membership:
// conn-2 types via the member-of-F conditions, conn-3 types, and the EFC
// partition into A..E / VCE.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eqm/equimatch.hpp"
#include "eqm/graph.hpp"
#include "eqm/matching.hpp"

namespace eqm {

enum class FamilyKind {
  TypeI, TypeII, TypeIII, TypeIV, TypeV, TypeVI, TypeVII, TypeVIII,
  FamA, FamB, FamC, FamD, FamE,
  EvenClique, BalancedBiclique, NearBiclique,
};

inline const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::TypeI: return "typeI";
    case FamilyKind::TypeII: return "typeII";
    case FamilyKind::TypeIII: return "typeIII";
    case FamilyKind::TypeIV: return "typeIV";
    case FamilyKind::TypeV: return "typeV";
    case FamilyKind::TypeVI: return "typeVI";
    case FamilyKind::TypeVII: return "typeVII";
    case FamilyKind::TypeVIII: return "typeVIII";
    case FamilyKind::FamA: return "famA";
    case FamilyKind::FamB: return "famB";
    case FamilyKind::FamC: return "famC";
    case FamilyKind::FamD: return "famD";
    case FamilyKind::FamE: return "famE";
    case FamilyKind::EvenClique: return "k2t";
    case FamilyKind::BalancedBiclique: return "knn";
    case FamilyKind::NearBiclique: return "kpp1";
  }
  throw GraphError("unknown family kind");
}

struct FamilyDescriptor {
  FamilyKind kind;
  int p = 0, q = 0, r = 0, t = 0, n = 0;
  int b1 = 1;              // Types I-IV: |B_1| of the S-to-B split
  int a1 = 1, a2 = 1;      // Type VII split (a3 implied); Type VIII |A_1|
  bool even = false;       // Type VIII even-components variant
  int deg = 0;             // famA: d(v)
  int dr = 0, dt = 0;      // famB: neighbors of v per side; famD: dt only
  bool minus_edge = false; // famC: K_{2r+1} minus an edge
  std::vector<std::pair<char, int>> comps;  // famE: ('k', order) | ('b', r)
};

struct GenResult {
  Graph graph;
  std::map<std::string, VertexSet> labels;
};

namespace detail {

inline void add_clique(Graph& g, VertexSet s) {
  EQM_FOR_EACH_VERTEX(u, s)
    EQM_FOR_EACH_VERTEX(v, s & ~((bit(u) << 1) - 1)) g.add_edge(u, v);
}

inline void add_join(Graph& g, VertexSet x, VertexSet y) {
  EQM_FOR_EACH_VERTEX(u, x)
    EQM_FOR_EACH_VERTEX(v, y & ~bit(u)) g.add_edge(u, v);
}

inline VertexSet range_set(int lo, int hi) {  // [lo, hi)
  VertexSet s = 0;
  for (int v = lo; v < hi; ++v) s |= bit(v);
  return s;
}

inline VertexSet first_k(VertexSet s, int k) {
  VertexSet r = 0;
  EQM_FOR_EACH_VERTEX(v, s) {
    if (k-- <= 0) break;
    r |= bit(v);
  }
  return r;
}

[[noreturn]] inline void range_error(const std::string& msg) {
  throw GraphError("descriptor out of range: " + msg);
}

inline void check_order(int n) {
  if (n > kMaxVertices) range_error("total order exceeds vertex cap");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generators. Deterministic labeling; the labels map names the defining sets.

inline GenResult generate(const FamilyDescriptor& d) {
  using detail::add_clique;
  using detail::add_join;
  using detail::range_set;
  GenResult out;
  auto& L = out.labels;
  switch (d.kind) {
    case FamilyKind::TypeI:
    case FamilyKind::TypeII:
    case FamilyKind::TypeIII:
    case FamilyKind::TypeIV: {
      const bool cliqueA =
          d.kind == FamilyKind::TypeI || d.kind == FamilyKind::TypeIII;
      const bool cliqueB =
          d.kind == FamilyKind::TypeI || d.kind == FamilyKind::TypeII;
      if (d.p < 1 || d.q < 1)
        detail::range_error(std::string(family_kind_name(d.kind)) +
                            " needs p>=1 and q>=1");
      const int splitMax = cliqueB ? 2 * d.p : d.p;  // |B| - 1 or p
      if (d.b1 < 1 || d.b1 > splitMax)
        detail::range_error(std::string(family_kind_name(d.kind)) + " needs 1<=b1<=" +
                            std::to_string(splitMax));
      const int nA = 2 * d.q, nB = 2 * d.p + 1, n = 2 + nA + nB;
      detail::check_order(n);
      Graph g(n);
      const VertexSet S = bit(0) | bit(1);
      const VertexSet A = range_set(2, 2 + nA);
      const VertexSet B = range_set(2 + nA, n);
      if (cliqueA) {
        add_clique(g, A);
        add_join(g, S, A);
        L["A"] = A;
      } else {
        const VertexSet A1 = range_set(2, 2 + d.q);
        const VertexSet A2 = range_set(2 + d.q, 2 + nA);
        add_join(g, A1, A2);
        add_join(g, bit(0), A1);
        add_join(g, bit(1), A2);
        L["A"] = A;
        L["A1"] = A1;
        L["A2"] = A2;
      }
      VertexSet attach;  // part of B receiving S edges
      if (cliqueB) {
        add_clique(g, B);
        attach = B;
        L["B"] = B;
      } else {
        const VertexSet W = range_set(2 + nA, 2 + nA + d.p + 1);  // (p+1)-side
        const VertexSet P = range_set(2 + nA + d.p + 1, n);
        add_join(g, W, P);
        attach = W;
        L["B"] = B;
        L["Bstable"] = W;
        L["Bside"] = P;
      }
      const VertexSet B1 = detail::first_k(attach, d.b1);
      const VertexSet B2 = attach & ~B1;
      add_join(g, bit(0), B1);
      add_join(g, bit(1), B2);
      L["S"] = S;
      L["s1"] = bit(0);
      L["s2"] = bit(1);
      L["B1"] = B1;
      L["B2"] = B2;
      out.graph = std::move(g);
      return out;
    }
    case FamilyKind::TypeV: {
      if (d.q < 3) detail::range_error("typeV needs q>=3");
      const int n = 2 * d.q + 3;
      detail::check_order(n);
      Graph g(n);
      const int s1 = 0, s2 = 1, b = 2, a1 = 3, a2 = 4, w = 5;
      const VertexSet core = range_set(6, n);  // K_{2q-3}
      add_clique(g, core);
      add_join(g, bit(a1) | bit(a2) | bit(w), core);
      g.add_edge(s1, b);
      g.add_edge(s1, a1);
      g.add_edge(s1, w);
      g.add_edge(s2, b);
      g.add_edge(s2, a2);
      g.add_edge(s2, w);
      L["S"] = bit(s1) | bit(s2);
      L["s1"] = bit(s1);
      L["s2"] = bit(s2);
      L["b"] = bit(b);
      L["B"] = bit(b);
      L["a1"] = bit(a1);
      L["a2"] = bit(a2);
      L["w"] = bit(w);
      L["A"] = bit(a1) | bit(a2) | bit(w) | core;
      L["core"] = core;
      out.graph = std::move(g);
      return out;
    }
    case FamilyKind::TypeVI: {
      if (d.p < 1 || d.q < 1) detail::range_error("typeVI needs p>=1 and q>=1");
      const int nA = 2 * d.p + 1, nB = 2 * d.q + 1, n = 3 + nA + nB;
      detail::check_order(n);
      Graph g(n);
      const VertexSet A = range_set(3, 3 + nA);
      const VertexSet B = range_set(3 + nA, n);
      const int a = 3, b = 3 + nA;
      add_clique(g, A);
      add_clique(g, B);
      add_join(g, bit(0), (A & ~bit(a)) | (B & ~bit(b)));
      add_join(g, bit(1), B | bit(a));
      add_join(g, bit(2), A | bit(b));
      L["S"] = range_set(0, 3);
      L["s1"] = bit(0);
      L["s2"] = bit(1);
      L["s3"] = bit(2);
      L["A"] = A;
      L["B"] = B;
      L["a"] = bit(a);
      L["b"] = bit(b);
      out.graph = std::move(g);
      return out;
    }
    case FamilyKind::TypeVII: {
      if (d.p < 1 || d.q < 1) detail::range_error("typeVII needs p>=1 and q>=1");
      const int nA = 2 * d.p + 1, nB = 2 * d.q + 1, n = 3 + nA + nB;
      const int a3 = nA - d.a1 - d.a2;
      if (d.a1 < 1 || d.a2 < 1 || a3 < 1)
        detail::range_error("typeVII needs a1,a2>=1 with a1+a2<=2p");
      detail::check_order(n);
      Graph g(n);
      const VertexSet A = range_set(3, 3 + nA);
      const VertexSet B = range_set(3 + nA, n);
      add_clique(g, A);
      add_clique(g, B);
      const VertexSet A1 = range_set(3, 3 + d.a1);
      const VertexSet A2 = range_set(3 + d.a1, 3 + d.a1 + d.a2);
      const VertexSet A3 = A & ~A1 & ~A2;
      const VertexSet parts[3] = {A1, A2, A3};
      for (int i = 0; i < 3; ++i) add_join(g, bit(i), B | (A & ~parts[i]));
      L["S"] = range_set(0, 3);
      L["s1"] = bit(0);
      L["s2"] = bit(1);
      L["s3"] = bit(2);
      L["A"] = A;
      L["B"] = B;
      L["A1"] = A1;
      L["A2"] = A2;
      L["A3"] = A3;
      out.graph = std::move(g);
      return out;
    }
    case FamilyKind::TypeVIII: {
      const int pmin = d.even ? 2 : 1;
      if (d.p < pmin || d.q < pmin)
        detail::range_error(d.even ? "typeVIII even variant needs p,q>=2"
                                   : "typeVIII needs p,q>=1");
      const int nA = d.even ? 2 * d.p : 2 * d.p + 1;
      const int nB = d.even ? 2 * d.q : 2 * d.q + 1;
      const int n = 3 + nA + nB;
      // In the even variant |A_1| = 1 yields an equimatchable graph with a
      // non-critical edge, so such splits are excluded from the family.
      const int a1min = d.even ? 2 : 1;
      if (d.a1 < a1min || d.a1 > nA - 1)
        detail::range_error("typeVIII needs " + std::to_string(a1min) +
                            "<=a1<=|A|-1");
      detail::check_order(n);
      Graph g(n);
      const VertexSet A = range_set(3, 3 + nA);
      const VertexSet B = range_set(3 + nA, n);
      add_clique(g, A);
      add_clique(g, B);
      g.add_edge(0, 1);
      const VertexSet A1 = range_set(3, 3 + d.a1);
      const VertexSet A2 = A & ~A1;
      add_join(g, bit(0), B | A1);
      add_join(g, bit(1), B | A1);
      add_join(g, bit(2), B | A2);
      L["S"] = range_set(0, 3);
      L["s1"] = bit(0);
      L["s2"] = bit(1);
      L["s3"] = bit(2);
      L["A"] = A;
      L["B"] = B;
      L["A1"] = A1;
      L["A2"] = A2;
      out.graph = std::move(g);
      return out;
    }
    case FamilyKind::FamA: {
      if (d.r < 2) detail::range_error("famA needs r>=2");
      if (d.deg < 2 || d.deg > 2 * d.r - 2)
        detail::range_error("famA needs 2<=deg<=2r-2");
      const int n = 2 * d.r + 1;
      detail::check_order(n);
      Graph g(n);
      const VertexSet K = range_set(0, 2 * d.r);
      add_clique(g, K);
      add_join(g, bit(2 * d.r), range_set(0, d.deg));
      L["v"] = bit(2 * d.r);
      L["K"] = K;
      out.graph = std::move(g);
      return out;
    }
    case FamilyKind::FamB:
    case FamilyKind::FamD: {
      const bool isB = d.kind == FamilyKind::FamB;
      if (d.r < 2)
        detail::range_error(std::string(family_kind_name(d.kind)) + " needs r>=2");
      if (isB && (d.dr < 1 || d.dr > d.r - 1 || d.dt < 1 || d.dt > d.r - 1))
        detail::range_error("famB needs 1<=dr,dt<=r-1");
      if (!isB && (d.dt < 1 || d.dt > d.r))
        detail::range_error("famD needs 1<=dt<=r");
      const int n = 2 * d.r + 1;
      detail::check_order(n);
      Graph g(n);
      const VertexSet R = range_set(0, d.r);
      const VertexSet T = range_set(d.r, 2 * d.r);
      add_join(g, R, T);
      const int dr = isB ? d.dr : d.r;  // famD: v complete to R
      add_join(g, bit(2 * d.r),
               detail::first_k(R, dr) | detail::first_k(T, d.dt));
      L["v"] = bit(2 * d.r);
      L["R"] = R;
      L["T"] = T;
      out.graph = std::move(g);
      return out;
    }
    case FamilyKind::FamC: {
      if (d.r < 1) detail::range_error("famC needs r>=1");
      if (d.r == 1 && d.minus_edge)
        detail::range_error("famC minus-edge needs r>=2");
      const int n = 2 * d.r + 1;
      detail::check_order(n);
      Graph g = complete_graph(n);
      if (d.minus_edge) g.remove_edge(0, 1);
      out.graph = std::move(g);
      return out;
    }
    case FamilyKind::FamE: {
      if (d.comps.size() < 2) detail::range_error("famE needs >=2 components");
      int n = 1;
      for (auto [c, x] : d.comps) {
        if (c == 'k') {
          if (x < 2 || x % 2 != 0)
            detail::range_error("famE clique component needs even order >=2");
          n += x;
        } else if (c == 'b') {
          if (x < 1) detail::range_error("famE biclique component needs r>=1");
          n += 2 * x;
        } else {
          detail::range_error("famE component tag must be k<order> or b<r>");
        }
      }
      detail::check_order(n);
      Graph g(n);
      int base = 1;
      int idx = 0;
      for (auto [c, x] : d.comps) {
        VertexSet comp;
        if (c == 'k') {
          comp = range_set(base, base + x);
          add_clique(g, comp);
          g.add_edge(0, base);
          g.add_edge(0, base + 1);
          base += x;
        } else {
          comp = range_set(base, base + 2 * x);
          add_join(g, range_set(base, base + x), range_set(base + x, base + 2 * x));
          g.add_edge(0, base);
          g.add_edge(0, base + x);
          base += 2 * x;
        }
        L["C" + std::to_string(++idx)] = comp;
      }
      L["v"] = bit(0);
      out.graph = std::move(g);
      return out;
    }
    case FamilyKind::EvenClique:
      if (d.t < 1) detail::range_error("k2t needs t>=1");
      detail::check_order(2 * d.t);
      out.graph = complete_graph(2 * d.t);
      return out;
    case FamilyKind::BalancedBiclique:
      if (d.n < 1) detail::range_error("knn needs n>=1");
      detail::check_order(2 * d.n);
      out.graph = complete_bipartite(d.n, d.n);
      return out;
    case FamilyKind::NearBiclique:
      if (d.p < 1) detail::range_error("kpp1 needs p>=1");
      detail::check_order(2 * d.p + 1);
      out.graph = complete_bipartite(d.p, d.p + 1);
      return out;
  }
  throw GraphError("unknown family kind");
}

// ---------------------------------------------------------------------------
// Descriptor text grammar: "<kind> key=value ...". famE components use
// "comps=k2+b3" (k<even order> clique, b<r> balanced biclique).

inline FamilyDescriptor parse_descriptor(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  if (!(in >> head)) throw GraphError("empty family descriptor");
  FamilyDescriptor d;
  bool found = false;
  for (FamilyKind k : {FamilyKind::TypeI, FamilyKind::TypeII, FamilyKind::TypeIII,
                       FamilyKind::TypeIV, FamilyKind::TypeV, FamilyKind::TypeVI,
                       FamilyKind::TypeVII, FamilyKind::TypeVIII, FamilyKind::FamA,
                       FamilyKind::FamB, FamilyKind::FamC, FamilyKind::FamD,
                       FamilyKind::FamE, FamilyKind::EvenClique,
                       FamilyKind::BalancedBiclique, FamilyKind::NearBiclique}) {
    if (head == family_kind_name(k)) {
      d.kind = k;
      found = true;
      break;
    }
  }
  if (!found) throw GraphError("unknown family kind '" + head + "'");
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw GraphError("descriptor token needs key=value: '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "comps") {
      std::size_t i = 0;
      while (i < val.size()) {
        const char c = val[i++];
        std::size_t j = i;
        while (j < val.size() && std::isdigit(static_cast<unsigned char>(val[j])))
          ++j;
        if (j == i) throw GraphError("famE component needs a size: '" + val + "'");
        d.comps.emplace_back(c, std::stoi(val.substr(i, j - i)));
        i = j;
        if (i < val.size()) {
          if (val[i] != '+') throw GraphError("famE components join with '+'");
          ++i;
        }
      }
      continue;
    }
    int x;
    try {
      std::size_t used = 0;
      x = std::stoi(val, &used);
      if (used != val.size()) throw std::invalid_argument("trail");
    } catch (...) {
      throw GraphError("descriptor value for '" + key + "' is not an integer");
    }
    if (key == "p") d.p = x;
    else if (key == "q") d.q = x;
    else if (key == "r") d.r = x;
    else if (key == "t") d.t = x;
    else if (key == "n") d.n = x;
    else if (key == "b1") d.b1 = x;
    else if (key == "a1") d.a1 = x;
    else if (key == "a2") d.a2 = x;
    else if (key == "deg") d.deg = x;
    else if (key == "dr") d.dr = x;
    else if (key == "dt") d.dt = x;
    else if (key == "even") d.even = x != 0;
    else if (key == "me") d.minus_edge = x != 0;
    else throw GraphError("unknown descriptor key '" + key + "'");
  }
  return d;
}

inline std::string print_descriptor(const FamilyDescriptor& d) {
  std::ostringstream out;
  out << family_kind_name(d.kind);
  switch (d.kind) {
    case FamilyKind::TypeI:
    case FamilyKind::TypeII:
    case FamilyKind::TypeIII:
    case FamilyKind::TypeIV:
      out << " p=" << d.p << " q=" << d.q << " b1=" << d.b1;
      break;
    case FamilyKind::TypeV:
      out << " q=" << d.q;
      break;
    case FamilyKind::TypeVI:
      out << " p=" << d.p << " q=" << d.q;
      break;
    case FamilyKind::TypeVII:
      out << " p=" << d.p << " q=" << d.q << " a1=" << d.a1 << " a2=" << d.a2;
      break;
    case FamilyKind::TypeVIII:
      out << " p=" << d.p << " q=" << d.q << " a1=" << d.a1
          << " even=" << (d.even ? 1 : 0);
      break;
    case FamilyKind::FamA:
      out << " r=" << d.r << " deg=" << d.deg;
      break;
    case FamilyKind::FamB:
      out << " r=" << d.r << " dr=" << d.dr << " dt=" << d.dt;
      break;
    case FamilyKind::FamC:
      out << " r=" << d.r;
      if (d.minus_edge) out << " me=1";
      break;
    case FamilyKind::FamD:
      out << " r=" << d.r << " dt=" << d.dt;
      break;
    case FamilyKind::FamE: {
      out << " comps=";
      for (std::size_t i = 0; i < d.comps.size(); ++i) {
        if (i) out << '+';
        out << d.comps[i].first << d.comps[i].second;
      }
      break;
    }
    case FamilyKind::EvenClique:
      out << " t=" << d.t;
      break;
    case FamilyKind::BalancedBiclique:
      out << " n=" << d.n;
      break;
    case FamilyKind::NearBiclique:
      out << " p=" << d.p;
      break;
  }
  return out.str();
}

// Canonicalized splits: s_1 takes the smaller attachment, Type VII part
// sizes sorted ascending.
inline FamilyDescriptor canonical_descriptor(FamilyDescriptor d) {
  switch (d.kind) {
    case FamilyKind::TypeI:
    case FamilyKind::TypeII: {
      const int total = 2 * d.p + 1;
      d.b1 = std::min(d.b1, total - d.b1);
      break;
    }
    case FamilyKind::TypeIII:
    case FamilyKind::TypeIV: {
      const int total = d.p + 1;
      d.b1 = std::min(d.b1, total - d.b1);
      break;
    }
    case FamilyKind::TypeVII: {
      int a3 = 2 * d.p + 1 - d.a1 - d.a2;
      int s[3] = {d.a1, d.a2, a3};
      std::sort(s, s + 3);
      d.a1 = s[0];
      d.a2 = s[1];
      break;
    }
    default:
      break;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Connectivity-2 classifier via the member-of-F conditions: some 2-cut
// S = {s1,s2} leaves exactly two components A, B with (i) B one of K_1,
// K_{2p+1}, K_{p,p+1} with the stated partial completeness, (ii) S
// independent, (iii) A u S inducing K_{2q+2} - s1s2 or K_{q+1,q+1} - s1s2
// (or the Type V shape when |B| = 1).

struct Conn2Match {
  FamilyDescriptor desc;
  VertexSet cut = 0;
  VertexSet compA = 0, compB = 0;
};

namespace detail {

// Does A u S induce K_{2q+2} - s1s2 (clique = true) or K_{q+1,q+1} - s1s2?
struct ASShape {
  bool clique = false;
  int q = 0;
};

inline std::optional<ASShape> as_shape(const Graph& g, VertexSet A, int s1,
                                       int s2) {
  const VertexSet AS = A | bit(s1) | bit(s2);
  Graph h = g.induced(AS);
  std::vector<int> labels;
  h = g.induced(AS, &labels);
  int h1 = -1, h2 = -1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == s1) h1 = static_cast<int>(i);
    if (labels[i] == s2) h2 = static_cast<int>(i);
  }
  Graph plus = h;
  plus.add_edge(h1, h2);
  if (is_clique_set(plus, plus.all_vertices())) {
    const int sz = popcount(AS);
    if (sz % 2 == 0 && sz >= 4) return ASShape{true, (sz - 2) / 2};
    return std::nullopt;
  }
  if (auto split = complete_bipartite_split(plus, plus.all_vertices())) {
    const bool opposite = ((split->sideU & bit(h1)) != 0) !=
                          ((split->sideU & bit(h2)) != 0);
    if (opposite && popcount(split->sideU) == popcount(split->sideW))
      return ASShape{false, popcount(split->sideU) - 1};
  }
  return std::nullopt;
}

inline std::optional<Conn2Match> match_conn2_cut(const Graph& g, VertexSet cut,
                                                 VertexSet A, VertexSet B) {
  const int s1 = lowest_vertex(cut);
  const int s2 = lowest_vertex(cut & ~bit(s1));
  if (g.has_edge(s1, s2)) return std::nullopt;  // (ii)
  Conn2Match m;
  m.cut = cut;
  m.compA = A;
  m.compB = B;
  if (popcount(B) == 1) {
    // Type V shape per condition (iii): N(s_i) = {b, a_i, w}.
    const int b = lowest_vertex(B);
    if (g.degree(s1) != 3 || g.degree(s2) != 3) return std::nullopt;
    const VertexSet common = g.neighbors(s1) & g.neighbors(s2);
    if (popcount(common) != 2 || !(common & B)) return std::nullopt;
    const VertexSet wset = common & A;
    if (popcount(wset) != 1) return std::nullopt;
    const VertexSet a1s = g.neighbors(s1) & A & ~wset;
    const VertexSet a2s = g.neighbors(s2) & A & ~wset;
    if (popcount(a1s) != 1 || popcount(a2s) != 1 || a1s == a2s)
      return std::nullopt;
    const int nA = popcount(A);
    if (nA % 2 != 0 || nA < 6) return std::nullopt;  // q >= 3
    // A is K_{2q} minus the three edges among {a1, a2, w}.
    const VertexSet stable = a1s | a2s | wset;
    bool ok = true;
    EQM_FOR_EACH_VERTEX(u, A) {
      const VertexSet want =
          (stable & bit(u)) ? (A & ~stable) : (A & ~bit(u));
      if ((g.neighbors(u) & A) != want) {
        ok = false;
        break;
      }
    }
    if (!ok) return std::nullopt;
    m.desc.kind = FamilyKind::TypeV;
    m.desc.q = nA / 2;
    (void)b;
    return m;
  }
  // |B| > 1: condition (iii) on A u S, condition (i) on B.
  auto shape = as_shape(g, A, s1, s2);
  if (!shape) return std::nullopt;
  const int nB = popcount(B);
  if (nB % 2 == 0) return std::nullopt;
  VertexSet attach;  // set the partial-completeness must cover exactly
  bool cliqueB;
  if (is_clique_set(g, B)) {
    cliqueB = true;
    attach = B;
  } else if (auto split = complete_bipartite_split(g, B)) {
    const int a = popcount(split->sideU), b2 = popcount(split->sideW);
    if (b2 != a + 1) return std::nullopt;
    cliqueB = false;
    attach = split->sideW;  // the (p+1)-stable set
  } else {
    return std::nullopt;
  }
  const VertexSet B1 = g.neighbors(s1) & B;
  const VertexSet B2 = g.neighbors(s2) & B;
  if (B1 == 0 || B2 == 0 || (B1 & B2) || (B1 | B2) != attach)
    return std::nullopt;
  m.desc.kind = shape->clique ? (cliqueB ? FamilyKind::TypeI : FamilyKind::TypeIII)
                              : (cliqueB ? FamilyKind::TypeII : FamilyKind::TypeIV);
  m.desc.q = shape->q;
  m.desc.p = (nB - 1) / 2;
  m.desc.b1 = std::min(popcount(B1), popcount(B2));
  return m;
}

}  // namespace detail

inline std::optional<Conn2Match> classify_conn2(const Graph& g) {
  if (!is_factor_critical(g))
    throw GraphError("classify_conn2 needs a factor-critical graph");
  if (g.order() < 7) throw GraphError("classify_conn2 needs order >= 7");
  if (vertex_connectivity(g) != 2)
    throw GraphError("classify_conn2 needs connectivity exactly 2");
  for (VertexSet cut : k_cut_sets(g, 2)) {
    auto comps = connected_components(g, g.all_vertices() & ~cut);
    if (comps.size() != 2) continue;
    for (int flip = 0; flip < 2; ++flip) {
      const VertexSet A = comps[flip], B = comps[1 - flip];
      if (auto m = detail::match_conn2_cut(g, cut, A, B)) return m;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Connectivity-3 classifier (appendix types). match_conn3_cut tests one cut
// with a fixed (A, B) component assignment against Types VI / VII / VIII.

struct Conn3Match {
  FamilyDescriptor desc;
  VertexSet cut = 0;
  VertexSet compA = 0, compB = 0;
};

namespace detail {

inline std::optional<Conn3Match> match_conn3_cut(const Graph& g, VertexSet cut,
                                                 VertexSet A, VertexSet B) {
  int s[3], si = 0;
  EQM_FOR_EACH_VERTEX(v, cut) s[si++] = v;
  int cut_edges = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (g.has_edge(s[i], s[j])) ++cut_edges;
  const int nA = popcount(A), nB = popcount(B);
  if (!is_clique_set(g, A) || !is_clique_set(g, B)) return std::nullopt;
  Conn3Match m;
  m.cut = cut;
  m.compA = A;
  m.compB = B;
  if (cut_edges == 0) {
    if (nA % 2 == 0 || nB % 2 == 0 || nA < 3 || nB < 3) return std::nullopt;
    // Type VII: every s_i complete to B; parts A_i = A \ N(s_i) partition A.
    bool allB = true;
    for (int i = 0; i < 3; ++i)
      if ((g.neighbors(s[i]) & B) != B) allB = false;
    if (allB) {
      VertexSet parts[3], uni = 0;
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        parts[i] = A & ~g.neighbors(s[i]);
        if (parts[i] == 0 || (parts[i] & uni)) ok = false;
        uni |= parts[i];
      }
      if (ok && uni == A) {
        int sz[3] = {popcount(parts[0]), popcount(parts[1]), popcount(parts[2])};
        std::sort(sz, sz + 3);
        m.desc.kind = FamilyKind::TypeVII;
        m.desc.p = (nA - 1) / 2;
        m.desc.q = (nB - 1) / 2;
        m.desc.a1 = sz[0];
        m.desc.a2 = sz[1];
        return m;
      }
    }
    // Type VI: roles - one vertex sees exactly {a} in A and all of B, one
    // sees all of A and exactly {b} in B, one sees A-a and B-b.
    for (int i2 = 0; i2 < 3; ++i2)
      for (int i3 = 0; i3 < 3; ++i3) {
        if (i3 == i2) continue;
        const int i1 = 3 - i2 - i3;
        const VertexSet na2 = g.neighbors(s[i2]) & A;
        const VertexSet nb3 = g.neighbors(s[i3]) & B;
        if (popcount(na2) != 1 || popcount(nb3) != 1) continue;
        if ((g.neighbors(s[i2]) & B) != B) continue;
        if ((g.neighbors(s[i3]) & A) != A) continue;
        if ((g.neighbors(s[i1]) & A) != (A & ~na2)) continue;
        if ((g.neighbors(s[i1]) & B) != (B & ~nb3)) continue;
        m.desc.kind = FamilyKind::TypeVI;
        m.desc.p = (nA - 1) / 2;
        m.desc.q = (nB - 1) / 2;
        return m;
      }
    return std::nullopt;
  }
  if (cut_edges != 1) return std::nullopt;
  // Type VIII: s1s2 adjacent with equal outside neighborhoods B u A1; s3
  // complete to B u A2; components both odd or both even.
  const bool even = nA % 2 == 0;
  if ((nB % 2 == 0) != even) return std::nullopt;
  if (even && (nA < 4 || nB < 4)) return std::nullopt;
  int e1 = -1, e2 = -1, e3 = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (g.has_edge(s[i], s[j])) {
        e1 = s[i];
        e2 = s[j];
        e3 = s[3 - i - j];
      }
  if ((g.neighbors(e1) & B) != B || (g.neighbors(e2) & B) != B ||
      (g.neighbors(e3) & B) != B)
    return std::nullopt;
  const VertexSet A1 = g.neighbors(e1) & A;
  if (A1 == 0 || A1 == A) return std::nullopt;
  if ((g.neighbors(e2) & A) != A1) return std::nullopt;
  if ((g.neighbors(e3) & A) != (A & ~A1)) return std::nullopt;
  m.desc.kind = FamilyKind::TypeVIII;
  m.desc.p = even ? nA / 2 : (nA - 1) / 2;
  m.desc.q = even ? nB / 2 : (nB - 1) / 2;
  m.desc.a1 = popcount(A1);
  m.desc.even = even;
  return m;
}

}  // namespace detail

inline std::optional<Conn3Match> match_conn3(const Graph& g, VertexSet cut,
                                             VertexSet A, VertexSet B) {
  if (auto m = detail::match_conn3_cut(g, cut, A, B)) return m;
  return detail::match_conn3_cut(g, cut, B, A);
}

inline std::optional<Conn3Match> classify_conn3(const Graph& g) {
  if (!is_factor_critical(g))
    throw GraphError("classify_conn3 needs a factor-critical graph");
  if (vertex_connectivity(g) != 3)
    throw GraphError("classify_conn3 needs connectivity exactly 3");
  for (VertexSet cut : k_cut_sets(g, 3)) {
    auto comps = connected_components(g, g.all_vertices() & ~cut);
    if (comps.size() != 2) continue;
    if (auto m = match_conn3(g, cut, comps[0], comps[1])) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// EFC partition: every EFC-graph is in exactly one of famA..famE or VCE.

enum class EfcLabel { FamA, FamB, FamC, FamD, FamE, VCE };

inline const char* efc_label_name(EfcLabel l) {
  switch (l) {
    case EfcLabel::FamA: return "famA";
    case EfcLabel::FamB: return "famB";
    case EfcLabel::FamC: return "famC";
    case EfcLabel::FamD: return "famD";
    case EfcLabel::FamE: return "famE";
    case EfcLabel::VCE: return "vce";
  }
  throw GraphError("unknown EFC label");
}

struct EfcClassification {
  EfcLabel label = EfcLabel::VCE;
  std::vector<std::pair<EfcLabel, int>> witnesses;  // (family, vertex v)
};

inline EfcClassification classify_efc(const Graph& g) {
  if (!is_EFC(g)) throw GraphError("classify_efc needs an EFC-graph");
  if (g.size() < 1)
    throw GraphError("classify_efc needs at least one edge");
  const int n = g.order();
  EfcClassification out;
  // famC by isomorphism: K_3, K_{2r+1} (r>=2), or K_{2r+1} minus an edge.
  const int maxm = n * (n - 1) / 2;
  if ((n == 3 && g.size() == 3) || (n >= 5 && g.size() == maxm) ||
      (n >= 5 && g.size() == maxm - 1))
    out.witnesses.emplace_back(EfcLabel::FamC, -1);
  // famE: cut vertex.
  for (int v = 0; v < n && n >= 3; ++v) {
    if (connected_components(g, g.all_vertices() & ~bit(v)).size() >= 2) {
      out.witnesses.emplace_back(EfcLabel::FamE, v);
      break;
    }
  }
  // famA / famB / famD witnesses v with G - v an even clique or K_{r,r}.
  for (int v = 0; v < n; ++v) {
    const VertexSet rest = g.all_vertices() & ~bit(v);
    const int nr = popcount(rest);
    if (nr < 4 || nr % 2 != 0) continue;
    if (is_clique_set(g, rest)) {
      const int r = nr / 2, dv = g.degree(v);
      if (r >= 2 && dv >= 2 && dv <= 2 * r - 2)
        out.witnesses.emplace_back(EfcLabel::FamA, v);
      continue;
    }
    std::vector<int> labels;
    Graph h = g.induced(rest, &labels);
    if (auto split = complete_bipartite_split(h, h.all_vertices())) {
      if (popcount(split->sideU) != popcount(split->sideW)) continue;
      VertexSet R = 0, T = 0;
      EQM_FOR_EACH_VERTEX(u, split->sideU) R |= bit(labels[u]);
      EQM_FOR_EACH_VERTEX(u, split->sideW) T |= bit(labels[u]);
      const VertexSet nv = g.neighbors(v);
      if (!(nv & R) || !(nv & T)) continue;  // needs two adjacent neighbors
      if ((nv & R) == R || (nv & T) == T)
        out.witnesses.emplace_back(EfcLabel::FamD, v);
      else if ((nv & R) != R && (nv & T) != T)
        out.witnesses.emplace_back(EfcLabel::FamB, v);
    }
  }
  std::vector<EfcLabel> kinds;
  for (auto& [k, v] : out.witnesses)
    if (kinds.empty() || kinds.back() != k) kinds.push_back(k);
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  if (kinds.size() > 1) {
    std::string msg = "EFC families overlap:";
    for (auto k : kinds) msg += std::string(" ") + efc_label_name(k);
    throw GraphError(msg);
  }
  out.label = kinds.empty() ? EfcLabel::VCE : kinds[0];
  if ((out.label == EfcLabel::VCE) != is_VCE(g).value)
    throw GraphError("EFC partition disagrees with the VCE test");
  return out;
}

// ---------------------------------------------------------------------------
// Bipartite tests (Hall-style conditions on the smaller side U).

namespace detail {

// Visit every non-empty submask of `mask`. Callback returns false to stop.
template <typename F>
void for_each_submask(VertexSet mask, F&& fn) {
  for (VertexSet s = mask; s != 0; s = (s - 1) & mask)
    if (!fn(s)) return;
}

}  // namespace detail

inline bool bipartite_equim_test(const Graph& g) {
  if (!is_connected(g)) throw GraphError("bipartite test needs a connected graph");
  auto b = bipartition(g);
  if (!b) throw GraphError("bipartite test on a non-bipartite graph");
  bool ok = true;
  EQM_FOR_EACH_VERTEX(u, b->sideU) {
    bool has = false;
    detail::for_each_submask(g.neighbors(u), [&](VertexSet s) {
      if (popcount(g.neighbors_of_set(s)) <= popcount(s)) {
        has = true;
        return false;
      }
      return true;
    });
    if (!has) {
      ok = false;
      break;
    }
  }
  return ok;
}

inline bool bipartite_ece_test(const Graph& g) {
  if (!is_connected(g)) throw GraphError("bipartite test needs a connected graph");
  auto b = bipartition(g);
  if (!b) throw GraphError("bipartite test on a non-bipartite graph");
  if (g.order() == 2 && g.size() == 1)
    throw GraphError("bipartite ECE test excludes K_2");
  // Equality |N(S)| = |S| must hold exactly at S = N(u): strict inequality on
  // proper non-empty subsets, equality at N(u) itself (which is what makes the
  // graph equimatchable in the first place).
  bool ok = true;
  EQM_FOR_EACH_VERTEX(u, b->sideU) {
    const VertexSet nu = g.neighbors(u);
    if (popcount(g.neighbors_of_set(nu)) != popcount(nu)) {
      ok = false;
      break;
    }
    detail::for_each_submask(nu, [&](VertexSet s) {
      if (s != nu && popcount(g.neighbors_of_set(s)) <= popcount(s)) {
        ok = false;
        return false;
      }
      return true;
    });
    if (!ok) break;
  }
  return ok;
}

}  // namespace eqm

#endif  // EQM_FAMILIES_HPP
