#pragma once

/**
 * @file monodromy.hpp
 * @brief Newton data of complex polynomials, the convex graphs ν₀ and ν_∞,
 *        equivariant refined limit Hodge-Deligne polynomials, the symbolic
 *        motivic nearby fiber, eigenvalue spectra and Jordan block structures
 *        for monodromy at 0, at infinity and of Milnor fibers.
 */

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mhs/mixed.hpp"

namespace mhs {

// ---------------------------------------------------------------------------
// Newton data

struct NewtonData {
  int n = 0;
  std::vector<IVec> support;  // sorted, without duplicates

  bool has_constant_term() const { return std::binary_search(support.begin(), support.end(), IVec(n, 0)); }
};

inline NewtonData newton_data(int n, std::vector<IVec> support) {
  if (n < 1) throw InvalidInput("number of variables must be positive");
  if (support.empty()) throw InvalidInput("empty support");
  for (const auto& p : support) {
    if (static_cast<int>(p.size()) != n) throw InvalidInput("exponent vector of wrong length");
    for (auto x : p)
      if (x < 0) throw InvalidInput("negative exponent");
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return NewtonData{n, std::move(support)};
}

// Coordinate axes (0-based) containing no support point m e_i with m > 0.
inline std::vector<int> nonconvenient_axes(const NewtonData& nd) {
  std::vector<int> bad;
  for (int i = 0; i < nd.n; ++i) {
    bool hit = false;
    for (const auto& p : nd.support) {
      bool on_axis = p[i] > 0;
      for (int j = 0; j < nd.n && on_axis; ++j)
        if (j != i && p[j] != 0) on_axis = false;
      hit = hit || on_axis;
    }
    if (!hit) bad.push_back(i);
  }
  return bad;
}

inline void require_convenient(const NewtonData& nd) {
  auto bad = nonconvenient_axes(nd);
  if (bad.empty()) return;
  std::string s = "no support point on the axis of";
  for (int i : bad) s += " x" + std::to_string(i + 1);
  throw NotConvenient(s);
}

// P = Δ_{NP(f)}, the convex hull of the support and the origin
inline LatticePolytope newton_polytope(const NewtonData& nd) {
  auto pts = nd.support;
  pts.push_back(IVec(nd.n, 0));
  return LatticePolytope::hull(pts, nd.n);
}

// ---------------------------------------------------------------------------
// Problems

enum class ProblemKind { AtZero, AtInfinity, Milnor, GenericFamily };

inline std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::AtZero: return "AtZero";
    case ProblemKind::AtInfinity: return "AtInfinity";
    case ProblemKind::Milnor: return "Milnor";
    default: return "GenericFamily";
  }
}

struct MonodromyProblem {
  ProblemKind kind = ProblemKind::GenericFamily;
  int n = 0;
  NewtonData newton;  // empty for GenericFamily
  ConvexGraph graph;
};

// ν₀: 1 at the origin, 0 on NP(f).  ν_∞: 0 at the origin, 1 on the faces at infinity.
inline MonodromyProblem make_problem(const NewtonData& nd, ProblemKind kind) {
  if (kind == ProblemKind::GenericFamily) throw InvalidInput("a generic family needs explicit heights");
  require_convenient(nd);
  LatticePolytope P = newton_polytope(nd);
  IVec origin(nd.n, 0);
  HeightFunction h;
  h.points.push_back(origin);
  if (kind == ProblemKind::AtInfinity) {
    h.values.push_back(0);
    for (const auto& v : P.vertices())
      if (v != origin) {
        h.points.push_back(v);
        h.values.push_back(1);
      }
  } else {
    if (nd.has_constant_term()) throw InvalidInput("f must vanish at the origin");
    h.values.push_back(1);
    for (const auto& p : nd.support) {
      h.points.push_back(p);
      h.values.push_back(0);
    }
  }
  return MonodromyProblem{kind, nd.n, nd, lower_hull(P, h)};
}

// A family with Newton polytope P ⊆ R^n_{≥0} containing the origin and arbitrary heights.
inline MonodromyProblem generic_problem(const ConvexGraph& g) {
  const auto& P = g.polytope();
  if (!P.contains(IVec(P.ambient_dim(), 0))) throw InvalidInput("the polytope must contain the origin");
  for (const auto& v : P.vertices())
    for (auto x : v)
      if (x < 0) throw InvalidInput("the polytope must lie in the positive orthant");
  return MonodromyProblem{ProblemKind::GenericFamily, P.ambient_dim(), NewtonData{}, g};
}

// ---------------------------------------------------------------------------
// Coordinate faces P^S = P ∩ R^S

inline unsigned support_mask(const std::vector<IVec>& pts) {
  unsigned m = 0;
  for (const auto& p : pts)
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) m |= 1u << i;
  return m;
}

inline int coordinate_face(const LatticePolytope& P, unsigned mask) {
  std::vector<IVec> pts;
  for (const auto& v : P.vertices())
    if ((support_mask({v}) & ~mask) == 0) pts.push_back(v);
  return P.smallest_face_containing(pts);
}

// dim P^S = |S| for every S
inline bool is_convenient_polytope(const LatticePolytope& P) {
  int n = P.ambient_dim();
  if (P.dim() != n || !P.contains(IVec(n, 0))) return false;
  for (unsigned s = 0; s < (1u << n); ++s)
    if (P.face_dim(coordinate_face(P, s)) != __builtin_popcount(s)) return false;
  return true;
}

inline void require_convenient(const LatticePolytope& P) {
  if (!is_convenient_polytope(P)) throw NotConvenient("dim P^S differs from |S| for some coordinate subset S");
}

// ---------------------------------------------------------------------------
// Refined limit Hodge-Deligne polynomials

inline WPolynomial uvw2() { return WPolynomial::monomial({"u", "v", "w"}, {1, 1, 2}, GroupRingElement(1)); }

inline WPolynomial divided_by_uvw2(const WPolynomial& p) {
  WPolynomial r = p.divided_by_monomial({{"u", 1}, {"v", 1}, {"w", 2}});
  if (!r.is_polynomial()) throw InexactDivision("not divisible by uvw^2");
  return r.compact();
}

// h*(Q,ν|_Q;u,v,w) for a face Q of P (points give 1)
inline WPolynomial face_refined_h_star(const ConvexGraph& g, int face) {
  const auto& P = g.polytope();
  if (P.face_dim(face) <= 0) return WPolynomial(1);
  return refined_h_star(face == P.top_face() ? g : g.restrict_to_face(face)).poly;
}

// E(X°_∞,μ̂;u,v,w) with uvw²E = (uvw²−1)^{dim P} + (−1)^{dim P+1} h*(P,ν;u,v,w), any dimension
inline WPolynomial torus_refined_hd(const ConvexGraph& g) {
  int d = g.dim();
  WPolynomial T = uvw2();
  WPolynomial r = (T - WPolynomial(1)).pow(d);
  WPolynomial h = face_refined_h_star(g, g.polytope().top_face());
  if (d % 2 == 0)
    r -= h;
  else
    r += h;
  return divided_by_uvw2(r);
}

inline WPolynomial refined_hd_polynomial_torus(const ConvexGraph& g) {
  if (g.dim() != g.polytope().ambient_dim()) throw NotFullDimensional("the Newton polytope must be full-dimensional");
  return torus_refined_hd(g);
}

// E_{int,Lef}(P;t) with (t−1)E = t^{dim P} g([∅,P]*;1/t) − g([∅,P]*;t)
inline IntPoly intersection_lefschetz(const LatticePolytope& P) {
  IntPoly gd = P.g_dual(P.empty_face(), P.top_face());
  IntPoly num = gd.reversed(std::max(P.dim(), 0));
  num -= gd;
  return num.divided_by_t_minus_one();
}

// E_int(X_∞,μ̂;u,v,w) with uvw²E_int = uvw² E_{int,Lef}(P;uvw²) + (−1)^{dim P+1} w^{dim P+1} l*(P,ν;u,v)
inline WPolynomial intersection_hd(const ConvexGraph& g) {
  int d = g.dim();
  WPolynomial r = uvw2() * in_monomial(intersection_lefschetz(g.polytope()), 1, 1, 2);
  WPolynomial l = WPolynomial::monomial({"w"}, {d + 1}, GroupRingElement(1)) * local_limit_mixed_h_star(g);
  if (d % 2 == 0)
    r -= l;
  else
    r += l;
  return divided_by_uvw2(r);
}

inline WPolynomial intersection_hd_polynomial(const ConvexGraph& g) {
  if (g.dim() != g.polytope().ambient_dim()) throw NotFullDimensional("the Newton polytope must be full-dimensional");
  return intersection_hd(g);
}

// Σ_{Q ≠ ∅} E(X_Q°) g([Q,P]*;uvw²): the stratification route to E_int
inline WPolynomial intersection_hd_by_strata(const ConvexGraph& g) {
  const auto& P = g.polytope();
  WPolynomial r;
  for (int q = 0; q < P.num_faces(); ++q) {
    if (P.face_dim(q) <= 0) continue;
    const ConvexGraph gq = q == P.top_face() ? g : g.restrict_to_face(q);
    r += torus_refined_hd(gq) * in_monomial(P.g_dual(q, P.top_face()), 1, 1, 2);
  }
  return r.compact();
}

// uvw²E = (uvw²)^n + (−1)^{n−1} Σ_S (−1)^{n−|S|} h*(P^S,ν|;u,v,w)
inline WPolynomial affine_refined_hd(const ConvexGraph& g) {
  const auto& P = g.polytope();
  require_convenient(P);
  int n = P.ambient_dim();
  WPolynomial T = uvw2();
  WPolynomial sum;
  for (unsigned s = 0; s < (1u << n); ++s) {
    WPolynomial h = face_refined_h_star(g, coordinate_face(P, s));
    if ((n - __builtin_popcount(s)) % 2 != 0)
      sum -= h;
    else
      sum += h;
  }
  WPolynomial r = T.pow(n);
  if ((n - 1) % 2 != 0)
    r -= sum;
  else
    r += sum;
  return divided_by_uvw2(r);
}

inline WPolynomial affine_refined_hd(const MonodromyProblem& pb) {
  if (pb.kind == ProblemKind::Milnor) throw InvalidInput("the Milnor fiber has no refined affine formula");
  return affine_refined_hd(pb.graph);
}

// uvw²E = (uvw²)^n + Σ_S (−1)^{dim P^S − 1} (uvw²−1)^{|S| − dim P^S} h*(P^S,ν|;u,v,w)
inline WPolynomial nonconvenient_refined_hd(const ConvexGraph& g) {
  const auto& P = g.polytope();
  int n = P.ambient_dim();
  if (!P.contains(IVec(n, 0))) throw InvalidInput("the polytope must contain the origin");
  WPolynomial T = uvw2();
  WPolynomial r = T.pow(n);
  for (unsigned s = 0; s < (1u << n); ++s) {
    int f = coordinate_face(P, s);
    int ds = P.face_dim(f);
    WPolynomial term = (T - WPolynomial(1)).pow(__builtin_popcount(s) - ds) * face_refined_h_star(g, f);
    if ((ds - 1) % 2 != 0)
      r -= term;
    else
      r += term;
  }
  return divided_by_uvw2(r);
}

inline WPolynomial nonconvenient_refined_hd(const MonodromyProblem& pb) { return nonconvenient_refined_hd(pb.graph); }

// ---------------------------------------------------------------------------
// Motivic nearby fiber

enum class AmbientKind { Torus, Affine };

// [V_F° ↻ μ̂](1 − L)^{lefschetz_power}, μ̂ acting through exp(−2πi ν|_F)
struct MotivicTerm {
  std::vector<IVec> cell;
  int lefschetz_power = 0;
  std::vector<Rational> action;  // ν|_F(x) = action . x + constant, action parallel to aff(F)
  Rational constant;
  int sign = 1;
};

// ν|_F as an affine function whose linear part lies in the direction space of F
inline std::pair<std::vector<Rational>, Rational> canonical_affine_part(const ConvexGraph& g, const Cell& c) {
  auto [a, b] = g.ambient_piece(c.piece);
  std::size_t n = a.size();
  std::vector<std::vector<Rational>> basis;
  for (std::size_t i = 1; i < c.vertices.size(); ++i) {
    std::vector<Rational> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = Rational(c.vertices[i][k] - c.vertices[0][k]);
    for (const auto& e : basis) {
      Rational num = 0, den = 0;
      for (std::size_t k = 0; k < n; ++k) num += d[k] * e[k], den += e[k] * e[k];
      for (std::size_t k = 0; k < n; ++k) d[k] -= num / den * e[k];
    }
    if (std::any_of(d.begin(), d.end(), [](const Rational& x) { return x != 0; })) basis.push_back(d);
  }
  std::vector<Rational> pa(n, Rational(0));
  for (const auto& e : basis) {
    Rational num = 0, den = 0;
    for (std::size_t k = 0; k < n; ++k) num += a[k] * e[k], den += e[k] * e[k];
    for (std::size_t k = 0; k < n; ++k) pa[k] += num / den * e[k];
  }
  Rational v0 = g.nu(c.vertices[0]);
  for (std::size_t k = 0; k < n; ++k) v0 -= pa[k] * c.vertices[0][k];
  return {pa, v0};
}

inline std::vector<MotivicTerm> motivic_nearby_fiber_hypersurface(const ConvexGraph& g, AmbientKind ambient) {
  const auto& P = g.polytope();
  std::vector<std::pair<int, int>> targets;  // (face, exponent base)
  if (ambient == AmbientKind::Torus) {
    if (g.dim() != P.ambient_dim()) throw NotFullDimensional("the Newton polytope must be full-dimensional");
    targets.push_back({P.top_face(), P.dim()});
  } else {
    require_convenient(P);
    for (unsigned s = 0; s < (1u << P.ambient_dim()); ++s)
      targets.push_back({coordinate_face(P, s), __builtin_popcount(s)});
  }
  std::vector<MotivicTerm> r;
  for (const auto& [face, base] : targets)
    for (const auto& c : g.cells()) {
      if (c.sigma != face || c.dim < 1) continue;
      auto [a, b] = canonical_affine_part(g, c);
      r.push_back(MotivicTerm{c.vertices, base - c.dim, a, b, 1});
    }
  return r;
}

// ---------------------------------------------------------------------------
// Newton faces: P_∞ at infinity, Γ_f at 0 and for Milnor fibers

struct NewtonFace {
  std::vector<IVec> vertices;  // empty for the empty face
  int dim = -1;
  int cell = -1;       // Q as a cell of S(ν)
  int cone_cell = -1;  // Δ_Q = conv(Q ∪ {0}) as a cell of S(ν)
  unsigned support = 0;
};

inline std::vector<NewtonFace> newton_faces(const MonodromyProblem& pb) {
  if (pb.kind == ProblemKind::GenericFamily) throw InvalidInput("Newton faces need a polynomial problem");
  const auto& g = pb.graph;
  IVec origin(pb.n, 0);
  std::vector<NewtonFace> r;
  for (int c = 0; c < static_cast<int>(g.cells().size()); ++c) {
    const auto& vs = g.cells()[c].vertices;
    if (std::binary_search(vs.begin(), vs.end(), origin)) continue;
    auto cone = vs;
    cone.push_back(origin);
    std::sort(cone.begin(), cone.end());
    int cc = g.cell_index(cone);
    if (cc < 0) continue;
    r.push_back(NewtonFace{vs, g.cells()[c].dim, c, cc, support_mask(vs)});
  }
  return r;
}

// l*(Q;u) for a Newton face (ν constant on Q)
inline GRPoly face_local_h_star(const MonodromyProblem& pb, const NewtonFace& f) {
  if (f.dim < 0) return GRPoly{GroupRingElement(1)};
  return local_weighted_h_star_coeffs(pb.graph.restrict_to_cell(f.cell));
}

// l*(Δ_Q,ν|_{Δ_Q};u)
inline GRPoly cone_local_h_star(const MonodromyProblem& pb, const NewtonFace& f) {
  if (f.dim < 0) return GRPoly{};
  return local_weighted_h_star_coeffs(pb.graph.restrict_to_cell(f.cone_cell));
}

// The slice S_∞ of S(ν_∞) by Δ^∞ (resp. S_0 of S(ν₀) by Δ^0): cells Q_• indexed by the
// Newton faces, with faces of the simplex Δ^• indexed by coordinate subsets.
struct SliceComplex {
  std::vector<NewtonFace> faces;
  CellComplex complex;
};

inline SliceComplex rational_subdivision_slice(const MonodromyProblem& pb) {
  if (pb.kind != ProblemKind::AtInfinity && pb.kind != ProblemKind::Milnor)
    throw InvalidInput("slices are defined at infinity and for Milnor fibers");
  SliceComplex s;
  s.faces = newton_faces(pb);
  int n = pb.n;
  auto B = boolean_lattice(n);
  CellComplex& cc = s.complex;
  cc.dim = n - 1;
  cc.ambient = B.poset;
  for (int m = 0; m < (1 << n); ++m) cc.ambient_dim.push_back(__builtin_popcount(m) - 1);
  cc.ambient_top = (1 << n) - 1;
  int k = static_cast<int>(s.faces.size());
  std::vector<int> rank(k);
  std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
  for (int a = 0; a < k; ++a) {
    const auto& fa = s.faces[a];
    cc.cell_dim.push_back(fa.dim);
    cc.sigma.push_back(static_cast<int>(fa.support));
    rank[a] = fa.dim + 1;
    for (int b = 0; b < k; ++b)
      leq[a][b] = std::includes(s.faces[b].vertices.begin(), s.faces[b].vertices.end(), fa.vertices.begin(),
                                fa.vertices.end());
  }
  cc.cells = std::make_shared<GradedPoset>(rank, leq);
  return s;
}

// ---------------------------------------------------------------------------
// Eigenvalues of monodromy

// Σ_{i=0}^{m−1} [i/m]
inline GroupRingElement cyclic_sum(const Integer& m) {
  GroupRingElement r;
  std::int64_t mm = to_i64(m);
  for (std::int64_t i = 0; i < mm; ++i) r += GroupRingElement(TorsionClass(i, mm));
  return r;
}

// Σ_F (Vol F/m_F) Σ_i [i/m_F] over maximal cells of S(ν)
inline GroupRingElement cell_volume_sum(const ConvexGraph& g) {
  GroupRingElement r;
  for (int c : g.maximal_cells()) {
    Integer vol = g.cell_polytope(c).normalized_volume();
    Integer m = g.denominator_on_cell(c);
    if (vol % m != 0) throw InexactDivision("Vol(F)/m_F is not an integer");
    GroupRingElement t = cyclic_sum(m);
    t *= Integer(vol / m);
    r += t;
  }
  return r;
}

// Σ_S (−1)^{n−|S|} Σ_F (Vol F/m_F) Σ_i [i/m_F]
inline GroupRingElement affine_eigenvalues(const ConvexGraph& g) {
  const auto& P = g.polytope();
  require_convenient(P);
  int n = P.ambient_dim();
  GroupRingElement r;
  for (unsigned s = 0; s < (1u << n); ++s) {
    int f = coordinate_face(P, s);
    GroupRingElement t = P.face_dim(f) == 0 ? GroupRingElement(1)
                                            : cell_volume_sum(f == P.top_face() ? g : g.restrict_to_face(f));
    if ((n - __builtin_popcount(s)) % 2 != 0)
      r -= t;
    else
      r += t;
  }
  return r;
}

// Σ_{Q ⊆ Γ_f, dim σ(Δ_Q) = dim Δ_Q} (−1)^{n−1−dim Q} Vol(Q) Σ_{i<m(Q)} [i/m(Q)]
inline GroupRingElement milnor_eigenvalues(const MonodromyProblem& pb) {
  GroupRingElement r;
  for (const auto& f : newton_faces(pb)) {
    if (f.dim + 1 != __builtin_popcount(f.support)) continue;
    GroupRingElement t(1);
    if (f.dim >= 0) {
      ConvexGraph cone = pb.graph.restrict_to_cell(f.cone_cell);
      t = cyclic_sum(cone.denominator_on_cell(cone.maximal_cells().front()));
      t *= hull(f.vertices).normalized_volume();
    }
    if ((pb.n - 1 - f.dim) % 2 != 0)
      r -= t;
    else
      r += t;
  }
  return r;
}

// Σ_α dim H^{n−1}_α α: H_c^{n−1}(X_∞) for families, H^{n−1}(F_0) for Milnor fibers
inline GroupRingElement eigenvalue_multiplicities(const MonodromyProblem& pb) {
  if (pb.kind == ProblemKind::Milnor) return milnor_eigenvalues(pb);
  return affine_eigenvalues(pb.graph);
}

// ---------------------------------------------------------------------------
// Equivariant limit mixed Hodge numbers

struct LimitMixedHodge {
  WPolynomial nontrivial;  // α ≠ 1
  WPolynomial trivial;     // α = 1
};

inline LimitMixedHodge limit_mixed_hodge_affine(const MonodromyProblem& pb) {
  LimitMixedHodge r;
  if (pb.kind == ProblemKind::GenericFamily) throw InvalidInput("limit mixed Hodge numbers need a polynomial problem");
  if (pb.kind == ProblemKind::AtZero) {
    const auto& g = pb.graph;
    const auto& P = g.polytope();
    const auto& cc = g.complex();
    int n = pb.n;
    for (const auto& f : newton_faces(pb)) {
      IntPoly l = cc.local_h(f.cone_cell);
      if (l.is_zero() || f.dim < 0) continue;
      r.nontrivial += homogenize(cone_local_h_star(pb, f), f.dim + 2) * in_monomial(l, 1, 1, 0);
    }
    IVec origin(n, 0);
    for (int c = 0; c < static_cast<int>(g.cells().size()); ++c) {
      const auto& cell = g.cells()[c];
      if (cell.dim < 0 || std::binary_search(cell.vertices.begin(), cell.vertices.end(), origin)) continue;
      auto sv = P.face_points(cell.sigma);
      if (std::find(sv.begin(), sv.end(), origin) == sv.end()) continue;
      IntPoly l = cc.local_h(c);
      if (l.is_zero()) continue;
      r.trivial += homogenize(local_weighted_h_star_coeffs(g.restrict_to_cell(c)), cell.dim + 1) *
                   in_monomial(l, 1, 1, 0);
    }
    for (int q = 0; q < P.num_faces(); ++q) {
      auto qv = P.face_points(q);
      if (std::find(qv.begin(), qv.end(), origin) != qv.end()) continue;
      std::sort(qv.begin(), qv.end());
      int c = P.face_dim(q) < 0 ? cc.empty_cell() : g.cell_index(qv);
      GRPoly ls = P.face_dim(q) < 0 ? GRPoly{GroupRingElement(1)}
                                    : local_weighted_h_star_coeffs(ConvexGraph::zero(P.face_polytope(q)));
      if (ls.empty()) continue;
      IntPoly G;
      for (unsigned s = 0; s < (1u << n); ++s) {
        int ps = coordinate_face(P, s);
        if (!P.face_leq(q, ps)) continue;
        IntPoly h = cc.link_h(c, ps);
        if ((n - __builtin_popcount(s)) % 2 != 0)
          G -= h;
        else
          G += h;
      }
      if (G.is_zero()) continue;
      r.trivial += homogenize(ls, P.face_dim(q) + 1) * in_monomial(G, 1, 1, 0);
    }
  } else {
    auto s = rational_subdivision_slice(pb);
    for (int k = 0; k < static_cast<int>(s.faces.size()); ++k) {
      const auto& f = s.faces[k];
      IntPoly l = s.complex.local_h(k);
      if (l.is_zero()) continue;
      WPolynomial L = in_monomial(l, 1, 1, 0);
      if (f.dim >= 0) r.nontrivial += homogenize(cone_local_h_star(pb, f), f.dim + 2) * L;
      r.trivial += homogenize(face_local_h_star(pb, f), f.dim + 1) * L;
    }
  }
  r.nontrivial = r.nontrivial.compact();
  r.trivial = r.trivial.compact();
  return r;
}

// ---------------------------------------------------------------------------
// Jordan blocks

// l(t) = Σ_i tl_i t^i (1 + t + ⋯ + t^{D−2i}) with l symmetric of degree D
inline std::vector<Integer> tilde_l(const IntPoly& l, int D) {
  if (D < 0) {
    if (!l.is_zero()) throw NonUnimodalDecomposition("non-zero polynomial of negative degree");
    return {};
  }
  if (!l.is_symmetric(D) || l.degree() > D) throw NonUnimodalDecomposition("local h-polynomial is not symmetric");
  std::vector<Integer> r;
  for (int i = 0; 2 * i <= D; ++i) {
    Integer t = l[i] - (i > 0 ? l[i - 1] : Integer(0));
    if (t < 0) throw NonUnimodalDecomposition("local h-polynomial is not unimodal");
    r.push_back(t);
  }
  return r;
}

inline IntPoly reassemble_tilde_l(const std::vector<Integer>& tl, int D) {
  IntPoly r;
  for (int i = 0; i < static_cast<int>(tl.size()); ++i)
    for (int j = i; j <= D - i; ++j) r += IntPoly::monomial(j, tl[i]);
  return r;
}

struct JordanSpectrum {
  std::map<std::pair<int, TorsionClass>, Integer> blocks;  // (size, eigenvalue) → count
  Integer other_weights = 0;  // dimension of the graded pieces carrying trivial monodromy (at 0)

  void add(int size, const TorsionClass& a, const Integer& c) {
    if (c == 0) return;
    if (size < 1) throw NonUnimodalDecomposition("Jordan block of non-positive size");
    Integer& x = blocks[{size, a}];
    x += c;
    if (x == 0) blocks.erase({size, a});
  }
  Integer count(int size, const TorsionClass& a) const {
    auto it = blocks.find({size, a});
    return it == blocks.end() ? Integer(0) : it->second;
  }
  // Σ_α count(size, α) α
  GroupRingElement of_size(int size) const {
    GroupRingElement r;
    for (const auto& [k, c] : blocks)
      if (k.first == size) r.add(k.second, c);
    return r;
  }
  Integer number_of_blocks(int size) const { return gr_forget(of_size(size)); }
  // Σ_α Σ_k k count(k, α) α + other_weights [0]
  GroupRingElement eigenvalues() const {
    GroupRingElement r(other_weights);
    for (const auto& [k, c] : blocks) r.add(k.second, c * k.first);
    return r;
  }
  bool nonnegative() const {
    for (const auto& kv : blocks)
      if (kv.second < 0) return false;
    return other_weights >= 0;
  }
};

// Hodge numbers of Gr^W_{n−1} from uv Σ h^{p,q}_α u^p v^q = l*(P,ν₀;u,v); N-weight filtration centered at n−1
inline JordanSpectrum jordan_at_zero(const MonodromyProblem& pb) {
  const auto& g = pb.graph;
  int n = pb.n;
  WPolynomial H = local_limit_mixed_h_star(g).divided_by_monomial({{"u", 1}, {"v", 1}});
  if (!H.is_polynomial()) throw InexactDivision("local limit mixed h* is not divisible by uv");
  std::map<int, GroupRingElement> G;  // p + q → Σ h^{p,q}_α α
  for (const auto& [e, c] : H.terms()) {
    int s = 0;
    for (auto x : e) s += x;
    G[s] += c;
  }
  JordanSpectrum J;
  int top = 2 * (n - 1);
  for (int k = 0; n - 1 + k <= top; ++k) {
    GroupRingElement b = G[n - 1 + k];
    b -= G[n + 1 + k];
    for (const auto& [a, c] : b.terms()) {
      if (c < 0) throw NonUnimodalDecomposition("weight graded pieces are not unimodal");
      J.add(k + 1, a, c);
    }
  }
  Integer total = gr_forget(eigenvalue_multiplicities(pb));
  J.other_weights = total - gr_forget(J.eigenvalues());
  return J;
}

// Corollaries for monodromy at infinity and for Milnor fibers
inline JordanSpectrum jordan_from_slice(const MonodromyProblem& pb) {
  auto s = rational_subdivision_slice(pb);
  int n = pb.n;
  JordanSpectrum J;
  for (int k = 0; k < static_cast<int>(s.faces.size()); ++k) {
    const auto& f = s.faces[k];
    int D = n - 1 - f.dim;
    IntPoly l = s.complex.local_h(k);
    auto tl = tilde_l(l, D);
    if (!(reassemble_tilde_l(tl, D) == l)) throw NonUnimodalDecomposition("tilde-l reassembly failed");
    GroupRingElement cone_at_one;
    for (const auto& c : cone_local_h_star(pb, f)) cone_at_one += c;
    Integer face_at_one = 0;
    for (const auto& c : face_local_h_star(pb, f)) face_at_one += gr_forget(c);
    for (int i = 0; i < static_cast<int>(tl.size()); ++i) {
      if (tl[i] == 0) continue;
      int size = n - f.dim - 2 * i;
      for (const auto& [a, c] : cone_at_one.terms()) J.add(size, a, c * tl[i]);
      J.add(size, TorsionClass(), face_at_one * tl[i]);
    }
  }
  return J;
}

inline JordanSpectrum jordan_blocks(const MonodromyProblem& pb) {
  switch (pb.kind) {
    case ProblemKind::AtZero: return jordan_at_zero(pb);
    case ProblemKind::AtInfinity:
    case ProblemKind::Milnor: return jordan_from_slice(pb);
    default: throw InvalidInput("Jordan blocks need a polynomial problem");
  }
}

// Closed forms for the largest and second largest Jordan block sizes.
struct VdsTable {
  GroupRingElement size_n;          // Σ_α J_{n,α} α
  GroupRingElement size_n_minus_1;  // Σ_α J_{n−1,α} α
  Integer trivial_size_n_minus_2 = 0;  // J_{n−2,1} (at infinity and Milnor, n ≥ 3)
};

inline VdsTable vds_size_formulas(const MonodromyProblem& pb) {
  int n = pb.n;
  if (n < 2) throw InvalidInput("block size formulas need at least two variables");
  VdsTable t;
  const auto& g = pb.graph;
  if (pb.kind == ProblemKind::AtZero) {
    t.size_n = small_coefficients(g, 0, n - 1);
    GroupRingElement h = small_coefficients(g, 1, n - 1);
    t.size_n_minus_1 = h;
    t.size_n_minus_1 += gr_conjugate(h);
    return t;
  }
  if (pb.kind == ProblemKind::GenericFamily) throw InvalidInput("block size formulas need a polynomial problem");
  unsigned full = (1u << n) - 1;
  for (const auto& f : newton_faces(pb)) {
    if (f.dim < 0 || f.support != full) continue;
    if (f.dim <= 1) {
      t.size_n_minus_1 += GroupRingElement(Integer(hull(f.vertices).lattice_points(1, true).size()));
      GroupRingElement w;
      for (const auto& x : g.cell_polytope(f.cone_cell).lattice_points(1, true)) w += GroupRingElement(g.weight(x));
      if (f.dim == 0) t.size_n += w;
      if (f.dim == 1) {
        t.size_n_minus_1 += w;
        t.size_n_minus_1 += gr_conjugate(w);
      }
    }
    if (f.dim == 2 && n >= 3) t.trivial_size_n_minus_2 += 2 * Integer(hull(f.vertices).lattice_points(1, true).size());
  }
  return t;
}

}  // namespace mhs
