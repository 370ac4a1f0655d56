#pragma once

/**
 * @file wehrhart.hpp
 * @brief Weighted Ehrhart theory: weighted lattice point counts, the weighted
 *        Ehrhart polynomial, weighted h*- and local weighted h*-polynomials
 *        (three independent routes), reciprocity and the volume formula.
 */

#include <vector>

#include "mhs/subdivision.hpp"

namespace mhs {

// Dense univariate polynomial with Z[Q/Z] coefficients (index = exponent).
using GRPoly = std::vector<GroupRingElement>;

inline void grp_trim(GRPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline GRPoly grp_add(GRPoly a, const GRPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  grp_trim(a);
  return a;
}
inline GRPoly grp_mul(const GRPoly& a, const IntPoly& b) {
  GRPoly r;
  if (a.empty() || b.is_zero()) return r;
  r.resize(a.size() + b.degree());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  grp_trim(r);
  return r;
}
inline GRPoly grp_mul(const GRPoly& a, const GRPoly& b) {
  GRPoly r;
  if (a.empty() || b.empty()) return r;
  r.resize(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  grp_trim(r);
  return r;
}
inline GRPoly grp_scale(GRPoly a, const Integer& s) {
  for (auto& c : a) c *= s;
  grp_trim(a);
  return a;
}
inline GroupRingElement grp_coeff(const GRPoly& p, int i) {
  return i >= 0 && i < static_cast<int>(p.size()) ? p[i] : GroupRingElement();
}
inline GRPoly grp_conjugate(GRPoly p) {
  for (auto& c : p) c = gr_conjugate(c);
  return p;
}
// u^d conj(p(1/u))
inline GRPoly grp_reflect(const GRPoly& p, int d) {
  GRPoly r(d + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (static_cast<int>(i) > d) {
      if (!p[i].is_zero()) throw InvalidInput("degree exceeds reflection degree");
      continue;
    }
    r[d - i] = gr_conjugate(p[i]);
  }
  grp_trim(r);
  return r;
}
inline WPolynomial grp_to_wp(const GRPoly& p, const std::string& var = "u") { return wp_from_coeffs(p, var); }
inline GRPoly grp_from_wp(const WPolynomial& p, const std::string& var = "u") {
  GRPoly r = wp_univariate_coeffs(p, var);
  grp_trim(r);
  return r;
}
inline IntPoly grp_forget(const GRPoly& p) {
  std::vector<Integer> c;
  for (const auto& x : p) c.push_back(gr_forget(x));
  return IntPoly(c);
}

// ---------------------------------------------------------------------------
// Weighted counts

// f(P,ν;m) = Σ_{v ∈ mP ∩ M} [ν(v)]
inline GroupRingElement weighted_count(const ConvexGraph& g, std::int64_t m) {
  if (m < 0) throw InvalidInput("dilation factor must be non-negative");
  GroupRingElement r;
  for (const auto& x : g.polytope().lattice_points(m)) r += GroupRingElement(g.weight(x, m));
  return r;
}

// Σ_{v ∈ Int(mP) ∩ M} conj([ν(v)])
inline GroupRingElement interior_weighted_count_conjugate(const ConvexGraph& g, std::int64_t m) {
  if (m < 1) throw InvalidInput("dilation factor must be positive");
  GroupRingElement r;
  for (const auto& x : g.polytope().lattice_points(m, true)) r += GroupRingElement(-g.weight(x, m));
  return r;
}

// d!·f(P,ν;m) as a polynomial in m with integral Z[Q/Z] coefficients.
struct WeightedEhrhartPolynomial {
  GRPoly scaled;  // coefficients of d!·f in powers of m
  Integer scale;  // d!
  int dim = 0;

  GroupRingElement at(std::int64_t m) const {
    GroupRingElement s;
    Integer p = 1;
    for (const auto& c : scaled) {
      s += c * p;
      p *= m;
    }
    return s.divided_by(scale);
  }
  WPolynomial scaled_polynomial() const { return grp_to_wp(scaled, "m"); }
};

inline WeightedEhrhartPolynomial weighted_ehrhart_polynomial(const ConvexGraph& g) {
  int d = g.dim();
  std::vector<GroupRingElement> vals;
  for (int m = 0; m <= d; ++m) vals.push_back(weighted_count(g, m));
  // Newton forward differences: f(m) = Σ_k Δ^k f(0) binom(m, k)
  std::vector<GroupRingElement> diff = vals, delta;
  for (int k = 0; k <= d; ++k) {
    delta.push_back(diff[0]);
    for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  Integer fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  WeightedEhrhartPolynomial r;
  r.scale = fact;
  r.dim = d;
  IntPoly falling{1};
  Integer kfact = 1;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) {
      falling = falling * IntPoly{-(k - 1), 1};
      kfact *= k;
    }
    r.scaled = grp_add(r.scaled, grp_mul(GRPoly{delta[k]}, falling * IntPoly(Integer(fact / kfact))));
  }
  return r;
}

// (−1)^{dim P} f(P,ν;−m) = Σ_{Int(mP)} conj(w(v))
inline bool reciprocity_check(const ConvexGraph& g, std::int64_t m) {
  auto f = weighted_ehrhart_polynomial(g);
  GroupRingElement lhs = f.at(-m);
  if (g.dim() % 2 != 0) lhs = -lhs;
  return lhs == interior_weighted_count_conjugate(g, m);
}

// ---------------------------------------------------------------------------
// Weighted h* and l*

// (1−u)^{d+1} Σ_{m≤d} f(m)u^m truncated at degree d
inline GRPoly weighted_h_star_coeffs(const ConvexGraph& g) {
  int d = g.dim();
  GRPoly series;
  for (int m = 0; m <= d; ++m) series.push_back(weighted_count(g, m));
  IntPoly one_minus_u_pow{1};
  for (int i = 0; i <= d; ++i) one_minus_u_pow = one_minus_u_pow * IntPoly{1, -1};
  GRPoly h = grp_mul(series, one_minus_u_pow);
  if (static_cast<int>(h.size()) > d + 1) h.resize(d + 1);
  grp_trim(h);
  return h;
}

// h*(Q,ν|_Q) for every face Q of P (index = face index; the empty face gives 1)
inline std::vector<GRPoly> face_h_stars(const ConvexGraph& g) {
  const auto& P = g.polytope();
  std::vector<GRPoly> r(P.num_faces());
  for (int q = 0; q < P.num_faces(); ++q)
    r[q] = P.face_dim(q) < 0 ? GRPoly{GroupRingElement(1)}
                             : (q == P.top_face() ? weighted_h_star_coeffs(g)
                                                  : weighted_h_star_coeffs(g.restrict_to_face(q)));
  return r;
}

inline GRPoly local_h_star_from_faces(const LatticePolytope& P, const std::vector<GRPoly>& hs) {
  int d = P.dim();
  if (d < 0) return {GroupRingElement(1)};
  GRPoly l;
  for (int q = 0; q < P.num_faces(); ++q) {
    GRPoly term = grp_mul(hs[q], P.g_dual(q, P.top_face()));
    if ((d - P.face_dim(q)) % 2 != 0) term = grp_scale(term, -1);
    l = grp_add(l, term);
  }
  return l;
}

inline GRPoly local_weighted_h_star_coeffs(const ConvexGraph& g) {
  return local_h_star_from_faces(g.polytope(), face_h_stars(g));
}

// Box sums over a simplex F on which ν is affine: (h*, l*) of (F, ν|_F).
inline std::pair<GRPoly, GRPoly> simplex_box_sums(const ConvexGraph& g, const std::vector<IVec>& simplex) {
  if (simplex.empty()) return {GRPoly{GroupRingElement(1)}, GRPoly{GroupRingElement(1)}};
  GRPoly h, l;
  auto cone = cone_over(simplex);
  int n = g.polytope().ambient_dim();
  for (const auto& b : box_points(cone)) {
    IVec x(b.coordinates.begin(), b.coordinates.begin() + n);
    std::int64_t ht = b.height;
    GroupRingElement w(g.weight(x, ht));
    if (static_cast<int>(h.size()) <= ht) h.resize(ht + 1);
    h[ht] += w;
    bool interior = std::all_of(b.barycentric.begin(), b.barycentric.end(), [](const Rational& a) { return a > 0; });
    if (interior) {
      if (static_cast<int>(l.size()) <= ht) l.resize(ht + 1);
      l[ht] += w;
    }
  }
  grp_trim(h);
  grp_trim(l);
  return {h, l};
}

// Σ_F l*(F,ν|_F) h(lk_T(F)) over a triangulation T refining S(ν)
inline GRPoly weighted_h_star_via_boxes_coeffs(const ConvexGraph& g) {
  auto t = unimodular_refinement(g);
  GRPoly h;
  for (int F = 0; F < t.complex.num_cells(); ++F) {
    auto l = simplex_box_sums(g, t.simplices[F]).second;
    if (l.empty()) continue;
    h = grp_add(h, grp_mul(l, t.complex.link_h(F)));
  }
  return h;
}

// Σ_F l*(F,ν|_F) l_P(T,F) over a triangulation T refining S(ν)
inline GRPoly local_weighted_h_star_via_boxes_coeffs(const ConvexGraph& g) {
  auto t = unimodular_refinement(g);
  GRPoly l;
  for (int F = 0; F < t.complex.num_cells(); ++F) {
    auto lf = simplex_box_sums(g, t.simplices[F]).second;
    if (lf.empty()) continue;
    l = grp_add(l, grp_mul(lf, t.complex.local_h(F)));
  }
  return l;
}

// Σ_Q l*(Q,ν|_Q) g([Q,P])
inline GRPoly hstar_from_local_coeffs(const ConvexGraph& g) {
  const auto& P = g.polytope();
  GRPoly h;
  for (int q = 0; q < P.num_faces(); ++q) {
    GRPoly lq;
    if (P.face_dim(q) < 0)
      lq = {GroupRingElement(1)};
    else if (q == P.top_face())
      lq = local_weighted_h_star_via_boxes_coeffs(g);
    else
      lq = local_weighted_h_star_via_boxes_coeffs(g.restrict_to_face(q));
    h = grp_add(h, grp_mul(lq, P.g(q, P.top_face())));
  }
  return h;
}

inline WPolynomial weighted_h_star(const ConvexGraph& g) { return grp_to_wp(weighted_h_star_coeffs(g)); }
inline WPolynomial weighted_h_star_via_boxes(const ConvexGraph& g) {
  return grp_to_wp(weighted_h_star_via_boxes_coeffs(g));
}
inline WPolynomial local_weighted_h_star(const ConvexGraph& g) {
  return grp_to_wp(local_weighted_h_star_coeffs(g));
}
inline WPolynomial hstar_from_local(const ConvexGraph& g) { return grp_to_wp(hstar_from_local_coeffs(g)); }

// h*(P,ν;1) = Σ_{F maximal} (Vol(F)/m_F) Σ_{i<m_F} [i/m_F]
inline GroupRingElement volume_formula(const ConvexGraph& g) {
  GroupRingElement r;
  for (int c : g.maximal_cells()) {
    Integer mf = g.denominator_on_cell(c);
    Integer vol = g.cell_polytope(c).normalized_volume();
    if (vol % mf != 0) throw InexactDivision("cell volume not divisible by its denominator");
    std::int64_t m = to_i64(mf);
    for (std::int64_t i = 0; i < m; ++i) r += GroupRingElement::cls(i, m, vol / mf);
  }
  return r;
}

// l*_1[0] ≤ l*_i[0] for 1 ≤ i ≤ dim P
inline bool lower_bound_holds(const GRPoly& lstar, int d) {
  Integer l1 = grp_coeff(lstar, 1).coeff(TorsionClass());
  for (int i = 1; i <= d; ++i)
    if (grp_coeff(lstar, i).coeff(TorsionClass()) < l1) return false;
  return true;
}

}  // namespace mhs
