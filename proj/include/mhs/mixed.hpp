#pragma once

/**
 * @file mixed.hpp
 * @brief Weighted limit mixed, local weighted limit mixed and weighted refined
 *        limit mixed h*-polynomials with coefficient extraction.
 */

#include <map>
#include <tuple>
#include <vector>

#include "mhs/wehrhart.hpp"

namespace mhs {

// Σ_i c_i u^i v^{k−i}: the homogenization v^k p(u/v) of a polynomial of degree ≤ k
inline WPolynomial homogenize(const GRPoly& p, int k) {
  WPolynomial r;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i].is_zero()) continue;
    if (i > k) throw NonPolynomialResult("degree exceeds homogenization degree");
    r += WPolynomial::monomial({"u", "v"}, {i, k - i}, p[i]);
  }
  return r;
}

// q(x) with x = u^a v^b w^c
inline WPolynomial in_monomial(const IntPoly& q, int a, int b, int c) {
  WPolynomial r;
  for (int i = 0; i <= q.degree(); ++i)
    if (q[i] != 0) r += WPolynomial::monomial({"u", "v", "w"}, {a * i, b * i, c * i}, GroupRingElement(q[i]));
  return r;
}

// l*(F,ν|_F) for every cell F of S(ν) (the empty cell gives 1)
inline std::vector<GRPoly> cell_local_h_stars(const ConvexGraph& g) {
  std::vector<GRPoly> r;
  for (int c = 0; c < static_cast<int>(g.cells().size()); ++c)
    r.push_back(g.cells()[c].dim < 0 ? GRPoly{GroupRingElement(1)}
                                     : local_weighted_h_star_coeffs(g.restrict_to_cell(c)));
  return r;
}

// h*(P,ν;u,v) = Σ_F v^{dim F+1} l*(F;u/v) h(lk(F);uv)
inline WPolynomial limit_mixed_h_star(const ConvexGraph& g) {
  const auto& cc = g.complex();
  auto ls = cell_local_h_stars(g);
  WPolynomial r;
  for (int c = 0; c < cc.num_cells(); ++c) {
    if (ls[c].empty()) continue;
    r += homogenize(ls[c], cc.cell_dim[c] + 1) * in_monomial(cc.link_h(c), 1, 1, 0);
  }
  return r.compact();
}

// l*(P,ν;u,v) = Σ_F v^{dim F+1} l*(F;u/v) l_P(S(ν),F;uv)
inline WPolynomial local_limit_mixed_h_star(const ConvexGraph& g) {
  const auto& cc = g.complex();
  auto ls = cell_local_h_stars(g);
  WPolynomial r;
  for (int c = 0; c < cc.num_cells(); ++c) {
    if (ls[c].empty()) continue;
    IntPoly lp = cc.local_h(c);
    if (lp.is_zero()) continue;
    r += homogenize(ls[c], cc.cell_dim[c] + 1) * in_monomial(lp, 1, 1, 0);
  }
  return r.compact();
}

// l*(Q,ν|_Q;u,v) for every face Q of P (the empty face gives 1)
inline std::vector<WPolynomial> face_local_limit_mixed(const ConvexGraph& g) {
  const auto& P = g.polytope();
  std::vector<WPolynomial> r;
  for (int q = 0; q < P.num_faces(); ++q) {
    if (P.face_dim(q) < 0)
      r.push_back(WPolynomial(1));
    else
      r.push_back(local_limit_mixed_h_star(q == P.top_face() ? g : g.restrict_to_face(q)));
  }
  return r;
}

// 1 + uvw² Σ h*_{p,q,r} u^p v^q w^r
struct RefinedHStar {
  WPolynomial poly;
  int dim = 0;

  // (h* − 1)/(uvw²); exact for every valid input
  WPolynomial reduced() const {
    WPolynomial r = (poly - WPolynomial(1)).divided_by_monomial({{"u", 1}, {"v", 1}, {"w", 2}});
    if (!r.is_polynomial()) throw InexactDivision("refined h* is not 1 + uvw^2(...)");
    return r;
  }
  GroupRingElement coefficient(int p, int q, int r) const {
    return reduced().coeff(std::map<std::string, int>{{"u", p}, {"v", q}, {"w", r}});
  }
  std::map<std::tuple<int, int, int>, GroupRingElement> table() const {
    std::map<std::tuple<int, int, int>, GroupRingElement> t;
    WPolynomial red = reduced();
    for (int p = 0; p < dim; ++p)
      for (int q = 0; q < dim; ++q)
        for (int r = 0; r < dim; ++r) {
          auto c = red.coeff(std::map<std::string, int>{{"u", p}, {"v", q}, {"w", r}});
          if (!c.is_zero()) t[{p, q, r}] = c;
        }
    return t;
  }
};

// h*(P,ν;u,v,w) = Σ_Q w^{dim Q+1} l*(Q,ν|_Q;u,v) g([Q,P];uvw²)
inline RefinedHStar refined_h_star(const ConvexGraph& g) {
  const auto& P = g.polytope();
  auto ls = face_local_limit_mixed(g);
  WPolynomial r;
  for (int q = 0; q < P.num_faces(); ++q) {
    if (ls[q].is_zero()) continue;
    r += WPolynomial::monomial({"w"}, {P.face_dim(q) + 1}, GroupRingElement(1)) * ls[q] *
         in_monomial(P.g(q, P.top_face()), 1, 1, 2);
  }
  return RefinedHStar{r.compact(), P.dim()};
}

// w^{-dim P-1} Σ_Q (−1)^{dim P−dim Q} h*(Q,ν|_Q;u,v,w) g([Q,P]*;uvw²)
inline WPolynomial inverse_local_from_refined(const ConvexGraph& g) {
  const auto& P = g.polytope();
  int d = P.dim();
  WPolynomial r;
  for (int q = 0; q < P.num_faces(); ++q) {
    WPolynomial h = P.face_dim(q) < 0 ? WPolynomial(1)
                                      : refined_h_star(q == P.top_face() ? g : g.restrict_to_face(q)).poly;
    WPolynomial term = h * in_monomial(P.g_dual(q, P.top_face()), 1, 1, 2);
    if ((d - P.face_dim(q)) % 2 != 0)
      r -= term;
    else
      r += term;
  }
  r = r.divided_by_monomial({{"w", d + 1}});
  if (!r.is_polynomial()) throw InexactDivision("alternating sum not divisible by w^(dim P + 1)");
  return r.compact();
}

// Σ_{v ∈ relint(F) ∩ M} w(v) for a cell F
inline GroupRingElement cell_interior_weight(const ConvexGraph& g, int c) {
  GroupRingElement s;
  for (const auto& x : g.cell_polytope(c).lattice_points(1, true)) s += GroupRingElement(g.weight(x));
  return s;
}

// Closed forms for h*_{0,q,r}: q,r > 0; q = 0 < r; q = r = 0.
inline GroupRingElement small_coefficients(const ConvexGraph& g, int q, int r) {
  const auto& P = g.polytope();
  if (q < 0 || r < 0 || q > r || r >= P.dim()) throw InvalidInput("small coefficient index out of range");
  if (r == 0) {
    GroupRingElement s;
    for (int f = 0; f < P.num_faces(); ++f) {
      if (P.face_dim(f) < 0 || P.face_dim(f) > 1) continue;
      for (const auto& x : P.face_polytope(f).lattice_points(1, true)) s += GroupRingElement(g.weight(x));
    }
    return s - GroupRingElement(P.dim() + 1);
  }
  GroupRingElement s;
  for (int c = 0; c < static_cast<int>(g.cells().size()); ++c) {
    const auto& cell = g.cells()[c];
    if (cell.dim < 0 || P.face_dim(cell.sigma) != r + 1) continue;
    if (q > 0 ? cell.dim == q + 1 : cell.dim <= 1) s += cell_interior_weight(g, c);
  }
  return s;
}

}  // namespace mhs
