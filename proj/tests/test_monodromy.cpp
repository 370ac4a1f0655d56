#include <gtest/gtest.h>

#include "brieskorn_pham.hpp"
#include "corpus.hpp"
#include "mhs/monodromy.hpp"
#include "mhs/pretty.hpp"

using namespace mhs;
using namespace oracle;

namespace {

WPolynomial P(const std::string& s) { return parse_polynomial(s); }
GroupRingElement G(const std::string& s) { return P(s).constant_term(); }

// Support matching the figure and the reported invariants of the running bivariate example
const std::vector<IVec> kDouble = {{5, 0}, {4, 2}, {1, 5}, {0, 5}, {1, 2}, {2, 1}};
// Support as printed, with x^6 and x^5y^2
const std::vector<IVec> kDoublePrinted = {{5, 0}, {6, 0}, {5, 2}, {1, 5}, {0, 5}, {1, 2}, {2, 1}};

MonodromyProblem problem(const std::vector<IVec>& pts, ProblemKind k) {
  return make_problem(newton_data(static_cast<int>(pts.front().size()), pts), k);
}

WPolynomial at_w_one(const WPolynomial& p) { return wp_substitute(p, {{"w", WPolynomial(1)}}); }
WPolynomial swap_uv(const WPolynomial& p) { return wp_substitute(p, {{"u", wp_var("v")}, {"v", wp_var("u")}}); }

// E = uvw² − [b + w[h001(1 + uv) + h011 v + conj(h011) u]]
WPolynomial dim2_closed_form(const Integer& b, const GroupRingElement& h001, const GroupRingElement& h011) {
  WPolynomial inner = h001 * (WPolynomial(1) + P("u*v")) + h011 * wp_var("v") + gr_conjugate(h011) * wp_var("u");
  return (uvw2() - (WPolynomial(b) + wp_var("w") * inner)).compact();
}

// #(∂P ∩ Z²_{>0}) by scanning the box
Integer boundary_positive_points(const LatticePolytope& Q) {
  Integer b = 0;
  for (const auto& x : Q.lattice_points(1))
    if (x[0] > 0 && x[1] > 0 && !Q.in_relative_interior(x)) ++b;
  return b;
}

struct Poly {
  std::string name;
  NewtonData nd;
};

std::vector<Poly> polynomial_corpus() {
  std::vector<Poly> r;
  for (const auto& s : corpus::convenient_corpus(24)) r.push_back({s.name, newton_data(s.n, s.points)});
  r.push_back({"double", newton_data(2, kDouble)});
  r.push_back({"double-printed", newton_data(2, kDoublePrinted)});
  r.push_back({"cusp", newton_data(2, {{2, 0}, {0, 3}})});
  r.push_back({"bp-234", newton_data(3, brieskorn_pham({2, 3, 4}))});
  r.push_back({"t-333", newton_data(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}})});
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Newton data

TEST(NewtonData, ConvenienceReportsFailingAxes) {
  auto nd = newton_data(3, {{2, 0, 0}, {1, 1, 1}});
  EXPECT_EQ(nonconvenient_axes(nd), (std::vector<int>{1, 2}));
  try {
    make_problem(nd, ProblemKind::AtInfinity);
    FAIL();
  } catch (const NotConvenient& e) {
    EXPECT_NE(std::string(e.what()).find("x2 x3"), std::string::npos);
  }
  EXPECT_THROW(newton_data(2, {}), InvalidInput);
  EXPECT_THROW(newton_data(2, {{1, -1}}), InvalidInput);
  EXPECT_THROW(make_problem(newton_data(2, {{0, 0}, {1, 0}, {0, 1}}), ProblemKind::AtZero), InvalidInput);
}

TEST(NewtonData, GraphsTakePrescribedValues) {
  auto z = problem(kDouble, ProblemKind::AtZero);
  auto inf = problem(kDouble, ProblemKind::AtInfinity);
  EXPECT_EQ(z.graph.nu({0, 0}), 1);
  EXPECT_EQ(inf.graph.nu({0, 0}), 0);
  for (const auto& p : kDouble) EXPECT_EQ(z.graph.nu(p), 0);
  for (const auto& p : std::vector<IVec>{{5, 0}, {4, 2}, {1, 5}, {0, 5}, {3, 3}}) EXPECT_EQ(inf.graph.nu(p), 1);
  EXPECT_EQ(inf.graph.nu({2, 1}), Rational(1, 2));
}

TEST(NewtonData, GammaFaces) {
  auto z = problem(kDouble, ProblemKind::Milnor);
  auto faces = newton_faces(z);
  std::set<std::vector<IVec>> got;
  for (const auto& f : faces) got.insert(f.vertices);
  std::set<std::vector<IVec>> want = {{},       {{0, 5}},         {{1, 2}},         {{2, 1}},
                                      {{5, 0}}, {{0, 5}, {1, 2}}, {{1, 2}, {2, 1}}, {{2, 1}, {5, 0}}};
  EXPECT_EQ(got, want);
  auto inf = problem(kDouble, ProblemKind::AtInfinity);
  int edges = 0;
  for (const auto& f : newton_faces(inf)) edges += f.dim == 1;
  EXPECT_EQ(edges, 3);
}

// ---------------------------------------------------------------------------
// Running bivariate example

TEST(RunningExample, AtZero) {
  auto pb = problem(kDouble, ProblemKind::AtZero);
  EXPECT_EQ(boundary_positive_points(pb.graph.polytope()), 4);
  GroupRingElement h001 = small_coefficients(pb.graph, 0, 1), h011 = small_coefficients(pb.graph, 1, 1);
  EXPECT_EQ(h001, G("2"));
  EXPECT_EQ(h011, G("7+[1/3]"));
  EXPECT_EQ(affine_refined_hd(pb), dim2_closed_form(4, h001, h011));
  auto J = jordan_blocks(pb);
  EXPECT_EQ(J.number_of_blocks(1), 16);
  EXPECT_EQ(J.of_size(1), G("14+[1/3]+[2/3]"));
  EXPECT_EQ(J.of_size(2), G("2"));
  EXPECT_EQ(J.other_weights, 4);
  EXPECT_TRUE(J.nonnegative());
}

TEST(RunningExample, AtInfinity) {
  auto pb = problem(kDouble, ProblemKind::AtInfinity);
  GroupRingElement h001 = small_coefficients(pb.graph, 0, 1), h011 = small_coefficients(pb.graph, 1, 1);
  EXPECT_EQ(h001, G("[1/2]"));
  EXPECT_EQ(h011, G("[7/10]+[9/10]+[1/3]+[1/2]+2[2/3]+3[5/6]"));
  EXPECT_EQ(affine_refined_hd(pb), dim2_closed_form(4, h001, h011));
  auto J = jordan_blocks(pb);
  EXPECT_EQ(J.number_of_blocks(1), 22);
  EXPECT_EQ(J.of_size(1), G("4+3[1/6]+3[1/3]+3[2/3]+3[5/6]+2[1/2]+[1/10]+[3/10]+[7/10]+[9/10]"));
  EXPECT_EQ(J.of_size(2), G("[1/2]"));
  EXPECT_EQ(J.number_of_blocks(3), 0);
  EXPECT_EQ(gr_forget(eigenvalue_multiplicities(pb)), 24);
}

TEST(RunningExample, Milnor) {
  auto pb = problem(kDouble, ProblemKind::Milnor);
  EXPECT_EQ(eigenvalue_multiplicities(pb), G("2+[1/3]+[2/3]"));
  auto J = jordan_blocks(pb);
  EXPECT_EQ(J.of_size(1), G("2+[1/3]+[2/3]"));
  EXPECT_EQ(J.number_of_blocks(2), 0);
}

TEST(RunningExample, PrintedSupportGivesDifferentBoundary) {
  auto pb = problem(kDoublePrinted, ProblemKind::AtZero);
  EXPECT_EQ(boundary_positive_points(pb.graph.polytope()), 2);
}

TEST(RunningExample, SliceAtInfinity) {
  auto s = rational_subdivision_slice(problem(kDouble, ProblemKind::AtInfinity));
  int points = 0, segments = 0;
  for (std::size_t k = 0; k < s.faces.size(); ++k) {
    EXPECT_EQ(s.complex.cell_dim[k], s.faces[k].dim);
    points += s.faces[k].dim == 0;
    segments += s.faces[k].dim == 1;
  }
  EXPECT_EQ(points, 4);
  EXPECT_EQ(segments, 3);
  EXPECT_EQ(s.complex.local_h(s.complex.empty_cell()), (IntPoly{0, 2}));
}

// ---------------------------------------------------------------------------
// Milnor fibers

TEST(Milnor, Cusp) {
  auto pb = problem({{2, 0}, {0, 3}}, ProblemKind::Milnor);
  // [0] − ([0]+[1/2]) − ([0]+[1/3]+[2/3]) + Σ_{i<6} [i/6]
  EXPECT_EQ(eigenvalue_multiplicities(pb), G("[1/6]+[5/6]"));
  auto J = jordan_blocks(pb);
  EXPECT_EQ(J.of_size(1), G("[1/6]+[5/6]"));
  EXPECT_EQ(J.eigenvalues(), eigenvalue_multiplicities(pb));
}

TEST(Milnor, SmoothPoint) {
  auto pb = problem({{1, 0}, {0, 1}}, ProblemKind::Milnor);
  auto lm = limit_mixed_hodge_affine(pb);
  EXPECT_TRUE(lm.nontrivial.is_zero());
  EXPECT_TRUE(lm.trivial.is_zero());
  EXPECT_TRUE(eigenvalue_multiplicities(pb).is_zero());
  EXPECT_TRUE(jordan_blocks(pb).blocks.empty());
}

TEST(Milnor, BrieskornPhamIsSemisimple) {
  for (const auto& m : std::vector<std::vector<int>>{{2, 3}, {3, 4}, {2, 2, 3}, {3, 3, 3}}) {
    auto pb = make_problem(newton_data(static_cast<int>(m.size()), brieskorn_pham(m)), ProblemKind::Milnor);
    auto J = jordan_blocks(pb);
    EXPECT_EQ(J.eigenvalues(), bp_eigen_oracle(m));
    EXPECT_EQ(J.of_size(1), bp_eigen_oracle(m));
    EXPECT_EQ(wp_at_one(limit_mixed_hodge_affine(pb).trivial), bp_eigen_oracle(m).trivial_part());
  }
}

// ---------------------------------------------------------------------------
// Brieskorn-Pham at infinity

TEST(BrieskornPham, ClosedForms) {
  std::vector<std::vector<int>> ms = {{2}, {5}, {2, 2}, {2, 5}, {3, 4}, {4, 4}, {2, 3, 4}, {3, 3, 2}};
  for (const auto& m : ms) {
    auto pb = make_problem(newton_data(static_cast<int>(m.size()), brieskorn_pham(m)), ProblemKind::AtInfinity);
    EXPECT_EQ(eigenvalue_multiplicities(pb), bp_eigen_oracle(m));
    EXPECT_EQ(affine_refined_hd(pb), bp_refined_oracle(m));
    auto J = jordan_blocks(pb);
    EXPECT_EQ(J.of_size(1), bp_eigen_oracle(m));
    auto s = rational_subdivision_slice(pb);
    int top = 0;
    for (const auto& f : s.faces) top += f.dim == static_cast<int>(m.size()) - 1;
    EXPECT_EQ(top, 1);
  }
}

TEST(BrieskornPham, TorusMotivicFiberIsOneTerm) {
  std::vector<int> m = {2, 3, 5};
  auto pb = make_problem(newton_data(3, brieskorn_pham(m)), ProblemKind::AtInfinity);
  auto terms = motivic_nearby_fiber_hypersurface(pb.graph, AmbientKind::Torus);
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].lefschetz_power, 0);
  EXPECT_EQ(terms[0].cell, pb.graph.polytope().vertices());
  EXPECT_EQ(terms[0].action, (std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 5)}));
  EXPECT_EQ(terms[0].constant, 0);
}

// ---------------------------------------------------------------------------
// Torus and intersection cohomology routes

TEST(Torus, UnitSegment) {
  auto g = ConvexGraph::zero(hull({{0}, {1}}));
  EXPECT_EQ(refined_hd_polynomial_torus(g), WPolynomial(1));
  EXPECT_EQ(intersection_hd_polynomial(g), WPolynomial(1));
  EXPECT_THROW(refined_hd_polynomial_torus(ConvexGraph::zero(LatticePolytope::hull({{0, 0}, {1, 1}}, 2))),
               NotFullDimensional);
}

TEST(Torus, PolygonLefschetzPart) {
  std::vector<std::vector<IVec>> polys = {{{0, 0}, {1, 0}, {0, 1}},
                                          {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
                                          {{1, 0}, {0, 2}, {-1, 2}, {-2, 1}, {-2, 0}, {0, -1}}};
  for (const auto& v : polys) {
    auto Q = hull(v);
    int m = static_cast<int>(Q.vertices().size());
    // (t − 1)E = t²(1 + (m−3)/t) − (1 + (m−3)t) = t² − 1
    EXPECT_EQ(Q.g_dual(Q.empty_face(), Q.top_face()), (IntPoly{1, m - 3}));
    EXPECT_EQ(intersection_lefschetz(Q), (IntPoly{1, 1}));
  }
}

TEST(Torus, StrataAgreeWithIntersectionRoute) {
  auto inst = corpus::random_corpus(24, 77);
  for (const auto& [g, name] : inst) {
    auto direct = intersection_hd_polynomial(g);
    EXPECT_EQ(direct, intersection_hd_by_strata(g)) << name;
    // symmetry E(u,v,w) = conj E(v,u,w)
    auto E = refined_hd_polynomial_torus(g);
    EXPECT_EQ(E, wp_conjugate(swap_uv(E))) << name;
    EXPECT_EQ(direct, wp_conjugate(swap_uv(direct))) << name;
  }
}

// ---------------------------------------------------------------------------
// Non-convenient formula

TEST(NonConvenient, SegmentOnAnAxis) {
  auto g = ConvexGraph::zero(LatticePolytope::hull({{0, 0}, {2, 0}}, 2));
  // S = ∅, {1}, {2}, {1,2} give −1, h*, −(T − 1), (T − 1)h*
  WPolynomial T = uvw2();
  WPolynomial want = T - WPolynomial(1) + refined_h_star(g).poly;
  EXPECT_EQ(nonconvenient_refined_hd(g), want.compact());
}

// ---------------------------------------------------------------------------
// Motivic nearby fiber

TEST(Motivic, AffineTermsAtZero) {
  auto pb = problem(kDouble, ProblemKind::AtZero);
  auto terms = motivic_nearby_fiber_hypersurface(pb.graph, AmbientKind::Affine);
  auto faces = newton_faces(pb);
  int cones = 0;
  for (const auto& f : faces) cones += f.dim >= 0;
  int nontrivial = 0;
  for (const auto& t : terms) {
    EXPECT_GE(t.lefschetz_power, 0);
    bool zero = t.constant == 0 &&
                std::all_of(t.action.begin(), t.action.end(), [](const Rational& a) { return a == 0; });
    bool has_origin = std::binary_search(t.cell.begin(), t.cell.end(), IVec{0, 0});
    EXPECT_EQ(zero, !has_origin);
    nontrivial += !zero;
  }
  EXPECT_EQ(nontrivial, cones);
  EXPECT_THROW(motivic_nearby_fiber_hypersurface(ConvexGraph::zero(hull({{1, 1}, {2, 1}, {1, 2}})),
                                                 AmbientKind::Affine),
               NotConvenient);
}

TEST(Motivic, TrivialSubdivisionTorus) {
  auto terms = motivic_nearby_fiber_hypersurface(ConvexGraph::zero(hull({{0, 0}, {2, 0}, {0, 3}})), AmbientKind::Torus);
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].lefschetz_power, 0);
}

// ---------------------------------------------------------------------------
// Tilde-l decomposition

TEST(TildeL, PeelAndReassemble) {
  IntPoly l{1, 3, 4, 3, 1};
  auto tl = tilde_l(l, 4);
  EXPECT_EQ(tl, (std::vector<Integer>{1, 2, 1}));
  EXPECT_EQ(reassemble_tilde_l(tl, 4), l);
  EXPECT_THROW(tilde_l(IntPoly{1, 0, 1}, 2), NonUnimodalDecomposition);
  EXPECT_THROW(tilde_l(IntPoly{1, 2}, 1), NonUnimodalDecomposition);
}

// ---------------------------------------------------------------------------
// Properties over convenient polynomials

TEST(Properties, ConvenientCorpus) {
  for (const auto& [name, nd] : polynomial_corpus()) {
    int n = nd.n;
    for (auto kind : {ProblemKind::AtZero, ProblemKind::AtInfinity, ProblemKind::Milnor}) {
      auto pb = make_problem(nd, kind);
      std::string tag = name + "/" + to_string(kind);
      GroupRingElement eig = eigenvalue_multiplicities(pb);
      EXPECT_TRUE(eig.is_nonnegative()) << tag;
      auto J = jordan_blocks(pb);
      EXPECT_TRUE(J.nonnegative()) << tag;
      EXPECT_EQ(gr_forget(J.eigenvalues()), gr_forget(eig)) << tag;
      auto lm = limit_mixed_hodge_affine(pb);
      EXPECT_EQ(wp_at_one(lm.nontrivial).coeff(TorsionClass()), 0) << tag;
      EXPECT_EQ(wp_at_one(lm.nontrivial) + wp_at_one(lm.trivial), eig) << tag;
      if (kind == ProblemKind::Milnor) {
        EXPECT_EQ(J.eigenvalues(), eig) << tag;
        continue;
      }
      WPolynomial E = affine_refined_hd(pb);
      EXPECT_EQ(E, wp_conjugate(swap_uv(E))) << tag;
      // u = v = w = 1 against the volume formula
      GroupRingElement at1 = wp_at_one(E) - GroupRingElement(1);
      if ((n - 1) % 2 != 0) at1 = GroupRingElement() - at1;
      EXPECT_EQ(at1, eig) << tag;
      // w = 1 against the limit mixed Hodge sums
      WPolynomial uvE = at_w_one(E) * P("u*v") - P("u*v").pow(n);
      if ((n - 1) % 2 != 0) uvE = WPolynomial() - uvE;
      EXPECT_EQ(uvE.compact(), (lm.nontrivial + lm.trivial).compact()) << tag;
      EXPECT_EQ(nonconvenient_refined_hd(pb), E) << tag;
      if (kind == ProblemKind::AtInfinity) EXPECT_EQ(J.eigenvalues(), eig) << tag;
      auto t = vds_size_formulas(pb);
      EXPECT_EQ(t.size_n, J.of_size(n)) << tag;
      EXPECT_EQ(t.size_n_minus_1, J.of_size(n - 1)) << tag;
    }
    for (auto kind : {ProblemKind::AtInfinity, ProblemKind::Milnor}) {
      auto pb = make_problem(nd, kind);
      auto J = jordan_blocks(pb);
      auto t = vds_size_formulas(pb);
      std::string tag = name + "/" + to_string(kind);
      EXPECT_EQ(t.size_n, J.of_size(n)) << tag;
      EXPECT_EQ(t.size_n_minus_1, J.of_size(n - 1)) << tag;
      if (n >= 3) EXPECT_EQ(t.trivial_size_n_minus_2, J.count(n - 2, TorsionClass())) << tag;
    }
  }
}
