#pragma once

/**
 * @file subdivision.hpp
 * @brief Regular subdivisions from integral heights (convex graphs), abstract
 *        cell complexes over a polytope, link h- and local h-polynomials, and
 *        pulling triangulations refining a subdivision.
 */

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "mhs/lattice.hpp"

namespace mhs {

// ---------------------------------------------------------------------------
// Cell complex subdividing a polytope whose face lattice is `ambient`.

struct CellComplex {
  int dim = -1;                                  // dim of the subdivided polytope
  std::shared_ptr<const GradedPoset> ambient;    // faces of the polytope
  std::vector<int> ambient_dim;
  int ambient_top = 0;
  std::shared_ptr<const GradedPoset> cells;      // cells, including the empty cell
  std::vector<int> cell_dim;
  std::vector<int> sigma;                        // smallest face containing each cell

  int num_cells() const { return static_cast<int>(cell_dim.size()); }
  int empty_cell() const {
    for (int c = 0; c < num_cells(); ++c)
      if (cell_dim[c] < 0) return c;
    return -1;
  }
  int num_faces() const { return static_cast<int>(ambient_dim.size()); }

  // h(lk_{S|_R}(F); t) with S|_R the cells inside the face R
  IntPoly link_h(int F, int R) const {
    if (!ambient->leq(sigma[F], R)) throw CellNotInSubdivision("cell is not contained in the face");
    int d = ambient_dim[R] - cell_dim[F];
    IntPoly rhs;
    for (int G = 0; G < num_cells(); ++G) {
      if (!cells->leq(F, G) || !ambient->leq(sigma[G], R)) continue;
      rhs += cells->g(F, G) * IntPoly::t_minus_one_pow(ambient_dim[R] - cell_dim[G]);
    }
    return rhs.reversed(d);
  }
  IntPoly link_h(int F) const { return link_h(F, ambient_top); }

  // l_P(S, F; t)
  IntPoly local_h(int F) const {
    IntPoly r;
    for (int R = 0; R < num_faces(); ++R) {
      if (!ambient->leq(sigma[F], R)) continue;
      IntPoly term = link_h(F, R) * ambient->g_dual(R, ambient_top);
      if ((dim - ambient_dim[R]) % 2 != 0)
        r -= term;
      else
        r += term;
    }
    return r;
  }
};

// Cells given by their vertex lists inside a lattice polytope.
inline CellComplex build_complex(const LatticePolytope& P, const std::vector<std::vector<IVec>>& cell_vertices) {
  CellComplex cc;
  cc.dim = P.dim();
  cc.ambient = P.face_poset();
  for (int f = 0; f < P.num_faces(); ++f) cc.ambient_dim.push_back(P.face_dim(f));
  cc.ambient_top = P.top_face();
  int n = static_cast<int>(cell_vertices.size());
  std::vector<int> rank(n);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    int d = affine_dimension(cell_vertices[a]);
    cc.cell_dim.push_back(d);
    rank[a] = d + 1;
    cc.sigma.push_back(P.smallest_face_containing(cell_vertices[a]));
    for (int b = 0; b < n; ++b)
      leq[a][b] = std::includes(cell_vertices[b].begin(), cell_vertices[b].end(), cell_vertices[a].begin(),
                                cell_vertices[a].end());
  }
  cc.cells = std::make_shared<GradedPoset>(rank, leq);
  return cc;
}

// ---------------------------------------------------------------------------
// Convex graph ν = lower envelope of integral heights ω on a support S ⊆ P.

struct HeightFunction {
  std::vector<IVec> points;
  std::vector<Integer> values;
};

// ν(y) = alpha . y + beta * scale in the local coordinates of P
struct AffinePiece {
  std::vector<Rational> alpha;
  Rational beta;
};

struct Cell {
  std::vector<IVec> vertices;  // sorted ambient points
  int dim = -1;
  int sigma = 0;               // face index in P
  int piece = -1;              // index of an affine piece valid on the cell
};

class ConvexGraph {
 public:
  static ConvexGraph lower_hull(const LatticePolytope& P, const HeightFunction& omega) {
    ConvexGraph g;
    g.P_ = P;
    if (omega.points.size() != omega.values.size()) throw InvalidHeights("points and values differ in length");
    if (P.empty()) throw InvalidHeights("empty polytope");
    // validate support and dedupe
    std::map<IVec, Integer> om;
    for (std::size_t i = 0; i < omega.points.size(); ++i) {
      const auto& p = omega.points[i];
      if (static_cast<int>(p.size()) != P.ambient_dim() || !P.contains(p))
        throw InvalidHeights("support point outside the polytope");
      auto [it, ins] = om.emplace(p, omega.values[i]);
      if (!ins && it->second != omega.values[i]) throw InvalidHeights("conflicting heights for a point");
    }
    for (const auto& v : P.vertices())
      if (!om.count(v)) throw InvalidHeights("support must contain every vertex");
    for (const auto& [p, val] : om) {
      g.omega_.points.push_back(p);
      g.omega_.values.push_back(val);
    }
    int d = P.dim();
    std::vector<IVec> loc;
    for (const auto& p : g.omega_.points) loc.push_back(P.lattice().to_local(p));
    std::vector<std::vector<IVec>> maximal;
    if (d == 0) {
      g.pieces_.push_back(AffinePiece{{}, Rational(g.omega_.values[0])});
      maximal.push_back(P.vertices());
    } else {
      std::vector<IVec> lifted;
      Integer top = g.omega_.values[0];
      for (std::size_t i = 0; i < loc.size(); ++i) {
        IVec y = loc[i];
        y.push_back(to_i64(g.omega_.values[i]));
        lifted.push_back(y);
        top = std::max(top, g.omega_.values[i]);
      }
      IVec apex = loc[0];
      apex.push_back(to_i64(top + 1));
      lifted.push_back(apex);
      int apex_idx = static_cast<int>(lifted.size()) - 1;
      for (const auto& f : detail::enumerate_facets(lifted, d + 1)) {
        const Integer& c = f.normal[d];
        if (c >= 0) continue;
        AffinePiece pc;
        for (int k = 0; k < d; ++k) pc.alpha.push_back(ratio(-f.normal[k], c));
        pc.beta = ratio(f.offset, c);
        std::vector<IVec> pts;
        for (int i : f.vertices)
          if (i != apex_idx) pts.push_back(g.omega_.points[i]);
        g.pieces_.push_back(pc);
        maximal.push_back(LatticePolytope::hull(pts, P.ambient_dim()).vertices());
      }
    }
    // all faces of maximal cells
    std::map<std::vector<IVec>, int> index;
    std::vector<std::vector<IVec>> all;
    std::vector<int> piece_of;
    for (std::size_t m = 0; m < maximal.size(); ++m) {
      auto C = LatticePolytope::hull(maximal[m], P.ambient_dim());
      g.cell_polys_.push_back(C);
      for (int f = 0; f < C.num_faces(); ++f) {
        auto vs = C.face_points(f);
        if (index.emplace(vs, static_cast<int>(all.size())).second) {
          all.push_back(vs);
          piece_of.push_back(static_cast<int>(m));
        }
      }
    }
    // order cells by (dim, vertices)
    std::vector<int> perm(all.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> dims;
    for (const auto& vs : all) dims.push_back(affine_dimension(vs));
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      return dims[a] != dims[b] ? dims[a] < dims[b] : all[a] < all[b];
    });
    std::vector<std::vector<IVec>> sorted;
    for (int i : perm) sorted.push_back(all[i]);
    g.complex_ = build_complex(P, sorted);
    for (std::size_t k = 0; k < perm.size(); ++k) {
      Cell c;
      c.vertices = sorted[k];
      c.dim = g.complex_.cell_dim[k];
      c.sigma = g.complex_.sigma[k];
      c.piece = piece_of[perm[k]];
      g.cells_.push_back(c);
    }
    return g;
  }

  // Convex graph with ν identically zero (trivial subdivision).
  static ConvexGraph zero(const LatticePolytope& P) {
    HeightFunction h;
    for (const auto& v : P.vertices()) {
      h.points.push_back(v);
      h.values.push_back(0);
    }
    return lower_hull(P, h);
  }

  const LatticePolytope& polytope() const { return P_; }
  const HeightFunction& heights() const { return omega_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const CellComplex& complex() const { return complex_; }
  int dim() const { return P_.dim(); }
  bool is_affine() const { return pieces_.size() == 1; }

  int cell_index(const std::vector<IVec>& vertices) const {
    for (int c = 0; c < static_cast<int>(cells_.size()); ++c)
      if (cells_[c].vertices == vertices) return c;
    return -1;
  }
  std::vector<int> maximal_cells() const {
    std::vector<int> r;
    for (int c = 0; c < static_cast<int>(cells_.size()); ++c)
      if (cells_[c].dim == dim()) r.push_back(c);
    return r;
  }
  LatticePolytope cell_polytope(int c) const { return LatticePolytope::hull(cells_[c].vertices, P_.ambient_dim()); }

  // ν at the point (x, m) of the cone over P, i.e. m ν(x/m); x ∈ mP
  Rational nu(const IVec& x, std::int64_t m = 1) const {
    IVec y = P_.lattice().to_local(x, m);
    Rational best;
    bool first = true;
    for (const auto& pc : pieces_) {
      Rational v = pc.beta * m;
      for (std::size_t k = 0; k < y.size(); ++k) v += pc.alpha[k] * y[k];
      if (first || v > best) best = v;
      first = false;
    }
    return best;
  }
  TorsionClass weight(const IVec& x, std::int64_t m = 1) const { return TorsionClass::of(nu(x, m)); }

  // Affine piece i expressed on ambient coordinates: ν(x) = a . x + b.
  std::pair<std::vector<Rational>, Rational> ambient_piece(int i) const {
    const auto& pc = pieces_[i];
    const auto& L = P_.lattice();
    int n = P_.ambient_dim();
    std::vector<Rational> a(n, Rational(0));
    Rational b = pc.beta;
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < L.dim; ++j) a[r] += pc.alpha[j] * Rational(L.coord[r][j]);
    for (int r = 0; r < n; ++r) b -= a[r] * L.origin[r];
    return {a, b};
  }

  // Restriction ν|_Q to a face Q of P (the induced subdivision is S(ν)|_Q).
  ConvexGraph restrict_to_face(int face) const {
    LatticePolytope Q = P_.face_polytope(face);
    HeightFunction h;
    for (std::size_t i = 0; i < omega_.points.size(); ++i)
      if (Q.contains(omega_.points[i])) {
        h.points.push_back(omega_.points[i]);
        h.values.push_back(omega_.values[i]);
      }
    return lower_hull(Q, h);
  }

  // ν restricted to a cell; affine there, with integral vertex values.
  ConvexGraph restrict_to_cell(int c) const {
    LatticePolytope C = cell_polytope(c);
    HeightFunction h;
    for (const auto& v : C.vertices()) {
      Rational val = nu(v);
      if (denominator_of(val) != 1) throw InvalidHeights("non-integral value at a vertex of the subdivision");
      h.points.push_back(v);
      h.values.push_back(numerator_of(val));
    }
    return lower_hull(C, h);
  }

  // Minimal m with m ν|_F affine with respect to the lattice of aff(P); F maximal.
  Integer denominator_on_cell(int c) const {
    const auto& pc = pieces_[cells_[c].piece];
    Integer l = denominator_of(pc.beta);
    for (const auto& a : pc.alpha) l = boost::multiprecision::lcm(l, denominator_of(a));
    return l;
  }

 private:
  LatticePolytope P_;
  HeightFunction omega_;
  std::vector<AffinePiece> pieces_;
  std::vector<LatticePolytope> cell_polys_;
  std::vector<Cell> cells_;
  CellComplex complex_;
};

inline ConvexGraph lower_hull(const LatticePolytope& P, const HeightFunction& omega) {
  return ConvexGraph::lower_hull(P, omega);
}

// σ(F) dimension for each cell
inline std::vector<int> sigma_dims(const ConvexGraph& g) {
  std::vector<int> r;
  for (const auto& c : g.cells()) r.push_back(g.polytope().face_dim(c.sigma));
  return r;
}

inline IntPoly link_h_polynomial(const ConvexGraph& g, int cell) { return g.complex().link_h(cell); }
inline IntPoly local_h_polynomial(const ConvexGraph& g, int cell) { return g.complex().local_h(cell); }

// ---------------------------------------------------------------------------
// Pulling triangulation refining S(ν) (pulling in lexicographic vertex order,
// which makes the triangulations of the cells agree on common faces).

struct Triangulation {
  std::vector<std::vector<IVec>> simplices;  // all cells incl. the empty one, sorted by (dim, vertices)
  CellComplex complex;
};

inline Triangulation unimodular_refinement(const ConvexGraph& g) {
  std::set<std::vector<IVec>> found;
  found.insert(std::vector<IVec>{});
  for (int c : g.maximal_cells()) {
    auto C = g.cell_polytope(c);
    for (const auto& s : C.pulling_triangulation()) {
      std::vector<IVec> verts;
      for (int i : s) verts.push_back(C.vertices()[i]);
      int k = static_cast<int>(verts.size());
      for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<IVec> sub;
        for (int i = 0; i < k; ++i)
          if (mask & (1 << i)) sub.push_back(verts[i]);
        found.insert(sub);
      }
    }
  }
  Triangulation t;
  t.simplices.assign(found.begin(), found.end());
  std::stable_sort(t.simplices.begin(), t.simplices.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  t.complex = build_complex(g.polytope(), t.simplices);
  return t;
}

}  // namespace mhs
