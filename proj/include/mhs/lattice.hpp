#pragma once

/**
 * @file lattice.hpp
 * @brief Lattice polytopes with face lattices, lattice point enumeration,
 *        normalized volumes, pulling triangulations and box points of
 *        simplicial cones.
 */

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <vector>

#include "mhs/linalg.hpp"
#include "mhs/poset.hpp"

namespace mhs {

using VertexSet = std::vector<int>;  // sorted vertex indices

// normal . y <= offset in local coordinates
struct Facet {
  std::vector<Integer> normal;
  Integer offset;
  VertexSet vertices;
};

inline Integer dot(const std::vector<Integer>& a, const IVec& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * y[i];
  return s;
}

namespace detail {

// Facets of the convex hull of full-dimensional points in Z^d; each facet is
// returned with the indices of all points lying on it.
inline std::vector<Facet> enumerate_facets(const std::vector<IVec>& pts, int d) {
  std::vector<Facet> out;
  if (d == 0) return out;
  std::set<VertexSet> seen;
  int n = static_cast<int>(pts.size());
  std::vector<int> comb(d);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == d) {
      std::vector<std::vector<Integer>> rows;
      for (int k = 1; k < d; ++k) {
        std::vector<Integer> r;
        for (int c = 0; c < d; ++c) r.emplace_back(pts[comb[k]][c] - pts[comb[0]][c]);
        rows.push_back(r);
      }
      std::vector<Integer> nrm;
      if (d == 1)
        nrm = {Integer(1)};
      else
        nrm = normal_vector(rows, d);
      bool zero = std::all_of(nrm.begin(), nrm.end(), [](const Integer& x) { return x == 0; });
      if (zero) return;
      Integer b = dot(nrm, pts[comb[0]]);
      bool pos = false, neg = false;
      VertexSet tight;
      for (int i = 0; i < n; ++i) {
        Integer v = dot(nrm, pts[i]) - b;
        if (v > 0) pos = true;
        if (v < 0) neg = true;
        if (v == 0) tight.push_back(i);
        if (pos && neg) return;
      }
      if (seen.count(tight)) return;
      seen.insert(tight);
      if (pos) {
        for (auto& x : nrm) x = -x;
        b = -b;
      }
      out.push_back(Facet{nrm, b, tight});
      return;
    }
    for (int i = start; i < n; ++i) {
      comb[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace detail

class LatticePolytope {
 public:
  LatticePolytope() = default;

  // Convex hull of a finite point set (empty list gives the empty polytope).
  static LatticePolytope hull(const std::vector<IVec>& points_in, int ambient_dim = -1) {
    LatticePolytope P;
    std::vector<IVec> pts = points_in;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (ambient_dim < 0) {
      if (pts.empty()) throw InvalidInput("empty point list needs an ambient dimension");
      ambient_dim = static_cast<int>(pts[0].size());
    }
    for (const auto& p : pts)
      if (static_cast<int>(p.size()) != ambient_dim) throw InvalidInput("point dimension mismatch");
    P.n_ = ambient_dim;
    if (pts.empty()) {
      P.dim_ = -1;
      P.build_faces();
      return P;
    }
    P.lat_ = AffineLattice::of(pts, ambient_dim);
    P.dim_ = P.lat_.dim;
    std::vector<IVec> loc;
    for (const auto& p : pts) loc.push_back(P.lat_.to_local(p));
    auto facets = detail::enumerate_facets(loc, P.dim_);
    // extreme points: points alone in the intersection of their facets
    std::vector<int> keep;
    if (P.dim_ == 0) {
      keep = {0};
    } else {
      for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        VertexSet inter;
        bool first = true;
        for (const auto& f : facets) {
          if (!std::binary_search(f.vertices.begin(), f.vertices.end(), i)) continue;
          if (first) {
            inter = f.vertices;
            first = false;
          } else {
            VertexSet tmp;
            std::set_intersection(inter.begin(), inter.end(), f.vertices.begin(), f.vertices.end(),
                                  std::back_inserter(tmp));
            inter = tmp;
          }
        }
        if (!first && inter.size() == 1) keep.push_back(i);
      }
    }
    std::vector<int> newidx(pts.size(), -1);
    for (std::size_t k = 0; k < keep.size(); ++k) {
      newidx[keep[k]] = static_cast<int>(k);
      P.vertices_.push_back(pts[keep[k]]);
      P.local_.push_back(loc[keep[k]]);
    }
    for (auto& f : facets) {
      VertexSet vs;
      for (int i : f.vertices)
        if (newidx[i] >= 0) vs.push_back(newidx[i]);
      f.vertices = vs;
    }
    P.facets_ = facets;
    P.build_faces();
    return P;
  }

  int ambient_dim() const { return n_; }
  int dim() const { return dim_; }
  bool empty() const { return dim_ < 0; }
  const std::vector<IVec>& vertices() const { return vertices_; }
  const std::vector<IVec>& local_vertices() const { return local_; }
  const AffineLattice& lattice() const { return lat_; }
  const std::vector<Facet>& facets() const { return facets_; }

  // ---- face lattice ----
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int empty_face() const { return 0; }
  int top_face() const { return num_faces() - 1; }
  const VertexSet& face_vertices(int f) const { return faces_[f]; }
  int face_dim(int f) const { return face_dim_[f]; }
  bool face_leq(int a, int b) const { return poset_->leq(a, b); }
  std::shared_ptr<const GradedPoset> face_poset() const { return poset_; }
  EulerianPoset face_lattice() const { return make_eulerian(poset_, empty_face(), top_face(), false); }
  std::vector<IVec> face_points(int f) const {
    std::vector<IVec> r;
    for (int i : faces_[f]) r.push_back(vertices_[i]);
    return r;
  }
  LatticePolytope face_polytope(int f) const { return hull(face_points(f), n_); }
  int face_index(const VertexSet& vs) const {
    auto it = std::lower_bound(face_order_.begin(), face_order_.end(), vs,
                               [&](int a, const VertexSet& v) { return faces_[a] < v; });
    if (it == face_order_.end() || faces_[*it] != vs) return -1;
    return *it;
  }
  // faces of a given dimension
  std::vector<int> faces_of_dim(int d) const {
    std::vector<int> r;
    for (int f = 0; f < num_faces(); ++f)
      if (face_dim_[f] == d) r.push_back(f);
    return r;
  }

  // g([Q,P]) and g([Q,P]^*) for faces Q <= R
  IntPoly g(int q, int r) const { return poset_->g(q, r); }
  IntPoly g_dual(int q, int r) const { return poset_->g_dual(q, r); }

  // ---- membership ----
  bool contains(const IVec& x, std::int64_t m = 1) const {
    if (empty()) return false;
    if (!lat_.contains(x, m)) return false;
    IVec y = lat_.to_local(x, m);
    for (const auto& f : facets_)
      if (dot(f.normal, y) > f.offset * m) return false;
    return true;
  }
  bool in_relative_interior(const IVec& x, std::int64_t m = 1) const {
    if (empty()) return false;
    if (!lat_.contains(x, m)) return false;
    IVec y = lat_.to_local(x, m);
    for (const auto& f : facets_)
      if (dot(f.normal, y) >= f.offset * m) return false;
    return true;
  }
  // smallest face containing all given points (which must lie in P)
  int smallest_face_containing(const std::vector<IVec>& pts) const {
    if (pts.empty()) return empty_face();
    VertexSet vs(vertices_.size());
    std::iota(vs.begin(), vs.end(), 0);
    for (const auto& f : facets_) {
      bool all_tight = true;
      for (const auto& p : pts) {
        IVec y = lat_.to_local(p);
        if (dot(f.normal, y) != f.offset) {
          all_tight = false;
          break;
        }
      }
      if (!all_tight) continue;
      VertexSet tmp;
      std::set_intersection(vs.begin(), vs.end(), f.vertices.begin(), f.vertices.end(), std::back_inserter(tmp));
      vs = tmp;
    }
    return face_index(vs);
  }

  // ---- lattice points ----
  // lattice points of mP (m >= 0); relative interior only if interior = true
  std::vector<IVec> lattice_points(std::int64_t m, bool interior = false) const {
    std::vector<IVec> out;
    if (empty()) return out;
    if (m == 0) {
      if (!interior || dim_ == 0) out.push_back(IVec(n_, 0));
      return out;
    }
    if (dim_ == 0) {
      out.push_back(lat_.to_ambient(IVec{}, m));
      return out;
    }
    IVec lo(dim_), hi(dim_);
    for (int k = 0; k < dim_; ++k) {
      lo[k] = hi[k] = local_[0][k] * m;
      for (const auto& v : local_) {
        lo[k] = std::min(lo[k], v[k] * m);
        hi[k] = std::max(hi[k], v[k] * m);
      }
    }
    IVec y = lo;
    while (true) {
      bool ok = true;
      for (const auto& f : facets_) {
        Integer v = dot(f.normal, y);
        Integer b = f.offset * m;
        if (interior ? v >= b : v > b) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(lat_.to_ambient(y, m));
      int k = 0;
      while (k < dim_ && y[k] == hi[k]) {
        y[k] = lo[k];
        ++k;
      }
      if (k == dim_) break;
      ++y[k];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // ---- triangulation and volume ----
  // Pulling triangulation of face f, pulling vertices in increasing index
  // (= lexicographic) order. Simplices are vertex index sets.
  std::vector<VertexSet> pulling_triangulation(int f = -1) const {
    if (f < 0) f = top_face();
    std::vector<VertexSet> out;
    const VertexSet& vs = faces_[f];
    if (face_dim_[f] < 0) return out;
    if (static_cast<int>(vs.size()) == face_dim_[f] + 1) {
      out.push_back(vs);
      return out;
    }
    int v = vs.front();
    for (int g = 0; g < num_faces(); ++g) {
      if (face_dim_[g] != face_dim_[f] - 1 || !face_leq(g, f)) continue;
      if (std::binary_search(faces_[g].begin(), faces_[g].end(), v)) continue;
      for (auto s : pulling_triangulation(g)) {
        s.push_back(v);
        std::sort(s.begin(), s.end());
        out.push_back(s);
      }
    }
    return out;
  }

  // normalized volume dim! * vol in the lattice of the affine span; 1 for a point
  Integer normalized_volume() const {
    if (dim_ < 0) return 0;
    if (dim_ == 0) return 1;
    Integer total = 0;
    for (const auto& s : pulling_triangulation()) {
      ZMatrix m;
      for (std::size_t i = 1; i < s.size(); ++i) {
        std::vector<Integer> row;
        for (int k = 0; k < dim_; ++k) row.emplace_back(local_[s[i]][k] - local_[s[0]][k]);
        m.push_back(row);
      }
      total += abs(determinant(m));
    }
    return total;
  }

 private:
  void build_faces() {
    std::set<VertexSet> found;
    VertexSet all(vertices_.size());
    std::iota(all.begin(), all.end(), 0);
    found.insert(VertexSet{});
    if (!vertices_.empty()) {
      found.insert(all);
      std::vector<VertexSet> queue;
      for (const auto& f : facets_)
        if (found.insert(f.vertices).second) queue.push_back(f.vertices);
      while (!queue.empty()) {
        VertexSet cur = queue.back();
        queue.pop_back();
        for (const auto& f : facets_) {
          VertexSet tmp;
          std::set_intersection(cur.begin(), cur.end(), f.vertices.begin(), f.vertices.end(), std::back_inserter(tmp));
          if (found.insert(tmp).second) queue.push_back(tmp);
        }
      }
    }
    std::vector<std::pair<int, VertexSet>> tagged;
    for (const auto& vs : found) {
      std::vector<IVec> pts;
      for (int i : vs) pts.push_back(local_[i]);
      tagged.emplace_back(affine_dimension(pts), vs);
    }
    std::sort(tagged.begin(), tagged.end());
    for (auto& [d, vs] : tagged) {
      face_dim_.push_back(d);
      faces_.push_back(vs);
    }
    int nf = static_cast<int>(faces_.size());
    face_order_.resize(nf);
    std::iota(face_order_.begin(), face_order_.end(), 0);
    std::sort(face_order_.begin(), face_order_.end(), [&](int a, int b) { return faces_[a] < faces_[b]; });
    std::vector<int> rank(nf);
    std::vector<std::vector<char>> leq(nf, std::vector<char>(nf, 0));
    for (int a = 0; a < nf; ++a) {
      rank[a] = face_dim_[a] + 1;
      for (int b = 0; b < nf; ++b)
        leq[a][b] = std::includes(faces_[b].begin(), faces_[b].end(), faces_[a].begin(), faces_[a].end());
    }
    poset_ = std::make_shared<GradedPoset>(rank, leq);
  }

  int n_ = 0;
  int dim_ = -1;
  std::vector<IVec> vertices_;
  std::vector<IVec> local_;
  AffineLattice lat_;
  std::vector<Facet> facets_;
  std::vector<VertexSet> faces_;
  std::vector<int> face_dim_;
  std::vector<int> face_order_;
  std::shared_ptr<const GradedPoset> poset_;
};

inline LatticePolytope hull(const std::vector<IVec>& pts) { return LatticePolytope::hull(pts); }

inline std::vector<IVec> lattice_points(const LatticePolytope& P, std::int64_t m) { return P.lattice_points(m); }
inline std::vector<IVec> interior_lattice_points(const LatticePolytope& P, std::int64_t m) {
  return P.lattice_points(m, true);
}
inline Integer normalized_volume(const LatticePolytope& P) { return P.normalized_volume(); }

// Lattice distance from a point to the affine hull of a facet-like subset
// `face` of P (dim face = dim P - 1), measured in the lattice of aff(P).
inline Integer lattice_distance(const LatticePolytope& P, int face, const IVec& x) {
  if (P.face_dim(face) != P.dim() - 1) throw InvalidInput("lattice distance needs a facet");
  for (const auto& f : P.facets())
    if (f.vertices == P.face_vertices(face)) {
      Integer v = f.offset - dot(f.normal, P.lattice().to_local(x));
      return abs(v);
    }
  throw InvalidInput("facet not found");
}

// ---- simplicial cones and box points ----

struct SimplicialCone {
  std::vector<IVec> rays;  // primitive, linearly independent
};

struct BoxPoint {
  IVec coordinates;
  std::vector<Rational> barycentric;
  std::int64_t height = 0;  // last coordinate
};

// Cone over a lattice simplex: generators (v_i, 1).
inline SimplicialCone cone_over(const std::vector<IVec>& simplex_vertices) {
  SimplicialCone c;
  for (auto v : simplex_vertices) {
    v.push_back(1);
    c.rays.push_back(v);
  }
  return c;
}

// Solve Σ λ_i g_i = y over Q (generators independent).
inline std::vector<Rational> solve_in_span(const std::vector<IVec>& gens, const IVec& y) {
  int k = static_cast<int>(gens.size());
  int n = static_cast<int>(y.size());
  // augmented n x (k+1)
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = gens[j][i];
    a[i][k] = y[i];
  }
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < k && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (a[i][c] != 0) { p = i; break; }
    if (p < 0) throw DependentVectors("generators are dependent");
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (int j = c; j <= k; ++j) a[r][j] *= inv;
    for (int i = 0; i < n; ++i)
      if (i != r && a[i][c] != 0) {
        Rational f = a[i][c];
        for (int j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
      }
    pivcol.push_back(c);
    ++r;
  }
  for (int i = r; i < n; ++i)
    if (a[i][k] != 0) throw InvalidInput("point not in span of generators");
  std::vector<Rational> lam(k);
  for (int i = 0; i < r; ++i) lam[pivcol[i]] = a[i][k];
  return lam;
}

// Lattice points of the half-open fundamental parallelepiped, enumerated as
// coset representatives of (Z^N ∩ span) / (Σ Z v_i).
inline std::vector<BoxPoint> box_points(const SimplicialCone& cone) {
  std::vector<BoxPoint> out;
  int k = static_cast<int>(cone.rays.size());
  if (k == 0) {
    out.push_back(BoxPoint{});
    return out;
  }
  int N = static_cast<int>(cone.rays[0].size());
  if (rank_of(cone.rays) < k) throw DependentVectors("cone generators are dependent");
  std::vector<IVec> pts = {IVec(N, 0)};
  for (const auto& r : cone.rays) pts.push_back(r);
  AffineLattice L = AffineLattice::of(pts, N);
  std::vector<IVec> loc;
  for (const auto& r : cone.rays) loc.push_back(L.to_local(r));
  auto f = diagonal_form(to_zmatrix(loc), k);
  auto diag = f.diagonal();
  std::vector<std::int64_t> t(k, 0);
  std::vector<std::int64_t> lim(k);
  for (int i = 0; i < k; ++i) lim[i] = to_i64(diag[i]);
  while (true) {
    // y = t^T Q^{-1}
    IVec y(k, 0);
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < k; ++c) y[c] += to_i64(Integer(t[i]) * f.q_inv[i][c]);
    auto lam = solve_in_span(loc, y);
    BoxPoint bp;
    IVec coords(N, 0);
    std::vector<Rational> a(k);
    for (int i = 0; i < k; ++i) a[i] = lam[i] - Rational(floor_of(lam[i]));
    // coordinates = Σ a_i v_i (integral)
    for (int c = 0; c < N; ++c) {
      Rational s = 0;
      for (int i = 0; i < k; ++i) s += a[i] * cone.rays[i][c];
      coords[c] = to_i64(numerator_of(s));
    }
    bp.coordinates = coords;
    bp.barycentric = a;
    bp.height = coords.back();
    out.push_back(bp);
    int i = 0;
    while (i < k && t[i] + 1 >= lim[i]) {
      t[i] = 0;
      ++i;
    }
    if (i == k) break;
    ++t[i];
  }
  std::sort(out.begin(), out.end(), [](const BoxPoint& x, const BoxPoint& y) { return x.coordinates < y.coordinates; });
  return out;
}

}  // namespace mhs
