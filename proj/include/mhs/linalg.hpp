#pragma once

/**
 * @file linalg.hpp
 * @brief Exact integer linear algebra: ranks, determinants, diagonal (Smith)
 *        reduction with transforms, saturated lattice bases.
 */

#include <cstdint>
#include <vector>

#include "mhs/exactalg.hpp"

namespace mhs {

using IVec = std::vector<std::int64_t>;
using ZMatrix = std::vector<std::vector<Integer>>;
using QVec = std::vector<Rational>;

inline ZMatrix to_zmatrix(const std::vector<IVec>& rows) {
  ZMatrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec ivec_scale(const IVec& a, std::int64_t s) {
  IVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

inline std::int64_t ivec_gcd(const IVec& a) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// Bareiss fraction-free elimination; returns rank.
inline int matrix_rank(ZMatrix a) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(a[0].size());
  int r = 0;
  Integer prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[r][c] - a[r][j] * a[i][c]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline int rank_of(const std::vector<IVec>& vs) { return matrix_rank(to_zmatrix(vs)); }

// Affine rank of a point set (dimension of affine hull), -1 for empty.
inline int affine_dimension(const std::vector<IVec>& pts) {
  if (pts.empty()) return -1;
  std::vector<IVec> d;
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(ivec_sub(pts[i], pts[0]));
  return rank_of(d);
}

inline Integer determinant(ZMatrix a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Integer normal vector to d-1 vectors in Z^d (generalized cross product),
// made primitive. Zero vector if dependent.
inline std::vector<Integer> normal_vector(const std::vector<std::vector<Integer>>& rows, int d) {
  std::vector<Integer> nrm(d);
  for (int j = 0; j < d; ++j) {
    ZMatrix m;
    for (const auto& r : rows) {
      std::vector<Integer> row;
      for (int c = 0; c < d; ++c)
        if (c != j) row.push_back(r[c]);
      m.push_back(row);
    }
    Integer det = determinant(m);
    nrm[j] = (j % 2 == 0) ? det : Integer(-det);
  }
  Integer g = 0;
  for (const auto& x : nrm) g = boost::multiprecision::gcd(g, x);
  if (g != 0)
    for (auto& x : nrm) x /= g;
  return nrm;
}

// Diagonal reduction P*A*Q = D with P, Q unimodular. Only Q and Q^{-1} are
// tracked (row transforms are not needed by callers) along with P when asked.
struct DiagonalForm {
  ZMatrix d;      // rows x cols, diagonal
  ZMatrix p;      // rows x rows
  ZMatrix q;      // cols x cols
  ZMatrix q_inv;  // cols x cols
  int rank = 0;
  std::vector<Integer> diagonal() const {
    std::vector<Integer> r;
    for (int i = 0; i < rank; ++i) r.push_back(d[i][i]);
    return r;
  }
};

inline ZMatrix identity_matrix(int n) {
  ZMatrix m(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline DiagonalForm diagonal_form(const ZMatrix& a_in, int cols) {
  DiagonalForm f;
  f.d = a_in;
  int rows = static_cast<int>(a_in.size());
  f.p = identity_matrix(rows);
  f.q = identity_matrix(cols);
  f.q_inv = identity_matrix(cols);
  auto& a = f.d;
  // column op: col j -= k * col i  (Q: same column op; Q^{-1}: row i += k * row j)
  auto col_addmul = [&](int j, int i, const Integer& k) {
    for (int r = 0; r < rows; ++r) a[r][j] -= k * a[r][i];
    for (int r = 0; r < cols; ++r) f.q[r][j] -= k * f.q[r][i];
    for (int c = 0; c < cols; ++c) f.q_inv[i][c] += k * f.q_inv[j][c];
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(f.q[r][i], f.q[r][j]);
    std::swap(f.q_inv[i], f.q_inv[j]);
  };
  auto row_addmul = [&](int j, int i, const Integer& k) {
    for (int c = 0; c < cols; ++c) a[j][c] -= k * a[i][c];
    for (int c = 0; c < rows; ++c) f.p[j][c] -= k * f.p[i][c];
  };
  auto row_swap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(f.p[i], f.p[j]);
  };
  int t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero |entry| in the remaining block
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) { pr = i; pc = j; }
    if (pr < 0) break;
    row_swap(t, pr);
    col_swap(t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          row_addmul(i, t, a[i][t] / a[t][t]);
          if (a[i][t] != 0) {
            row_swap(t, i);
            clean = false;
          }
        }
      for (int j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          col_addmul(j, t, a[t][j] / a[t][t]);
          if (a[t][j] != 0) {
            col_swap(t, j);
            clean = false;
          }
        }
    }
    if (a[t][t] < 0) {
      for (int c = 0; c < cols; ++c) a[t][c] = -a[t][c];
      for (int c = 0; c < rows; ++c) f.p[t][c] = -f.p[t][c];
    }
    ++t;
  }
  f.rank = t;
  return f;
}

// Index of the lattice spanned by the given vectors inside its saturation
// (product of the nonzero diagonal entries).
inline Integer sublattice_index(const std::vector<IVec>& vs) {
  if (vs.empty()) return 1;
  int cols = static_cast<int>(vs[0].size());
  auto f = diagonal_form(to_zmatrix(vs), cols);
  if (f.rank < static_cast<int>(vs.size())) throw DependentVectors("vectors are linearly dependent");
  Integer r = 1;
  for (const auto& x : f.diagonal()) r *= x;
  return r;
}

// Affine lattice Z^n ∩ aff(points) with a chosen origin and basis.
struct AffineLattice {
  IVec origin;
  std::vector<IVec> basis;  // dim vectors of Z^n
  ZMatrix coord;            // n x n matrix Q: (x - p0)^T Q = (y, 0...)
  int dim = -1;
  int ambient = 0;

  static AffineLattice of(const std::vector<IVec>& pts, int ambient_dim) {
    AffineLattice L;
    L.ambient = ambient_dim;
    if (pts.empty()) return L;
    L.origin = pts[0];
    std::vector<IVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(ivec_sub(pts[i], pts[0]));
    if (diffs.empty() || ambient_dim == 0) {
      L.dim = 0;
      L.coord = identity_matrix(ambient_dim);
      return L;
    }
    auto f = diagonal_form(to_zmatrix(diffs), ambient_dim);
    L.dim = f.rank;
    for (int i = 0; i < f.rank; ++i) {
      IVec b(ambient_dim);
      for (int c = 0; c < ambient_dim; ++c) b[c] = to_i64(f.q_inv[i][c]);
      L.basis.push_back(b);
    }
    L.coord = f.q;
    return L;
  }

  // coordinates of x - scale*origin; throws if off the affine lattice
  IVec to_local(const IVec& x, std::int64_t scale = 1) const {
    IVec y(dim, 0);
    for (int j = 0; j < ambient; ++j) {
      Integer s = 0;
      for (int i = 0; i < ambient; ++i) s += Integer(x[i] - scale * origin[i]) * coord[i][j];
      if (j < dim)
        y[j] = to_i64(s);
      else if (s != 0)
        throw InvalidInput("point not in affine span");
    }
    return y;
  }
  bool contains(const IVec& x, std::int64_t scale = 1) const {
    for (int j = dim; j < ambient; ++j) {
      Integer s = 0;
      for (int i = 0; i < ambient; ++i) s += Integer(x[i] - scale * origin[i]) * coord[i][j];
      if (s != 0) return false;
    }
    return true;
  }
  IVec to_ambient(const IVec& y, std::int64_t scale = 1) const {
    IVec x = ivec_scale(origin, scale);
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i < ambient; ++i) x[i] += y[k] * basis[k][i];
    return x;
  }
};

}  // namespace mhs
