#pragma once

// Brute-force oracles independent of the hull and subdivision code.

#include <optional>
#include <vector>

#include "mhs/exactalg.hpp"
#include "mhs/linalg.hpp"

namespace oracle {

using mhs::GroupRingElement;
using mhs::Integer;
using mhs::IVec;
using mhs::Rational;

// barycentric coordinates of y in the simplex with vertices s (full-dimensional)
inline std::optional<std::vector<Rational>> barycentric(const std::vector<IVec>& s, const std::vector<Rational>& y) {
  int d = static_cast<int>(y.size());
  // rows: coordinates and the sum constraint
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(d + 2));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c <= d; ++c) a[r][c] = s[c][r];
    a[r][d + 1] = y[r];
  }
  for (int c = 0; c <= d; ++c) a[d][c] = 1;
  a[d][d + 1] = 1;
  for (int col = 0; col <= d; ++col) {
    int piv = -1;
    for (int r = col; r <= d; ++r)
      if (a[r][col] != 0) piv = r;
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    for (int r = 0; r <= d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (int c = col; c <= d + 1; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> lam(d + 1);
  for (int i = 0; i <= d; ++i) lam[i] = a[i][d + 1] / a[i][i];
  return lam;
}

// min over support simplices containing y of the interpolated height
inline std::optional<Rational> lower_envelope(const std::vector<IVec>& pts, const std::vector<Integer>& h,
                                              const std::vector<Rational>& y) {
  int d = static_cast<int>(y.size()), k = static_cast<int>(pts.size());
  std::optional<Rational> best;
  std::vector<int> idx(d + 1);
  for (int i = 0; i <= d; ++i) idx[i] = i;
  if (k < d + 1) return best;
  while (true) {
    std::vector<IVec> s;
    for (int i : idx) s.push_back(pts[i]);
    if (auto lam = barycentric(s, y)) {
      bool inside = std::all_of(lam->begin(), lam->end(), [](const Rational& x) { return x >= 0; });
      if (inside) {
        Rational v = 0;
        for (int i = 0; i <= d; ++i) v += (*lam)[i] * Rational(h[idx[i]]);
        if (!best || v < *best) best = v;
      }
    }
    int i = d;
    while (i >= 0 && idx[i] == k - d - 1 + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

// Σ_{v ∈ mP} [m ν(v/m)] (or the conjugate sum over the interior) by scanning a box
inline GroupRingElement weighted_count(const std::vector<IVec>& pts, const std::vector<Integer>& h, std::int64_t m,
                                       bool interior = false) {
  if (m == 0) return GroupRingElement(1);
  int d = static_cast<int>(pts[0].size());
  IVec lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = hi[i] = pts[0][i];
    for (const auto& p : pts) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
    lo[i] = lo[i] * m - 1;
    hi[i] = hi[i] * m + 1;
  }
  GroupRingElement r;
  IVec x = lo;
  while (true) {
    std::vector<Rational> y(d);
    for (int i = 0; i < d; ++i) y[i] = Rational(x[i]) / m;
    if (auto v = lower_envelope(pts, h, y)) {
      bool keep = true;
      if (interior) {
        // interior iff a small step in every coordinate direction stays inside
        for (int i = 0; i < d && keep; ++i)
          for (int sgn : {-1, 1}) {
            auto z = y;
            z[i] += Rational(sgn, 1000 * m);
            if (!lower_envelope(pts, h, z)) keep = false;
          }
      }
      if (keep) {
        auto c = mhs::TorsionClass::of(*v * m);
        r += GroupRingElement(interior ? -c : c);
      }
    }
    int k = 0;
    while (k < d && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == d) break;
    ++x[k];
  }
  return r;
}

}  // namespace oracle
