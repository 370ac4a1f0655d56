#pragma once

/**
 * @file poset.hpp
 * @brief Graded posets, Eulerian intervals, g-polynomials and their duals.
 */

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "mhs/exactalg.hpp"

namespace mhs {

// Finite ranked poset. g-polynomials of intervals are memoized per instance.
class GradedPoset {
 public:
  GradedPoset(std::vector<int> rank, std::vector<std::vector<char>> leq)
      : rank_(std::move(rank)), leq_(std::move(leq)) {}

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int i) const { return rank_[i]; }
  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  const std::vector<int>& ranks() const { return rank_; }

  std::vector<int> interval_elements(int z, int x) const {
    std::vector<int> r;
    if (!leq(z, x)) return r;
    for (int y = 0; y < size(); ++y)
      if (leq(z, y) && leq(y, x)) r.push_back(y);
    return r;
  }

  bool interval_is_eulerian(int z, int x) const {
    auto elems = interval_elements(z, x);
    for (int a : elems)
      for (int b : elems) {
        if (a == b || !leq(a, b)) continue;
        int s = 0;
        for (int y : elems)
          if (leq(a, y) && leq(y, b)) s += (rank_[y] % 2 == 0) ? 1 : -1;
        if (s != 0) return false;
      }
    return true;
  }

  // g([z,x]; t)
  IntPoly g(int z, int x) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return g_locked(z, x, false);
  }
  // g([z,x]^*; t)
  IntPoly g_dual(int z, int x) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return g_locked(z, x, true);
  }

 private:
  const IntPoly& g_locked(int z, int x, bool dual) const {
    auto& memo = dual ? memo_dual_ : memo_;
    auto key = std::make_pair(z, x);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (!leq(z, x)) throw NotComparable("interval endpoints are not comparable");
    int n = rank_[x] - rank_[z];
    IntPoly result(1);
    if (n > 2) {
      IntPoly acc;
      for (int y = 0; y < size(); ++y) {
        if (!leq(z, y) || !leq(y, x)) continue;
        if (!dual && y == x) continue;
        if (dual && y == z) continue;
        int k = dual ? rank_[y] - rank_[z] : rank_[x] - rank_[y];
        const IntPoly& sub = dual ? g_locked(y, x, true) : g_locked(z, y, false);
        acc += IntPoly::t_minus_one_pow(k) * sub;
      }
      std::vector<Integer> cs;
      for (int i = 0; 2 * i < n; ++i) cs.push_back(acc[n - i]);
      result = IntPoly(cs);
    }
    return memo.emplace(key, result).first->second;
  }

  std::vector<int> rank_;
  std::vector<std::vector<char>> leq_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::pair<int, int>, IntPoly> memo_;
  mutable std::map<std::pair<int, int>, IntPoly> memo_dual_;
};

// Eulerian poset with bottom and top elements (possibly a sub-interval of a
// larger graded poset).
struct EulerianPoset {
  std::shared_ptr<const GradedPoset> poset;
  int bottom = 0;
  int top = 0;
  bool dualized = false;

  int rank() const { return poset->rank(top) - poset->rank(bottom); }
  // elements of the interval, in the orientation of this poset
  std::vector<int> elements() const { return poset->interval_elements(bottom, top); }
  bool leq(int a, int b) const { return dualized ? poset->leq(b, a) : poset->leq(a, b); }
  int rank_of(int y) const {
    return dualized ? poset->rank(bottom) - poset->rank(y) : poset->rank(y) - poset->rank(bottom);
  }
  // the bottom/top in this poset's own orientation
  int lo() const { return dualized ? top : bottom; }
  int hi() const { return dualized ? bottom : top; }
};

inline EulerianPoset make_eulerian(std::shared_ptr<const GradedPoset> p, int bottom, int top, bool check = true) {
  if (!p->leq(bottom, top)) throw NotComparable("bottom not below top");
#ifndef NDEBUG
  if (check && !p->interval_is_eulerian(bottom, top)) throw NotEulerian("poset is not Eulerian");
#else
  (void)check;
#endif
  return EulerianPoset{std::move(p), bottom, top, false};
}

// [x, y] inside B (x <= y in B's orientation)
inline EulerianPoset interval(const EulerianPoset& b, int x, int y) {
  if (!b.leq(b.lo(), x) || !b.leq(x, y) || !b.leq(y, b.hi())) throw NotComparable("not an interval of B");
  EulerianPoset r = b;
  if (b.dualized) {
    r.bottom = y;
    r.top = x;
  } else {
    r.bottom = x;
    r.top = y;
  }
  return r;
}

inline EulerianPoset dual(const EulerianPoset& b) {
  EulerianPoset r = b;
  r.dualized = !b.dualized;
  return r;
}

inline IntPoly g_polynomial(const EulerianPoset& b) {
  return b.dualized ? b.poset->g_dual(b.bottom, b.top) : b.poset->g(b.bottom, b.top);
}

// Σ_x (-1)^{ρ(x)} g([0̂,x]) g([x,1̂]^*) for the poset and its dual; both vanish
// for Eulerian posets of positive rank.
inline std::pair<IntPoly, IntPoly> stanley_inversion_residual(const EulerianPoset& b) {
  IntPoly r1, r2;
  for (int x : b.elements()) {
    EulerianPoset lower = interval(b, b.lo(), x), upper = interval(b, x, b.hi());
    IntPoly term1 = g_polynomial(lower) * g_polynomial(dual(upper));
    IntPoly term2 = g_polynomial(dual(lower)) * g_polynomial(upper);
    if (b.rank_of(x) % 2 != 0) {
      term1 = -term1;
      term2 = -term2;
    }
    r1 += term1;
    r2 += term2;
  }
  return {r1, r2};
}

// Boolean lattice of subsets of an m-element set (rank m).
inline EulerianPoset boolean_lattice(int m) {
  int n = 1 << m;
  std::vector<int> rank(n);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    rank[a] = __builtin_popcount(a);
    for (int b = 0; b < n; ++b) leq[a][b] = ((a & b) == a);
  }
  return make_eulerian(std::make_shared<GradedPoset>(rank, leq), 0, n - 1);
}

}  // namespace mhs
