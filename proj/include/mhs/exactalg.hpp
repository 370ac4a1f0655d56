#pragma once

/**
 * @file exactalg.hpp
 * @brief Exact arithmetic: big integers/rationals, the group algebra Z[Q/Z]
 *        and sparse (Laurent) polynomials over it.
 */

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mhs/errors.hpp"

namespace mhs {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

// n / d for any nonzero d; the two-argument constructor rejects d < 0
inline Rational ratio(const Integer& n, const Integer& d) { return d < 0 ? Rational(Integer(-n), Integer(-d)) : Rational(n, d); }

inline std::int64_t to_i64(const Integer& x) {
  if (x > Integer(INT64_MAX) || x < Integer(INT64_MIN)) throw Overflow("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

// floor(q) for rationals
inline Integer floor_of(const Rational& q) {
  Integer n = numerator_of(q), d = denominator_of(q);
  Integer f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

// ---------------------------------------------------------------------------
// TorsionClass: [k/m] in Q/Z, 0 <= k < m, gcd(k,m) = 1 (or [0] = 0/1)

class TorsionClass {
 public:
  TorsionClass() = default;
  TorsionClass(std::int64_t k, std::int64_t m) {
    if (m == 0) throw InvalidInput("torsion class with zero denominator");
    if (m < 0) { k = -k; m = -m; }
    k %= m;
    if (k < 0) k += m;
    std::int64_t g = std::gcd(k, m);
    if (k == 0) { k_ = 0; m_ = 1; return; }
    k_ = k / g;
    m_ = m / g;
  }
  static TorsionClass of(const Rational& q) {
    Integer n = numerator_of(q), d = denominator_of(q);
    Integer r = n % d;
    if (r < 0) r += d;
    return TorsionClass(to_i64(r), to_i64(d));
  }

  std::int64_t num() const { return k_; }
  std::int64_t den() const { return m_; }
  bool is_zero() const { return k_ == 0; }
  Rational as_rational() const { return Rational(k_, m_); }
  // beta in (0,1] representing the class
  Rational beta() const { return k_ == 0 ? Rational(1) : Rational(k_, m_); }

  TorsionClass operator+(const TorsionClass& o) const {
    return TorsionClass::of(as_rational() + o.as_rational());
  }
  TorsionClass operator-() const { return TorsionClass(-k_, m_); }

  friend bool operator==(const TorsionClass& a, const TorsionClass& b) { return a.k_ == b.k_ && a.m_ == b.m_; }
  friend bool operator!=(const TorsionClass& a, const TorsionClass& b) { return !(a == b); }
  // ordering by (den, num)
  friend bool operator<(const TorsionClass& a, const TorsionClass& b) {
    return a.m_ != b.m_ ? a.m_ < b.m_ : a.k_ < b.k_;
  }

 private:
  std::int64_t k_ = 0;
  std::int64_t m_ = 1;
};

// ---------------------------------------------------------------------------
// GroupRingElement: element of Z[Q/Z]

class GroupRingElement {
 public:
  using Map = std::map<TorsionClass, Integer>;

  GroupRingElement() = default;
  GroupRingElement(const Integer& n) { add(TorsionClass(), n); }  // NOLINT
  GroupRingElement(int n) : GroupRingElement(Integer(n)) {}      // NOLINT
  GroupRingElement(const TorsionClass& c, const Integer& n = 1) { add(c, n); }

  static GroupRingElement cls(std::int64_t k, std::int64_t m, const Integer& n = 1) {
    return GroupRingElement(TorsionClass(k, m), n);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const TorsionClass& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  bool is_integer() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero()); }
  bool is_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
  }

  void add(const TorsionClass& c, const Integer& n) {
    if (n == 0) return;
    auto [it, inserted] = terms_.try_emplace(c, n);
    if (!inserted) {
      it->second += n;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [c, n] : o.terms_) add(c, n);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [c, n] : o.terms_) add(c, -n);
    return *this;
  }
  GroupRingElement& operator*=(const Integer& s) {
    if (s == 0) { terms_.clear(); return *this; }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(GroupRingElement a) { return a *= Integer(-1); }
  friend GroupRingElement operator*(GroupRingElement a, const Integer& s) { return a *= s; }
  friend GroupRingElement operator*(const Integer& s, GroupRingElement a) { return a *= s; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [c1, n1] : a.terms_)
      for (const auto& [c2, n2] : b.terms_) r.add(c1 + c2, n1 * n2);
    return r;
  }
  GroupRingElement& operator*=(const GroupRingElement& o) { return *this = *this * o; }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }
  friend bool operator<(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ < b.terms_; }

  // exact division of every coefficient by an integer
  GroupRingElement divided_by(const Integer& d) const {
    GroupRingElement r;
    for (const auto& [c, n] : terms_) {
      if (n % d != 0) throw InexactDivision("group ring coefficient not divisible");
      r.add(c, n / d);
    }
    return r;
  }

  // part supported on the trivial class / on nontrivial classes
  GroupRingElement trivial_part() const { return GroupRingElement(coeff(TorsionClass())); }
  GroupRingElement nontrivial_part() const { return *this - trivial_part(); }

 private:
  Map terms_;
};

inline GroupRingElement gr_conjugate(const GroupRingElement& x) {
  GroupRingElement r;
  for (const auto& [c, n] : x.terms()) r.add(-c, n);
  return r;
}

inline Integer gr_forget(const GroupRingElement& x) {
  Integer s = 0;
  for (const auto& kv : x.terms()) s += kv.second;
  return s;
}

// ---------------------------------------------------------------------------
// IntPoly: dense univariate integer polynomial (combinatorial invariants)

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(const Integer& c) { if (c != 0) c_.push_back(c); }  // NOLINT
  IntPoly(int c) : IntPoly(Integer(c)) {}                     // NOLINT
  IntPoly(std::initializer_list<int> cs) {
    for (int x : cs) c_.emplace_back(x);
    trim();
  }
  explicit IntPoly(std::vector<Integer> cs) : c_(std::move(cs)) { trim(); }

  static IntPoly monomial(int deg, const Integer& c = 1) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(deg + 1, Integer(0));
    p.c_[deg] = c;
    return p;
  }
  // (t - 1)^k
  static IntPoly t_minus_one_pow(int k) {
    IntPoly r(1), b{-1, 1};
    for (int i = 0; i < k; ++i) r = r * b;
    return r;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Integer operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Integer(0); }
  const std::vector<Integer>& coeffs() const { return c_; }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a) { return IntPoly() - a; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != 0)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  // t^d p(1/t); requires deg p <= d
  IntPoly reversed(int d) const {
    if (degree() > d) throw NonPolynomialResult("reversal degree below polynomial degree");
    std::vector<Integer> r(d + 1);
    for (int i = 0; i <= degree(); ++i) r[d - i] = c_[i];
    return IntPoly(std::move(r));
  }
  // exact division by (t - 1)
  IntPoly divided_by_t_minus_one() const {
    if (is_zero()) return *this;
    int n = degree();
    std::vector<Integer> q(n);
    Integer carry = 0;
    for (int i = n; i >= 1; --i) {
      carry = c_[i] + carry;
      q[i - 1] = carry;
    }
    if (c_[0] + carry != 0) throw InexactDivision("polynomial not divisible by t-1");
    return IntPoly(std::move(q));
  }
  Integer eval(const Integer& x) const {
    Integer r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
  }
  bool is_symmetric(int d) const {
    if (degree() > d) return false;
    for (int i = 0; i <= d; ++i)
      if ((*this)[i] != (*this)[d - i]) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

// ---------------------------------------------------------------------------
// WPolynomial: sparse Laurent polynomial with GroupRingElement coefficients.
// Laurent exponents are allowed as intermediates; is_polynomial() reports
// whether every exponent is non-negative.

inline int variable_rank(const std::string& name) {
  static const char* order[] = {"u", "v", "w", "t", "m", "s"};
  for (int i = 0; i < 6; ++i)
    if (name == order[i]) return i;
  return 6;
}

inline bool variable_less(const std::string& a, const std::string& b) {
  int ra = variable_rank(a), rb = variable_rank(b);
  return ra != rb ? ra < rb : a < b;
}

class WPolynomial {
 public:
  using Exponent = std::vector<int>;
  using Map = std::map<Exponent, GroupRingElement>;

  WPolynomial() = default;
  WPolynomial(const GroupRingElement& c) { add(Exponent{}, c); }  // NOLINT
  WPolynomial(const Integer& c) : WPolynomial(GroupRingElement(c)) {}  // NOLINT
  WPolynomial(int c) : WPolynomial(GroupRingElement(c)) {}  // NOLINT

  static WPolynomial var(const std::string& name, int power = 1) {
    WPolynomial p;
    p.vars_ = {name};
    p.add(Exponent{power}, GroupRingElement(1));
    return p;
  }
  static WPolynomial monomial(std::vector<std::string> vars, Exponent e, const GroupRingElement& c) {
    WPolynomial p;
    std::vector<std::size_t> idx(vars.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return variable_less(vars[a], vars[b]); });
    Exponent se;
    for (auto i : idx) {
      p.vars_.push_back(vars[i]);
      se.push_back(e[i]);
    }
    p.add(se, c);
    return p;
  }
  // Univariate embedding of an integer polynomial.
  static WPolynomial from_intpoly(const IntPoly& q, const std::string& name) {
    WPolynomial p;
    p.vars_ = {name};
    for (int i = 0; i <= q.degree(); ++i) p.add(Exponent{i}, GroupRingElement(q[i]));
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  // coefficient of a monomial given as {variable -> exponent}
  GroupRingElement coeff(const std::map<std::string, int>& mono) const {
    Exponent e(vars_.size(), 0);
    for (const auto& [name, k] : mono) {
      int i = var_index(name);
      if (i < 0) {
        if (k != 0) return GroupRingElement();
        continue;
      }
      e[i] = k;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? GroupRingElement() : it->second;
  }
  GroupRingElement coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GroupRingElement() : it->second;
  }
  GroupRingElement constant_term() const { return coeff(std::map<std::string, int>{}); }

  bool is_polynomial() const {
    for (const auto& kv : terms_)
      for (int x : kv.first)
        if (x < 0) return false;
    return true;
  }
  int degree_in(const std::string& name) const {
    int i = var_index(name);
    int d = terms_.empty() ? -1 : 0;
    if (i < 0) return d;
    d = INT32_MIN;
    for (const auto& kv : terms_) d = std::max(d, kv.first[i]);
    return terms_.empty() ? -1 : d;
  }
  int min_degree_in(const std::string& name) const {
    int i = var_index(name);
    if (i < 0 || terms_.empty()) return 0;
    int d = INT32_MAX;
    for (const auto& kv : terms_) d = std::min(d, kv.first[i]);
    return d;
  }
  // coefficient of name^k as a polynomial in the remaining variables (variable kept with exponent 0)
  WPolynomial coefficient_of(const std::string& name, int k) const {
    int i = var_index(name);
    WPolynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      int ek = i < 0 ? 0 : e[i];
      if (ek != k) continue;
      Exponent f = e;
      if (i >= 0) f[i] = 0;
      r.add(f, c);
    }
    return r.compact();
  }

  // drop variables that never occur with a nonzero exponent
  WPolynomial compact() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& kv : terms_)
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (kv.first[i] != 0) used[i] = true;
    WPolynomial r;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (used[i]) r.vars_.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
      Exponent f;
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) f.push_back(e[i]);
      r.add(f, c);
    }
    return r;
  }

  WPolynomial with_variables(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      if (it == target.end()) throw InvalidInput("variable missing from target list");
      pos[i] = static_cast<int>(it - target.begin());
    }
    WPolynomial r;
    r.vars_ = target;
    for (const auto& [e, c] : terms_) {
      Exponent f(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
      r.add(f, c);
    }
    return r;
  }

  WPolynomial& operator+=(const WPolynomial& o) { return combine(o, 1); }
  WPolynomial& operator-=(const WPolynomial& o) { return combine(o, -1); }
  friend WPolynomial operator+(WPolynomial a, const WPolynomial& b) { return a += b; }
  friend WPolynomial operator-(WPolynomial a, const WPolynomial& b) { return a -= b; }
  friend WPolynomial operator-(const WPolynomial& a) { return WPolynomial() - a; }
  friend WPolynomial operator*(const WPolynomial& a, const WPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return WPolynomial();
    auto vars = merged(a.vars_, b.vars_);
    WPolynomial x = a.with_variables(vars), y = b.with_variables(vars);
    WPolynomial r;
    r.vars_ = vars;
    for (const auto& [e1, c1] : x.terms_)
      for (const auto& [e2, c2] : y.terms_) {
        Exponent e(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) e[i] = e1[i] + e2[i];
        r.add(e, c1 * c2);
      }
    return r;
  }
  WPolynomial& operator*=(const WPolynomial& o) { return *this = *this * o; }
  friend WPolynomial operator*(const GroupRingElement& s, const WPolynomial& p) {
    WPolynomial r;
    r.vars_ = p.vars_;
    for (const auto& [e, c] : p.terms_) r.add(e, s * c);
    return r;
  }

  WPolynomial pow(int k) const {
    if (k < 0) {
      if (terms_.size() != 1 || terms_.begin()->second != GroupRingElement(1))
        throw NonPolynomialResult("negative power of a non-monomial");
      WPolynomial r;
      r.vars_ = vars_;
      Exponent e = terms_.begin()->first;
      for (int& x : e) x *= k;
      r.add(e, GroupRingElement(1));
      return r;
    }
    WPolynomial r(1), b = *this;
    while (k > 0) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  friend bool operator==(const WPolynomial& a, const WPolynomial& b) {
    WPolynomial x = a.compact(), y = b.compact();
    return x.vars_ == y.vars_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const WPolynomial& a, const WPolynomial& b) { return !(a == b); }

  // coefficient-wise map
  template <class F>
  WPolynomial map_coeffs(F f) const {
    WPolynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) r.add(e, f(c));
    return r;
  }

  // divide by a monomial with unit coefficient, e.g. uvw^2
  WPolynomial divided_by_monomial(const std::map<std::string, int>& mono) const {
    std::vector<std::string> names = vars_;
    for (const auto& kv : mono)
      if (var_index(kv.first) < 0) names.push_back(kv.first);
    std::sort(names.begin(), names.end(), variable_less);
    WPolynomial x = with_variables(names), r;
    r.vars_ = names;
    for (const auto& [e, c] : x.terms_) {
      Exponent f = e;
      for (const auto& [name, k] : mono) f[x.var_index(name)] -= k;
      r.add(f, c);
    }
    return r.compact();
  }

  void add(const Exponent& e, const GroupRingElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> r = a;
    for (const auto& x : b)
      if (std::find(r.begin(), r.end(), x) == r.end()) r.push_back(x);
    std::sort(r.begin(), r.end(), variable_less);
    return r;
  }

 private:
  WPolynomial& combine(const WPolynomial& o, int sign) {
    if (o.is_zero()) return *this;
    auto vars = merged(vars_, o.vars_);
    if (vars != vars_) *this = with_variables(vars);
    WPolynomial y = o.with_variables(vars);
    for (const auto& [e, c] : y.terms_) add(e, sign > 0 ? c : -c);
    return *this;
  }

  std::vector<std::string> vars_;
  Map terms_;
};

inline WPolynomial wp_conjugate(const WPolynomial& p) { return p.map_coeffs(gr_conjugate); }
inline WPolynomial wp_forget(const WPolynomial& p) {
  return p.map_coeffs([](const GroupRingElement& c) { return GroupRingElement(gr_forget(c)); });
}

// Substitute variables by (Laurent) polynomials. Variables not mentioned are kept.
// Throws NonPolynomialResult if the expanded result has a negative exponent.
inline WPolynomial wp_substitute_laurent(const WPolynomial& p, const std::map<std::string, WPolynomial>& assignment) {
  WPolynomial result;
  const auto& vars = p.variables();
  // cache powers
  std::vector<std::map<int, WPolynomial>> powers(vars.size());
  for (const auto& [e, c] : p.terms()) {
    WPolynomial term(c);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = assignment.find(vars[i]);
      WPolynomial base = it == assignment.end() ? WPolynomial::var(vars[i]) : it->second;
      auto pit = powers[i].find(e[i]);
      if (pit == powers[i].end()) pit = powers[i].emplace(e[i], base.pow(e[i])).first;
      term *= pit->second;
    }
    result += term;
  }
  return result.compact();
}

inline WPolynomial wp_substitute(const WPolynomial& p, const std::map<std::string, WPolynomial>& assignment) {
  if (!p.is_polynomial()) throw NonPolynomialResult("input is not a polynomial");
  WPolynomial r = wp_substitute_laurent(p, assignment);
  if (!r.is_polynomial()) throw NonPolynomialResult("substitution leaves a negative exponent");
  return r;
}

inline WPolynomial wp_var(const std::string& name, int power = 1) { return WPolynomial::var(name, power); }

// Evaluate every variable at 1.
inline GroupRingElement wp_at_one(const WPolynomial& p) {
  GroupRingElement s;
  for (const auto& kv : p.terms()) s += kv.second;
  return s;
}

// Univariate coefficient list (index = exponent) of a polynomial in one variable.
inline std::vector<GroupRingElement> wp_univariate_coeffs(const WPolynomial& p, const std::string& name) {
  WPolynomial q = p.compact();
  if (q.variables().size() > 1 || (q.variables().size() == 1 && q.variables()[0] != name))
    throw InvalidInput("expected a polynomial in " + name);
  if (!q.is_polynomial()) throw NonPolynomialResult("negative exponent");
  std::vector<GroupRingElement> r;
  for (const auto& [e, c] : q.terms()) {
    int k = e.empty() ? 0 : e[0];
    if (static_cast<int>(r.size()) <= k) r.resize(k + 1);
    r[k] += c;
  }
  return r;
}

inline WPolynomial wp_from_coeffs(const std::vector<GroupRingElement>& cs, const std::string& name) {
  WPolynomial p;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) p += WPolynomial::monomial({name}, {static_cast<int>(i)}, cs[i]);
  return p;
}

// ---------------------------------------------------------------------------
// FractionalPolynomial: Z-combination of t^q with rational q >= 0

class FractionalPolynomial {
 public:
  using Map = std::map<Rational, Integer>;
  FractionalPolynomial() = default;
  void add(const Rational& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  const Map& terms() const { return terms_; }
  friend bool operator==(const FractionalPolynomial& a, const FractionalPolynomial& b) { return a.terms_ == b.terms_; }
  // t^d f(1/t)
  FractionalPolynomial reflected(const Rational& d) const {
    FractionalPolynomial r;
    for (const auto& [e, c] : terms_) r.add(d - e, c);
    return r;
  }

 private:
  Map terms_;
};

// u^p [beta] (beta in (0,1]) -> t^{p - 1 + beta}; the constant 1 stays 1.
inline FractionalPolynomial fp_from_weighted_hstar(const WPolynomial& h) {
  auto cs = wp_univariate_coeffs(h, "u");
  FractionalPolynomial f;
  for (std::size_t p = 0; p < cs.size(); ++p)
    for (const auto& [c, n] : cs[p].terms()) {
      if (p == 0) {
        if (!c.is_zero()) throw InvalidInput("constant term of a weighted h* must be an integer");
        f.add(Rational(0), n);
        continue;
      }
      f.add(Rational(static_cast<long long>(p) - 1) + c.beta(), n);
    }
  return f;
}

}  // namespace mhs
