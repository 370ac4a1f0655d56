#pragma once

/**
 * @file pretty.hpp
 * @brief Human-readable rendering of group ring elements and polynomials,
 *        and a parser that accepts the same notation (juxtaposition for
 *        products, [k/m] for classes, parentheses or brackets for grouping).
 */

#include <cctype>
#include <sstream>
#include <string>

#include "mhs/exactalg.hpp"

namespace mhs {

inline std::string to_string(const TorsionClass& c) {
  if (c.is_zero()) return "[0]";
  return "[" + std::to_string(c.num()) + "/" + std::to_string(c.den()) + "]";
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const GroupRingElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, n] : x.terms()) {
    Integer a = abs(n);
    std::string body;
    if (c.is_zero())
      body = a.str();
    else
      body = (a == 1 ? std::string() : a.str()) + to_string(c);
    if (first)
      out += (n < 0 ? "-" : "") + body;
    else
      out += (n < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace detail {

inline std::string monomial_string(const std::vector<std::string>& vars, const std::vector<int>& e) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    s += vars[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

// integer polynomial part rendered as a signed sum
inline std::string integer_poly_string(const std::vector<std::string>& vars,
                                       const std::vector<std::pair<std::vector<int>, Integer>>& terms) {
  std::string out;
  bool first = true;
  for (const auto& [e, n] : terms) {
    std::string mono = monomial_string(vars, e);
    Integer a = abs(n);
    std::string body = mono.empty() ? a.str() : (a == 1 ? mono : a.str() + mono);
    if (first)
      out += (n < 0 ? "-" : "") + body;
    else
      out += (n < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace detail

// Terms are grouped by class: the integer part first, then each class [k/m]
// in (m,k) order, e.g. "1 + 4u + u^2 + (2u + 2u^2)[1/2] + u^2[1/3] + u[2/3]".
inline std::string to_string(const WPolynomial& p_in) {
  WPolynomial p = p_in.compact();
  if (p.is_zero()) return "0";
  const auto& vars = p.variables();
  std::map<TorsionClass, std::vector<std::pair<std::vector<int>, Integer>>> groups;
  for (const auto& [e, c] : p.terms())
    for (const auto& [cls, n] : c.terms()) groups[cls].emplace_back(e, n);
  auto order = [](const std::pair<std::vector<int>, Integer>& a, const std::pair<std::vector<int>, Integer>& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da < db;
    return a.first > b.first;
  };
  std::string out;
  bool first = true;
  for (auto& [cls, terms] : groups) {
    std::sort(terms.begin(), terms.end(), order);
    std::string piece;
    bool negative = false;
    if (cls.is_zero()) {
      // the trivial class sorts first, so this is always the leading piece
      piece = detail::integer_poly_string(vars, terms);
    } else if (terms.size() == 1) {
      const auto& [e, n] = terms[0];
      std::string mono = detail::monomial_string(vars, e);
      Integer a = abs(n);
      negative = n < 0;
      piece = (a == 1 ? std::string() : a.str()) + mono + to_string(cls);
    } else {
      piece = "(" + detail::integer_poly_string(vars, terms) + ")" + to_string(cls);
    }
    if (first) {
      out = (negative ? "-" : "") + piece;
    } else if (negative) {
      out += " - " + piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string s) : s_(std::move(s)) {}

  WPolynomial parse() {
    WPolynomial r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r.compact();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(s_.substr(start, pos_ - start));
  }
  int small_int() {
    bool neg = accept('-');
    Integer v = integer();
    if (v > 1000000) fail("exponent too large");
    int x = static_cast<int>(v);
    return neg ? -x : x;
  }
  WPolynomial expr() {
    WPolynomial r;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    WPolynomial t = term();
    r = neg ? -t : t;
    while (true) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        break;
    }
    return r;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           c == '[';
  }
  WPolynomial term() {
    WPolynomial r = factor();
    while (true) {
      if (accept('*')) {
        r *= factor();
      } else if (starts_factor()) {
        r *= factor();
      } else {
        break;
      }
    }
    return r;
  }
  WPolynomial factor() {
    WPolynomial a = atom();
    if (accept('^')) {
      int k;
      if (accept('(')) {
        k = small_int();
        if (!accept(')')) fail("expected )");
      } else {
        k = small_int();
      }
      a = a.pow(k);
    }
    return a;
  }
  bool looks_like_class() {
    std::size_t p = pos_;
    if (p < s_.size() && s_[p] == '-') ++p;
    std::size_t d0 = p;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    if (p == d0) return false;
    if (p < s_.size() && s_[p] == '/') {
      ++p;
      std::size_t d1 = p;
      while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
      if (p == d1) return false;
    }
    return p < s_.size() && s_[p] == ']';
  }
  WPolynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return WPolynomial(GroupRingElement(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return WPolynomial::var(std::string(1, c));
    }
    if (accept('(')) {
      WPolynomial r = expr();
      if (!accept(')')) fail("expected )");
      return r;
    }
    if (accept('[')) {
      skip();
      if (looks_like_class()) {
        bool neg = accept('-');
        Integer k = integer();
        Integer m = 1;
        if (accept('/')) m = integer();
        if (!accept(']')) fail("expected ]");
        if (m == 0) fail("zero denominator");
        Rational q(k, m);
        if (neg) q = -q;
        return WPolynomial(GroupRingElement(TorsionClass::of(q)));
      }
      WPolynomial r = expr();
      if (!accept(']')) fail("expected ]");
      return r;
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline WPolynomial parse_polynomial(const std::string& s) { return PolynomialParser(s).parse(); }

inline std::string to_string(const IntPoly& p, const std::string& var = "t") {
  return to_string(WPolynomial::from_intpoly(p, var));
}

inline std::string to_string(const FractionalPolynomial& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, n] : f.terms()) {
    Integer a = abs(n);
    std::string mono;
    if (e != 0) {
      mono = "t";
      if (e != 1) {
        Integer num = numerator_of(e), den = denominator_of(e);
        mono += "^" + (den == 1 ? num.str() : "{" + num.str() + "/" + den.str() + "}");
      }
    }
    std::string body = mono.empty() ? a.str() : (a == 1 ? mono : a.str() + mono);
    out += first ? (n < 0 ? "-" : "") + body : (n < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const TorsionClass& c) { return os << to_string(c); }
inline std::ostream& operator<<(std::ostream& os, const GroupRingElement& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const WPolynomial& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

}  // namespace mhs
