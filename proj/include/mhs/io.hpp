#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings of inputs (polytopes with heights, polynomial
 *        supports) and results (group ring elements, polynomials, Jordan
 *        spectra, cells, motivic terms).
 */

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mhs/monodromy.hpp"
#include "mhs/pretty.hpp"

namespace mhs {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Output

inline Json integer_json(const Integer& x) {
  if (x <= Integer(INT64_MAX) && x >= Integer(INT64_MIN)) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

inline Json rational_json(const Rational& q) {
  if (denominator_of(q) == 1) return integer_json(numerator_of(q));
  return Json{{"num", integer_json(numerator_of(q))}, {"den", integer_json(denominator_of(q))}};
}

inline Json class_json(const TorsionClass& c) { return Json{{"num", c.num()}, {"den", c.den()}}; }

inline Json group_ring_json(const GroupRingElement& x) {
  Json a = Json::array();
  for (const auto& [c, n] : x.terms()) a.push_back(Json{{"class", class_json(c)}, {"coeff", integer_json(n)}});
  return a;
}

inline Json polynomial_json(const WPolynomial& p_in) {
  WPolynomial p = p_in.compact();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coeff", group_ring_json(c)}});
  return Json{{"variables", p.variables()}, {"terms", terms}, {"pretty", to_string(p)}};
}

inline Json intpoly_json(const IntPoly& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(integer_json(p[i]));
  return Json{{"coeffs", a}, {"pretty", to_string(p)}};
}

inline Json jordan_json(const JordanSpectrum& J) {
  Json blocks = Json::array();
  for (const auto& [k, c] : J.blocks)
    blocks.push_back(Json{{"size", k.first}, {"eigenvalue", class_json(k.second)}, {"count", integer_json(c)}});
  Json r{{"blocks", blocks}};
  if (J.other_weights != 0) r["other_weights"] = integer_json(J.other_weights);
  return r;
}

inline Json points_json(const std::vector<IVec>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

// ---------------------------------------------------------------------------
// Input

namespace detail {

inline void reject_unknown(const Json& j, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw ParseError("unknown field '" + k + "'");
}

inline std::vector<IVec> read_points(const Json& j, const char* field) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string("'") + field + "' must be a non-empty array");
  std::vector<IVec> pts;
  for (const auto& p : j) {
    if (!p.is_array() || p.empty()) throw ParseError(std::string("'") + field + "' entries must be integer arrays");
    IVec v;
    for (const auto& x : p) {
      if (!x.is_number_integer()) throw ParseError(std::string("'") + field + "' entries must be integers");
      v.push_back(x.get<std::int64_t>());
    }
    if (!pts.empty() && v.size() != pts.front().size()) throw ParseError("points of different lengths");
    pts.push_back(v);
  }
  return pts;
}

}  // namespace detail

// {"points": [[...], ...], "heights": [h, ...]}; without heights ν is zero
inline ConvexGraph graph_from_json(const Json& j) {
  detail::reject_unknown(j, {"points", "heights"});
  if (!j.contains("points")) throw ParseError("missing field 'points'");
  auto pts = detail::read_points(j["points"], "points");
  int n = static_cast<int>(pts.front().size());
  auto P = LatticePolytope::hull(pts, n);
  if (!j.contains("heights")) return ConvexGraph::zero(P);
  const auto& h = j["heights"];
  if (!h.is_array() || h.size() != pts.size()) throw ParseError("'heights' must match 'points' in length");
  HeightFunction hf;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!h[i].is_number_integer()) throw ParseError("heights must be integers");
    hf.points.push_back(pts[i]);
    hf.values.push_back(Integer(h[i].get<std::int64_t>()));
  }
  return lower_hull(P, hf);
}

// {"n": 2, "monomials": [[5,0], ...]}
inline NewtonData newton_from_json(const Json& j) {
  detail::reject_unknown(j, {"n", "monomials"});
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field 'n'");
  if (!j.contains("monomials")) throw ParseError("missing field 'monomials'");
  int n = j["n"].get<int>();
  auto pts = detail::read_points(j["monomials"], "monomials");
  if (static_cast<int>(pts.front().size()) != n) throw ParseError("monomials must have length n");
  return newton_data(n, pts);
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace mhs
