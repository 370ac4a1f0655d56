#pragma once

/**
 * @file cli.hpp
 * @brief Job runner behind the command line tool: one function per
 *        subcommand producing a JSON document and a pretty form, error
 *        mapping to exit codes, per-instance invariant checks and the
 *        regression fixtures.
 */

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mhs/io.hpp"
#include "mhs/mixed.hpp"
#include "mhs/monodromy.hpp"
#include "mhs/wehrhart.hpp"

namespace mhs::cli {

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {
      "hstar", "local-hstar", "ehrhart", "refined-hstar", "subdivide", "g-poly", "monodromy-at-zero",
      "monodromy-at-infinity", "milnor", "motivic-fiber", "hodge-deligne", "fixtures"};
  return c;
}

struct JobSpec {
  std::string command;
  std::string input;                   // JSON text
  std::optional<std::string> heights;  // JSON text of a graph; GenericFamily override
  std::string format = "json";         // json | pretty
  bool check = false;
  std::string at = "zero";             // zero | infinity
  std::string ambient = "affine";      // torus | affine
  std::string select;                  // fixture name
};

// An ordered list of named results, each with a JSON and a one-line pretty form.
struct Report {
  std::vector<std::pair<std::string, Json>> json;
  std::vector<std::pair<std::string, std::string>> pretty;
  bool check_failed = false;

  void add(const std::string& key, Json j, std::string p) {
    json.emplace_back(key, std::move(j));
    pretty.emplace_back(key, std::move(p));
  }
  void add_json(const std::string& key, Json j) { json.emplace_back(key, std::move(j)); }
  void add_pretty(const std::string& key, std::string p) { pretty.emplace_back(key, std::move(p)); }
  std::optional<std::string> value(const std::string& key) const {
    for (const auto& [k, v] : pretty)
      if (k == key) return v;
    return std::nullopt;
  }
};

struct JobResult {
  int status = 0;
  std::string output;
};

// ---------------------------------------------------------------------------
// Formatting helpers

inline std::string rational_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

// Σ c_i m^i with rational coefficients, highest degree first
inline std::string rational_poly_string(const std::vector<Rational>& c, const std::string& var) {
  std::string s;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    Rational a = abs(c[i]);
    if (s.empty())
      s += c[i] < 0 ? "-" : "";
    else
      s += c[i] < 0 ? " - " : " + ";
    std::string coef = denominator_of(a) == 1 ? rational_string(a) : "(" + rational_string(a) + ")";
    if (i == 0)
      s += rational_string(a);
    else {
      if (a != 1) s += coef;
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

inline std::string point_string(const IVec& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

inline std::string points_string(const std::vector<IVec>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + point_string(p);
  return s.empty() ? "{}" : s;
}

inline std::string affine_string(const std::vector<Rational>& a, const Rational& b) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    s += (s.empty() ? (a[i] < 0 ? "-" : "") : (a[i] < 0 ? " - " : " + "));
    Rational x = abs(a[i]);
    if (x != 1) s += rational_string(x) + "*";
    s += "x" + std::to_string(i + 1);
  }
  if (b != 0 || s.empty()) s += s.empty() ? rational_string(b) : (b < 0 ? " - " : " + ") + rational_string(abs(b));
  return s;
}

inline Json check_json(const std::vector<std::pair<std::string, bool>>& items) {
  Json a = Json::array();
  bool ok = true;
  for (const auto& [name, pass] : items) {
    a.push_back(Json{{"name", name}, {"passed", pass}});
    ok = ok && pass;
  }
  return Json{{"passed", ok}, {"items", a}};
}

inline void add_checks(Report& r, const std::vector<std::pair<std::string, bool>>& items) {
  std::string p;
  for (const auto& [name, pass] : items) {
    p += (p.empty() ? "" : ", ") + name + (pass ? " ok" : " FAILED");
    if (!pass) r.check_failed = true;
  }
  r.add("check", check_json(items), p);
}

// ---------------------------------------------------------------------------
// Polytope commands

inline std::vector<std::pair<std::string, bool>> weighted_checks(const ConvexGraph& g) {
  auto h = weighted_h_star(g);
  return {{"reciprocity m=1", reciprocity_check(g, 1)},
          {"reciprocity m=2", reciprocity_check(g, 2)},
          {"h* via boxes", weighted_h_star_via_boxes(g) == h},
          {"h* via local h*", hstar_from_local(g) == h},
          {"h* at u=1 is the normalized volume", wp_at_one(h) == volume_formula(g)}};
}

inline Report cmd_hstar(const ConvexGraph& g, bool local) {
  Report r;
  WPolynomial h = local ? local_weighted_h_star(g) : weighted_h_star(g);
  IntPoly u = grp_forget(grp_from_wp(h));
  std::string key = local ? "local_hstar" : "hstar";
  r.add(key, polynomial_json(h), to_string(h));
  r.add(key + "_unweighted", intpoly_json(u), to_string(u, "u"));
  return r;
}

inline Report cmd_ehrhart(const ConvexGraph& g) {
  Report r;
  auto f = weighted_ehrhart_polynomial(g);
  r.add("scaled", polynomial_json(f.scaled_polynomial()), to_string(f.scaled_polynomial()));
  r.add("scale", integer_json(f.scale), f.scale.str());
  std::set<TorsionClass> classes;
  for (const auto& c : f.scaled)
    for (const auto& kv : c.terms()) classes.insert(kv.first);
  Json comps = Json::array();
  std::vector<Rational> total(f.scaled.size());
  for (const auto& a : classes) {
    std::vector<Rational> co;
    Json cj = Json::array();
    for (std::size_t i = 0; i < f.scaled.size(); ++i) {
      co.push_back(Rational(f.scaled[i].coeff(a)) / Rational(f.scale));
      total[i] += co.back();
      cj.push_back(rational_json(co.back()));
    }
    while (!co.empty() && co.back() == 0) co.pop_back();
    comps.push_back(Json{{"class", class_json(a)}, {"coeffs", cj}, {"pretty", rational_poly_string(co, "m")}});
    r.add_pretty("f" + to_string(a), rational_poly_string(co, "m"));
  }
  r.add_json("components", comps);
  Json tj = Json::array();
  for (const auto& x : total) tj.push_back(rational_json(x));
  r.add("total", Json{{"coeffs", tj}, {"pretty", rational_poly_string(total, "m")}}, rational_poly_string(total, "m"));
  return r;
}

inline Report cmd_refined(const ConvexGraph& g) {
  Report r;
  auto h = refined_h_star(g);
  r.add("refined_hstar", polynomial_json(h.poly), to_string(h.poly));
  Json t = Json::array();
  std::string p;
  for (const auto& [k, c] : h.table()) {
    auto [a, b, w] = k;
    t.push_back(Json{{"p", a}, {"q", b}, {"r", w}, {"coeff", group_ring_json(c)}});
    p += (p.empty() ? "" : "; ") + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(w) + ": " +
         to_string(c);
  }
  r.add("table", t, p.empty() ? "{}" : p);
  return r;
}

inline Report cmd_subdivide(const ConvexGraph& g) {
  Report r;
  auto maximal = g.maximal_cells();
  Json cells = Json::array();
  for (int c = 0; c < static_cast<int>(g.cells().size()); ++c) {
    const auto& cell = g.cells()[c];
    if (cell.dim < 0) continue;
    bool top = std::find(maximal.begin(), maximal.end(), c) != maximal.end();
    cells.push_back(Json{{"vertices", points_json(cell.vertices)}, {"dim", cell.dim}, {"face", cell.sigma},
                         {"maximal", top}});
    r.add_pretty("cell " + std::to_string(cell.dim), points_string(cell.vertices));
  }
  r.add_json("cells", cells);
  IntPoly l = local_h_polynomial(g, g.complex().empty_cell());
  r.add("local_h", intpoly_json(l), to_string(l));
  Json pieces = Json::array();
  for (int c : maximal) {
    auto [a, b] = canonical_affine_part(g, g.cells()[c]);
    Json aj = Json::array();
    for (const auto& x : a) aj.push_back(rational_json(x));
    pieces.push_back(Json{{"cell", points_json(g.cells()[c].vertices)}, {"linear", aj}, {"constant", rational_json(b)}});
  }
  r.add_json("pieces", pieces);
  return r;
}

inline Report cmd_gpoly(const ConvexGraph& g, bool check) {
  Report r;
  const auto& P = g.polytope();
  auto B = P.face_lattice();
  IntPoly gp = g_polynomial(B), gd = g_polynomial(dual(B));
  r.add("g", intpoly_json(gp), to_string(gp));
  r.add("g_dual", intpoly_json(gd), to_string(gd));
  if (check) {
    auto [a, b] = stanley_inversion_residual(B);
    add_checks(r, {{"Stanley inversion", a.is_zero() && b.is_zero()},
                   {"g(0) = 1", P.dim() < 0 || gp[0] == 1},
                   {"deg g <= dim/2", 2 * gp.degree() <= std::max(P.dim(), 0)}});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial commands

inline ProblemKind kind_of(const std::string& at) {
  if (at == "zero") return ProblemKind::AtZero;
  if (at == "infinity") return ProblemKind::AtInfinity;
  throw ParseError("--at must be 'zero' or 'infinity'");
}

inline void add_jordan(Report& r, const JordanSpectrum& J) {
  r.add_json("jordan", jordan_json(J));
  int top = 0;
  for (const auto& kv : J.blocks) top = std::max(top, kv.first.first);
  for (int k = 1; k <= top; ++k) r.add_pretty("J" + std::to_string(k), to_string(J.of_size(k)));
  if (J.other_weights != 0) r.add_pretty("other_weights", J.other_weights.str());
}

inline Report cmd_monodromy(const MonodromyProblem& pb, bool check) {
  Report r;
  GroupRingElement eig = eigenvalue_multiplicities(pb);
  r.add("eigenvalues", group_ring_json(eig), to_string(eig));
  auto J = jordan_blocks(pb);
  add_jordan(r, J);
  LimitMixedHodge lm = limit_mixed_hodge_affine(pb);
  r.add("limit_mixed_nontrivial", polynomial_json(lm.nontrivial), to_string(lm.nontrivial));
  r.add("limit_mixed_trivial", polynomial_json(lm.trivial), to_string(lm.trivial));
  if (pb.n >= 2) {
    auto t = vds_size_formulas(pb);
    Json vj{{"size_n", group_ring_json(t.size_n)}, {"size_n_minus_1", group_ring_json(t.size_n_minus_1)}};
    if (pb.kind != ProblemKind::AtZero) vj["trivial_size_n_minus_2"] = integer_json(t.trivial_size_n_minus_2);
    r.add_json("block_size_formulas", vj);
  }
  if (check) {
    std::vector<std::pair<std::string, bool>> items;
    items.emplace_back("eigenvalues nonnegative", eig.is_nonnegative());
    items.emplace_back("Jordan counts nonnegative", J.nonnegative());
    items.emplace_back("sum of k J_k equals the Betti number", gr_forget(J.eigenvalues()) == gr_forget(eig));
    items.emplace_back("limit mixed numbers at u=v=1", wp_at_one(lm.nontrivial) + wp_at_one(lm.trivial) == eig);
    if (pb.n >= 2) {
      auto t = vds_size_formulas(pb);
      items.emplace_back("largest blocks closed form", t.size_n == J.of_size(pb.n));
      items.emplace_back("second largest blocks closed form", t.size_n_minus_1 == J.of_size(pb.n - 1));
    }
    if (pb.kind != ProblemKind::Milnor) {
      WPolynomial E = affine_refined_hd(pb);
      GroupRingElement at1 = wp_at_one(E) - GroupRingElement(1);
      if ((pb.n - 1) % 2 != 0) at1 = GroupRingElement() - at1;
      items.emplace_back("u=v=w=1 equals the volume formula", at1 == eig);
    }
    add_checks(r, items);
  }
  return r;
}

inline Report cmd_motivic(const ConvexGraph& g, AmbientKind ambient) {
  Report r;
  auto terms = motivic_nearby_fiber_hypersurface(g, ambient);
  Json a = Json::array();
  for (const auto& t : terms) {
    Json act = Json::array();
    for (const auto& x : t.action) act.push_back(rational_json(x));
    a.push_back(Json{{"cell", points_json(t.cell)}, {"lefschetz_power", t.lefschetz_power}, {"action", act},
                     {"constant", rational_json(t.constant)}, {"sign", t.sign}});
    std::string p = std::string(t.sign < 0 ? "-" : "+") + " [V(" + points_string(t.cell) + "), nu = " +
                    affine_string(t.action, t.constant) + "]";
    if (t.lefschetz_power == 1) p += " (1 - L)";
    if (t.lefschetz_power > 1) p += " (1 - L)^" + std::to_string(t.lefschetz_power);
    r.add_pretty("term", p);
  }
  r.add_json("terms", a);
  return r;
}

inline Report cmd_hodge_deligne(const MonodromyProblem& pb, bool check) {
  Report r;
  const auto& g = pb.graph;
  bool convenient = is_convenient_polytope(g.polytope());
  WPolynomial E = convenient ? affine_refined_hd(g) : nonconvenient_refined_hd(g);
  r.add("affine", polynomial_json(E), to_string(E));
  r.add("convenient", convenient, convenient ? "true" : "false");
  bool full = g.dim() == pb.n;
  if (full) {
    WPolynomial T = refined_hd_polynomial_torus(g);
    r.add("torus", polynomial_json(T), to_string(T));
  }
  if (check) {
    std::vector<std::pair<std::string, bool>> items;
    if (full) items.emplace_back("torus strata equal the intersection route", intersection_hd_by_strata(g) == intersection_hd(g));
    if (convenient) {
      items.emplace_back("non-convenient expansion agrees", nonconvenient_refined_hd(g) == E);
      GroupRingElement at1 = wp_at_one(E) - GroupRingElement(1);
      if ((pb.n - 1) % 2 != 0) at1 = GroupRingElement() - at1;
      items.emplace_back("u=v=w=1 equals the volume formula", at1 == affine_eigenvalues(g));
    }
    add_checks(r, items);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch

inline MonodromyProblem polynomial_problem(const JobSpec& s, ProblemKind kind) {
  if (s.heights) return generic_problem(graph_from_json(parse_json(*s.heights)));
  return make_problem(newton_from_json(parse_json(s.input)), kind);
}

inline Report run_command(const JobSpec& s) {
  const auto& c = s.command;
  if (c == "hstar" || c == "local-hstar" || c == "ehrhart" || c == "refined-hstar" || c == "subdivide" ||
      c == "g-poly") {
    ConvexGraph g = graph_from_json(parse_json(s.input));
    Report r;
    if (c == "hstar" || c == "local-hstar") r = cmd_hstar(g, c == "local-hstar");
    if (c == "ehrhart") r = cmd_ehrhart(g);
    if (c == "refined-hstar") r = cmd_refined(g);
    if (c == "subdivide") r = cmd_subdivide(g);
    if (c == "g-poly") return cmd_gpoly(g, s.check);
    if (s.check) add_checks(r, weighted_checks(g));
    return r;
  }
  if (c == "monodromy-at-zero") return cmd_monodromy(polynomial_problem(s, ProblemKind::AtZero), s.check);
  if (c == "monodromy-at-infinity") return cmd_monodromy(polynomial_problem(s, ProblemKind::AtInfinity), s.check);
  if (c == "milnor") return cmd_monodromy(polynomial_problem(s, ProblemKind::Milnor), s.check);
  if (c == "motivic-fiber") {
    AmbientKind amb;
    if (s.ambient == "torus")
      amb = AmbientKind::Torus;
    else if (s.ambient == "affine")
      amb = AmbientKind::Affine;
    else
      throw ParseError("--ambient must be 'torus' or 'affine'");
    return cmd_motivic(polynomial_problem(s, kind_of(s.at)).graph, amb);
  }
  if (c == "hodge-deligne") return cmd_hodge_deligne(polynomial_problem(s, kind_of(s.at)), s.check);
  throw ParseError("unknown command '" + c + "'");
}

inline std::string render(const Report& r, const std::string& format) {
  if (format == "pretty") {
    std::string out;
    for (const auto& [k, v] : r.pretty) out += k + ": " + v + "\n";
    return out;
  }
  Json j = Json::object();
  for (const auto& [k, v] : r.json) j[k] = v;
  return j.dump(2) + "\n";
}

inline std::string render_error(const std::string& code, const std::string& detail, const std::string& format) {
  if (format == "pretty") return "error: " + code + ": " + detail + "\n";
  return Json{{"error", Json{{"code", code}, {"detail", detail}}}}.dump(2) + "\n";
}

// Runs one job, mapping failures to exit 1 (domain) and 2 (parse).
inline JobResult run_single(const JobSpec& s, Report* report = nullptr) {
  try {
    Report r = run_command(s);
    if (report) *report = r;
    return JobResult{r.check_failed ? 1 : 0, render(r, s.format)};
  } catch (const ParseError& e) {
    return JobResult{2, render_error("ParseError", e.what(), s.format)};
  } catch (const DomainError& e) {
    return JobResult{1, render_error(e.code(), e.what(), s.format)};
  }
}

// ---------------------------------------------------------------------------
// Fixtures

struct Fixture {
  std::string name;
  std::string command;
  std::string input;
  std::vector<std::pair<std::string, std::string>> expected;  // pretty key → value
  int status = 0;
  std::string at = "zero";
};

inline const std::vector<Fixture>& fixtures() {
  static const std::string hexagon =
      R"({"points": [[0,0],[1,0],[0,2],[-1,2],[-2,1],[-2,0],[0,-1]], "heights": [0,1,1,1,1,1,1]})";
  static const std::string running = R"({"n": 2, "monomials": [[5,0],[4,2],[1,5],[0,5],[1,2],[2,1]]})";
  static const std::vector<Fixture> f = {
      {"hexagon-hstar", "hstar", hexagon,
       {{"hstar", "1 + 4u + u^2 + 2u(1+u)[1/2] + u[2/3] + u^2[1/3]"}, {"hstar_unweighted", "1 + 7u + 4u^2"}}},
      {"hexagon-local-hstar", "local-hstar", hexagon,
       {{"local_hstar", "u(1 + u)(1 + 2[1/2]) + u[2/3] + u^2[1/3]"}, {"local_hstar_unweighted", "4u(1 + u)"}}},
      {"hexagon-ehrhart", "ehrhart", hexagon,
       {{"f[0]", "3m^2 + 3m + 1"},
        {"f[1/2]", "2m^2"},
        {"f[1/3]", "(1/2)m^2 - (1/2)m"},
        {"f[2/3]", "(1/2)m^2 + (1/2)m"},
        {"total", "6m^2 + 3m + 1"}}},
      {"hexagon-refined-hstar", "refined-hstar", hexagon,
       {{"refined_hstar", "1 + uvw^2(3 + w((1 + uv)(1 + 2[1/2]) + v[2/3] + u[1/3]))"}}},
      {"running-at-zero", "monodromy-at-zero", running,
       {{"J1", "14 + [1/3] + [2/3]"}, {"J2", "2"}, {"other_weights", "4"}}},
      {"running-at-infinity", "monodromy-at-infinity", running,
       {{"J1", "4 + 3[1/6] + 3[1/3] + 3[2/3] + 3[5/6] + 2[1/2] + [1/10] + [3/10] + [7/10] + [9/10]"},
        {"J2", "[1/2]"}}},
      {"running-milnor", "milnor", running, {{"J1", "2 + [1/3] + [2/3]"}}},
      {"cusp-milnor", "milnor", R"({"n": 2, "monomials": [[2,0],[0,3]]})",
       {{"eigenvalues", "[1/6] + [5/6]"}, {"J1", "[1/6] + [5/6]"}}},
      {"brieskorn-pham-235-milnor", "milnor", R"({"n": 3, "monomials": [[2,0,0],[0,3,0],[0,0,5]]})",
       {{"eigenvalues", "[1/30] + [7/30] + [11/30] + [13/30] + [17/30] + [19/30] + [23/30] + [29/30]"},
        {"J1", "[1/30] + [7/30] + [11/30] + [13/30] + [17/30] + [19/30] + [23/30] + [29/30]"}}},
      {"not-convenient", "monodromy-at-zero", R"({"n": 2, "monomials": [[2,0],[1,1]]})", {}, 1},
      {"malformed-json", "hstar", R"({"points": [[0,0],)", {}, 2},
      {"unknown-field", "hstar", R"({"points": [[0,0],[1,0]], "weights": [0,0]})", {}, 2},
  };
  return f;
}

// Values compare as polynomials when both parse, otherwise as whitespace-free text.
inline bool same_value(const std::string& a, const std::string& b) {
  auto strip = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    return s;
  };
  if (strip(a) == strip(b)) return true;
  try {
    return parse_polynomial(a) == parse_polynomial(b);
  } catch (const std::exception&) {
    return false;
  }
}

inline JobResult run_fixtures(const std::string& select, const std::string& format) {
  Json list = Json::array();
  std::string pretty;
  int passed = 0, failed = 0;
  bool found = false;
  for (const auto& fx : fixtures()) {
    if (!select.empty() && fx.name != select) continue;
    found = true;
    JobSpec s;
    s.command = fx.command;
    s.input = fx.input;
    s.at = fx.at;
    Report r;
    JobResult res = run_single(s, &r);
    Json diff = Json::array();
    if (res.status != fx.status)
      diff.push_back(Json{{"key", "status"}, {"expected", std::to_string(fx.status)}, {"actual", std::to_string(res.status)}});
    if (res.status == 0)
      for (const auto& [k, want] : fx.expected) {
        auto got = r.value(k);
        if (!got || !same_value(*got, want))
          diff.push_back(Json{{"key", k}, {"expected", want}, {"actual", got.value_or("<missing>")}});
      }
    bool ok = diff.empty();
    (ok ? passed : failed) += 1;
    Json e{{"name", fx.name}, {"command", fx.command}, {"status", ok ? "pass" : "fail"}};
    if (!ok) e["diff"] = diff;
    list.push_back(e);
    pretty += std::string(ok ? "PASS " : "FAIL ") + fx.name + "\n";
    for (const auto& d : diff)
      pretty += "  " + d["key"].get<std::string>() + ": expected " + d["expected"].get<std::string>() + ", got " +
                d["actual"].get<std::string>() + "\n";
  }
  if (!found) return JobResult{1, render_error("InvalidInput", "no fixture named '" + select + "'", format)};
  if (format == "pretty") return JobResult{failed ? 1 : 0, pretty + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n"};
  Json j{{"fixtures", list}, {"passed", passed}, {"failed", failed}};
  return JobResult{failed ? 1 : 0, j.dump(2) + "\n"};
}

inline JobResult run(const JobSpec& s) {
  if (s.format != "json" && s.format != "pretty")
    return JobResult{2, render_error("ParseError", "--format must be 'json' or 'pretty'", "json")};
  if (s.command == "fixtures") return run_fixtures(s.select, s.format);
  return run_single(s);
}

}  // namespace mhs::cli
