#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "corpus.hpp"
#include "mhs/cli.hpp"

using namespace mhs;
using cli::JobSpec;

namespace {

const std::string kHexagon =
    R"({"points": [[0,0],[1,0],[0,2],[-1,2],[-2,1],[-2,0],[0,-1]], "heights": [0,1,1,1,1,1,1]})";
const std::string kRunning = R"({"n": 2, "monomials": [[5,0],[4,2],[1,5],[0,5],[1,2],[2,1]]})";

cli::JobResult run(const std::string& command, const std::string& input, const std::string& format = "json") {
  JobSpec s;
  s.command = command;
  s.input = input;
  s.format = format;
  return cli::run(s);
}

Json graph_json(const ConvexGraph& g) {
  Json h = Json::array();
  for (const auto& v : g.heights().values) h.push_back(integer_json(v));
  return Json{{"points", points_json(g.heights().points)}, {"heights", h}};
}

// Rebuilds a polynomial from its term list, independently of the pretty form.
WPolynomial from_terms(const Json& j) {
  std::vector<std::string> vars = j["variables"];
  WPolynomial r;
  for (const auto& t : j["terms"]) {
    std::vector<int> e = t["exp"];
    GroupRingElement c;
    for (const auto& x : t["coeff"])
      c.add(TorsionClass(x["class"]["num"].get<std::int64_t>(), x["class"]["den"].get<std::int64_t>()),
            Integer(x["coeff"].get<std::int64_t>()));
    r += WPolynomial::monomial(vars, e, c);
  }
  return r.compact();
}

std::pair<int, std::string> shell(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int st = pclose(p);
  return {WEXITSTATUS(st), out};
}

}  // namespace

TEST(Cli, HexagonPrettyForm) {
  auto r = run("hstar", kHexagon, "pretty");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.output.find("hstar_unweighted: 1 + 7u + 4u^2"), std::string::npos);
  auto j = parse_json(run("hstar", kHexagon).output);
  EXPECT_EQ(parse_polynomial(j["hstar"]["pretty"]), parse_polynomial("1 + 4u + u^2 + 2u(1+u)[1/2] + u[2/3] + u^2[1/3]"));
}

TEST(Cli, CuspMilnor) {
  auto j = parse_json(run("milnor", R"({"n": 2, "monomials": [[2,0],[0,3]]})").output);
  ASSERT_EQ(j["jordan"]["blocks"].size(), 2u);
  for (const auto& b : j["jordan"]["blocks"]) {
    EXPECT_EQ(b["size"], 1);
    EXPECT_EQ(b["count"], 1);
    EXPECT_EQ(b["eigenvalue"]["den"], 6);
  }
}

TEST(Cli, ErrorsAndExitCodes) {
  auto bad = run("hstar", R"({"points": [[0,0],)");
  EXPECT_EQ(bad.status, 2);
  EXPECT_EQ(parse_json(bad.output)["error"]["code"], "ParseError");
  EXPECT_EQ(run("hstar", R"({"points": [[0,0]], "extra": 1})").status, 2);
  EXPECT_EQ(run("hstar", R"({"points": [[0,0],[1,0]], "heights": [0]})").status, 2);
  EXPECT_EQ(run("hstar", R"({"points": [[0,0],[1.5,0]]})").status, 2);
  EXPECT_EQ(run("milnor", R"({"n": 2, "monomials": [[2,0,1]]})").status, 2);
  EXPECT_EQ(run("frobnicate", kHexagon).status, 2);
  EXPECT_EQ(run("hstar", kHexagon, "xml").status, 2);

  auto nc = run("monodromy-at-zero", R"({"n": 2, "monomials": [[2,0],[1,1]]})");
  EXPECT_EQ(nc.status, 1);
  EXPECT_EQ(parse_json(nc.output)["error"]["code"], "NotConvenient");
  auto cst = run("milnor", R"({"n": 2, "monomials": [[0,0],[2,0],[0,2]]})");
  EXPECT_EQ(cst.status, 1);
  EXPECT_EQ(parse_json(cst.output)["error"]["code"], "InvalidInput");
  auto hts = run("hstar", R"({"points": [[0,0],[2,0],[1,0]], "heights": [0,0,5]})");
  EXPECT_EQ(hts.status, 0);
  auto e = run("hstar", R"({"points": [[0,0],[2,0],[0,0]], "heights": [0,0,1]})");
  EXPECT_EQ(e.status, 1);
  EXPECT_EQ(parse_json(e.output)["error"]["code"], "InvalidHeights");
  EXPECT_EQ(run("hstar", R"({"points": [[0,0],[1,0]]})", "pretty").output, "hstar: 1\nhstar_unweighted: 1\n");
}

TEST(Cli, Deterministic) {
  for (const auto& c : {"refined-hstar", "subdivide", "ehrhart"}) EXPECT_EQ(run(c, kHexagon).output, run(c, kHexagon).output);
  for (const auto& c : {"monodromy-at-infinity", "motivic-fiber", "hodge-deligne"})
    EXPECT_EQ(run(c, kRunning).output, run(c, kRunning).output);
}

TEST(Cli, ChecksPassOnCorpus) {
  for (const auto& inst : corpus::random_corpus(12)) {
    JobSpec s;
    s.command = "hstar";
    s.input = graph_json(inst.graph).dump();
    s.check = true;
    auto r = cli::run(s);
    EXPECT_EQ(r.status, 0) << inst.name << "\n" << r.output;
    EXPECT_TRUE(parse_json(r.output)["check"]["passed"].get<bool>()) << inst.name;
  }
  for (const auto& sp : corpus::convenient_corpus(6)) {
    Json in{{"n", sp.n}, {"monomials", points_json(sp.points)}};
    for (const auto& c : {"monodromy-at-zero", "monodromy-at-infinity", "milnor", "hodge-deligne"}) {
      JobSpec s;
      s.command = c;
      s.input = in.dump();
      s.check = true;
      auto r = cli::run(s);
      EXPECT_EQ(r.status, 0) << sp.name << " " << c << "\n" << r.output;
    }
  }
}

TEST(Cli, GenericFamilyHeights) {
  JobSpec s;
  s.command = "hodge-deligne";
  s.heights = R"({"points": [[0,0],[3,0],[0,3],[1,1]], "heights": [0,2,2,0]})";
  s.check = true;
  auto r = cli::run(s);
  ASSERT_EQ(r.status, 0) << r.output;
  auto j = parse_json(r.output);
  EXPECT_TRUE(j["check"]["passed"].get<bool>());
  auto g = lower_hull(LatticePolytope::hull({{0, 0}, {3, 0}, {0, 3}}, 2), {{{0, 0}, {3, 0}, {0, 3}, {1, 1}}, {0, 2, 2, 0}});
  EXPECT_EQ(from_terms(j["affine"]), affine_refined_hd(g));
  s.heights = R"({"points": [[-1,0],[1,0],[0,1]]})";
  EXPECT_EQ(cli::run(s).status, 1);
}

// Pretty output re-parses to the same polynomial as the term list.
TEST(Cli, RoundTrip) {
  for (const auto& inst : corpus::random_corpus(30)) {
    std::string in = graph_json(inst.graph).dump();
    auto h = parse_json(run("hstar", in).output)["hstar"];
    EXPECT_EQ(parse_polynomial(h["pretty"]), from_terms(h)) << inst.name;
    EXPECT_EQ(from_terms(h), weighted_h_star(inst.graph)) << inst.name;
    auto l = parse_json(run("local-hstar", in).output)["local_hstar"];
    EXPECT_EQ(parse_polynomial(l["pretty"]), from_terms(l)) << inst.name;
    auto rf = parse_json(run("refined-hstar", in).output)["refined_hstar"];
    EXPECT_EQ(parse_polynomial(rf["pretty"]), from_terms(rf)) << inst.name;
    EXPECT_EQ(from_terms(rf), refined_h_star(inst.graph).poly) << inst.name;
  }
  for (const auto& sp : corpus::convenient_corpus(8)) {
    Json in{{"n", sp.n}, {"monomials", points_json(sp.points)}};
    for (const auto& at : {"zero", "infinity"}) {
      JobSpec s;
      s.command = "hodge-deligne";
      s.input = in.dump();
      s.at = at;
      auto a = parse_json(cli::run(s).output)["affine"];
      EXPECT_EQ(parse_polynomial(a["pretty"]), from_terms(a)) << sp.name;
    }
  }
}

TEST(Cli, MotivicTerms) {
  JobSpec s;
  s.command = "motivic-fiber";
  s.input = kRunning;
  auto j = parse_json(cli::run(s).output);
  EXPECT_FALSE(j["terms"].empty());
  s.ambient = "torus";
  s.at = "infinity";
  EXPECT_EQ(cli::run(s).status, 0);
  s.ambient = "projective";
  EXPECT_EQ(cli::run(s).status, 2);
}

TEST(Fixtures, RunAll) {
  JobSpec s;
  s.command = "fixtures";
  auto r = cli::run(s);
  EXPECT_EQ(r.status, 0) << r.output;
  auto j = parse_json(r.output);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["passed"].get<std::size_t>(), cli::fixtures().size());
  for (const auto& f : j["fixtures"]) EXPECT_EQ(f["status"], "pass") << f["name"];
}

TEST(Fixtures, SelectOne) {
  JobSpec s;
  s.command = "fixtures";
  s.select = "cusp-milnor";
  auto j = parse_json(cli::run(s).output);
  ASSERT_EQ(j["fixtures"].size(), 1u);
  EXPECT_EQ(j["fixtures"][0]["name"], "cusp-milnor");
  s.select = "no-such-fixture";
  EXPECT_EQ(cli::run(s).status, 1);
  s.select.clear();
  s.format = "pretty";
  auto p = cli::run(s).output;
  EXPECT_NE(p.find("PASS hexagon-hstar"), std::string::npos);
}

TEST(Fixtures, DiffOnMismatch) {
  EXPECT_TRUE(cli::same_value("2u(1+u)[1/2]", "(2u + 2u^2)[1/2]"));
  EXPECT_FALSE(cli::same_value("1 + u", "1 + 2u"));
  EXPECT_TRUE(cli::same_value("(1/2)m^2 - (1/2)m", "(1/2)m^2 - (1/2)m"));
}

TEST(Binary, ExitCodesAndFiles) {
  std::string exe = MHS_CLI_PATH;
  std::string dir = ::testing::TempDir();
  std::ofstream(dir + "hexagon.json") << kHexagon;
  std::ofstream(dir + "bad.json") << "{\"points\": [";
  auto [st, out] = shell(exe + " hstar --input " + dir + "hexagon.json --format pretty");
  EXPECT_EQ(st, 0);
  EXPECT_NE(out.find("hstar: 1 + 4u + u^2"), std::string::npos);
  EXPECT_EQ(shell(exe + " hstar --input " + dir + "bad.json").first, 2);
  EXPECT_EQ(shell(exe + " hstar --input " + dir + "missing.json").first, 2);
  EXPECT_EQ(shell(exe + " --bogus hstar").first, 2);
  EXPECT_EQ(shell(exe + " hstar --input " + dir + "hexagon.json --output " + dir + "out.json").first, 0);
  std::ifstream f(dir + "out.json");
  std::string text((std::istreambuf_iterator<char>(f)), {});
  EXPECT_EQ(text, run("hstar", kHexagon).output);
  EXPECT_EQ(shell("echo '" + kRunning + "' | " + exe + " milnor --format pretty").first, 0);
  EXPECT_EQ(shell(exe + " fixtures").first, 0);
}
