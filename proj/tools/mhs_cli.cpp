#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "mhs/cli.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mhs::ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Ehrhart theory, limit mixed Hodge numbers and monodromy of non-degenerate polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  mhs::cli::JobSpec spec;
  std::string input_path, output_path, heights_path;
  app.add_option("--input", input_path, "input JSON file ('-' or absent reads stdin)");
  app.add_option("--output", output_path, "output file (default stdout)");
  app.add_option("--format", spec.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  app.add_flag("--check", spec.check, "run the invariant suite on this instance");

  const std::map<std::string, std::string> help = {
      {"hstar", "weighted h*-polynomial of {\"points\", \"heights\"}"},
      {"local-hstar", "local weighted h*-polynomial"},
      {"ehrhart", "weighted Ehrhart polynomial and its components"},
      {"refined-hstar", "refined limit mixed h*-polynomial and its (p,q,r) table"},
      {"subdivide", "cells of the regular subdivision"},
      {"g-poly", "g-polynomials of the face lattice and its dual"},
      {"monodromy-at-zero", "monodromy at 0 of {\"n\", \"monomials\"}"},
      {"monodromy-at-infinity", "monodromy at infinity"},
      {"milnor", "monodromy on the Milnor fiber"},
      {"motivic-fiber", "motivic nearby fiber expansion"},
      {"hodge-deligne", "equivariant refined limit Hodge-Deligne polynomial"},
      {"fixtures", "run the regression fixtures"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : mhs::cli::commands()) subs[name] = app.add_subcommand(name, help.at(name));
  for (const char* name : {"motivic-fiber", "hodge-deligne"}) {
    subs[name]->add_option("--at", spec.at, "zero or infinity")->check(CLI::IsMember({"zero", "infinity"}));
    subs[name]->add_option("--heights", heights_path, "graph JSON overriding the heights (generic family)");
  }
  for (const char* name : {"monodromy-at-zero", "monodromy-at-infinity", "milnor"})
    subs[name]->add_option("--heights", heights_path, "graph JSON overriding the heights (generic family)");
  subs["motivic-fiber"]->add_option("--ambient", spec.ambient, "torus or affine")
      ->check(CLI::IsMember({"torus", "affine"}));
  subs["fixtures"]->add_option("--select", spec.select, "run a single fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << mhs::cli::render_error("UsageError", e.what(), spec.format);
    return 2;
  }
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) spec.command = name;

  mhs::cli::JobResult res;
  try {
    if (spec.command != "fixtures") {
      if (!heights_path.empty()) {
        spec.heights = read_all(heights_path);
        if (!input_path.empty()) spec.input = read_all(input_path);
      } else {
        spec.input = read_all(input_path);
      }
    }
    res = mhs::cli::run(spec);
  } catch (const mhs::ParseError& e) {
    res = {2, mhs::cli::render_error("ParseError", e.what(), spec.format)};
  }

  if (output_path.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write '" << output_path << "'\n";
      return 2;
    }
    out << res.output;
  }
  return res.status;
}
