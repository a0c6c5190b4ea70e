// hypaut: decide hyperbolicity-type properties of graph products, Coxeter
// groups and their automorphism groups from a graph document.
//
// Exit status: 0 decided (Yes/No), 2 some verdict Unknown, 1 error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "hypaut/hypaut.hpp"

namespace {

std::vector<std::string> flatten(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    for (auto& p : hypaut::split_list(r)) out.push_back(std::move(p));
  }
  return out;
}

int emit(const hypaut::CommandOutput& out) {
  std::cout << out.text;
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide hyperbolicity-type properties of graph products, Coxeter groups and their automorphism groups"};
  app.set_version_flag("--version", std::string(hypaut::kToolVersion));
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> properties;

  auto* decide = app.add_subcommand("decide", "decide properties of a graph document, print a JSON report");
  hypaut::DecideOptions dopt;
  bool assume_finite = false;
  bool assume_infinite = false;
  double deadline = 0;
  decide->add_option("file", file, "document (.json, or .dot/.gv)")->required();
  decide->add_option("--property,-p", properties,
                     "comma-separated: hyperbolic, virtually-free, out-finite, fr, aut-hyperbolic, "
                     "aut-virtually-free, aut-fa (graph products only), or all")
      ->required();
  auto* af = decide->add_flag("--assume-out-finite", assume_finite, "assert that Out(W) is finite");
  decide->add_flag("--assume-out-infinite", assume_infinite, "assert that Out(W) is infinite")->excludes(af);
  auto* dl = decide->add_option("--deadline", deadline, "give up after this many seconds");
  decide->add_flag("--pattern-mode", dopt.pattern_mode, "lift the vertex cap of the Coxeter subset search");

  auto* oracle = app.add_subcommand("oracle", "compare fast paths with brute force on a small document");
  hypaut::OracleOptions oopt;
  oracle->add_option("file", file, "document (.json, or .dot/.gv)")->required();
  oracle->add_option("--property,-p", properties,
                     "comma-separated: sil, chordal, c4, cliques, euclidean, commuting-pair (Coxeter only), or all")
      ->required();
  oracle->add_option("--max-vertices", oopt.max_vertices, "vertex cap for brute force")
      ->check(CLI::Range(std::size_t{1}, hypaut::kMaxOracleCap));

  auto* census = app.add_subcommand("census", "tabulate properties over seeded random graphs");
  hypaut::CensusOptions copt;
  std::string model = "tree";
  census->add_option("--model", model, "tree or gnp")->check(CLI::IsMember({"tree", "gnp"}));
  census->add_option("--n", copt.n, "vertices per graph")->check(CLI::Range(std::size_t{0}, std::size_t{4096}));
  census->add_option("--count", copt.count, "number of graphs");
  census->add_option("--seed", copt.seed, "random seed");
  census->add_option("--p", copt.p, "edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  census->add_option("--property", properties, "graph-product properties to tally, every vertex group Z/2");

  auto* zz = app.add_subcommand("zz", "build the commuting pair of automorphisms from a SIL and check it");
  std::size_t iterations = 25;
  zz->add_option("file", file, "graph-product document")->required();
  zz->add_option("--iterations,-k", iterations, "number of iterates K")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decide) {
      dopt.properties = flatten(properties);
      if (assume_finite) dopt.assumptions.out_w_finite = true;
      if (assume_infinite) dopt.assumptions.out_w_finite = false;
      if (*dl) dopt.deadline_seconds = deadline;
      return emit(hypaut::decide_command(hypaut::load_document(file), dopt));
    }
    if (*oracle) {
      oopt.properties = flatten(properties);
      return emit(hypaut::oracle_command(hypaut::load_document(file), oopt));
    }
    if (*census) {
      copt.model = hypaut::parse_model(model);
      copt.properties = flatten(properties);
      return emit(hypaut::census_command(copt));
    }
    return emit(hypaut::zz_command(hypaut::load_document(file), iterations));
  } catch (const std::exception& e) {
    std::cerr << "hypaut: error: " << e.what() << "\n";
    return hypaut::exit_status::kError;
  }
}
