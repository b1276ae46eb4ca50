#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tropabel/cli.hpp"

int main(int argc, char** argv) {
  using namespace tropabel;
  CLI::App app{"Tropical and non-Archimedean calculus of bundles on abelian varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string scenario_file, out_file;
  cli::Invocation inv;
  std::uint64_t seed = 0;
  app.add_option("--scenario", scenario_file, "scenario JSON file")->required();
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--bound", inv.bound, "subgroup enumeration bound")->check(CLI::PositiveNumber);
  app.add_option("--out", out_file, "write the report here instead of stdout");

  app.add_subcommand("ns-analyze", "lattice invariants of the NS class");
  auto* bundle = app.add_subcommand("bundle", "tropical bundle operations");
  bundle->add_option("op", inv.op)
      ->required()
      ->check(CLI::IsMember({"sum", "tensor", "pullback", "pushforward", "translate", "slope", "equiv", "moduli-point"}));
  bundle->add_option("--lhs", inv.lhs, "first bundle name");
  bundle->add_option("--rhs", inv.rhs, "second bundle name");
  auto* rep = app.add_subcommand("rep", "tropical representation operations");
  rep->add_option("op", inv.op)->required()->check(CLI::IsMember({"decompose", "canonical", "eta", "stratum"}));
  rep->add_option("--rep", inv.rep, "representation name");
  auto* na = app.add_subcommand("na", "non-Archimedean side");
  na->add_option("op", inv.op)->required()->check(CLI::IsMember({"trop-line", "trop-simple", "trop-rep", "verify-square"}));
  na->add_option("--bundle", inv.bundle, "analytic line bundle name");
  na->add_option("--rep", inv.rep, "analytic representation name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  inv.command = app.get_subcommands().front()->get_name();
  if (*seed_opt) inv.seed = seed;

  try {
    cli::Scenario scenario = cli::load_scenario(scenario_file);
    if (!*seed_opt && scenario.parameters.contains("seed"))
      inv.seed = io::decode_integer(scenario.parameters["seed"], "$.parameters.seed").convert_to<std::uint64_t>();
    if (scenario.parameters.contains("bound") && app.count("--bound") == 0)
      inv.bound = io::decode_integer(scenario.parameters["bound"], "$.parameters.bound").convert_to<long long>();
    std::string report = cli::render(cli::execute(scenario, inv));
    if (out_file.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(out_file, std::ios::binary);
      if (!out) {
        std::cerr << "error: Validation: cannot write " << out_file << "\n";
        return 2;
      }
      out << report;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code(e.kind());
  }
  return 0;
}
