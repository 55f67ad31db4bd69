#include "cli.hpp"

#include "laxmilgram/error.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using laxmilgram::cli::Command;
  using laxmilgram::cli::RunConfig;

  CLI::App app{"Coercive variational problems on finite-dimensional Hilbert spaces"};
  app.require_subcommand(1);

  RunConfig config;
  std::string input;
  std::string output;
  double rho = 0.0;
  std::string levels = "8,16,32,64";

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "Input JSON (stdin when omitted)");
    sub->add_option("-o,--output", output, "Output file (stdout when omitted)");
    sub->add_option("--tol", config.tol, "Solver tolerance")->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "Run the randomized invariant suite");
  check->add_option("--seed", config.seed, "Seed of every sampling routine")->capture_default_str();
  check->add_option("-o,--output", output, "Output file (stdout when omitted)");

  auto* solve = app.add_subcommand("solve", "Solve a variational problem by contraction");
  add_io(solve);
  auto* rho_opt = solve->add_option("--rho", rho, "Step size, default alpha / C^2");

  auto* galerkin = app.add_subcommand("galerkin", "Galerkin solve with orthogonality and Cea audit");
  add_io(galerkin);
  galerkin->add_option("--seed", config.seed)->capture_default_str();
  galerkin->add_option("--cea-candidates", config.cea_candidates)->capture_default_str();

  auto* riesz = app.add_subcommand("riesz", "Riesz representative of a linear form, both routes");
  add_io(riesz);

  auto* project = app.add_subcommand("project", "Orthogonal projection onto a subspace");
  add_io(project);

  auto* poisson = app.add_subcommand("poisson", "P1 convergence table as CSV");
  poisson->add_option("--case", config.case_id, "poisson-sine | poisson-parabola")
      ->capture_default_str();
  poisson->add_option("--levels", levels, "Comma-separated cell counts")->capture_default_str();
  poisson->add_option("--beta", config.beta, "Advection coefficient")->capture_default_str();
  poisson->add_option("--c", config.c, "Reaction coefficient")->capture_default_str();
  poisson->add_option("-o,--output", output, "Output file (stdout when omitted)");
  poisson->add_option("--tol", config.tol, "Solver tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return laxmilgram::cli::exit_bad_input;
  }

  if (check->parsed()) config.command = Command::check;
  if (solve->parsed()) config.command = Command::solve;
  if (galerkin->parsed()) config.command = Command::galerkin;
  if (riesz->parsed()) config.command = Command::riesz;
  if (project->parsed()) config.command = Command::project;
  if (poisson->parsed()) config.command = Command::poisson;
  if (!input.empty()) config.input_path = input;
  if (!output.empty()) config.output_path = output;
  if (rho_opt->count() > 0) config.rho = rho;
  if (poisson->parsed()) {
    try {
      config.levels = laxmilgram::cli::parse_levels(levels);
    } catch (const laxmilgram::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return laxmilgram::cli::exit_bad_input;
    }
  }
  return laxmilgram::cli::run(config, std::cin, std::cout, std::cerr);
}
