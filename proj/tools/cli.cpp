#include "cli.hpp"

#include "laxmilgram/audit.hpp"
#include "laxmilgram/fem1d.hpp"
#include "laxmilgram/json_io.hpp"
#include "laxmilgram/operators.hpp"
#include "laxmilgram/projection.hpp"
#include "laxmilgram/solver.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace laxmilgram::cli {

namespace {

using io::Json;

Json read_input(const RunConfig& config, std::istream& in) {
  if (!config.input_path) return io::parse(in);
  std::ifstream file(*config.input_path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + *config.input_path);
  return io::parse(file);
}

/// Writes to the output path when given, else to `out`.
template <typename Writer>
void emit(const RunConfig& config, std::ostream& out, Writer&& writer) {
  if (!config.output_path) {
    writer(out);
    return;
  }
  std::ofstream file(*config.output_path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + *config.output_path);
  writer(file);
}

int run_check(const RunConfig& config, std::ostream& out) {
  const auto results = run_audit(config.seed);
  emit(config, out, [&](std::ostream& os) { print_audit(os, results); });
  for (const auto& r : results) {
    if (!r.passed()) return exit_property_failure;
  }
  return exit_ok;
}

int run_solve(const RunConfig& config, std::istream& in, std::ostream& out) {
  const VariationalProblem problem = io::problem_from_json(read_input(config, in));
  SolveOptions options;
  options.tol = config.tol;
  options.rho = config.rho;
  const SolveReport report = solve(problem, options);
  Json j = io::report_to_json(report);
  j["alpha"] = problem.constants.coercivity_alpha;
  j["C"] = problem.constants.continuity_C;
  emit(config, out, [&](std::ostream& os) { io::write(os, j); });
  return report.estimate_lhs <= report.estimate_rhs * (1.0 + 1e-10) ? exit_ok
                                                                     : exit_property_failure;
}

int run_galerkin(const RunConfig& config, std::istream& in, std::ostream& out) {
  const Json input = read_input(config, in);
  const VariationalProblem problem = io::problem_from_json(input);
  const Subspace sub = io::subspace_from_json(problem.space, input);
  GalerkinOptions options;
  options.seed = config.seed;
  options.cea_candidates = config.cea_candidates;
  options.tol = std::min(config.tol, 1e-12);
  const GalerkinReport report = galerkin_solve(problem, sub, options);
  emit(config, out, [&](std::ostream& os) { io::write(os, io::report_to_json(report)); });
  const bool ok = report.orthogonality_residual <= 1e-10 && report.cea_holds();
  return ok ? exit_ok : exit_property_failure;
}

int run_riesz(const RunConfig& config, std::istream& in, std::ostream& out) {
  const Json input = read_input(config, in);
  const HilbertSpace space = io::space_from_json(input);
  const Json& f = input.contains("f") ? input.at("f") : input.value("covector", Json());
  const LinearForm form{io::vector_from_json(f, "f")};
  const Vector direct = riesz(space, form);
  const Vector constructive = riesz_constructive(space, form);
  const double dual = dual_norm(space, form);
  const double gap = riesz_isometry_gap(space, form);
  const Json j = {{"riesz", io::to_json(direct)},
                  {"riesz_constructive", io::to_json(constructive)},
                  {"dual_norm", dual},
                  {"norm", space.norm(direct)},
                  {"isometry_gap", gap},
                  {"route_difference", space.distance(direct, constructive)}};
  emit(config, out, [&](std::ostream& os) { io::write(os, j); });
  const double scale = problem_scale({dual});
  const bool ok = gap <= 1e-11 * scale && space.distance(direct, constructive) <= 1e-10 * scale;
  return ok ? exit_ok : exit_property_failure;
}

int run_project(const RunConfig& config, std::istream& in, std::ostream& out) {
  const Json input = read_input(config, in);
  const HilbertSpace space = io::space_from_json(input);
  const Subspace sub = io::subspace_from_json(space, input);
  const Vector u = io::vector_from_json(input.value("u", Json()), "u");
  space.check(u, "u");
  const auto [v, w] = decompose(sub, u);
  const MinSeqReport minseq = project_minseq(sub, u, std::max(config.tol, 1e-12));
  const double agreement = space.distance(minseq.limit, v);
  const Json j = {{"projection", io::to_json(v)},
                  {"complement", io::to_json(w)},
                  {"distance", space.norm(w)},
                  {"minseq",
                   {{"limit", io::to_json(minseq.limit)},
                    {"delta", minseq.delta},
                    {"steps", minseq.iterates.size() - 1},
                    {"agreement", agreement}}}};
  emit(config, out, [&](std::ostream& os) { io::write(os, j); });
  return agreement <= 1e-6 ? exit_ok : exit_property_failure;
}

int run_poisson(const RunConfig& config, std::ostream& out) {
  const auto table = fem1d::convergence_study(config.case_id, config.levels, config.beta,
                                              config.c, std::min(config.tol, 1e-12));
  emit(config, out, [&](std::ostream& os) { fem1d::write_csv(os, table); });
  return exit_ok;
}

}  // namespace

std::vector<std::size_t> parse_levels(const std::string& text) {
  std::vector<std::size_t> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || value == 0) {
      throw Error(ErrorCode::InvalidArgument, "bad level '" + item + "' in --levels");
    }
    levels.push_back(static_cast<std::size_t>(value));
  }
  if (levels.empty()) throw Error(ErrorCode::InvalidArgument, "--levels is empty");
  return levels;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!(config.tol > 0.0)) {
    err << "error: --tol must be positive\n";
    return exit_bad_input;
  }
  try {
    switch (config.command) {
      case Command::check: return run_check(config, out);
      case Command::solve: return run_solve(config, in, out);
      case Command::galerkin: return run_galerkin(config, in, out);
      case Command::riesz: return run_riesz(config, in, out);
      case Command::project: return run_project(config, in, out);
      case Command::poisson: return run_poisson(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool numerical = e.code() == ErrorCode::MaxIterationsExceeded ||
                           e.code() == ErrorCode::BudgetExceeded;
    return numerical ? exit_property_failure : exit_bad_input;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_bad_input;
  }
  return exit_bad_input;
}

}  // namespace laxmilgram::cli
