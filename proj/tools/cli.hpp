#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace laxmilgram::cli {

enum class Command { check, solve, galerkin, riesz, project, poisson };

struct RunConfig {
  Command command = Command::check;
  /// stdin / stdout when empty.
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::optional<double> rho;
  std::size_t cea_candidates = 20;
  std::string case_id = "poisson-sine";
  std::vector<std::size_t> levels = {8, 16, 32, 64};
  double beta = 0.0;
  double c = 0.0;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_property_failure = 1;
inline constexpr int exit_bad_input = 2;

/// Executes one command. Diagnostics go to `err`; returns the exit code.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses "8,16,32". Throws Error(InvalidArgument).
std::vector<std::size_t> parse_levels(const std::string& text);

}  // namespace laxmilgram::cli
