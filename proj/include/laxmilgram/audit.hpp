#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace laxmilgram {

/// Outcome of one randomized property check.
struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Largest lhs - rhs seen over all comparisons lhs <= rhs (negative when
  /// every comparison had slack).
  double worst_excess = -1e300;

  [[nodiscard]] bool passed() const noexcept { return trials > 0 && failures == 0; }
  void expect_le(double lhs, double rhs);
};

/**
 * Runs the invariant suite of every module (Hilbert-space identities,
 * fixed-point bounds, projections, Riesz map, Lax-Milgram estimates,
 * Galerkin/Cea, 1D finite elements) on randomized instances drawn from
 * `seed`. Deterministic for a given seed.
 */
std::vector<CheckResult> run_audit(std::uint64_t seed);

/// One line per check, then a summary line.
void print_audit(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace laxmilgram
