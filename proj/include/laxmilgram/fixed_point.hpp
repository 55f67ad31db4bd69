#pragma once

#include "laxmilgram/error.hpp"
#include "laxmilgram/space.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace laxmilgram {

/// A self-map of a Hilbert space together with a claimed Lipschitz constant k.
struct ContractionMap {
  HilbertSpace space;
  std::function<Vector(const Vector&)> apply;
  double k = 0.0;
};

struct FixedPointReport {
  Vector fixed_point;
  std::size_t iterations = 0;
  /// d(x_n, x_{n+1}) for every evaluated step.
  std::vector<double> step_norms;
  /// k^p d(x_0, x_1) / (1 - k) at the returned iterate x_p.
  double a_priori_bound_at_stop = 0.0;
  /// d(x*, f(x*)).
  double residual = 0.0;
  /// True when two consecutive iterates were bitwise equal.
  bool stationary = false;
  /// x_0, x_1, ..., only when IterateOptions::record_iterates is set.
  std::vector<Vector> iterates;
};

class FixedPointBudgetExceeded : public Error {
public:
  FixedPointBudgetExceeded(const std::string& message, FixedPointReport partial)
      : Error(ErrorCode::MaxIterationsExceeded, message), partial_(std::move(partial)) {}
  [[nodiscard]] const FixedPointReport& partial() const noexcept { return partial_; }

private:
  FixedPointReport partial_;
};

struct IterateOptions {
  double tol = 1e-10;
  /// Defaults to default_max_iter(k, d(x_0, x_1), tol).
  std::optional<std::size_t> max_iter;
  bool record_iterates = false;
};

/**
 * Picard iteration x_{n+1} = f(x_n).
 *
 * Stops at x_{n+1} once d(x_n, x_{n+1}) k / (1 - k) <= tol, which bounds the
 * true error d(x_{n+1}, x*) by tol; stops at x_n immediately when the step is
 * exactly zero. Throws NotAContraction for k >= 1 and
 * FixedPointBudgetExceeded (carrying the partial report) when out of budget.
 */
FixedPointReport iterate(const ContractionMap& map, const Vector& x0,
                         const IterateOptions& options = {});

/// k^p d01 / (1 - k): bounds d(x_p, x*) for any Picard sequence of a
/// k-contraction with d(x_0, x_1) = d01. Throws InvalidContraction for k >= 1.
double a_priori_tail_bound(double k, double d01, std::size_t p);

/// 10 * ceil(log(tol (1 - k) / max(d01, tol)) / log k), clamped to [16, 1e6].
std::size_t default_max_iter(double k, double d01, double tol);

/// max over sampled pairs of d(f(x), f(x')) / d(x, x'); a lower bound on the
/// Lipschitz constant. Pairs are independent standard normal coefficient
/// vectors drawn from `seed`.
double estimate_lipschitz(const ContractionMap& map, std::size_t sample_pairs, std::uint64_t seed);

}  // namespace laxmilgram
