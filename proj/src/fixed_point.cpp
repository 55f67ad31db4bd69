#include "laxmilgram/fixed_point.hpp"

#include "laxmilgram/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace laxmilgram {

namespace {

void validate_k(double k, ErrorCode code) {
  if (!std::isfinite(k) || k < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "Lipschitz constant must be finite and nonnegative");
  }
  if (k >= 1.0) {
    std::ostringstream os;
    os << "k = " << k << " is not < 1";
    throw Error(code, os.str());
  }
}

bool bitwise_equal(const Vector& a, const Vector& b) {
  return a.size() == b.size() && std::equal(a.data(), a.data() + a.size(), b.data());
}

}  // namespace

double a_priori_tail_bound(double k, double d01, std::size_t p) {
  validate_k(k, ErrorCode::InvalidContraction);
  if (!(d01 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "d01 must be nonnegative");
  return std::pow(k, static_cast<double>(p)) * d01 / (1.0 - k);
}

std::size_t default_max_iter(double k, double d01, double tol) {
  constexpr double lo = 16.0;
  constexpr double hi = 1e6;
  if (k <= 0.0) return static_cast<std::size_t>(lo);
  const double ratio = tol * (1.0 - k) / std::max(d01, tol);
  const double count = 10.0 * std::ceil(std::log(ratio) / std::log(k));
  if (!std::isfinite(count)) return static_cast<std::size_t>(hi);
  return static_cast<std::size_t>(std::clamp(count, lo, hi));
}

FixedPointReport iterate(const ContractionMap& map, const Vector& x0,
                         const IterateOptions& options) {
  validate_k(map.k, ErrorCode::NotAContraction);
  if (!(options.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  const HilbertSpace& space = map.space;
  space.check(x0, "initial iterate");

  const double k = map.k;
  FixedPointReport report;
  std::optional<std::size_t> budget = options.max_iter;
  if (options.record_iterates) report.iterates.push_back(x0);

  Vector x = x0;
  for (;;) {
    Vector y = map.apply(x);
    space.check(y, "image of the map");
    const double step = space.distance(x, y);
    report.step_norms.push_back(step);
    ++report.iterations;
    if (!budget) budget = default_max_iter(k, step, options.tol);

    if (bitwise_equal(x, y)) {
      // x_{N+1} = x_N: the sequence is stationary at a fixed point.
      report.stationary = true;
      report.iterations -= 1;
      report.fixed_point = std::move(x);
      report.residual = 0.0;
      break;
    }
    if (options.record_iterates) report.iterates.push_back(y);
    if (step * k <= options.tol * (1.0 - k)) {
      report.fixed_point = std::move(y);
      report.residual = space.distance(report.fixed_point, map.apply(report.fixed_point));
      break;
    }
    x = std::move(y);
    if (report.iterations >= *budget) {
      report.fixed_point = x;
      report.residual = space.distance(x, map.apply(x));
      report.a_priori_bound_at_stop =
          a_priori_tail_bound(k, report.step_norms.front(), report.iterations);
      std::ostringstream os;
      os << "no fixed point within " << options.tol << " after " << report.iterations
         << " iterations (last step " << step << ")";
      throw FixedPointBudgetExceeded(os.str(), std::move(report));
    }
  }
  report.a_priori_bound_at_stop =
      a_priori_tail_bound(k, report.step_norms.front(), report.iterations);
  return report;
}

double estimate_lipschitz(const ContractionMap& map, std::size_t sample_pairs,
                          std::uint64_t seed) {
  if (sample_pairs == 0) throw Error(ErrorCode::InvalidArgument, "sample_pairs must be >= 1");
  const HilbertSpace& space = map.space;
  Rng rng(seed);
  double best = 0.0;
  for (std::size_t s = 0; s < sample_pairs; ++s) {
    int retries = 0;
    for (;;) {
      const Vector x = random_normal_vector(space.dim(), rng);
      const Vector xp = random_normal_vector(space.dim(), rng);
      const double d = space.distance(x, xp);
      if (d > 0.0) {
        best = std::max(best, space.distance(map.apply(x), map.apply(xp)) / d);
        break;
      }
      if (++retries == 100) {
        throw Error(ErrorCode::DegenerateSample, "sampled pairs kept coinciding");
      }
    }
  }
  return best;
}

}  // namespace laxmilgram
