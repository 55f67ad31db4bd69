#include "laxmilgram/solver.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace laxmilgram {

namespace {

double estimate_rhs(const VariationalProblem& problem) {
  return dual_norm(problem.space, problem.f) / problem.constants.coercivity_alpha;
}

}  // namespace

VariationalProblem make_problem(HilbertSpace space, BilinearForm a, LinearForm f,
                                std::optional<double> alpha, std::optional<double> continuity) {
  require_dim(static_cast<std::size_t>(a.matrix.rows()), static_cast<std::size_t>(space.dim()),
              "bilinear form rows");
  require_dim(static_cast<std::size_t>(a.matrix.cols()), static_cast<std::size_t>(space.dim()),
              "bilinear form columns");
  require_dim(static_cast<std::size_t>(f.dim()), static_cast<std::size_t>(space.dim()),
              "linear form");
  if (!a.matrix.allFinite() || !f.covector.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "problem data has non-finite entries");
  }
  FormConstants constants;
  constants.continuity_C = continuity ? *continuity : continuity_constant(space, a);
  constants.coercivity_alpha = alpha ? *alpha : coercivity_constant(space, a);
  if (!(constants.continuity_C >= 0.0) || !std::isfinite(constants.coercivity_alpha)) {
    throw Error(ErrorCode::InvalidArgument, "constants must be finite with C >= 0");
  }
  constants.coercivity_alpha = std::min(constants.coercivity_alpha, constants.continuity_C);
  return {std::move(space), std::move(a), std::move(f), constants};
}

RhoPolicy rho_policy(double alpha, double continuity) {
  if (!(alpha > 0.0)) {
    std::ostringstream os;
    os << "coercivity constant " << alpha << " is not positive";
    throw Error(ErrorCode::NotCoercive, os.str());
  }
  if (alpha > continuity * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "coercivity constant " << alpha << " exceeds continuity constant " << continuity;
    throw Error(ErrorCode::InconsistentConstants, os.str());
  }
  const double ratio = std::min(1.0, alpha / continuity);
  RhoPolicy policy;
  policy.lower = 0.0;
  policy.upper = 2.0 * alpha / (continuity * continuity);
  policy.rho_star = alpha / (continuity * continuity);
  policy.k_star = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  return policy;
}

double contraction_factor(double rho, double alpha, double continuity) {
  const RhoPolicy policy = rho_policy(alpha, continuity);
  if (!(rho > policy.lower && rho < policy.upper)) {
    std::ostringstream os;
    os << "rho = " << rho << " outside (0, " << policy.upper << ")";
    throw Error(ErrorCode::RhoOutOfRange, os.str());
  }
  // 1 - 2 rho alpha + rho^2 C^2 written as a completed square, which keeps
  // the value at rho_star from cancelling to a spurious O(1e-16).
  const double ratio = std::min(1.0, alpha / continuity);
  const double shifted = rho * continuity - ratio;
  return std::sqrt(std::max(0.0, shifted * shifted + (1.0 - ratio * ratio)));
}

ContractionMap iteration_map(const VariationalProblem& problem, double rho) {
  const double k = contraction_factor(rho, problem.constants.coercivity_alpha,
                                      problem.constants.continuity_C);
  Matrix mt = problem.a.matrix.transpose();
  Vector f = problem.f.covector;
  HilbertSpace space = problem.space;
  auto apply = [space, mt = std::move(mt), f = std::move(f), rho](const Vector& c) -> Vector {
    // tau(A(c)) - tau(f) = G^{-1} (M^T c - f).
    return c - rho * space.solve_gram(mt * c - f);
  };
  return {problem.space, std::move(apply), k};
}

SolveReport solve(const VariationalProblem& problem, const SolveOptions& options) {
  const double alpha = problem.constants.coercivity_alpha;
  const double continuity = problem.constants.continuity_C;
  const RhoPolicy policy = rho_policy(alpha, continuity);
  const double rho = options.rho.value_or(policy.rho_star);
  const ContractionMap map = iteration_map(problem, rho);

  IterateOptions iterate_options;
  iterate_options.tol = options.tol;
  iterate_options.max_iter = options.max_iter;
  const Vector x0 = options.x0 ? *options.x0 : Vector::Zero(problem.space.dim());
  FixedPointReport fp = iterate(map, x0, iterate_options);

  SolveReport report;
  report.solution = std::move(fp.fixed_point);
  report.rho = rho;
  report.contraction_k = map.k;
  report.iterations = fp.iterations;
  report.step_norms = std::move(fp.step_norms);
  report.estimate_lhs = problem.space.norm(report.solution);
  report.estimate_rhs = estimate_rhs(problem);
  report.residual = (problem.a.matrix.transpose() * report.solution - problem.f.covector)
                        .cwiseAbs()
                        .maxCoeff();
  return report;
}

Vector solve_direct(const VariationalProblem& problem) {
  const Matrix mt = problem.a.matrix.transpose();
  Eigen::PartialPivLU<Matrix> lu(mt);
  const double rcond = lu.rcond();
  if (!(rcond > 16.0 * std::numeric_limits<double>::epsilon())) {
    std::ostringstream os;
    os << "M^T is numerically singular (rcond " << rcond << ")";
    throw Error(ErrorCode::SingularSystem, os.str());
  }
  Vector c = lu.solve(problem.f.covector);
  if (!c.allFinite()) throw Error(ErrorCode::SingularSystem, "direct solve produced non-finite values");
  return c;
}

VariationalProblem restrict_problem(const VariationalProblem& problem, const Subspace& sub) {
  require_dim(static_cast<std::size_t>(sub.ambient().dim()),
              static_cast<std::size_t>(problem.space.dim()), "subspace ambient space");
  if (sub.ambient().gram() != problem.space.gram()) {
    throw Error(ErrorCode::DimensionMismatch, "subspace does not live in the problem's space");
  }
  const Matrix& b = sub.basis();
  HilbertSpace reduced_space(sub.reduced_gram());
  Matrix reduced_m = problem.a.matrix == problem.space.gram()
                         ? sub.reduced_gram()
                         : Matrix(b.transpose() * problem.a.matrix * b);
  LinearForm reduced_f{b.transpose() * problem.f.covector};
  return make_problem(std::move(reduced_space), BilinearForm{std::move(reduced_m)},
                      std::move(reduced_f));
}

bool GalerkinReport::cea_holds() const {
  return std::all_of(cea_checks.begin(), cea_checks.end(), [this](const CeaCheck& c) {
    return c.lhs <= c.rhs * (1.0 + 1e-10) + cea_floor;
  });
}

GalerkinReport galerkin_solve(const VariationalProblem& problem, const Subspace& sub,
                              const GalerkinOptions& options) {
  const double alpha = problem.constants.coercivity_alpha;
  const double continuity = problem.constants.continuity_C;
  rho_policy(alpha, continuity);

  const HilbertSpace& space = problem.space;
  VariationalProblem reduced = restrict_problem(problem, sub);
  const double bound = dual_norm(reduced.space, reduced.f) / reduced.constants.coercivity_alpha;
  SolveOptions solve_options;
  solve_options.tol = options.tol * problem_scale({bound});
  SolveReport reduced_report = solve(reduced, solve_options);

  Vector u = solve_direct(problem);
  Vector u_h = sub.lift(reduced_report.solution);
  const Vector error = u - u_h;
  const double scale = problem_scale({space.norm(u)});
  const double error_norm = space.norm(error);

  double orthogonality = 0.0;
  for (Eigen::Index j = 0; j < sub.dim(); ++j) {
    const Vector b = sub.basis().col(j);
    const double r = std::abs(problem.a(error, b)) / (space.norm(b) * (error_norm + scale));
    orthogonality = std::max(orthogonality, r);
  }

  GalerkinReport report{std::move(u_h), std::move(u), sub, std::move(reduced_report),
                        orthogonality, {}, continuity / alpha,
                        10.0 * solve_options.tol};
  Rng rng(options.seed);
  auto add_check = [&](Vector v_h) {
    const double rhs = report.cea_constant * space.distance(report.u, v_h);
    report.cea_checks.push_back({std::move(v_h), error_norm, rhs});
  };
  for (std::size_t i = 0; i < options.cea_candidates; ++i) {
    add_check(sub.lift(random_normal_vector(sub.dim(), rng)));
  }
  add_check(project(sub, report.u));
  return report;
}

}  // namespace laxmilgram
