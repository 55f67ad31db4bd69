#pragma once

#include "laxmilgram/fixed_point.hpp"
#include "laxmilgram/operators.hpp"
#include "laxmilgram/projection.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace laxmilgram {

/// Find u with a(u, v) = f(v) for every v.
struct VariationalProblem {
  HilbertSpace space;
  BilinearForm a;
  LinearForm f;
  FormConstants constants;
};

/**
 * Assembles a problem and its constants. Constants are computed from the
 * matrices unless overridden; the coercivity constant is then clamped to the
 * continuity constant so that alpha <= C always holds.
 */
VariationalProblem make_problem(HilbertSpace space, BilinearForm a, LinearForm f,
                                std::optional<double> alpha = std::nullopt,
                                std::optional<double> continuity = std::nullopt);

/// Admissible step sizes rho in (0, 2 alpha / C^2) and the best of them.
struct RhoPolicy {
  double lower = 0.0;
  double upper = 0.0;
  /// alpha / C^2, minimizing 1 - 2 rho alpha + rho^2 C^2.
  double rho_star = 0.0;
  /// sqrt(1 - alpha^2 / C^2), the contraction factor at rho_star.
  double k_star = 0.0;
};

/// Throws NotCoercive (alpha <= 0) or InconsistentConstants (alpha > C).
RhoPolicy rho_policy(double alpha, double continuity);

/// sqrt(1 - 2 rho alpha + rho^2 C^2), clamped below at 0. Throws RhoOutOfRange
/// unless 0 < rho < 2 alpha / C^2.
double contraction_factor(double rho, double alpha, double continuity);

/// g(c) = c - rho G^{-1} (M^T c - f), whose fixed points solve the problem.
ContractionMap iteration_map(const VariationalProblem& problem, double rho);

struct SolveOptions {
  /// Defaults to rho_star.
  std::optional<double> rho;
  double tol = 1e-10;
  std::optional<std::size_t> max_iter;
  /// Defaults to the zero vector.
  std::optional<Vector> x0;
};

struct SolveReport {
  Vector solution;
  double rho = 0.0;
  double contraction_k = 0.0;
  std::size_t iterations = 0;
  /// ||u||.
  double estimate_lhs = 0.0;
  /// ||f||' / alpha.
  double estimate_rhs = 0.0;
  /// max_i |a(u, e_i) - f(e_i)|.
  double residual = 0.0;
  std::vector<double> step_norms;
};

/// Solves by Picard iteration of the contraction g. The returned solution is
/// within tol of the exact one in the norm of the space.
SolveReport solve(const VariationalProblem& problem, const SolveOptions& options = {});

/// Direct solve of M^T c = f by LU with partial pivoting. Throws SingularSystem.
Vector solve_direct(const VariationalProblem& problem);

/// Restriction of a problem to a subspace, in subspace coordinates:
/// (B^T G B, B^T M B, B^T f), constants recomputed.
VariationalProblem restrict_problem(const VariationalProblem& problem, const Subspace& sub);

struct CeaCheck {
  Vector v_h;
  /// ||u - u_h||.
  double lhs = 0.0;
  /// (C / alpha) ||u - v_h||.
  double rhs = 0.0;
};

struct GalerkinOptions {
  std::size_t cea_candidates = 20;
  std::uint64_t seed = 0;
  /// Tolerance of the iterative solve in the subspace.
  double tol = 1e-12;
};

struct GalerkinReport {
  /// Ambient coordinates of the subspace solution.
  Vector u_h;
  /// Solution of the full problem, by direct solve.
  Vector u;
  Subspace subspace;
  SolveReport reduced;
  /// max_b |a(u - u_h, b)| / (||b|| (||u - u_h|| + max(1, ||u||))) over basis columns b.
  double orthogonality_residual = 0.0;
  std::vector<CeaCheck> cea_checks;
  double cea_constant = 0.0;
  /// Absolute allowance for solver error in the Cea comparisons.
  double cea_floor = 0.0;

  /// Every Cea check satisfies lhs <= rhs (1 + 1e-10) + cea_floor.
  [[nodiscard]] bool cea_holds() const;
};

/**
 * Galerkin approximation: solves the restricted problem with the iterative
 * solver, lifts the result, and audits Galerkin orthogonality and the Cea
 * bound against random members of the subspace plus the orthogonal projection
 * of the exact solution.
 */
GalerkinReport galerkin_solve(const VariationalProblem& problem, const Subspace& sub,
                              const GalerkinOptions& options = {});

}  // namespace laxmilgram
