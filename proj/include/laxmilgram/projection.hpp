#pragma once

#include "laxmilgram/error.hpp"
#include "laxmilgram/space.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace laxmilgram {

/**
 * The span of m linearly independent elements of an ambient space, stored as
 * the dim x m matrix B of their coefficient columns. Independence is
 * certified by a Cholesky factorization of the reduced Gram matrix B^T G B
 * whose pivots must all exceed 1e-12 times its largest diagonal entry.
 */
class Subspace {
public:
  /// Throws DimensionMismatch or RankDeficientBasis.
  Subspace(HilbertSpace ambient, Matrix basis);

  /// Line(u) = { lambda u }.
  static Subspace line(const HilbertSpace& ambient, const Vector& u);

  [[nodiscard]] const HilbertSpace& ambient() const noexcept { return ambient_; }
  [[nodiscard]] const Matrix& basis() const noexcept { return basis_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return basis_.cols(); }
  /// B^T G B, bitwise symmetric.
  [[nodiscard]] const Matrix& reduced_gram() const noexcept { return reduced_gram_; }

  /// Coordinates c of the orthogonal projection B c of u.
  [[nodiscard]] Vector projection_coordinates(const Vector& u) const;
  [[nodiscard]] Vector lift(const Vector& coords) const;

private:
  HilbertSpace ambient_;
  Matrix basis_;
  Matrix reduced_gram_;
  Eigen::LLT<Matrix> reduced_llt_;
};

/// Orthogonal projection onto `sub`, from the normal equations
/// (B^T G B) c = B^T G u.
Vector project(const Subspace& sub, const Vector& u);

/// (P_F u, u - P_F u).
std::pair<Vector, Vector> decompose(const Subspace& sub, const Vector& u);

/// A minimizing sequence w_n in F for ||u - w||, with its limit.
struct MinSeqReport {
  std::vector<Vector> iterates;
  /// ||u - w_n||, one per iterate.
  std::vector<double> distances;
  Vector limit;
  /// Final distance, approximating inf_{w in F} ||u - w||.
  double delta = 0.0;
};

class MinSeqBudgetExceeded : public Error {
public:
  MinSeqBudgetExceeded(const std::string& message, MinSeqReport partial)
      : Error(ErrorCode::BudgetExceeded, message), partial_(std::move(partial)) {}
  [[nodiscard]] const MinSeqReport& partial() const noexcept { return partial_; }

private:
  MinSeqReport partial_;
};

/**
 * Projection by descent: fixed-step gradient descent on ||u - B c||^2 in
 * subspace coordinates with step 1 / lambda_max(B^T G B), starting at w_0 = 0.
 * Stops once the gradient certifies ||w_n - P_F u|| <= tol. Never solves the
 * normal equations, so it is an independent route to the projection.
 * Throws MinSeqBudgetExceeded after `step_budget` steps.
 */
MinSeqReport project_minseq(const Subspace& sub, const Vector& u, double tol,
                            std::size_t step_budget = 1'000'000);

}  // namespace laxmilgram
