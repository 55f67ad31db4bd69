#include "laxmilgram/projection.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace laxmilgram {

namespace {

Matrix symmetric_product(const Matrix& basis, const Matrix& gram) {
  Matrix h = basis.transpose() * gram * basis;
  // (a + b) / 2 is commutative in IEEE arithmetic, so this is exactly symmetric.
  return (0.5 * (h + h.transpose())).eval();
}

}  // namespace

Subspace::Subspace(HilbertSpace ambient, Matrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_.dim()) {
    std::ostringstream os;
    os << "basis columns have " << basis_.rows() << " coefficients, ambient dimension is "
       << ambient_.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  if (basis_.cols() == 0 || basis_.cols() > ambient_.dim()) {
    std::ostringstream os;
    os << "a subspace of a " << ambient_.dim() << "-dimensional space needs between 1 and "
       << ambient_.dim() << " basis vectors, got " << basis_.cols();
    throw Error(ErrorCode::RankDeficientBasis, os.str());
  }
  if (!basis_.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "basis has non-finite entries");
  }
  reduced_gram_ = symmetric_product(basis_, ambient_.gram());
  reduced_llt_.compute(reduced_gram_);
  const double max_diag = reduced_gram_.diagonal().maxCoeff();
  bool ok = reduced_llt_.info() == Eigen::Success && max_diag > 0.0;
  if (ok) {
    const Matrix l = reduced_llt_.matrixL();
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
      // Pivots of the factorization are the squared diagonal entries of L.
      if (!(l(i, i) * l(i, i) >= 1e-12 * max_diag)) ok = false;
    }
  }
  if (!ok) {
    throw Error(ErrorCode::RankDeficientBasis, "basis columns are linearly dependent");
  }
}

Subspace Subspace::line(const HilbertSpace& ambient, const Vector& u) {
  ambient.check(u, "line direction");
  return Subspace(ambient, Matrix(u));
}

Vector Subspace::projection_coordinates(const Vector& u) const {
  ambient_.check(u);
  const Vector rhs = basis_.transpose() * (ambient_.gram() * u);
  return reduced_llt_.solve(rhs);
}

Vector Subspace::lift(const Vector& coords) const {
  require_dim(static_cast<std::size_t>(coords.size()), static_cast<std::size_t>(dim()),
              "subspace coordinates");
  return basis_ * coords;
}

Vector project(const Subspace& sub, const Vector& u) {
  return sub.lift(sub.projection_coordinates(u));
}

std::pair<Vector, Vector> decompose(const Subspace& sub, const Vector& u) {
  Vector v = project(sub, u);
  Vector w = u - v;
  return {std::move(v), std::move(w)};
}

MinSeqReport project_minseq(const Subspace& sub, const Vector& u, double tol,
                            std::size_t step_budget) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  const HilbertSpace& space = sub.ambient();
  space.check(u);

  const Matrix& h = sub.reduced_gram();
  const Vector b = sub.basis().transpose() * (space.gram() * u);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h, Eigen::EigenvaluesOnly);
  const double lambda_min = eig.eigenvalues().minCoeff();
  const double lambda_max = eig.eigenvalues().maxCoeff();
  const double step = 1.0 / lambda_max;

  MinSeqReport report;
  Vector c = Vector::Zero(sub.dim());
  auto record = [&](const Vector& coords) {
    Vector w = sub.lift(coords);
    report.distances.push_back(space.distance(u, w));
    report.iterates.push_back(std::move(w));
  };
  record(c);

  for (std::size_t n = 0;; ++n) {
    // Half the gradient of c -> ||u - B c||^2.
    const Vector grad = h * c - b;
    // ||B c - P_F u|| = ||c - c*||_H <= ||H c - b||_2 / sqrt(lambda_min(H)).
    if (grad.norm() / std::sqrt(lambda_min) <= tol) break;
    if (n == step_budget) {
      report.limit = report.iterates.back();
      report.delta = report.distances.back();
      std::ostringstream os;
      os << "minimizing sequence not within " << tol << " after " << step_budget << " steps";
      throw MinSeqBudgetExceeded(os.str(), std::move(report));
    }
    c -= step * grad;
    record(c);
  }
  report.limit = report.iterates.back();
  report.delta = report.distances.back();
  return report;
}

}  // namespace laxmilgram
