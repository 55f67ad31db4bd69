#include "laxmilgram/space.hpp"

#include "laxmilgram/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace laxmilgram {

double problem_scale(std::initializer_list<double> values) noexcept {
  double s = 1.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

HilbertSpace::HilbertSpace(Matrix gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0) {
    std::ostringstream os;
    os << "Gram matrix must be square and nonempty, got " << gram.rows() << "x" << gram.cols();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  if (!gram.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "Gram matrix has non-finite entries");
  }
  const Eigen::Index n = gram.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) {
        std::ostringstream os;
        os << "G(" << i << "," << j << ") = " << gram(i, j) << " differs from G(" << j << ","
           << i << ") = " << gram(j, i);
        throw Error(ErrorCode::NotSymmetric, os.str());
      }
    }
  }

  auto data = std::make_shared<Data>();
  data->llt.compute(gram);
  if (data->llt.info() != Eigen::Success) {
    throw Error(ErrorCode::NotPositiveDefinite, "Cholesky factorization hit a nonpositive pivot");
  }
  data->chol = data->llt.matrixL();
  // LLT reports failure only on pivots <= 0; also reject a NaN from underflow.
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(data->chol(i, i) > 0.0)) {
      throw Error(ErrorCode::NotPositiveDefinite, "Cholesky factorization hit a nonpositive pivot");
    }
  }
  data->gram = std::move(gram);
  data_ = std::move(data);
}

HilbertSpace HilbertSpace::euclidean(Eigen::Index n) {
  return HilbertSpace(Matrix::Identity(n, n));
}

Eigen::Index HilbertSpace::dim() const noexcept { return data_->gram.rows(); }
const Matrix& HilbertSpace::gram() const noexcept { return data_->gram; }
const Matrix& HilbertSpace::chol() const noexcept { return data_->chol; }

void HilbertSpace::check(const Vector& u, std::string_view what) const {
  require_dim(static_cast<std::size_t>(u.size()), static_cast<std::size_t>(dim()), what);
}

double HilbertSpace::inner(const Vector& u, const Vector& v) const {
  check(u, "left operand");
  check(v, "right operand");
  return u.dot(data_->gram * v);
}

double HilbertSpace::norm(const Vector& u) const {
  check(u);
  // ||L^T u||_2 equals sqrt(u^T G u) and cannot go negative through cancellation.
  return (data_->chol.transpose() * u).norm();
}

double HilbertSpace::distance(const Vector& u, const Vector& v) const {
  check(u, "left operand");
  check(v, "right operand");
  return norm(u - v);
}

Vector HilbertSpace::solve_gram(const Vector& rhs) const {
  check(rhs, "right-hand side");
  return data_->llt.solve(rhs);
}

Vector HilbertSpace::solve_lower(const Vector& rhs) const {
  check(rhs, "right-hand side");
  return data_->chol.triangularView<Eigen::Lower>().solve(rhs);
}

Matrix HilbertSpace::whiten(const Matrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "bilinear form matrix does not match the space");
  }
  const auto lower = data_->chol.triangularView<Eigen::Lower>();
  Matrix x = lower.solve(m);                                  // L^{-1} M
  Matrix nt = lower.solve(x.transpose());                     // L^{-1} (L^{-1} M)^T
  return nt.transpose();
}

HilbertSpace make_space(Matrix gram) { return HilbertSpace(std::move(gram)); }

double inner(const HilbertSpace& space, const Vector& u, const Vector& v) {
  return space.inner(u, v);
}

double norm(const HilbertSpace& space, const Vector& u) { return space.norm(u); }

double distance(const HilbertSpace& space, const Vector& u, const Vector& v) {
  return space.distance(u, v);
}

}  // namespace laxmilgram
