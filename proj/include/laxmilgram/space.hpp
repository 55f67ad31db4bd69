#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <initializer_list>
#include <memory>
#include <string_view>

namespace laxmilgram {

/// Coefficients of an element of a space, in that space's fixed basis.
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// max(1, |values|...). Tolerances throughout the library are multiplied by
/// this so that identities exact in real arithmetic remain checkable.
double problem_scale(std::initializer_list<double> values) noexcept;

/**
 * A finite-dimensional real Hilbert space whose inner product is encoded by a
 * symmetric positive-definite Gram matrix G: <u, v> = u^T G v.
 *
 * Construction certifies the Gram matrix (bitwise symmetry, Cholesky
 * factorization with positive pivots) and caches the factor G = L L^T. The
 * object is immutable; copies share the underlying storage.
 */
class HilbertSpace {
public:
  /// Throws NotSymmetric or NotPositiveDefinite.
  explicit HilbertSpace(Matrix gram);

  /// R^n with the dot product.
  static HilbertSpace euclidean(Eigen::Index n);

  [[nodiscard]] Eigen::Index dim() const noexcept;
  [[nodiscard]] const Matrix& gram() const noexcept;
  /// Lower-triangular L with G = L L^T.
  [[nodiscard]] const Matrix& chol() const noexcept;

  [[nodiscard]] double inner(const Vector& u, const Vector& v) const;
  [[nodiscard]] double norm(const Vector& u) const;
  [[nodiscard]] double distance(const Vector& u, const Vector& v) const;

  /// G^{-1} rhs, by two triangular solves with the cached factor.
  [[nodiscard]] Vector solve_gram(const Vector& rhs) const;
  /// L^{-1} rhs.
  [[nodiscard]] Vector solve_lower(const Vector& rhs) const;
  /// L^{-1} M L^{-T}: the matrix of the bilinear form M in an orthonormal basis.
  [[nodiscard]] Matrix whiten(const Matrix& m) const;

  /// Throws DimensionMismatch unless u has dim() coefficients.
  void check(const Vector& u, std::string_view what = "vector") const;

private:
  struct Data {
    Matrix gram;
    Matrix chol;
    Eigen::LLT<Matrix> llt;
  };
  std::shared_ptr<const Data> data_;
};

/// Free-function spellings of the member operations.
HilbertSpace make_space(Matrix gram);
double inner(const HilbertSpace& space, const Vector& u, const Vector& v);
double norm(const HilbertSpace& space, const Vector& u);
double distance(const HilbertSpace& space, const Vector& u, const Vector& v);

}  // namespace laxmilgram
