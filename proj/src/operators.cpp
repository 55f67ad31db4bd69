#include "laxmilgram/operators.hpp"

#include "laxmilgram/error.hpp"
#include "laxmilgram/projection.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace laxmilgram {

namespace {

void check_form(const HilbertSpace& space, const LinearForm& form) {
  require_dim(static_cast<std::size_t>(form.dim()), static_cast<std::size_t>(space.dim()),
              "linear form");
}

void check_form(const HilbertSpace& space, const BilinearForm& form) {
  require_dim(static_cast<std::size_t>(form.matrix.rows()),
              static_cast<std::size_t>(space.dim()), "bilinear form rows");
  require_dim(static_cast<std::size_t>(form.matrix.cols()),
              static_cast<std::size_t>(space.dim()), "bilinear form columns");
}

// a(u, v) = <u, v> exactly: both constants are 1 and whitening would only add rounding.
bool is_inner_product(const HilbertSpace& space, const BilinearForm& form) {
  return form.matrix == space.gram();
}

}  // namespace

double LinearForm::operator()(const Vector& v) const {
  require_dim(static_cast<std::size_t>(v.size()), static_cast<std::size_t>(covector.size()),
              "argument of linear form");
  return covector.dot(v);
}

double BilinearForm::operator()(const Vector& u, const Vector& v) const {
  require_dim(static_cast<std::size_t>(u.size()), static_cast<std::size_t>(matrix.rows()),
              "left argument of bilinear form");
  require_dim(static_cast<std::size_t>(v.size()), static_cast<std::size_t>(matrix.cols()),
              "right argument of bilinear form");
  return u.dot(matrix * v);
}

double dual_norm(const HilbertSpace& space, const LinearForm& form) {
  check_form(space, form);
  // f^T G^{-1} f = ||L^{-1} f||^2.
  return space.solve_lower(form.covector).norm();
}

double sampled_sup_ratio(const HilbertSpace& space, const LinearForm& form, std::size_t n_samples,
                         std::uint64_t seed) {
  check_form(space, form);
  Rng rng(seed);
  double best = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const Vector z = random_normal_vector(space.dim(), rng);
    const double nz = space.norm(z);
    if (nz == 0.0) continue;
    best = std::max(best, std::abs(form(z)) / nz);
  }
  return best;
}

double continuity_constant(const HilbertSpace& space, const BilinearForm& form) {
  check_form(space, form);
  if (is_inner_product(space, form)) return 1.0;
  const Matrix n = space.whiten(form.matrix);
  const Matrix ntn = n.transpose() * n;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(ntn, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

double coercivity_constant(const HilbertSpace& space, const BilinearForm& form) {
  check_form(space, form);
  if (is_inner_product(space, form)) return 1.0;
  const Matrix n = space.whiten(form.matrix);
  const Matrix sym = 0.5 * (n + n.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

FormConstants form_constants(const HilbertSpace& space, const BilinearForm& form) {
  return {continuity_constant(space, form), coercivity_constant(space, form)};
}

LinearForm representation(const HilbertSpace& space, const BilinearForm& form, const Vector& u) {
  check_form(space, form);
  space.check(u);
  return {form.matrix.transpose() * u};
}

Vector riesz(const HilbertSpace& space, const LinearForm& form) {
  check_form(space, form);
  return space.solve_gram(form.covector);
}

Vector riesz_constructive(const HilbertSpace& space, const LinearForm& form) {
  check_form(space, form);
  const Eigen::Index n = space.dim();
  const Vector& f = form.covector;
  if ((f.array() == 0.0).all()) return Vector::Zero(n);

  // Pivot on the largest |f_j|: e_j lies outside Ker phi, and the vectors
  // e_i - (f_i / f_j) e_j, i != j, span Ker phi.
  Eigen::Index j = 0;
  f.cwiseAbs().maxCoeff(&j);
  const Vector u0 = Vector::Unit(n, j);

  Vector v0 = u0;
  if (n > 1) {
    Matrix kernel(n, n - 1);
    Eigen::Index col = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == j) continue;
      kernel.col(col).setZero();
      kernel(i, col) = 1.0;
      kernel(j, col) = -f(i) / f(j);
      ++col;
    }
    const Subspace ker(space, std::move(kernel));
    v0 = u0 - project(ker, u0);
  }
  const Vector xi0 = v0 / space.norm(v0);
  return form(xi0) * xi0;
}

double riesz_isometry_gap(const HilbertSpace& space, const LinearForm& form) {
  return std::abs(space.norm(riesz(space, form)) - dual_norm(space, form));
}

}  // namespace laxmilgram
