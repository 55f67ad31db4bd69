#pragma once

#include "laxmilgram/random.hpp"
#include "laxmilgram/space.hpp"

#include <cstdint>

namespace laxmilgram {

/// A continuous linear form phi(v) = covector . v.
struct LinearForm {
  Vector covector;

  [[nodiscard]] double operator()(const Vector& v) const;
  [[nodiscard]] Eigen::Index dim() const noexcept { return covector.size(); }

  static LinearForm zero(Eigen::Index n) { return {Vector::Zero(n)}; }
};

/// A bilinear form a(u, v) = u^T M v. M need not be symmetric.
struct BilinearForm {
  Matrix matrix;

  [[nodiscard]] double operator()(const Vector& u, const Vector& v) const;
  [[nodiscard]] Eigen::Index dim() const noexcept { return matrix.rows(); }
};

/// Tight constants of a bilinear form in the Gram geometry.
struct FormConstants {
  double continuity_C = 0.0;
  /// Nonpositive when the form is not coercive.
  double coercivity_alpha = 0.0;
};

/// sup |phi(u)| / ||u|| over u != 0, equal to sqrt(f^T G^{-1} f).
double dual_norm(const HilbertSpace& space, const LinearForm& form);

/// max |phi(xi)| over `n_samples` random unit vectors xi. A lower bound for
/// dual_norm; a run with more samples from the same seed extends the same
/// sample stream.
double sampled_sup_ratio(const HilbertSpace& space, const LinearForm& form, std::size_t n_samples,
                         std::uint64_t seed);

/// Smallest C with |a(u,v)| <= C ||u|| ||v||: sigma_max(L^{-1} M L^{-T}).
double continuity_constant(const HilbertSpace& space, const BilinearForm& form);

/// Largest alpha with a(u,u) >= alpha ||u||^2: lambda_min of the symmetric
/// part of L^{-1} M L^{-T}. May be <= 0.
double coercivity_constant(const HilbertSpace& space, const BilinearForm& form);

FormConstants form_constants(const HilbertSpace& space, const BilinearForm& form);

/// A(u): the linear form v -> a(u, v).
LinearForm representation(const HilbertSpace& space, const BilinearForm& form, const Vector& u);

/// The Riesz vector tau(phi) with phi(v) = <tau(phi), v>, via G^{-1} f.
Vector riesz(const HilbertSpace& space, const LinearForm& form);

/**
 * The Riesz vector built by the existence argument: project a vector outside
 * Ker phi onto Ker phi, normalize the orthogonal remainder xi0, and return
 * phi(xi0) xi0. The zero form maps to the zero vector.
 */
Vector riesz_constructive(const HilbertSpace& space, const LinearForm& form);

/// | ||tau(phi)|| - ||phi||' |, zero up to rounding.
double riesz_isometry_gap(const HilbertSpace& space, const LinearForm& form);

}  // namespace laxmilgram
