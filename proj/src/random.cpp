#include "laxmilgram/random.hpp"

#include "laxmilgram/operators.hpp"

#include <cmath>

namespace laxmilgram {

Vector random_normal_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

Matrix random_normal_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  // Fill in a fixed order so results do not depend on Eigen's storage order.
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  return m;
}

Matrix random_spd(Eigen::Index n, Rng& rng) {
  const Matrix a = random_normal_matrix(n, n, rng);
  Matrix g = a * a.transpose() / static_cast<double>(n) + 0.5 * Matrix::Identity(n, n);
  return (0.5 * (g + g.transpose())).eval();
}

Matrix random_coercive_matrix(const HilbertSpace& space, Rng& rng, double spread,
                              double min_alpha_over_C) {
  const Eigen::Index n = space.dim();
  const Matrix& l = space.chol();
  std::uniform_real_distribution<double> shift(0.0, 1.0);
  for (;;) {
    Matrix whitened = (1.0 + shift(rng)) * Matrix::Identity(n, n) +
                      spread * random_normal_matrix(n, n, rng) / std::sqrt(static_cast<double>(n));
    // x^T N y with x = L^T u is u^T (L N L^T) v.
    Matrix m = l * whitened * l.transpose();
    const FormConstants k = form_constants(space, BilinearForm{m});
    if (k.coercivity_alpha >= min_alpha_over_C * k.continuity_C) return m;
  }
}

}  // namespace laxmilgram
