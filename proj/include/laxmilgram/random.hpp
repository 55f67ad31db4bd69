#pragma once

#include "laxmilgram/space.hpp"

#include <cstdint>
#include <random>

namespace laxmilgram {

/// The one generator type threaded through every sampling routine.
using Rng = std::mt19937_64;

/// Standard normal coefficients.
Vector random_normal_vector(Eigen::Index n, Rng& rng);
Matrix random_normal_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Bitwise-symmetric SPD matrix with eigenvalues roughly in [0.5, 5].
Matrix random_spd(Eigen::Index n, Rng& rng);

/**
 * Matrix of a coercive bilinear form on `space`. In an orthonormal basis the
 * form is (1 + shift) I + spread * R / sqrt(n) with R standard normal, so its
 * symmetric and skew parts are both nontrivial. Redraws until the coercivity
 * constant is at least `min_alpha_over_C` times the continuity constant.
 */
Matrix random_coercive_matrix(const HilbertSpace& space, Rng& rng, double spread = 0.35,
                              double min_alpha_over_C = 0.15);

}  // namespace laxmilgram
