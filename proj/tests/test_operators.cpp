#include "laxmilgram/operators.hpp"
#include "test_support.hpp"

#include "doctest.h"

#include <cmath>

using namespace laxmilgram;
using laxmilgram::testing::code_of;
using laxmilgram::testing::mat2;
using laxmilgram::testing::vec2;

TEST_CASE("dual_norm") {
  const HilbertSpace e2 = HilbertSpace::euclidean(2);
  CHECK(dual_norm(e2, LinearForm{vec2(3, 4)}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(dual_norm(e2, LinearForm::zero(2)) == 0.0);

  const HilbertSpace g = make_space(mat2(2, 0, 0, 2));
  const LinearForm phi{vec2(1, 0)};
  const double sweep =
      testing::angle_sweep_max([&](const Vector& u) { return std::abs(phi(u)) / g.norm(u); });
  CHECK(std::abs(sweep - 1 / std::sqrt(2.0)) <= 1e-6);
  CHECK(dual_norm(g, phi) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(code_of([&] { (void)dual_norm(g, LinearForm{Vector::Ones(3)}); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("sampled_sup_ratio") {
  const HilbertSpace e2 = HilbertSpace::euclidean(2);
  CHECK(sampled_sup_ratio(e2, LinearForm::zero(2), 100, 0) == 0.0);
  const double s = sampled_sup_ratio(e2, LinearForm{vec2(1, 0)}, 10000, 0);
  CHECK(s >= 0.999);
  CHECK(s <= 1 + 1e-12);

  Rng rng(4);
  const HilbertSpace space = testing::random_space(rng, 6);
  const LinearForm f{random_normal_vector(6, rng)};
  double prev = 0.0;
  for (std::size_t n : {10, 100, 1000, 10000}) {
    const double cur = sampled_sup_ratio(space, f, n, 9);
    CHECK(cur >= prev);
    CHECK(cur <= dual_norm(space, f) * (1 + 1e-12));
    prev = cur;
  }
}

TEST_CASE("continuity and coercivity constants") {
  const HilbertSpace e2 = HilbertSpace::euclidean(2);
  CHECK(continuity_constant(e2, BilinearForm{mat2(3, 0, 0, 1)}) == doctest::Approx(3.0).epsilon(1e-14));

  const HilbertSpace g = make_space(mat2(2, 1, 1, 2));
  CHECK(std::abs(continuity_constant(g, BilinearForm{g.gram()}) - 1.0) <= 1e-12);
  CHECK(std::abs(coercivity_constant(g, BilinearForm{g.gram()}) - 1.0) <= 1e-12);

  // Symmetric part [[2,.5],[.5,2]]: eigenvalues 2 +- 0.5 by hand.
  const BilinearForm a{mat2(2, 1, 0, 2)};
  const double sweep_min = testing::angle_sweep_min([&](const Vector& u) { return a(u, u) / u.squaredNorm(); });
  CHECK(std::abs(sweep_min - 1.5) <= 1e-9);
  CHECK(coercivity_constant(e2, a) == doctest::Approx(1.5).epsilon(1e-14));
  // Witness: the eigenvector (1,-1)/sqrt2 attains alpha.
  CHECK(a(vec2(1, -1), vec2(1, -1)) / 2 == 1.5);

  // The continuity sweep needs both arguments; for 2x2 sigma_max is sup_u ||N u||.
  const double sweep_max =
      testing::angle_sweep_max([&](const Vector& u) { return (a.matrix * u).norm(); });
  CHECK(std::abs(continuity_constant(e2, a) - sweep_max) <= 1e-9);

  const HilbertSpace g2 = make_space(mat2(2, 1, 1, 3));
  const BilinearForm b{mat2(1, 2, -1, 4)};
  const double c_sweep = testing::angle_sweep_max([&](const Vector& v) {
    // sup_u |a(u,v)| / ||u|| = ||M v||' (dual norm of u -> u^T M v).
    return dual_norm(g2, LinearForm{b.matrix * v}) / g2.norm(v);
  });
  CHECK(std::abs(continuity_constant(g2, b) - c_sweep) <= 1e-8);
  const double a_sweep =
      testing::angle_sweep_min([&](const Vector& u) { return b(u, u) / g2.inner(u, u); });
  CHECK(std::abs(coercivity_constant(g2, b) - a_sweep) <= 1e-8);

  CHECK(coercivity_constant(e2, BilinearForm{mat2(0, 1, -1, 0)}) <= 1e-15);
  CHECK(coercivity_constant(e2, BilinearForm{mat2(1, 0, 0, -1)}) == doctest::Approx(-1.0));
}

TEST_CASE("constants bound the form on random instances") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index n = 1 + t % 8;
    const HilbertSpace space = testing::random_space(rng, n);
    const BilinearForm a{random_coercive_matrix(space, rng)};
    const FormConstants k = form_constants(space, a);
    CHECK(k.coercivity_alpha > 0.0);
    CHECK(k.coercivity_alpha <= k.continuity_C * (1 + 1e-12));
    for (int s = 0; s < 20; ++s) {
      const Vector u = random_normal_vector(n, rng);
      const Vector v = random_normal_vector(n, rng);
      const double nu = space.norm(u), nv = space.norm(v);
      CHECK(std::abs(a(u, v)) <= k.continuity_C * nu * nv * (1 + 1e-12));
      CHECK(a(u, u) >= k.coercivity_alpha * nu * nu * (1 - 1e-12));
    }
  }
}

TEST_CASE("representation") {
  const HilbertSpace e2 = HilbertSpace::euclidean(2);
  const BilinearForm id{Matrix::Identity(2, 2)};
  CHECK(representation(e2, id, Vector::Zero(2)).covector == Vector::Zero(2));
  CHECK(representation(e2, id, vec2(1, 2)).covector == vec2(1, 2));

  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index n = 1 + t % 6;
    const HilbertSpace space = testing::random_space(rng, n);
    const BilinearForm a{random_coercive_matrix(space, rng)};
    const FormConstants k = form_constants(space, a);
    const Vector u = random_normal_vector(n, rng);
    const Vector w = random_normal_vector(n, rng);
    const Vector v = random_normal_vector(n, rng);
    const LinearForm au = representation(space, a, u);
    CHECK(std::abs(au(v) - a(u, v)) <= 1e-12 * problem_scale({space.norm(u) * space.norm(v) * k.continuity_C}));
    const LinearForm sum = representation(space, a, 2.5 * u + w);
    const LinearForm combo{2.5 * au.covector + representation(space, a, w).covector};
    CHECK(dual_norm(space, LinearForm{sum.covector - combo.covector}) <=
          1e-12 * problem_scale({k.continuity_C * (2.5 * space.norm(u) + space.norm(w))}));
    // ||A u||' lies between alpha ||u|| and C ||u||, so A is injective.
    const double nau = dual_norm(space, au);
    CHECK(nau >= k.coercivity_alpha * space.norm(u) * (1 - 1e-12));
    CHECK(nau <= k.continuity_C * space.norm(u) * (1 + 1e-12));
  }
}

TEST_CASE("riesz, both routes") {
  const HilbertSpace e2 = HilbertSpace::euclidean(2);
  CHECK(riesz(e2, LinearForm{vec2(3, -1)}) == vec2(3, -1));
  CHECK(riesz(e2, LinearForm::zero(2)) == Vector::Zero(2));
  CHECK(riesz_constructive(e2, LinearForm::zero(2)) == Vector::Zero(2));

  // G (2/3, -1/3) = (4/3 - 1/3, 2/3 - 2/3) = (1, 0).
  const HilbertSpace g = make_space(mat2(2, 1, 1, 2));
  const Vector r = riesz(g, LinearForm{vec2(1, 0)});
  CHECK((r - vec2(2.0 / 3, -1.0 / 3)).norm() <= 1e-15);
  CHECK(g.inner(r, vec2(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(g.inner(r, vec2(0, 1))) <= 1e-15);

  CHECK(e2.distance(riesz_constructive(e2, LinearForm{vec2(0, 1)}), vec2(0, 1)) <= 1e-15);
  CHECK(riesz_isometry_gap(e2, LinearForm::zero(2)) == 0.0);
  CHECK(riesz_isometry_gap(e2, LinearForm{vec2(3, 4)}) <= 1e-12);

  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index n = 1 + t % 10;
    const HilbertSpace space = testing::random_space(rng, n);
    const LinearForm f{random_normal_vector(n, rng)};
    const Vector a = riesz(space, f);
    const Vector b = riesz_constructive(space, f);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-10 * f.covector.norm());
    // <tau(phi), v> = phi(v).
    const Vector v = random_normal_vector(n, rng);
    CHECK(std::abs(space.inner(a, v) - f(v)) <= 1e-12 * problem_scale({dual_norm(space, f) * space.norm(v)}));
  }

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng r20(seed);
    const HilbertSpace space = testing::random_space(r20, 20);
    const LinearForm f{random_normal_vector(20, r20)};
    CHECK(riesz_isometry_gap(space, f) <= 1e-11 * dual_norm(space, f));
  }
}

TEST_CASE("riesz is linear") {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index n = 1 + t % 7;
    const HilbertSpace space = testing::random_space(rng, n);
    const Vector f = random_normal_vector(n, rng), h = random_normal_vector(n, rng);
    const double lambda = -1.5 + 0.1 * t;
    const Vector lhs = riesz(space, LinearForm{lambda * f + h});
    const Vector rhs = lambda * riesz(space, LinearForm{f}) + riesz(space, LinearForm{h});
    CHECK(space.distance(lhs, rhs) <=
          1e-12 * problem_scale({std::abs(lambda) * space.norm(riesz(space, LinearForm{f})),
                                 space.norm(riesz(space, LinearForm{h}))}));
  }
}
