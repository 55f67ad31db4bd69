#include "laxmilgram/error.hpp"
#include "laxmilgram/space.hpp"
#include "test_support.hpp"

#include "doctest.h"

#include <cmath>

using namespace laxmilgram;
using laxmilgram::testing::code_of;
using laxmilgram::testing::mat2;
using laxmilgram::testing::vec2;


TEST_CASE("make_space caches a Cholesky factor") {
  const HilbertSpace id = make_space(Matrix::Identity(2, 2));
  CHECK(id.dim() == 2);
  CHECK(id.chol() == Matrix::Identity(2, 2));

  const Matrix g = mat2(2, 1, 1, 2);
  const HilbertSpace s = make_space(g);
  const Matrix recomposed = s.chol() * s.chol().transpose();
  CHECK((recomposed - g).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("make_space rejects non-SPD input") {
  // Eigenvalues of [[1,2],[2,1]] from the 2x2 characteristic polynomial:
  // (1 - l)^2 = 4, so l = 3 or -1.
  const double tr = 2.0, det = 1.0 - 4.0;
  const double disc = std::sqrt(tr * tr / 4.0 - det);
  CHECK(tr / 2.0 - disc == doctest::Approx(-1.0));
  CHECK(tr / 2.0 + disc == doctest::Approx(3.0));
  CHECK(code_of([] { make_space(mat2(1, 2, 2, 1)); }) == ErrorCode::NotPositiveDefinite);

  CHECK(code_of([] { make_space(mat2(2, 1, 1 + 1e-16 * 4, 2)); }) == ErrorCode::NotSymmetric);
  CHECK(code_of([] { make_space(Matrix::Zero(2, 2)); }) == ErrorCode::NotPositiveDefinite);
  CHECK(code_of([] { make_space(Matrix::Identity(2, 3)); }) == ErrorCode::DimensionMismatch);
  Matrix nan = Matrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  CHECK(code_of([&] { make_space(nan); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("inner, norm and distance") {
  const HilbertSpace id = HilbertSpace::euclidean(2);
  CHECK(inner(id, vec2(1, 0), vec2(0, 1)) == 0.0);
  CHECK(norm(id, vec2(3, 4)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm(id, Vector::Zero(2)) == 0.0);
  CHECK(distance(id, vec2(0, 0), vec2(1, 0)) == 1.0);
  CHECK(distance(id, vec2(0.3, 7), vec2(0.3, 7)) == 0.0);

  // (1,1)^T G (1,1) is the sum of all entries of G: 2 + 1 + 1 + 2.
  const HilbertSpace g = make_space(mat2(2, 1, 1, 2));
  CHECK(inner(g, vec2(1, 1), vec2(1, 1)) == doctest::Approx(6.0));
  CHECK(norm(g, vec2(1, 1)) == doctest::Approx(std::sqrt(6.0)));

  CHECK(code_of([&] { (void)g.inner(vec2(1, 1), Vector::Ones(3)); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { (void)g.norm(Vector::Ones(1)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("Hilbert-space identities hold on random instances") {
  Rng rng(11);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(t % 9);
    const HilbertSpace space = testing::random_space(rng, n);
    const Vector u = random_normal_vector(n, rng);
    const Vector v = random_normal_vector(n, rng);
    const Vector w = random_normal_vector(n, rng);
    const double uu = space.inner(u, u), vv = space.inner(v, v), uv = space.inner(u, v);
    const double nu = space.norm(u), nv = space.norm(v);
    const double scale = problem_scale({nu, nv});

    CHECK(uu >= 0.0);
    CHECK(uv * uv <= uu * vv * (1 + 1e-12));
    const double p = space.norm(u + v), m = space.norm(u - v);
    CHECK(std::abs(p * p + m * m - 2 * (nu * nu + nv * nv)) <= 1e-12 * (nu * nu + nv * nv));
    CHECK(std::abs(nu - nv) <= space.distance(u, v) + 1e-12 * scale);
    CHECK(std::abs(p * p - (nu * nu + 2 * uv + nv * nv)) <=
          1e-12 * (nu * nu + nv * nv + 2 * std::abs(uv)));
    CHECK(space.distance(u, w) <=
          space.distance(u, v) + space.distance(v, w) + 1e-12 * problem_scale({nu, nv, space.norm(w)}));
    CHECK(space.distance(u, v) == space.distance(v, u));
    CHECK(std::abs(space.inner(Vector::Zero(n), u)) <= 1e-15 * nu);
    const double lambda = 5 * normal(rng);
    CHECK(std::abs(space.norm(lambda * u) - std::abs(lambda) * nu) <= 1e-13 * std::abs(lambda) * nu);
  }
}

TEST_CASE("solve_gram and whiten") {
  const HilbertSpace g = make_space(mat2(2, 1, 1, 2));
  const Vector x = g.solve_gram(vec2(1, 0));
  CHECK((g.gram() * x - vec2(1, 0)).norm() <= 1e-15);
  // Whitening the Gram matrix itself gives the identity.
  CHECK((g.whiten(g.gram()) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("copies share immutable storage") {
  const HilbertSpace a = make_space(mat2(2, 1, 1, 2));
  const HilbertSpace b = a;
  CHECK(&a.gram() == &b.gram());
}
