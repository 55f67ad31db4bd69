#include "laxmilgram/projection.hpp"
#include "test_support.hpp"

#include "doctest.h"

#include <Eigen/LU>
#include <Eigen/QR>

#include <cmath>

using namespace laxmilgram;
using laxmilgram::testing::code_of;
using laxmilgram::testing::mat2;
using laxmilgram::testing::vec2;

namespace {

Subspace random_subspace(Rng& rng, const HilbertSpace& space, Eigen::Index m) {
  return Subspace(space, random_normal_matrix(space.dim(), m, rng));
}

/// Gram-Schmidt in the G inner product; an independent route to P_F u as
/// sum <u, q_i> q_i.
Matrix g_orthonormal_basis(const Subspace& sub) {
  const HilbertSpace& s = sub.ambient();
  Matrix q = sub.basis();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < i; ++j) q.col(i) -= s.inner(q.col(j), q.col(i)) * q.col(j);
    q.col(i) /= s.norm(q.col(i));
  }
  return q;
}

}  // namespace

TEST_CASE("project: small examples") {
  const HilbertSpace e2 = HilbertSpace::euclidean(2);
  const Subspace x_axis = Subspace::line(e2, vec2(1, 0));
  CHECK((project(x_axis, vec2(1, 1)) - vec2(1, 0)).norm() <= 1e-15);
  CHECK((project(x_axis, vec2(-3, 0)) - vec2(-3, 0)).norm() <= 1e-12 * 3);

  // Normal equation for span{e1} under G = [[2,1],[1,2]]: 2c = <e1, u>_G = 1.
  const HilbertSpace g = make_space(mat2(2, 1, 1, 2));
  const Subspace line = Subspace::line(g, vec2(1, 0));
  const Vector v = project(line, vec2(0, 1));
  CHECK((v - vec2(0.5, 0)).norm() <= 1e-15);
  CHECK(std::abs(g.inner(vec2(-0.5, 1), vec2(1, 0))) == 0.0);
  CHECK(std::abs(g.inner(vec2(0, 1) - v, vec2(1, 0))) <= 1e-15);
}

TEST_CASE("Subspace validation") {
  const HilbertSpace e3 = HilbertSpace::euclidean(3);
  Matrix dependent(3, 2);
  dependent << 1, 2, 0, 0, 1, 2;
  CHECK(code_of([&] { Subspace(e3, dependent); }) == ErrorCode::RankDeficientBasis);
  CHECK(code_of([&] { Subspace(e3, Matrix::Zero(3, 1)); }) == ErrorCode::RankDeficientBasis);
  CHECK(code_of([&] { Subspace(e3, Matrix(3, 0)); }) == ErrorCode::RankDeficientBasis);
  CHECK(code_of([&] { Subspace(e3, Matrix::Identity(2, 2)); }) == ErrorCode::DimensionMismatch);
  const Subspace s(e3, Matrix::Identity(3, 2));
  CHECK(code_of([&] { (void)project(s, Vector::Ones(2)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("decompose") {
  Rng rng(3);
  const HilbertSpace space = testing::random_space(rng, 5);
  const Subspace sub = random_subspace(rng, space, 2);

  const Vector in_f = sub.lift(random_normal_vector(2, rng));
  const auto [v1, w1] = decompose(sub, in_f);
  CHECK(space.distance(v1, in_f) <= 1e-12 * space.norm(in_f));
  CHECK(space.norm(w1) <= 1e-12 * space.norm(in_f));

  const Vector any = random_normal_vector(5, rng);
  const Vector perp = any - project(sub, any);
  const auto [v2, w2] = decompose(sub, perp);
  CHECK(space.norm(v2) <= 1e-12 * space.norm(any));
  CHECK(space.distance(w2, perp) <= 1e-12 * space.norm(any));

  const auto [v3, w3] = decompose(sub, any);
  CHECK((v3 + w3 - any).cwiseAbs().maxCoeff() <= 1e-14 * any.cwiseAbs().maxCoeff());
  const double nu = space.norm(any), nv = space.norm(v3), nw = space.norm(w3);
  CHECK(std::abs(nu * nu - nv * nv - nw * nw) <= 1e-12 * nu * nu);
}

TEST_CASE("project_minseq examples") {
  const HilbertSpace e2 = HilbertSpace::euclidean(2);
  const auto whole = project_minseq(Subspace(e2, Matrix::Identity(2, 2)), vec2(0.3, -2), 1e-12);
  CHECK(e2.distance(whole.limit, vec2(0.3, -2)) <= 1e-12);
  CHECK(whole.delta <= 1e-12);

  const auto axis = project_minseq(Subspace::line(e2, vec2(1, 0)), vec2(1, 1), 1e-12);
  CHECK(e2.distance(axis.limit, vec2(1, 0)) <= 1e-12);
  CHECK(axis.delta == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("project_minseq agrees with the normal equations") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const HilbertSpace space = testing::random_space(rng, 6);
    const Subspace sub = random_subspace(rng, space, 3);
    const Vector u = random_normal_vector(6, rng);
    const auto rep = project_minseq(sub, u, 1e-8);
    const Vector v = project(sub, u);
    CHECK(space.distance(rep.limit, v) <= 1e-6);
    CHECK(rep.delta == doctest::Approx(space.distance(u, v)).epsilon(1e-6));

    for (std::size_t i = 1; i < rep.distances.size(); ++i) {
      CHECK(rep.distances[i] <= rep.distances[i - 1] * (1 + 1e-12));
    }
    // Cauchy: every eps has an index past which all pairs lie within eps.
    const auto& xs = rep.iterates;
    for (double eps : {1e-1, 1e-3, 1e-5, 1e-7}) {
      std::size_t start = xs.size();
      for (std::size_t s = xs.size(); s-- > 0;) {
        if (space.distance(xs[s], xs.back()) > eps / 2) break;
        start = s;
      }
      CHECK(start < xs.size());
    }
  }
}

TEST_CASE("project_minseq budget") {
  Rng rng(1);
  const HilbertSpace space = testing::random_space(rng, 6);
  const Subspace sub = random_subspace(rng, space, 3);
  try {
    (void)project_minseq(sub, random_normal_vector(6, rng), 1e-14, 3);
    FAIL("expected BudgetExceeded");
  } catch (const MinSeqBudgetExceeded& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
    CHECK(e.partial().iterates.size() == 4);
    CHECK(e.partial().distances.size() == 4);
  }
}

TEST_CASE("projection properties on random instances") {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const Eigen::Index n = 2 + t % 7;
    const Eigen::Index m = 1 + t % n;
    const HilbertSpace space = testing::random_space(rng, n);
    const Subspace sub = random_subspace(rng, space, m);
    const Vector u = random_normal_vector(n, rng);
    const Vector x = random_normal_vector(n, rng);
    const double lambda = 2.0 * (t % 5) - 3.5;
    const double scale = problem_scale({space.norm(u), space.norm(x)});

    const Vector pu = project(sub, u);
    const Vector px = project(sub, x);
    CHECK(space.distance(project(sub, pu), pu) <= 1e-10 * scale);
    CHECK(space.distance(project(sub, lambda * u + x), lambda * pu + px) <=
          1e-10 * problem_scale({std::abs(lambda) * space.norm(u), space.norm(x)}));
    CHECK(space.norm(pu) <= space.norm(u) * (1 + 1e-12) + 1e-14);

    // Best approximation against 100 competitors.
    const double best = space.distance(u, pu);
    for (int c = 0; c < 100; ++c) {
      const Vector w = sub.lift(random_normal_vector(m, rng));
      CHECK(best <= space.distance(u, w) * (1 + 1e-12) + 1e-14);
      CHECK(std::abs(space.inner(u - pu, w)) <= 1e-10 * scale * problem_scale({space.norm(w)}));
    }

    // The same span under another basis gives the same projection.
    Eigen::HouseholderQR<Matrix> qr(random_normal_matrix(m, m, rng));
    const Matrix mix = Matrix(qr.householderQ()) + 0.5 * Matrix::Identity(m, m);
    if (std::abs(mix.determinant()) > 1e-3) {
      const Subspace other(space, sub.basis() * mix);
      CHECK(space.distance(project(other, u), pu) <= 1e-9 * scale);
    }

    const Matrix q = g_orthonormal_basis(sub);
    Vector via_q = Vector::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) via_q += space.inner(u, q.col(i)) * q.col(i);
    CHECK(space.distance(via_q, pu) <= 1e-9 * scale);
  }
}
