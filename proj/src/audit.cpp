#include "laxmilgram/audit.hpp"

#include "laxmilgram/fem1d.hpp"
#include "laxmilgram/fixed_point.hpp"
#include "laxmilgram/operators.hpp"
#include "laxmilgram/projection.hpp"
#include "laxmilgram/random.hpp"
#include "laxmilgram/solver.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace laxmilgram {

void CheckResult::expect_le(double lhs, double rhs) {
  ++trials;
  if (!(lhs <= rhs)) ++failures;
  worst_excess = std::max(worst_excess, lhs - rhs);
}

namespace {

Eigen::Index pick_dim(Rng& rng, Eigen::Index lo, Eigen::Index hi) {
  return std::uniform_int_distribution<Eigen::Index>(lo, hi)(rng);
}

HilbertSpace random_space(Rng& rng, Eigen::Index n) { return HilbertSpace(random_spd(n, rng)); }

VariationalProblem random_problem(Rng& rng, Eigen::Index n) {
  HilbertSpace space = random_space(rng, n);
  Matrix m = random_coercive_matrix(space, rng);
  Vector f = random_normal_vector(n, rng);
  return make_problem(std::move(space), BilinearForm{std::move(m)}, LinearForm{std::move(f)});
}

Subspace random_subspace(const HilbertSpace& space, Rng& rng, Eigen::Index m) {
  return Subspace(space, random_normal_matrix(space.dim(), m, rng));
}

void space_checks(Rng& rng, std::vector<CheckResult>& out) {
  CheckResult cs{"space.cauchy_schwarz"};
  CheckResult para{"space.parallelogram"};
  CheckResult rev{"space.reverse_triangle"};
  CheckResult sq{"space.square_expansion"};
  CheckResult tri{"space.triangle"};
  CheckResult zero{"space.inner_with_zero"};
  CheckResult homog{"space.homogeneity"};
  std::normal_distribution<double> normal;
  for (int t = 0; t < 200; ++t) {
    const HilbertSpace space = random_space(rng, pick_dim(rng, 1, 12));
    const Eigen::Index n = space.dim();
    const Vector u = random_normal_vector(n, rng);
    const Vector v = random_normal_vector(n, rng);
    const Vector w = random_normal_vector(n, rng);
    const double uu = space.inner(u, u);
    const double vv = space.inner(v, v);
    const double uv = space.inner(u, v);
    const double nu = space.norm(u);
    const double nv = space.norm(v);
    const double scale = problem_scale({nu, nv});

    cs.expect_le(uv * uv, uu * vv * (1.0 + 1e-12));
    const double npu = space.norm(u + v);
    const double nmu = space.norm(u - v);
    para.expect_le(std::abs(npu * npu + nmu * nmu - 2.0 * (nu * nu + nv * nv)),
                   1e-12 * (nu * nu + nv * nv));
    rev.expect_le(std::abs(nu - nv), space.distance(u, v) + 1e-12 * scale);
    sq.expect_le(std::abs(npu * npu - (nu * nu + 2.0 * uv + nv * nv)),
                 1e-12 * (nu * nu + nv * nv + 2.0 * std::abs(uv)));
    tri.expect_le(space.distance(u, w),
                  space.distance(u, v) + space.distance(v, w) +
                      1e-12 * problem_scale({nu, nv, space.norm(w)}));
    zero.expect_le(std::abs(space.inner(Vector::Zero(n), u)), 1e-15 * nu);
    const double lambda = 3.0 * normal(rng);
    homog.expect_le(std::abs(space.norm(lambda * u) - std::abs(lambda) * nu),
                    1e-13 * std::abs(lambda) * nu);
  }
  for (auto* c : {&cs, &para, &rev, &sq, &tri, &zero, &homog}) out.push_back(std::move(*c));
}

void fixed_point_checks(Rng& rng, std::vector<CheckResult>& out) {
  CheckResult tail{"fixed_point.tail_bound"};
  CheckResult unique{"fixed_point.uniqueness"};
  CheckResult limit{"fixed_point.limit_is_fixed"};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const Eigen::Index n = pick_dim(rng, 1, 6);
    const HilbertSpace space = HilbertSpace::euclidean(n);
    // x -> k Q x + c with Q orthogonal is exactly k-Lipschitz.
    const double k = 0.05 + 0.85 * unit(rng);
    Eigen::HouseholderQR<Matrix> qr(random_normal_matrix(n, n, rng));
    const Matrix q = qr.householderQ();
    const Vector c = random_normal_vector(n, rng);
    ContractionMap map{space, [q, c, k](const Vector& x) -> Vector { return k * (q * x) + c; }, k};
    const Vector fixed = (Matrix::Identity(n, n) - k * q).partialPivLu().solve(c);

    IterateOptions opts;
    opts.tol = 1e-12;
    opts.record_iterates = true;
    const FixedPointReport rep = iterate(map, random_normal_vector(n, rng), opts);
    const double d01 = rep.step_norms.front();
    for (std::size_t p = 0; p < rep.iterates.size(); ++p) {
      tail.expect_le(space.distance(rep.iterates[p], fixed),
                     a_priori_tail_bound(k, d01, p) + 1e-12);
    }
    limit.expect_le(rep.residual, opts.tol);
    opts.record_iterates = false;
    const FixedPointReport other = iterate(map, 10.0 * random_normal_vector(n, rng), opts);
    unique.expect_le(space.distance(rep.fixed_point, other.fixed_point), 2.0 * opts.tol);
  }
  out.push_back(std::move(tail));
  out.push_back(std::move(unique));
  out.push_back(std::move(limit));
}

void projection_checks(Rng& rng, std::vector<CheckResult>& out) {
  CheckResult idem{"projection.idempotence"};
  CheckResult lin{"projection.linearity"};
  CheckResult nonexp{"projection.nonexpansive"};
  CheckResult best{"projection.best_approximation"};
  CheckResult pyth{"projection.pythagoras"};
  CheckResult ortho{"projection.complement_orthogonal"};
  CheckResult minseq{"projection.minimizing_sequence"};
  CheckResult span{"projection.orthogonalized_span"};
  std::normal_distribution<double> normal;
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index n = pick_dim(rng, 2, 8);
    const HilbertSpace space = random_space(rng, n);
    const Subspace sub = random_subspace(space, rng, pick_dim(rng, 1, std::min<Eigen::Index>(4, n - 1)));
    const Vector u = random_normal_vector(n, rng);
    const Vector v = random_normal_vector(n, rng);
    const Vector pu = project(sub, u);
    const double nu = space.norm(u);
    const double scale = problem_scale({nu});

    idem.expect_le(space.distance(project(sub, pu), pu), 1e-12 * problem_scale({space.norm(pu)}));
    const double a = normal(rng);
    const double b = normal(rng);
    const Vector combo = a * u + b * v;
    lin.expect_le(space.distance(project(sub, combo), a * pu + b * project(sub, v)),
                  1e-11 * problem_scale({space.norm(combo), std::abs(a) * nu,
                                         std::abs(b) * space.norm(v)}));
    nonexp.expect_le(space.norm(pu), nu * (1.0 + 1e-12));
    const double dist = space.distance(u, pu);
    for (int c = 0; c < 100; ++c) {
      const Vector w = sub.lift(random_normal_vector(sub.dim(), rng));
      best.expect_le(dist, space.distance(u, w) + 1e-12 * scale);
    }
    const auto [pv, pw] = decompose(sub, u);
    const double np = space.norm(pv);
    const double nw = space.norm(pw);
    pyth.expect_le(std::abs(nu * nu - (np * np + nw * nw)), 1e-11 * nu * nu);
    for (Eigen::Index j = 0; j < sub.dim(); ++j) {
      const Vector bj = sub.basis().col(j);
      ortho.expect_le(std::abs(space.inner(pw, bj)), 1e-10 * scale * space.norm(bj));
    }
    const MinSeqReport ms = project_minseq(sub, u, 1e-8);
    minseq.expect_le(space.distance(ms.limit, pu), 1e-6);

    // F + Line(u) = F + Line(u - P_F u): each side's members project into the other.
    const Subspace with_u(space, [&] {
      Matrix basis(n, sub.dim() + 1);
      basis << sub.basis(), u;
      return basis;
    }());
    const Subspace with_perp(space, [&] {
      Matrix basis(n, sub.dim() + 1);
      basis << sub.basis(), pw;
      return basis;
    }());
    for (int c = 0; c < 5; ++c) {
      const Vector x = with_u.lift(random_normal_vector(with_u.dim(), rng));
      const Vector y = with_perp.lift(random_normal_vector(with_perp.dim(), rng));
      span.expect_le(space.distance(project(with_perp, x), x), 1e-10 * problem_scale({space.norm(x)}));
      span.expect_le(space.distance(project(with_u, y), y), 1e-10 * problem_scale({space.norm(y)}));
    }
  }
  for (auto* c : {&idem, &lin, &nonexp, &best, &pyth, &ortho, &minseq, &span}) {
    out.push_back(std::move(*c));
  }
}

void operator_checks(Rng& rng, std::vector<CheckResult>& out) {
  CheckResult cont{"operators.continuity_inequality"};
  CheckResult coer{"operators.coercivity_inequality"};
  CheckResult order{"operators.alpha_le_C"};
  CheckResult sampled{"operators.dual_norm_sampled_bound"};
  CheckResult rep{"operators.riesz_representation"};
  CheckResult iso{"operators.riesz_isometry"};
  CheckResult constructive{"operators.riesz_constructive"};
  CheckResult rlin{"operators.riesz_linearity"};
  CheckResult abound{"operators.representation_bound"};
  std::normal_distribution<double> normal;
  for (int t = 0; t < 60; ++t) {
    const Eigen::Index n = pick_dim(rng, 1, 10);
    const HilbertSpace space = random_space(rng, n);
    const BilinearForm a{random_normal_matrix(n, n, rng)};
    const FormConstants k = form_constants(space, a);
    for (int s = 0; s < 20; ++s) {
      const Vector u = random_normal_vector(n, rng);
      const Vector v = random_normal_vector(n, rng);
      const double nu = space.norm(u);
      cont.expect_le(std::abs(a(u, v)), k.continuity_C * nu * space.norm(v) * (1.0 + 1e-12));
      const double lower = k.coercivity_alpha * nu * nu;
      coer.expect_le(lower - std::abs(lower) * 1e-12 - 1e-14 * k.continuity_C * nu * nu, a(u, u));
      abound.expect_le(dual_norm(space, representation(space, a, u)),
                       k.continuity_C * nu * (1.0 + 1e-12));
    }
    if (k.coercivity_alpha > 0.0) {
      order.expect_le(k.coercivity_alpha, k.continuity_C * (1.0 + 1e-12));
    }
    const BilinearForm coercive{random_coercive_matrix(space, rng)};
    const FormConstants kc = form_constants(space, coercive);
    order.expect_le(kc.coercivity_alpha, kc.continuity_C * (1.0 + 1e-12));

    const LinearForm f{random_normal_vector(n, rng)};
    const LinearForm g{random_normal_vector(n, rng)};
    const double fn = dual_norm(space, f);
    sampled.expect_le(sampled_sup_ratio(space, f, 200, rng()), fn * (1.0 + 1e-12));
    const Vector tf = riesz(space, f);
    const double scale = problem_scale({fn});
    for (int s = 0; s < 5; ++s) {
      const Vector v = random_normal_vector(n, rng);
      rep.expect_le(std::abs(f(v) - space.inner(tf, v)), 1e-12 * scale * problem_scale({space.norm(v)}));
    }
    iso.expect_le(riesz_isometry_gap(space, f), 1e-11 * scale);
    constructive.expect_le(space.distance(riesz_constructive(space, f), tf), 1e-10 * scale);
    const double x = normal(rng);
    const double y = normal(rng);
    const Vector lhs = riesz(space, LinearForm{x * f.covector + y * g.covector});
    const Vector rhs = x * tf + y * riesz(space, g);
    rlin.expect_le(space.distance(lhs, rhs),
                   1e-11 * problem_scale({space.norm(lhs), std::abs(x) * fn,
                                          std::abs(y) * dual_norm(space, g)}));
  }
  for (auto* c : {&cont, &coer, &order, &sampled, &rep, &iso, &constructive, &rlin, &abound}) {
    out.push_back(std::move(*c));
  }
}

void solver_checks(Rng& rng, std::vector<CheckResult>& out) {
  CheckResult estimate{"laxmilgram.estimate"};
  CheckResult contraction{"laxmilgram.empirical_contraction"};
  CheckResult agree{"laxmilgram.iterative_vs_direct"};
  CheckResult unique{"laxmilgram.uniqueness"};
  CheckResult fixed{"laxmilgram.fixed_point_equivalence"};
  CheckResult orth{"laxmilgram.galerkin_orthogonality"};
  CheckResult cea{"laxmilgram.cea"};
  constexpr double tol = 1e-10;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 40; ++t) {
    const Eigen::Index n = pick_dim(rng, 2, 20);
    const VariationalProblem problem = random_problem(rng, n);
    const double alpha = problem.constants.coercivity_alpha;
    const double c = problem.constants.continuity_C;
    SolveOptions opts;
    opts.tol = tol;
    const SolveReport rep = solve(problem, opts);
    estimate.expect_le(rep.estimate_lhs, rep.estimate_rhs * (1.0 + 1e-10));
    const Vector direct = solve_direct(problem);
    agree.expect_le(problem.space.distance(rep.solution, direct), 10.0 * tol);

    const RhoPolicy policy = rho_policy(alpha, c);
    const double rho = policy.upper * (0.1 + 0.8 * unit(rng));
    const ContractionMap g = iteration_map(problem, rho);
    for (int s = 0; s < 20; ++s) {
      const Vector v = random_normal_vector(n, rng);
      const Vector w = random_normal_vector(n, rng);
      contraction.expect_le(problem.space.distance(g.apply(v), g.apply(w)),
                            g.k * problem.space.distance(v, w) * (1.0 + 1e-10));
    }
    const ContractionMap g_star = iteration_map(problem, rep.rho);
    fixed.expect_le(problem.space.distance(g_star.apply(rep.solution), rep.solution), tol);

    SolveOptions other = opts;
    other.rho = rho;
    other.x0 = random_normal_vector(n, rng);
    unique.expect_le(problem.space.distance(solve(problem, other).solution, rep.solution), 20.0 * tol);

    const Subspace sub = random_subspace(problem.space, rng, pick_dim(rng, 1, n - 1));
    GalerkinOptions gopts;
    gopts.seed = rng();
    const GalerkinReport gr = galerkin_solve(problem, sub, gopts);
    orth.expect_le(gr.orthogonality_residual, 1e-10);
    for (const CeaCheck& check : gr.cea_checks) {
      cea.expect_le(check.lhs, check.rhs * (1.0 + 1e-10) + gr.cea_floor);
    }
  }
  for (auto* c : {&estimate, &contraction, &agree, &unique, &fixed, &orth, &cea}) {
    out.push_back(std::move(*c));
  }
}

void fem_checks(std::vector<CheckResult>& out) {
  CheckResult rate{"fem1d.sine_h1_rate"};
  CheckResult nodal{"fem1d.parabola_nodal_exactness"};
  CheckResult one{"fem1d.poisson_single_iteration"};
  CheckResult cea{"fem1d.cea_against_interpolant"};
  CheckResult nested{"fem1d.nested_galerkin_orthogonality"};

  const auto sine = fem1d::convergence_study("poisson-sine", {8, 16, 32, 64});
  for (const auto& row : sine) {
    if (row.rate) {
      rate.expect_le(0.9, *row.rate);
      rate.expect_le(*row.rate, 1.1);
    }
    one.expect_le(static_cast<double>(row.iterations), 1.0);
    one.expect_le(row.contraction_k, 0.0);
  }
  for (const auto& row : fem1d::convergence_study("poisson-parabola", {4, 8, 16})) {
    nodal.expect_le(row.nodal_error, 1e-12);
  }
  for (const auto& row : fem1d::convergence_study("poisson-sine", {8, 16, 32}, 0.5, 1.0)) {
    cea.expect_le(0.0, row.alpha);
    cea.expect_le(row.alpha, row.continuity);
    cea.expect_le(row.h1_error, row.continuity / row.alpha * row.interpolant_error);
  }
  for (std::size_t n : {4u, 8u}) {
    const GalerkinReport gr = fem1d::nested_galerkin("poisson-sine", n, 4, 0.5, 1.0);
    nested.expect_le(gr.orthogonality_residual, 1e-9);
  }
  for (auto* c : {&rate, &nodal, &one, &cea, &nested}) out.push_back(std::move(*c));
}

}  // namespace

std::vector<CheckResult> run_audit(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> out;
  space_checks(rng, out);
  fixed_point_checks(rng, out);
  projection_checks(rng, out);
  operator_checks(rng, out);
  solver_checks(rng, out);
  fem_checks(out);
  return out;
}

void print_audit(std::ostream& out, const std::vector<CheckResult>& results) {
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %-40s trials=%-6zu failures=%-4zu worst_excess=%.3e",
                  r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.trials, r.failures,
                  r.worst_excess);
    out << line << '\n';
    if (r.passed()) ++passed;
  }
  out << passed << " passed, " << results.size() - passed << " failed\n";
}

}  // namespace laxmilgram
