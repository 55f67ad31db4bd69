import math

import numpy as np
import pytest

import laxmilgram as lm


def test_space_and_inner_product():
    g = lm.HilbertSpace(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert g.dim == 2
    assert g.inner([1.0, 1.0], [1.0, 1.0]) == pytest.approx(6.0)
    assert lm.HilbertSpace.euclidean(2).norm([3.0, 4.0]) == pytest.approx(5.0)


def test_errors_carry_a_code():
    with pytest.raises(lm.LaxMilgramError) as info:
        lm.HilbertSpace(np.array([[1.0, 2.0], [2.0, 1.0]]))
    assert info.value.code == "NotPositiveDefinite"
    with pytest.raises(lm.LaxMilgramError) as info:
        lm.rho_policy(0.0, 1.0)
    assert info.value.code == "NotCoercive"


def test_riesz_routes():
    g = lm.HilbertSpace(np.array([[2.0, 1.0], [1.0, 2.0]]))
    tau = lm.riesz(g, [1.0, 0.0])
    np.testing.assert_allclose(tau, [2 / 3, -1 / 3], atol=1e-15)
    np.testing.assert_allclose(lm.riesz_constructive(g, [1.0, 0.0]), tau, atol=1e-12)
    assert lm.riesz_isometry_gap(g, [1.0, 0.0]) <= 1e-14
    assert lm.dual_norm(lm.HilbertSpace(2 * np.eye(2)), [1.0, 0.0]) == pytest.approx(1 / math.sqrt(2))


def test_constants_and_step_policy():
    e2 = lm.HilbertSpace.euclidean(2)
    a = np.array([[2.0, 1.0], [0.0, 2.0]])
    assert lm.coercivity_constant(e2, a) == pytest.approx(1.5)
    policy = lm.rho_policy(1.0, 2.0)
    assert (policy.upper, policy.rho_star) == (0.5, 0.25)
    assert policy.k_star == pytest.approx(math.sqrt(3) / 2)
    assert lm.contraction_factor(1.0, 1.0, 1.0) == 0.0


def test_solve_and_direct_agree():
    p = lm.make_problem(np.eye(2), np.array([[2.0, 1.0], [0.0, 2.0]]), np.array([1.0, 1.0]))
    report = lm.solve(p, tol=1e-12)
    np.testing.assert_allclose(lm.solve_direct(p), [0.5, 0.25], atol=1e-15)
    np.testing.assert_allclose(report.solution, [0.5, 0.25], atol=1e-9)
    assert report.estimate_lhs <= report.estimate_rhs * (1 + 1e-10)

    identity = lm.make_problem(np.eye(2), np.eye(2), np.array([1.0, 0.0]))
    r = lm.solve(identity)
    assert r.iterations == 1
    assert list(r.solution) == [1.0, 0.0]


def test_projection_and_minimizing_sequence():
    g = lm.HilbertSpace(np.array([[2.0, 1.0], [1.0, 2.0]]))
    sub = lm.Subspace(g, np.array([[1.0], [0.0]]))
    np.testing.assert_allclose(lm.project(sub, [0.0, 1.0]), [0.5, 0.0], atol=1e-15)
    v, w = lm.decompose(sub, [0.0, 1.0])
    np.testing.assert_allclose(v + w, [0.0, 1.0], atol=1e-15)
    seq = lm.project_minseq(sub, np.array([0.0, 1.0]), tol=1e-10)
    np.testing.assert_allclose(seq["limit"], [0.5, 0.0], atol=1e-9)


def test_galerkin_report():
    p = lm.make_problem(np.eye(2), np.eye(2), np.array([1.0, 1.0]))
    sub = lm.Subspace(p.space, np.array([[1.0], [0.0]]))
    report = lm.galerkin_solve(p, sub)
    np.testing.assert_allclose(report.u_h, [1.0, 0.0], atol=1e-12)
    assert report.orthogonality_residual <= 1e-10
    assert report.cea_holds()
    assert len(report.cea_checks) == 21


def test_fem_convergence():
    table = lm.convergence_study("poisson-sine", [8, 16, 32, 64])
    assert [row.n_cells for row in table] == [8, 16, 32, 64]
    assert table[0].rate is None
    assert all(0.9 <= row.rate <= 1.1 for row in table[1:])
    assert all(row.iterations == 1 for row in table)
    assert set(lm.manufactured_case_ids()) >= {"poisson-sine", "poisson-parabola"}
    with pytest.raises(lm.LaxMilgramError) as info:
        lm.convergence_study("no-such-case", [8])
    assert info.value.code == "UnknownCase"


def test_audit_suite_passes():
    results = lm.run_audit(0)
    assert results
    assert all(r["passed"] for r in results)
