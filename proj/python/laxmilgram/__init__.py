"""Coercive variational problems on finite-dimensional Hilbert spaces."""

from .errors import LaxMilgramError
from ._core import (
    BilinearFormConstants,
    GalerkinReport,
    HilbertSpace,
    LevelResult,
    RhoPolicy,
    SolveReport,
    Subspace,
    VariationalProblem,
    coercivity_constant,
    contraction_factor,
    continuity_constant,
    convergence_study,
    decompose,
    dual_norm,
    galerkin_solve,
    make_problem,
    manufactured_case_ids,
    nested_galerkin,
    project,
    project_minseq,
    rho_policy,
    riesz,
    riesz_constructive,
    riesz_isometry_gap,
    run_audit,
    sampled_sup_ratio,
    solve,
    solve_direct,
)

__all__ = [name for name in dir() if not name.startswith("_")]
