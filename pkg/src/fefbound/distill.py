"""Reduction criterion and the filtering-necessity decision for distillation.

A state violating the reduction criterion is distillable. If its fidelity
already exceeds ``1/d`` it can be fed to the generalized distillation protocol
directly. If even the Ky Fan upper bound on the FEF is ``<= 1/d`` then no local
unitary can push the fidelity above ``1/d`` and a filtering step is required
first. Between the two nothing is decided.
"""
import enum
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .fef import fef_upper_bound, fidelity
from .linalg_core import hermitian_eigenvalues, partial_trace
from .state import example_family_rho_x, example_family_rho_x_fig1

VIOLATION_TOL = 1e-9
THRESHOLD_SLACK = 1e-9


class Verdict(str, enum.Enum):
    DISTILL_DIRECTLY = "DistillDirectly"
    FILTERING_REQUIRED = "FilteringRequired"
    INDETERMINATE = "Indeterminate"
    NOT_KNOWN_DISTILLABLE = "NotKnownDistillable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DistillAdvice:
    violates_reduction: bool
    min_reduction_eigenvalue: float
    reduction_eigenvalues: tuple
    fidelity: float
    upper_bound: float
    threshold: float
    verdict: Verdict


def reduction_criterion(rho):
    """Minimum eigenvalues of ``rho_A (x) I - rho`` and ``I (x) rho_B - rho``."""
    m = rho.matrix
    rho_a = partial_trace(m, rho.dim_a, rho.dim_b, keep="A")
    rho_b = partial_trace(m, rho.dim_a, rho.dim_b, keep="B")
    op_a = np.kron(rho_a, np.eye(rho.dim_b)) - m
    op_b = np.kron(np.eye(rho.dim_a), rho_b) - m
    return float(hermitian_eigenvalues(op_a)[-1]), float(hermitian_eigenvalues(op_b)[-1])


def advise(rho, basis=None):
    eig_a, eig_b = reduction_criterion(rho)
    lo = min(eig_a, eig_b)
    violates = lo < -VIOLATION_TOL
    f = fidelity(rho)
    ub = fef_upper_bound(rho, basis)
    thr = 1 / rho.d
    if not violates:
        verdict = Verdict.NOT_KNOWN_DISTILLABLE
    elif f > thr + THRESHOLD_SLACK:
        verdict = Verdict.DISTILL_DIRECTLY
    elif ub <= thr + THRESHOLD_SLACK:
        verdict = Verdict.FILTERING_REQUIRED
    else:
        verdict = Verdict.INDETERMINATE
    return DistillAdvice(violates, lo, (eig_a, eig_b), f, ub, thr, verdict)


FAMILIES = {
    "fig1": example_family_rho_x_fig1,
    "literal": example_family_rho_x,
}


def figure1_point(x, family="fig1"):
    """``(F - 1/3, bound - 1/3)`` for the qutrit example family at ``x``."""
    rho = FAMILIES[family](x)
    return fidelity(rho) - 1 / 3, fef_upper_bound(rho) - 1 / 3


def figure1_curves(steps=1000, family="fig1"):
    """Columns ``x, F - 1/3, bound - 1/3`` on the grid ``x = k / steps``."""
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    xs = np.arange(steps + 1) / steps
    vals = np.array([figure1_point(x, family) for x in xs])
    return xs, vals[:, 0], vals[:, 1]


def _refine(f, xs, ys, xtol):
    roots = []
    for i in range(len(xs) - 1):
        if ys[i] == 0:
            roots.append(float(xs[i]))
        elif ys[i] * ys[i + 1] < 0:
            roots.append(bisect(f, xs[i], xs[i + 1], xtol=xtol))
    if len(ys) and ys[-1] == 0:
        roots.append(float(xs[-1]))
    return roots


def figure1_thresholds(steps=1000, family="fig1", xtol=1e-10):
    """Sign changes of ``F - 1/3`` and ``bound - 1/3`` along the family.

    Located on the ``steps`` grid and refined by bisection to ``xtol``.
    Returns ``{"fidelity": [...], "bound": [...]}``.
    """
    xs, fid, ub = figure1_curves(steps, family)
    return {
        "fidelity": _refine(lambda x: figure1_point(x, family)[0], xs, fid, xtol),
        "bound": _refine(lambda x: figure1_point(x, family)[1], xs, ub, xtol),
    }
