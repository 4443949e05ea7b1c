"""Three-qubit pure states: the AB|C cut, concurrence, and the FEF-concurrence inequality.

For a pure state with Schmidt coefficients ``eta1 >= eta2`` across AB|C the
concurrence is ``C = 2 eta1 eta2`` and

    F_N(rho_AB) <= sqrt(1 - C^2) = eta1^2 - eta2^2,

where ``F_N = max(2 FEF - 1, 0)``. Amplitudes are indexed ``4a + 2b + c``.
"""
from dataclasses import dataclass

import numpy as np

from .errors import NormViolation
from .fef import fef_two_qubit_bell, fef_two_qubit_exact, fef_two_qubit_kyfan, normalized_fef
from .state import DensityMatrix

NORM_TOL = 1e-10
SLACK_TOL = 1e-9

_FEF_METHODS = {
    "exact": fef_two_qubit_exact,
    "bell": fef_two_qubit_bell,
    "kyfan": fef_two_qubit_kyfan,
}


@dataclass(frozen=True, eq=False)
class TriPureState:
    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if a.shape != (8,):
            raise NormViolation(f"three-qubit state needs 8 amplitudes, got {a.size}")
        dev = abs(np.linalg.norm(a) - 1)
        if dev > NORM_TOL:
            raise NormViolation(f"state norm deviates from 1 by {dev:.3e}", dev)
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)


@dataclass(frozen=True)
class SchmidtData:
    eta1: float
    eta2: float


@dataclass(frozen=True)
class WParams:
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        if min(self.alpha, self.beta, self.gamma) < 0:
            raise NormViolation("W amplitudes must be nonnegative")
        dev = abs(self.alpha**2 + self.beta**2 + self.gamma**2 - 1)
        if dev > NORM_TOL:
            raise NormViolation(f"alpha^2 + beta^2 + gamma^2 deviates from 1 by {dev:.3e}", dev)


@dataclass(frozen=True)
class Theorem3Result:
    fef_n: float
    bound: float
    slack: float


def schmidt_ab_c(psi):
    s = np.linalg.svd(psi.amplitudes.reshape(4, 2), compute_uv=False)
    return SchmidtData(float(s[0]), float(s[1]))


def reduced_ab(psi):
    """``Tr_C |psi><psi|`` as a two-qubit state."""
    t = psi.amplitudes.reshape(4, 2)
    return DensityMatrix(t @ t.conj().T, 2, 2)


def concurrence_ab_c(psi):
    """``2 eta1 eta2``, cross-checked against ``sqrt(2 (1 - Tr rho_AB^2))``."""
    sd = schmidt_ab_c(psi)
    c = 2 * sd.eta1 * sd.eta2
    rho_ab = reduced_ab(psi).matrix
    purity = float(np.real(np.trace(rho_ab @ rho_ab)))
    # compare squares: the sqrt amplifies round-off near product states
    assert abs(c * c - 2 * (1 - purity)) < 1e-10, (c, purity)
    return c


def concurrence_ab_c_purity(psi):
    rho_ab = reduced_ab(psi).matrix
    purity = float(np.real(np.trace(rho_ab @ rho_ab)))
    return float(np.sqrt(max(2 * (1 - purity), 0.0)))


def theorem3_check(psi, method="exact"):
    """Evaluate both sides of ``F_N(rho_AB) <= sqrt(1 - C^2)``.

    ``method`` picks the two-qubit FEF routine: ``"exact"`` (SO(3) form),
    ``"bell"`` or ``"kyfan"``.
    """
    fef = _FEF_METHODS[method](reduced_ab(psi))
    fef_n = normalized_fef(min(fef, 1.0))
    sd = schmidt_ab_c(psi)
    bound = sd.eta1**2 - sd.eta2**2
    slack = bound - fef_n
    assert slack >= -SLACK_TOL, (fef_n, bound)
    return Theorem3Result(fef_n, bound, slack)


def w_state(p, phases=(0.0, 0.0, 0.0)):
    """``alpha e^{i p0}|100> + beta e^{i p1}|010> + gamma e^{i p2}|001>``."""
    a = np.zeros(8, dtype=np.complex128)
    a[4] = p.alpha * np.exp(1j * phases[0])
    a[2] = p.beta * np.exp(1j * phases[1])
    a[1] = p.gamma * np.exp(1j * phases[2])
    return TriPureState(a)


def w_params_equal(gamma):
    """``alpha = beta = sqrt((1 - gamma^2) / 2)``."""
    ab = np.sqrt(max(1 - gamma**2, 0.0) / 2)
    return WParams(ab, ab, gamma)


def w_closed_forms(p):
    """Closed-form ``(F_N, C)`` for the generalized W state."""
    a, b, g = p.alpha, p.beta, p.gamma
    fef_n = -0.5 + 2 * a * b + 0.5 * abs(a**2 + b**2 - g**2)
    return max(fef_n, 0.0), 2 * g * np.sqrt(a**2 + b**2)


def random_tri_pure_state(rng):
    """Haar-random pure state: 8 standard complex Gaussians, normalized."""
    z = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    return TriPureState(z / np.linalg.norm(z))
