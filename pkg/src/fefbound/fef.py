"""Fidelity, the Ky Fan upper bound on the fully entangled fraction, and two-qubit values.

The fully entangled fraction of ``rho`` on ``H (x) H`` is the largest overlap
``<psi_+|(I (x) U^dagger) rho (I (x) U)|psi_+>`` over unitaries ``U``. Writing
``U l_j U^dagger = sum_k O_jk l_k`` turns the maximization into one over a
subset of orthogonal matrices ``O``; relaxing to all of O(d^2-1) gives

    FEF(rho) <= 1/d^2 + 4 ||M(rho)^T M(P_+)||_KF.

For qubits the image of U(2) is exactly SO(3), not O(3), so the relaxation is
tight only when ``det(M(rho)^T M(P_+)) >= 0``. :func:`fef_two_qubit_exact`
maximizes over SO(3) instead and agrees with the Bell-basis eigenvalue formula
:func:`fef_two_qubit_bell`.
"""
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .bloch import correlation_matrix
from .errors import DimensionMismatch, OutOfRange
from .generators import build_generator_basis
from .linalg_core import hermitian_eigenvalues, ky_fan_norm, singular_values
from .state import max_entangled_projector, max_entangled_vector

# columns are the four Bell states; transcribed row by row from the printed matrix
BELL_MATRIX = np.array([
    [1, 0, 0, 1j],
    [0, 1j, -1, 0],
    [0, 1j, 1, 0],
    [1, 0, 0, -1j],
]) / np.sqrt(2)
assert np.max(np.abs(BELL_MATRIX.conj().T @ BELL_MATRIX - np.eye(4))) < 1e-12
BELL_MATRIX.setflags(write=False)


def fidelity(rho):
    """``F(rho) = <psi_+|rho|psi_+>`` (singlet fraction without optimization)."""
    v = max_entangled_vector(rho.d)
    val = v.conj() @ rho.matrix @ v
    assert abs(val.imag) < 1e-12, val
    assert val.real >= -1e-10, val
    return float(val.real)


def _basis_for(rho, basis):
    basis = build_generator_basis(rho.d) if basis is None else basis
    if basis.d != rho.dim_a or basis.d != rho.dim_b:
        raise DimensionMismatch(
            f"state dims ({rho.dim_a}, {rho.dim_b}) do not match SU({basis.d}) basis")
    return basis


def bound_matrix(rho, basis=None):
    """``M(rho)^T M(P_+)``, both correlation matrices taken in ``basis``."""
    basis = _basis_for(rho, basis)
    m_rho = correlation_matrix(rho, basis)
    m_plus = correlation_matrix(max_entangled_projector(basis.d), basis)
    return m_rho.T @ m_plus


def fef_upper_bound(rho, basis=None):
    """``1/d^2 + 4 ||M(rho)^T M(P_+)||_KF``; not clamped to 1."""
    basis = _basis_for(rho, basis)
    return 1 / basis.d**2 + 4 * ky_fan_norm(bound_matrix(rho, basis))


def _require_two_qubit(rho):
    if rho.dim_a != 2 or rho.dim_b != 2:
        raise DimensionMismatch(f"two-qubit formula needs dims (2, 2), got ({rho.dim_a}, {rho.dim_b})")


def fef_two_qubit_kyfan(rho):
    """Ky Fan expression at d = 2 (the d = 2 instance of :func:`fef_upper_bound`).

    Overestimates the FEF whenever ``det M(rho) > 0``; see the module docstring.
    """
    _require_two_qubit(rho)
    return 0.25 + 4 * ky_fan_norm(bound_matrix(rho))


def fef_two_qubit_exact(rho):
    """Two-qubit FEF as a maximization of ``Tr(A O)`` over rotations ``O`` in SO(3).

    For ``A = M(rho)^T M(P_+)`` with singular values ``s1 >= s2 >= s3`` the
    maximum is ``s1 + s2 + sign(det A) s3``.
    """
    _require_two_qubit(rho)
    a = bound_matrix(rho)
    s = singular_values(a)
    sign = -1.0 if np.linalg.det(a) < 0 else 1.0
    return 0.25 + 4 * float(s[0] + s[1] + sign * s[2])


def fef_two_qubit_bell(rho):
    """Largest eigenvalue of ``Re(B^dagger rho B)`` with ``B`` the Bell-basis matrix."""
    _require_two_qubit(rho)
    t = BELL_MATRIX.conj().T @ rho.matrix @ BELL_MATRIX
    return float(hermitian_eigenvalues(t.real)[0])


def normalized_fef(fef_value):
    """``max(2 F - 1, 0)``."""
    if not -1e-12 <= fef_value <= 1 + 1e-9:
        raise OutOfRange(f"FEF value must lie in [0, 1], got {fef_value}")
    return max(2 * fef_value - 1, 0.0)


@dataclass
class FefReport:
    d: int
    fidelity: float
    upper_bound: float
    exact_two_qubit: Optional[float] = None
    kyfan_two_qubit: Optional[float] = None
    oracle_lower: Optional[float] = None
    normalized: Optional[float] = None

    @property
    def threshold(self):
        return 1 / self.d

    def to_dict(self):
        out = asdict(self)
        out["threshold"] = self.threshold
        return out


def fef_report(rho, basis=None, oracle_config=None):
    """Collect every FEF-related number for ``rho`` in one report.

    ``exact_two_qubit`` (d = 2 only) comes from the SO(3) form and is checked
    against the Bell-basis formula. ``oracle_lower`` is filled only when an
    :class:`~fefbound.oracle.OracleConfig` is passed.
    """
    d = rho.d
    rep = FefReport(d=d, fidelity=fidelity(rho), upper_bound=fef_upper_bound(rho, basis))
    if d == 2:
        exact = fef_two_qubit_exact(rho)
        bell = fef_two_qubit_bell(rho)
        assert abs(exact - bell) < 1e-9, (exact, bell)
        rep.exact_two_qubit = exact
        rep.kyfan_two_qubit = fef_two_qubit_kyfan(rho)
        rep.normalized = normalized_fef(min(exact, 1.0))
    if oracle_config is not None:
        from .oracle import oracle_fef
        rep.oracle_lower = oracle_fef(rho, oracle_config).best_value
    return rep
