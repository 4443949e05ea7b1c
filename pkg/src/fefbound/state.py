"""Validated bipartite density matrices and the special states used throughout.

The computational basis state ``|ij>`` lives at row ``i * dim_b + j``.
"""
from dataclasses import InitVar, dataclass

import numpy as np

from .errors import (DimensionMismatch, InvalidDimension, NotHermitian, NotPositive,
                     OutOfRange, TraceNotOne)
from .linalg_core import HERMITIAN_TOL, as_matrix, hermitian_deviation, hermitian_eigenvalues

TRACE_TOL = 1e-9
PSD_SLACK = 1e-9


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Bipartite state on ``H_A (x) H_B``.

    Construction validates Hermiticity, unit trace and positivity (eigenvalues
    down to ``-PSD_SLACK`` are accepted unmodified). ``check=False`` skips
    validation; it exists for the unnormalized operator behind the Fig. 1
    curves (see :func:`example_family_rho_x_fig1`) and should not be used for
    anything else.
    """

    matrix: np.ndarray
    dim_a: int
    dim_b: int
    check: InitVar[bool] = True

    def __post_init__(self, check):
        m = as_matrix(self.matrix).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        for dim in (self.dim_a, self.dim_b):
            if int(dim) != dim or dim < 2:
                raise InvalidDimension(f"subsystem dimension must be >= 2, got {dim}")
        n = self.dim_a * self.dim_b
        if m.shape != (n, n):
            raise DimensionMismatch(
                f"matrix of shape {m.shape} does not match dims ({self.dim_a}, {self.dim_b})")
        if check:
            _validate_matrix(m)

    @property
    def d(self):
        """Local dimension for ``H (x) H`` states."""
        if self.dim_a != self.dim_b:
            raise DimensionMismatch(
                f"operation needs equal subsystem dims, got ({self.dim_a}, {self.dim_b})")
        return self.dim_a

    def eigenvalues(self):
        return hermitian_eigenvalues(self.matrix)


def _validate_matrix(m):
    dev = hermitian_deviation(m)
    if dev > HERMITIAN_TOL:
        raise NotHermitian(f"matrix deviates from Hermitian by {dev:.3e}", dev)
    tr_dev = abs(np.trace(m) - 1)
    if tr_dev > TRACE_TOL:
        raise TraceNotOne(f"trace deviates from 1 by {tr_dev:.6g}", float(tr_dev))
    lo = hermitian_eigenvalues(m)[-1]
    if lo < -PSD_SLACK:
        raise NotPositive(f"minimum eigenvalue {lo:.6g} is negative", float(lo))


def validate(m, dim_a, dim_b):
    """Check ``m`` and wrap it as a :class:`DensityMatrix`."""
    return DensityMatrix(m, dim_a, dim_b)


def max_entangled_vector(d):
    """``|psi_+> = sum_i |ii> / sqrt(d)``."""
    v = np.zeros(d * d, dtype=np.complex128)
    v[np.arange(d) * (d + 1)] = 1 / np.sqrt(d)
    return v


def max_entangled_projector(d):
    if int(d) != d or d < 2:
        raise InvalidDimension(f"d must be an integer >= 2, got {d}")
    v = max_entangled_vector(int(d))
    return DensityMatrix(np.outer(v, v.conj()), d, d)


def maximally_mixed(d):
    return DensityMatrix(np.eye(d * d) / d**2, d, d)


def _check_x(x):
    if not 0 <= x <= 1:
        raise OutOfRange(f"x must lie in [0, 1], got {x}")


def example_family_rho_x(x):
    """Qutrit family ``(8/9) sigma + (1/9) P_+`` with ``sigma = tau (x) tau``.

    ``tau = x|0><0| + (1-x)|1><1|`` (a normalized mixed qutrit state), which is
    the literal reading of the printed formula. The result is a valid state for
    every ``x`` in [0, 1].
    """
    _check_x(x)
    tau = np.diag([x, 1 - x, 0.0])
    m = (8 / 9) * np.kron(tau, tau) + (1 / 9) * max_entangled_projector(3).matrix
    return DensityMatrix(m, 3, 3)


def example_family_rho_x_fig1(x):
    """Operator whose curves match the published Fig. 1.

    Uses the rank-one ``tau = |phi><phi|`` with the unnormalized
    ``phi = x|0> + (1-x)|1>``. This reproduces the quoted thresholds
    0.0722 / 0.9278 (fidelity) and 0.1188 / 0.8811 (bound) and the constant
    reduction eigenvalue -2/27, none of which the literal family
    :func:`example_family_rho_x` produces. Its trace is
    ``(8/9)(x^2 + (1-x)^2)^2 + 1/9``, so it is not a normalized state and is
    returned unvalidated.
    """
    _check_x(x)
    phi = np.array([x, 1 - x, 0.0])
    tau = np.outer(phi, phi)
    m = (8 / 9) * np.kron(tau, tau) + (1 / 9) * max_entangled_projector(3).matrix
    return DensityMatrix(m, 3, 3, check=False)


def random_density_matrix(n, rng, rank=None):
    """Random ``n x n`` state ``G G^dagger / Tr`` from a complex Ginibre matrix."""
    k = n if rank is None else rank
    g = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
    m = g @ g.conj().T
    m = m / np.trace(m).real
    return 0.5 * (m + m.conj().T)


def random_state(d, rng, rank=None):
    return DensityMatrix(random_density_matrix(d * d, rng, rank), d, d)


def local_unitary(rho, u, side="B"):
    """Apply ``I (x) U`` (``side="B"``) or ``U (x) I`` to ``rho``."""
    if side == "B":
        op = np.kron(np.eye(rho.dim_a), u)
    elif side == "A":
        op = np.kron(u, np.eye(rho.dim_b))
    else:
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return DensityMatrix(op @ rho.matrix @ op.conj().T, rho.dim_a, rho.dim_b)
