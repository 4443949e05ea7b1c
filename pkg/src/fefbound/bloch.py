"""Generator expansion of a bipartite state: local vectors r, s and correlation matrix M.

    rho = I(x)I / d^2 + (1/d) sum_i r_i l_i(x)I + (1/d) sum_j s_j I(x)l_j
          + sum_ij m_ij l_i(x)l_j

with ``r_i = Tr(rho l_i(x)I) / 2``, ``s_j = Tr(rho I(x)l_j) / 2`` and
``m_ij = Tr(rho l_i(x)l_j) / 4``. The same generator set acts on both sides, so
only ``dim_a == dim_b`` states are accepted.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ImaginaryResidue, NotPositive, ReconstructionNotPositive
from .state import DensityMatrix

IMAG_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class BlochDecomposition:
    d: int
    r: np.ndarray
    s: np.ndarray
    m: np.ndarray


def _check_dims(rho, basis):
    if rho.dim_a != basis.d or rho.dim_b != basis.d:
        raise DimensionMismatch(
            f"state dims ({rho.dim_a}, {rho.dim_b}) do not match SU({basis.d}) basis")


def _real(z, what):
    res = float(np.max(np.abs(np.imag(z)), initial=0.0))
    if res > IMAG_TOL:
        raise ImaginaryResidue(f"{what} has imaginary residue {res:.3e}", res)
    return np.real(z).copy()


def correlation_matrix(rho, basis):
    """``M(rho)`` alone; skips the local vectors."""
    _check_dims(rho, basis)
    d = basis.d
    t = rho.matrix.reshape(d, d, d, d)
    g = basis.generators
    # Tr(rho (l_i (x) l_j)) = sum rho[a,b,c,e] l_i[c,a] l_j[e,b]
    return _real(0.25 * np.einsum("abce,ica,jeb->ij", t, g, g, optimize=True), "M")


def decompose(rho, basis):
    """Coefficients ``(r, s, M)`` of ``rho`` in ``basis``.

    Raises :class:`ImaginaryResidue` if any defining trace has an imaginary part
    above 1e-10, which only happens for corrupted (non-Hermitian) input.
    """
    _check_dims(rho, basis)
    d = basis.d
    t = rho.matrix.reshape(d, d, d, d)
    rho_a = np.einsum("ijkj->ik", t)
    rho_b = np.einsum("ijil->jl", t)
    g = basis.generators
    r = _real(0.5 * np.einsum("ab,iba->i", rho_a, g), "r")
    s = _real(0.5 * np.einsum("ab,iba->i", rho_b, g), "s")
    return BlochDecomposition(d, r, s, correlation_matrix(rho, basis))


def reconstruct(dec, basis):
    """Inverse of :func:`decompose`; the result is validated as a state."""
    d = basis.d
    n = len(basis)
    if dec.d != d or dec.r.shape != (n,) or dec.s.shape != (n,) or dec.m.shape != (n, n):
        raise DimensionMismatch(f"decomposition does not fit an SU({d}) basis")
    g = basis.generators
    eye = np.eye(d)
    a_part = np.einsum("i,iab->ab", dec.r, g)
    b_part = np.einsum("j,jab->ab", dec.s, g)
    m = (np.eye(d * d) / d**2
         + np.kron(a_part, eye) / d
         + np.kron(eye, b_part) / d
         + np.einsum("ij,iac,jbe->abce", dec.m, g, g).reshape(d * d, d * d))
    try:
        return DensityMatrix(m, d, d)
    except NotPositive as exc:
        raise ReconstructionNotPositive(str(exc), exc.magnitude) from exc
