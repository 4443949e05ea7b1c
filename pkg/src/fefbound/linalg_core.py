"""Dense complex-matrix primitives.

Matrices are plain :class:`numpy.ndarray` objects. Every function here is pure
and deterministic for a fixed input (LAPACK eigen/SVD drivers, no randomized
solvers).
"""
import numpy as np

from .errors import DimensionMismatch, NonFinite, NonSquare, NotHermitian

HERMITIAN_TOL = 1e-9


def as_matrix(m):
    """Return ``m`` as a finite 2-D complex array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NonFinite("matrix contains NaN or Inf entries")
    return a


def hermitian_deviation(m):
    """Largest entrywise ``|m - m^dagger|``."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NonSquare(f"matrix of shape {a.shape} is not square")
    return float(np.max(np.abs(a - a.conj().T), initial=0.0))


def hermitian_eigenvalues(m, tol=HERMITIAN_TOL):
    """Eigenvalues of a Hermitian matrix, sorted in descending order.

    The input is symmetrized as ``(m + m^dagger) / 2`` before decomposition, so
    matrices carrying round-off asymmetry below ``tol`` are accepted.

    Raises
    ------
    NonSquare
        If ``m`` is not square.
    NotHermitian
        If the entrywise deviation from Hermiticity exceeds ``tol``.
    """
    a = as_matrix(m)
    dev = hermitian_deviation(a)
    if dev > tol:
        raise NotHermitian(f"matrix deviates from Hermitian by {dev:.3e}", dev)
    herm = 0.5 * (a + a.conj().T)
    return np.linalg.eigvalsh(herm)[::-1]


def singular_values(m):
    """Singular values sorted descending; ``min(rows, cols)`` of them."""
    return np.linalg.svd(as_matrix(m), compute_uv=False)


def ky_fan_norm(m):
    """Sum of all singular values, ``Tr sqrt(M M^dagger)`` (trace norm)."""
    return float(np.sum(singular_values(m)))


def kron(a, b):
    # index convention (i*rows_b + k, j*cols_b + l) is numpy's
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace(m, dim_a, dim_b, keep="A"):
    """Reduced matrix of one subsystem of a bipartite operator.

    Parameters
    ----------
    m : array_like
        Operator on ``H_A (x) H_B`` with ``|ij>`` stored at row ``i*dim_b + j``.
    dim_a, dim_b : int
        Subsystem dimensions.
    keep : {"A", "B"}
        Which subsystem survives. ``keep="A"`` traces out B.
    """
    a = as_matrix(m)
    n = dim_a * dim_b
    if a.shape != (n, n):
        raise DimensionMismatch(
            f"matrix of shape {a.shape} does not match dims ({dim_a}, {dim_b})")
    t = a.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep == "A":
        return np.einsum("ijkj->ik", t)
    if keep == "B":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def random_unitary(d, rng):
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_orthogonal(n, rng):
    """Haar-random real orthogonal matrix via QR of a Gaussian matrix."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))
