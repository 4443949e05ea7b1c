"""Generalized Gell-Mann generators of SU(d), normalized to Tr(l_i l_j) = 2 delta_ij."""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidDimension, NotOrthogonal

ORTHOGONAL_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class GeneratorBasis:
    """An ordered set of ``d**2 - 1`` traceless Hermitian ``d x d`` matrices.

    ``generators`` has shape ``(d**2 - 1, d, d)`` and is read-only.
    """

    d: int
    generators: np.ndarray

    def __post_init__(self):
        self.generators.setflags(write=False)

    def __len__(self):
        return self.generators.shape[0]

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i):
        return self.generators[i]

    def gram(self):
        """Matrix of ``Tr(l_i l_j)``."""
        g = self.generators
        return np.einsum("iab,jba->ij", g, g)


@lru_cache(maxsize=None)
def build_generator_basis(d):
    """Canonical generalized Gell-Mann basis for SU(d).

    Ordering: symmetric ``E_kl + E_lk`` for ``k < l`` (lexicographic), then
    antisymmetric ``-i (E_kl - E_lk)`` in the same order, then the ``d - 1``
    diagonal generators. For ``d = 2`` this gives the Pauli matrices x, y, z.
    """
    if int(d) != d or d < 2:
        raise InvalidDimension(f"SU(d) basis needs integer d >= 2, got {d}")
    d = int(d)
    pairs = [(k, l) for k in range(d) for l in range(k + 1, d)]
    out = []
    for k, l in pairs:
        g = np.zeros((d, d), dtype=np.complex128)
        g[k, l] = g[l, k] = 1
        out.append(g)
    for k, l in pairs:
        g = np.zeros((d, d), dtype=np.complex128)
        g[k, l] = -1j
        g[l, k] = 1j
        out.append(g)
    for l in range(1, d):
        diag = np.zeros(d)
        diag[:l] = 1
        diag[l] = -l
        out.append(np.sqrt(2 / (l * (l + 1))) * np.diag(diag).astype(np.complex128))
    return GeneratorBasis(d, np.array(out))


def check_completeness(basis):
    """Maximum violation of the SU(d) completeness relation.

    Returns ``max |sum_j (l_j)_ki (l_j)_mn - 2 delta_im delta_kn + (2/d) delta_ki delta_mn|``
    over all index tuples ``(k, i, m, n)``.
    """
    d = basis.d
    lhs = np.einsum("jki,jmn->kimn", basis.generators, basis.generators)
    eye = np.eye(d)
    rhs = 2 * np.einsum("im,kn->kimn", eye, eye) - (2 / d) * np.einsum("ki,mn->kimn", eye, eye)
    return float(np.max(np.abs(lhs - rhs)))


def rotate_basis(basis, o, tol=ORTHOGONAL_TOL):
    """New basis ``l'_i = sum_j o_ij l_j`` for a real orthogonal ``o``."""
    o = np.asarray(o)
    n = len(basis)
    if o.shape != (n, n):
        raise NotOrthogonal(f"rotation must be {n}x{n}, got {o.shape}")
    if np.iscomplexobj(o):
        if np.max(np.abs(o.imag)) > tol:
            raise NotOrthogonal("rotation has non-real entries")
        o = o.real
    dev = float(np.max(np.abs(o @ o.T - np.eye(n))))
    if dev > tol:
        raise NotOrthogonal(f"|o o^T - I| = {dev:.3e} exceeds {tol:g}", dev)
    return GeneratorBasis(basis.d, np.einsum("ij,jab->iab", o, basis.generators))
