"""Direct numerical maximization of the fully entangled fraction over U(d).

Shares no code with the Ky Fan bound: the objective is evaluated straight from
the definition, ``<psi_+|(I (x) U^dagger) rho (I (x) U)|psi_+>``, with
``U = exp(iH)`` for Hermitian ``H`` built from ``d^2`` real parameters. Each
restart runs a Nelder-Mead simplex from a seeded Gaussian start; restart 0
starts at ``U = I``. The result is a lower bound on the FEF, never a
certificate of the maximum.
"""
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import DimensionMismatch

START_SCALE = np.pi / 2
SIMPLEX_STEP = 0.5


@dataclass(frozen=True)
class OracleConfig:
    seed: int
    restarts: int = 32
    max_iters: int = 500
    step_tol: float = 1e-8

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1 or not self.step_tol > 0:
            raise ValueError("restarts, max_iters and step_tol must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class OracleResult:
    best_value: float
    best_unitary: np.ndarray
    best_restart: int
    values: np.ndarray  # best value reached by each restart


@njit(cache=True)
def _unitary(p, d):
    h = np.zeros((d, d), dtype=np.complex128)
    for k in range(d):
        h[k, k] = p[k]
    idx = d
    n_off = d * (d - 1) // 2
    for k in range(d):
        for l in range(k + 1, d):
            z = p[idx] + 1j * p[idx + n_off]
            h[k, l] = z
            h[l, k] = np.conj(z)
            idx += 1
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * w)) @ v.conj().T


@njit(cache=True)
def _overlap(p, rho, d):
    u = _unitary(p, d)
    # (I (x) U)|psi_+> has amplitude U[j, i] / sqrt(d) at |ij>
    vec = np.ascontiguousarray(u.T).reshape(d * d) / np.sqrt(d)
    return (np.conj(vec) @ (rho @ vec)).real


@njit(cache=True)
def _nelder_mead(p0, rho, d, max_iters, ftol, xtol, step):
    """Maximize ``_overlap`` from ``p0``; returns (best params, best value)."""
    n = p0.size
    sim = np.empty((n + 1, n))
    fs = np.empty(n + 1)
    sim[0] = p0
    for i in range(n):
        sim[i + 1] = p0
        sim[i + 1, i] += step
    for i in range(n + 1):
        fs[i] = -_overlap(sim[i], rho, d)
    for _ in range(max_iters):
        order = np.argsort(fs)
        sim = sim[order]
        fs = fs[order]
        if (np.max(np.abs(fs[1:] - fs[0])) <= ftol
                and np.max(np.abs(sim[1:] - sim[0])) <= xtol):
            break
        centroid = np.sum(sim[:-1], axis=0) / n
        xr = centroid + (centroid - sim[-1])
        fr = -_overlap(xr, rho, d)
        if fr < fs[0]:
            xe = centroid + 2.0 * (centroid - sim[-1])
            fe = -_overlap(xe, rho, d)
            if fe < fr:
                sim[-1] = xe
                fs[-1] = fe
            else:
                sim[-1] = xr
                fs[-1] = fr
        elif fr < fs[-2]:
            sim[-1] = xr
            fs[-1] = fr
        else:
            if fr < fs[-1]:
                xc = centroid + 0.5 * (xr - centroid)
            else:
                xc = centroid + 0.5 * (sim[-1] - centroid)
            fc = -_overlap(xc, rho, d)
            if fc < min(fr, fs[-1]):
                sim[-1] = xc
                fs[-1] = fc
            else:
                for i in range(1, n + 1):
                    sim[i] = sim[0] + 0.5 * (sim[i] - sim[0])
                    fs[i] = -_overlap(sim[i], rho, d)
    best = np.argmin(fs)
    return sim[best].copy(), -fs[best]


def params_to_unitary(p, d):
    return _unitary(np.asarray(p, dtype=np.float64), d)


def overlap(rho_matrix, u):
    """Objective value for a given unitary, computed directly in numpy."""
    d = u.shape[0]
    vec = u.T.reshape(d * d) / np.sqrt(d)
    return float(np.real(vec.conj() @ rho_matrix @ vec))


def restart_starts(cfg, d):
    """Starting parameter vectors, one per restart; prefix-stable in ``restarts``."""
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    starts = [np.zeros(d * d)]
    for child in children[1:]:
        starts.append(np.random.default_rng(child).normal(scale=START_SCALE, size=d * d))
    return starts


def oracle_fef(rho, cfg):
    """Best overlap found over all restarts; see module docstring.

    Restarts are independent; the reduction is a max with ties resolved to the
    lowest restart index, so the result does not depend on evaluation order.
    """
    if rho.dim_a != rho.dim_b:
        raise DimensionMismatch(f"oracle needs equal dims, got ({rho.dim_a}, {rho.dim_b})")
    d = rho.dim_a
    m = np.ascontiguousarray(rho.matrix, dtype=np.complex128)
    xtol = np.sqrt(cfg.step_tol)
    values = np.empty(cfg.restarts)
    params = []
    for k, p0 in enumerate(restart_starts(cfg, d)):
        p, val = _nelder_mead(p0, m, d, cfg.max_iters, cfg.step_tol, xtol, SIMPLEX_STEP)
        params.append(p)
        values[k] = val
    best = int(np.argmax(values))
    u = params_to_unitary(params[best], d)
    return OracleResult(float(values[best]), u, best, values)
