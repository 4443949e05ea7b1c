import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fefbound.errors import DimensionMismatch, NonSquare, NotHermitian
from fefbound.linalg_core import (
    hermitian_eigenvalues, ky_fan_norm, kron, partial_trace, random_unitary, singular_values)
from fefbound.state import random_density_matrix

from conftest import PAULI_X, PAULI_Z


def test_hermitian_eigenvalues_examples():
    np.testing.assert_allclose(hermitian_eigenvalues(np.eye(2)), [1, 1])
    np.testing.assert_allclose(hermitian_eigenvalues(np.diag([3.0, -1.0])), [3, -1])
    # x^2 - 1 = 0
    np.testing.assert_allclose(hermitian_eigenvalues(PAULI_X), [1, -1], atol=1e-15)


def test_hermitian_eigenvalues_errors():
    with pytest.raises(NonSquare):
        hermitian_eigenvalues(np.zeros((2, 3)))
    with pytest.raises(NotHermitian):
        hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))
    # round-off below tolerance is symmetrized away
    m = PAULI_X + np.array([[0, 1e-12], [0, 0]])
    np.testing.assert_allclose(hermitian_eigenvalues(m), [1, -1], atol=1e-11)


def test_eigenvalue_sum_is_trace(rng):
    for _ in range(20):
        g = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        h = g + g.conj().T
        assert abs(hermitian_eigenvalues(h).sum() - np.trace(h).real) < 1e-10


def test_singular_values_examples():
    np.testing.assert_array_equal(singular_values(np.zeros((3, 4))), np.zeros(3))
    np.testing.assert_allclose(singular_values(np.diag([0.25, -0.25, 0.25])), [0.25] * 3)
    np.testing.assert_allclose(singular_values([[0, 1], [0, 0]]), [1, 0])
    assert len(singular_values(np.ones((2, 5)))) == 2


def test_ky_fan_norm_examples(rng):
    assert ky_fan_norm(np.zeros((3, 3))) == 0
    assert ky_fan_norm(np.diag([0.25, -0.25, 0.25])) == pytest.approx(0.75, abs=1e-15)
    m = rng.standard_normal((4, 6)) + 1j * rng.standard_normal((4, 6))
    assert abs(ky_fan_norm(m) - singular_values(m).sum()) < 1e-12


def test_ky_fan_unitary_invariance(rng):
    for _ in range(20):
        m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        u, v = random_unitary(4, rng), random_unitary(4, rng)
        k = ky_fan_norm(m)
        assert abs(ky_fan_norm(m.conj().T) - k) < 1e-10
        assert abs(ky_fan_norm(u @ m @ v) - k) < 1e-10


def test_kron_examples(rng):
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    np.testing.assert_array_equal(kron(PAULI_Z, PAULI_Z), np.diag([1, -1, -1, 1]))
    a = rng.standard_normal((3, 3))
    b = rng.standard_normal((2, 2))
    assert abs(np.trace(kron(a, b)) - np.trace(a) * np.trace(b)) < 1e-12
    # index convention (i*rows_b + k, j*cols_b + l)
    c = kron(a, b)
    assert c[1 * 2 + 1, 2 * 2 + 0] == a[1, 2] * b[1, 0]


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_kron_associative(seed):
    r = np.random.default_rng(seed)
    a, b, c = (r.standard_normal((2, 3)) + 1j * r.standard_normal((2, 3)) for _ in range(3))
    np.testing.assert_allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-12, rtol=0)


def test_partial_trace_product_state(rng):
    ra = random_density_matrix(2, rng)
    rb = random_density_matrix(3, rng)
    m = np.kron(ra, rb)
    np.testing.assert_allclose(partial_trace(m, 2, 3, keep="A"), ra, atol=1e-14)
    np.testing.assert_allclose(partial_trace(m, 2, 3, keep="B"), rb, atol=1e-14)


def test_partial_trace_bell():
    v = np.array([1, 0, 0, 1]) / np.sqrt(2)
    np.testing.assert_allclose(partial_trace(np.outer(v, v), 2, 2), np.eye(2) / 2)


def test_partial_trace_w_state_matches_printed_matrix():
    a, b, g = 0.3 * np.exp(0.4j), 0.5 * np.exp(-1.1j), np.sqrt(1 - 0.34)
    psi = np.zeros(8, dtype=complex)
    psi[4], psi[2], psi[1] = a, b, g
    # keep AB (4-dim), trace out C (2-dim)
    got = partial_trace(np.outer(psi, psi.conj()), 4, 2, keep="A")
    expected = np.array([
        [abs(g)**2, 0, 0, 0],
        [0, abs(b)**2, a.conjugate() * b, 0],
        [0, a * b.conjugate(), abs(a)**2, 0],
        [0, 0, 0, 0],
    ])
    np.testing.assert_allclose(got, expected, atol=1e-15)


def test_partial_trace_of_state_is_state(rng):
    for _ in range(20):
        m = random_density_matrix(6, rng)
        for keep, n in (("A", 2), ("B", 3)):
            red = partial_trace(m, 2, 3, keep=keep)
            assert red.shape == (n, n)
            assert abs(np.trace(red) - 1) < 1e-10
            assert hermitian_eigenvalues(red)[-1] > -1e-10


def test_partial_trace_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        partial_trace(np.eye(4), 2, 3)
