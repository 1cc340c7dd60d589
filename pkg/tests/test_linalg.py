from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from omlab import linalg
from omlab.errors import InvalidMatrix, NegativeSpectrum, NoConvergence, NotHermitian, NotSquare
from omlab.linalg import (
    abs_power,
    adjoint,
    as_matrix,
    hermitian_eigen,
    hermitian_eigvals,
    matrix_abs,
    operator_norm,
    spectral_function,
)

from conftest import random_complex, random_hermitian, random_psd, svd_norm


def fro(m):
    return float(np.linalg.norm(m))


@pytest.mark.parametrize(
    "bad",
    [np.zeros((0, 0)), np.zeros((2, 0)), np.zeros(3), np.zeros((2, 2, 2)), [[1.0, np.nan]], [[np.inf]]],
)
def test_as_matrix_rejects(bad):
    with pytest.raises(InvalidMatrix):
        as_matrix(bad)


def test_as_matrix_rejects_object_entries():
    with pytest.raises(InvalidMatrix):
        as_matrix(np.array([[1, "a"]], dtype=object))


def test_adjoint_examples():
    np.testing.assert_array_equal(adjoint([[0, 1], [0, 0]]), [[0, 0], [1, 0]])
    np.testing.assert_array_equal(adjoint([[1j]]), [[-1j]])
    t = np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
    np.testing.assert_array_equal(adjoint(t), [[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]])


def test_adjoint_involution_and_norm_isometry(rng):
    for i in range(500):
        d = 1 + i % 8
        m = random_complex(rng, d)
        np.testing.assert_array_equal(adjoint(adjoint(m)), m)
        nm = operator_norm(m)
        assert abs(nm - operator_norm(adjoint(m))) <= 1e-10 * (1 + nm)


def test_eigen_examples():
    e = hermitian_eigen(np.diag([3.0, 1.0]))
    np.testing.assert_allclose(e.values, [3, 1])
    np.testing.assert_allclose(np.abs(e.vectors), np.eye(2))
    np.testing.assert_allclose(hermitian_eigvals([[0, 1], [1, 0]]), [1, -1], atol=1e-14)
    np.testing.assert_allclose(hermitian_eigvals([[2, 1], [1, 2]]), [3, 1], atol=1e-14)


def _check_decomposition(m):
    e = hermitian_eigen(m)
    v = e.vectors
    d = v.shape[0]
    assert fro(v.conj().T @ v - np.eye(d)) <= 1e-10 * (1 + fro(v))
    assert fro(m - e.reconstruct()) <= 1e-10 * (1 + fro(m))
    assert np.all(np.diff(e.values) <= 0)
    ref = np.sort(np.linalg.eigvalsh(m))[::-1]
    np.testing.assert_allclose(e.values, ref, atol=1e-10 * (1 + fro(m)))


def test_eigen_invariants_random(rng):
    for i in range(500):
        _check_decomposition(random_hermitian(rng, 1 + i % 8))


def test_eigen_invariants_up_to_16(rng):
    for d in range(9, 17):
        for _ in range(5):
            _check_decomposition(random_hermitian(rng, d))


def test_eigen_degenerate_and_scaled():
    # repeated eigenvalues, exact zeros and large/small scales
    _check_decomposition(np.eye(5))
    _check_decomposition(np.zeros((4, 4)))
    q, _ = np.linalg.qr(random_complex(np.random.default_rng(1), 6))
    for s in (1e-8, 1.0, 1e8):
        _check_decomposition(s * (q * np.array([2, 2, 2, -1, -1, 0])) @ q.conj().T)


def test_eigen_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eigen([[0, 1], [0, 0]])
    with pytest.raises(NotSquare):
        hermitian_eigen(np.ones((2, 3)))


def test_eigen_sweep_cap(monkeypatch):
    monkeypatch.setattr(linalg, "JACOBI_MAX_SWEEPS", 0)
    with pytest.raises(NoConvergence):
        hermitian_eigen([[2.0, 1.0], [1.0, 2.0]])


@pytest.mark.parametrize(
    "m, expected",
    [
        ([[0, 1], [0, 0]], 1.0),
        ([[1, 1], [1, 1]], 2.0),
        ([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], 2.0),
    ],
)
def test_operator_norm_examples(m, expected):
    assert operator_norm(m) == pytest.approx(expected, abs=1e-12)


def test_operator_norm_matches_svd_and_dominates_samples(rng):
    for i in range(200):
        m = random_complex(rng, 1 + i % 8, 1 + (i // 8) % 5)
        nm = operator_norm(m)
        assert nm == pytest.approx(svd_norm(m), rel=1e-10, abs=1e-12)
        x = random_complex(rng, m.shape[1], 200)
        x /= np.linalg.norm(x, axis=0)
        assert np.linalg.norm(m @ x, axis=0).max() <= nm + 1e-10


def test_matrix_abs_examples():
    t = np.array([[0, 1], [0, 0]], dtype=complex)
    np.testing.assert_allclose(matrix_abs(t), np.diag([0, 1]), atol=1e-14)
    np.testing.assert_allclose(matrix_abs(adjoint(t)), np.diag([1, 0]), atol=1e-14)
    p = random_psd(np.random.default_rng(3), 4)
    np.testing.assert_allclose(matrix_abs(p), p, atol=1e-10 * (1 + fro(p)))


def test_matrix_abs_squared_recovers_gram(rng):
    for i in range(300):
        m = random_complex(rng, 1 + i % 8)
        a = matrix_abs(m)
        gram = m.conj().T @ m
        assert fro(a @ a - gram) <= 1e-8 * (1 + fro(gram))
        assert fro(a - a.conj().T) <= 1e-12 * (1 + fro(a))
        assert np.linalg.eigvalsh(a)[0] >= -1e-10 * (1 + fro(a))


def test_spectral_function_examples():
    p = random_psd(np.random.default_rng(5), 3)
    np.testing.assert_allclose(spectral_function(p, lambda x: x), p, atol=1e-10 * fro(p))
    np.testing.assert_allclose(spectral_function(np.diag([2.0, 3.0]), lambda x: x**2), np.diag([4, 9]))
    np.testing.assert_allclose(
        spectral_function(np.ones((2, 2)), np.sqrt), np.ones((2, 2)) / np.sqrt(2), atol=1e-14
    )


def test_spectral_function_errors():
    with pytest.raises(NegativeSpectrum):
        spectral_function(np.diag([1.0, -1.0]), np.sqrt)
    with pytest.raises(NotHermitian):
        spectral_function([[1, 1], [0, 1]], np.sqrt)
    # roundoff-level negativity is clamped, not rejected
    out = spectral_function(np.diag([1.0, -1e-12]), np.sqrt)
    np.testing.assert_allclose(out, np.diag([1.0, 0.0]))


@pytest.mark.parametrize("t", [0.0, 0.25, 0.5, 1.0])
def test_power_pair_products_recover_matrix(rng, t):
    for d in (1, 2, 4, 7):
        p = random_psd(rng, d)
        f = spectral_function(p, lambda x: np.power(x, t))
        g = spectral_function(p, lambda x: np.power(x, 1 - t))
        assert fro(f @ g - p) <= 1e-8 * (1 + fro(p))


def test_abs_power_zero_is_identity_even_when_singular():
    t = np.array([[0, 1], [0, 0]], dtype=complex)
    np.testing.assert_allclose(abs_power(t, 0.0), np.eye(2))
    np.testing.assert_allclose(abs_power(t, 2.0), t.conj().T @ t, atol=1e-14)


@settings(max_examples=60, deadline=None)
@given(
    arrays(np.float64, (3, 3), elements=st.floats(-1e3, 1e3)),
    arrays(np.float64, (3, 3), elements=st.floats(-1e3, 1e3)),
)
def test_property_abs_preserves_norm_and_hermitian_eigen_is_exact(re, im):
    m = re + 1j * im
    assert operator_norm(matrix_abs(m)) == pytest.approx(operator_norm(m), rel=1e-9, abs=1e-9)
    h = (m + m.conj().T) / 2
    e = hermitian_eigen(h)
    assert fro(h - e.reconstruct()) <= 1e-10 * (1 + fro(h))
