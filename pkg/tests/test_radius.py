from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omlab.errors import NegativeEntry, NotHermitian
from omlab.linalg import imag_part, operator_norm, real_part
from omlab.radius import (
    numerical_radius,
    radius_2x2_real,
    radius_2x2_real_general,
    spectral_radius_2x2_nonneg,
    spectral_radius_hermitian,
    theta_profile,
)
from omlab.sampling import SampleSpec, sample

from conftest import random_complex, scan_radius


@pytest.mark.parametrize(
    "m, expected",
    [
        ([[0, 1], [0, 0]], 0.5),
        (np.eye(1), 1.0),
        (np.eye(5), 1.0),
        ([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], 2.0),
        ([[0, 1], [-1, 0]], 1.0),
        (np.zeros((3, 3)), 0.0),
    ],
)
def test_radius_examples(m, expected):
    assert numerical_radius(m) == pytest.approx(expected, abs=1e-12)


def test_radius_matches_independent_scan(rng):
    for i in range(60):
        m = random_complex(rng, 1 + i % 6)
        w = numerical_radius(m)
        assert abs(w - scan_radius(m)) <= 1e-9 * (1 + w)


def test_radius_with_several_competing_maxima():
    # numerical range is a triangle with three equidistant far vertices
    lam = np.exp(2j * np.pi * np.arange(3) / 3)
    q, _ = np.linalg.qr(random_complex(np.random.default_rng(8), 3))
    m = (q * lam) @ q.conj().T
    assert numerical_radius(m) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("resolution", [1, 2, 3, 7, 64, 721])
def test_radius_resolution_is_only_a_starting_grid(resolution):
    m = random_complex(np.random.default_rng(9), 4)
    assert numerical_radius(m, resolution) <= numerical_radius(m) + 1e-12
    if resolution >= 64:
        assert numerical_radius(m, resolution) == pytest.approx(numerical_radius(m), abs=1e-11)


def test_theta_profile_parity():
    m = random_complex(np.random.default_rng(10), 3)
    f = theta_profile(m, 8)
    ths = 2 * np.pi * np.arange(8) / 8
    h, k = real_part(m), imag_part(m)
    ref = [np.linalg.eigvalsh(np.cos(t) * h - np.sin(t) * k)[-1] for t in ths]
    np.testing.assert_allclose(f, ref, atol=1e-12)


@pytest.mark.parametrize(
    "abcd, expected", [((0, 1, 0, 0), 0.5), ((1, 0, 0, 0), 1.0), ((1, 1, 1, 1), 2.0)]
)
def test_closed_form_examples(abcd, expected):
    assert radius_2x2_real(*abcd) == pytest.approx(expected)
    assert numerical_radius(np.array(abcd, dtype=float).reshape(2, 2)) == pytest.approx(expected)


def test_closed_form_agrees_when_eigenvalues_are_real(rng):
    count = 0
    while count < 500:
        a, b, c, d = rng.uniform(-10, 10, 4)
        if (a - d) ** 2 + 4 * b * c < 0:
            continue
        count += 1
        w = numerical_radius(np.array([[a, b], [c, d]]))
        assert abs(w - radius_2x2_real(a, b, c, d)) <= 1e-8 * (1 + w)


def test_closed_form_misses_rotation():
    # complex eigenvalues +-i: omega = 1 while the closed form gives 0
    assert radius_2x2_real(0, 1, -1, 0) == 0.0
    assert numerical_radius([[0, 1], [-1, 0]]) == pytest.approx(1.0)


def test_ellipse_form_agrees_on_all_real_2x2(rng):
    for _ in range(500):
        a, b, c, d = rng.uniform(-10, 10, 4)
        w = numerical_radius(np.array([[a, b], [c, d]]))
        assert abs(w - radius_2x2_real_general(a, b, c, d)) <= 1e-8 * (1 + w)


@pytest.mark.parametrize(
    "abcd, expected",
    [((1, 0, 0, 2), 2.0), ((0, 1, 1, 0), 1.0), ((1, 2, 3, 4), (5 + math.sqrt(33)) / 2)],
)
def test_spectral_radius_nonneg(abcd, expected):
    assert spectral_radius_2x2_nonneg(*abcd) == pytest.approx(expected)
    # power iteration as the oracle
    m = np.array(abcd, dtype=float).reshape(2, 2) + 1e-300
    v = np.ones(2)
    for _ in range(2000):
        v = m @ v
        v /= np.linalg.norm(v)
    assert spectral_radius_2x2_nonneg(*abcd) == pytest.approx(v @ m @ v, rel=1e-9)


def test_spectral_radius_nonneg_rejects_negative():
    with pytest.raises(NegativeEntry):
        spectral_radius_2x2_nonneg(1, -1e-300, 0, 0)


@pytest.mark.parametrize(
    "m, expected", [(np.diag([-3.0, 1.0]), 3.0), ([[0, 1], [1, 0]], 1.0), ([[2, 1], [1, 2]], 3.0)]
)
def test_spectral_radius_hermitian(m, expected):
    assert spectral_radius_hermitian(m) == pytest.approx(expected)


def test_spectral_radius_hermitian_rejects():
    with pytest.raises(NotHermitian):
        spectral_radius_hermitian([[0, 1], [0, 0]])


def test_normal_matrices_attain_spectral_radius():
    for s in range(100):
        spec = SampleSpec("normal", 1 + s % 4, seed=s)
        m = sample(spec)
        lam = np.linalg.eigvals(m)
        assert abs(numerical_radius(m) - np.abs(lam).max()) <= 1e-8


def test_square_zero_attains_half_norm():
    for s in range(100):
        m = sample(SampleSpec("square_zero", 1 + s % 4, seed=s))
        assert abs(numerical_radius(m) - operator_norm(m) / 2) <= 1e-8


@pytest.mark.parametrize("kind", ["ginibre", "hermitian", "psd", "accretive", "accretive_dissipative"])
def test_norm_equivalence_and_real_imag_parts(kind):
    for s in range(40):
        m = sample(SampleSpec(kind, 1 + s % 4, seed=s))
        w, n = numerical_radius(m), operator_norm(m)
        tol = 1e-8 * (1 + n)
        assert n / 2 - tol <= w <= n + tol
        assert operator_norm(real_part(m)) <= w + tol
        assert operator_norm(imag_part(m)) <= w + tol


def test_radius_is_a_norm(rng):
    for i in range(60):
        d = 1 + i % 5
        s, t = random_complex(rng, d), random_complex(rng, d)
        c = complex(*rng.standard_normal(2))
        ws, wt = numerical_radius(s), numerical_radius(t)
        assert numerical_radius(c * s) == pytest.approx(abs(c) * ws, rel=1e-8, abs=1e-8)
        assert numerical_radius(s + t) <= ws + wt + 1e-8 * (1 + ws + wt)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.floats(-100, 100), min_size=4, max_size=4))
def test_property_radius_bounds_real_2x2(entries):
    a, b, c, d = entries
    m = np.array([[a, b], [c, d]])
    w, n = numerical_radius(m), operator_norm(m)
    assert n / 2 - 1e-8 * (1 + n) <= w <= n + 1e-8 * (1 + n)
    assert w == pytest.approx(radius_2x2_real_general(a, b, c, d), rel=1e-9, abs=1e-9)
