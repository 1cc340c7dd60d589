"""Shared fixtures and independent oracles.

The oracles deliberately avoid the package kernels: norms come from LAPACK's
SVD and the numerical radius from a dense theta scan with LAPACK ``eigvalsh``.
"""

from __future__ import annotations

import numpy as np
import pytest


def svd_norm(m) -> float:
    return float(np.linalg.norm(np.asarray(m, dtype=complex), 2))


def scan_radius(m, points: int = 4096) -> float:
    """Dense theta scan plus a local parabolic polish; accurate to ~1e-12 for small m."""
    m = np.asarray(m, dtype=complex)
    h = (m + m.conj().T) / 2
    k = (m - m.conj().T) / 2j

    def f(th):
        return np.linalg.eigvalsh(np.cos(th) * h - np.sin(th) * k)[-1]

    ths = np.linspace(0, 2 * np.pi, points, endpoint=False)
    vals = np.array([f(t) for t in ths])
    j = int(np.argmax(vals))
    lo, hi = ths[j] - 2 * np.pi / points, ths[j] + 2 * np.pi / points
    for _ in range(200):
        a = lo + (hi - lo) / 3
        b = hi - (hi - lo) / 3
        if f(a) < f(b):
            lo = a
        else:
            hi = b
    return max(float(vals.max()), f((lo + hi) / 2), 0.0)


def random_complex(rng, n, m=None) -> np.ndarray:
    m = n if m is None else m
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


def random_hermitian(rng, n) -> np.ndarray:
    g = random_complex(rng, n)
    return (g + g.conj().T) / 2


def random_psd(rng, n) -> np.ndarray:
    g = random_complex(rng, n)
    return g @ g.conj().T


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
