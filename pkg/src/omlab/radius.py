"""Numerical radius and spectral radius computations."""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .constants import DEFAULT_RESOLUTION, GOLDEN_WIDTH, JACOBI_MAX_SWEEPS, JACOBI_OFF_TOL
from .errors import NegativeEntry, NoConvergence
from .linalg import as_square, fro, hermitian_eigvals, imag_part, real_part


def numerical_radius(m, resolution: int = DEFAULT_RESOLUTION) -> float:
    """omega(m) = max over theta of lambda_max of the Hermitian part of e^{i theta} m.

    The function of theta is sampled on ``resolution`` equally spaced points of
    [0, 2pi); every grid-local maximum is then refined by golden-section
    search down to a bracket of width 1e-12.
    """
    a = as_square(m)
    if resolution < 1:
        raise ValueError("resolution must be a positive integer")
    H = real_part(a)
    K = imag_part(a)
    noise = 1e-12 * (1 + fro(a))
    value, ok = _kernels.numerical_radius_kernel(
        H, K, int(resolution), GOLDEN_WIDTH, noise, JACOBI_OFF_TOL, JACOBI_MAX_SWEEPS
    )
    if not ok:
        raise NoConvergence("eigensolver failed inside the numerical radius scan")
    return max(float(value), 0.0)


def theta_profile(m, resolution: int = DEFAULT_RESOLUTION) -> np.ndarray:
    """Grid values lambda_max(Re(e^{i theta_j} m)), theta_j = 2 pi j / resolution."""
    a = as_square(m)
    f, ok = _kernels.theta_grid(
        real_part(a), imag_part(a), int(resolution), JACOBI_OFF_TOL, JACOBI_MAX_SWEEPS
    )
    if not ok:
        raise NoConvergence("eigensolver failed inside the theta scan")
    return f


def radius_2x2_real(a: float, b: float, c: float, d: float) -> float:
    """Closed-form numerical radius of the real matrix [[a, b], [c, d]]."""
    return (abs(a + d) + math.sqrt((a - d) ** 2 + (b + c) ** 2)) / 2


def radius_2x2_real_general(a: float, b: float, c: float, d: float) -> float:
    """Numerical radius of a real 2x2 matrix from its elliptical numerical range.

    The range is an ellipse centred at x0 = (a + d)/2 on the real axis with
    horizontal semi-axis p = ||Re T - x0 I|| and vertical semi-axis
    q = ||Im T|| = |b - c|/2. Maximising |x0 + p cos u + i q sin u| over u
    gives |x0| + p unless q > p and the interior critical point is admissible.
    :func:`radius_2x2_real` agrees with it whenever the eigenvalues are real.
    """
    x0 = (a + d) / 2
    p = math.sqrt((a - d) ** 2 + (b + c) ** 2) / 2
    q = abs(b - c) / 2
    if q > p:
        gap = q * q - p * p
        if gap > 0 and abs(x0) * p <= gap:
            return q * math.sqrt(1 + x0 * x0 / gap)
    return abs(x0) + p


def spectral_radius_2x2_nonneg(a: float, b: float, c: float, d: float) -> float:
    """Perron root of the entrywise nonnegative matrix [[a, b], [c, d]]."""
    for name, v in zip("abcd", (a, b, c, d)):
        if v < 0:
            raise NegativeEntry(f"entry {name} = {v!r} is negative")
    return ((a + d) + math.sqrt((a - d) ** 2 + 4 * b * c)) / 2


def spectral_radius_hermitian(m) -> float:
    w = hermitian_eigvals(m)
    return float(max(abs(w[0]), abs(w[-1])))
