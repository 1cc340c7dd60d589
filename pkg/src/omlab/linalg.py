"""Dense complex matrix kernels.

Matrices are plain ``complex128`` numpy arrays. :func:`as_matrix` is the
single gate that admits data into the library: it rejects empty arrays,
non-2-D input and any non-finite entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels
from .constants import JACOBI_MAX_SWEEPS, JACOBI_OFF_TOL, KERNEL_TOL, PSD_TOL
from .errors import InvalidMatrix, NegativeSpectrum, NoConvergence, NotHermitian, NotSquare

RealFunction = Callable[[np.ndarray], np.ndarray]


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m)
    if a.dtype == object:
        raise InvalidMatrix("matrix entries must be numeric")
    a = np.array(a, dtype=np.complex128)
    if a.ndim != 2:
        raise InvalidMatrix(f"expected a 2-D matrix, got {a.ndim} dimension(s)")
    if a.shape[0] == 0 or a.shape[1] == 0:
        raise InvalidMatrix("0-sized matrices are not supported")
    if not np.all(np.isfinite(a)):
        raise InvalidMatrix("matrix has non-finite entries")
    return a


def as_square(m) -> np.ndarray:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {a.shape}")
    return a


def adjoint(m) -> np.ndarray:
    return as_matrix(m).conj().T.copy()


def fro(m) -> float:
    return float(np.linalg.norm(m))


def real_part(m) -> np.ndarray:
    """Hermitian part (m + m*) / 2."""
    a = np.asarray(m, dtype=np.complex128)
    return (a + a.conj().T) / 2


def imag_part(m) -> np.ndarray:
    """(m - m*) / 2i, the Hermitian imaginary part of the Cartesian decomposition."""
    a = np.asarray(m, dtype=np.complex128)
    return (a - a.conj().T) / 2j


def hermitian_defect(m) -> float:
    a = np.asarray(m, dtype=np.complex128)
    return fro(a - a.conj().T)


def is_hermitian(m, tol: float = KERNEL_TOL) -> bool:
    return hermitian_defect(m) <= tol * (1 + fro(m))


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenpairs of a Hermitian matrix, values sorted descending."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.conj().T


def _checked_hermitian(m, tol: float) -> np.ndarray:
    a = as_square(m)
    if not is_hermitian(a, tol):
        raise NotHermitian(
            f"Hermitian defect {hermitian_defect(a):.3e} exceeds {tol:g}*(1+||m||_F)"
        )
    return (a + a.conj().T) / 2


def hermitian_eigen(m, tol: float = KERNEL_TOL) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.

    Converged when the off-diagonal Frobenius mass drops to
    ``JACOBI_OFF_TOL * (1 + ||m||_F)``; gives up after ``JACOBI_MAX_SWEEPS``.

    Raises:
        NotHermitian: ``||m - m*||_F > tol * (1 + ||m||_F)``.
        NoConvergence: sweep cap reached.
    """
    a = _checked_hermitian(m, tol)
    w, v, ok, sweeps = _kernels.jacobi_eigh(a, True, JACOBI_OFF_TOL, JACOBI_MAX_SWEEPS)
    if not ok:
        raise NoConvergence(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return EigenDecomposition(values=w, vectors=v, sweeps=int(sweeps))


def hermitian_eigvals(m, tol: float = KERNEL_TOL) -> np.ndarray:
    """Eigenvalues only (descending); same kernel without vector accumulation."""
    a = _checked_hermitian(m, tol)
    w, _, ok, _ = _kernels.jacobi_eigh(a, False, JACOBI_OFF_TOL, JACOBI_MAX_SWEEPS)
    if not ok:
        raise NoConvergence(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return w


def lambda_max(m) -> float:
    return float(hermitian_eigvals(m)[0])


def lambda_min(m) -> float:
    return float(hermitian_eigvals(m)[-1])


def operator_norm(m) -> float:
    """Largest singular value, sqrt(lambda_max(m* m))."""
    a = as_matrix(m)
    gram = a.conj().T @ a
    return float(np.sqrt(max(lambda_max(gram), 0.0)))


def matrix_abs(m) -> np.ndarray:
    """|m| = (m* m)^(1/2), with slightly negative eigenvalues of m* m clamped to 0."""
    a = as_square(m)
    eig = hermitian_eigen(a.conj().T @ a)
    root = np.sqrt(np.maximum(eig.values, 0.0))
    return (eig.vectors * root) @ eig.vectors.conj().T


def apply_to_spectrum(eig: EigenDecomposition, f: RealFunction) -> np.ndarray:
    """V diag(f(max(lambda, 0))) V* for an existing decomposition."""
    lam = np.maximum(eig.values, 0.0)
    fl = np.asarray(f(lam), dtype=np.float64)
    return (eig.vectors * fl) @ eig.vectors.conj().T


def psd_eigen(m, tol: float = PSD_TOL) -> EigenDecomposition:
    """Decomposition of a Hermitian PSD matrix, rejecting clearly negative spectra."""
    a = as_square(m)
    if not is_hermitian(a, tol):
        raise NotHermitian(f"Hermitian defect {hermitian_defect(a):.3e}")
    eig = hermitian_eigen(a, tol)
    scale = float(np.max(np.abs(eig.values)))
    if eig.values[-1] < -tol * (1 + scale):
        raise NegativeSpectrum(f"eigenvalue {eig.values[-1]:.3e} below zero")
    return eig


def spectral_function(m, f: RealFunction, tol: float = PSD_TOL) -> np.ndarray:
    """Apply ``f`` to the spectrum of a Hermitian PSD matrix.

    ``f`` receives a numpy array of clamped (nonnegative) eigenvalues.
    """
    return apply_to_spectrum(psd_eigen(m, tol), f)


def abs_power(m, p: float) -> np.ndarray:
    """|m|^p computed as (m* m)^(p/2); the convention x^0 = 1 gives |m|^0 = I."""
    a = as_square(m)
    half = p / 2
    return spectral_function(a.conj().T @ a, lambda x: np.power(x, half))
