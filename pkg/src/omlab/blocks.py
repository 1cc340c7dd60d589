"""2x2 operator matrices: partitioning, Cartesian decomposition, positivity classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constants import CHECK_TOL, CS_TOL, KERNEL_TOL
from .errors import BlockShapeError, NonpositiveScale, NotPSDInput, OddDimension
from .linalg import (
    as_matrix,
    as_square,
    hermitian_defect,
    hermitian_eigvals,
    imag_part,
    is_hermitian,
    operator_norm,
    real_part,
)


def _frozen(m) -> np.ndarray:
    a = as_matrix(m).copy()
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Block2x2:
    """A 2n x 2n matrix viewed as [[t11, t12], [t21, t22]] with n x n blocks."""

    t11: np.ndarray
    t12: np.ndarray
    t21: np.ndarray
    t22: np.ndarray

    def __post_init__(self):
        blocks = {}
        for name in ("t11", "t12", "t21", "t22"):
            a = _frozen(getattr(self, name))
            if a.shape[0] != a.shape[1]:
                raise BlockShapeError(f"{name} is not square: shape {a.shape}")
            blocks[name] = a
        dims = {a.shape[0] for a in blocks.values()}
        if len(dims) != 1:
            shapes = ", ".join(f"{k}={v.shape}" for k, v in blocks.items())
            raise BlockShapeError(f"blocks have unequal dimensions: {shapes}")
        for name, a in blocks.items():
            object.__setattr__(self, name, a)

    @property
    def n(self) -> int:
        return self.t11.shape[0]

    def blocks(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.t11, self.t12, self.t21, self.t22

    def assemble(self) -> np.ndarray:
        return np.block([[self.t11, self.t12], [self.t21, self.t22]])

    def diagonal_part(self) -> np.ndarray:
        z = np.zeros_like(self.t11)
        return np.block([[self.t11, z], [z, self.t22]])

    def off_diagonal_part(self) -> np.ndarray:
        z = np.zeros_like(self.t11)
        return np.block([[z, self.t12], [self.t21, z]])


def partition(m) -> Block2x2:
    a = as_square(m)
    d = a.shape[0]
    if d % 2:
        raise OddDimension(f"cannot split a {d}x{d} matrix into 2x2 blocks")
    n = d // 2
    return Block2x2(a[:n, :n], a[:n, n:], a[n:, :n], a[n:, n:])


def assemble(block: Block2x2) -> np.ndarray:
    return block.assemble()


@dataclass(frozen=True)
class CartesianBlocks:
    """Blocks of A = Re T and B = Im T, so that T = A + iB blockwise."""

    a11: np.ndarray
    a12: np.ndarray
    a21: np.ndarray
    a22: np.ndarray
    b11: np.ndarray
    b12: np.ndarray
    b21: np.ndarray
    b22: np.ndarray

    @property
    def real(self) -> Block2x2:
        return Block2x2(self.a11, self.a12, self.a21, self.a22)

    @property
    def imag(self) -> Block2x2:
        return Block2x2(self.b11, self.b12, self.b21, self.b22)

    def reassemble(self) -> np.ndarray:
        return self.real.assemble() + 1j * self.imag.assemble()


def cartesian(block: Block2x2) -> CartesianBlocks:
    t = block.assemble()
    a = partition(real_part(t))
    b = partition(imag_part(t))
    return CartesianBlocks(a.t11, a.t12, a.t21, a.t22, b.t11, b.t12, b.t21, b.t22)


@dataclass(frozen=True)
class OperatorClass:
    """Class membership of a square matrix with graded slacks.

    ``min_real_eig`` / ``min_imag_eig`` are the smallest eigenvalues of the
    real and imaginary parts; a slack >= 0 means the property holds exactly.
    For a Hermitian matrix ``min_real_eig`` is its own smallest eigenvalue.
    """

    hermitian: bool
    positive: bool
    accretive: bool
    dissipative: bool
    accretive_dissipative: bool
    min_real_eig: float
    min_imag_eig: float
    hermitian_defect: float
    norm: float

    def as_dict(self) -> dict:
        return {
            "hermitian": self.hermitian,
            "positive": self.positive,
            "accretive": self.accretive,
            "dissipative": self.dissipative,
            "accretive_dissipative": self.accretive_dissipative,
            "min_real_eig": self.min_real_eig,
            "min_imag_eig": self.min_imag_eig,
        }


def classify(m, tol: float = CHECK_TOL) -> OperatorClass:
    a = as_square(m)
    norm = operator_norm(a)
    herm = is_hermitian(a, KERNEL_TOL)
    guard = tol * (1 + norm)
    min_re = float(hermitian_eigvals(real_part(a))[-1])
    min_im = float(hermitian_eigvals(imag_part(a))[-1])
    accretive = min_re >= -guard
    dissipative = min_im >= -guard
    return OperatorClass(
        hermitian=herm,
        positive=herm and accretive,
        accretive=accretive,
        dissipative=dissipative,
        accretive_dissipative=accretive and dissipative,
        min_real_eig=min_re,
        min_imag_eig=min_im,
        hermitian_defect=hermitian_defect(a),
        norm=norm,
    )


def congruence_scale(block: Block2x2, t: float) -> Block2x2:
    """D T D with D = diag(sqrt(t) I, I / sqrt(t)), i.e. (t T11, T12, T21, T22 / t)."""
    if not t > 0:
        raise NonpositiveScale(f"scale must be positive, got {t!r}")
    return Block2x2(t * block.t11, block.t12, block.t21, block.t22 / t)


@dataclass(frozen=True)
class CSViolation:
    x: np.ndarray
    y: np.ndarray
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


def random_unit_vectors(rng: np.random.Generator, n: int, count: int) -> np.ndarray:
    """Rows are unit vectors drawn uniformly from the complex sphere."""
    v = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def cauchy_schwarz_witness(a, b, c, trials: int, seed: int) -> Optional[CSViolation]:
    """Search for unit x, y with |<C y, x>|^2 > <A x, x><B y, y> + 1e-10.

    The inequality for all x, y is equivalent to [[A, C], [C*, B]] >= O when
    A, B >= O. Finding nothing is only evidence of positivity; use
    :func:`classify` on the assembled block for ground truth.
    """
    a = as_square(a)
    b = as_square(b)
    c = as_matrix(c)
    for name, m in (("a", a), ("b", b)):
        if not is_hermitian(m, KERNEL_TOL):
            raise NotPSDInput(f"{name} is not Hermitian")
        w = hermitian_eigvals(m)
        if w[-1] < -CHECK_TOL * (1 + abs(w[0])):
            raise NotPSDInput(f"{name} has negative eigenvalue {w[-1]:.3e}")
    if c.shape != (a.shape[0], b.shape[0]):
        raise BlockShapeError(
            f"c must have shape {(a.shape[0], b.shape[0])} to pair with a and b, got {c.shape}"
        )
    rng = np.random.default_rng(seed)
    xs = random_unit_vectors(rng, a.shape[0], trials)
    ys = random_unit_vectors(rng, b.shape[0], trials)
    ax = np.einsum("ki,ij,kj->k", xs.conj(), a, xs).real
    by = np.einsum("ki,ij,kj->k", ys.conj(), b, ys).real
    cyx = np.einsum("ki,ij,kj->k", xs.conj(), c, ys)
    lhs = np.abs(cyx) ** 2
    rhs = ax * by
    bad = np.nonzero(lhs > rhs + CS_TOL)[0]
    if bad.size == 0:
        return None
    k = int(bad[0])
    return CSViolation(x=xs[k], y=ys[k], lhs=float(lhs[k]), rhs=float(rhs[k]))
