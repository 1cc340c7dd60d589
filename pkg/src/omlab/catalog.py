"""Executable catalog of norm and numerical radius inequalities for 2x2 operator matrices.

Each entry of :func:`registry` is an :class:`InequalityCheck` with a stable id.
Checks evaluate on a *subject*, a cache of the spectral quantities of one input
so that a sweep computing twenty checks on the same matrix solves each
eigenproblem once:

* :class:`BlockSubject` wraps a :class:`~omlab.blocks.Block2x2`;
* :class:`PairSubject` wraps two square matrices ``(T1, T2)`` of equal size,
  used by the circulant equality and the absolute-value triangle probe.

Every check returns a :class:`CheckResult` whose ``slack = rhs - lhs`` is
nonnegative (up to ``tol * (1 + |rhs|)``) exactly when the inequality holds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Optional, Union

import numpy as np

from .blocks import Block2x2, CartesianBlocks, OperatorClass, cartesian, classify, partition
from .constants import CHECK_TOL, DEFAULT_RESOLUTION, KERNEL_TOL
from .errors import InvalidFunctionPair, NotApplicable, UnknownCheck
from .linalg import (
    EigenDecomposition,
    RealFunction,
    apply_to_spectrum,
    as_square,
    hermitian_eigen,
    imag_part,
    is_hermitian,
    operator_norm,
    real_part,
)
from .radius import numerical_radius, spectral_radius_2x2_nonneg, spectral_radius_hermitian

# ---------------------------------------------------------------------------
# results and function pairs


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one inequality ``lhs <= rhs`` (or ``lhs == rhs`` if ``equality``).

    ``parts`` holds companion statements evaluated together with the primary
    one; ``holds`` requires all of them.
    """

    lhs: float
    rhs: float
    tol: float = CHECK_TOL
    equality: bool = False
    parts: tuple["CheckResult", ...] = ()

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def rel_slack(self) -> float:
        return self.slack / (1 + abs(self.rhs))

    @property
    def own_holds(self) -> bool:
        bound = self.tol * (1 + abs(self.rhs))
        if self.equality:
            return abs(self.slack) <= bound
        return self.slack >= -bound

    @property
    def holds(self) -> bool:
        return self.own_holds and all(p.holds for p in self.parts)

    @property
    def min_rel_slack(self) -> float:
        """Worst normalised slack across the primary statement and its parts."""
        own = -abs(self.rel_slack) if self.equality else self.rel_slack
        return min([own] + [p.min_rel_slack for p in self.parts])


AUDIT_GRID = (0.0, 1e-3, 1e-1, 1.0, 10.0, 1e3)


@dataclass(frozen=True)
class FunctionPair:
    """Nonnegative f, g on [0, inf) with f(x) g(x) = x, vectorised over numpy arrays."""

    f: RealFunction
    g: RealFunction
    label: str

    def __post_init__(self):
        x = np.array(AUDIT_GRID)
        with np.errstate(all="ignore"):
            fx = np.asarray(self.f(x), dtype=float)
            gx = np.asarray(self.g(x), dtype=float)
        if not (np.all(np.isfinite(fx)) and np.all(np.isfinite(gx))):
            raise InvalidFunctionPair(f"{self.label}: non-finite values on the audit grid")
        if np.any(fx < 0) or np.any(gx < 0):
            raise InvalidFunctionPair(f"{self.label}: negative values on the audit grid")
        err = np.abs(fx * gx - x)
        if np.any(err > 1e-10 * (1 + x)):
            worst = float(x[np.argmax(err)])
            raise InvalidFunctionPair(f"{self.label}: f(x) g(x) != x at x = {worst:g}")


def power_pair(t: float) -> FunctionPair:
    """f(x) = x^t, g(x) = x^(1-t) for 0 <= t <= 1 (with 0^0 = 1)."""
    if not 0.0 <= t <= 1.0:
        raise InvalidFunctionPair(f"power exponent must lie in [0, 1], got {t}")
    return FunctionPair(
        f=lambda x, t=t: np.power(x, t),
        g=lambda x, t=t: np.power(x, 1.0 - t),
        label=f"power({t:g})",
    )


def rational_pair() -> FunctionPair:
    """f(x) = x / (1 + x), g(x) = 1 + x."""
    return FunctionPair(f=lambda x: x / (1.0 + x), g=lambda x: 1.0 + x, label="x/(1+x),1+x")


# ---------------------------------------------------------------------------
# subjects


class BlockSubject:
    """Lazily computed spectral data of one 2x2 operator matrix."""

    kind = "block"

    def __init__(self, block: Optional[Block2x2], resolution: int = DEFAULT_RESOLUTION, tol: float = CHECK_TOL):
        self.block = block
        self.resolution = resolution
        self.tol = tol
        self._omega: dict[str, float] = {}
        self._norm: dict[str, float] = {}
        self._gram: dict[str, EigenDecomposition] = {}

    @classmethod
    def whole(cls, m, **kw) -> "BlockSubject":
        """Subject without a block partition; only whole-matrix checks may use it."""
        subject = cls(None, **kw)
        subject.__dict__["matrix"] = as_square(m)
        return subject

    @classmethod
    def of(cls, x, **kw) -> "BlockSubject":
        if isinstance(x, BlockSubject):
            return x
        if isinstance(x, Block2x2):
            return cls(x, **kw)
        return cls(partition(x), **kw)

    @cached_property
    def matrix(self) -> np.ndarray:
        return self.block.assemble()

    @cached_property
    def cart(self) -> CartesianBlocks:
        return cartesian(self.block)

    @cached_property
    def op_class(self) -> OperatorClass:
        return classify(self.matrix, self.tol)

    def omega(self, key: str = "T", m=None) -> float:
        if key not in self._omega:
            self._omega[key] = numerical_radius(self.matrix if m is None else m, self.resolution)
        return self._omega[key]

    def norm(self, key: str = "T", m=None) -> float:
        if key not in self._norm:
            self._norm[key] = operator_norm(self.matrix if m is None else m)
        return self._norm[key]

    def block_norm(self, name: str) -> float:
        """Operator norm of a named block such as ``t12``, ``a11`` or ``b22``."""
        src = self.block if name.startswith("t") else self.cart
        return self.norm(name, getattr(src, name))

    def abs_power(self, name: str, p: float, star: bool = False) -> np.ndarray:
        """|X|^p, or |X*|^p when ``star``, for block ``name`` of T."""
        key = name + ("*" if star else "")
        if key not in self._gram:
            x = getattr(self.block, name)
            gram = x @ x.conj().T if star else x.conj().T @ x
            self._gram[key] = hermitian_eigen(gram)
        return apply_to_spectrum(self._gram[key], lambda lam: np.power(lam, p / 2))

    def abs_block(self, name: str, star: bool = False) -> np.ndarray:
        return self.abs_power(name, 1.0, star)


class PairSubject:
    """Two square matrices of equal size."""

    kind = "pair"

    def __init__(self, t1, t2, resolution: int = DEFAULT_RESOLUTION, tol: float = CHECK_TOL):
        self.t1 = as_square(t1)
        self.t2 = as_square(t2)
        if self.t1.shape != self.t2.shape:
            raise ValueError(f"pair shapes differ: {self.t1.shape} vs {self.t2.shape}")
        self.resolution = resolution
        self.tol = tol
        self._gram: dict[str, EigenDecomposition] = {}

    @classmethod
    def of(cls, x, **kw) -> "PairSubject":
        """Accept a PairSubject, a (T1, T2) tuple, or a block input read as (T11, T12)."""
        if isinstance(x, PairSubject):
            return x
        if isinstance(x, tuple) and len(x) == 2:
            return cls(x[0], x[1], **kw)
        blk = x.block if isinstance(x, BlockSubject) else x
        if not isinstance(blk, Block2x2):
            blk = partition(blk)
        return cls(blk.t11, blk.t12, **kw)

    def abs_power(self, which: int, p: float, star: bool = False) -> np.ndarray:
        key = f"{which}{'*' if star else ''}"
        if key not in self._gram:
            x = self.t1 if which == 1 else self.t2
            gram = x @ x.conj().T if star else x.conj().T @ x
            self._gram[key] = hermitian_eigen(gram)
        return apply_to_spectrum(self._gram[key], lambda lam: np.power(lam, p / 2))


Subject = Union[BlockSubject, PairSubject]

# ---------------------------------------------------------------------------
# applicability


def _always(s: Subject) -> bool:
    return True


def _accretive_dissipative(s: BlockSubject) -> bool:
    return s.op_class.accretive_dissipative


def _positive(s: BlockSubject) -> bool:
    return s.op_class.positive


def _positive_selfadjoint_offdiag(s: BlockSubject) -> bool:
    return s.op_class.positive and is_hermitian(s.block.t12, KERNEL_TOL)


def _hermitian(s: BlockSubject) -> bool:
    return s.op_class.hermitian


# ---------------------------------------------------------------------------
# the checks


def _require(ok: bool, check_id: str, what: str) -> None:
    if not ok:
        raise NotApplicable(f"{check_id} applies to {what} operator matrices only")


def check_norm_radius_equiv(T, tol: float = CHECK_TOL) -> CheckResult:
    """||T|| / 2 <= omega(T), paired with omega(T) <= ||T||."""
    s = BlockSubject.of(T, tol=tol)
    w, nrm = s.omega(), s.norm()
    upper = CheckResult(w, nrm, tol)
    return CheckResult(nrm / 2, w, tol, parts=(upper,))


def check_real_imag_parts(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    lhs = max(s.norm("ReT", real_part(s.matrix)), s.norm("ImT", imag_part(s.matrix)))
    return CheckResult(lhs, s.omega(), tol)


def _shebr_terms(s: BlockSubject) -> tuple[float, float, float, float]:
    x, y, z, w = s.block.blocks()
    return (
        s.omega("t11", x),
        s.omega("t22", w),
        s.omega("t12+t21", y + z),
        s.omega("t12-t21", y - z),
    )


def check_shebr_lower(T, tol: float = CHECK_TOL) -> CheckResult:
    """max(w(X), w(W), w(Y+Z)/2, w(Y-Z)/2) <= w([[X, Y], [Z, W]])."""
    s = BlockSubject.of(T, tol=tol)
    wx, ww, wp, wm = _shebr_terms(s)
    return CheckResult(max(wx, ww, wp / 2, wm / 2), s.omega(), tol)


def check_shebr_upper(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    wx, ww, wp, wm = _shebr_terms(s)
    return CheckResult(s.omega(), max(wx, ww) + (wp + wm) / 2, tol)


def check_pinching(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    lhs = max(
        s.omega("diag", s.block.diagonal_part()),
        s.omega("antidiag", s.block.off_diagonal_part()),
    )
    return CheckResult(lhs, s.omega(), tol)


def check_lemma04(T, tol: float = CHECK_TOL) -> CheckResult:
    """||A12|| <= omega(T)."""
    s = BlockSubject.of(T, tol=tol)
    return CheckResult(s.block_norm("a12"), s.omega(), tol)


def _offdiag_square_sum(s: BlockSubject) -> float:
    # |T12|^2 + |T21*|^2 = T12* T12 + T21 T21*
    t12, t21 = s.block.t12, s.block.t21
    return s.norm("offdiag_sq", t12.conj().T @ t12 + t21 @ t21.conj().T)


def check_thm06(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    return CheckResult(_offdiag_square_sum(s) / 4, s.omega() ** 2, tol)


def check_thm08(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    _require(_accretive_dissipative(s), "thm08", "accretive-dissipative")
    return CheckResult(_offdiag_square_sum(s), s.omega() ** 2, tol)


def check_eq8(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    _require(_positive(s), "eq8", "positive")
    return CheckResult(2 * s.block_norm("a12"), s.norm(), tol)


def check_eq09(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    _require(_positive(s), "eq09", "positive")
    return CheckResult(s.norm(), s.block_norm("a11") + s.block_norm("a22"), tol)


def check_hiro(T, tol: float = CHECK_TOL) -> CheckResult:
    """||T|| <= ||T11 + T22|| for positive T with self-adjoint off-diagonal block."""
    s = BlockSubject.of(T, tol=tol)
    _require(_positive_selfadjoint_offdiag(s), "hiro", "positive, self-adjoint off-diagonal")
    return CheckResult(s.norm(), s.norm("t11+t22", s.block.t11 + s.block.t22), tol)


def _omega_t12(s: BlockSubject) -> float:
    return s.omega("t12", s.block.t12)


def check_w12_arith(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    _require(_accretive_dissipative(s), "w12_arith", "accretive-dissipative")
    c = s.cart
    rhs = s.norm("a11+a22+b11+b22", c.a11 + c.a22 + c.b11 + c.b22) / 2
    return CheckResult(_omega_t12(s), rhs, tol)


def check_w12_geom(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    _require(_accretive_dissipative(s), "w12_geom", "accretive-dissipative")
    c = s.cart
    rhs = math.sqrt(s.norm("a11+b11", c.a11 + c.b11) * s.norm("a22+b22", c.a22 + c.b22))
    return CheckResult(_omega_t12(s), rhs, tol)


def _part_max(s: BlockSubject, p: str) -> float:
    c = s.cart
    x12 = getattr(c, p + "12")
    sym = s.norm(p + "12+", x12 + x12.conj().T) / 2
    skew = s.norm(p + "12-", x12 - x12.conj().T) / 2
    return max(s.block_norm(p + "11"), s.block_norm(p + "22"), sym, skew)


def check_alpha_beta(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    return CheckResult(max(_part_max(s, "a"), _part_max(s, "b")), s.omega(), tol)


def check_corollary_2max(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    _require(_accretive_dissipative(s), "cor_2max", "accretive-dissipative")
    return CheckResult(2 * max(s.block_norm("a12"), s.block_norm("b12")), s.omega(), tol)


def check_spectral_norm_bound(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    total = 0.0
    for p in ("a", "b"):
        d1, off, d2 = s.block_norm(p + "11"), s.block_norm(p + "12"), s.block_norm(p + "22")
        total += spectral_radius_2x2_nonneg(d1, off, off, d2)
    return CheckResult(s.norm(), total, tol)


def check_eqr(T, tol: float = CHECK_TOL) -> CheckResult:
    """r(T) <= r([[||T11||, ||T12||], [||T21||, ||T22||]]) for Hermitian T."""
    s = BlockSubject.of(T, tol=tol)
    _require(_hermitian(s), "eqr", "Hermitian")
    rhs = spectral_radius_2x2_nonneg(*(s.block_norm(k) for k in ("t11", "t12", "t21", "t22")))
    return CheckResult(spectral_radius_hermitian(s.matrix), rhs, tol)


def _thm1_rhs(s: BlockSubject, t: float, printed: bool) -> float:
    p, q = 2 * t, 2 * (1 - t)

    def nsum(key, x, y):
        return s.norm(key, x + y)

    first = max(
        nsum(f"|t11|+|t21|^{p}", s.abs_power("t11", p), s.abs_power("t21", p)),
        nsum(f"|t22|+|t12|^{p}", s.abs_power("t22", p), s.abs_power("t12", p)),
    )
    # rows of the y-side pair the adjoints sharing a range: (T11*, T12*) and (T22*, T21*)
    left, right = ("t21", "t12") if printed else ("t12", "t21")
    second = max(
        nsum(f"|t11*|+|{left}*|^{q}", s.abs_power("t11", q, True), s.abs_power(left, q, True)),
        nsum(f"|t22*|+|{right}*|^{q}", s.abs_power("t22", q, True), s.abs_power(right, q, True)),
    )
    return (first + second) / 2


def check_thm1(T, t: float = 0.5, tol: float = CHECK_TOL) -> CheckResult:
    """Weighted bound ||T|| <= (1/2) max(...|T_j|^{2t}...) + (1/2) max(...|T_j*|^{2(1-t)}...).

    The adjoint-side sums pair |T1*| with |T2*| and |T4*| with |T3*| (blocks
    numbered row-wise), which is the pairing the mixed Schwarz argument
    produces; :func:`probe_thm1_as_printed` evaluates the other pairing.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    s = BlockSubject.of(T, tol=tol)
    return CheckResult(s.norm(), _thm1_rhs(s, t, printed=False), tol)


def probe_thm1_as_printed(T, t: float = 0.5, tol: float = CHECK_TOL) -> CheckResult:
    """Same bound with the adjoint pairs (T1*, T3*) and (T4*, T2*); fails e.g. on [[1, 1], [0, 0]]."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    s = BlockSubject.of(T, tol=tol)
    return CheckResult(s.norm(), _thm1_rhs(s, t, printed=True), tol)


def check_thm2(T, pair: Optional[FunctionPair] = None, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    pair = pair or power_pair(0.5)

    def f2(name):
        return apply_to_spectrum(_abs_eigen(s, name, False), lambda x: pair.f(x) ** 2)

    def g2(name):
        return apply_to_spectrum(_abs_eigen(s, name, True), lambda x: pair.g(x) ** 2)

    tag = pair.label
    rhs = (
        s.norm(f"f2 t11+t21 {tag}", f2("t11") + f2("t21"))
        + s.norm(f"g2 t11*+t12* {tag}", g2("t11") + g2("t12"))
        + s.norm(f"f2 t12+t22 {tag}", f2("t12") + f2("t22"))
        + s.norm(f"g2 t21*+t22* {tag}", g2("t21") + g2("t22"))
    ) / 2
    return CheckResult(s.norm(), rhs, tol)


def _abs_eigen(s: BlockSubject, name: str, star: bool) -> EigenDecomposition:
    """Eigendecomposition of |X| (or |X*|), built from the cached Gram decomposition."""
    key = f"abs:{name}{'*' if star else ''}"
    if key not in s._gram:
        s.abs_power(name, 1.0, star)
        gram = s._gram[name + ("*" if star else "")]
        s._gram[key] = EigenDecomposition(
            values=np.sqrt(np.maximum(gram.values, 0.0)), vectors=gram.vectors
        )
    return s._gram[key]


def check_circulant_equality(T1, T2=None, t: float = 0.5, tol: float = CHECK_TOL) -> CheckResult:
    """max(||T1 + T2||, ||T1 - T2||) = ||[[T1, T2], [T2, T1]]||, plus the weighted upper bound."""
    s = PairSubject.of(T1 if T2 is None else (T1, T2), tol=tol)
    a, b = s.t1, s.t2
    full = operator_norm(np.block([[a, b], [b, a]]))
    lhs = max(operator_norm(a + b), operator_norm(a - b))
    p, q = 2 * t, 2 * (1 - t)
    bound = (
        operator_norm(s.abs_power(1, p) + s.abs_power(2, p))
        + operator_norm(s.abs_power(1, q, True) + s.abs_power(2, q, True))
    ) / 2
    return CheckResult(lhs, full, tol, equality=True, parts=(CheckResult(full, bound, tol),))


def probe_false_triangle_abs(T1, T2=None, tol: float = CHECK_TOL) -> CheckResult:
    """||T1 + T2|| <= || |T1| + |T2| ||, which fails in general."""
    s = PairSubject.of(T1 if T2 is None else (T1, T2), tol=tol)
    lhs = operator_norm(s.t1 + s.t2)
    rhs = operator_norm(s.abs_power(1, 1.0) + s.abs_power(2, 1.0))
    return CheckResult(lhs, rhs, tol)


def check_ad_norm_bound(T, tol: float = CHECK_TOL) -> CheckResult:
    s = BlockSubject.of(T, tol=tol)
    _require(_accretive_dissipative(s), "ad_norm_bound", "accretive-dissipative")
    ra = s.block_norm("a11") + s.block_norm("a22")
    rb = s.block_norm("b11") + s.block_norm("b22")
    return CheckResult(s.norm(), math.hypot(ra, rb), tol)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class InequalityCheck:
    id: str
    paper_location: str
    kind: str  # "block" or "pair"
    applicability: Callable[[Any], bool]
    evaluate: Callable[..., CheckResult]
    defaults: dict = field(default_factory=dict)
    sweep_params: tuple = ({},)
    expected_falsifiable: bool = False
    whole_matrix: bool = False  # meaningful without a block partition

    def subject(self, x, **kw) -> Subject:
        if self.kind == "pair":
            return PairSubject.of(x, **kw)
        return BlockSubject.of(x, **kw)

    def applicable(self, subject: Subject) -> bool:
        return bool(self.applicability(subject))

    def run(self, subject: Subject, **params) -> CheckResult:
        if not self.applicable(subject):
            raise NotApplicable(f"{self.id} does not apply to this input")
        merged = {**self.defaults, **params}
        return self.evaluate(subject, tol=subject.tol, **merged)


_T_GRID = tuple({"t": t} for t in (0.0, 0.25, 0.5, 0.75, 1.0))


def _build_registry() -> tuple[InequalityCheck, ...]:
    ad = _accretive_dissipative
    pos = _positive
    entries = [
        ("norm_radius_equiv", "norm/numerical radius equivalence: ||T||/2 <= w(T) <= ||T||",
         "block", _always, check_norm_radius_equiv),
        ("real_imag", "real and imaginary parts: max(||Re T||, ||Im T||) <= w(T)",
         "block", _always, check_real_imag_parts),
        ("shebr_lower", "block numerical radius lower bound via w(X), w(W), w(Y+Z)/2, w(Y-Z)/2",
         "block", _always, check_shebr_lower),
        ("shebr_upper", "block numerical radius upper bound max(w(X), w(W)) + (w(Y+Z) + w(Y-Z))/2",
         "block", _always, check_shebr_upper),
        ("pinching", "pinching: diagonal and anti-diagonal parts have smaller numerical radius",
         "block", _always, check_pinching),
        ("lemma04", "real off-diagonal block: ||A12|| <= w(T)",
         "block", _always, check_lemma04),
        ("thm06", "off-diagonal squares: ||T12*T12 + T21T21*|| / 4 <= w(T)^2",
         "block", _always, check_thm06),
        ("thm08", "accretive-dissipative off-diagonal squares: ||T12*T12 + T21T21*|| <= w(T)^2",
         "block", ad, check_thm08),
        ("eq8", "positive block: 2||A12|| <= ||T||",
         "block", pos, check_eq8),
        ("eq09", "positive block: ||T|| <= ||A11|| + ||A22||",
         "block", pos, check_eq09),
        ("hiro", "positive block with self-adjoint off-diagonal: ||T|| <= ||T11 + T22||",
         "block", _positive_selfadjoint_offdiag, check_hiro),
        ("w12_arith", "accretive-dissipative: w(T12) <= ||A11 + A22 + B11 + B22|| / 2",
         "block", ad, check_w12_arith),
        ("w12_geom", "accretive-dissipative: w(T12) <= sqrt(||A11 + B11|| ||A22 + B22||)",
         "block", ad, check_w12_geom),
        ("alpha_beta", "Cartesian lower bound: max(alpha, beta) <= w(T)",
         "block", _always, check_alpha_beta),
        ("cor_2max", "accretive-dissipative: 2 max(||A12||, ||B12||) <= w(T)",
         "block", ad, check_corollary_2max),
        ("spectral_norm_bound", "||T|| <= r(norm matrix of A) + r(norm matrix of B)",
         "block", _always, check_spectral_norm_bound),
        ("eqr", "spectral radius dominated by the 2x2 matrix of block norms (Hermitian T)",
         "block", _hermitian, check_eqr),
    ]
    whole = {"norm_radius_equiv", "real_imag"}
    checks = [
        InequalityCheck(i, loc, kind, app, ev, whole_matrix=i in whole)
        for i, loc, kind, app, ev in entries
    ]
    checks += [
        InequalityCheck(
            "thm1", "weighted bound with |T_j|^{2t} and |T_j*|^{2(1-t)} (mixed Schwarz pairing)",
            "block", _always, check_thm1, defaults={"t": 0.5}, sweep_params=_T_GRID,
        ),
        InequalityCheck(
            "thm2", "bound with f^2(|T_j|), g^2(|T_j*|) for f g = identity",
            "block", _always, check_thm2, defaults={"pair": power_pair(0.5)},
            sweep_params=tuple(
                {"pair": p}
                for p in (power_pair(0.3), power_pair(0.5), power_pair(0.7), rational_pair())
            ),
        ),
        InequalityCheck(
            "circulant_eq", "max(||T1 + T2||, ||T1 - T2||) = ||[[T1, T2], [T2, T1]]|| and its weighted bound",
            "pair", _always, check_circulant_equality, defaults={"t": 0.5},
            sweep_params=({"t": 0.0}, {"t": 0.5}, {"t": 1.0}),
        ),
        InequalityCheck(
            "probe_false_triangle_abs", "false in general: ||T1 + T2|| <= || |T1| + |T2| ||",
            "pair", _always, probe_false_triangle_abs, expected_falsifiable=True,
        ),
        InequalityCheck(
            "ad_norm_bound", "accretive-dissipative: ||T|| <= sqrt((||A11||+||A22||)^2 + (||B11||+||B22||)^2)",
            "block", ad, check_ad_norm_bound,
        ),
        InequalityCheck(
            "probe_thm1_as_printed", "weighted bound with adjoint pairs (T1*, T3*), (T4*, T2*)",
            "block", _always, probe_thm1_as_printed, defaults={"t": 0.5},
            sweep_params=_T_GRID, expected_falsifiable=True,
        ),
    ]
    ids = [c.id for c in checks]
    assert len(ids) == len(set(ids))
    return tuple(checks)


_REGISTRY = _build_registry()
_BY_ID = {c.id: c for c in _REGISTRY}


def registry() -> tuple[InequalityCheck, ...]:
    return _REGISTRY


def get_check(check_id: str) -> InequalityCheck:
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise UnknownCheck(f"unknown check id {check_id!r}") from None


def params_to_json(params: dict) -> dict:
    out = {}
    for k, v in params.items():
        out[k] = v.label if isinstance(v, FunctionPair) else v
    return out


def result_record(check: InequalityCheck, subject: Optional[Subject], **params) -> dict:
    """Report row for one check on one subject (``applicable`` false if it does not apply)."""
    merged = {**check.defaults, **params}
    rec: dict[str, Any] = {
        "id": check.id,
        "paper_location": check.paper_location,
        "applicable": False,
        "lhs": None,
        "rhs": None,
        "slack": None,
        "holds": None,
        "params": params_to_json(merged),
    }
    if subject is None or not check.applicable(subject):
        return rec
    res = check.evaluate(subject, tol=subject.tol, **merged)
    rec.update(applicable=True, lhs=res.lhs, rhs=res.rhs, slack=res.slack, holds=res.holds)
    if res.parts:
        rec["parts"] = [
            {"lhs": p.lhs, "rhs": p.rhs, "slack": p.slack, "holds": p.holds} for p in res.parts
        ]
    return rec
