"""Seeded random operator matrices and a hill-descent search for tight inputs.

A :class:`SampleSpec` with ``block_dim = n`` produces a ``2n x 2n`` matrix,
the natural input of the block checks. Pair checks draw two such matrices
from one generator stream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

import numpy as np

from .blocks import partition
from .catalog import (
    BlockSubject,
    CheckResult,
    InequalityCheck,
    PairSubject,
    get_check,
    params_to_json,
)
from .errors import NotApplicable

CLASSES = (
    "ginibre",
    "hermitian",
    "psd",
    "positive_block",
    "accretive",
    "accretive_dissipative",
    "normal",
    "square_zero",
    "positive_hermitian_offdiag",
)


@dataclass(frozen=True)
class SampleSpec:
    kind: str
    block_dim: int
    scale: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in CLASSES:
            raise ValueError(f"unknown sample class {self.kind!r}; choose from {', '.join(CLASSES)}")
        if int(self.block_dim) != self.block_dim or self.block_dim < 1:
            raise ValueError(f"block_dim must be a positive integer, got {self.block_dim!r}")
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale!r}")

    @property
    def dim(self) -> int:
        return 2 * self.block_dim


def derive_seed(seed: int, *index: int) -> int:
    """Independent 64-bit seed for a sub-stream such as a trial or a restart."""
    ss = np.random.SeedSequence(seed, spawn_key=tuple(index))
    return int(ss.generate_state(1, np.uint64)[0])


def ginibre(rng: np.random.Generator, d: int, cols: Optional[int] = None) -> np.ndarray:
    """i.i.d. complex standard normal entries (E|z|^2 = 1)."""
    shape = (d, d if cols is None else cols)
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def _hermitize(x: np.ndarray) -> np.ndarray:
    return (x + x.conj().T) / 2


def _psd(rng, d) -> np.ndarray:
    g = ginibre(rng, d)
    return g @ g.conj().T


def draw(kind: str, n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """One 2n x 2n sample of ``kind`` from ``rng``."""
    d = 2 * n
    if kind == "ginibre":
        m = ginibre(rng, d)
    elif kind == "hermitian":
        m = _hermitize(ginibre(rng, d))
    elif kind == "psd":
        m = _psd(rng, d)
    elif kind == "positive_block":
        # low rank on purpose: singular positive blocks sit on the boundary of the class
        r = int(rng.integers(1, d + 1))
        g = ginibre(rng, d, r)
        m = g @ g.conj().T
    elif kind == "accretive":
        m = _psd(rng, d) + 1j * _hermitize(ginibre(rng, d))
    elif kind == "accretive_dissipative":
        m = _psd(rng, d) + 1j * _psd(rng, d)
    elif kind == "normal":
        q, r = np.linalg.qr(ginibre(rng, d))
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        lam = ginibre(rng, d, 1)[:, 0]
        m = (q * lam) @ q.conj().T
    elif kind == "square_zero":
        x = ginibre(rng, d, 1)[:, 0]
        y = ginibre(rng, d, 1)[:, 0]
        y = y - x * (np.vdot(x, y) / np.vdot(x, x))
        m = np.outer(x, y.conj())
    elif kind == "positive_hermitian_offdiag":
        a, c, h = (_hermitize(ginibre(rng, n)) for _ in range(3))
        m = np.block([[a, h], [h, c]])
        m = _shift_positive(m, extra=float(rng.exponential()))
    else:
        raise ValueError(f"unknown sample class {kind!r}")
    return scale * m


def sample(spec: SampleSpec) -> np.ndarray:
    return draw(spec.kind, spec.block_dim, np.random.default_rng(spec.seed), spec.scale)


# ---------------------------------------------------------------------------
# projections back into a class


def _clamp_psd(h: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(_hermitize(h))
    return (v * np.maximum(w, 0.0)) @ v.conj().T


def _shift_positive(m: np.ndarray, extra: float = 0.0) -> np.ndarray:
    m = _hermitize(m)
    lo = float(np.linalg.eigvalsh(m)[0])
    return m + (max(-lo, 0.0) + extra) * np.eye(m.shape[0])


def project(kind: str, x: np.ndarray) -> np.ndarray:
    """Nearby member of ``kind`` (not necessarily the nearest one)."""
    if kind == "ginibre":
        return x
    if kind == "hermitian":
        return _hermitize(x)
    if kind in ("psd", "positive_block"):
        return _clamp_psd(x)
    re = _hermitize(x)
    im = (x - x.conj().T) / 2j
    if kind == "accretive":
        return _clamp_psd(re) + 1j * im
    if kind == "accretive_dissipative":
        return _clamp_psd(re) + 1j * _clamp_psd(im)
    if kind == "normal":
        # keep the diagonal of x in an orthonormal eigenbasis of Re x
        _, v = np.linalg.eigh(re)
        d = np.diag(v.conj().T @ x @ v)
        return (v * d) @ v.conj().T
    if kind == "square_zero":
        u, s, vh = np.linalg.svd(x)
        xv = s[0] * u[:, 0]
        yv = vh[0].conj()
        yv = yv - xv * (np.vdot(xv, yv) / np.vdot(xv, xv))
        return np.outer(xv, yv.conj())
    if kind == "positive_hermitian_offdiag":
        b = partition(_hermitize(x))
        h = _hermitize(b.t12)
        return _shift_positive(np.block([[b.t11, h], [h, b.t22]]))
    raise ValueError(f"unknown sample class {kind!r}")


# ---------------------------------------------------------------------------
# sharpness search

Input = Union[np.ndarray, tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class SearchResult:
    check_id: str
    spec: SampleSpec
    params: dict
    witness: Input
    result: CheckResult
    restart: int
    accepted_steps: int
    initial_slack: float
    restarts_run: int = 0
    applicable_restarts: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def slack(self) -> float:
        return self.result.slack


def _draw_input(check: InequalityCheck, spec: SampleSpec, rng) -> Input:
    t = draw(spec.kind, spec.block_dim, rng, spec.scale)
    if check.kind == "pair":
        return t, draw(spec.kind, spec.block_dim, rng, spec.scale)
    return t


def _evaluate(check: InequalityCheck, x: Input, params: dict) -> Optional[CheckResult]:
    subject = PairSubject.of(x) if check.kind == "pair" else BlockSubject.of(x)
    if not check.applicable(subject):
        return None
    return check.run(subject, **params)


def _perturb(x: Input, kind: str, sigma: float, scale: float, rng) -> Input:
    """Sparse entrywise Gaussian move, additive or multiplicative with equal odds.

    Additive moves have size ``sigma``; multiplicative ones rescale the chosen
    entries by ``1 + rho g`` with ``rho = 0.5 sqrt(sigma / (0.5 scale))``, so
    small entries can shrink geometrically towards 0 long after ``sigma`` has
    become too coarse to reach them.
    """
    rho = 0.5 * np.sqrt(sigma / (0.5 * scale))

    def one(m):
        norm0 = np.linalg.norm(m)
        d = m.shape[0]
        mask = rng.random(m.shape) < 1.5 / m.size
        if not mask.any():
            mask[rng.integers(d), rng.integers(d)] = True
        g = ginibre(rng, d) * mask
        step = sigma * g if rng.random() < 0.5 else rho * m * g
        p = project(kind, m + step)
        norm1 = np.linalg.norm(p)
        # slack is homogeneous, so hold the size fixed to stop collapse towards O
        return p * (norm0 / norm1) if norm0 > 0 and norm1 > 0 else p

    if isinstance(x, tuple):
        return one(x[0]), one(x[1])
    return one(x)


def sharpness_search(
    check_id: str,
    spec: SampleSpec,
    restarts: int = 50,
    iterations: int = 2000,
    params: Optional[dict] = None,
    sigma_start: float = 0.5,
    sigma_end: float = 1e-4,
) -> SearchResult:
    """Random-restart hill descent on the slack of one check.

    Restart ``r`` starts from an independent sample (restart 0 from
    ``sample(spec)`` itself) and runs ``iterations`` proposals whose step size
    decays geometrically from ``sigma_start * scale`` to ``sigma_end * scale``.
    A proposal is accepted when the check still applies and the slack drops.
    With ``restarts = 0`` the unperturbed base sample is evaluated.

    Raises:
        UnknownCheck: ``check_id`` is not registered.
        NotApplicable: the check never applied to a starting sample.
    """
    check = get_check(check_id)
    params = {**check.defaults, **(params or {})}
    if restarts < 0 or iterations < 0:
        raise ValueError("restarts and iterations must be nonnegative")

    def start(r: int):
        seed = spec.seed if r == 0 else derive_seed(spec.seed, r)
        rng = np.random.default_rng(seed)
        return _draw_input(check, spec, rng), rng

    best: Optional[SearchResult] = None
    applicable = 0
    if restarts == 0:
        x, _ = start(0)
        res = _evaluate(check, x, params)
        if res is None:
            raise NotApplicable(f"{check_id} does not apply to the base {spec.kind} sample")
        return SearchResult(check_id, spec, params, x, res, 0, 0, res.slack, 0, 1)

    if iterations > 1:
        ratio = (sigma_end / sigma_start) ** (1.0 / (iterations - 1))
    else:
        ratio = 1.0
    for r in range(restarts):
        x, rng = start(r)
        cur = _evaluate(check, x, params)
        if cur is None:
            continue
        applicable += 1
        initial = cur.slack
        accepted = 0
        sigma = sigma_start * spec.scale
        for _ in range(iterations):
            y = _perturb(x, spec.kind, sigma, spec.scale, rng)
            sigma *= ratio
            res = _evaluate(check, y, params)
            if res is not None and res.slack < cur.slack:
                x, cur = y, res
                accepted += 1
        if best is None or cur.slack < best.result.slack:
            best = SearchResult(check_id, spec, params, x, cur, r, accepted, initial)
    if best is None:
        raise NotApplicable(f"{check_id} did not apply to any {spec.kind} starting sample")
    return SearchResult(
        best.check_id, spec, params, best.witness, best.result, best.restart,
        best.accepted_steps, best.initial_slack, restarts, applicable,
    )


def witness_record(res: SearchResult) -> dict[str, Any]:
    return {
        "id": res.check_id,
        "class": res.spec.kind,
        "n": res.spec.block_dim,
        "seed": res.spec.seed,
        "params": params_to_json(res.params),
        "restart": res.restart,
        "restarts_run": res.restarts_run,
        "accepted_steps": res.accepted_steps,
        "initial_slack": res.initial_slack,
        "lhs": res.result.lhs,
        "rhs": res.result.rhs,
        "slack": res.result.slack,
        "holds": res.result.holds,
    }
