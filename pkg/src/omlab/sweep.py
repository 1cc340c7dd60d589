"""Soundness campaigns: every applicable check on many seeded samples of one class."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .catalog import (
    BlockSubject,
    InequalityCheck,
    PairSubject,
    get_check,
    params_to_json,
    registry,
)
from .constants import CHECK_TOL
from .io import matrix_to_json
from .sampling import SampleSpec, derive_seed, draw


@dataclass
class CheckStats:
    """Running aggregate of one check over a campaign."""

    id: str
    paper_location: str
    expected_falsifiable: bool
    evaluations: int = 0
    applicable_samples: int = 0
    violations: int = 0
    min_slack: float = math.inf
    min_rel_slack: float = math.inf
    slack_sum: float = 0.0
    worst: Optional[dict] = None

    @property
    def mean_slack(self) -> Optional[float]:
        return self.slack_sum / self.evaluations if self.evaluations else None

    def as_dict(self) -> dict:
        fin = lambda v: v if self.evaluations else None  # noqa: E731
        return {
            "id": self.id,
            "paper_location": self.paper_location,
            "expected_falsifiable": self.expected_falsifiable,
            "evaluations": self.evaluations,
            "applicable_samples": self.applicable_samples,
            "violations": self.violations,
            "min_slack": fin(self.min_slack),
            "mean_slack": self.mean_slack,
            "min_rel_slack": fin(self.min_rel_slack),
            "worst": self.worst,
        }


@dataclass
class SweepReport:
    kind: str
    block_dims: tuple[int, ...]
    trials: int
    seed: int
    tol: float
    stats: dict[str, CheckStats] = field(default_factory=dict)

    @property
    def theorem_violations(self) -> dict[str, int]:
        return {
            k: s.violations
            for k, s in self.stats.items()
            if not s.expected_falsifiable and s.violations
        }

    @property
    def probe_violations(self) -> dict[str, int]:
        return {k: s.violations for k, s in self.stats.items() if s.expected_falsifiable}

    @property
    def ok(self) -> bool:
        return not self.theorem_violations

    def as_dict(self) -> dict:
        return {
            "command": "sweep",
            "class": self.kind,
            "n": list(self.block_dims),
            "trials": self.trials,
            "seed": self.seed,
            "tol": self.tol,
            "checks": [s.as_dict() for s in self.stats.values() if not s.expected_falsifiable],
            "probes": [s.as_dict() for s in self.stats.values() if s.expected_falsifiable],
            "violations": self.theorem_violations,
            "probe_violations": self.probe_violations,
        }


def _select(checks: Optional[Iterable[Union[str, InequalityCheck]]]) -> list[InequalityCheck]:
    if checks is None:
        return list(registry())
    return [c if isinstance(c, InequalityCheck) else get_check(c) for c in checks]


def _witness(subject) -> dict:
    if isinstance(subject, PairSubject):
        return {"t1": matrix_to_json(subject.t1), "t2": matrix_to_json(subject.t2)}
    return {"matrix": matrix_to_json(subject.matrix)}


def trial_seed(seed: int, trial: int) -> int:
    """Seed of trial ``trial``; ``sample(SampleSpec(kind, n, seed=trial_seed(...)))`` rebuilds T."""
    return derive_seed(seed, trial)


def run_sweep(
    kind: str,
    n: Union[int, Sequence[int]],
    trials: int,
    seed: int,
    checks: Optional[Iterable[Union[str, InequalityCheck]]] = None,
    tol: float = CHECK_TOL,
    scale: float = 1.0,
) -> SweepReport:
    """Evaluate the selected checks (all by default) on ``trials`` samples.

    Trial ``i`` draws T (``2n x 2n``) and, if a pair check is selected, a
    second matrix from the generator seeded with ``trial_seed(seed, i)``. A
    sequence of block dimensions is cycled through trial by trial. Every check
    runs with each of its ``sweep_params`` wherever it applies.
    """
    dims = (int(n),) if np.isscalar(n) else tuple(int(v) for v in n)
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    SampleSpec(kind, dims[0])  # validates the class name and dimension
    selected = _select(checks)
    report = SweepReport(kind, dims, trials, seed, tol)
    for c in selected:
        report.stats[c.id] = CheckStats(c.id, c.paper_location, c.expected_falsifiable)
    need_pair = any(c.kind == "pair" for c in selected)

    for i in range(trials):
        nd = dims[i % len(dims)]
        s = trial_seed(seed, i)
        rng = np.random.default_rng(s)
        t = draw(kind, nd, rng, scale)
        block = BlockSubject.of(t, tol=tol)
        pair = PairSubject(t, draw(kind, nd, rng, scale), tol=tol) if need_pair else None
        for c in selected:
            subject = pair if c.kind == "pair" else block
            if not c.applicable(subject):
                continue
            st = report.stats[c.id]
            st.applicable_samples += 1
            for params in c.sweep_params:
                res = c.run(subject, **params)
                st.evaluations += 1
                st.slack_sum += res.slack
                st.min_slack = min(st.min_slack, res.slack)
                rel = res.min_rel_slack
                if not res.holds:
                    st.violations += 1
                if rel < st.min_rel_slack:
                    st.min_rel_slack = rel
                    st.worst = {
                        "trial": i,
                        "seed": s,
                        "n": nd,
                        "params": params_to_json({**c.defaults, **params}),
                        "lhs": res.lhs,
                        "rhs": res.rhs,
                        "slack": res.slack,
                        "holds": res.holds,
                        **_witness(subject),
                    }
    return report
