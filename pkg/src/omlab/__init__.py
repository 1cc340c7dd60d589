"""Numerical radius and norm inequalities for 2x2 operator matrices."""

from .blocks import (
    Block2x2,
    CartesianBlocks,
    OperatorClass,
    assemble,
    cartesian,
    cauchy_schwarz_witness,
    classify,
    congruence_scale,
    partition,
)
from .catalog import (
    BlockSubject,
    CheckResult,
    FunctionPair,
    InequalityCheck,
    PairSubject,
    get_check,
    power_pair,
    registry,
)
from .linalg import (
    abs_power,
    hermitian_eigen,
    hermitian_eigvals,
    matrix_abs,
    operator_norm,
    spectral_function,
)
from .radius import (
    numerical_radius,
    radius_2x2_real,
    radius_2x2_real_general,
    spectral_radius_2x2_nonneg,
    spectral_radius_hermitian,
)
from .sampling import SampleSpec, sample, sharpness_search
from .sweep import run_sweep

__version__ = "0.1.0"
