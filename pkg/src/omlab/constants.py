"""Tolerance and algorithm constants shared by every module.

All tolerances are relative with an additive guard of 1, i.e. a quantity
``x`` compared against a reference scale ``s`` passes when
``|x| <= TOL * (1 + s)``.

=====================  ========  ==============================================
name                   value     used for
=====================  ========  ==============================================
KERNEL_TOL             1e-10     Hermitian precondition, decomposition health
CHECK_TOL              1e-8      inequality verdicts, class membership slack
PSD_TOL                1e-8      spectral_function / classify negativity guard
JACOBI_OFF_TOL         1e-13     Jacobi stopping rule on off-diagonal mass
JACOBI_MAX_SWEEPS      100       Jacobi sweep cap
CS_TOL                 1e-10     Cauchy-Schwarz witness violation margin
GOLDEN_WIDTH           1e-12     theta bracket width for golden-section search
DEFAULT_RESOLUTION     720       theta grid size for the numerical radius
=====================  ========  ==============================================
"""

KERNEL_TOL = 1e-10
CHECK_TOL = 1e-8
PSD_TOL = 1e-8
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
CS_TOL = 1e-10
GOLDEN_WIDTH = 1e-12
DEFAULT_RESOLUTION = 720

TOL_ENV_VAR = "OMLAB_TOL"
