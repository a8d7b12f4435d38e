"""Fuzzy Pettis integral, its decomposition, linearity, cores and verification suites."""

from .core import (
    FINITE_DIMENSION_NOTE,
    CoreReport,
    core,
    core_nonempty_check,
    dominates,
    shrink_toward_selection,
)
from .decomposition import DecompositionResult, decompose, integral_additivity_check
from .linearity import LinearityResiduals, scalar_linearity_check
from .pettis import (
    IntegralResult,
    fuzzy_pettis_integral,
    integral_membership,
    integral_nesting_check,
    level_integral,
    scalar_integrability,
    scalar_integral,
    scalar_integral_profile,
)
from .verification import (
    MeasureVerification,
    VerificationReport,
    integral_measure_verify,
    run_theorem_suite,
    tail_convergence,
)

__all__ = [
    'FINITE_DIMENSION_NOTE', 'CoreReport', 'DecompositionResult', 'IntegralResult',
    'LinearityResiduals', 'MeasureVerification', 'VerificationReport', 'core',
    'core_nonempty_check', 'decompose', 'dominates', 'fuzzy_pettis_integral',
    'integral_additivity_check', 'integral_measure_verify', 'integral_membership',
    'integral_nesting_check', 'level_integral', 'run_theorem_suite', 'scalar_integrability',
    'scalar_integral', 'scalar_integral_profile', 'scalar_linearity_check',
    'shrink_toward_selection', 'tail_convergence',
]
