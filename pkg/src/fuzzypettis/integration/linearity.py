"""Additivity and positive homogeneity of the fuzzy Pettis integral."""

from dataclasses import dataclass

from loguru import logger

from ..exceptions import FuzzyPettisError
from ..fuzzy import add, fuzzy_hausdorff, null_element, scale_fuzzy
from ..geometry.solver import DEFAULT_TOL
from ..measure import FuzzyMapping, MeasurableSet, add_mappings, check_compatible, scale_mapping
from .pettis import SUPPORT_TOL, fuzzy_pettis_integral


@dataclass(frozen=True)
class LinearityResiduals:
    """Residuals of ∫(F+G) = ∫F + ∫G and ∫λF = λ∫F; ``zero_exact`` covers λ = 0."""

    scalar: float
    additivity: float
    homogeneity: float
    zero_exact: bool = True

    @property
    def max_residual(self) -> float:
        return max(self.additivity, self.homogeneity)

    def passed(self, tol: float = SUPPORT_TOL) -> bool:
        return self.max_residual <= tol and self.zero_exact


def scalar_linearity_check(
    F: FuzzyMapping,
    G: FuzzyMapping,
    scalar: float,
    A: MeasurableSet,
    tol: float = DEFAULT_TOL,
    prune: bool = False
) -> LinearityResiduals:
    """
    Compare both sides of the two linearity identities on A.

    Args:
        F: First mapping
        G: Second mapping on the same space
        scalar: λ >= 0
        A: Measurable set
        tol: Distance solver tolerance
        prune: Prune redundant vertices inside the integrals

    Returns:
        LinearityResiduals
    """
    if scalar < 0:
        raise FuzzyPettisError(f"Scalar must be >= 0, got {scalar}", "lambda")
    check_compatible(F, G)

    integral_f = fuzzy_pettis_integral(F, A, tol=tol, prune=prune).value
    integral_g = fuzzy_pettis_integral(G, A, tol=tol, prune=prune).value
    integral_sum = fuzzy_pettis_integral(add_mappings(F, G), A, tol=tol, prune=prune).value
    additivity = fuzzy_hausdorff(integral_sum, add(integral_f, integral_g), tol)

    scaled = scale_mapping(F, scalar)
    integral_scaled = fuzzy_pettis_integral(scaled, A, tol=tol, prune=prune).value
    homogeneity = fuzzy_hausdorff(integral_scaled, scale_fuzzy(integral_f, scalar), tol)

    zero_exact = True
    if scalar == 0:
        # χ_{0} exactly: one level, one vertex, all coordinates zero
        body = integral_scaled.core_body
        zero_exact = (
            integral_scaled.levels == null_element(F.dims).levels
            and body.vertex_count == 1
            and not body.vertices.any()
        )

    logger.debug(
        f"Linearity on {A} with λ={scalar}: additivity={additivity:.3e}, "
        f"homogeneity={homogeneity:.3e}"
    )
    return LinearityResiduals(scalar, additivity, homogeneity, zero_exact)
