"""Measure property of the integral and the structural check suite behind ``verify``."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from loguru import logger

from ..exceptions import OracleLimitError
from ..fuzzy import (
    FuzzyNumber,
    add,
    from_level_family,
    fuzzy_hausdorff,
    level_cut,
    level_family_conditions,
    membership,
    null_element,
    scale_fuzzy,
)
from ..geometry import (
    ConvexBody,
    DirectionGrid,
    contains,
    default_grid,
    hausdorff,
    prune_redundant,
    subset_of,
    support_profile,
)
from ..geometry.solver import DEFAULT_TOL
from ..measure import (
    FiniteMeasureSpace,
    FuzzyMapping,
    MeasurableSet,
    TailFamily,
    canonical_mapping_selection,
    check_partition,
    fuzzy_from_selection,
    geometric_tail_family,
    positive_sets,
    random_mapping,
    union_of,
    vector_integral,
)
from ..oracle import (
    SampleGrid,
    oracle_hull_membership_many,
    oracle_supmin_add,
    oracle_support,
)
from ..oracle.brute_force import DEFAULT_DIVISIONS, MAX_DIMS, MAX_VERTICES
from .core import core_nonempty_check, shrink_toward_selection
from .decomposition import ATOM_TOL, decompose, integral_additivity_check
from .linearity import scalar_linearity_check
from .pettis import SUPPORT_TOL, fuzzy_pettis_integral, integral_nesting_check

PASS = "PASS"
FAIL = "FAIL"
TRIVIAL = "TRIVIAL"
TRIVIAL_NOTE = "trivially satisfied in R^d"

REPORT_COLUMNS = ["theorem", "status", "max_residual", "detail"]
TAIL_COLUMNS = ["m", "n", "gap", "bound"]

# Statements about operators and dual spaces with nothing to compute in R^d
FINITE_DIMENSION_ROWS = (
    "operator-weak-continuity",
    "operator-weak-compactness",
    "wcg-determination",
    "angelic-dual",
    "c0-free-integrability",
)

REPRESENTATION_PROBES = 20


@dataclass(frozen=True, eq=False)
class MeasureVerification:
    """
    Measure axioms of A ↦ M̃_Γ(A) on a partition and an optional geometric tail.

    ``tail`` has columns m, n, gap, bound; ``level_conditions`` maps each
    condition name to whether it held for every examined set.
    """

    empty_residual: float
    additivity_residual: float
    tail: pd.DataFrame
    permutation_residual: float
    level_conditions: Dict[str, bool]
    tol: float = SUPPORT_TOL

    @property
    def tail_passed(self) -> bool:
        if self.tail.empty:
            return True
        return bool((self.tail["gap"] <= self.tail["bound"] + self.tol).all())

    @property
    def passed(self) -> bool:
        return (
            self.empty_residual == 0.0
            and self.additivity_residual <= self.tol
            and self.tail_passed
            and self.permutation_residual <= self.tol
            and all(self.level_conditions.values())
        )


def _pruned(u: FuzzyNumber) -> FuzzyNumber:
    return FuzzyNumber(u.levels, tuple(prune_redundant(body) for body in u.bodies))


def tail_convergence(
    family: TailFamily,
    tol: float = DEFAULT_TOL,
    seed: int = 0
) -> Tuple[pd.DataFrame, float]:
    """
    Partial sums S_m = M̃(A_1 ∪ ... ∪ A_m) against the analytic tail bound.

    Returns:
        Tuple of (gap table with columns m, n, gap, bound; distance between the
        truncated sum and the integral of the same family summed in shuffled order)
    """
    space = family.space
    partial = []
    total = null_element(family.value.dims)
    for i in range(family.count):
        total = _pruned(add(total, scale_fuzzy(family.mapping[i], space.weights[i])))
        partial.append(total)

    rows = []
    for m in range(1, family.count + 1):
        for n in range(m + 1, family.count + 1):
            rows.append({
                "m": m,
                "n": n,
                "gap": fuzzy_hausdorff(partial[m - 1], partial[n - 1], tol),
                "bound": family.tail_bound(m),
            })

    order = np.random.default_rng(seed).permutation(family.count).tolist()
    shuffled_space = FiniteMeasureSpace(
        tuple(space.atoms[i] for i in order), tuple(space.weights[i] for i in order)
    )
    shuffled = FuzzyMapping(shuffled_space, tuple(family.mapping[i] for i in order))
    reordered = fuzzy_pettis_integral(
        shuffled, shuffled_space.full_set(), tol=tol, prune=True
    ).value
    permutation_residual = fuzzy_hausdorff(partial[-1], reordered, tol)

    return pd.DataFrame(rows, columns=TAIL_COLUMNS), permutation_residual


def integral_measure_verify(
    mapping: FuzzyMapping,
    partition: Sequence[MeasurableSet],
    tail_family: Optional[TailFamily] = None,
    tol: float = DEFAULT_TOL,
    support_tol: float = SUPPORT_TOL,
    seed: int = 0,
    prune: bool = False
) -> MeasureVerification:
    """
    Check that A ↦ M̃_Γ(A) is a fuzzy-number-valued measure.

    Mathematical failures are recorded in the result, never raised.

    Args:
        mapping: Simple fuzzy mapping
        partition: Pairwise disjoint measurable sets
        tail_family: Optional geometric family for truncated countable additivity
        tol: Distance solver tolerance
        support_tol: Bound for additivity and permutation residuals
        seed: Seed of the shuffled summation order
        prune: Prune redundant vertices inside the integrals

    Returns:
        MeasureVerification

    Raises:
        InvalidSetError: If the partition parts overlap or name unknown atoms
    """
    check_partition(mapping.space, partition)

    empty = fuzzy_pettis_integral(mapping, MeasurableSet.empty(), tol=tol).value
    theta = null_element(mapping.dims)
    # θ has an exact representation, so compare literally
    exact = empty.levels == theta.levels and empty.core_body.vertex_count == 1
    empty_residual = 0.0 if exact and not empty.core_body.vertices.any() else max(
        fuzzy_hausdorff(empty, theta, tol), float(np.max(np.abs(empty.core_body.vertices)))
    )

    parts = [
        fuzzy_pettis_integral(mapping, part, tol=tol, prune=prune).value for part in partition
    ]
    whole = fuzzy_pettis_integral(mapping, union_of(partition), tol=tol, prune=prune).value
    total = theta
    for value in parts:
        total = _pruned(add(total, value))
    additivity_residual = fuzzy_hausdorff(whole, total, tol)

    conditions = {"compact_convex": True, "nested": True, "left_continuous": True}
    for value in [empty, whole, *parts]:
        for key, held in level_family_conditions(value, tol).items():
            conditions[key] = conditions[key] and held

    if tail_family is not None:
        tail, permutation_residual = tail_convergence(tail_family, tol, seed)
    else:
        tail, permutation_residual = pd.DataFrame(columns=TAIL_COLUMNS), 0.0

    result = MeasureVerification(
        empty_residual, additivity_residual, tail, permutation_residual, conditions, support_tol
    )
    if result.passed:
        logger.info("Measure verification passed")
    else:
        logger.warning(
            f"Measure verification failed: empty={empty_residual:.3e}, "
            f"additivity={additivity_residual:.3e}, tail={result.tail_passed}, "
            f"permutation={permutation_residual:.3e}, conditions={conditions}"
        )
    return result


@dataclass(frozen=True, eq=False)
class VerificationReport:
    """One row per checked statement: theorem id, status, max residual, detail."""

    rows: pd.DataFrame

    @property
    def passed(self) -> bool:
        return bool((self.rows["status"] != FAIL).all())

    def formatted(self) -> pd.DataFrame:
        """Rows with residuals rendered as fixed ``%.3e`` strings."""
        table = self.rows.copy()
        table["max_residual"] = [
            "-" if pd.isna(value) else f"{value:.3e}" for value in table["max_residual"]
        ]
        return table

    def to_table(self) -> str:
        return self.formatted().to_string(index=False)


def _row(theorem: str, ok: bool, residual: float, detail: str) -> dict:
    return {
        "theorem": theorem,
        "status": PASS if ok else FAIL,
        "max_residual": float(residual),
        "detail": detail,
    }


def _random_partition(
    space: FiniteMeasureSpace,
    parts: int,
    rng: np.random.Generator
) -> List[MeasurableSet]:
    labels = rng.integers(0, max(1, parts), size=len(space))
    partition = [
        MeasurableSet(frozenset(int(i) for i in np.flatnonzero(labels == k)))
        for k in range(max(1, parts))
    ]
    return [part for part in partition if len(part) > 0]


def _representation_row(mapping: FuzzyMapping, tol: float) -> dict:
    residual = 0.0
    monotone = True
    probes = np.linspace(0.0, 1.0, REPRESENTATION_PROBES + 1)[1:]
    for value in mapping.values:
        rebuilt = from_level_family(value.levels, value.bodies, tol)
        residual = max(residual, fuzzy_hausdorff(rebuilt, value, tol))
        for low, high in zip(probes[:-1], probes[1:]):
            if not subset_of(level_cut(value, high), level_cut(value, low), tol):
                monotone = False
    return _row(
        "representation", residual <= ATOM_TOL and monotone, residual,
        f"{len(mapping)} values rebuilt, {REPRESENTATION_PROBES} probes each"
    )


def _oracle_row(
    mapping: FuzzyMapping,
    grid: DirectionGrid,
    seed: int,
    tol: float,
    divisions: int = DEFAULT_DIVISIONS
) -> dict:
    rng = np.random.default_rng(seed)
    support_gap = 0.0
    disagreements = 0
    tested = 0
    skipped = 0

    for value in mapping.values:
        for body in value.bodies:
            fast = support_profile(body, grid.matrix)
            slow = np.array([oracle_support(body, u) for u in grid.matrix])
            support_gap = max(support_gap, float(np.max(np.abs(fast - slow))))

            if body.vertex_count > MAX_VERTICES or body.dims > MAX_DIMS:
                skipped += 1
                continue
            low = body.vertices.min(axis=0) - 1.0
            high = body.vertices.max(axis=0) + 1.0
            points = np.vstack([
                body.vertices.mean(axis=0),
                rng.uniform(low, high, size=(8, body.dims)),
            ])
            slow_inside = oracle_hull_membership_many(points, body.vertices, tol)
            fast_inside = np.array([contains(body, x, tol) for x in points])
            disagreements += int(np.sum(slow_inside != fast_inside))
            tested += len(points)

    supmin_gap = 0.0
    supmin_detail = "sup-min skipped"
    if mapping.dims <= 2 and len(mapping) >= 2:
        u, v = mapping.values[0], mapping.values[-1]
        x = u.core_body.vertices.mean(axis=0) + v.core_body.vertices.mean(axis=0)
        try:
            sample = SampleGrid.covering([u.support_body, v.support_body], divisions)
            oracle_grade = float(oracle_supmin_add(u, v, x, sample, tol))
            levelwise = float(membership(add(u, v), x, tol))
            # the grid sup is a lower bound of the level-wise grade
            supmin_gap = max(0.0, oracle_grade - levelwise)
            supmin_detail = f"sup-min {oracle_grade:g} vs level-wise {levelwise:g}"
        except OracleLimitError as e:
            supmin_detail = f"sup-min skipped ({e.code})"

    detail = (
        f"membership {tested - disagreements}/{tested} agree, {skipped} bodies over limit; "
        f"{supmin_detail}"
    )
    ok = support_gap <= ATOM_TOL and disagreements == 0 and supmin_gap == 0.0
    return _row("oracle", ok, max(support_gap, supmin_gap, float(disagreements)), detail)


def run_theorem_suite(
    mapping: FuzzyMapping,
    grid: Optional[DirectionGrid] = None,
    tol: float = DEFAULT_TOL,
    support_tol: float = SUPPORT_TOL,
    atom_tol: float = ATOM_TOL,
    seed: int = 0,
    with_oracle: bool = False,
    tail: Optional[Tuple[float, int]] = None,
    lambdas: Sequence[float] = (0.0, 1.0, 2.5),
    partition_parts: int = 3,
    prune: bool = False,
    oracle_divisions: int = DEFAULT_DIVISIONS
) -> VerificationReport:
    """
    Run every structural check on one scenario.

    All randomness (partition, companion mapping for linearity, oracle probes,
    summation order) comes from ``seed``, so equal inputs give equal reports.

    Args:
        mapping: Scenario mapping
        grid: Direction grid for support residuals
        tol: Distance solver tolerance
        support_tol: Allowed support and additivity residual
        atom_tol: Allowed per-atom geometric residual
        seed: Seed for every random choice
        with_oracle: Add the brute-force oracle agreement row
        tail: Optional (q, n) for the geometric tail family
        lambdas: Scalars for the homogeneity check
        partition_parts: Number of random parts for finite additivity
        prune: Prune redundant vertices inside the integrals
        oracle_divisions: Sample grid resolution of the sup-min oracle

    Returns:
        VerificationReport
    """
    if grid is None:
        grid = default_grid(mapping.dims)
    rng = np.random.default_rng(seed)
    space = mapping.space
    full = space.full_set()
    rows = [_representation_row(mapping, tol)]

    # support identity and level conditions on the whole space and each part
    partition = _random_partition(space, partition_parts, rng)
    results = [
        fuzzy_pettis_integral(mapping, A, grid, tol, support_tol, prune)
        for A in [full, *partition]
    ]
    residual = max(result.max_residual for result in results)
    rows.append(_row(
        "support-identity", residual <= support_tol, residual,
        f"{len(results)} sets x {len(grid)} directions"
    ))
    failed = [
        key for result in results
        for key, held in level_family_conditions(result.value, tol).items() if not held
    ]
    rows.append(_row(
        "level-family", not failed, 0.0,
        f"failed: {sorted(set(failed))}" if failed else "compact convex, nested, left-continuous"
    ))

    # linearity against a seeded companion mapping on the same space
    companion = random_mapping(
        rng, mapping.dims, max_levels=2, max_vertices=4, zero_weight_prob=0.0, space=space
    )
    linearity = [
        scalar_linearity_check(mapping, companion, k, full, tol, prune) for k in lambdas
    ]
    residual = max(check.max_residual for check in linearity)
    rows.append(_row(
        "linearity", all(check.passed(support_tol) for check in linearity), residual,
        f"lambda in {list(lambdas)}"
    ))

    # decomposition around the canonical selection in the first axis direction
    axis = np.eye(mapping.dims)[0]
    selection = canonical_mapping_selection(mapping, axis)
    decomposition = decompose(mapping, selection, grid, tol, atom_tol)
    split_residual = integral_additivity_check(mapping, decomposition, full, tol, prune)
    rows.append(_row(
        "decomposition",
        decomposition.passed and split_residual <= support_tol,
        max(decomposition.max_reconstruction, split_residual),
        f"reconstruction {decomposition.max_reconstruction:.3e}, "
        f"integral split {split_residual:.3e}"
    ))

    point_valued = fuzzy_pettis_integral(
        fuzzy_from_selection(space, selection), full, grid, tol, support_tol
    ).value
    expected = ConvexBody.singleton(vector_integral(space, selection, full))
    residual = hausdorff(point_valued.core_body, expected, tol)
    rows.append(_row(
        "point-valued", residual <= atom_tol, residual, "integral of a selection"
    ))

    # measure axioms, plus the tail family when requested
    tail_family = None
    if tail is not None:
        ratio, count = tail
        tail_family = geometric_tail_family(_pruned(mapping.values[0]), ratio, count)
    measure = integral_measure_verify(
        mapping, partition, tail_family, tol, support_tol, seed, prune
    )
    residual = max(
        measure.empty_residual, measure.additivity_residual, measure.permutation_residual
    )
    rows.append(_row(
        "measure",
        measure.empty_residual == 0.0
        and measure.additivity_residual <= support_tol
        and all(measure.level_conditions.values()),
        residual,
        f"empty set {measure.empty_residual:.3e}, {len(partition)}-part additivity "
        f"{measure.additivity_residual:.3e}"
    ))
    if tail_family is not None:
        gap = float(measure.tail["gap"].max()) if not measure.tail.empty else 0.0
        rows.append(_row(
            "countable-additivity",
            measure.tail_passed and measure.permutation_residual <= support_tol,
            gap,
            f"q={tail_family.ratio:g}, n={tail_family.count}, "
            f"bound {tail_family.tail_bound(1):.3e}, "
            f"permutation {measure.permutation_residual:.3e}"
        ))

    sets = positive_sets(space)
    nesting = integral_nesting_check(mapping, sets, tol, prune)
    residual = float(nesting["excess"].max()) if not nesting.empty else 0.0
    rows.append(_row(
        "level-nesting", residual <= tol, residual, f"{len(sets)} sets of positive measure"
    ))

    dominated = shrink_toward_selection(mapping, selection, 0.5)
    core_report = core_nonempty_check(mapping, dominated, sets, tol=tol)
    rows.append(_row(
        "core", core_report.passed, 0.0,
        f"{len(core_report.rows)} (set, level) pairs; {core_report.note}"
    ))

    if with_oracle:
        rows.append(_oracle_row(mapping, grid, seed, tol, oracle_divisions))

    for theorem in FINITE_DIMENSION_ROWS:
        rows.append({
            "theorem": theorem, "status": TRIVIAL, "max_residual": np.nan, "detail": TRIVIAL_NOTE
        })

    report = VerificationReport(pd.DataFrame(rows, columns=REPORT_COLUMNS))
    failures = report.rows.loc[report.rows["status"] == FAIL, "theorem"].tolist()
    if failures:
        logger.warning(f"Verification failed for {failures}")
    else:
        logger.info(f"All {len(rows)} verification rows passed or are trivial")
    return report
