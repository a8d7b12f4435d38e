"""Convex polytope kernel: support functions, Minkowski arithmetic and metrics."""

from .convex import (
    ConvexBody,
    Direction,
    canonical_selection,
    contains,
    directed_hausdorff,
    distance,
    hausdorff,
    hausdorff_support_estimate,
    hull_union,
    min_norm_point,
    minkowski_add,
    prune_redundant,
    scale,
    subset_of,
    support,
    support_profile,
    translate_by_negative,
)
from .directions import DirectionGrid, default_grid
from .polygon import ordered_polygon

__all__ = [
    'ConvexBody', 'Direction', 'DirectionGrid', 'default_grid', 'canonical_selection',
    'contains', 'directed_hausdorff', 'distance', 'hausdorff', 'hausdorff_support_estimate',
    'hull_union', 'min_norm_point', 'minkowski_add', 'prune_redundant', 'scale', 'subset_of',
    'support', 'support_profile', 'translate_by_negative', 'ordered_polygon',
]
