"""Finite measure spaces, simple fuzzy mappings and generated families."""

from .families import (
    TailFamily,
    geometric_tail_family,
    random_fuzzy_number,
    random_mapping,
)
from .mapping import (
    FuzzyMapping,
    LevelView,
    Selection,
    add_mappings,
    canonical_mapping_selection,
    check_compatible,
    fuzzy_from_selection,
    make_selection,
    mapping_level,
    scale_mapping,
    vector_integral,
)
from .space import (
    FiniteMeasureSpace,
    MeasurableSet,
    check_partition,
    measure_of,
    positive_sets,
    union_of,
)

__all__ = [
    'FiniteMeasureSpace', 'MeasurableSet', 'FuzzyMapping', 'LevelView', 'Selection',
    'TailFamily', 'add_mappings', 'canonical_mapping_selection', 'check_compatible',
    'check_partition', 'fuzzy_from_selection', 'geometric_tail_family', 'make_selection',
    'mapping_level', 'measure_of', 'positive_sets', 'random_fuzzy_number', 'random_mapping',
    'scale_mapping', 'union_of', 'vector_integral',
]
