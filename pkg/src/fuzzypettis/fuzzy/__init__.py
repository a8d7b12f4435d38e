"""Step fuzzy numbers and their level-wise arithmetic."""

from .number import (
    FuzzyNumber,
    Grade,
    add,
    check_nesting,
    describe,
    from_level_family,
    fuzzy_from_point,
    fuzzy_hausdorff,
    level_cut,
    level_family_conditions,
    membership,
    merged_levels,
    null_element,
    scale_fuzzy,
)

__all__ = [
    'FuzzyNumber', 'Grade', 'add', 'check_nesting', 'describe', 'from_level_family',
    'fuzzy_from_point', 'fuzzy_hausdorff', 'level_cut', 'level_family_conditions',
    'membership', 'merged_levels', 'null_element', 'scale_fuzzy',
]
