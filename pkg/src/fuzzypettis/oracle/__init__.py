"""Brute-force reference implementations for cross-checking the kernel."""

from .brute_force import (
    SampleGrid,
    oracle_grades,
    oracle_hull_membership,
    oracle_hull_membership_many,
    oracle_supmin_add,
    oracle_support,
)

__all__ = [
    'SampleGrid', 'oracle_grades', 'oracle_hull_membership', 'oracle_hull_membership_many',
    'oracle_supmin_add', 'oracle_support',
]
