"""
Core Structures
===============
Finite groups, group actions, skew bracoids, skew braces and the example
families built on them.
"""

from .bracoids import SkewBrace, SkewLeftBracoid, SkewRightBracoid, make_brace, make_left_bracoid, make_right_bracoid
from .groups import FiniteGroup, make_group_from_table, parse_descriptor
from .two_sided import TwoSidedSkewBracoid, make_two_sided

__all__ = [
    'FiniteGroup',
    'SkewBrace',
    'SkewLeftBracoid',
    'SkewRightBracoid',
    'TwoSidedSkewBracoid',
    'make_brace',
    'make_group_from_table',
    'make_left_bracoid',
    'make_right_bracoid',
    'make_two_sided',
    'parse_descriptor',
]
