"""
Enumeration Module
==================
Exhaustive search for bracoid and brace structures on small groups.
"""

from .dedupe import dedupe_isomorphic
from .strategies import (
    EnumerationResult,
    SearchSpec,
    contains,
    enumerate_braces,
    enumerate_left_actions,
    enumerate_left_bracoids,
    enumerate_left_bracoids_via_gamma,
    enumerate_right_actions,
    enumerate_right_bracoids,
    enumerate_two_sided,
    run_search,
    sweep_braces,
    sweep_lau_converse,
    sweep_two_sided,
)

__all__ = [
    'EnumerationResult',
    'SearchSpec',
    'contains',
    'dedupe_isomorphic',
    'enumerate_braces',
    'enumerate_left_actions',
    'enumerate_left_bracoids',
    'enumerate_left_bracoids_via_gamma',
    'enumerate_right_actions',
    'enumerate_right_bracoids',
    'enumerate_two_sided',
    'run_search',
    'sweep_braces',
    'sweep_lau_converse',
    'sweep_two_sided',
]
