"""
Enumeration Strategies
======================
Exhaustive searches for left, right and two-sided skew bracoids and for
skew braces on small groups, plus the theorem sweeps that run over them.

Two independent strategies exist for left bracoids:

    A  actions G -> Sym(N) restricted to affine permutations, then
       filtered by transitivity and the bracoid law
    B  pairs (orbit map, γ: G -> Aut(N)) glued into g⊙η = (g⊙e_N) ⋆ γ(g)η

and their outputs must agree as sets.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..checkers.theorems import check_lau_converse, theorem_suite
from ..config import get_settings
from ..core.actions import make_left_action, make_right_action
from ..core.bracoids import SkewBrace, left_bracoid_to_brace, make_left_bracoid, make_right_bracoid
from ..core.errors import OrderCapExceeded
from ..core.groups import FiniteGroup, opposite, parse_descriptor, small_groups
from ..core.two_sided import eq6_violation, make_two_sided
from ..schemas import EnumerationResultSchema, TheoremVerdict
from .search import (
    affine_permutations,
    all_permutations,
    compose_pairs,
    holomorph_pairs,
    left_action_tables,
    pair_to_perm,
    perm_order,
    search_homomorphisms,
    table_sort_key,
)

logger = logging.getLogger("bracoid.enumerate")


@dataclass
class EnumerationResult:
    kind: str
    structures: list
    raw_count: int
    iso_class_count: Optional[int] = None
    equivalence: Optional[str] = None

    def to_schema(self, count_only: bool = False) -> EnumerationResultSchema:
        from ..storage import structure_to_schema

        return EnumerationResultSchema(
            kind=self.kind,
            raw_count=self.raw_count,
            iso_class_count=self.iso_class_count,
            equivalence=self.equivalence,
            structures=None if count_only else [structure_to_schema(s).model_dump() for s in self.structures],
        )


@dataclass(frozen=True)
class SearchSpec:
    """What run_search should enumerate. Descriptors use the group mini-language."""

    G_spec: Optional[str] = None
    N_spec: Optional[str] = None
    H_spec: Optional[str] = None
    braces: bool = False
    require_two_sided: bool = False
    up_to_iso: bool = False
    strategy: str = "A"
    order_cap: Optional[int] = None


def _check_caps(cap: Optional[int], *groups: FiniteGroup) -> None:
    limit = cap if cap is not None else get_settings().enumeration_cap
    for group in groups:
        if group.order > limit:
            raise OrderCapExceeded(f"{group.name} has order {group.order}, above the enumeration cap {limit}")


# ------------------------------------------------------------------
# Actions without bracoid axioms
# ------------------------------------------------------------------

def enumerate_left_actions(G: FiniteGroup, N: FiniteGroup, transitive: bool = True,
                           order_cap: Optional[int] = None) -> list:
    _check_caps(order_cap, G, N)
    tables = left_action_tables(G, N, all_permutations(N), transitive=transitive)
    return [make_left_action(G, N, t) for t in tables]


def _right_tables(H: FiniteGroup, N: FiniteGroup, pool, transitive: bool) -> List[np.ndarray]:
    # a right action of H is a left action of H^op; right_table[η][h] = ρ(h)(η)
    tables = left_action_tables(opposite(H), N, pool, transitive=transitive)
    return sorted((np.ascontiguousarray(t.T) for t in tables), key=table_sort_key)


def enumerate_right_actions(H: FiniteGroup, N: FiniteGroup, transitive: bool = True,
                            order_cap: Optional[int] = None) -> list:
    _check_caps(order_cap, H, N)
    return [make_right_action(N, H, t) for t in _right_tables(H, N, all_permutations(N), transitive)]


# ------------------------------------------------------------------
# Bracoids
# ------------------------------------------------------------------

def enumerate_left_bracoids(G: FiniteGroup, N: FiniteGroup, order_cap: Optional[int] = None) -> EnumerationResult:
    """Strategy A.

    Above PERMUTATION_POOL_LIMIT the candidate pool comes from Aut(N), so the
    result is not an independent check of strategy B at those orders.
    """
    _check_caps(order_cap, G, N)
    tables = left_action_tables(G, N, affine_permutations(N))
    structures = [make_left_bracoid(G, N, t) for t in tables]
    logger.info(f"left bracoids {G.name} on {N.name}: {len(structures)}")
    return EnumerationResult("left_bracoid", structures, len(structures))


def enumerate_left_bracoids_via_gamma(G: FiniteGroup, N: FiniteGroup,
                                      order_cap: Optional[int] = None) -> EnumerationResult:
    """Strategy B: search (g⊙e_N, γ(g)) on generators, subject to the cocycle
    rule (gh)⊙e_N = (g⊙e_N) ⋆ γ(g)(h⊙e_N)."""
    _check_caps(order_cap, G, N)
    unit = (N.identity, tuple(range(N.order)))
    homs = search_homomorphisms(
        G, holomorph_pairs(N), compose_pairs(N), unit,
        order_of=lambda pair: perm_order(pair_to_perm(N, pair)),
    )
    tables = {}
    for images in homs:
        if len({orbit_value for orbit_value, _ in images}) != N.order:
            continue
        table = np.array([pair_to_perm(N, pair) for pair in images], dtype=np.int64)
        tables[table.tobytes()] = table
    structures = [make_left_bracoid(G, N, t) for t in sorted(tables.values(), key=table_sort_key)]
    logger.info(f"left bracoids {G.name} on {N.name} via γ: {len(structures)}")
    return EnumerationResult("left_bracoid", structures, len(structures))


def enumerate_right_bracoids(H: FiniteGroup, N: FiniteGroup, order_cap: Optional[int] = None) -> EnumerationResult:
    _check_caps(order_cap, H, N)
    structures = [make_right_bracoid(H, N, t) for t in _right_tables(H, N, affine_permutations(N), True)]
    logger.info(f"right bracoids {H.name} on {N.name}: {len(structures)}")
    return EnumerationResult("right_bracoid", structures, len(structures))


def enumerate_two_sided(G: FiniteGroup, H: FiniteGroup, N: FiniteGroup,
                        order_cap: Optional[int] = None) -> EnumerationResult:
    lefts = enumerate_left_bracoids(G, N, order_cap).structures
    rights = enumerate_right_bracoids(H, N, order_cap).structures
    structures = [
        make_two_sided(left, right)
        for left in lefts
        for right in rights
        if eq6_violation(left.action, right.action) is None
    ]
    logger.info(f"two-sided bracoids ({G.name}, {H.name}, {N.name}): {len(structures)}")
    return EnumerationResult("two_sided_bracoid", structures, len(structures))


# ------------------------------------------------------------------
# Braces
# ------------------------------------------------------------------

def enumerate_braces(N: FiniteGroup, order_cap: Optional[int] = None) -> EnumerationResult:
    """Every skew brace with ⋆-group N: regular left bracoids G on N,
    one G per isomorphism type of order |N|, transported back to a second
    multiplication on N's carrier."""
    limit = order_cap if order_cap is not None else get_settings().brace_cap
    if N.order > limit:
        raise OrderCapExceeded(f"{N.name} has order {N.order}, above the brace cap {limit}")
    pool = affine_permutations(N)
    braces = {}
    for G in small_groups(N.order):
        for table in left_action_tables(G, N, pool, free=True):
            brace = left_bracoid_to_brace(make_left_bracoid(G, N, table))
            braces.setdefault(brace.dot_group.table.tobytes(), brace)
    structures = sorted(braces.values(), key=lambda b: table_sort_key(b.dot_group.table))
    logger.info(f"skew braces on {N.name}: {len(structures)}")
    return EnumerationResult("brace", structures, len(structures))


# ------------------------------------------------------------------
# Sweeps
# ------------------------------------------------------------------

def sweep_lau_converse(G: FiniteGroup, H: FiniteGroup, N: FiniteGroup,
                       order_cap: Optional[int] = None) -> List[TheoremVerdict]:
    """The bracoid Lau converse over every left bracoid and every transitive
    right action commuting with it."""
    lefts = enumerate_left_bracoids(G, N, order_cap).structures
    rights = enumerate_right_actions(H, N, transitive=True, order_cap=order_cap)
    verdicts = [
        check_lau_converse(left, right)
        for left in lefts
        for right in rights
        if eq6_violation(left.action, right) is None
    ]
    logger.info(f"lau converse sweep ({G.name}, {H.name}, {N.name}): {len(verdicts)} pairs")
    return verdicts


def sweep_two_sided(G: FiniteGroup, H: FiniteGroup, N: FiniteGroup,
                    order_cap: Optional[int] = None) -> List[TheoremVerdict]:
    return [v for T in enumerate_two_sided(G, H, N, order_cap).structures for v in theorem_suite(T)]


def sweep_braces(N: FiniteGroup, order_cap: Optional[int] = None) -> List[TheoremVerdict]:
    return [v for B in enumerate_braces(N, order_cap).structures for v in theorem_suite(B)]


def contains(result: EnumerationResult, structure) -> bool:
    """Membership by equality of groups and tables."""
    return any(structure == s for s in result.structures)


def run_search(spec: SearchSpec) -> EnumerationResult:
    from .dedupe import dedupe_isomorphic

    if spec.braces:
        if not spec.N_spec:
            raise ValueError("brace search needs an N descriptor")
        result = enumerate_braces(parse_descriptor(spec.N_spec), spec.order_cap)
    else:
        if not spec.N_spec or not (spec.G_spec or spec.H_spec):
            raise ValueError("bracoid search needs N and at least one of G, H")
        N = parse_descriptor(spec.N_spec)
        G = parse_descriptor(spec.G_spec) if spec.G_spec else None
        H = parse_descriptor(spec.H_spec) if spec.H_spec else None
        if G is not None and H is not None:
            result = enumerate_two_sided(G, H, N, spec.order_cap)
        elif spec.require_two_sided:
            raise ValueError("two-sided search needs both G and H")
        elif G is not None:
            search = enumerate_left_bracoids_via_gamma if spec.strategy.upper() == "B" else enumerate_left_bracoids
            result = search(G, N, spec.order_cap)
        else:
            result = enumerate_right_bracoids(H, N, spec.order_cap)
    return dedupe_isomorphic(result) if spec.up_to_iso else result
