"""
Search Engine
=============
Homomorphism search from a finite group into a permutation pool, driven by
generator images.

A candidate is fixed by the images of a greedy generating sequence; the
images of everything else follow by walking the Cayley graph
(extend_images), and any inconsistency with the group's relations kills the
branch. The candidate space is partitioned by the first generator's image
and the partitions run on a thread pool; results are sorted before they
are returned, so scheduling never shows in the output.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations
from math import factorial
from typing import Callable, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..core.errors import OrderCapExceeded
from ..core.groups import FiniteGroup, automorphisms, element_order, extend_images, generating_sequence

logger = logging.getLogger("bracoid.enumerate")

Perm = Tuple[int, ...]

# all of Sym(N) is materialized for unrestricted action search
PERMUTATION_POOL_LIMIT = 8


def compose_perms(p: Perm, q: Perm) -> Perm:
    """p ∘ q: apply q first."""
    return tuple(p[x] for x in q)


def perm_order(p: Perm) -> int:
    order, current, unit = 1, p, tuple(range(len(p)))
    while current != unit:
        current = compose_perms(p, current)
        order += 1
    return order


def table_sort_key(table: np.ndarray) -> tuple:
    return tuple(int(x) for x in table.ravel())


# ------------------------------------------------------------------
# Permutation pools
# ------------------------------------------------------------------

def all_permutations(N: FiniteGroup) -> List[Perm]:
    if N.order > PERMUTATION_POOL_LIMIT:
        raise OrderCapExceeded(
            f"unrestricted action search materializes {factorial(N.order)} permutations of "
            f"{N.name}; limit is order {PERMUTATION_POOL_LIMIT}"
        )
    return list(permutations(range(N.order)))


def affine_permutations(N: FiniteGroup) -> List[Perm]:
    """Permutations p of N with p(μ⋆η) = p(μ) ⋆ p(e_N)⁻¹ ⋆ p(η) for all μ, η.

    These are the only candidates for g ⊙ - (left) or - ⊡ h (right) in a
    bracoid. Up to the permutation limit they are found by filtering all of
    Sym(N); above it they are listed as translates of automorphisms, which is
    exactly the holomorph strategy B searches, so the two strategies no longer
    check each other there.
    """
    S, inv = N.table, N.inverses
    if N.order > PERMUTATION_POOL_LIMIT:
        logger.warning(
            f"{N.name}: affine pool built from automorphisms above order {PERMUTATION_POOL_LIMIT}; "
            f"strategy A is not checked against Sym(N) here"
        )
        return sorted(
            tuple(int(S[c, phi(eta)]) for eta in range(N.order))
            for c in range(N.order)
            for phi in automorphisms(N)
        )
    P = np.array(all_permutations(N), dtype=np.int64)
    lhs = P[:, S]
    base = inv[P[:, N.identity]][:, None, None]
    rhs = S[S[P[:, :, None], base], P[:, None, :]]
    keep = np.all(lhs == rhs, axis=(1, 2))
    return [tuple(int(x) for x in row) for row in P[keep]]


def holomorph_pairs(N: FiniteGroup) -> List[Tuple[int, Perm]]:
    """Pairs (c, φ) with c ∈ N and φ ∈ Aut(N), standing for η ↦ c ⋆ φ(η)."""
    return [(c, phi.images) for c in range(N.order) for phi in automorphisms(N)]


def compose_pairs(N: FiniteGroup) -> Callable:
    S = N.table

    def compose(first: Tuple[int, Perm], second: Tuple[int, Perm]) -> Tuple[int, Perm]:
        c1, f1 = first
        c2, f2 = second
        return int(S[c1, f1[c2]]), tuple(f1[x] for x in f2)

    return compose


def pair_to_perm(N: FiniteGroup, pair: Tuple[int, Perm]) -> Perm:
    c, phi = pair
    return tuple(int(N.table[c, phi[eta]]) for eta in range(N.order))


# ------------------------------------------------------------------
# Generator-image search
# ------------------------------------------------------------------

def search_homomorphisms(G: FiniteGroup, pool: Sequence[Hashable], compose: Callable, unit: Hashable,
                         order_of: Callable[[Hashable], int],
                         prune: Optional[Callable[[list], bool]] = None,
                         workers: Optional[int] = None) -> List[list]:
    """Every homomorphism G -> pool-generated group, as full image lists.

    A generator s only takes pool elements whose order divides that of s.
    prune receives the partial image list (None where not yet determined)
    and returns False to cut the branch.
    """
    generators = generating_sequence(G)
    if not generators:
        return [[unit]]

    orders = {x: order_of(x) for x in pool}
    candidates = [[x for x in pool if element_order(G, s) % orders[x] == 0] for s in generators]

    def extend(chosen: list) -> List[list]:
        partial = extend_images(G, generators[:len(chosen)], chosen, compose, unit)
        if partial is None or (prune is not None and not prune(partial)):
            return []
        if len(chosen) == len(generators):
            return [partial]
        found: List[list] = []
        for x in candidates[len(chosen)]:
            found += extend(chosen + [x])
        return found

    workers = workers or get_settings().workers
    firsts = candidates[0]
    logger.info(f"{G.name}: {len(generators)} generators, {len(firsts)} partitions, {workers} workers")
    if workers == 1 or len(firsts) < 2:
        parts = [extend([x]) for x in firsts]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool_executor:
            parts = list(pool_executor.map(lambda x: extend([x]), firsts))
    return [hom for part in parts for hom in part]


def fixed_point_free(images: list, identity: int) -> bool:
    """No non-identity image fixes a point (the free-ness prune)."""
    for g, p in enumerate(images):
        if g != identity and p is not None and any(p[x] == x for x in range(len(p))):
            return False
    return True


def left_action_tables(G: FiniteGroup, N: FiniteGroup, pool: Sequence[Perm], *,
                       transitive: bool = True, free: bool = False,
                       workers: Optional[int] = None) -> List[np.ndarray]:
    """Tables table[g][η] of every action G -> pool; sorted, deduplicated."""
    unit = tuple(range(N.order))
    prune = (lambda images: fixed_point_free(images, G.identity)) if free else None
    homs = search_homomorphisms(G, pool, compose_perms, unit, perm_order, prune, workers)
    tables = {}
    for images in homs:
        table = np.array(images, dtype=np.int64)
        if transitive and len(set(table[:, N.identity].tolist())) != N.order:
            continue
        tables[table.tobytes()] = table
    result = sorted(tables.values(), key=table_sort_key)
    logger.debug(f"{G.name} on {N.name}: {len(homs)} homomorphisms, {len(result)} kept")
    return result
