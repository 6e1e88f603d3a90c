"""
Isomorphism Deduplication
=========================
Collapses an enumeration result to one representative per class.

Bracoids: (φ, ψ) ∈ Aut(G) × Aut(N) identifies two left structures when
ψ(g⊙η) = φ(g) ⊙′ ψ(η); right structures use χ ∈ Aut(H) the same way and
two-sided structures use a triple (φ, χ, ψ) with ψ shared. Braces: a brace
isomorphism is ψ ∈ Aut(N,⋆) that also carries · to ·′.

Classes are decided by an exact canonical form (the smallest table in the
orbit); cheap invariants bucket structures first so the orbit is computed
only where a collision is possible.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Tuple

import numpy as np

from ..core.actions import permutation_rows
from ..core.bracoids import SkewBrace, SkewLeftBracoid, SkewRightBracoid
from ..core.errors import SignatureMismatch
from ..core.groups import FiniteGroup, automorphisms
from ..core.two_sided import TwoSidedSkewBracoid
from .strategies import EnumerationResult

logger = logging.getLogger("bracoid.enumerate")

BRACOID_EQUIVALENCE = "actor and N automorphisms intertwining the actions (library-defined)"
BRACE_EQUIVALENCE = "brace isomorphism: automorphisms of (N,⋆) preserving ·"


def _automorphism_arrays(G: FiniteGroup) -> Tuple[np.ndarray, np.ndarray]:
    """Images of every automorphism and of its inverse, one row each."""
    images = np.array([phi.images for phi in automorphisms(G)], dtype=np.int64)
    inverses = np.argsort(images, axis=1)
    return images, inverses


def _orbit_minimum(table: np.ndarray, actor_inv: np.ndarray, psi: np.ndarray, psi_inv: np.ndarray) -> bytes:
    """Smallest of ψ(table[φ⁻¹a][ψ⁻¹η]) over all φ, ψ, as comparable bytes.

    table is actors × N; values fit in a byte below the order caps, so byte
    order is lexicographic order.
    """
    best = None
    psi_rows = np.arange(len(psi))[:, None, None]
    for phi_inv in actor_inv:
        rows = table[phi_inv]                           # actors × N
        moved = rows[:, psi_inv].transpose(1, 0, 2)     # ψ × actors × N
        images = psi[psi_rows, moved].reshape(len(psi), -1).astype(np.uint8)
        for row in images:
            key = row.tobytes()
            if best is None or key < best:
                best = key
    return best


def _left_canonical(table: np.ndarray, actor_aut, n_aut) -> bytes:
    return _orbit_minimum(table, actor_aut[1], *n_aut)


def _two_sided_canonical(left: np.ndarray, right: np.ndarray, g_aut, h_aut, n_aut) -> bytes:
    psi, psi_inv = n_aut
    best = None
    for k in range(len(psi)):
        single = (psi[k:k + 1], psi_inv[k:k + 1])
        key = _left_canonical(left, g_aut, single) + _left_canonical(right, h_aut, single)
        if best is None or key < best:
            best = key
    return best


def _brace_canonical(dot: np.ndarray, psi: np.ndarray, psi_inv: np.ndarray) -> bytes:
    # D'[a][b] = ψ(D[ψ⁻¹a][ψ⁻¹b])
    moved = dot[psi_inv[:, :, None], psi_inv[:, None, :]]
    images = psi[np.arange(len(psi))[:, None, None], moved].reshape(len(psi), -1).astype(np.uint8)
    return min(row.tobytes() for row in images)


# ------------------------------------------------------------------
# Invariants
# ------------------------------------------------------------------

def _fixed_point_profile(action) -> tuple:
    points = tuple(range(action.space.order))
    return tuple(sorted(sum(a == b for a, b in zip(row, points)) for row in permutation_rows(action)))


def _left_invariant(B: SkewLeftBracoid) -> tuple:
    gammas = {tuple(row) for row in B.gammas.tolist()}
    return len(gammas), _fixed_point_profile(B.action)


def _right_invariant(B: SkewRightBracoid) -> tuple:
    deltas = {tuple(col) for col in B.deltas.T.tolist()}
    return len(deltas), _fixed_point_profile(B.action)


def _brace_invariant(B: SkewBrace) -> tuple:
    dot = B.dot_group.table
    squares = int(np.sum(np.diagonal(dot) == B.star_group.identity))
    return int(np.sum(dot == dot.T)), squares


def _signature(structure) -> tuple:
    if isinstance(structure, TwoSidedSkewBracoid):
        return structure.G, structure.H, structure.N
    if isinstance(structure, SkewLeftBracoid):
        return structure.G, structure.N
    if isinstance(structure, SkewRightBracoid):
        return structure.H, structure.N
    return (structure.star_group,)


# ------------------------------------------------------------------

def dedupe_isomorphic(result: EnumerationResult) -> EnumerationResult:
    """One representative per class, the one with the smallest serialized form."""
    from ..storage import dump_structure

    structures = result.structures
    if not structures:
        return EnumerationResult(result.kind, [], result.raw_count, 0, _equivalence(result.kind))

    signature = _signature(structures[0])
    for s in structures[1:]:
        if _signature(s) != signature:
            raise SignatureMismatch(f"cannot dedupe structures over different groups ({type(s).__name__})")

    invariant, canonical = _class_functions(structures[0])
    buckets: Dict[tuple, list] = defaultdict(list)
    for s in structures:
        buckets[invariant(s)].append(s)

    representatives: List = []
    for bucket in buckets.values():
        classes: Dict[bytes, list] = defaultdict(list)
        if len(bucket) == 1:
            classes[b""].append(bucket[0])
        else:
            for s in bucket:
                classes[canonical(s)].append(s)
        for members in classes.values():
            representatives.append(min(members, key=dump_structure))

    representatives.sort(key=dump_structure)
    logger.info(f"{result.kind}: {len(structures)} structures in {len(representatives)} classes")
    return EnumerationResult(result.kind, representatives, result.raw_count,
                             len(representatives), _equivalence(result.kind))


def _equivalence(kind: str) -> str:
    return BRACE_EQUIVALENCE if kind == "brace" else BRACOID_EQUIVALENCE


def _class_functions(sample):
    if isinstance(sample, TwoSidedSkewBracoid):
        g_aut, h_aut, n_aut = (_automorphism_arrays(X) for X in (sample.G, sample.H, sample.N))
        return (
            lambda T: (_left_invariant(T.left), _right_invariant(T.right)),
            lambda T: _two_sided_canonical(T.left.action.table, T.right.action.table.T, g_aut, h_aut, n_aut),
        )
    if isinstance(sample, SkewLeftBracoid):
        g_aut, n_aut = _automorphism_arrays(sample.G), _automorphism_arrays(sample.N)
        return _left_invariant, lambda B: _left_canonical(B.action.table, g_aut, n_aut)
    if isinstance(sample, SkewRightBracoid):
        h_aut, n_aut = _automorphism_arrays(sample.H), _automorphism_arrays(sample.N)
        return _right_invariant, lambda B: _left_canonical(B.action.table.T, h_aut, n_aut)
    psi, psi_inv = _automorphism_arrays(sample.star_group)
    return _brace_invariant, lambda B: _brace_canonical(B.dot_group.table, psi, psi_inv)
