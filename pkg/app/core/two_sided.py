"""
Two-sided Structures
====================
Two-sided skew bracoids (commuting left and right actions on a shared N)
and the brace-level ∗-operation.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .actions import LeftActionTable, RightActionTable
from .bracoids import SkewBrace, SkewLeftBracoid, SkewRightBracoid
from .errors import Eq6Violated, SharedNMismatch
from .groups import is_abelian


@dataclass(frozen=True)
class TwoSidedSkewBracoid:
    left: SkewLeftBracoid
    right: SkewRightBracoid

    @property
    def G(self):
        return self.left.G

    @property
    def H(self):
        return self.right.H

    @property
    def N(self):
        return self.left.N


def eq6_violation(left: LeftActionTable, right: RightActionTable) -> Optional[Tuple[int, int, int]]:
    """First (g, η, h) with g⊙(η⊡h) != (g⊙η)⊡h, or None."""
    tl, tr = left.table, right.table
    lhs = tl[np.arange(left.actor.order)[:, None, None], tr[None, :, :]]
    rhs = tr[tl[:, :, None], np.arange(right.actor.order)[None, None, :]]
    broken = np.argwhere(lhs != rhs)
    return tuple(int(x) for x in broken[0]) if len(broken) else None


def make_two_sided(left: SkewLeftBracoid, right: SkewRightBracoid) -> TwoSidedSkewBracoid:
    if left.N != right.N:
        raise SharedNMismatch(f"left side acts on {left.N.name}, right side on {right.N.name}")
    broken = eq6_violation(left.action, right.action)
    if broken:
        g, eta, h = broken
        raise Eq6Violated(
            f"{left.G.name_of(g)} ⊙ ({left.N.name_of(eta)} ⊡ {right.H.name_of(h)}) != "
            f"({left.G.name_of(g)} ⊙ {left.N.name_of(eta)}) ⊡ {right.H.name_of(h)}",
            witness=(left.G.name_of(g), left.N.name_of(eta), right.H.name_of(h)),
        )
    return TwoSidedSkewBracoid(left, right)


# ------------------------------------------------------------------
# Brace ∗-operation
# ------------------------------------------------------------------

def star_array(B: SkewBrace) -> np.ndarray:
    """a ∗ b = ā ⋆ (a·b) ⋆ b̄ for every pair."""
    S, inv = B.star_group.table, B.star_group.inverses
    return S[S[inv[:, None], B.dot_group.table], inv[None, :]]


def brace_star(B: SkewBrace, a: int, b: int) -> int:
    return B.star(B.star(B.bar(a), B.dot(a, b)), B.bar(b))


def brace_star_abelian_form(B: SkewBrace, a: int, b: int) -> int:
    """(a·b) ⋆ ā ⋆ b̄; agrees with brace_star whenever ⋆ is abelian."""
    return B.star(B.star(B.dot(a, b), B.bar(a)), B.bar(b))


def right_brace_violation(B: SkewBrace) -> Optional[Tuple[int, int, int]]:
    # right bracoid law with ⊡ = · and e_N ⊡ c = c: (a⋆b)·c = (a·c) ⋆ c̄ ⋆ (b·c)
    S, D, inv = B.star_group.table, B.dot_group.table, B.star_group.inverses
    n = B.n
    lhs = D[S[:, :, None], np.arange(n)[None, None, :]]
    rhs = S[S[D[:, None, :], inv[None, None, :]], D[None, :, :]]
    broken = np.argwhere(lhs != rhs)
    return tuple(int(x) for x in broken[0]) if len(broken) else None


def brace_is_two_sided(B: SkewBrace) -> bool:
    return right_brace_violation(B) is None


def brace_is_left_brace(B: SkewBrace) -> bool:
    return is_abelian(B.star_group)
