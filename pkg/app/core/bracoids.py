"""
Skew Bracoids and Skew Braces
=============================
Validated left/right skew bracoids, skew braces, and the derived maps

    γ(g): η ↦ (g⊙e_N)⁻¹ ⋆ (g⊙η)          δ(h): η ↦ (η⊡h) ⋆ (e_N⊡h)⁻¹
    α(g): η ↦ γ(g)η ⋆ η⁻¹                  β(h): η ↦ η⁻¹ ⋆ δ(h)η

Each derived map is computed for all actors at once as an integer array
(actors × N for γ/α, N × actors for δ/β) so the checkers can scan
identities with numpy indexing instead of Python loops.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple, Union

import numpy as np

from .actions import (
    LeftActionTable,
    RightActionTable,
    is_free,
    is_transitive,
    make_left_action,
    make_right_action,
)
from .errors import (
    Eq1Violated,
    Eq2Violated,
    Eq4Violated,
    InvalidParameter,
    NotRegular,
    NotTransitive,
    SharedNMismatch,
)
from .groups import FiniteGroup, make_group_from_table


@dataclass(frozen=True)
class NMap:
    """A self-map of N given by its images."""

    images: Tuple[int, ...]

    def __call__(self, eta: int) -> int:
        return self.images[eta]

    def is_identity(self) -> bool:
        return self.images == tuple(range(len(self.images)))


# ------------------------------------------------------------------
# Derived-map arrays
# ------------------------------------------------------------------

def gamma_array(action: LeftActionTable) -> np.ndarray:
    N, t = action.space, action.table
    base = N.inverses[t[:, N.identity]]
    return N.table[base[:, None], t]


def alpha_array(action: LeftActionTable) -> np.ndarray:
    N = action.space
    return N.table[gamma_array(action), N.inverses[None, :]]


def delta_array(action: RightActionTable) -> np.ndarray:
    N, t = action.space, action.table
    base = N.inverses[t[N.identity, :]]
    return N.table[t, base[None, :]]


def beta_array(action: RightActionTable) -> np.ndarray:
    N = action.space
    return N.table[N.inverses[:, None], delta_array(action)]


def eq2_violation(action: LeftActionTable) -> Optional[Tuple[int, int, int]]:
    """First (g, μ, η) with g⊙(μ⋆η) != (g⊙μ) ⋆ (g⊙e_N)⁻¹ ⋆ (g⊙η), or None."""
    N, t = action.space, action.table
    g = np.arange(action.actor.order)[:, None, None]
    lhs = t[g, N.table[None, :, :]]
    base = N.inverses[t[:, N.identity]][:, None, None]
    rhs = N.table[N.table[t[:, :, None], base], t[:, None, :]]
    broken = np.argwhere(lhs != rhs)
    return tuple(int(x) for x in broken[0]) if len(broken) else None


def eq4_violation(action: RightActionTable) -> Optional[Tuple[int, int, int]]:
    """First (h, η, μ) with (η⋆μ)⊡h != (η⊡h) ⋆ (e_N⊡h)⁻¹ ⋆ (μ⊡h), or None."""
    N = action.space
    t = action.table.T  # h × N
    h = np.arange(action.actor.order)[:, None, None]
    lhs = t[h, N.table[None, :, :]]
    base = N.inverses[t[:, N.identity]][:, None, None]
    rhs = N.table[N.table[t[:, :, None], base], t[:, None, :]]
    broken = np.argwhere(lhs != rhs)
    return tuple(int(x) for x in broken[0]) if len(broken) else None


# ------------------------------------------------------------------
# Structures
# ------------------------------------------------------------------

@dataclass(frozen=True)
class SkewLeftBracoid:
    G: FiniteGroup
    N: FiniteGroup
    action: LeftActionTable

    def act(self, g: int, eta: int) -> int:
        return self.action.act(g, eta)

    @cached_property
    def gammas(self) -> np.ndarray:
        return gamma_array(self.action)

    @cached_property
    def alphas(self) -> np.ndarray:
        return alpha_array(self.action)


@dataclass(frozen=True)
class SkewRightBracoid:
    H: FiniteGroup
    N: FiniteGroup
    action: RightActionTable

    def act(self, eta: int, h: int) -> int:
        return self.action.act(eta, h)

    @cached_property
    def deltas(self) -> np.ndarray:
        return delta_array(self.action)

    @cached_property
    def betas(self) -> np.ndarray:
        return beta_array(self.action)


@dataclass(frozen=True)
class SkewBrace:
    star_group: FiniteGroup
    dot_group: FiniteGroup

    @property
    def n(self) -> int:
        return self.star_group.order

    def star(self, a: int, b: int) -> int:
        return self.star_group.mul(a, b)

    def dot(self, a: int, b: int) -> int:
        return self.dot_group.mul(a, b)

    def bar(self, a: int) -> int:
        return self.star_group.inv(a)


def make_left_bracoid(G: FiniteGroup, N: FiniteGroup,
                      action: Union[LeftActionTable, list, np.ndarray]) -> SkewLeftBracoid:
    if not isinstance(action, LeftActionTable):
        action = make_left_action(G, N, action)
    if action.actor != G or action.space != N:
        raise SharedNMismatch("action table was built for different groups")
    if not is_transitive(action):
        raise NotTransitive(
            f"orbit of e_N has {len(set(action.table[:, N.identity].tolist()))} of {N.order} points",
            witness=(N.name_of(N.identity),),
        )
    broken = eq2_violation(action)
    if broken:
        g, mu, eta = broken
        raise Eq2Violated(
            f"{G.name_of(g)} ⊙ ({N.name_of(mu)} ⋆ {N.name_of(eta)}) breaks the bracoid law",
            witness=(G.name_of(g), N.name_of(mu), N.name_of(eta)),
        )
    return SkewLeftBracoid(G, N, action)


def make_right_bracoid(H: FiniteGroup, N: FiniteGroup,
                       action: Union[RightActionTable, list, np.ndarray]) -> SkewRightBracoid:
    if not isinstance(action, RightActionTable):
        action = make_right_action(N, H, action)
    if action.actor != H or action.space != N:
        raise SharedNMismatch("action table was built for different groups")
    if not is_transitive(action):
        raise NotTransitive(
            f"orbit of e_N has {len(set(action.table[N.identity, :].tolist()))} of {N.order} points",
            witness=(N.name_of(N.identity),),
        )
    broken = eq4_violation(action)
    if broken:
        h, eta, mu = broken
        raise Eq4Violated(
            f"({N.name_of(eta)} ⋆ {N.name_of(mu)}) ⊡ {H.name_of(h)} breaks the right bracoid law",
            witness=(H.name_of(h), N.name_of(eta), N.name_of(mu)),
        )
    return SkewRightBracoid(H, N, action)


# ------------------------------------------------------------------
# Derived maps, one actor at a time
# ------------------------------------------------------------------

def gamma(B: SkewLeftBracoid, g: int) -> NMap:
    return NMap(tuple(int(x) for x in B.gammas[g]))


def alpha(B: SkewLeftBracoid, g: int) -> NMap:
    return NMap(tuple(int(x) for x in B.alphas[g]))


def delta(B: SkewRightBracoid, h: int) -> NMap:
    return NMap(tuple(int(x) for x in B.deltas[:, h]))


def beta(B: SkewRightBracoid, h: int) -> NMap:
    return NMap(tuple(int(x) for x in B.betas[:, h]))


# ------------------------------------------------------------------
# Braces
# ------------------------------------------------------------------

def eq1_violation(star_group: FiniteGroup, dot_group: FiniteGroup) -> Optional[Tuple[int, int, int]]:
    S, D = star_group.table, dot_group.table
    a = np.arange(star_group.order)[:, None, None]
    lhs = D[a, S[None, :, :]]
    rhs = S[S[D[:, :, None], star_group.inverses[:, None, None]], D[:, None, :]]
    broken = np.argwhere(lhs != rhs)
    return tuple(int(x) for x in broken[0]) if len(broken) else None


def make_brace(star_group: FiniteGroup, dot_group: FiniteGroup) -> SkewBrace:
    """a·(b⋆c) = (a·b) ⋆ ā ⋆ (a·c) for all a, b, c."""
    if star_group.order != dot_group.order:
        raise InvalidParameter(
            f"carriers differ in size: {star_group.order} (⋆) vs {dot_group.order} (·)"
        )
    if star_group.element_names != dot_group.element_names:
        raise InvalidParameter("the two group structures must index the same carrier")
    broken = eq1_violation(star_group, dot_group)
    if broken:
        raise Eq1Violated(
            "a·(b⋆c) != (a·b) ⋆ ā ⋆ (a·c)",
            witness=star_group.names(*broken),
        )
    return SkewBrace(star_group, dot_group)


def brace_gamma(B: SkewBrace, b: int) -> NMap:
    """The brace γ-function: a ↦ b̄ ⋆ (b·a)."""
    return NMap(tuple(B.star(B.bar(b), B.dot(b, a)) for a in range(B.n)))


def brace_to_left_bracoid(B: SkewBrace) -> SkewLeftBracoid:
    """G = (B,·), N = (B,⋆), g ⊙ η = g·η."""
    return make_left_bracoid(B.dot_group, B.star_group, B.dot_group.table)


def left_bracoid_to_brace(B: SkewLeftBracoid) -> SkewBrace:
    """Transport · along the bijection g ↦ g⊙e_N of a regular bracoid."""
    G, N = B.G, B.N
    if G.order != N.order or not is_free(B.action):
        raise NotRegular(f"{G.name} does not act regularly on {N.name}")
    iota = B.action.table[:, N.identity]
    back = np.empty(N.order, dtype=np.int64)
    back[iota] = np.arange(G.order)
    dot = iota[G.table[back[:, None], back[None, :]]]
    dot_group = make_group_from_table(N.element_names, dot, name=f"({G.name} on {N.name})")
    return make_brace(N, dot_group)
