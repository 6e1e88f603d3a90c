"""
Group Actions
=============
Fully tabulated left actions G × N -> N and right actions N × H -> N.

N is used only as a set here; its group structure matters to the
bracoid layer. Transitivity is a predicate, not a construction invariant,
so the enumerator can build candidates first and filter second.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple

import numpy as np

from .errors import CompatibilityViolated, IdentityLawViolated, ShapeError
from .groups import FiniteGroup, _frozen


def _table_key(*parts) -> bytes:
    return b"\x00".join(p if isinstance(p, bytes) else p._key for p in parts)


def _check_shape(table, rows: int, cols: int, bound: int, label: str) -> np.ndarray:
    try:
        raw = np.asarray(table)
    except ValueError:
        raise ShapeError(f"{label} is not a rectangular matrix")
    if raw.shape != (rows, cols):
        raise ShapeError(f"{label} has shape {raw.shape}, expected ({rows}, {cols})")
    if not np.issubdtype(raw.dtype, np.integer):
        raise ShapeError(f"{label} must hold integer indices")
    if raw.size and (raw.min() < 0 or raw.max() >= bound):
        r, c = (int(x) for x in np.argwhere((raw < 0) | (raw >= bound))[0])
        raise ShapeError(f"{label}[{r}][{c}] = {int(raw[r, c])} is out of range", witness=(str(r), str(c)))
    return raw.astype(np.int64)


@dataclass(frozen=True, eq=False)
class LeftActionTable:
    """table[g][η] = g ⊙ η."""

    actor: FiniteGroup
    space: FiniteGroup
    table: np.ndarray
    _key: bytes = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_key", _table_key(self.actor, self.space, self.table.tobytes()))

    @classmethod
    def unchecked(cls, G: FiniteGroup, N: FiniteGroup, table) -> "LeftActionTable":
        """Skip the action axioms; for feeding broken inputs to checkers."""
        return cls(G, N, _frozen(_check_shape(table, G.order, N.order, N.order, "left_action")))

    def __eq__(self, other) -> bool:
        return isinstance(other, LeftActionTable) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def act(self, g: int, eta: int) -> int:
        return int(self.table[g, eta])


@dataclass(frozen=True, eq=False)
class RightActionTable:
    """table[η][h] = η ⊡ h."""

    space: FiniteGroup
    actor: FiniteGroup
    table: np.ndarray
    _key: bytes = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_key", _table_key(self.space, self.actor, self.table.tobytes()))

    @classmethod
    def unchecked(cls, N: FiniteGroup, H: FiniteGroup, table) -> "RightActionTable":
        return cls(N, H, _frozen(_check_shape(table, N.order, H.order, N.order, "right_action")))

    def __eq__(self, other) -> bool:
        return isinstance(other, RightActionTable) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def act(self, eta: int, h: int) -> int:
        return int(self.table[eta, h])


def make_left_action(G: FiniteGroup, N: FiniteGroup, table) -> LeftActionTable:
    t = _check_shape(table, G.order, N.order, N.order, "left_action")
    points = np.arange(N.order)

    moved = np.flatnonzero(t[G.identity] != points)
    if len(moved):
        eta = int(moved[0])
        raise IdentityLawViolated(
            f"e_G ⊙ {N.name_of(eta)} = {N.name_of(int(t[G.identity, eta]))}",
            witness=(G.name_of(G.identity), N.name_of(eta)),
        )

    # (g·h) ⊙ η against g ⊙ (h ⊙ η)
    lhs = t[G.table[:, :, None], points[None, None, :]]
    rhs = t[np.arange(G.order)[:, None, None], t[None, :, :]]
    broken = np.argwhere(lhs != rhs)
    if len(broken):
        g, h, eta = (int(x) for x in broken[0])
        raise CompatibilityViolated(
            f"({G.name_of(g)}·{G.name_of(h)}) ⊙ {N.name_of(eta)} != "
            f"{G.name_of(g)} ⊙ ({G.name_of(h)} ⊙ {N.name_of(eta)})",
            witness=(G.name_of(g), G.name_of(h), N.name_of(eta)),
        )
    return LeftActionTable(G, N, _frozen(t))


def make_right_action(N: FiniteGroup, H: FiniteGroup, table) -> RightActionTable:
    t = _check_shape(table, N.order, H.order, N.order, "right_action")
    points = np.arange(N.order)

    moved = np.flatnonzero(t[:, H.identity] != points)
    if len(moved):
        eta = int(moved[0])
        raise IdentityLawViolated(
            f"{N.name_of(eta)} ⊡ e_H = {N.name_of(int(t[eta, H.identity]))}",
            witness=(N.name_of(eta), H.name_of(H.identity)),
        )

    # η ⊡ (g∘h) against (η ⊡ g) ⊡ h
    lhs = t[points[:, None, None], H.table[None, :, :]]
    rhs = t[t[:, :, None], np.arange(H.order)[None, None, :]]
    broken = np.argwhere(lhs != rhs)
    if len(broken):
        eta, g, h = (int(x) for x in broken[0])
        raise CompatibilityViolated(
            f"{N.name_of(eta)} ⊡ ({H.name_of(g)}∘{H.name_of(h)}) != "
            f"({N.name_of(eta)} ⊡ {H.name_of(g)}) ⊡ {H.name_of(h)}",
            witness=(H.name_of(g), H.name_of(h), N.name_of(eta)),
        )
    return RightActionTable(N, H, _frozen(t))


def act_left(A: LeftActionTable, g: int, eta: int) -> int:
    if not (0 <= g < A.actor.order and 0 <= eta < A.space.order):
        raise IndexError(f"({g}, {eta}) is outside {A.actor.order}×{A.space.order}")
    return A.act(g, eta)


def act_right(A: RightActionTable, eta: int, h: int) -> int:
    if not (0 <= eta < A.space.order and 0 <= h < A.actor.order):
        raise IndexError(f"({eta}, {h}) is outside {A.space.order}×{A.actor.order}")
    return A.act(eta, h)


def permutation_rows(A) -> Tuple[Tuple[int, ...], ...]:
    """One permutation of N per actor element, indexed by actor."""
    rows = A.table if isinstance(A, LeftActionTable) else A.table.T
    return tuple(tuple(int(x) for x in row) for row in rows)


def orbit(A, eta: int) -> FrozenSet[int]:
    # a single sweep over the actors already closes the orbit
    values = A.table[:, eta] if isinstance(A, LeftActionTable) else A.table[eta, :]
    return frozenset(int(x) for x in values)


def orbits(A) -> List[List[int]]:
    seen = set()
    result = []
    for eta in range(A.space.order):
        if eta in seen:
            continue
        block = sorted(orbit(A, eta))
        seen.update(block)
        result.append(block)
    return result


def is_transitive(A) -> bool:
    return len(orbit(A, A.space.identity)) == A.space.order


def is_free(A) -> bool:
    points = np.arange(A.space.order)
    for x, row in enumerate(permutation_rows(A)):
        if x != A.actor.identity and np.any(np.asarray(row) == points):
            return False
    return True


def is_regular(A) -> bool:
    return is_transitive(A) and is_free(A)
