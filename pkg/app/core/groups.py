"""
Finite Groups
=============
Cayley-table groups, the three presented families used by the dihedral
example, direct products, and homomorphism / automorphism search.

Elements are plain integer indices into one group's element list; the
identity of every constructed group sits at index 0.
"""

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from .errors import (
    InvalidParameter,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    OrderCapExceeded,
)

logger = logging.getLogger("bracoid.groups")


def _frozen(array) -> np.ndarray:
    out = np.array(array, dtype=np.int64, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A validated finite group. Build it with make_group_from_table or a
    named constructor, never directly."""

    name: str
    element_names: Tuple[str, ...]
    table: np.ndarray
    identity: int
    inverses: np.ndarray
    _key: bytes = field(init=False, repr=False)

    def __post_init__(self):
        key = "\x1f".join(self.element_names).encode("utf-8") + b"\x00" + self.table.tobytes()
        object.__setattr__(self, "_key", key)

    @property
    def order(self) -> int:
        return len(self.element_names)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = self.identity
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def name_of(self, a: int) -> str:
        return self.element_names[a]

    def index_of(self, element_name: str) -> int:
        try:
            return self.element_names.index(element_name)
        except ValueError:
            raise KeyError(f"{element_name!r} is not an element of {self.name}")

    def product_of(self, *elements: int) -> int:
        result = self.identity
        for a in elements:
            result = self.mul(result, a)
        return result

    def names(self, *elements: int) -> Tuple[str, ...]:
        return tuple(self.element_names[a] for a in elements)


# ------------------------------------------------------------------
# Construction and validation
# ------------------------------------------------------------------

def make_group_from_table(element_names: Sequence[str], table, name: str = "G") -> FiniteGroup:
    """Validate a Cayley table and return the group it defines.

    Checks run in the order Latin square, identity, inverses, associativity;
    the first violation raises with the offending tuple as witness.
    """
    names = tuple(str(n) for n in element_names)
    n = len(names)
    if n == 0:
        raise InvalidParameter("a group needs at least one element")
    if len(set(names)) != n:
        raise InvalidParameter(f"element names of {name} are not unique")

    try:
        raw = np.asarray(table)
    except ValueError:
        raise InvalidParameter(f"table of {name} is not a rectangular matrix")
    if raw.shape != (n, n):
        raise InvalidParameter(f"table of {name} has shape {raw.shape}, expected ({n}, {n})")
    if not np.issubdtype(raw.dtype, np.integer):
        raise InvalidParameter(f"table of {name} must hold integer indices")
    if raw.size and (raw.min() < 0 or raw.max() >= n):
        bad = np.argwhere((raw < 0) | (raw >= n))[0]
        raise InvalidParameter(
            f"table entry [{bad[0]}][{bad[1]}] of {name} is out of range",
            witness=(str(bad[0]), str(bad[1])),
        )
    t = raw.astype(np.int64)

    for a in range(n):
        if len(set(t[a].tolist())) != n:
            raise NotLatinSquare(f"row {names[a]} of {name} repeats an entry", witness=(names[a],))
    for b in range(n):
        if len(set(t[:, b].tolist())) != n:
            raise NotLatinSquare(f"column {names[b]} of {name} repeats an entry", witness=(names[b],))

    everything = np.arange(n)
    identity = None
    for e in range(n):
        if np.array_equal(t[e], everything) and np.array_equal(t[:, e], everything):
            identity = e
            break
    if identity is None:
        raise NoIdentity(f"{name} has no two-sided identity")

    inverses = np.empty(n, dtype=np.int64)
    for a in range(n):
        right = int(np.flatnonzero(t[a] == identity)[0])
        if t[right, a] != identity:
            raise NoInverse(f"{names[a]} has no two-sided inverse in {name}", witness=(names[a],))
        inverses[a] = right

    left = t[t[:, :, None], everything[None, None, :]]
    right_assoc = t[everything[:, None, None], t[None, :, :]]
    broken = np.argwhere(left != right_assoc)
    if len(broken):
        a, b, c = (int(x) for x in broken[0])
        raise NotAssociative(
            f"({names[a]}{names[b]}){names[c]} != {names[a]}({names[b]}{names[c]}) in {name}",
            witness=(names[a], names[b], names[c]),
        )

    return FiniteGroup(name, names, _frozen(t), identity, _frozen(inverses))


def _monomial(*factors: Tuple[str, int]) -> str:
    parts = []
    for symbol, exponent in factors:
        if exponent == 0:
            continue
        parts.append(symbol if exponent == 1 else f"{symbol}^{exponent}")
    return "".join(parts) or "e"


def _from_normal_forms(name: str, forms: List[tuple], names: List[str],
                       multiply: Callable[[tuple, tuple], tuple]) -> FiniteGroup:
    position = {f: i for i, f in enumerate(forms)}
    table = [[position[multiply(f1, f2)] for f2 in forms] for f1 in forms]
    return make_group_from_table(names, table, name=name)


def _require_positive(value: int, label: str) -> None:
    if not isinstance(value, (int, np.integer)) or value < 1:
        raise InvalidParameter(f"{label} must be a positive integer, got {value!r}")


def cyclic(n: int) -> FiniteGroup:
    """Z_n with element i named g^i."""
    _require_positive(n, "n")
    forms = [(i,) for i in range(n)]
    return _from_normal_forms(
        f"C{n}", forms, [f"g^{i}" for i in range(n)],
        lambda p, q: ((p[0] + q[0]) % n,),
    )


def dihedral(d: int) -> FiniteGroup:
    """D_d = <μ, η | μ^d = η^2 = 1, μ^η = μ^-1>, order 2d.

    Element μ^r η^s sits at index s*d + r.
    """
    _require_positive(d, "d")
    forms = [(r, s) for s in range(2) for r in range(d)]
    names = [_monomial(("μ", r), ("η", s)) for r, s in forms]

    def multiply(p, q):
        r1, s1 = p
        r2, s2 = q
        return ((r1 + (-1) ** s1 * r2) % d, (s1 + s2) % 2)

    return _from_normal_forms(f"D{d}", forms, names, multiply)


def presented_G(t: int) -> FiniteGroup:
    """<x, y | x^t = y^4 = 1, x^y = x^-1>, order 4t; x^i y^j at index j*t + i."""
    _require_positive(t, "t")
    forms = [(i, j) for j in range(4) for i in range(t)]
    names = [_monomial(("x", i), ("y", j)) for i, j in forms]

    def multiply(p, q):
        i1, j1 = p
        i2, j2 = q
        return ((i1 + (-1) ** j1 * i2) % t, (j1 + j2) % 4)

    return _from_normal_forms(f"GT{t}", forms, names, multiply)


def presented_H(w: int) -> FiniteGroup:
    """<a, b | a^2w = 1, a^w = b^2, a^b = a^-1>, order 4w; a^k b^l at index l*2w + k.

    The w*l1*l2 term in the a-exponent is what b^2 = a^w forces on the normal form.
    """
    _require_positive(w, "w")
    m = 2 * w
    forms = [(k, l) for l in range(2) for k in range(m)]
    names = [_monomial(("a", k), ("b", l)) for k, l in forms]

    def multiply(p, q):
        k1, l1 = p
        k2, l2 = q
        return ((k1 + (-1) ** l1 * k2 + w * l1 * l2) % m, (l1 + l2) % 2)

    return _from_normal_forms(f"HW{w}", forms, names, multiply)


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    n1, n2 = G1.order, G2.order
    names = [f"({a},{b})" for a in G1.element_names for b in G2.element_names]
    i = np.arange(n1 * n2)
    first, second = i // n2, i % n2
    table = G1.table[first[:, None], first[None, :]] * n2 + G2.table[second[:, None], second[None, :]]
    return make_group_from_table(names, table, name=f"{G1.name} x {G2.name}")


def opposite(G: FiniteGroup) -> FiniteGroup:
    """Same elements with a ∘op b = b ∘ a."""
    return FiniteGroup(f"{G.name}^op", G.element_names, _frozen(G.table.T), G.identity, G.inverses)


# ------------------------------------------------------------------
# Predicates and structure
# ------------------------------------------------------------------

def is_abelian(G: FiniteGroup) -> bool:
    return bool(np.array_equal(G.table, G.table.T))


def element_order(G: FiniteGroup, a: int) -> int:
    k, x = 1, a
    while x != G.identity:
        x = G.mul(x, a)
        k += 1
    return k


def subgroup_closure(G: FiniteGroup, generators: Sequence[int]) -> List[int]:
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = G.mul(g, s)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return sorted(seen)


def generating_sequence(G: FiniteGroup) -> List[int]:
    """Greedy: take the first element that enlarges the generated subgroup."""
    generators: List[int] = []
    generated = {G.identity}
    for a in range(G.order):
        if a not in generated:
            generators.append(a)
            generated = set(subgroup_closure(G, generators))
    return generators


def extend_images(G: FiniteGroup, generators: Sequence[int], images: Sequence[Hashable],
                  compose: Callable, unit: Hashable) -> Optional[list]:
    """Extend generator images to the subgroup they generate.

    Walks the Cayley graph g -> g*s and requires image(g*s) = image(g) * image(s)
    on every edge, which is exactly the homomorphism condition. Returns the
    image list (None where unreached) or None on the first inconsistency.
    """
    result: list = [None] * G.order
    result[G.identity] = unit
    queue = deque([G.identity])
    while queue:
        g = queue.popleft()
        for s, image in zip(generators, images):
            h = G.mul(g, s)
            value = compose(result[g], image)
            if result[h] is None:
                result[h] = value
                queue.append(h)
            elif result[h] != value:
                return None
    return result


# ------------------------------------------------------------------
# Maps between groups
# ------------------------------------------------------------------

@dataclass(frozen=True)
class GroupMap:
    source: FiniteGroup
    target: FiniteGroup
    images: Tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.source.order:
            raise InvalidParameter(
                f"map from {self.source.name} needs {self.source.order} images, got {len(self.images)}"
            )

    def __call__(self, a: int) -> int:
        return self.images[a]

    @property
    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.images)) == self.source.order


def identity_map(G: FiniteGroup) -> GroupMap:
    return GroupMap(G, G, tuple(range(G.order)))


def is_homomorphism(m: GroupMap) -> bool:
    images = np.asarray(m.images, dtype=np.int64)
    lhs = images[m.source.table]
    rhs = m.target.table[images[:, None], images[None, :]]
    return bool(np.array_equal(lhs, rhs))


def compose(second: GroupMap, first: GroupMap) -> GroupMap:
    """second ∘ first (apply first, then second)."""
    if first.target != second.source:
        raise InvalidParameter("maps are not composable")
    return GroupMap(first.source, second.target, tuple(second.images[a] for a in first.images))


def invert(m: GroupMap) -> GroupMap:
    if not m.is_bijective:
        raise InvalidParameter("only bijective maps can be inverted")
    images = [0] * m.target.order
    for a, b in enumerate(m.images):
        images[b] = a
    return GroupMap(m.target, m.source, tuple(images))


def _check_cap(G: FiniteGroup, cap: Optional[int]) -> None:
    limit = cap if cap is not None else get_settings().automorphism_cap
    if G.order > limit:
        raise OrderCapExceeded(f"{G.name} has order {G.order}, above the cap {limit}")


@lru_cache(maxsize=256)
def _isomorphism_images(G1: FiniteGroup, G2: FiniteGroup) -> Tuple[Tuple[int, ...], ...]:
    generators = generating_sequence(G1)
    orders2 = [element_order(G2, b) for b in range(G2.order)]
    candidates = [
        [b for b in range(G2.order) if orders2[b] == element_order(G1, s)]
        for s in generators
    ]
    found: List[Tuple[int, ...]] = []

    def search(chosen: List[int]) -> None:
        k = len(chosen)
        partial = extend_images(G1, generators[:k], chosen, G2.mul, G2.identity)
        if partial is None:
            return
        assigned = [x for x in partial if x is not None]
        if len(set(assigned)) != len(assigned):
            return
        if k == len(generators):
            found.append(tuple(partial))
            return
        for b in candidates[k]:
            search(chosen + [b])

    search([])
    return tuple(sorted(found))


def isomorphisms(G1: FiniteGroup, G2: FiniteGroup, cap: Optional[int] = None) -> List[GroupMap]:
    """All isomorphisms G1 -> G2 by generator-image search."""
    _check_cap(G1, cap)
    if G1.order != G2.order:
        return []
    return [GroupMap(G1, G2, images) for images in _isomorphism_images(G1, G2)]


def automorphisms(G: FiniteGroup, cap: Optional[int] = None) -> List[GroupMap]:
    return isomorphisms(G, G, cap)


def is_isomorphic(G1: FiniteGroup, G2: FiniteGroup, cap: Optional[int] = None) -> bool:
    if G1.order != G2.order:
        return False
    if is_abelian(G1) != is_abelian(G2):
        return False
    if sorted(element_order(G1, a) for a in range(G1.order)) != sorted(
        element_order(G2, b) for b in range(G2.order)
    ):
        return False
    return bool(isomorphisms(G1, G2, cap))


# ------------------------------------------------------------------
# Catalog and descriptors
# ------------------------------------------------------------------

_SMALL_GROUPS = {
    1: lambda: [cyclic(1)],
    2: lambda: [cyclic(2)],
    3: lambda: [cyclic(3)],
    4: lambda: [cyclic(4), direct_product(cyclic(2), cyclic(2))],
    5: lambda: [cyclic(5)],
    6: lambda: [cyclic(6), dihedral(3)],
    7: lambda: [cyclic(7)],
    8: lambda: [
        cyclic(8),
        direct_product(cyclic(4), cyclic(2)),
        direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
        dihedral(4),
        presented_H(2),
    ],
}


def small_groups(n: int) -> List[FiniteGroup]:
    """One group per isomorphism type of order n, for n <= 8."""
    _require_positive(n, "n")
    if n not in _SMALL_GROUPS:
        raise OrderCapExceeded(f"no catalog of groups of order {n} (largest is 8)")
    return _SMALL_GROUPS[n]()


_TERM = re.compile(r"^(C|D|GT|HW)(\d+)$")


def parse_descriptor(spec: str) -> FiniteGroup:
    """Parse "C<n>", "D<d>", "GT<t>", "HW<w>", "@file.json" and "A x B" products."""
    terms = [t.strip() for t in re.split(r"\s+[x×]\s+|×", spec.strip()) if t.strip()]
    if not terms:
        raise InvalidParameter(f"empty group descriptor {spec!r}")
    groups = [_parse_term(t) for t in terms]
    result = groups[0]
    for g in groups[1:]:
        result = direct_product(result, g)
    return result


def _parse_term(term: str) -> FiniteGroup:
    if term.startswith("@"):
        from ..storage import load_group

        return load_group(term[1:])
    match = _TERM.match(term)
    if not match:
        raise InvalidParameter(f"cannot parse group descriptor term {term!r}")
    kind, value = match.group(1), int(match.group(2))
    constructor = {"C": cyclic, "D": dihedral, "GT": presented_G, "HW": presented_H}[kind]
    return constructor(value)
