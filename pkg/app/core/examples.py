"""
Example Structures
==================
The dihedral two-sided family on G = <x, y | x^t = y^4 = 1, x^y = x^-1>,
H = <a, b | a^2w = 1, a^w = b^2, a^b = a^-1> and N = D_d:

    x^i y^j ⊙ μ^r η^s = μ^(i + (-1)^j r) η^(j + s)
    μ^r η^s ⊡ a^k b^l = μ^(r + (-1)^s k) η^(s + l)

plus the trivial brace and the two-sided bracoid view of a two-sided brace.
"""

import logging
from dataclasses import dataclass
from math import gcd

from .bracoids import (
    SkewBrace,
    brace_to_left_bracoid,
    make_brace,
    make_left_bracoid,
    make_right_bracoid,
)
from .errors import DivisibilityViolated, InvalidParameter, NotTwoSidedBrace, WellDefinednessViolated
from .groups import FiniteGroup, dihedral, presented_G, presented_H
from .two_sided import TwoSidedSkewBracoid, make_two_sided, right_brace_violation

logger = logging.getLogger("bracoid.examples")


@dataclass(frozen=True)
class DihedralExampleParams:
    t: int
    w: int
    d: int

    def __post_init__(self):
        for label in ("t", "w", "d"):
            value = getattr(self, label)
            if not isinstance(value, int) or value < 1:
                raise InvalidParameter(f"{label} must be a positive integer, got {value!r}")
        if gcd(self.t, self.w) % self.d != 0:
            raise DivisibilityViolated(
                f"d = {self.d} does not divide gcd({self.t}, {self.w}) = {gcd(self.t, self.w)}",
                witness=(str(self.t), str(self.w), str(self.d)),
            )


def _left_rule(i: int, j: int, r: int, s: int, d: int) -> int:
    return ((j + s) % 2) * d + (i + (-1) ** j * r) % d


def _right_rule(r: int, s: int, k: int, l: int, d: int) -> int:
    return ((s + l) % 2) * d + (r + (-1) ** s * k) % d


def _left_table(G: FiniteGroup, N: FiniteGroup, t: int, d: int):
    x, y = 1 % t, t
    table = [[0] * N.order for _ in range(G.order)]
    for j in range(4):
        for i in range(t):
            g = j * t + i
            for s in range(2):
                for r in range(d):
                    table[g][s * d + r] = _left_rule(i, j, r, s, d)

    # every spelling x^i y^j with i < 2t, j < 8 must act like its normal form
    for j in range(8):
        for i in range(2 * t):
            g = G.mul(G.power(x, i), G.power(y, j))
            for eta in range(N.order):
                r, s = eta % d, eta // d
                if table[g][eta] != _left_rule(i, j, r, s, d):
                    logger.error(f"left rule depends on the spelling x^{i} y^{j} (t={t}, d={d})")
                    raise WellDefinednessViolated(
                        f"x^{i}y^{j} ⊙ {N.name_of(eta)} depends on the spelling",
                        witness=(f"x^{i}y^{j}", N.name_of(eta)),
                    )
    return table


def _right_table(H: FiniteGroup, N: FiniteGroup, w: int, d: int):
    m = 2 * w
    a, b = 1, m
    table = [[0] * H.order for _ in range(N.order)]
    for l in range(2):
        for k in range(m):
            h = l * m + k
            for s in range(2):
                for r in range(d):
                    table[s * d + r][h] = _right_rule(r, s, k, l, d)

    for l in range(4):
        for k in range(2 * m):
            h = H.mul(H.power(a, k), H.power(b, l))
            for eta in range(N.order):
                r, s = eta % d, eta // d
                if table[eta][h] != _right_rule(r, s, k, l, d):
                    logger.error(f"right rule depends on the spelling a^{k} b^{l} (w={w}, d={d})")
                    raise WellDefinednessViolated(
                        f"{N.name_of(eta)} ⊡ a^{k}b^{l} depends on the spelling",
                        witness=(N.name_of(eta), f"a^{k}b^{l}"),
                    )
    return table


def dihedral_example(params: DihedralExampleParams) -> TwoSidedSkewBracoid:
    t, w, d = params.t, params.w, params.d
    G, H, N = presented_G(t), presented_H(w), dihedral(d)
    left = make_left_bracoid(G, N, _left_table(G, N, t, d))
    right = make_right_bracoid(H, N, _right_table(H, N, w, d))
    logger.debug(f"dihedral example ({t}, {w}, {d}): |G|={G.order} |H|={H.order} |N|={N.order}")
    return make_two_sided(left, right)


def trivial_brace(G: FiniteGroup) -> SkewBrace:
    """⋆ = ·; the brace law reduces to associativity."""
    return make_brace(G, G)


def brace_both_sided_bracoid(B: SkewBrace) -> TwoSidedSkewBracoid:
    """g ⊙ η = g·η and η ⊡ h = η·h on N = (B, ⋆)."""
    broken = right_brace_violation(B)
    if broken:
        raise NotTwoSidedBrace(
            "(a⋆b)·c != (a·c) ⋆ c̄ ⋆ (b·c)",
            witness=B.star_group.names(*broken),
        )
    left = brace_to_left_bracoid(B)
    right = make_right_bracoid(B.dot_group, B.star_group, B.dot_group.table)
    return make_two_sided(left, right)
