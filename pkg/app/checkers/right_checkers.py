"""
Right Bracoid Checkers
======================
Mirrors of the left identities for right skew bracoids: δ plays the role
of γ and β the role of α, with actors applied on the right.
"""

import numpy as np

from ..core.bracoids import SkewRightBracoid
from ..core.groups import is_abelian
from ..schemas import CheckReport
from .base_checker import BaseChecker, first_failure


class _RightChecker(BaseChecker):
    def __init__(self, B: SkewRightBracoid):
        self.B = B
        self.H, self.N = B.H, B.N
        self.t = B.action.table  # N × H
        self.S = self.N.table
        self.inv = self.N.inverses
        self.e = self.N.identity
        self.points = np.arange(self.N.order)
        self.actors = np.arange(self.H.order)

    def _names(self, etas=(), *hs):
        es = (self.N.name_of(x) for x in (etas if isinstance(etas, tuple) else (etas,)))
        return [*es, *(self.H.name_of(x) for x in hs)]


class RightRemarkIdentityChecker(_RightChecker):
    """η^δ(h) ⋆ (e_N⊡h) = η⊡h,  η ⋆ (e_N⊡h) = (η^δ(h)⁻¹)⊡h,  (e_N⊡h⁻¹)^δ(h) = (e_N⊡h)⁻¹"""

    name = "right_remark_identities"

    def check(self) -> CheckReport:
        S, t, e = self.S, self.t, self.e
        orbit_map = t[e, :]
        deltas = self.B.deltas

        bad = first_failure(S[deltas, orbit_map[None, :]] == t)
        if bad:
            return self._fail("η^δ(h) ⋆ (e_N⊡h) = η⊡h", self._names(bad[0], bad[1]))

        for h in range(self.H.order):
            if len(set(deltas[:, h].tolist())) != self.N.order:
                return self._fail("δ(h) is not invertible", self._names((), h))
        delta_inverse = np.argsort(deltas, axis=0)
        lhs = S[self.points[:, None], orbit_map[None, :]]
        rhs = t[delta_inverse, self.actors[None, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("η ⋆ (e_N⊡h) = (η^δ(h)⁻¹)⊡h", self._names(bad[0], bad[1]))

        lhs = deltas[t[e, self.H.inverses], self.actors]
        bad = first_failure(lhs == self.inv[orbit_map])
        if bad:
            return self._fail("(e_N⊡h⁻¹)^δ(h) = (e_N⊡h)⁻¹", self._names((), bad[0]))
        return self._pass()


class RightInverseIdentityChecker(_RightChecker):
    """(e_N⊡h)⁻¹ ⋆ (η̄⊡h) ⋆ (e_N⊡h)⁻¹ = (η⊡h)⁻¹"""

    name = "right_inverse_identity"

    def check(self) -> CheckReport:
        S, t = self.S, self.t
        base = self.inv[t[self.e, :]][None, :]
        lhs = S[S[base, t[self.inv, :]], base]
        bad = first_failure(lhs == self.inv[t])
        if bad:
            return self._fail("(e_N⊡h)⁻¹ ⋆ (η̄⊡h) ⋆ (e_N⊡h)⁻¹ = (η⊡h)⁻¹", self._names(bad[0], bad[1]))
        return self._pass()


class BetaPropertyChecker(_RightChecker):
    """The three β identities, items (1) to (3)."""

    name = "beta_properties"

    def check(self) -> CheckReport:
        S, inv, e = self.S, self.inv, self.e
        betas = self.B.betas.T  # H × N
        h = self.actors[:, None, None]
        eta = self.points[None, None, :]

        # (1) (μ⋆η)^β(h) = η̄ ⋆ μ^β(h) ⋆ η ⋆ η^β(h)
        lhs = betas[h, S[None, :, :]]
        rhs = S[S[S[inv[eta], betas[:, :, None]], eta], betas[:, None, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("item (1)", self._names((bad[1], bad[2]), bad[0]))

        # (2) e_N^β(h) = η^β(e_H) = e_N
        bad = first_failure(betas[:, e] == e)
        if bad:
            return self._fail("item (2)", self._names(e, bad[0]))
        bad = first_failure(betas[self.H.identity] == e)
        if bad:
            return self._fail("item (2)", self._names(bad[0], self.H.identity))

        # (3) η̄^β(h) = η ⋆ (η^β(h))⁻¹ ⋆ η̄
        lhs = betas[:, inv]
        rhs = S[S[self.points[None, :], inv[betas]], inv[None, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("item (3)", self._names(bad[1], bad[0]))
        return self._pass()


class DeltaHomomorphismChecker(_RightChecker):
    """Each δ(h) is an automorphism of (N,⋆) and η^δ(g∘h) = (η^δ(g))^δ(h)."""

    name = "delta_homomorphism"

    def check(self) -> CheckReport:
        S, deltas = self.S, self.B.deltas
        for h in range(self.H.order):
            if len(set(deltas[:, h].tolist())) != self.N.order:
                return self._fail("δ(h) is bijective", self._names((), h))

        # axes η, μ, h
        lhs = deltas[S[:, :, None], self.actors[None, None, :]]
        rhs = S[deltas[:, None, :], deltas[None, :, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("(η⋆μ)^δ(h) = η^δ(h) ⋆ μ^δ(h)", self._names((bad[0], bad[1]), bad[2]))

        # axes η, g, h; δ(g) applied first
        lhs = deltas[self.points[:, None, None], self.H.table[None, :, :]]
        rhs = deltas[deltas[:, :, None], self.actors[None, None, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("η^δ(g∘h) = (η^δ(g))^δ(h)", self._names(bad[0], bad[1], bad[2]))
        return self._pass()


class BetaEndomorphismChecker(_RightChecker):
    """(η⋆μ)^β(h) = η^β(h) ⋆ μ^β(h), which needs N abelian."""

    name = "beta_endomorphism"

    def check(self) -> CheckReport:
        if not is_abelian(self.N):
            return self._not_applicable()
        S, betas = self.S, self.B.betas
        lhs = betas[S[:, :, None], self.actors[None, None, :]]
        rhs = S[betas[:, None, :], betas[None, :, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("(η⋆μ)^β(h) = η^β(h) ⋆ μ^β(h)", self._names((bad[0], bad[1]), bad[2]))
        return self._pass()


class BetaDeltaRelationChecker(_RightChecker):
    """Both forms of β agree: η̄ ⋆ (η⊡h) ⋆ (e_N⊡h)⁻¹ = η̄ ⋆ η^δ(h)."""

    name = "beta_delta_relation"

    def check(self) -> CheckReport:
        S, inv, t = self.S, self.inv, self.t
        direct = S[S[inv[:, None], t], inv[t[self.e, :]][None, :]]
        bad = first_failure(direct == S[inv[:, None], self.B.deltas])
        if bad:
            return self._fail("η^β(h) = η̄ ⋆ η^δ(h)", self._names(bad[0], bad[1]))
        bad = first_failure(direct == self.B.betas)
        if bad:
            return self._fail("η^β(h) from its definition", self._names(bad[0], bad[1]))
        return self._pass()
