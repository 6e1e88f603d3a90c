"""
Left Bracoid Checkers
=====================
Exhaustive scans of the identities every skew left bracoid satisfies.
Each checker also accepts unvalidated structures so that tests can confirm
it fails on broken inputs.
"""

import numpy as np

from ..core.bracoids import SkewLeftBracoid
from ..core.groups import is_abelian
from ..schemas import CheckReport
from .base_checker import BaseChecker, first_failure


class _LeftChecker(BaseChecker):
    def __init__(self, B: SkewLeftBracoid):
        self.B = B
        self.G, self.N = B.G, B.N
        self.t = B.action.table
        self.S = self.N.table
        self.inv = self.N.inverses
        self.e = self.N.identity
        self.points = np.arange(self.N.order)
        self.actors = np.arange(self.G.order)

    def _names(self, g=(), *etas):
        gs = (self.G.name_of(x) for x in (g if isinstance(g, tuple) else (g,)))
        return [*gs, *(self.N.name_of(x) for x in etas)]


class RemarkIdentityChecker(_LeftChecker):
    """(g⊙e_N) ⋆ γ(g)η = g⊙η,  (g⊙e_N) ⋆ η = g⊙(γ(g)⁻¹η),  γ(g)(g⁻¹⊙e_N) = (g⊙e_N)⁻¹"""

    name = "remark_identities"

    def check(self) -> CheckReport:
        t, S, e = self.t, self.S, self.e
        orbit_map = t[:, e]
        gammas = self.B.gammas

        bad = first_failure(S[orbit_map[:, None], gammas] == t)
        if bad:
            return self._fail("(g⊙e_N) ⋆ γ(g)η = g⊙η", self._names(bad[0], bad[1]))

        for g in range(self.G.order):
            if len(set(gammas[g].tolist())) != self.N.order:
                return self._fail("γ(g) is not invertible", self._names(g))
        gamma_inverse = np.argsort(gammas, axis=1)
        lhs = S[orbit_map[:, None], self.points[None, :]]
        rhs = t[self.actors[:, None], gamma_inverse]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("(g⊙e_N) ⋆ η = g⊙(γ(g)⁻¹η)", self._names(bad[0], bad[1]))

        lhs = gammas[self.actors, t[self.G.inverses, e]]
        bad = first_failure(lhs == self.inv[orbit_map])
        if bad:
            return self._fail("γ(g)(g⁻¹⊙e_N) = (g⊙e_N)⁻¹", self._names(bad[0]))
        return self._pass()


class InverseIdentityChecker(_LeftChecker):
    """(g⊙e_N)⁻¹ ⋆ (g⊙η̄) ⋆ (g⊙e_N)⁻¹ = (g⊙η)⁻¹"""

    name = "inverse_identity"

    def check(self) -> CheckReport:
        S, t = self.S, self.t
        base = self.inv[t[:, self.e]][:, None]
        lhs = S[S[base, t[:, self.inv]], base]
        bad = first_failure(lhs == self.inv[t])
        if bad:
            return self._fail("(g⊙e_N)⁻¹ ⋆ (g⊙η̄) ⋆ (g⊙e_N)⁻¹ = (g⊙η)⁻¹", self._names(bad[0], bad[1]))
        return self._pass()


class AlphaPropertyChecker(_LeftChecker):
    """The four α identities, items (1) to (4)."""

    name = "alpha_properties"

    def check(self) -> CheckReport:
        S, inv, A, e = self.S, self.inv, self.B.alphas, self.e
        g = self.actors[:, None, None]
        eta = self.points[None, :, None]

        # (1) α(g)(η⋆μ) = α(g)η ⋆ η ⋆ α(g)μ ⋆ η̄
        lhs = A[g, S[None, :, :]]
        rhs = S[S[S[A[:, :, None], eta], A[:, None, :]], inv[eta]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("item (1)", self._names(bad[0], bad[1], bad[2]))

        # (2) α(g)e_N = α(e_G)η = e_N
        bad = first_failure(A[:, e] == e)
        if bad:
            return self._fail("item (2)", self._names(bad[0], e))
        bad = first_failure(A[self.G.identity] == e)
        if bad:
            return self._fail("item (2)", self._names(self.G.identity, bad[0]))

        # (3) α(g)η̄ = η̄ ⋆ (α(g)η)⁻¹ ⋆ η
        lhs = A[:, inv]
        rhs = S[S[inv[None, :], inv[A]], self.points[None, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("item (3)", self._names(bad[0], bad[1]))

        # (4) α(gh)η = α(g)(α(h)η) ⋆ α(h)η ⋆ α(g)η
        lhs = A[self.G.table[:, :, None], self.points[None, None, :]]
        rhs = S[S[A[g, A[None, :, :]], A[None, :, :]], A[:, None, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("item (4)", self._names((bad[0], bad[1]), bad[2]))
        return self._pass()


class GammaHomomorphismChecker(_LeftChecker):
    """Each γ(g) is an automorphism of (N,⋆) and γ(g·h) = γ(g)∘γ(h)."""

    name = "gamma_homomorphism"

    def check(self) -> CheckReport:
        S, gammas = self.S, self.B.gammas
        for g in range(self.G.order):
            if len(set(gammas[g].tolist())) != self.N.order:
                return self._fail("γ(g) is bijective", self._names(g))

        lhs = gammas[self.actors[:, None, None], S[None, :, :]]
        rhs = S[gammas[:, :, None], gammas[:, None, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("γ(g)(η⋆μ) = γ(g)η ⋆ γ(g)μ", self._names(bad[0], bad[1], bad[2]))

        # apply γ(h) first
        lhs = gammas[self.G.table[:, :, None], self.points[None, None, :]]
        rhs = gammas[self.actors[:, None, None], gammas[None, :, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("γ(g·h) = γ(g)∘γ(h)", self._names((bad[0], bad[1]), bad[2]))
        return self._pass()


class AlphaEndomorphismChecker(_LeftChecker):
    """α(g)(η⋆μ) = α(g)η ⋆ α(g)μ, which needs N abelian."""

    name = "alpha_endomorphism"

    def check(self) -> CheckReport:
        if not is_abelian(self.N):
            return self._not_applicable()
        S, A = self.S, self.B.alphas
        lhs = A[self.actors[:, None, None], S[None, :, :]]
        rhs = S[A[:, :, None], A[:, None, :]]
        bad = first_failure(lhs == rhs)
        if bad:
            return self._fail("α(g)(η⋆μ) = α(g)η ⋆ α(g)μ", self._names(bad[0], bad[1], bad[2]))
        return self._pass()


class AlphaGammaRelationChecker(_LeftChecker):
    """Both forms of α agree: (g⊙e_N)⁻¹ ⋆ (g⊙η) ⋆ η̄ = γ(g)η ⋆ η̄."""

    name = "alpha_gamma_relation"

    def check(self) -> CheckReport:
        S, inv, t = self.S, self.inv, self.t
        direct = S[S[inv[t[:, self.e]][:, None], t], inv[None, :]]
        bad = first_failure(direct == S[self.B.gammas, inv[None, :]])
        if bad:
            return self._fail("α(g)η = γ(g)η ⋆ η̄", self._names(bad[0], bad[1]))
        bad = first_failure(direct == self.B.alphas)
        if bad:
            return self._fail("α(g)η from its definition", self._names(bad[0], bad[1]))
        return self._pass()
