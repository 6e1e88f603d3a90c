"""
Theorem Verifiers
=================
Exhaustive checks of the two-sided results: the endomorphism/commutation
theorem for two-sided bracoids, the action-β and inverse-β formulas, the
bracoid converse of Lau's theorem, and the brace-level statements of Rump
and Lau.

Verifiers report rather than assume. Every hypothesis is evaluated; the
conclusion is evaluated whenever it is computable, and a hypotheses-true /
conclusion-false outcome is flagged as counterexample_to_theorem.
"""

from typing import Dict, List, Optional, Tuple

import numpy as np

from ..core.actions import RightActionTable, is_transitive, make_right_action
from ..core.bracoids import SkewBrace, SkewLeftBracoid, beta_array, brace_to_left_bracoid, eq4_violation
from ..core.errors import ActionError, SharedNMismatch
from ..core.groups import FiniteGroup, is_abelian
from ..core.two_sided import TwoSidedSkewBracoid, eq6_violation, right_brace_violation, star_array
from ..schemas import TheoremVerdict
from .base_checker import first_failure, make_verdict


def _noncommuting_pair(N: FiniteGroup) -> Optional[List[str]]:
    bad = first_failure(N.table == N.table.T)
    return ["N_abelian", *N.names(*bad)] if bad else None


def _right_action_hypotheses(left: SkewLeftBracoid, right_action: RightActionTable
                             ) -> Tuple[Dict[str, bool], Optional[List[str]]]:
    """Hypothesis (a): a transitive right action commuting with ⊙."""
    if right_action.space != left.N:
        raise SharedNMismatch(f"right action is on {right_action.space.name}, bracoid on {left.N.name}")
    G, H, N = left.G, right_action.actor, left.N
    hypotheses: Dict[str, bool] = {}
    witness: Optional[List[str]] = None

    try:
        make_right_action(N, H, right_action.table)
        hypotheses["right_action_axioms"] = True
    except ActionError as e:
        hypotheses["right_action_axioms"] = False
        witness = ["right_action_axioms", e.kind, *e.witness]

    hypotheses["right_action_transitive"] = is_transitive(right_action)
    if witness is None and not hypotheses["right_action_transitive"]:
        witness = ["right_action_transitive", N.name_of(N.identity)]

    broken = eq6_violation(left.action, right_action)
    hypotheses["compatible"] = broken is None
    if witness is None and broken:
        g, eta, h = broken
        witness = ["compatible", G.name_of(g), N.name_of(eta), H.name_of(h)]
    return hypotheses, witness


def _alpha_beta_commute(left: SkewLeftBracoid, betas: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """First (g, η, h) with α(g)(η^β(h)) != (α(g)η)^β(h), or None."""
    A = left.alphas
    lhs = A[np.arange(left.G.order)[:, None, None], betas[None, :, :]]
    rhs = betas[A[:, :, None], np.arange(betas.shape[1])[None, None, :]]
    return first_failure(lhs == rhs)


# ------------------------------------------------------------------
# Two-sided bracoids
# ------------------------------------------------------------------

def check_theorem_two_sided(T: TwoSidedSkewBracoid) -> TheoremVerdict:
    """For abelian N: α(g), β(h) are endomorphisms, γ commutes with δ and α with β."""
    name = "two_sided_bracoid_theorem"
    G, H, N = T.G, T.H, T.N
    hypotheses = {"N_abelian": is_abelian(N)}
    if not hypotheses["N_abelian"]:
        return make_verdict(name, hypotheses, None, hypothesis_witness=_noncommuting_pair(N))

    S = N.table
    A, Gm = T.left.alphas, T.left.gammas
    D, Bt = T.right.deltas, T.right.betas
    g = np.arange(G.order)[:, None, None]
    h = np.arange(H.order)[None, None, :]

    bad = first_failure(A[g, S[None, :, :]] == S[A[:, :, None], A[:, None, :]])
    if bad:
        return make_verdict(name, hypotheses, False, ["item (1)", G.name_of(bad[0]), *N.names(bad[1], bad[2])])

    bad = first_failure(Bt[S[:, :, None], h] == S[Bt[:, None, :], Bt[None, :, :]])
    if bad:
        return make_verdict(name, hypotheses, False, ["item (2)", *N.names(bad[0], bad[1]), H.name_of(bad[2])])

    bad = first_failure(D[Gm[:, :, None], h] == Gm[g, D[None, :, :]])
    if bad:
        return make_verdict(name, hypotheses, False,
                            ["item (3)", G.name_of(bad[0]), N.name_of(bad[1]), H.name_of(bad[2])])

    bad = first_failure(Bt[A[:, :, None], h] == A[g, Bt[None, :, :]])
    if bad:
        return make_verdict(name, hypotheses, False,
                            ["item (4)", G.name_of(bad[0]), N.name_of(bad[1]), H.name_of(bad[2])])
    return make_verdict(name, hypotheses, True)


def check_prop_action_beta(left: SkewLeftBracoid, right_action: RightActionTable) -> TheoremVerdict:
    """(g⊙η)^β(h) = α(g)(η^β(h)) ⋆ η^β(h) ⋆ α(g)(e_N⊡h); no abelian hypothesis."""
    name = "action_beta_formula"
    hypotheses, hyp_witness = _right_action_hypotheses(left, right_action)
    G, H, N = left.G, right_action.actor, left.N
    S, A, t = N.table, left.alphas, left.action.table
    Bt = beta_array(right_action)
    g = np.arange(G.order)[:, None, None]

    lhs = Bt[t[:, :, None], np.arange(H.order)[None, None, :]]
    rhs = S[S[A[g, Bt[None, :, :]], Bt[None, :, :]], A[g, right_action.table[N.identity][None, None, :]]]
    bad = first_failure(lhs == rhs)
    if bad:
        witness = ["(g⊙η)^β(h)", G.name_of(bad[0]), N.name_of(bad[1]), H.name_of(bad[2])]
        return make_verdict(name, hypotheses, False, witness, hyp_witness)
    return make_verdict(name, hypotheses, True, hypothesis_witness=hyp_witness)


def _abelian_lau_hypotheses(left: SkewLeftBracoid, right_action: RightActionTable):
    hypotheses = {"N_abelian": is_abelian(left.N)}
    witness = _noncommuting_pair(left.N)
    more, more_witness = _right_action_hypotheses(left, right_action)
    hypotheses.update(more)
    witness = witness or more_witness

    betas = beta_array(right_action)
    broken = _alpha_beta_commute(left, betas)
    hypotheses["alpha_beta_commute"] = broken is None
    if witness is None and broken:
        g, eta, h = broken
        witness = ["alpha_beta_commute", left.G.name_of(g), left.N.name_of(eta), right_action.actor.name_of(h)]
    return hypotheses, witness, betas


def check_prop_inverse_beta(left: SkewLeftBracoid, right_action: RightActionTable) -> TheoremVerdict:
    """η̄^β(h) = (η^β(h))⁻¹ and η̄⊡h = (e_N⊡h)² ⋆ (η⊡h)⁻¹."""
    name = "inverse_beta_formulas"
    hypotheses, hyp_witness, Bt = _abelian_lau_hypotheses(left, right_action)
    H, N = right_action.actor, left.N
    S, inv, tr = N.table, N.inverses, right_action.table

    bad = first_failure(Bt[inv, :] == inv[Bt])
    if bad:
        witness = ["item (1)", N.name_of(bad[0]), H.name_of(bad[1])]
        return make_verdict(name, hypotheses, False, witness, hyp_witness)

    base = tr[N.identity][None, :]
    bad = first_failure(tr[inv, :] == S[S[base, base], inv[tr]])
    if bad:
        witness = ["item (2)", N.name_of(bad[0]), H.name_of(bad[1])]
        return make_verdict(name, hypotheses, False, witness, hyp_witness)
    return make_verdict(name, hypotheses, True, hypothesis_witness=hyp_witness)


def check_lau_converse(left: SkewLeftBracoid, right_action: RightActionTable) -> TheoremVerdict:
    """Under (a) and (b), the right action satisfies the right bracoid law."""
    name = "lau_converse_bracoid"
    hypotheses, hyp_witness, _ = _abelian_lau_hypotheses(left, right_action)
    broken = eq4_violation(right_action)
    if broken:
        h, eta, mu = broken
        witness = ["right_bracoid_law", right_action.actor.name_of(h), *left.N.names(eta, mu)]
        return make_verdict(name, hypotheses, False, witness, hyp_witness)
    return make_verdict(name, hypotheses, True, hypothesis_witness=hyp_witness)


# ------------------------------------------------------------------
# Braces
# ------------------------------------------------------------------

def _brace_hypotheses(B: SkewBrace) -> Tuple[Dict[str, bool], Optional[List[str]]]:
    hypotheses = {"star_abelian": is_abelian(B.star_group)}
    witness = None
    if not hypotheses["star_abelian"]:
        witness = ["star_abelian", *B.star_group.names(*first_failure(B.star_group.table == B.star_group.table.T))]
    return hypotheses, witness


def check_rump_radical_ring(B: SkewBrace) -> TheoremVerdict:
    """A two-sided left brace gives a radical ring (B, ⋆, ∗)."""
    name = "rump_radical_ring"
    hypotheses, hyp_witness = _brace_hypotheses(B)
    broken = right_brace_violation(B)
    hypotheses["two_sided"] = broken is None
    if hyp_witness is None and broken:
        hyp_witness = ["two_sided", *B.star_group.names(*broken)]

    S, D, X = B.star_group.table, B.dot_group.table, star_array(B)
    points = np.arange(B.n)
    a, c = points[:, None, None], points[None, None, :]
    checks = [
        ("∗ associative", X[X[:, :, None], c] == X[a, X[None, :, :]]),
        ("a∗(b⋆c) = (a∗b)⋆(a∗c)", X[a, S[None, :, :]] == S[X[:, :, None], X[:, None, :]]),
        ("(a⋆b)∗c = (a∗c)⋆(b∗c)", X[S[:, :, None], c] == S[X[:, None, :], X[None, :, :]]),
        ("a⋆b⋆(a∗b) = a·b", S[S, X] == D),
    ]
    for label, mask in checks:
        bad = first_failure(mask)
        if bad:
            return make_verdict(name, hypotheses, False, [label, *B.star_group.names(*bad)], hyp_witness)
    return make_verdict(name, hypotheses, True, hypothesis_witness=hyp_witness)


def check_lau_brace(B: SkewBrace) -> TheoremVerdict:
    """A left brace with associative ∗ is two-sided."""
    name = "lau_brace"
    hypotheses, hyp_witness = _brace_hypotheses(B)
    X = star_array(B)
    points = np.arange(B.n)
    bad = first_failure(X[X[:, :, None], points[None, None, :]] == X[points[:, None, None], X[None, :, :]])
    hypotheses["star_associative"] = bad is None
    if hyp_witness is None and bad:
        hyp_witness = ["star_associative", *B.star_group.names(*bad)]

    broken = right_brace_violation(B)
    if broken:
        return make_verdict(name, hypotheses, False, ["two_sided", *B.star_group.names(*broken)], hyp_witness)
    return make_verdict(name, hypotheses, True, hypothesis_witness=hyp_witness)


def check_star_forms(B: SkewBrace) -> TheoremVerdict:
    """ā⋆(a·b)⋆b̄ and (a·b)⋆ā⋆b̄ coincide when ⋆ is abelian."""
    name = "star_forms_agree"
    hypotheses, hyp_witness = _brace_hypotheses(B)
    S, D, inv = B.star_group.table, B.dot_group.table, B.star_group.inverses
    other = S[S[D, inv[:, None]], inv[None, :]]
    bad = first_failure(star_array(B) == other)
    if bad:
        return make_verdict(name, hypotheses, False, ["a∗b", *B.star_group.names(*bad)], hyp_witness)
    return make_verdict(name, hypotheses, True, hypothesis_witness=hyp_witness)


def check_brace_star_reproduction(B: SkewBrace) -> TheoremVerdict:
    """For a two-sided brace seen as a two-sided bracoid, a^β(b) = a∗b = α(a)b."""
    name = "brace_star_reproduction"
    broken = right_brace_violation(B)
    hypotheses = {"two_sided": broken is None}
    hyp_witness = ["two_sided", *B.star_group.names(*broken)] if broken else None

    X = star_array(B)
    alphas = brace_to_left_bracoid(B).alphas
    betas = beta_array(make_right_action(B.star_group, B.dot_group, B.dot_group.table))
    for label, values in (("α(a)b = a∗b", alphas), ("a^β(b) = a∗b", betas)):
        bad = first_failure(values == X)
        if bad:
            return make_verdict(name, hypotheses, False, [label, *B.star_group.names(*bad)], hyp_witness)
    return make_verdict(name, hypotheses, True, hypothesis_witness=hyp_witness)


def theorem_suite(structure, right_action: Optional[RightActionTable] = None) -> List[TheoremVerdict]:
    """Every verdict that applies to a two-sided bracoid, a left bracoid with a
    candidate right action, or a brace."""
    if isinstance(structure, SkewBrace):
        return [
            check_rump_radical_ring(structure),
            check_lau_brace(structure),
            check_star_forms(structure),
            check_brace_star_reproduction(structure),
        ]
    if isinstance(structure, TwoSidedSkewBracoid):
        verdicts = [check_theorem_two_sided(structure)]
        left, right_action = structure.left, structure.right.action
    elif isinstance(structure, SkewLeftBracoid) and right_action is not None:
        verdicts, left = [], structure
    else:
        return []
    verdicts += [
        check_prop_action_beta(left, right_action),
        check_prop_inverse_beta(left, right_action),
        check_lau_converse(left, right_action),
    ]
    return verdicts
