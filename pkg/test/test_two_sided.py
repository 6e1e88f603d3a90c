"""
Test Suite for Two-sided Structures and Theorem Verdicts
========================================================
"""

import numpy as np
import pytest

from app.checkers import (
    check_brace_star_reproduction,
    check_lau_brace,
    check_lau_converse,
    check_prop_action_beta,
    check_prop_inverse_beta,
    check_rump_radical_ring,
    check_star_forms,
    check_theorem_two_sided,
    theorem_suite,
    verify_two_sided,
)
from app.core.actions import RightActionTable, make_right_action
from app.core.bracoids import make_brace, make_left_bracoid, make_right_bracoid
from app.core.errors import Eq6Violated, SharedNMismatch
from app.core.examples import trivial_brace
from app.core.groups import cyclic, opposite
from app.core.two_sided import (
    brace_is_left_brace,
    brace_is_two_sided,
    brace_star,
    brace_star_abelian_form,
    make_two_sided,
    right_brace_violation,
    star_array,
)


def _flags(verdicts):
    return {v.theorem: v.flag for v in verdicts}


# ------------------------------------------------------------------
# Construction
# ------------------------------------------------------------------

def test_translations_commute(c3):
    """Left and right translations on a group always commute."""
    left = make_left_bracoid(c3, c3, c3.table)
    right = make_right_bracoid(c3, c3, c3.table)
    T = make_two_sided(left, right)
    assert (T.G, T.H, T.N) == (c3, c3, c3)


def test_left_translation_against_left_translation(d3):
    """η ⊡ h = h⁻¹·η is a right bracoid on D3 that does not commute with g·η."""
    left = make_left_bracoid(d3, d3, d3.table)
    table = d3.table[d3.inverses[None, :], np.arange(6)[:, None]]
    right = make_right_bracoid(d3, d3, make_right_action(d3, d3, table))
    with pytest.raises(Eq6Violated) as info:
        make_two_sided(left, right)
    assert len(info.value.witness) == 3


def test_shared_n_is_required(c3):
    left = make_left_bracoid(c3, c3, c3.table)
    right = make_right_bracoid(cyclic(2), cyclic(2), cyclic(2).table)
    with pytest.raises(SharedNMismatch):
        make_two_sided(left, right)


def test_verify_two_sided_all_pass(example_333):
    reports = verify_two_sided(example_333)
    assert reports[-1].property == "compatibility"
    assert all(r.status != "fail" for r in reports)


# ------------------------------------------------------------------
# Theorem verdicts on the dihedral family
# ------------------------------------------------------------------

def test_two_sided_theorem_with_abelian_N(example_222):
    """Test #1: N = D2 is abelian, so all four conclusions are checked"""
    verdict = check_theorem_two_sided(example_222)
    assert verdict.flag == "ok"
    assert verdict.conclusion is True
    assert verdict.hypotheses == {"N_abelian": True}


def test_two_sided_theorem_not_applicable_on_d3(example_333):
    verdict = check_theorem_two_sided(example_333)
    assert verdict.flag == "not_applicable"
    assert verdict.conclusion is None
    assert verdict.witness[0] == "N_abelian"


def test_action_beta_formula_holds_without_abelian_N(example_333):
    verdict = check_prop_action_beta(example_333.left, example_333.right.action)
    assert verdict.flag == "ok"
    assert verdict.conclusion is True
    assert all(verdict.hypotheses.values())


def test_inverse_beta_formulas(example_222, example_333):
    assert check_prop_inverse_beta(example_222.left, example_222.right.action).flag == "ok"
    verdict = check_prop_inverse_beta(example_333.left, example_333.right.action)
    assert verdict.flag == "not_applicable"
    assert verdict.hypotheses["N_abelian"] is False


def test_lau_converse_on_example(example_222):
    verdict = check_lau_converse(example_222.left, example_222.right.action)
    assert verdict.flag == "ok"
    assert set(verdict.hypotheses) == {
        "N_abelian", "right_action_axioms", "right_action_transitive", "compatible", "alpha_beta_commute",
    }


def test_lau_converse_reports_broken_right_action(example_222):
    """An unchecked right table that is not an action falsifies a hypothesis."""
    N, H = example_222.N, example_222.H
    table = np.array(example_222.right.action.table)
    table[:, H.identity] = table[::-1, H.identity].copy()
    broken = RightActionTable.unchecked(N, H, table)
    verdict = check_lau_converse(example_222.left, broken)
    assert verdict.hypotheses["right_action_axioms"] is False
    assert verdict.flag == "not_applicable"


def test_right_action_over_other_n_is_rejected(example_222, c2):
    with pytest.raises(SharedNMismatch):
        check_lau_converse(example_222.left, make_right_action(c2, c2, c2.table))


def test_theorem_suite_on_two_sided(example_333):
    flags = _flags(theorem_suite(example_333))
    assert flags == {
        "two_sided_bracoid_theorem": "not_applicable",
        "action_beta_formula": "ok",
        "inverse_beta_formulas": "not_applicable",
        "lau_converse_bracoid": "not_applicable",
    }


def test_theorem_suite_on_left_bracoid_with_right_action(example_222):
    verdicts = theorem_suite(example_222.left, example_222.right.action)
    assert len(verdicts) == 3
    assert all(v.flag == "ok" for v in verdicts)
    assert theorem_suite(example_222.left) == []


# ------------------------------------------------------------------
# Braces
# ------------------------------------------------------------------

def test_star_operation_of_trivial_brace(c4):
    B = trivial_brace(c4)
    assert np.all(star_array(B) == c4.identity)
    assert brace_star(B, 1, 3) == brace_star_abelian_form(B, 1, 3) == 0
    assert brace_is_left_brace(B)
    assert brace_is_two_sided(B)


def test_non_abelian_trivial_brace(d3):
    B = trivial_brace(d3)
    assert not brace_is_left_brace(B)
    assert right_brace_violation(B) is None


def test_opposite_brace_is_two_sided(d3):
    """a·b = b⋆a on D3: a non-abelian two-sided skew brace."""
    B = make_brace(d3, opposite(d3))
    assert brace_is_two_sided(B)
    assert not brace_is_left_brace(B)
    # ā⋆b⋆a⋆b̄, the commutator
    assert brace_star(B, 1, 3) == d3.product_of(2, 3, 1, 3)
    flags = _flags(theorem_suite(B))
    assert flags["brace_star_reproduction"] == "ok"
    assert flags["rump_radical_ring"] == "not_applicable"


@pytest.mark.parametrize("check", [check_rump_radical_ring, check_lau_brace, check_star_forms,
                                   check_brace_star_reproduction])
def test_brace_theorems_on_trivial_brace(check, c4):
    verdict = check(trivial_brace(c4))
    assert verdict.flag == "ok"
    assert verdict.conclusion is True


def test_brace_theorems_skip_non_abelian_star(d3):
    flags = _flags(theorem_suite(trivial_brace(d3)))
    assert flags["rump_radical_ring"] == "not_applicable"
    assert flags["lau_brace"] == "not_applicable"
    assert flags["star_forms_agree"] == "not_applicable"
    assert flags["brace_star_reproduction"] == "ok"


def test_brace_theorems_over_all_braces_on_klein(klein):
    from app.enumeration import enumerate_braces

    for B in enumerate_braces(klein).structures:
        for verdict in theorem_suite(B):
            assert verdict.flag != "counterexample_to_theorem", verdict
