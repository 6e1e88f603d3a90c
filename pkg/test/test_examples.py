"""
Test Suite for the Example Constructions
========================================
"""

from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from app.checkers import StructureVerifier, theorem_suite
from app.core.bracoids import brace_to_left_bracoid
from app.core.errors import DivisibilityViolated, InvalidParameter, NotTwoSidedBrace
from app.core.examples import DihedralExampleParams, brace_both_sided_bracoid, dihedral_example, trivial_brace
from app.core.groups import cyclic, dihedral, is_abelian
from app.core.two_sided import brace_is_two_sided

GRID = [
    (t, w, d)
    for t in range(1, 7)
    for w in range(1, 7)
    for d in range(1, gcd(t, w) + 1)
    if gcd(t, w) % d == 0
]


@pytest.mark.parametrize("t, w, d", GRID)
def test_dihedral_example_builds(t, w, d):
    T = dihedral_example(DihedralExampleParams(t, w, d))
    assert (T.G.order, T.H.order, T.N.order) == (4 * t, 4 * w, 2 * d)


@pytest.mark.parametrize("t, w, d", GRID)
def test_every_example_passes_the_checks(t, w, d):
    T = dihedral_example(DihedralExampleParams(t, w, d))
    assert [r.property for r in StructureVerifier(T).verify() if r.status == "fail"] == []
    flags = {v.theorem: v.flag for v in theorem_suite(T)}
    assert "counterexample_to_theorem" not in flags.values()
    assert flags["action_beta_formula"] == "ok"
    # N = D_d is abelian exactly for d <= 2
    assert flags["two_sided_bracoid_theorem"] == ("ok" if d <= 2 else "not_applicable")


def test_example_333_orders(example_333):
    """Test #1: G = GT3, H = HW3, N = D3"""
    assert (example_333.G.order, example_333.H.order, example_333.N.order) == (12, 12, 6)
    assert example_333.N == dihedral(3)
    assert not is_abelian(example_333.G)


def test_example_action_rule(example_333):
    """x ⊙ μ = μ^2 and y ⊙ μ = μ^2η, read straight off the rule."""
    left = example_333.left
    x, y = 1, 3
    assert left.act(x, 1) == 2
    assert left.act(y, 1) == 3 + 2
    # μ ⊡ b = μη
    assert example_333.right.act(1, 6) == 4


def test_example_commutation_instance(example_333):
    """xy ⊙ μ = η, μ ⊡ a = μ^2 and (xy⊙μ)⊡a = μ^2η = xy⊙(μ⊡a)."""
    G = example_333.G
    xy, mu, eta, a = G.mul(1, 3), 1, 3, 1
    left, right = example_333.left, example_333.right
    assert left.act(xy, mu) == eta
    assert right.act(mu, a) == 2
    assert right.act(left.act(xy, mu), a) == 3 + 2
    assert left.act(xy, right.act(mu, a)) == 3 + 2


def test_divisibility_is_checked():
    with pytest.raises(DivisibilityViolated) as info:
        DihedralExampleParams(3, 4, 2)
    assert info.value.witness == ("3", "4", "2")


@pytest.mark.parametrize("params", [(0, 3, 3), (3, -1, 1), (3, 3, 0), (2.0, 2, 2)])
def test_parameters_must_be_positive_integers(params):
    with pytest.raises(InvalidParameter):
        DihedralExampleParams(*params)


@st.composite
def example_params(draw):
    t = draw(st.integers(min_value=7, max_value=10))
    w = draw(st.integers(min_value=1, max_value=10))
    d = draw(st.sampled_from([k for k in range(1, gcd(t, w) + 1) if gcd(t, w) % k == 0]))
    return DihedralExampleParams(t, w, d)


@given(example_params())
def test_verifier_passes_beyond_the_grid(params):
    reports = StructureVerifier(dihedral_example(params)).verify()
    assert reports
    assert [r.property for r in reports if r.status == "fail"] == []


def test_trivial_brace_as_two_sided_bracoid(c4, d3):
    for G in (c4, d3):
        T = brace_both_sided_bracoid(trivial_brace(G))
        assert T.G == T.H == T.N == G
        assert np.array_equal(T.left.action.table, G.table)
        assert np.array_equal(T.right.action.table, G.table)


def test_brace_both_sided_matches_left_bracoid(c4):
    B = trivial_brace(c4)
    T = brace_both_sided_bracoid(B)
    assert np.array_equal(T.left.alphas, brace_to_left_bracoid(B).alphas)


def test_only_two_sided_braces_give_two_sided_bracoids():
    from app.enumeration import enumerate_braces

    for N in (cyclic(4), dihedral(3)):
        for B in enumerate_braces(N).structures:
            if brace_is_two_sided(B):
                assert brace_both_sided_bracoid(B).N == N
            else:
                with pytest.raises(NotTwoSidedBrace):
                    brace_both_sided_bracoid(B)
