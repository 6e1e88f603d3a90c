"""
Test Suite for Group Actions
============================
"""

import pytest

from app.core.actions import (
    LeftActionTable,
    act_left,
    act_right,
    is_free,
    is_regular,
    is_transitive,
    make_left_action,
    make_right_action,
    orbit,
    orbits,
    permutation_rows,
)
from app.core.errors import CompatibilityViolated, IdentityLawViolated, ShapeError
from app.core.groups import cyclic


def test_left_translation_is_regular(c3):
    """Test #1: G acting on itself by left multiplication"""
    A = make_left_action(c3, c3, c3.table)
    assert is_transitive(A)
    assert is_free(A)
    assert is_regular(A)
    assert orbits(A) == [[0, 1, 2]]
    assert act_left(A, 1, 2) == 0


def test_trivial_action_is_not_transitive(c2):
    A = make_left_action(c2, c2, [[0, 1], [0, 1]])
    assert not is_transitive(A)
    assert not is_free(A)
    assert orbits(A) == [[0], [1]]
    assert orbit(A, 1) == frozenset({1})


def test_identity_law(c2):
    with pytest.raises(IdentityLawViolated) as info:
        make_left_action(c2, c2, [[1, 0], [0, 1]])
    assert info.value.witness == ("g^0", "g^0")


def test_compatibility(c3, c2):
    """Test #2: a generator acting as an involution breaks (gh)⊙η = g⊙(h⊙η)"""
    with pytest.raises(CompatibilityViolated) as info:
        make_left_action(c3, c2, [[0, 1], [1, 0], [1, 0]])
    assert len(info.value.witness) == 3


@pytest.mark.parametrize("table", [
    [[0, 1, 2]],
    [[0, 1, 2], [1, 2, 0], [2, 0]],
    [[0, 1, 2], [1, 2, 3], [2, 0, 1]],
    [[0, 1, 2], [1, 2, -1], [2, 0, 1]],
])
def test_shape_errors(c3, table):
    with pytest.raises(ShapeError):
        make_left_action(c3, c3, table)


def test_out_of_range_message_names_the_coordinate(c3):
    with pytest.raises(ShapeError) as info:
        LeftActionTable.unchecked(c3, c3, [[0, 1, 2], [1, 2, 7], [2, 0, 1]])
    assert "[1][2]" in str(info.value)


def test_unchecked_skips_axioms(c2):
    A = LeftActionTable.unchecked(c2, c2, [[1, 0], [1, 0]])
    assert A.act(0, 0) == 1


def test_right_translation(c3):
    """η ⊡ h = η·h"""
    A = make_right_action(c3, c3, c3.table)
    assert is_regular(A)
    assert act_right(A, 1, 1) == 2
    assert permutation_rows(A) == ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def test_right_compatibility_needs_opposite_order():
    """A left action of a non-abelian group read as a right action fails."""
    from app.core.groups import dihedral

    D = dihedral(3)
    with pytest.raises(CompatibilityViolated):
        make_right_action(D, D, D.table.T)


def test_permutation_rows_left(c3):
    A = make_left_action(c3, c3, c3.table)
    assert permutation_rows(A)[1] == (1, 2, 0)


def test_out_of_range_lookups(c2):
    A = make_left_action(c2, c2, c2.table)
    with pytest.raises(IndexError):
        act_left(A, 2, 0)
    B = make_right_action(c2, c2, c2.table)
    with pytest.raises(IndexError):
        act_right(B, 0, -1)


def test_action_equality_by_table():
    G = cyclic(2)
    assert make_left_action(G, G, G.table) == make_left_action(cyclic(2), cyclic(2), G.table)
    assert make_left_action(G, G, G.table) != make_left_action(G, G, [[0, 1], [0, 1]])
