"""
Test Suite for Finite Groups
============================
Table validation, the presented families, maps and the small-group catalog.
"""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from app.core.errors import InvalidParameter, NoIdentity, NotAssociative, NotLatinSquare, OrderCapExceeded
from app.core.groups import (
    GroupMap,
    automorphisms,
    compose,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    generating_sequence,
    identity_map,
    invert,
    is_abelian,
    is_homomorphism,
    is_isomorphic,
    make_group_from_table,
    opposite,
    parse_descriptor,
    presented_G,
    presented_H,
    small_groups,
    subgroup_closure,
)


def test_cyclic_basics(c3):
    """Test #1: C3 has the identity at 0 and g^1 of order 3"""
    assert c3.order == 3
    assert c3.identity == 0
    assert c3.element_names == ("g^0", "g^1", "g^2")
    assert c3.mul(1, 2) == 0
    assert c3.inv(1) == 2
    assert c3.index_of("g^2") == 2
    assert element_order(c3, 1) == 3


def test_dihedral_naming_and_layout():
    """Test #2: μ^r η^s sits at s*d + r"""
    D = dihedral(3)
    assert D.order == 6
    assert D.element_names == ("e", "μ", "μ^2", "η", "μη", "μ^2η")
    assert not is_abelian(D)
    assert element_order(D, 1) == 3
    assert element_order(D, 3) == 2
    # η μ η = μ^-1
    assert D.product_of(3, 1, 3) == 2


def test_dihedral_two_is_klein():
    assert is_abelian(dihedral(2))
    assert is_isomorphic(dihedral(2), direct_product(cyclic(2), cyclic(2)))


@given(st.integers(min_value=2, max_value=8))
def test_dihedral_orders(d):
    D = dihedral(d)
    assert D.order == 2 * d
    assert element_order(D, 1) == d
    assert all(element_order(D, d + r) == 2 for r in range(d))


@given(st.integers(min_value=1, max_value=6))
def test_presented_G_relations(t):
    """x^t = y^4 = 1 and y⁻¹xy = x⁻¹"""
    G = presented_G(t)
    x, y = 1 % t, t
    assert G.order == 4 * t
    assert G.power(x, t) == G.identity
    assert G.power(y, 4) == G.identity
    assert G.product_of(G.inv(y), x, y) == G.inv(x)


@given(st.integers(min_value=1, max_value=6))
def test_presented_H_relations(w):
    """a^2w = 1, a^w = b^2 and b⁻¹ab = a⁻¹"""
    H = presented_H(w)
    a, b = 1, 2 * w
    assert H.order == 4 * w
    assert H.power(a, 2 * w) == H.identity
    assert H.power(a, w) == H.power(b, 2)
    assert H.product_of(H.inv(b), a, b) == H.inv(a)


def test_presented_H_two_is_quaternion():
    """Test #3: HW2 has a single involution, like Q8"""
    Q = presented_H(2)
    assert Q.order == 8
    assert not is_abelian(Q)
    involutions = [g for g in range(Q.order) if element_order(Q, g) == 2]
    assert involutions == [Q.power(1, 2)]
    assert not is_isomorphic(Q, dihedral(4))


def test_presented_H_one_is_cyclic():
    assert is_isomorphic(presented_H(1), cyclic(4))


def test_rejects_non_latin_table():
    with pytest.raises(NotLatinSquare):
        make_group_from_table(["a", "b"], [[0, 1], [0, 1]])


def test_rejects_missing_identity():
    with pytest.raises(NoIdentity):
        make_group_from_table(["a", "b", "c"], [[0, 2, 1], [2, 1, 0], [1, 0, 2]])


def test_rejects_non_associative_loop():
    """Test #4: a Latin square with identity and inverses that is not a group"""
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative) as info:
        make_group_from_table(list("abcde"), loop)
    assert len(info.value.witness) == 3


@pytest.mark.parametrize("table", [
    [[0, 1], [1, 2]],
    [[0, 1]],
    [[0, 1], [1]],
    [[0.0, 1.0], [1.0, 0.0]],
])
def test_rejects_malformed_tables(table):
    with pytest.raises(InvalidParameter):
        make_group_from_table(["a", "b"], table)


def test_rejects_non_positive_parameters():
    for build in (cyclic, dihedral, presented_G, presented_H):
        with pytest.raises(InvalidParameter):
            build(0)


def test_identity_need_not_be_first():
    G = make_group_from_table(["a", "e"], [[1, 0], [0, 1]])
    assert G.identity == 1
    assert G.inv(0) == 0


def test_direct_product_naming(c2, c3):
    P = direct_product(c2, c3)
    assert P.name == "C2 x C3"
    assert P.name_of(P.identity) == "(g^0,g^0)"
    assert is_isomorphic(P, cyclic(6))


def test_opposite_is_transpose(d3):
    op = opposite(d3)
    assert np.array_equal(op.table, d3.table.T)
    assert op.mul(1, 3) == d3.mul(3, 1)
    assert is_isomorphic(op, d3)


def test_automorphism_counts(c3, c4, klein, d3):
    """Test #5: |Aut| for the small groups"""
    assert len(automorphisms(cyclic(1))) == 1
    assert len(automorphisms(c3)) == 2
    assert len(automorphisms(c4)) == 2
    assert len(automorphisms(klein)) == 6
    assert len(automorphisms(d3)) == 6
    assert len(automorphisms(dihedral(4))) == 8
    assert len(automorphisms(presented_H(2))) == 24


def test_automorphisms_are_homomorphisms(d3):
    for phi in automorphisms(d3):
        assert phi.is_bijective
        assert is_homomorphism(phi)


def test_compose_and_invert(d3):
    autos = automorphisms(d3)
    for phi in autos:
        assert compose(invert(phi), phi) == identity_map(d3)
        assert compose(phi, identity_map(d3)) == phi


def test_group_map_length_checked(c3):
    with pytest.raises(InvalidParameter):
        GroupMap(c3, c3, (0, 1))


def test_automorphism_cap(c3):
    with pytest.raises(OrderCapExceeded):
        automorphisms(cyclic(5), cap=3)


def test_generating_sequence_spans():
    assert generating_sequence(cyclic(1)) == []
    for G in small_groups(8):
        generators = generating_sequence(G)
        assert len(subgroup_closure(G, generators)) == G.order


def test_small_groups_catalog():
    counts = {n: len(small_groups(n)) for n in range(1, 9)}
    assert counts == {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5}
    eights = small_groups(8)
    for i, A in enumerate(eights):
        for B in eights[i + 1:]:
            assert not is_isomorphic(A, B)
    with pytest.raises(OrderCapExceeded):
        small_groups(9)


@pytest.mark.parametrize("spec, order, abelian", [
    ("C5", 5, True),
    ("D3", 6, False),
    ("GT2", 8, True),
    ("GT3", 12, False),
    ("HW1", 4, True),
    ("C2 x C3", 6, True),
    ("C2 × C2 × C2", 8, True),
])
def test_parse_descriptor(spec, order, abelian):
    G = parse_descriptor(spec)
    assert G.order == order
    assert is_abelian(G) == abelian


@pytest.mark.parametrize("spec", ["", "Z5", "C", "D0", "C2 x"])
def test_parse_descriptor_rejects(spec):
    with pytest.raises(InvalidParameter):
        parse_descriptor(spec)


def test_index_of_unknown_element(c3):
    with pytest.raises(KeyError):
        c3.index_of("μ")
