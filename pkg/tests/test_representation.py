from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wild_mckay import errors
from wild_mckay.group import multiplicative_order, new_group
from wild_mckay.representation import (
    Indecomposable,
    Representation,
    age,
    check_relations,
    construct_matrices,
    d_invariant,
    field_for,
    tau_eigenvalue_exponents,
)

S3 = new_group(3, 2, 2)
P2 = Representation.from_pairs([(3, 1)])
P1P1 = Representation.from_pairs([(3, 0), (3, 0)])


def test_eigenvalue_exponents():
    assert tau_eigenvalue_exponents(S3, Indecomposable(3, 1)) == [1, 0, 1]
    assert tau_eigenvalue_exponents(S3, Indecomposable(3, 0)) == [0, 1, 0]
    assert tau_eigenvalue_exponents(new_group(5, 4, 2), Indecomposable(1, 0)) == [0]


def test_ages():
    assert age(S3, P2, 1) == 1
    assert age(S3, P1P1, 1) == 1
    assert age(S3, P2, 0) == 0
    # the single P1 summand alone has age 1/2
    assert age(S3, Indecomposable(3, 0), 1) == Fraction(1, 2)


def test_d_invariant():
    assert d_invariant(P2) == 3
    assert d_invariant(P1P1) == 6
    assert d_invariant(Representation.from_pairs([(1, 1)])) == 0


@pytest.mark.parametrize(
    "pairs",
    [[], [(0, 0)], [(3, -1)], [(1, 2, 3)], [(4, 0)], [(1, 2)]],
)
def test_bad_representations(pairs):
    with pytest.raises(errors.BadRepresentation):
        Representation.from_pairs(pairs, S3)


def test_unchecked_construction_defers_group_bounds():
    V = Representation.from_pairs([(5, 1)])
    with pytest.raises(errors.BadRepresentation, match="exceeds p=3"):
        V.check(S3)


pairs_strategy = st.lists(st.tuples(st.integers(1, 5), st.integers(0, 3)), min_size=1, max_size=4)


@given(pairs_strategy, pairs_strategy)
def test_d_invariant_additive(xs, ys):
    V, W = Representation.from_pairs(xs), Representation.from_pairs(ys)
    assert d_invariant(V + W) == d_invariant(V) + d_invariant(W)
    assert (V + W).dim == V.dim + W.dim


@given(pairs_strategy, st.integers(0, 3))
def test_age_bounds(pairs, k):
    G = new_group(5, 4, 2)
    V = Representation.from_pairs(pairs, G)
    a = age(G, V, k)
    assert 0 <= a <= Fraction(V.dim * (G.m - 1), G.m)
    assert age(G, V, 0) == 0


def test_trivial_matrices():
    M = construct_matrices(S3, Indecomposable(1, 0))
    assert M.sigma == [[1]] and M.tau == [[1]]


@pytest.mark.parametrize("group, V", [(S3, Indecomposable(3, 1)), (new_group(7, 3, 2), Indecomposable(2, 0))])
def test_explicit_matrices(group, V):
    M = construct_matrices(group, V)
    assert all(check_relations(group, M).values())
    F = M.field
    assert F.size == group.p  # e = 1 in both cases
    diag = [M.tau[i][i] for i in range(V.d)]
    assert diag == [F.pow(M.zeta_m, e) for e in tau_eigenvalue_exponents(group, V)]


def test_seven_three_two_diagonal():
    G = new_group(7, 3, 2)
    M = construct_matrices(G, Indecomposable(2, 0))
    F = M.field
    assert [M.tau[0][0], M.tau[1][1]] == [F.one, F.inv(M.zeta_m)]
    assert F.pow(M.zeta_m, G.c) == F.from_int(G.a)


def test_field_degree_is_order_of_p():
    G = new_group(2, 7, 1)
    assert field_for(G).e == multiplicative_order(2, 7) == 3
    M = construct_matrices(G, Indecomposable(2, 3))
    assert all(check_relations(G, M).values())
