from fractions import Fraction

import pytest

import oracles
from wild_mckay import errors
from wild_mckay.group import gamma_reduction, new_group
from wild_mckay.moduli import enumerate_jumps, window
from wild_mckay.representation import Indecomposable, Representation
from wild_mckay.vfunction import index_set, v_indecomposable, v_rep, v_tame, valuation_data

S3 = new_group(3, 2, 2)
P2 = Representation.from_pairs([(3, 1)])
P1P1 = Representation.from_pairs([(3, 0), (3, 0)])


def grid_cases(max_summands=2):
    """(G, V) over p in {2, 3, 5}, m <= 8, a few representations each."""
    for p in (2, 3, 5):
        for m in range(1, 9):
            if m % p == 0:
                continue
            for a in range(1, p):
                if pow(a, m, p) != 1:
                    continue
                G = new_group(p, m, a)
                reps = [[(p, 0)], [(p, m - 1)], [(p, 0), (max(1, p - 1), m // 2)], [(2, 1 % m), (p, 0)]]
                for pairs in reps[: 2 + max_summands]:
                    yield G, Representation.from_pairs(pairs, G)


def test_index_sets():
    assert index_set(S3, 1, 1, Indecomposable(3, 1)) == [(1, 0), (0, 1), (1, 2)]
    assert index_set(S3, 1, 1, Indecomposable(3, 0)) == [(0, 0), (1, 1), (0, 2)]
    assert index_set(new_group(5, 4, 2), 0, 7, Indecomposable(3, 2)) == [(0, 0), (0, 1), (0, 2)]


def test_index_set_size_and_congruence():
    for G, V in grid_cases():
        for gamma in range(G.m):
            gd = gamma_reduction(G, gamma)
            for r in window(G, gamma):
                for summand in V.summands:
                    pairs = index_set(G, gamma, r, summand)
                    assert [j for _, j in pairs] == list(range(summand.d))
                    for i, j in pairs:
                        assert 0 <= i < gd.m_gamma
                        assert (gd.gamma_dagger * (i - r * j) - summand.s) % gd.m_gamma == 0


def test_valuation_data():
    val = valuation_data(S3, 1, 5)
    assert (val.v_alpha, val.v_beta, val.ram_index) == (3, -5, 6)
    assert val.exponent(1, 2) == 2  # ceil((-3 + 10) / 6)


@pytest.mark.parametrize(
    "V, gamma, r, v",
    [(P2, 0, 1, 2), (P2, 0, 2, 3), (P2, 1, 1, 2), (P2, 1, 5, 4),
     (P1P1, 1, 1, 3), (P1P1, 0, 2, 6), (P1P1, 0, 1, 4), (P1P1, 1, 5, 7)],
)
def test_s3_values(V, gamma, r, v):
    assert v_rep(S3, V, gamma, r) == v


@pytest.mark.parametrize("name, V", [("P2", P2), ("P1P1", P1P1)])
def test_s3_against_displayed_formulas(name, V):
    for gamma in (0, 1):
        for r in enumerate_jumps(S3, gamma, 300):
            assert v_rep(S3, V, gamma, r) == oracles.s3_v(name, gamma, r)


def test_additivity():
    for G, V in grid_cases():
        for gamma in range(G.m):
            for r in window(G, gamma):
                assert v_rep(G, V, gamma, r) == sum(v_indecomposable(G, x, gamma, r) for x in V.summands)


def test_single_summand_equals_indecomposable():
    assert v_rep(S3, Indecomposable(3, 1), 1, 5) == v_indecomposable(S3, Indecomposable(3, 1), 1, 5)


def test_gamma_zero_p_cyclic_form():
    for G, V in grid_cases():
        for r in enumerate_jumps(G, 0, 200):
            assert v_rep(G, V, 0, r) == oracles.p_cyclic_v(V.pairs(), G.p, r)


def test_change_of_variables():
    for G, V in grid_cases():
        for gamma in range(G.m):
            period = gamma_reduction(G, gamma).m_gamma * G.p
            for r in enumerate_jumps(G, gamma, 100):
                base = v_rep(G, V, gamma, r)
                for n in range(1, 6):
                    assert v_rep(G, V, gamma, r + n * period) == base + n * V.D_V


def test_values_in_lattice():
    for G, V in grid_cases():
        for gamma in range(G.m):
            m_gamma = gamma_reduction(G, gamma).m_gamma
            for r in window(G, gamma, 3):
                v = v_rep(G, V, gamma, r)
                assert v >= 0
                assert m_gamma % v.denominator == 0


def test_positive_when_some_block_is_wild():
    for G, V in grid_cases():
        if max(x.d for x in V.summands) >= 2:
            assert all(v_rep(G, V, gamma, r) > 0 for gamma in range(G.m) for r in window(G, gamma))


def test_tame_values():
    assert v_tame(S3, P2, 1) == 1
    assert v_tame(S3, P1P1, 1) == 1
    assert v_tame(S3, P2, 0) == 0
    assert v_tame(new_group(5, 4, 1), Representation.from_pairs([(1, 1)]), 1) == Fraction(1, 4)


def test_inadmissible():
    with pytest.raises(errors.InadmissibleJump):
        v_rep(S3, P2, 1, 2)
    with pytest.raises(errors.InadmissibleJump):
        index_set(S3, 0, 3, Indecomposable(3, 1))
