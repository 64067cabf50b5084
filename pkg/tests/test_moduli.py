import pytest

import oracles
from wild_mckay import errors
from wild_mckay.group import gamma_reduction, new_group
from wild_mckay.moduli import (
    count_extensions,
    enumerate_jumps,
    is_admissible,
    printed_dimension_formula,
    stratum_dimension,
    stratum_dimension_bruteforce,
    stratum_info,
    window,
)

S3 = new_group(3, 2, 2)


def small_groups(limit=60):
    for p in (2, 3, 5, 7):
        for m in range(1, limit // p + 1):
            if m % p:
                for a in range(1, p):
                    if pow(a, m, p) == 1:
                        yield new_group(p, m, a)


def test_s3_admissibility():
    assert is_admissible(S3, 1, 1)
    assert not is_admissible(S3, 1, 3)
    assert not is_admissible(S3, 1, 2)
    assert is_admissible(S3, 0, 2)
    assert not is_admissible(S3, 0, 3)
    assert not is_admissible(S3, 0, 0)


def test_s3_jumps():
    assert enumerate_jumps(S3, 1, 5) == [1, 5]
    assert enumerate_jumps(S3, 0, 2) == [1, 2]
    assert window(S3, 0) == [1, 2]
    assert window(S3, 1) == [1, 5]
    assert enumerate_jumps(new_group(5, 4, 2), 3, 2) == []


def test_admissibility_matches_definition():
    for G in small_groups():
        for gamma in range(G.m):
            for r in range(0, 3 * G.m * G.p):
                assert is_admissible(G, gamma, r) == oracles.brute_admissible(G.p, G.m, G.c, gamma, r)


@pytest.mark.parametrize("gamma, r, dim", [(0, 1, 1), (0, 2, 2), (1, 1, 1), (1, 5, 2), (1, 7, 3)])
def test_s3_dimensions(gamma, r, dim):
    assert stratum_dimension(S3, gamma, r) == dim
    assert stratum_dimension_bruteforce(S3, gamma, r) == dim


def test_first_jump_has_dimension_one():
    for G in small_groups():
        for gamma in range(G.m):
            first = enumerate_jumps(G, gamma, G.m * G.p)[0]
            assert stratum_dimension(G, gamma, first) == 1


def test_inadmissible_dimension_raises():
    with pytest.raises(errors.InadmissibleJump, match="r=3"):
        stratum_dimension(S3, 1, 3)
    with pytest.raises(errors.InadmissibleJump):
        stratum_dimension(S3, 1, 2)


@pytest.mark.parametrize(
    "gamma, r, expected",
    [(1, 1, (1, 2, 1)), (0, 1, (1, 1, 1)), (1, 5, (2, 2, 1))],
)
def test_stratum_info(gamma, r, expected):
    info = stratum_info(S3, gamma, r)
    assert (info.dim, info.mu_order, info.components) == expected


def test_count_s3():
    assert count_extensions(S3, 3, 1, 1) == 2
    assert count_extensions(S3, 3, 1, 5) == 6


def test_count_errors():
    with pytest.raises(errors.BadFieldSize):
        count_extensions(S3, 6, 1, 1)
    with pytest.raises(errors.BadFieldSize):
        count_extensions(S3, 1, 1, 1)
    with pytest.raises(errors.NotInvertible):
        count_extensions(S3, 3, 0, 1)
    with pytest.raises(errors.InadmissibleJump):
        count_extensions(S3, 3, 1, 2)


def first_jump(G, gamma):
    return enumerate_jumps(G, gamma, G.m * G.p)[0]


def test_count_vanishes_off_frobenius_fixed_components():
    # gamma = 1 is not fixed by multiplication by q = 2 mod 3, but is by q = 4
    G = new_group(2, 3, 1)
    assert count_extensions(G, 2, 1, first_jump(G, 1)) == 0
    assert count_extensions(G, 4, 1, first_jump(G, 1)) == 6 * 3  # |Z| = 6, q - 1 = 3
    H = new_group(3, 4, 2)
    assert count_extensions(H, 3, 1, first_jump(H, 1)) == 0
    assert count_extensions(H, 9, 1, first_jump(H, 1)) > 0
    G = new_group(5, 4, 2)
    for gamma in (1, 3):
        assert count_extensions(G, 5, gamma, first_jump(G, gamma)) == 1 * 4  # |Z| = n_dagger = 1


def test_count_against_point_count_oracle():
    """|Z(G)| times the F_q-points of the parameter space, for several groups."""
    cases = [(S3, 3, 50), (new_group(2, 3, 1), 4, 30), (new_group(5, 4, 2), 5, 40), (new_group(7, 3, 2), 7, 40)]
    for G, q, bound in cases:
        q_exp = {3: 1, 4: 2, 5: 1, 7: 1}[q]
        center = len(oracles.brute_center(G.p, G.m, G.a))
        for gamma in range(1, G.m):
            if gamma_reduction(G, gamma).g != 1 or (gamma * q - gamma) % G.m:
                continue
            for r in enumerate_jumps(G, gamma, bound):
                dim = stratum_dimension_bruteforce(G, gamma, r)
                mu = stratum_info(G, gamma, r).mu_order
                expected = center * oracles.quotient_point_count(G.p, q_exp, mu, dim)
                assert count_extensions(G, q, gamma, r) == expected, (G, q, gamma, r)


def test_count_monotone_and_divisible():
    for G in small_groups(40):
        q = G.p
        for gamma in range(1, G.m):
            if gamma_reduction(G, gamma).g != 1:
                continue
            counts = [count_extensions(G, q, gamma, r) for r in enumerate_jumps(G, gamma, 200)]
            assert all(c % (q - 1) == 0 for c in counts)
            assert counts == sorted(counts)


def test_printed_formula_agrees_for_small_p_and_gamma_zero():
    for G in small_groups():
        for gamma in range(G.m):
            m_gamma = gamma_reduction(G, gamma).m_gamma
            for r in enumerate_jumps(G, gamma, 300):
                if G.p <= 3 or gamma == 0:
                    assert stratum_dimension(G, gamma, r) == printed_dimension_formula(r, m_gamma, G.p)


def test_printed_formula_miscounts_in_general():
    G = new_group(5, 4, 2)
    # e = 1, 5, 9 satisfy the congruence and 5 is dropped
    assert stratum_dimension_bruteforce(G, 1, 9) == stratum_dimension(G, 1, 9) == 2
    assert printed_dimension_formula(9, 4, 5) == 3


def test_dimension_shift():
    for G in small_groups():
        for gamma in range(G.m):
            period = gamma_reduction(G, gamma).m_gamma * G.p
            for s in window(G, gamma):
                base = stratum_dimension(G, gamma, s)
                for n in range(6):
                    assert stratum_dimension(G, gamma, s + n * period) == base + n * (G.p - 1)


def test_gamma_zero_dimension():
    for G in small_groups():
        for r in enumerate_jumps(G, 0, 500):
            assert stratum_dimension(G, 0, r) == r - r // G.p
