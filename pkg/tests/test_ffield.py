import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wild_mckay.ffield import GF, get_field, identity, matmul, matpow, smallest_irreducible

SMALL = [(2, 1), (2, 3), (2, 4), (3, 1), (3, 2), (5, 2), (7, 1), (2, 8)]


def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def brute_reducible(f, p):
    """Some product of two monic polynomials of positive degree equals f."""
    e = len(f) - 1
    for k in range(1, e // 2 + 1):
        for lo in itertools.product(range(p), repeat=k):
            for hi in itertools.product(range(p), repeat=e - k):
                if poly_mul(list(lo) + [1], list(hi) + [1], p) == list(f):
                    return True
    return False


@pytest.mark.parametrize("p, e", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_modulus_is_irreducible_and_smallest(p, e):
    f = smallest_irreducible(p, e)
    assert f[-1] == 1 and len(f) == e + 1
    assert not brute_reducible(f, p)
    # every monic polynomial of smaller encoding is reducible
    for code in range(p**e):
        coeffs = [(code // p**i) % p for i in range(e)] + [1]
        if tuple(coeffs) == tuple(f):
            break
        assert brute_reducible(coeffs, p)


@pytest.mark.parametrize("p, e", SMALL)
def test_generator_has_full_order(p, e):
    F = get_field(p, e)
    g = F.generator()
    seen, x = set(), F.one
    for _ in range(F.size - 1):
        seen.add(x)
        x = F.mul(x, g)
    assert len(seen) == F.size - 1 and x == F.one


@pytest.mark.parametrize("p, e", [(2, 3), (3, 2), (5, 1)])
def test_field_axioms_exhaustive(p, e):
    F = get_field(p, e)
    els = list(F.elements())
    for x in els:
        assert F.add(x, F.neg(x)) == F.zero
        if x:
            assert F.mul(x, F.inv(x)) == F.one
        for y in els:
            assert F.mul(x, y) == F.mul(y, x)
            assert F.sub(F.add(x, y), y) == x


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_distributive_and_fast_paths(pe, x, y, z):
    F = get_field(*pe)
    x, y, z = (v % F.size for v in (x, y, z))
    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert F.mul(x, y) == F._slow_mul(x, y)
    assert F.pow(x, 7) == F._slow_pow(x, 7)


def test_untabled_field_agrees():
    # a fresh instance above the table threshold uses the slow paths only
    F = GF(2, 17)
    assert F.size == 1 << 17
    g = F.generator()
    assert F.pow(g, F.size - 1) == F.one
    assert F.mul(F.inv(g), g) == F.one


def test_matrix_helpers():
    F = get_field(3, 1)
    J = [[1, 1], [0, 1]]
    assert matpow(F, J, 3) == identity(F, 2)
    assert matmul(F, J, identity(F, 2)) == J
    assert matpow(F, J, 0) == identity(F, 2)
