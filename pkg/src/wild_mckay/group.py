"""The groups G = Z/p x| Z/m and their derived data.

G is generated by sigma (order p) and tau (order m) with
tau sigma tau^-1 = sigma^a.  Roots of unity are realised through the smallest
primitive root g modulo p: zeta_{p-1} = g and zeta_n = g^((p-1)/n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BadAction, NotCoprime, NotPrime, WildMcKayError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def multiplicative_order(a: int, modulus: int) -> int:
    """Order of ``a`` in (Z/modulus)^x.  ``a`` must be a unit."""
    if modulus == 1:
        return 1
    a %= modulus
    if math.gcd(a, modulus) != 1:
        raise ValueError(f"{a} is not a unit modulo {modulus}")
    k, x = 1, a
    while x != 1:
        x = x * a % modulus
        k += 1
    return k


@lru_cache(maxsize=None)
def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise AssertionError(f"no primitive root modulo {p}")


def _discrete_log(base: int, target: int, p: int, order: int) -> int:
    x = 1
    for u in range(order):
        if x == target % p:
            return u
        x = x * base % p
    raise AssertionError(f"{target} is not a power of {base} mod {p}")


@dataclass(frozen=True)
class GammaData:
    """Reduction of a component index gamma to the subgroup Z/m_gamma."""

    gamma: int
    g: int
    m_gamma: int
    gamma_dagger: int
    rho: int


@dataclass(frozen=True)
class MetacyclicGroup:
    p: int
    m: int
    a: int
    n: int
    n_dagger: int
    c: int
    n1: int
    h_prime: int
    h: Fraction

    @property
    def order(self) -> int:
        return self.p * self.m

    @property
    def is_abelian(self) -> bool:
        return self.a == 1

    def gamma_data(self, gamma: int) -> GammaData:
        return gamma_reduction(self, gamma)

    def describe(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "a": self.a,
            "n": self.n,
            "n_dagger": self.n_dagger,
            "n1": self.n1,
            "c": self.c,
            "h_prime": self.h_prime,
            "h": str(self.h),
            "center_order": center_order(self),
        }


def new_group(p: int, m: int, a: int) -> MetacyclicGroup:
    """Validate ``(p, m, a)`` and compute the derived invariants."""
    if not is_prime(p):
        raise NotPrime(p)
    if m < 1:
        raise WildMcKayError(f"tame order m={m} must be positive")
    if math.gcd(m, p) != 1:
        raise NotCoprime(m, p)
    if not 1 <= a <= p - 1:
        raise BadAction(a, p, m, f"a must lie in {{1, ..., {p - 1}}}")
    if pow(a, m, p) != 1:
        raise BadAction(a, p, m, f"a^m = {pow(a, m, p)} != 1 mod p")

    n = multiplicative_order(a, p)
    g = smallest_primitive_root(p)
    h_prime = _discrete_log(g, a, p, p - 1) if p > 2 else 0
    if h_prime == 0:
        h_prime = p - 1
    if a == 1:
        c = 0
    else:
        zeta_n = pow(g, (p - 1) // n, p)
        u = _discrete_log(zeta_n, a, p, n)
        c = (m // n) * u % m
    return MetacyclicGroup(
        p=p,
        m=m,
        a=a,
        n=n,
        n_dagger=m // n,
        c=c,
        n1=(p - 1) // n,
        h_prime=h_prime,
        h=Fraction(h_prime, n),
    )


def root_of_unity_exponent(G: MetacyclicGroup) -> int:
    return G.c


@lru_cache(maxsize=4096)
def gamma_reduction(G: MetacyclicGroup, gamma: int) -> GammaData:
    """Reduce gamma to (gcd, m_gamma, gamma_dagger, rho).

    ``rho`` is the residue mod m_gamma that every admissible jump for gamma
    must satisfy.  The reduced action exponent is taken to be c mod m_gamma.
    """
    gamma %= G.m
    g = math.gcd(gamma, G.m)
    m_gamma = G.m // g
    gamma_dagger = gamma // g
    if m_gamma == 1:
        return GammaData(gamma, g, 1, gamma_dagger, 0)
    rho = pow(gamma_dagger, -1, m_gamma) * (G.c % m_gamma) % m_gamma
    return GammaData(gamma, g, m_gamma, gamma_dagger, rho)


def center_order(G: MetacyclicGroup) -> int:
    return G.m * G.p if G.a == 1 else G.n_dagger


def tame_class_exponents(G: MetacyclicGroup) -> list[int]:
    """Exponents k of tau^k, one per tame conjugacy class."""
    return list(range(G.m))
