"""Strata Delta_{G,gamma}(r) of wild G-torsors and local extension counts.

A stratum is indexed by a component gamma in Z/m and a ramification jump r.
Admissible jumps for gamma are the r >= 1 with p not dividing r and
r = rho_gamma (mod m_gamma); gamma = 0 imposes only p not dividing r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadFieldSize, InadmissibleJump, NotInvertible
from .group import MetacyclicGroup, center_order, gamma_reduction


@dataclass(frozen=True)
class StratumIndex:
    gamma: int
    r: int


@dataclass(frozen=True)
class StratumInfo:
    """Parameter space (G_m x A^(dim-1)) / mu_{mu_order}, always irreducible."""

    dim: int
    mu_order: int
    components: int = 1


def is_admissible(G: MetacyclicGroup, gamma: int, r: int) -> bool:
    if r < 1 or r % G.p == 0:
        return False
    gd = gamma_reduction(G, gamma)
    return r % gd.m_gamma == gd.rho


def require_admissible(G: MetacyclicGroup, gamma: int, r: int) -> None:
    if is_admissible(G, gamma, r):
        return
    if r < 1:
        reason = "jumps are positive"
    elif r % G.p == 0:
        reason = f"p={G.p} divides r"
    else:
        gd = gamma_reduction(G, gamma)
        reason = f"r must be {gd.rho} mod {gd.m_gamma}"
    raise InadmissibleJump(gamma, r, reason)


def enumerate_jumps(G: MetacyclicGroup, gamma: int, bound: int) -> list[int]:
    gd = gamma_reduction(G, gamma)
    start = gd.rho if gd.rho > 0 else gd.m_gamma
    return [r for r in range(start, bound + 1, gd.m_gamma) if r % G.p]


def window(G: MetacyclicGroup, gamma: int, multiplier: int = 1) -> list[int]:
    """Admissible jumps in [1, multiplier * m_gamma * p - 1]."""
    gd = gamma_reduction(G, gamma)
    return enumerate_jumps(G, gamma, multiplier * gd.m_gamma * G.p - 1)


def _count_prime_to_p(r: int, modulus: int, p: int) -> int:
    """#{1 <= e <= r : e = r (mod modulus), p does not divide e}.

    The e form a progression start, start + modulus, ... with T terms; its
    multiples of p are the terms with index t = t0 (mod p).
    """
    T = (r - 1) // modulus + 1
    start = (r - 1) % modulus + 1
    t0 = -start * pow(modulus, -1, p) % p
    return T - (T - 1 - t0 + p) // p


def printed_dimension_formula(r: int, modulus: int, p: int) -> int:
    """floor((r-1)/M) + 1 - floor((floor((r-1)/M) + 1)/p), the closed form as usually stated.

    It assumes the multiples of p sit at indices p-1, 2p-1, ... of the
    progression, which holds for modulus 1 and for p <= 3 but not in general;
    e.g. p = 5, M = 4, r = 9 gives 3 while only e = 1, 9 qualify.
    """
    t = (r - 1) // modulus + 1
    return t - t // p


def stratum_dimension(G: MetacyclicGroup, gamma: int, r: int) -> int:
    """dim Delta_{G,gamma}(r) = #{admissible e <= r}, the free Laurent coefficients."""
    require_admissible(G, gamma, r)
    return _count_prime_to_p(r, gamma_reduction(G, gamma).m_gamma, G.p)


def stratum_dimension_bruteforce(G: MetacyclicGroup, gamma: int, r: int) -> int:
    """#{e admissible for gamma : 1 <= e <= r}, counted one e at a time."""
    require_admissible(G, gamma, r)
    return sum(1 for e in range(1, r + 1) if is_admissible(G, gamma, e))


def stratum_info(G: MetacyclicGroup, gamma: int, r: int) -> StratumInfo:
    dim = stratum_dimension(G, gamma, r)
    m_gamma = gamma_reduction(G, gamma).m_gamma
    return StratumInfo(dim=dim, mu_order=m_gamma // math.gcd(r, m_gamma))


def _power_of(q: int, p: int) -> bool:
    if q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def count_extensions(G: MetacyclicGroup, q: int, gamma: int, r: int) -> int:
    """Number of G-extensions of F_q((t)) with component gamma and jump r."""
    if not _power_of(q, G.p):
        raise BadFieldSize(q, G.p)
    if math.gcd(gamma % G.m, G.m) != 1:
        raise NotInvertible(gamma, G.m)
    require_admissible(G, gamma, r)
    if (gamma * q - gamma) % G.m:
        return 0
    return center_order(G) * (q - 1) * q ** (stratum_dimension(G, gamma, r) - 1)
