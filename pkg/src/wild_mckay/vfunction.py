"""v-functions of representations on wild strata and tame classes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from .group import MetacyclicGroup, gamma_reduction
from .moduli import require_admissible
from .representation import Indecomposable, Representation, age, as_representation


@dataclass(frozen=True)
class ValuationData:
    """Valuations in L of alpha and beta and the ramification index e(L/K)."""

    v_alpha: int
    v_beta: int
    ram_index: int

    def exponent(self, i: int, j: int) -> int:
        """ceil((-i v(alpha) - j v(beta)) / e), the t-adic shift of alpha^i beta^j."""
        return -((i * self.v_alpha + j * self.v_beta) // self.ram_index)


def valuation_data(G: MetacyclicGroup, gamma: int, r: int) -> ValuationData:
    m_gamma = gamma_reduction(G, gamma).m_gamma
    return ValuationData(v_alpha=G.p, v_beta=-r, ram_index=m_gamma * G.p)


def index_set(G: MetacyclicGroup, gamma: int, r: int, V: Indecomposable) -> list[tuple[int, int]]:
    """Pairs (i, j), j < d, with i - r j = s / gamma_dagger (mod m_gamma).

    For each j exactly one i in [0, m_gamma) qualifies; the pairs are
    returned ordered by j.
    """
    require_admissible(G, gamma, r)
    gd = gamma_reduction(G, gamma)
    if gd.m_gamma == 1:
        return [(0, j) for j in range(V.d)]
    offset = (V.s % gd.m_gamma) * pow(gd.gamma_dagger, -1, gd.m_gamma)
    return [((offset + r * j) % gd.m_gamma, j) for j in range(V.d)]


@lru_cache(maxsize=1 << 16)
def v_indecomposable(G: MetacyclicGroup, V: Indecomposable, gamma: int, r: int) -> Fraction:
    pairs = index_set(G, gamma, r, V)
    m_gamma = gamma_reduction(G, gamma).m_gamma
    val = valuation_data(G, gamma, r)
    tame = Fraction(sum(i for i, _ in pairs), m_gamma)
    return tame + sum(val.exponent(i, j) for i, j in pairs)


def v_rep(G: MetacyclicGroup, V: Representation | Indecomposable, gamma: int, r: int) -> Fraction:
    require_admissible(G, gamma, r)
    return sum(
        (v_indecomposable(G, summand, gamma, r) for summand in as_representation(V).summands),
        Fraction(0),
    )


def v_tame(G: MetacyclicGroup, V: Representation | Indecomposable, k: int) -> Fraction:
    """Value on the tame class of tau^k, which is the age of tau^k."""
    return age(G, V, k)
