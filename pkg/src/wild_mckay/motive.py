"""Stringy motives M_str(V/G) and stringy Euler numbers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Union

from .errors import Divergent
from .group import MetacyclicGroup, tame_class_exponents
from .moduli import stratum_dimension, window
from .polynomial import L, PuiseuxPoly, RationalExpr, limit_at_one, monomial
from .representation import Representation, age
from .vfunction import v_rep


@dataclass(frozen=True)
class MotiveResult:
    kind: Literal["polynomial", "rational", "divergent"]
    value: Union[PuiseuxPoly, RationalExpr, None]

    @property
    def converges(self) -> bool:
        return self.kind != "divergent"

    def simplified(self) -> PuiseuxPoly | RationalExpr | None:
        if isinstance(self.value, RationalExpr):
            s = self.value.simplify()
            return s.num if s.den == 1 else s
        return self.value

    def __str__(self) -> str:
        if self.kind == "divergent":
            return "divergent"
        return str(self.simplified())


def _sum_of_monomials(exponents: Iterable[Fraction | int]) -> PuiseuxPoly:
    return PuiseuxPoly(Counter(exponents))


def tame_contribution(G: MetacyclicGroup, V: Representation) -> PuiseuxPoly:
    d = V.dim
    return _sum_of_monomials(d - age(G, V, k) for k in tame_class_exponents(G))


def window_exponents(G: MetacyclicGroup, V: Representation) -> list[tuple[int, int, Fraction]]:
    """(gamma, s, dim - v) for every admissible s in [1, m_gamma p - 1]."""
    out = []
    for gamma in range(G.m):
        for s in window(G, gamma):
            out.append((gamma, s, stratum_dimension(G, gamma, s) - v_rep(G, V, gamma, s)))
    return out


def wild_window_sum(G: MetacyclicGroup, V: Representation) -> PuiseuxPoly:
    return _sum_of_monomials(e for _, _, e in window_exponents(G, V))


def stringy_motive(G: MetacyclicGroup, V: Representation) -> MotiveResult:
    """M_str(V/G) as a polynomial (D_V = p) or rational expression (D_V > p).

    The wild strata contribute a geometric series in L^(p-1-D_V), so the
    integral only converges for D_V >= p; below that the result is divergent.
    """
    V.check(G)
    D = V.D_V
    if D < G.p:
        return MotiveResult("divergent", None)
    d = V.dim
    tame = tame_contribution(G, V)
    wild = wild_window_sum(G, V)
    if D == G.p:
        return MotiveResult("polynomial", tame + monomial(d) * wild)
    ratio = 1 - monomial(G.p - 1 - D)
    prefactor = (L - 1) * monomial(d - 1)
    return MotiveResult("rational", RationalExpr(tame * ratio + prefactor * wild, ratio))


def euler_number(G: MetacyclicGroup, V: Representation) -> Fraction:
    """Closed form m D_V / (D_V - p + 1)."""
    D = V.D_V
    if D < G.p:
        raise Divergent(D, G.p)
    return Fraction(G.m * D, D - G.p + 1)


def euler_from_motive(G: MetacyclicGroup, V: Representation) -> Fraction:
    """L -> 1 limit of :func:`stringy_motive`."""
    result = stringy_motive(G, V)
    if not result.converges:
        raise Divergent(V.D_V, G.p)
    return limit_at_one(result.value)

