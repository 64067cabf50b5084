"""a- and b-invariants of v-functions and canonical/terminal tests.

The wild strata are infinite in number, but along a residue class
r = s + n m_gamma p the pair (1 + dim, v) grows by (p - 1, D_V) per step.
The ratio (A + n B) / (C + n D) is monotone in n with limit B / D, so on each
class the supremum is either the n = 0 value or the limit (p - 1) / D_V,
approached but never reached unless the class is constant.  Scanning the
first window and comparing with that limit is therefore exact.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Union

from .errors import Divergent, ZeroV
from .group import MetacyclicGroup
from .moduli import stratum_dimension, window
from .representation import Representation, age
from .vfunction import v_rep

Classification = Literal["terminal", "canonical_not_terminal", "not_canonical"]
BValue = Union[int, Literal["infinite", "undefined"]]


@dataclass(frozen=True)
class Locus:
    """A tame class (gamma is None, index = k) or a wild stratum (gamma, r)."""

    kind: Literal["tame", "wild"]
    index: int
    gamma: int | None
    v: Fraction
    dim: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(1 + self.dim) / self.v

    def label(self) -> str:
        if self.kind == "tame":
            return f"tame k={self.index}"
        return f"stratum gamma={self.gamma} r={self.index}"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "v": str(self.v), "dim": self.dim}
        if self.kind == "tame":
            out["k"] = self.index
        else:
            out["gamma"] = self.gamma
            out["r"] = self.index
        return out


@dataclass(frozen=True)
class InvariantReport:
    a_value: Fraction
    a_attained: bool
    b_value: BValue
    attaining: list[Locus]
    classification: Classification
    sup_dim_minus_v: Fraction
    tail_limit: Fraction
    loci: list[Locus] = field(repr=False, default_factory=list)

    def to_json(self) -> dict:
        return {
            "a_value": str(self.a_value),
            "a_attained": self.a_attained,
            "b_value": self.b_value,
            "attaining": [x.to_json() for x in self.attaining],
            "classification": self.classification,
            "sup_dim_minus_v": str(self.sup_dim_minus_v),
            "tail_limit": str(self.tail_limit),
        }


def scan_loci(G: MetacyclicGroup, V: Representation, window_multiplier: int = 1) -> list[Locus]:
    """All nontrivial tame classes and the wild strata in the scan windows."""
    loci = [Locus("tame", k, None, age(G, V, k), 0) for k in range(1, G.m)]
    for gamma in range(G.m):
        for r in window(G, gamma, window_multiplier):
            loci.append(
                Locus("wild", r, gamma, v_rep(G, V, gamma, r), stratum_dimension(G, gamma, r))
            )
    return loci


def _check_converges(G: MetacyclicGroup, V: Representation) -> None:
    if V.D_V < G.p:
        raise Divergent(V.D_V, G.p)


def _check_raising(loci: list[Locus]) -> None:
    for locus in loci:
        if locus.v <= 0:
            raise ZeroV(f"v vanishes on the nontrivial locus {locus.label()}")


def a_invariant(
    G: MetacyclicGroup, V: Representation, window_multiplier: int = 1
) -> tuple[Fraction, bool]:
    _check_converges(G, V)
    loci = scan_loci(G, V, window_multiplier)
    _check_raising(loci)
    return _a_from_loci(G, V, loci)


def _a_from_loci(G: MetacyclicGroup, V: Representation, loci: list[Locus]) -> tuple[Fraction, bool]:
    limit = Fraction(G.p - 1, V.D_V)
    best = max(locus.ratio for locus in loci) if loci else limit
    if best >= limit:
        return best, True
    return limit, False


def _b_from_loci(
    G: MetacyclicGroup, V: Representation, loci: list[Locus], a: Fraction, attained: bool
) -> tuple[BValue, list[Locus]]:
    if not attained:
        return "undefined", []
    limit = Fraction(G.p - 1, V.D_V)
    attaining = [x for x in loci if x.ratio == a]
    if a == limit and any(x.kind == "wild" for x in attaining):
        # the whole residue class of that stratum has ratio a
        return "infinite", attaining

    by_value: dict[Fraction, list[Locus]] = defaultdict(list)
    for locus in loci:
        by_value[locus.v].append(locus)
    b = 0
    for value in sorted({x.v for x in attaining}):
        group = by_value[value]
        top = max(x.dim for x in group)
        # every stratum and every tame point is a single irreducible component
        b += sum(1 for x in group if x.dim == top)
    return b, attaining


def b_invariant(G: MetacyclicGroup, V: Representation, window_multiplier: int = 1) -> BValue:
    _check_converges(G, V)
    loci = scan_loci(G, V, window_multiplier)
    _check_raising(loci)
    a, attained = _a_from_loci(G, V, loci)
    return _b_from_loci(G, V, loci, a, attained)[0]


def classify_singularities(G: MetacyclicGroup, V: Representation) -> Classification:
    """Canonical / terminal test: tame ages against 1, window dim - v against -1."""
    ages = [age(G, V, k) for k in range(1, G.m)]
    gaps = [
        stratum_dimension(G, gamma, r) - v_rep(G, V, gamma, r)
        for gamma in range(G.m)
        for r in window(G, gamma)
    ]
    if all(x > 1 for x in ages) and all(g < -1 for g in gaps):
        return "terminal"
    if all(x >= 1 for x in ages) and all(g <= -1 for g in gaps):
        return "canonical_not_terminal"
    return "not_canonical"


def sup_dim_minus_v(loci: list[Locus]) -> Fraction:
    """sup of dim - v over nontrivial loci; tails only decrease since D_V >= p."""
    return max(locus.dim - locus.v for locus in loci)


def invariant_report(G: MetacyclicGroup, V: Representation, window_multiplier: int = 1) -> InvariantReport:
    _check_converges(G, V)
    loci = scan_loci(G, V, window_multiplier)
    _check_raising(loci)
    a, attained = _a_from_loci(G, V, loci)
    b, attaining = _b_from_loci(G, V, loci, a, attained)
    sup = sup_dim_minus_v(loci)
    assert (a <= 1) == (sup <= -1), (a, sup)
    assert (a < 1) == (sup < -1), (a, sup)
    return InvariantReport(
        a_value=a,
        a_attained=attained,
        b_value=b,
        attaining=attaining,
        classification=classify_singularities(G, V),
        sup_dim_minus_v=sup,
        tail_limit=Fraction(G.p - 1, V.D_V),
        loci=loci,
    )


@dataclass(frozen=True)
class CrepantEuler:
    """Euler characteristic of a crepant resolution, if one exists."""

    value: Fraction
    valid_only_if_crepant_resolution_exists: bool = True


def crepant_euler(G: MetacyclicGroup, V: Representation) -> CrepantEuler:
    _check_converges(G, V)
    return CrepantEuler(Fraction(G.m * V.D_V, V.D_V - G.p + 1))
