"""Reproduction checks for the worked S_3 examples (p = 3, m = 2, a = 2)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .group import new_group
from .invariants import a_invariant, b_invariant, classify_singularities, crepant_euler
from .moduli import count_extensions
from .motive import euler_from_motive, euler_number, stringy_motive, window_exponents
from .polynomial import parse
from .representation import Representation


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


def _s3():
    return new_group(3, 2, 2)


def _p2():
    return Representation.from_pairs([(3, 1)])


def _p1p1():
    return Representation.from_pairs([(3, 0), (3, 0)])


def _motive_p2() -> tuple[bool, str]:
    G, V = _s3(), _p2()
    motive = stringy_motive(G, V).simplified()
    ok = motive == parse("L^3 + 4*L^2 + L") and euler_from_motive(G, V) == 6 == euler_number(G, V)
    return ok, f"M = {motive}, e = {euler_number(G, V)}"


def _motive_p1p1() -> tuple[bool, str]:
    G, V = _s3(), _p1p1()
    motive = stringy_motive(G, V).simplified()
    ok = motive == parse("L^6 + L^5 + L^4") and euler_from_motive(G, V) == 3 == euler_number(G, V)
    return ok, f"M = {motive}, e = {euler_number(G, V)}"


def _windows() -> tuple[bool, str]:
    G = _s3()
    p2 = [e for _, _, e in window_exponents(G, _p2())]
    p1p1 = [e for _, _, e in window_exponents(G, _p1p1())]
    ok = Counter(p2) == Counter([-1, -1, -1, -2]) and Counter(p1p1) == Counter([-2, -3, -4, -5])
    return ok, f"P2 {sorted(map(str, p2))}, P1+P1 {sorted(map(str, p1p1))}"


def _invariants() -> tuple[bool, str]:
    G = _s3()
    got = []
    for V, expected in ((_p2(), 4), (_p1p1(), 1)):
        a, attained = a_invariant(G, V)
        b = b_invariant(G, V)
        cls = classify_singularities(G, V)
        got.append((a == 1 and attained and b == expected and cls == "canonical_not_terminal", f"a={a} b={b} {cls}"))
    return all(ok for ok, _ in got), "; ".join(d for _, d in got)


def _crepant() -> tuple[bool, str]:
    G = _s3()
    values = (crepant_euler(G, _p2()).value, crepant_euler(G, _p1p1()).value)
    return values == (Fraction(6), Fraction(3)), f"{values[0]}, {values[1]}"


def _counts() -> tuple[bool, str]:
    G = _s3()
    values = (count_extensions(G, 3, 1, 1), count_extensions(G, 3, 1, 5))
    return values == (2, 6), f"r=1: {values[0]}, r=5: {values[1]}"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("S3 P2 stringy motive and Euler number", _motive_p2),
    ("S3 P1+P1 stringy motive and Euler number", _motive_p1p1),
    ("S3 window exponents dim - v", _windows),
    ("S3 a/b-invariants and classification", _invariants),
    ("S3 crepant Euler characteristics", _crepant),
    ("S3 extension counts over F_3", _counts),
]


def run_selftest() -> list[Check]:
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed table
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(Check(name, ok, detail))
    return results
