"""Sparse polynomials in L with rational exponents, and their quotients.

Coefficients and exponents are ``Fraction``.  Quotients are simplified by
substituting L = M^N (N the lcm of exponent denominators), pulling out
powers of M, and cancelling the gcd of the remaining polynomials over Q.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import FractionalExponent, PoleAtOne, PoleAtPoint

Number = Union[int, Fraction]


def _frac(x: Number | str) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class PuiseuxPoly:
    """Finite sum of c * L^e; immutable, no zero coefficients stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Number, Number] | Iterable[tuple[Number, Number]] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, Fraction] = {}
        for e, c in items:
            e, c = _frac(e), _frac(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def monomial(cls, exponent: Number, coeff: Number = 1) -> PuiseuxPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: Number) -> PuiseuxPoly:
        return cls({0: c})

    @classmethod
    def promote(cls, x: PuiseuxPoly | Number) -> PuiseuxPoly:
        return x if isinstance(x, PuiseuxPoly) else cls.constant(x)

    @property
    def terms(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return self._terms

    def as_dict(self) -> dict[Fraction, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def exponents(self) -> list[Fraction]:
        return [e for e, _ in self._terms]

    def min_exponent(self) -> Fraction:
        return self._terms[0][0]

    def max_exponent(self) -> Fraction:
        return self._terms[-1][0]

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def exponent_denominator(self) -> int:
        return math.lcm(1, *(e.denominator for e, _ in self._terms))

    def coefficient(self, exponent: Number) -> Fraction:
        return self.as_dict().get(_frac(exponent), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PuiseuxPoly.constant(other)
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: PuiseuxPoly | Number) -> PuiseuxPoly:
        other = self.promote(other)
        return PuiseuxPoly(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self) -> PuiseuxPoly:
        return PuiseuxPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other: PuiseuxPoly | Number) -> PuiseuxPoly:
        return self + (-self.promote(other))

    def __rsub__(self, other: Number) -> PuiseuxPoly:
        return self.promote(other) - self

    def __mul__(self, other: PuiseuxPoly | Number) -> PuiseuxPoly:
        other = self.promote(other)
        return PuiseuxPoly(
            (e1 + e2, c1 * c2) for e1, c1 in self._terms for e2, c2 in other._terms
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PuiseuxPoly:
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have negative powers")
            (e, c), = self._terms
            return PuiseuxPoly({e * k: c**k})
        result = PuiseuxPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Number) -> PuiseuxPoly:
        return self * c

    def shift(self, exponent: Number) -> PuiseuxPoly:
        """Multiply by L^exponent."""
        e0 = _frac(exponent)
        return PuiseuxPoly((e + e0, c) for e, c in self._terms)

    def __call__(self, x: Number) -> Fraction:
        return evaluate_poly(self, x)

    def __repr__(self) -> str:
        return f"PuiseuxPoly({render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> list[list[str]]:
        return [[str(e), str(c)] for e, c in self._terms]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[str]]) -> PuiseuxPoly:
        return cls((Fraction(e), Fraction(c)) for e, c in data)


L = PuiseuxPoly.monomial(1)


def monomial(exponent: Number, coeff: Number = 1) -> PuiseuxPoly:
    return PuiseuxPoly.monomial(exponent, coeff)


def add(f: PuiseuxPoly, g: PuiseuxPoly) -> PuiseuxPoly:
    return f + g


def mul(f: PuiseuxPoly, g: PuiseuxPoly) -> PuiseuxPoly:
    return f * g


def scale(f: PuiseuxPoly, c: Number) -> PuiseuxPoly:
    return f * c


# Rendering / parsing

def _render_exponent(e: Fraction) -> str:
    if e == 1:
        return "L"
    if e.denominator == 1 and e > 0:
        return f"L^{e}"
    return f"L^({e})"


def render(f: PuiseuxPoly) -> str:
    """Text form, highest exponent first, e.g. ``L^3 + 4*L^2 + L``."""
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for e, c in reversed(f.terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        elif a == 1:
            body = _render_exponent(e)
        else:
            body = f"{a}*{_render_exponent(e)}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(L(?:\^(?:\((-?\d+(?:/\d+)?)\)|(\d+)))?)?\s*"
)


def parse(text: str) -> PuiseuxPoly:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "0":
        return PuiseuxPoly()
    terms = []
    pos = 0
    while pos < len(text):
        mt = _TERM.match(text, pos)
        if mt is None or mt.end() == pos or not (mt.group(2) or mt.group(3)):
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign = -1 if mt.group(1) == "-" else 1
        coeff = Fraction(mt.group(2)) if mt.group(2) else Fraction(1)
        if mt.group(3):
            exp = Fraction(mt.group(4) or mt.group(5) or 1)
        else:
            exp = Fraction(0)
        terms.append((exp, sign * coeff))
        pos = mt.end()
    return PuiseuxPoly(terms)


# Dense polynomials over Q (coefficient lists, constant term first)

def _dense_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    if len(a) < len(b):
        return [], _dense_trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    return _dense_trim(q), _dense_trim(a[: len(b) - 1])


def _primitive(a: list[int]) -> list[int]:
    g = math.gcd(*a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Remainder of lc(b)^k * a by b over Z, k = deg a - deg b + 1."""
    a = a[:]
    lead = b[-1]
    db = len(b) - 1
    while len(a) > db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        a = [x * lead for x in a]
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def dense_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd over Q, computed by a primitive remainder sequence over Z."""

    def to_int(f: list[Fraction]) -> list[int]:
        f = _dense_trim(f[:])
        if not f:
            return []
        den = math.lcm(*(c.denominator for c in f))
        return _primitive([int(c * den) for c in f])

    x, y = to_int(a), to_int(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _pseudo_rem(x, y)
        x, y = y, (_primitive(r) if r else [])
    if not x:
        return []
    return [Fraction(c, x[-1]) for c in x]


def _to_dense(f: PuiseuxPoly, N: int) -> tuple[int, list[Fraction]]:
    """Write f(M^N) = M^k * g(M) with g(0) != 0; return (k, g)."""
    scaled = [(int(e * N), c) for e, c in f.terms]
    k = scaled[0][0]
    dense = [Fraction(0)] * (scaled[-1][0] - k + 1)
    for e, c in scaled:
        dense[e - k] = c
    return k, dense


def _from_dense(k: int, dense: list[Fraction], N: int) -> PuiseuxPoly:
    return PuiseuxPoly((Fraction(k + i, N), c) for i, c in enumerate(dense) if c)


class RationalExpr:
    """Quotient num / den of Puiseux polynomials; den is nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num: PuiseuxPoly | Number, den: PuiseuxPoly | Number = 1) -> None:
        num, den = PuiseuxPoly.promote(num), PuiseuxPoly.promote(den)
        if den.is_zero():
            raise ZeroDivisionError("rational expression with zero denominator")
        self.num = num
        self.den = den

    @classmethod
    def promote(cls, x: RationalExpr | PuiseuxPoly | Number) -> RationalExpr:
        return x if isinstance(x, RationalExpr) else cls(x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (PuiseuxPoly, int, Fraction)):
            other = RationalExpr(other)
        if not isinstance(other, RationalExpr):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        s = self.simplify()
        return hash((s.num, s.den))

    def __add__(self, other: RationalExpr | PuiseuxPoly | Number) -> RationalExpr:
        o = self.promote(other)
        return RationalExpr(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __mul__(self, other: RationalExpr | PuiseuxPoly | Number) -> RationalExpr:
        o = self.promote(other)
        return RationalExpr(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalExpr | PuiseuxPoly | Number) -> RationalExpr:
        o = self.promote(other)
        return RationalExpr(self.num * o.den, self.den * o.num)

    def simplify(self) -> RationalExpr:
        """Cancel common factors; the result's denominator has constant term 1.

        A denominator that reduces to a monomial is absorbed into the
        numerator, so a polynomial comes back with denominator 1.
        """
        if self.num.is_zero():
            return RationalExpr(PuiseuxPoly(), 1)
        N = math.lcm(self.num.exponent_denominator(), self.den.exponent_denominator())
        kn, n = _to_dense(self.num, N)
        kd, d = _to_dense(self.den, N)
        g = dense_gcd(n, d)
        if len(g) > 1:
            n, _ = _dense_divmod(n, g)
            d, _ = _dense_divmod(d, g)
        c0 = d[0]
        n = [c / c0 for c in n]
        d = [c / c0 for c in d]
        return RationalExpr(_from_dense(kn - kd, n, N), _from_dense(0, d, N))

    def is_polynomial(self) -> bool:
        return self.simplify().den == PuiseuxPoly.constant(1)

    def as_poly(self) -> PuiseuxPoly:
        s = self.simplify()
        if s.den != PuiseuxPoly.constant(1):
            raise ValueError(f"{self} is not a polynomial in L")
        return s.num

    def __repr__(self) -> str:
        return f"RationalExpr({render(self.num)!r}, {render(self.den)!r})"

    def __str__(self) -> str:
        if self.den == PuiseuxPoly.constant(1):
            return render(self.num)
        return f"({render(self.num)}) / ({render(self.den)})"

    def to_json(self) -> dict[str, list[list[str]]]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping[str, Iterable[Iterable[str]]]) -> RationalExpr:
        return cls(PuiseuxPoly.from_json(data["num"]), PuiseuxPoly.from_json(data["den"]))


def _nth_root(x: Fraction, n: int) -> Fraction | None:
    if n == 1:
        return x
    if x < 0:
        if n % 2 == 0:
            return None
        r = _nth_root(-x, n)
        return None if r is None else -r

    def iroot(k: int) -> int | None:
        lo, hi = 0, 1 << (k.bit_length() // n + 1)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid**n < k:
                lo = mid + 1
            else:
                hi = mid
        return lo if lo**n == k else None

    num, den = iroot(x.numerator), iroot(x.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def evaluate_poly(f: PuiseuxPoly, x: Number) -> Fraction:
    x = _frac(x)
    N = f.exponent_denominator()
    root = _nth_root(x, N)
    if root is None:
        raise FractionalExponent(f"cannot evaluate L^(1/{N}) exactly at L={x}")
    total = Fraction(0)
    for e, c in f.terms:
        k = int(e * N)
        if k < 0 and root == 0:
            raise PoleAtPoint(f"negative power of L at L=0 in {render(f)}")
        total += c * root**k
    return total


def evaluate_at(R: RationalExpr | PuiseuxPoly | Number, q: Number) -> Fraction:
    """Value at L = q, after cancelling removable common factors."""
    R = RationalExpr.promote(R).simplify()
    den = evaluate_poly(R.den, q)
    if den == 0:
        raise PoleAtPoint(f"denominator {render(R.den)} vanishes at L={q}")
    return evaluate_poly(R.num, q) / den


def _deflate_at_one(f: list[Fraction]) -> list[Fraction]:
    """f / (M - 1) by synthetic division; f(1) must vanish."""
    out = [Fraction(0)] * (len(f) - 1)
    carry = Fraction(0)
    for i in range(len(f) - 1, 0, -1):
        carry += f[i]
        out[i - 1] = carry
    return out


def limit_at_one(R: RationalExpr | PuiseuxPoly | Number) -> Fraction:
    """Value at L = 1 after cancelling every common factor that vanishes there.

    Only the factor M - 1 (L = M^N) can vanish at 1, so it is divided out of
    numerator and denominator as often as both allow; a full gcd is not needed.
    """
    R = RationalExpr.promote(R)
    if R.num.is_zero():
        return Fraction(0)
    N = math.lcm(R.num.exponent_denominator(), R.den.exponent_denominator())
    num, den = _to_dense(R.num, N)[1], _to_dense(R.den, N)[1]
    while sum(den) == 0:
        if sum(num) != 0:
            raise PoleAtOne(f"reduced denominator of {R} vanishes at L=1")
        num, den = _deflate_at_one(num), _deflate_at_one(den)
    return sum(num) / sum(den)
