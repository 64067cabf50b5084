"""Small finite fields F_{p^e} for explicit matrix checks.

Elements are integers 0 <= x < p^e encoding the coefficient vector of a
polynomial of degree < e in base p (constant term is the least significant
digit).  The field is F_p[x] modulo the monic irreducible polynomial of
degree e whose tail coefficients have the smallest base-p encoding.
Sizes stay small (p^e <= 2^20 on the test grid) so plain lists suffice.
"""

from __future__ import annotations

from functools import lru_cache


def _digits(x: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds: list[int], p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by the monic ``mod`` (coefficient lists, low first)."""
    a = a[:]
    dm = len(mod) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        lead = a[k] % p
        if lead:
            for i in range(dm + 1):
                a[k - dm + i] = (a[k - dm + i] - lead * mod[i]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * max(1, len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                prod[i + j] += u * v
    return _poly_mod(prod, mod, p)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        inv = pow(b[-1], -1, p)
        monic = [x * inv % p for x in b]
        if len(a) >= len(monic):
            a = _trim(_poly_mod(a, monic, p))
        else:
            a = _trim(a)
        a, b = b, a
    return a


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test: x^(p^e) = x mod f and gcd(x^(p^(e/q)) - x, f) = 1."""
    e = len(f) - 1
    if e == 1:
        return True
    x = [0, 1] + [0] * (e - 2)
    frob = [x]
    for _ in range(e):
        y = frob[-1]
        acc = [1] + [0] * (e - 1)
        for _ in range(p):
            acc = _poly_mulmod(acc, y, f, p)
        frob.append(acc)
    if _trim(frob[e][:]) != _trim(x[:]):
        return False
    for q in _prime_factors(e):
        diff = [(u - v) % p for u, v in zip(frob[e // q], x)]
        if len(_poly_gcd(f, diff, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e over F_p, low coefficients first."""
    for code in range(p**e):
        f = _digits(code, p, e) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


_TABLE_LIMIT = 1 << 16


class GF:
    def __init__(self, p: int, e: int) -> None:
        self.p = p
        self.e = e
        self.size = p**e
        self.modulus = smallest_irreducible(p, e)
        self._modbits = _undigits(list(self.modulus), 2) if p == 2 else 0
        self._gen: int | None = None
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if 1 < e and self.size <= _TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self) -> None:
        w = self.generator()
        exp = [1] * (self.size - 1)
        for k in range(1, self.size - 1):
            exp[k] = self._slow_mul(exp[k - 1], w)
        log = [0] * self.size
        for k, x in enumerate(exp):
            log[x] = k
        self._exp, self._log = exp, log

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})"

    zero = 0
    one = 1

    def from_int(self, k: int) -> int:
        return k % self.p

    def add(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        xs, ys = _digits(x, self.p, self.e), _digits(y, self.p, self.e)
        return _undigits([(u + v) % self.p for u, v in zip(xs, ys)], self.p)

    def neg(self, x: int) -> int:
        if self.e == 1:
            return -x % self.p
        if self.p == 2:
            return x
        return _undigits([-u % self.p for u in _digits(x, self.p, self.e)], self.p)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.e == 1:
            return x * y % self.p
        if self._exp is not None:
            if x == 0 or y == 0:
                return 0
            return self._exp[(self._log[x] + self._log[y]) % (self.size - 1)]
        return self._slow_mul(x, y)

    def _slow_mul(self, x: int, y: int) -> int:
        if self.p == 2:
            return self._mul2(x, y)
        xs, ys = _digits(x, self.p, self.e), _digits(y, self.p, self.e)
        prod = [0] * (2 * self.e - 1)
        for i, u in enumerate(xs):
            if u:
                for j, v in enumerate(ys):
                    prod[i + j] += u * v
        return _undigits(_poly_mod(prod, list(self.modulus), self.p), self.p)

    def _mul2(self, x: int, y: int) -> int:
        # carry-less product, reduced by the modulus bit pattern
        prod = 0
        while y:
            if y & 1:
                prod ^= x
            y >>= 1
            x <<= 1
        for k in range(prod.bit_length() - 1, self.e - 1, -1):
            if prod >> k & 1:
                prod ^= self._modbits << (k - self.e)
        return prod

    def pow(self, x: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(x), -k)
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            k >>= 1
        return result

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        return self.pow(x, self.size - 2)

    def is_generator(self, x: int) -> bool:
        if x == 0:
            return False
        n = self.size - 1
        return all(self._slow_pow(x, n // q) != self.one for q in _prime_factors(n))

    def _slow_pow(self, x: int, k: int) -> int:
        result = self.one
        while k:
            if k & 1:
                result = self._slow_mul(result, x)
            x = self._slow_mul(x, x)
            k >>= 1
        return result

    def generator(self) -> int:
        """Smallest element (by encoding) generating the multiplicative group."""
        if self._gen is None:
            self._gen = next(x for x in range(1, self.size) if self.is_generator(x))
        return self._gen

    def elements(self) -> range:
        return range(self.size)


@lru_cache(maxsize=None)
def get_field(p: int, e: int) -> GF:
    return GF(p, e)


# Dense matrices over a GF, as lists of rows.


def identity(F: GF, d: int) -> list[list[int]]:
    return [[F.one if i == j else F.zero for j in range(d)] for i in range(d)]


def matmul(F: GF, A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    n, k, m = len(A), len(B), len(B[0])
    out = [[F.zero] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            a = A[i][t]
            if a:
                row = B[t]
                for j in range(m):
                    if row[j]:
                        out[i][j] = F.add(out[i][j], F.mul(a, row[j]))
    return out


def matpow(F: GF, A: list[list[int]], k: int) -> list[list[int]]:
    result = identity(F, len(A))
    while k:
        if k & 1:
            result = matmul(F, result, A)
        A = matmul(F, A, A)
        k >>= 1
    return result
