"""Exception hierarchy.

Every domain error derives from :class:`WildMcKayError` so the CLI can map
them to exit status 1 in one place.
"""

from __future__ import annotations


class WildMcKayError(ValueError):
    """Base class for precondition violations on valid-looking input."""


class NotPrime(WildMcKayError):
    def __init__(self, p: int) -> None:
        super().__init__(f"characteristic p={p} is not prime")
        self.p = p


class NotCoprime(WildMcKayError):
    def __init__(self, m: int, p: int) -> None:
        super().__init__(f"tame order m={m} is not coprime to p={p}")
        self.m = m
        self.p = p


class BadAction(WildMcKayError):
    def __init__(self, a: int, p: int, m: int, reason: str) -> None:
        super().__init__(f"action exponent a={a} invalid for p={p}, m={m}: {reason}")
        self.a = a


class BadRepresentation(WildMcKayError):
    pass


class InadmissibleJump(WildMcKayError):
    def __init__(self, gamma: int, r: int, reason: str) -> None:
        super().__init__(f"jump r={r} is not admissible for gamma={gamma}: {reason}")
        self.gamma = gamma
        self.r = r


class NotInvertible(WildMcKayError):
    def __init__(self, gamma: int, m: int) -> None:
        super().__init__(
            f"gamma={gamma} is not invertible mod m={m}; only connected torsors are counted"
        )
        self.gamma = gamma


class BadFieldSize(WildMcKayError):
    def __init__(self, q: int, p: int) -> None:
        super().__init__(f"q={q} is not a positive power of p={p}")
        self.q = q


class Divergent(WildMcKayError):
    def __init__(self, d_v: int, p: int) -> None:
        super().__init__(f"D_V={d_v} < p={p}: the stringy integral diverges")
        self.d_v = d_v
        self.p = p


class ZeroV(WildMcKayError):
    pass


class NoSolution(WildMcKayError):
    pass


class PoleAtPoint(WildMcKayError):
    pass


class PoleAtOne(PoleAtPoint):
    pass


class FractionalExponent(WildMcKayError):
    pass
