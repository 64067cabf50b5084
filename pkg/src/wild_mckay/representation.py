"""Modular representations of G as multisets of indecomposables V_{d,s}.

V_{d,s} has dimension d (1 <= d <= p); s is the exponent of the first
diagonal entry zeta_m^s of tau once sigma is put in Jordan form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import ffield
from .errors import BadRepresentation, NoSolution
from .group import MetacyclicGroup, multiplicative_order, smallest_primitive_root


@dataclass(frozen=True)
class Indecomposable:
    d: int
    s: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise BadRepresentation(f"indecomposable dimension d={self.d} must be >= 1")
        if self.s < 0:
            raise BadRepresentation(f"eigenvalue exponent s={self.s} must be >= 0")

    def check(self, G: MetacyclicGroup) -> None:
        if self.d > G.p:
            raise BadRepresentation(f"indecomposable dimension d={self.d} exceeds p={G.p}")
        if self.s >= G.m:
            raise BadRepresentation(f"eigenvalue exponent s={self.s} must be < m={G.m}")


@dataclass(frozen=True)
class Representation:
    summands: tuple[Indecomposable, ...]

    def __post_init__(self) -> None:
        if not self.summands:
            raise BadRepresentation("a representation needs at least one summand")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]], G: MetacyclicGroup | None = None) -> Representation:
        summands = []
        for pair in pairs:
            if len(pair) != 2:
                raise BadRepresentation(f"summand {pair!r} is not a (d, s) pair")
            summands.append(Indecomposable(int(pair[0]), int(pair[1])))
        rep = cls(tuple(summands))
        if G is not None:
            rep.check(G)
        return rep

    def check(self, G: MetacyclicGroup) -> None:
        for summand in self.summands:
            summand.check(G)

    def __add__(self, other: Representation) -> Representation:
        return Representation(self.summands + other.summands)

    @property
    def dim(self) -> int:
        return sum(v.d for v in self.summands)

    @property
    def D_V(self) -> int:
        return d_invariant(self)

    def pairs(self) -> list[list[int]]:
        return [[v.d, v.s] for v in self.summands]


def as_representation(V: Representation | Indecomposable) -> Representation:
    return V if isinstance(V, Representation) else Representation((V,))


def tau_eigenvalue_exponents(G: MetacyclicGroup, V: Indecomposable) -> list[int]:
    """Exponents of zeta_m on the diagonal of tau, top to bottom."""
    return [(V.s - j * G.c) % G.m for j in range(V.d)]


def age(G: MetacyclicGroup, V: Representation | Indecomposable, k: int) -> Fraction:
    """Age of tau^k acting on V."""
    total = 0
    for summand in as_representation(V).summands:
        total += sum(k * e % G.m for e in tau_eigenvalue_exponents(G, summand))
    return Fraction(total, G.m)


def d_invariant(V: Representation | Indecomposable) -> int:
    return sum(v.d * (v.d - 1) // 2 for v in as_representation(V).summands)


# Explicit matrices over F_{p^e}


@dataclass(frozen=True)
class MatrixRealization:
    field: ffield.GF
    zeta_m: int
    sigma: list[list[int]]
    tau: list[list[int]]


def root_of_unity_in_field(G: MetacyclicGroup, F: ffield.GF) -> int:
    """A primitive m-th root of unity zeta_m in F with zeta_m^c = a.

    Chosen as the first power w^(k(|F|-1)/m), k a unit mod m, of the field
    generator w whose (m/n)-th power equals zeta_n = g^((p-1)/n).
    """
    base = F.pow(F.generator(), (F.size - 1) // G.m)
    zeta_n = F.pow(F.from_int(smallest_primitive_root(G.p)), (G.p - 1) // G.n)
    for k in range(1, G.m + 1):
        if math.gcd(k, G.m) != 1:
            continue
        z = F.pow(base, k)
        if F.pow(z, G.m // G.n) == zeta_n:
            return z
    raise AssertionError(f"no m-th root of unity in {F} compatible with zeta_n")


def field_for(G: MetacyclicGroup) -> ffield.GF:
    """F_{p^e} with e the order of p mod m, the smallest field holding mu_m."""
    return ffield.get_field(G.p, multiplicative_order(G.p, G.m))


def construct_matrices(G: MetacyclicGroup, V: Indecomposable) -> MatrixRealization:
    """Matrices of sigma and tau on V_{d,s} over F_{p^e}.

    sigma is the unipotent Jordan block I + N.  tau is upper triangular with
    the diagonal fixed by :func:`tau_eigenvalue_exponents`.  Writing
    sigma^a = I + N_a, the relation tau N = N_a tau reads

        tau[i][j-1] = sum_{k > i} N_a[i][k] tau[k][j],

    and N_a[i][i+1] = a is invertible, so each entry tau[i+1][j] is solved
    column by column from the bottom up.  The first-row entries tau[0][j]
    are the free unknowns and are set to zero.
    """
    V.check(G)
    F = field_for(G)
    zeta = root_of_unity_in_field(G, F)
    d = V.d
    sigma = ffield.identity(F, d)
    for i in range(d - 1):
        sigma[i][i + 1] = F.one
    sigma_a = ffield.matpow(F, sigma, G.a)
    a_inv = F.inv(F.from_int(G.a))

    tau = [[F.zero] * d for _ in range(d)]
    for i, e in enumerate(tau_eigenvalue_exponents(G, V)):
        tau[i][i] = F.pow(zeta, e)
    for j in range(1, d):
        for i in range(j - 2, -1, -1):
            acc = tau[i][j - 1]
            for k in range(i + 2, d):
                acc = F.sub(acc, F.mul(sigma_a[i][k], tau[k][j]))
            tau[i + 1][j] = F.mul(a_inv, acc)

    lhs = ffield.matmul(F, tau, sigma)
    rhs = ffield.matmul(F, sigma_a, tau)
    if lhs != rhs:
        raise NoSolution(f"tau sigma = sigma^a tau is inconsistent for V=({V.d},{V.s})")
    return MatrixRealization(F, zeta, sigma, tau)


def check_relations(G: MetacyclicGroup, M: MatrixRealization) -> dict[str, bool]:
    F = M.field
    d = len(M.sigma)
    eye = ffield.identity(F, d)
    tau_inv = ffield.matpow(F, M.tau, G.m - 1)
    conj = ffield.matmul(F, ffield.matmul(F, M.tau, M.sigma), tau_inv)
    return {
        "sigma^p = I": ffield.matpow(F, M.sigma, G.p) == eye,
        "tau^m = I": ffield.matpow(F, M.tau, G.m) == eye,
        "tau sigma tau^-1 = sigma^a": conj == ffield.matpow(F, M.sigma, G.a),
    }
