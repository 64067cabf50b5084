"""Exact computations for the wild McKay correspondence of Z/p x| Z/m."""

from .errors import (
    BadAction,
    BadFieldSize,
    BadRepresentation,
    Divergent,
    FractionalExponent,
    InadmissibleJump,
    NoSolution,
    NotCoprime,
    NotInvertible,
    NotPrime,
    PoleAtOne,
    PoleAtPoint,
    WildMcKayError,
    ZeroV,
)
from .group import (
    GammaData,
    MetacyclicGroup,
    center_order,
    gamma_reduction,
    new_group,
    root_of_unity_exponent,
    tame_class_exponents,
)
from .invariants import (
    InvariantReport,
    a_invariant,
    b_invariant,
    classify_singularities,
    crepant_euler,
    invariant_report,
)
from .moduli import count_extensions, stratum_dimension, stratum_info, window
from .motive import MotiveResult, euler_number, stringy_motive, wild_window_sum
from .polynomial import L, PuiseuxPoly, RationalExpr, evaluate_at, limit_at_one, monomial, parse, render
from .representation import (
    Indecomposable,
    Representation,
    age,
    construct_matrices,
    d_invariant,
    tau_eigenvalue_exponents,
)
from .vfunction import index_set, v_indecomposable, v_rep, v_tame

__all__ = [
    "BadAction",
    "BadFieldSize",
    "BadRepresentation",
    "Divergent",
    "FractionalExponent",
    "GammaData",
    "InadmissibleJump",
    "Indecomposable",
    "InvariantReport",
    "L",
    "MetacyclicGroup",
    "MotiveResult",
    "NoSolution",
    "NotCoprime",
    "NotInvertible",
    "NotPrime",
    "PoleAtOne",
    "PoleAtPoint",
    "PuiseuxPoly",
    "RationalExpr",
    "Representation",
    "WildMcKayError",
    "ZeroV",
    "a_invariant",
    "age",
    "b_invariant",
    "center_order",
    "classify_singularities",
    "construct_matrices",
    "count_extensions",
    "crepant_euler",
    "d_invariant",
    "euler_number",
    "evaluate_at",
    "gamma_reduction",
    "index_set",
    "invariant_report",
    "limit_at_one",
    "monomial",
    "new_group",
    "parse",
    "render",
    "root_of_unity_exponent",
    "stratum_dimension",
    "stratum_info",
    "stringy_motive",
    "tame_class_exponents",
    "tau_eigenvalue_exponents",
    "v_indecomposable",
    "v_rep",
    "v_tame",
    "wild_window_sum",
    "window",
]
