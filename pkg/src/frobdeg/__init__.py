"""Frobenius degree of coprime monic polynomials over Q and finite fields."""

from .field import ExtensionField, FieldElement, PrimeField, Rationals, make_rng, parse_field
from .poly import NEG_INF, Poly, parse_poly, parse_poly_list
from .solver import (
    FrobeniusReport,
    SolutionWitness,
    SolverConfig,
    frobenius_degree,
    lower_bound,
    solve_for,
    upper_bound,
)
from .certify import certified_degree, counter_example

__all__ = [
    "ExtensionField",
    "FieldElement",
    "FrobeniusReport",
    "NEG_INF",
    "Poly",
    "PrimeField",
    "Rationals",
    "SolutionWitness",
    "SolverConfig",
    "certified_degree",
    "counter_example",
    "frobenius_degree",
    "lower_bound",
    "make_rng",
    "parse_field",
    "parse_poly",
    "parse_poly_list",
    "solve_for",
    "upper_bound",
]
