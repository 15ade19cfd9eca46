"""Bijective enumerations of the nonnegative rationals by labelled trees."""

from .exact import Rational, floor_of, make_rational, padic_valuation
from .rank import Case, classify, rank
from .sequences import GeneratorMethod, iterate, newman_f, next_term, nth_term
from .trees import (
    NodeTriple,
    TreeKind,
    children,
    level,
    node_at_index,
    parent_index,
    root,
    walk,
)

__all__ = [
    "Case",
    "GeneratorMethod",
    "NodeTriple",
    "Rational",
    "TreeKind",
    "children",
    "classify",
    "floor_of",
    "iterate",
    "level",
    "make_rational",
    "newman_f",
    "next_term",
    "node_at_index",
    "nth_term",
    "padic_valuation",
    "parent_index",
    "rank",
    "root",
    "walk",
]
