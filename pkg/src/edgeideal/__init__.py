"""Exact graded Betti numbers of edge ideals and Stanley–Reisner rings.

Graded Betti numbers are computed exactly from Hochster's formula over a
chosen field; closed-form results and classifiers are checked against them.
"""

from .complex import SimplicialComplex, independence_complex
from .errors import CapExceeded, InputError, InvariantViolation, PreconditionError
from .graph import Graph
from .hochster import BettiTable, betti_table, betti_table_graph, summarize
from .homology import GF2, GF3, QQ, FieldSpec, reduced_homology

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "CapExceeded",
    "FieldSpec",
    "GF2",
    "GF3",
    "Graph",
    "InputError",
    "InvariantViolation",
    "PreconditionError",
    "QQ",
    "SimplicialComplex",
    "betti_table",
    "betti_table_graph",
    "independence_complex",
    "reduced_homology",
    "summarize",
]
