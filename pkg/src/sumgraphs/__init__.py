"""Sum graphs and integral sum graphs: constructions, closed forms and brute-force checks."""

from .core import (FAMILY_KINDS, FamilySpec, G0n, Gmn, Gn, LabeledGraph, build_sum_graph, complement,
                   complete_graph, generate, graph_join, graph_union, parse, serialize, to_dot, to_json)
from .errors import (CapacityError, ConstructionError, ParseError, SumGraphError, UnsupportedParameterError,
                     ValidationError)

__version__ = "0.1.0"

__all__ = [
    "FAMILY_KINDS", "FamilySpec", "G0n", "Gmn", "Gn", "LabeledGraph", "build_sum_graph", "complement",
    "complete_graph", "generate", "graph_join", "graph_union", "parse", "serialize", "to_dot", "to_json",
    "CapacityError", "ConstructionError", "ParseError", "SumGraphError", "UnsupportedParameterError",
    "ValidationError",
]
