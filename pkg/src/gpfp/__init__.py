"""Exact computations on b-parking-function polytopes."""

from .core import (
    BudgetExceeded,
    BVector,
    DimensionMismatch,
    GPFPError,
    NotAVertex,
    VertexDescriptor,
    enumerate_parking_functions,
    is_parking_function,
    make_vertex,
    y_point,
)
from .counting import IntPolynomial, binomial_eulerian, eulerian, f_vector, h_polynomial
from .polytope import (
    contains,
    edge_graph,
    facets,
    facets_containing_vertex,
    neighbors,
    tangent_cone_generators,
    vertex_count,
    vertex_points,
    vertices,
)

__version__ = "0.1.0"

__all__ = [
    "BVector",
    "BudgetExceeded",
    "DimensionMismatch",
    "GPFPError",
    "IntPolynomial",
    "NotAVertex",
    "VertexDescriptor",
    "binomial_eulerian",
    "contains",
    "edge_graph",
    "enumerate_parking_functions",
    "eulerian",
    "f_vector",
    "facets",
    "facets_containing_vertex",
    "h_polynomial",
    "is_parking_function",
    "make_vertex",
    "neighbors",
    "tangent_cone_generators",
    "vertex_count",
    "vertex_points",
    "vertices",
    "y_point",
]
