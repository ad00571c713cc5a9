"""Exact-arithmetic polytope graphs, diameters, and diameter-extremal constructions."""

__version__ = "0.1.0"

from .polyhedron import (
    Disconnected,
    GeometryError,
    HPolyhedron,
    Incidence,
    Infeasible,
    NotPointed,
    PolyGraph,
    Unbounded,
    VPolyhedron,
    classify,
    dual_graph,
    incidence,
    polar,
    skeleton_graph,
)
from .dd import dimension, hrep_to_vrep, reduce_to_full_dim, vrep_to_hrep
from .ratlin import QMatrix, Rational, parse_rational, rank, solve_affine

__all__ = [
    "Disconnected",
    "GeometryError",
    "HPolyhedron",
    "Incidence",
    "Infeasible",
    "NotPointed",
    "PolyGraph",
    "QMatrix",
    "Rational",
    "Unbounded",
    "VPolyhedron",
    "classify",
    "dimension",
    "dual_graph",
    "hrep_to_vrep",
    "incidence",
    "parse_rational",
    "polar",
    "rank",
    "reduce_to_full_dim",
    "skeleton_graph",
    "solve_affine",
    "vrep_to_hrep",
]
