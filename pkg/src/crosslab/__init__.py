"""Curves and arcs on a square-tiled pair of pants: exact intersection
numbers, extremal low-crossing families, and crossing-bound verification."""

from crosslab.pants_complex import (
    ArcClass,
    CurveClass,
    canonical_cyclic,
    enumerate_arcs,
    enumerate_curves,
    is_primitive,
    make_arc,
    make_curve,
    turns_to_edges,
)

__all__ = [
    "ArcClass",
    "CurveClass",
    "canonical_cyclic",
    "enumerate_arcs",
    "enumerate_curves",
    "is_primitive",
    "make_arc",
    "make_curve",
    "turns_to_edges",
]
