"""Exact invariants of tame cyclic quotient singularities and degenerating curves."""

from ._tamefiber import (
    FiberGraph,
    TamefiberError,
    catalog_ids,
    compute_jumps,
    h1_character,
    principal_lcm,
    resolve,
    self_intersections,
    total_trace,
    trace_closed_form,
    trace_polynomial,
)

__all__ = [
    "FiberGraph",
    "TamefiberError",
    "catalog_ids",
    "compute_jumps",
    "h1_character",
    "principal_lcm",
    "resolve",
    "self_intersections",
    "total_trace",
    "trace_closed_form",
    "trace_polynomial",
]
