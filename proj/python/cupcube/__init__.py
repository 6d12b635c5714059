"""Exact trilinear forms of link diagrams (python facade over _cupcube)."""

from _cupcube import (
    ComputeError,
    Diagram,
    InputError,
    branched_form,
    census,
    coloring_counts,
    oracle_check,
    parse_pd,
    pd_isomorphic,
    table_check,
)

__all__ = [
    "ComputeError",
    "Diagram",
    "InputError",
    "branched_form",
    "census",
    "coloring_counts",
    "oracle_check",
    "parse_pd",
    "pd_isomorphic",
    "table_check",
]
