"""Toric log del Pezzo surfaces with exactly one singularity."""

import json

from ._core import (
    ConsistencyError,
    InvalidInput,
    SingularityCountError,
    canonical_polygon,
    checked_q2_polygon,
    classify,
    enumerate_one_singularity,
    index_parity_check,
    is_ldp,
    normalize_polygon,
    quadrics,
    span_membership,
    table_cell,
    table_formulas,
)
from ._core import analyze_json as _analyze_json


def analyze(vertices, embedding=True):
    """Full report for an LDP-polygon as a dict; rationals stay "num/den" strings."""
    return json.loads(_analyze_json(vertices, embedding))


__all__ = [
    "ConsistencyError",
    "InvalidInput",
    "SingularityCountError",
    "analyze",
    "canonical_polygon",
    "checked_q2_polygon",
    "classify",
    "enumerate_one_singularity",
    "index_parity_check",
    "is_ldp",
    "normalize_polygon",
    "quadrics",
    "span_membership",
    "table_cell",
    "table_formulas",
]
