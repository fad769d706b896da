"""Exact region crossing change computations on knot diagrams."""

from __future__ import annotations

from .diagram import (
    Crossing,
    Diagram,
    Region,
    apply_region_changes,
    change_crossings,
    connected_sum,
    crossing_change,
    from_pd,
    gen_torus,
    is_reduced,
    mirror,
    parse_pd,
    unknot,
)
from .goeritz import determinant, goeritz_matrices, mg2, smith_normal_form
from .invariants import LaurentPoly, is_unknot, jones_normalized, kauffman_bracket, writhe
from .regions import checkerboard_shade, incidence_system, min_cost_in_coset, theorem1_reduce
from .search import bound_bracket, mri_of_diagram, reg_of_diagram, verify_theorems
from .table import KnotRecord, batch_verify, ingest_csv

__all__ = [
    "Crossing",
    "Diagram",
    "KnotRecord",
    "LaurentPoly",
    "Region",
    "apply_region_changes",
    "batch_verify",
    "bound_bracket",
    "change_crossings",
    "checkerboard_shade",
    "connected_sum",
    "crossing_change",
    "determinant",
    "from_pd",
    "gen_torus",
    "goeritz_matrices",
    "incidence_system",
    "ingest_csv",
    "is_reduced",
    "is_unknot",
    "jones_normalized",
    "kauffman_bracket",
    "mg2",
    "min_cost_in_coset",
    "mirror",
    "mri_of_diagram",
    "parse_pd",
    "reg_of_diagram",
    "smith_normal_form",
    "theorem1_reduce",
    "unknot",
    "verify_theorems",
    "writhe",
]
