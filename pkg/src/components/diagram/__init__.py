"""Diagram structure: face tracing, validation and invariants of the total space."""

from .arrangement import trace_faces, circuits, components, next_dart, quadrant_label, edge_at
from .validation import validate, high_quadrant, face_labels, counts
from .invariants import (
    stratum_fiber_euler,
    euler_characteristic,
    parity_check,
    connectivity_report,
    stratum_table,
    thom_reduction_target,
    lefschetz_word,
    check_monodromy,
    monodromy_image,
    round_handle_report,
)

__all__ = [
    "trace_faces",
    "circuits",
    "components",
    "next_dart",
    "quadrant_label",
    "edge_at",
    "validate",
    "high_quadrant",
    "face_labels",
    "counts",
    "stratum_fiber_euler",
    "euler_characteristic",
    "parity_check",
    "connectivity_report",
    "stratum_table",
    "thom_reduction_target",
    "lefschetz_word",
    "check_monodromy",
    "monodromy_image",
    "round_handle_report",
]
