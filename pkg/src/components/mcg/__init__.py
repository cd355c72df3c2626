"""Dehn twists acting on H_1 of a closed surface.

Matrices are numpy object arrays so the arithmetic stays exact for long words.
"""

from .twists import (
    symplectic_form,
    intersection_pairing,
    twist_matrix,
    compose_word,
    inverse_word,
    round_handle_check,
    is_symplectic,
    apply_matrix,
    as_rows,
)

__all__ = [
    "symplectic_form",
    "intersection_pairing",
    "twist_matrix",
    "compose_word",
    "inverse_word",
    "round_handle_check",
    "is_symplectic",
    "apply_matrix",
    "as_rows",
]
