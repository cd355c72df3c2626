"""Diagram moves. Every move returns a new, validated diagram."""

from .slides import BigonChoice, slide_arc, r2_remove, push_lefschetz
from .cusps import cusp_modify, flip, flip_intermediate
from .pipeline import slip, connect_fibers, split_fiber_start
from .pencil import blow_up, blow_down, pencil_euler
from .script import run_script, apply_invocation

__all__ = [
    "BigonChoice",
    "slide_arc",
    "r2_remove",
    "push_lefschetz",
    "cusp_modify",
    "flip",
    "flip_intermediate",
    "slip",
    "connect_fibers",
    "split_fiber_start",
    "blow_up",
    "blow_down",
    "pencil_euler",
    "run_script",
    "apply_invocation",
]
