"""Fiber bookkeeping: Euler characteristics and fiberwise handle attachments."""

from .surgery import (
    euler_of_fiber,
    is_applicable,
    apply_surgery,
    invert_surgery,
    reverse_crossing,
    split_ids,
    is_null_homotopic,
)

__all__ = [
    "euler_of_fiber",
    "is_applicable",
    "apply_surgery",
    "invert_surgery",
    "reverse_crossing",
    "split_ids",
    "is_null_homotopic",
]
