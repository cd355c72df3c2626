from __future__ import annotations

from typing import Callable, List, Optional, Tuple

from ..blf_io.format import parse_cycle, parse_fiber, parse_surgery
from ..config import Settings, load_settings
from ..errors import BlfError, BlfSyntaxError, PreconditionViolated
from ..models import BlfDiagram, MoveInvocation, MoveScript
from ..utils.logging import get_logger
from .cusps import cusp_modify, flip
from .pencil import blow_down, blow_up
from .pipeline import connect_fibers, slip
from .slides import BigonChoice, push_lefschetz, r2_remove, slide_arc

log = get_logger(__name__)


def _value(inv: MoveInvocation, key: str, reader: Callable):
    raw = inv.option(key)
    if raw is None:
        return None
    try:
        return reader(raw)
    except ValueError as e:
        raise BlfSyntaxError(f"{key}={raw}: {e}", inv.line, 0) from None


def _bigon(inv: MoveInvocation) -> Optional[BigonChoice]:
    choice = BigonChoice(
        _value(inv, "bigon", parse_fiber),
        _value(inv, "xsurgery", parse_surgery),
        _value(inv, "ysurgery", parse_surgery),
    )
    return None if choice == BigonChoice() else choice


def apply_invocation(d: BlfDiagram, inv: MoveInvocation, settings: Settings) -> BlfDiagram:
    check = settings.check_intermediates
    if inv.name == "slide":
        return slide_arc(d, inv.args[0], list(inv.args[1:]), _bigon(inv), check)
    if inv.name == "slip":
        return slip(d, inv.args[0], list(inv.args[1:]), _bigon(inv), check)
    if inv.name == "r2":
        return r2_remove(d, inv.args[0])
    if inv.name == "push":
        return push_lefschetz(d, inv.args[0], inv.args[1], inv.option("component"),
                              _value(inv, "cycle", parse_cycle))
    if inv.name == "cusp":
        return cusp_modify(d, inv.args[0], inv.option("face"), inv.option("component"),
                           _value(inv, "cycle", parse_cycle))
    if inv.name == "flip":
        return flip(d, inv.args[0], inv.option("component"), _value(inv, "fiber", parse_fiber), check)
    if inv.name == "connect-fibers":
        return connect_fibers(d, check)
    if inv.name == "blow-up":
        return blow_up(d)
    if inv.name == "blow-down":
        return blow_down(d)
    raise BlfSyntaxError(f"unknown move {inv.name!r}", inv.line, 0)


def run_script(
    d: BlfDiagram,
    script: MoveScript,
    settings: Optional[Settings] = None,
) -> Tuple[BlfDiagram, List[str]]:
    """Apply every invocation in order. Returns the final diagram and one log line per move.

    A failing move raises its error with the script line attached as ``line``.
    """
    settings = settings or load_settings()
    if len(script.invocations) > settings.max_script_steps:
        raise PreconditionViolated(
            f"script has {len(script.invocations)} moves, limit is {settings.max_script_steps}")
    trail: List[str] = []
    for inv in script.invocations:
        try:
            d = apply_invocation(d, inv, settings)
        except BlfError as e:
            if not hasattr(e, "line"):
                e.line = inv.line
            raise
        trail.append(f"{inv.line}: {inv.name} {' '.join(inv.args)} -> "
                     f"{d.n_double} doubles, {d.n_cusp} cusps, {d.n_lefschetz} Lefschetz")
        log.info("script line %d: %s applied", inv.line, inv.name)
    return d, trail
