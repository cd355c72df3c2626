from __future__ import annotations

from ..diagram import euler_characteristic
from ..errors import NoSections, NotAPencil
from ..models import BlfDiagram
from ..utils.logging import get_logger

log = get_logger(__name__)


def blow_up(d: BlfDiagram) -> BlfDiagram:
    """Blow up every base point; each exceptional sphere becomes a section."""
    if d.basepoints <= 0:
        raise NotAPencil("diagram has no base points")
    log.info("blow-up: %d base points -> %d sections", d.basepoints, d.sections + d.basepoints)
    return d.with_changes(basepoints=0, sections=d.sections + d.basepoints)


def blow_down(d: BlfDiagram) -> BlfDiagram:
    if d.sections <= 0:
        raise NoSections("diagram has no section markers")
    log.info("blow-down: %d sections -> %d base points", d.sections, d.basepoints + d.sections)
    return d.with_changes(basepoints=d.basepoints + d.sections, sections=0)


def pencil_euler(d: BlfDiagram) -> int:
    """Euler characteristic of the pencil's total space, before blowing up."""
    m = d.basepoints
    return euler_characteristic(blow_up(d)) - m
