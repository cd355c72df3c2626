from __future__ import annotations

from typing import List, Optional, Sequence

from ..diagram import connectivity_report, euler_characteristic
from ..errors import InvalidResult, PreconditionViolated
from ..models import ArrangementMap, BlfDiagram, Circle, FiberDescription, Fold, SurgeryDescriptor
from ..utils.logging import get_logger
from .builder import checked
from .cusps import flip
from .slides import BigonChoice, _slide, bigon_darts, r2_remove

log = get_logger(__name__)


def _in_lineage(element: str, arc: str) -> bool:
    return element == arc or element.startswith(arc + ".")


def _squeezable(d: BlfDiagram, arc: str) -> List[str]:
    """Bigons left behind by a slide of ``arc`` that are the lower side of both their arcs."""
    found = []
    for label in sorted(d.fibers):
        darts = bigon_darts(d, label)
        if darts is None or d.points_in(label):
            continue
        if any(d.folds[x].high == label for x, _ in darts):
            continue
        if any(_in_lineage(x, arc) for x, _ in darts):
            found.append(label)
    return found


def slip(
    d: BlfDiagram,
    arc: str,
    path: Sequence[str],
    bigon: Optional[BigonChoice] = None,
    check_intermediates: bool = True,
) -> BlfDiagram:
    """A long slide followed by removal of every bigon it leaves on the lower side of both arcs."""
    if not path:
        return d
    euler = euler_characteristic(d)
    result, _ = _slide(d, arc, path, bigon, check_intermediates)
    steps = 1
    log.info("slip %s: slide through %s done, %d doubles", arc, "/".join(path), result.n_double)
    while True:
        candidates = _squeezable(result, arc)
        if not candidates:
            break
        result = r2_remove(result, candidates[0])
        steps += 1
        if check_intermediates and euler_characteristic(result) != euler:
            raise InvalidResult(f"slip of {arc} changed the euler characteristic at step {steps}", element=arc)
        log.info("slip %s step %d: removed bigon %s, %d doubles left", arc, steps, candidates[0], result.n_double)
    return result


def split_fiber_start(g1: int, g2: int) -> BlfDiagram:
    """One embedded fold circle whose inner fibers split into genus g1 and g2 pieces."""
    surgery = SurgeryDescriptor.separating("c0", g1, g2)
    outer = FiberDescription.surface(g1 + g2)
    inner = FiberDescription.of({"c0a": surgery.g1, "c0b": surgery.g2})
    return BlfDiagram(
        arrangement=ArrangementMap(circles={"c": Circle("c", "I", "O")}),
        fibers={"O": outer, "I": inner},
        folds={"c": Fold("c", "O", "I", surgery)},
    )


def connect_fibers(d: BlfDiagram, check_intermediates: bool = True) -> BlfDiagram:
    """Make every fiber connected: two flips on the fold circle, then a slip across the inner face.

    The input is a single embedded fold circle whose higher face has a
    connected fiber of genus G and whose lower face has the two pieces of a
    separating surgery. The output is again one embedded circle, with fiber
    of genus G + 1 on the inside (the higher side, holding four new Lefschetz
    points) and genus G outside.
    """
    a = d.arrangement
    if a.vertices or a.edges or len(a.circles) != 1:
        raise PreconditionViolated("round image must be a single embedded circle")
    (c,) = a.circles
    fold = d.folds.get(c)
    if fold is None:
        raise PreconditionViolated(f"circle {c} has no fold data", c)
    outer, inner = d.fibers.get(fold.high), d.fibers.get(fold.low)
    if outer is None or inner is None or not outer.connected:
        raise PreconditionViolated(f"higher side {fold.high} must carry a connected fiber", c)
    if not fold.surgery.is_separating or len(inner.components) != 2:
        raise PreconditionViolated(f"lower side {fold.low} must carry the two pieces of a separating surgery", c)
    if d.points_in(fold.low):
        raise PreconditionViolated(f"lower side {fold.low} holds Lefschetz points", c)
    checked(d, "connect-fibers")

    G = outer.components[0].genus
    component = outer.ids[0]
    euler = euler_characteristic(d)
    n_points = d.n_lefschetz
    log.info("connect-fibers: outer genus %d, inner %s, euler %d", G, inner, euler)

    stage = flip(d, c, component=component, check_intermediates=check_intermediates)
    log.info("connect-fibers: first flip, %d doubles", stage.n_double)
    stage = flip(stage, c, component=component, check_intermediates=check_intermediates)
    log.info("connect-fibers: second flip, %d doubles, %d Lefschetz points", stage.n_double, stage.n_lefschetz)

    loop = SurgeryDescriptor.nonseparating(component)
    choice = BigonChoice(FiberDescription.surface(G + 1, component), loop, loop)
    result = slip(stage, c, [fold.low, fold.high], bigon=choice, check_intermediates=check_intermediates)

    ra = result.arrangement
    if ra.vertices or ra.edges or len(ra.circles) != 1:
        raise InvalidResult("connect-fibers did not end with one embedded circle", report=None)
    if not connectivity_report(result).connected:
        raise InvalidResult("connect-fibers left a disconnected fiber")
    (final,) = ra.circles.values()
    high = result.folds[final.id].high
    if result.fibers[high] != FiberDescription.surface(G + 1, component):
        raise InvalidResult(f"inner fiber is {result.fibers[high]}, expected genus {G + 1}")
    if result.n_lefschetz != n_points + 4 or len(result.points_in(high)) != 4:
        raise InvalidResult(f"expected four new Lefschetz points in {high}, found {result.n_lefschetz - n_points}")
    if euler_characteristic(result) != euler:
        raise InvalidResult(f"euler characteristic changed from {euler} to {euler_characteristic(result)}")
    log.info("connect-fibers: inner genus %d with %d Lefschetz points, euler %d", G + 1, 4, euler)
    return result
