"""Cusp modification and the flip.

The flip kinks an arc into a loop poking into the arc's higher face. With w
the new double point and the arc walked with its higher face H on the left:

    before -> w:2,  loop w:0 -> w:1 (interior N on its left),  w:3 -> after
    quadrants at w: q0 = N, q1 = H, q2 = low face, q3 = H
"""
from __future__ import annotations

from typing import Optional

from ..diagram import validate
from ..diagram.arrangement import edge_at
from ..errors import InvalidResult, NotACusp, PreconditionViolated, UnknownElement
from ..models import (
    BlfDiagram,
    End,
    FiberDescription,
    HomologyClass,
    LefschetzPoint,
    SurgeryDescriptor,
    Vertex,
    VertexKind,
)
from ..utils.logging import get_logger
from .builder import DiagramBuilder, Piece, checked
from .slides import _dart_with_left, _ends

log = get_logger(__name__)


def cusp_modify(
    d: BlfDiagram,
    vertex: str,
    face: Optional[str] = None,
    component: Optional[str] = None,
    cycle: Optional[HomologyClass] = None,
) -> BlfDiagram:
    """Trade a cusp for a Lefschetz point.

    The two arcs at the cusp merge into one fold arc. The new point defaults
    to the cusp's higher face, on the component its arcs collapse circles of,
    with vanishing class a1 (empty on a sphere).
    """
    a = d.arrangement
    v = a.vertices.get(vertex)
    if v is None:
        raise UnknownElement(f"no vertex {vertex}", vertex)
    if v.kind != VertexKind.CUSP:
        raise NotACusp(f"{vertex} is a {v.kind.value} vertex", vertex)

    fold = d.folds[edge_at(a, vertex, 0)]
    face = face or fold.high
    component = component or fold.surgery.component
    fiber = d.fibers.get(face)
    genus = fiber.genus_of(component) if fiber is not None else None
    if genus is None:
        raise InvalidResult(f"no component {component} over face {face}", element=vertex)
    if cycle is None:
        cycle = HomologyClass.basis(genus, 0) if genus else HomologyClass(0, ())

    b = DiagramBuilder(d)
    b.merge_through({vertex}, {(vertex, 0): (vertex, 1), (vertex, 1): (vertex, 0)})
    pid = b.fresh_point()
    b.points[pid] = LefschetzPoint(pid, face, component, b.next_order(face), cycle)
    result = checked(b.build(), "cusp")
    log.info("cusp %s traded for Lefschetz point %s in %s (cusps %d -> %d)",
             vertex, pid, face, d.n_cusp, result.n_cusp)
    return result


def flip_intermediate(
    d: BlfDiagram,
    arc: str,
    component: Optional[str] = None,
    fiber: Optional[FiberDescription] = None,
) -> BlfDiagram:
    """The generic-map stage of a flip: a kink whose loop carries two cusps."""
    a = d.arrangement
    if not a.has_element(arc):
        raise UnknownElement(f"no arc {arc}", arc)
    fold = d.folds[arc]
    H, L = fold.high, fold.low
    high_fiber = d.fibers[H]
    if component is None:
        if not high_fiber.connected:
            raise PreconditionViolated(f"fiber {high_fiber} over {H} is disconnected; name a component", arc)
        component = high_fiber.ids[0]
    if high_fiber.genus_of(component) is None:
        raise PreconditionViolated(f"component {component} not in fiber {high_fiber}", arc)
    if fiber is None:
        genera = high_fiber.genera
        genera[component] += 1
        fiber = FiberDescription.of(genera)

    dx = _dart_with_left(a, arc, H)
    b = DiagramBuilder(d)
    N = b.fresh_label(H)
    b.fibers[N] = fiber
    w, u1, u2 = (_new_vertex(b, kind) for kind in (VertexKind.DOUBLE, VertexKind.CUSP, VertexKind.CUSP))

    sx = fold.surgery
    loop = SurgeryDescriptor.nonseparating(component)
    pieces = [
        Piece("loop1", End(w, 0), End(u1, 0), N, H, N, loop),
        Piece("loop2", End(u1, 1), End(u2, 0), N, H, N, loop),
        Piece("loop3", End(u2, 1), End(w, 1), N, H, N, loop),
    ]
    if arc in a.circles:
        pieces.insert(0, Piece("rest", End(w, 3), End(w, 2), H, L, H, sx))
        b.install(arc, pieces, dx[1], rest="rest")
    else:
        start, end = _ends(a, dx)
        pieces.insert(0, Piece("before", start, End(w, 2), H, L, H, sx))
        pieces.append(Piece("after", End(w, 3), end, H, L, H, sx))
        b.install(arc, pieces, dx[1])
    log.debug("kinked %s at %s with cusps %s, %s; loop face %s (%s)", arc, w, u1, u2, N, fiber)
    return b.build()


def _new_vertex(b: DiagramBuilder, kind: VertexKind) -> str:
    vid = b.fresh_vertex()
    b.vertices[vid] = Vertex(vid, kind)
    return vid


def flip(
    d: BlfDiagram,
    arc: str,
    component: Optional[str] = None,
    fiber: Optional[FiberDescription] = None,
    check_intermediates: bool = True,
) -> BlfDiagram:
    """Kink ``arc`` into a loop and trade the loop's two cusps for Lefschetz points.

    Net effect: one more double point and two more Lefschetz points, both in
    the loop's interior.
    """
    stage = flip_intermediate(d, arc, component, fiber)
    if check_intermediates:
        report = validate(stage)
        if not report.ok:
            raise InvalidResult(f"flip of {arc} gives an invalid generic map", report=report, element=arc)
    cusps = sorted(v for v in stage.arrangement.vertices if v not in d.arrangement.vertices
                   and stage.arrangement.vertices[v].kind == VertexKind.CUSP)
    result = stage
    for u in cusps:
        result = cusp_modify(result, u)
    log.info("flip %s: doubles %d -> %d, lefschetz %d -> %d",
             arc, d.n_double, result.n_double, d.n_lefschetz, result.n_lefschetz)
    return result
