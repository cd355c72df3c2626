"""Arc slides, Reidemeister-II removal and Lefschetz pushes.

A slide step is a finger push: the slid arc x enters the face A on its
lower side, crosses an arc y separating A from B and pokes into B. This adds
two double points p, q and a bigon D between the tip of x and the crossed
part of y.

    Slots at p (ccw): 0 y-middle, 1 x-tip, 2 y beyond, 3 x before
    Slots at q (ccw): 0 y before, 1 x-tip, 2 y-middle, 3 x after

When the face A is an empty triangle with the tip as one side and B is the
quadrant opposite it at the far corner, the step is a Reidemeister III
move instead: the tip passes over the corner and no crossings are added.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

from ..diagram import circuits
from ..diagram.arrangement import edge_at, quadrant_label
from ..errors import (
    ArrowViolation,
    IndexViolation,
    LiftMismatch,
    NotAdjacent,
    NotApplicable,
    PreconditionViolated,
    UnknownElement,
    InvalidResult,
)
from ..fiber import apply_surgery, invert_surgery, split_ids
from ..models import (
    ArrangementMap,
    BlfDiagram,
    Dart,
    End,
    FiberDescription,
    HomologyClass,
    SurgeryDescriptor,
    VertexKind,
    Vertex,
)
from ..utils.logging import get_logger
from .builder import DiagramBuilder, Piece, checked

log = get_logger(__name__)


@dataclass(frozen=True)
class BigonChoice:
    """Data for a bigon that is the higher side of both its arcs.

    Such a bigon cannot be derived from its neighbours, so the caller names
    its fiber and may override the surgeries of its two sides.
    """
    fiber: Optional[FiberDescription] = None
    x_surgery: Optional[SurgeryDescriptor] = None
    y_surgery: Optional[SurgeryDescriptor] = None


def _dart_with_left(a: ArrangementMap, element: str, label: str) -> Dart:
    return (element, 1) if a.left_of((element, 1)) == label else (element, -1)


def _ends(a: ArrangementMap, dart: Dart) -> Tuple[End, End]:
    e = a.edges[dart[0]]
    return (e.tail, e.head) if dart[1] > 0 else (e.head, e.tail)


def separating_element(a: ArrangementMap, first: str, second: str, exclude: Sequence[str] = ()) -> Optional[str]:
    for element in a.element_ids:
        if element not in exclude and set(a.sides(element)) == {first, second}:
            return element
    return None


def _push(d: BlfDiagram, x: str, y: str, bigon: Optional[BigonChoice]) -> Tuple[BlfDiagram, str]:
    """One finger push of x across y. Returns the new diagram and the id of the new tip."""
    a = d.arrangement
    fx, fy = d.folds[x], d.folds[y]
    A = fx.low
    H = fx.high
    B = a.sides(y)[1] if a.sides(y)[0] == A else a.sides(y)[0]
    dx = _dart_with_left(a, x, A)
    dy = _dart_with_left(a, y, A)

    b = DiagramBuilder(d)
    D = b.fresh_label(B)
    try:
        if fy.high == A:
            fiber_d = apply_surgery(d.fibers[H], fy.surgery)
            x_mid, y_mid = fx.surgery, fy.surgery
        else:
            choice = bigon or BigonChoice()
            fiber_d = choice.fiber or invert_surgery(d.fibers[B], fx.surgery)
            x_mid = choice.x_surgery or fx.surgery
            y_mid = choice.y_surgery or fy.surgery
    except NotApplicable as e:
        raise InvalidResult(f"no fiber for the bigon crossing {y}: {e.message}", element=y) from e
    b.fibers[D] = fiber_d

    p = b.fresh_vertex()
    b.vertices[p] = Vertex(p, VertexKind.DOUBLE)
    q = b.fresh_vertex()
    b.vertices[q] = Vertex(q, VertexKind.DOUBLE)

    sx = fx.surgery
    if x in a.circles:
        xs = [Piece("rest", End(q, 3), End(p, 3), A, H, H, sx)]
    else:
        start, end = _ends(a, dx)
        xs = [Piece("before", start, End(p, 3), A, H, H, sx), Piece("after", End(q, 3), end, A, H, H, sx)]
    xs.insert(1, Piece("tip", End(p, 1), End(q, 1), B, D, D, x_mid))

    y_high_left = fy.high == A
    def y_piece(role, tail, head, left, right, surgery):
        return Piece(role, tail, head, left, right, left if y_high_left else right, surgery)

    sy = fy.surgery
    if y in a.circles:
        ys = [y_piece("rest", End(p, 2), End(q, 0), A, B, sy)]
    else:
        start, end = _ends(a, dy)
        ys = [y_piece("before", start, End(q, 0), A, B, sy), y_piece("after", End(p, 2), end, A, B, sy)]
    ys.insert(1, y_piece("middle", End(q, 2), End(p, 0), H, D, y_mid))

    x_ids = b.install(x, xs, dx[1], rest="rest" if x in a.circles else None)
    b.install(y, ys, dy[1], rest="rest" if y in a.circles else None)

    if x not in a.circles:
        _split_face(b, A, x_ids["before"], x_ids["after"])

    log.debug("pushed %s across %s into %s: bigon %s (%s)", x, y, B, D, fiber_d)
    return b.build(), x_ids["tip"]


def _split_face(b: DiagramBuilder, A: str, before: str, after: str) -> None:
    """Give the far side of a split face its own label."""
    a = b.arrangement()
    d1 = _dart_with_left(a, before, A)
    d2 = _dart_with_left(a, after, A)
    traced = circuits(a)
    c1 = next(c for c in traced if d1 in c)
    c2 = next(c for c in traced if d2 in c)
    if c1 == c2:
        return
    label = b.fresh_label(A)
    b.fibers[label] = b.fibers[A]
    for dart in c2:
        b.set_side(dart, label)


def _triangle(d: BlfDiagram, tip: str, here: str) -> Optional[Tuple[Dart, Dart, Dart]]:
    """Darts (y, x, z) around face ``here`` if it is a triangle with ``tip`` as side x.

    y leaves the corner v opposite the tip and z returns to it; the three
    corners are distinct double points.
    """
    a = d.arrangement
    found = [c for c in circuits(a) if a.left_of(c[0]) == here]
    if len(found) != 1 or len(found[0]) != 3:
        return None
    c = found[0]
    hits = [i for i, dart in enumerate(c) if dart[0] == tip]
    if len(hits) != 1:
        return None
    i = hits[0]
    darts = (c[i - 1], c[i], c[(i + 1) % 3])
    if len({dart[0] for dart in darts}) != 3 or any(dart[0] not in a.edges for dart in darts):
        return None
    corners = {_ends(a, dart)[0].vertex for dart in darts}
    if len(corners) != 3 or any(a.vertices[v].kind != VertexKind.DOUBLE for v in corners):
        return None
    return darts


def _opposite(d: BlfDiagram, darts: Tuple[Dart, Dart, Dart]) -> str:
    v = _ends(d.arrangement, darts[0])[0]
    return quadrant_label(d.arrangement, v.vertex, (v.slot + 2) % 4)


def _triangle_fiber(b: DiagramBuilder, label: str, pieces: Sequence[Piece]) -> FiberDescription:
    # prefer a side where the new face is lower: apply_surgery is unambiguous
    for piece in sorted(pieces, key=lambda p: p.high == label):
        try:
            if piece.high == label:
                return invert_surgery(b.fibers[piece.low], piece.surgery)
            return apply_surgery(b.fibers[piece.high], piece.surgery)
        except NotApplicable:
            continue
    raise InvalidResult(f"no fiber fits the new triangle {label}", element=label)


def _pass_vertex(d: BlfDiagram, darts: Tuple[Dart, Dart, Dart]) -> BlfDiagram:
    """Move side x of a triangle across the opposite corner v (Reidemeister III).

    Before, with y leaving v at slot t and z entering it at t+1:

        v:t -> p:a (y),  p:a-1 -> q:b (x),  q:b-1 -> v:t+1 (z)

    After, p and q sit on the far branches of y and z and the triangle T'
    lies in what was the quadrant opposite T:

        v:t+2 -> p:0 (y),  p:3 -> q:1 (x),  q:0 -> v:t+3 (z)

    Every face but the triangle keeps its label; edges leaving the picture
    are reattached slot by slot.
    """
    a = d.arrangement
    dy, dx, dz = darts
    y, x, z = dy[0], dx[0], dz[0]
    (v, t), (p, pa) = ((e.vertex, e.slot) for e in _ends(a, dy))
    far = _ends(a, dx)[1]
    q, qb = far.vertex, far.slot
    T = a.left_of(dx)
    if d.points_in(T):
        raise PreconditionViolated(f"triangle {T} contains Lefschetz points", T)

    W = quadrant_label(a, v, (t + 2) % 4)
    Yf = quadrant_label(a, p, (pa + 1) % 4)
    Zf = quadrant_label(a, q, (qb + 1) % 4)
    fx, fy, fz = d.folds[x], d.folds[y], d.folds[z]
    y_far = d.folds[edge_at(a, p, (pa + 2) % 4)]
    z_far = d.folds[edge_at(a, q, (qb + 1) % 4)]

    moved = {
        (v, (t + 2) % 4): End(p, 2),
        (v, (t + 3) % 4): End(q, 2),
        (p, (pa + 1) % 4): End(q, 3),
        (p, (pa + 2) % 4): End(v, t),
        (q, (qb + 1) % 4): End(v, (t + 1) % 4),
        (q, (qb + 2) % 4): End(p, 1),
    }

    b = DiagramBuilder(d)
    for element in (y, x, z):
        b.remove_element(element)
    b.fibers.pop(T, None)
    T2 = b.fresh_label(T)
    for eid, e in list(b.edges.items()):
        tail = moved.get((e.tail.vertex, e.tail.slot), e.tail)
        head = moved.get((e.head.vertex, e.head.slot), e.head)
        if (tail, head) != (e.tail, e.head):
            b.edges[eid] = replace(e, tail=tail, head=head)

    pieces = {
        y: Piece("y", End(v, (t + 2) % 4), End(p, 0), T2, Zf, Zf if fy.high == T else T2, y_far.surgery),
        z: Piece("z", End(q, 0), End(v, (t + 3) % 4), T2, Yf, Yf if fz.high == T else T2, z_far.surgery),
        x: Piece("x", End(p, 3), End(q, 1), T2, W, W if fx.high == T else T2, fx.surgery),
    }
    b.fibers[T2] = _triangle_fiber(b, T2, list(pieces.values()))
    for eid, piece in pieces.items():
        b.add_edge(eid, piece)
    log.debug("moved %s across %s: triangle %s -> %s (%s)", x, v, T, T2, b.fibers[T2])
    return b.build()


def _slide(
    d: BlfDiagram,
    arc: str,
    path: Sequence[str],
    bigon: Optional[BigonChoice] = None,
    check_intermediates: bool = True,
) -> Tuple[BlfDiagram, str]:
    if not d.arrangement.has_element(arc):
        raise UnknownElement(f"no arc {arc}", arc)
    if not path:
        return d, arc
    fold = d.folds[arc]
    if path[0] != fold.low:
        raise ArrowViolation(f"{arc} points from {fold.high} into {fold.low}; a slide must start in {fold.low}", arc)

    tip = arc
    for index in range(1, len(path)):
        here, there = path[index - 1], path[index]
        corner = _triangle(d, tip, here) if d.folds[tip].low == here else None
        if corner is not None and _opposite(d, corner) == there:
            d = _pass_vertex(d, corner)
        else:
            y = separating_element(d.arrangement, here, there, exclude=(tip,))
            if y is None:
                raise NotAdjacent(f"no arc separates {here} from {there}", there)
            d, tip = _push(d, tip, y, bigon)
        if check_intermediates or index == len(path) - 1:
            checked(d, "slide")
    return d, tip


def slide_arc(
    d: BlfDiagram,
    arc: str,
    path: Sequence[str],
    bigon: Optional[BigonChoice] = None,
    check_intermediates: bool = True,
) -> BlfDiagram:
    """Slide ``arc`` in the direction of its arrow through the faces of ``path``.

    ``path[0]`` is the arc's lower face; every later face is entered through
    the lowest-id arc separating it from the previous one.
    """
    before = (d.n_double, len(d.fibers))
    result, tip = _slide(d, arc, path, bigon, check_intermediates)
    log.info("slide %s through %s: doubles %d -> %d, faces %d -> %d (tip %s)",
             arc, "/".join(path), before[0], result.n_double, before[1], len(result.fibers), tip)
    return result


# ---------------------------------------------------------------------------
# Reidemeister II
# ---------------------------------------------------------------------------


def bigon_darts(d: BlfDiagram, label: str) -> Optional[Tuple[Dart, Dart]]:
    """The two darts bounding face ``label`` if it is a bigon between distinct double points."""
    a = d.arrangement
    found = [c for c in circuits(a) if a.left_of(c[0]) == label]
    if len(found) != 1 or len(found[0]) != 2:
        return None
    d1, d2 = found[0]
    if d1[0] == d2[0] or d1[0] not in a.edges or d2[0] not in a.edges:
        return None
    u = _ends(a, d1)[0].vertex
    w = _ends(a, d1)[1].vertex
    if u == w:
        return None
    if any(a.vertices[v].kind != VertexKind.DOUBLE for v in (u, w)):
        return None
    return d1, d2


def r2_remove(d: BlfDiagram, bigon: str) -> BlfDiagram:
    """Remove a bigon face and its two double points."""
    a = d.arrangement
    if bigon not in a.labels:
        raise UnknownElement(f"no face {bigon}", bigon)
    darts = bigon_darts(d, bigon)
    if darts is None:
        raise PreconditionViolated(f"face {bigon} is not a bigon between two double points", bigon)
    if d.points_in(bigon):
        raise PreconditionViolated(f"bigon {bigon} contains Lefschetz points", bigon)
    d1, d2 = darts
    if d.folds[d1[0]].high == bigon and d.folds[d2[0]].high == bigon:
        raise IndexViolation(f"bigon {bigon} is the higher side of both {d1[0]} and {d2[0]}", bigon)

    u_start, w_arrive = _ends(a, d1)
    w_start, u_arrive = _ends(a, d2)
    u, w = u_start.vertex, w_arrive.vertex
    # continuing slots sit opposite the bigon's own slots
    joints = {}
    for near, far in ((u_start, w_arrive), (w_start, u_arrive)):
        x = (near.vertex, (near.slot + 2) % 4)
        y = (far.vertex, (far.slot + 2) % 4)
        joints[x] = y
        joints[y] = x

    at_w = quadrant_label(a, w, (w_arrive.slot + 1) % 4)
    at_u = quadrant_label(a, u, (u_arrive.slot + 1) % 4)

    b = DiagramBuilder(d)
    keep, gone = sorted((at_u, at_w))
    b.merge_labels(keep, gone)
    b.remove_element(d1[0])
    b.remove_element(d2[0])
    b.fibers.pop(bigon, None)
    merged = b.merge_through({u, w}, joints)
    result = checked(b.build(), "r2")
    log.info("r2 removed bigon %s with %s, %s; merged %s", bigon, u, w, ", ".join(merged))
    return result


# ---------------------------------------------------------------------------
# Lefschetz pushes
# ---------------------------------------------------------------------------


def lifted_component(surgery: SurgeryDescriptor, component: str) -> str:
    """Component on the higher side that ``component`` on the lower side comes from."""
    if surgery.is_separating and component in split_ids(surgery.component):
        return surgery.component
    return component


def push_lefschetz(
    d: BlfDiagram,
    point: str,
    edge: str,
    component: str,
    cycle: HomologyClass,
) -> BlfDiagram:
    """Move a Lefschetz point across a fold onto its higher side with a lifted vanishing class."""
    p = d.point(point)
    if p is None:
        raise UnknownElement(f"no Lefschetz point {point}", point)
    if not d.arrangement.has_element(edge):
        raise UnknownElement(f"no arc {edge}", edge)
    fold = d.folds[edge]
    if p.face != fold.low:
        raise NotAdjacent(f"{point} lies in {p.face}, not on the lower side {fold.low} of {edge}", point)

    expected = lifted_component(fold.surgery, p.component)
    if component != expected:
        raise LiftMismatch(f"{p.component} lifts across {fold.surgery} to {expected}, not {component}", point)
    genus = d.fibers[fold.high].genus_of(component)
    if genus is None or cycle.genus != genus:
        raise LiftMismatch(f"lifted class has genus {cycle.genus}, {component} has genus {genus}", point)

    b = DiagramBuilder(d)
    b.points[point] = replace(p, face=fold.high, component=component, cycle=cycle, order=b.next_order(fold.high))
    result = checked(b.build(), "push")
    log.info("pushed %s across %s into %s", point, edge, fold.high)
    return result
