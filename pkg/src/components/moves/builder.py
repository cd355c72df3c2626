"""Mutable working copy of a diagram used while a move rewrites it."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..diagram import validate
from ..errors import InvalidResult
from ..models import (
    ArrangementMap,
    BlfDiagram,
    Circle,
    Dart,
    Edge,
    End,
    FiberDescription,
    Fold,
    LefschetzPoint,
    SurgeryDescriptor,
    Vertex,
)
from ..utils.logging import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class Piece:
    """New fold edge before it gets an id."""
    role: str
    tail: End
    head: End
    left: str
    right: str
    high: str
    surgery: SurgeryDescriptor

    def reversed(self) -> "Piece":
        return replace(self, tail=self.head, head=self.tail, left=self.right, right=self.left)

    @property
    def low(self) -> str:
        return self.right if self.high == self.left else self.left


def fresh_name(stem: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    k = 1
    while f"{stem}.{k}" in taken:
        k += 1
    return f"{stem}.{k}"


class DiagramBuilder:
    """Working copy of a BlfDiagram; ``build`` freezes it again."""

    def __init__(self, d: BlfDiagram):
        a = d.arrangement
        self.vertices: Dict[str, Vertex] = dict(a.vertices)
        self.edges: Dict[str, Edge] = dict(a.edges)
        self.circles: Dict[str, Circle] = dict(a.circles)
        self.fibers: Dict[str, FiberDescription] = dict(d.fibers)
        self.folds: Dict[str, Fold] = dict(d.folds)
        self.points: Dict[str, LefschetzPoint] = {p.id: p for p in d.lefschetz}
        self.basepoints = d.basepoints
        self.sections = d.sections

    def arrangement(self) -> ArrangementMap:
        return ArrangementMap(dict(self.vertices), dict(self.edges), dict(self.circles))

    def build(self) -> BlfDiagram:
        return BlfDiagram(
            arrangement=self.arrangement(),
            fibers=dict(self.fibers),
            folds=dict(self.folds),
            lefschetz=tuple(self.points.values()),
            basepoints=self.basepoints,
            sections=self.sections,
        )

    # ids -----------------------------------------------------------------

    def labels(self) -> Set[str]:
        found = set(self.fibers)
        for e in self.edges.values():
            found.update((e.left, e.right))
        for c in self.circles.values():
            found.update((c.inside, c.outside))
        return found

    def fresh_element(self, stem: str) -> str:
        return fresh_name(stem, set(self.edges) | set(self.circles) | set(self.folds))

    def fresh_vertex(self, stem: str = "v") -> str:
        return fresh_name(stem, self.vertices)

    def fresh_label(self, stem: str) -> str:
        return fresh_name(stem, self.labels())

    def fresh_point(self, stem: str = "L") -> str:
        return fresh_name(stem, self.points)

    # edits ---------------------------------------------------------------

    def left_of(self, dart: Dart) -> str:
        eid, sign = dart
        if eid in self.edges:
            e = self.edges[eid]
            return e.left if sign > 0 else e.right
        c = self.circles[eid]
        return c.inside if sign > 0 else c.outside

    def remove_element(self, element: str) -> None:
        self.edges.pop(element, None)
        self.circles.pop(element, None)
        self.folds.pop(element, None)

    def install(self, original: str, pieces: List[Piece], sign: int, rest: Optional[str] = None) -> Dict[str, str]:
        """Replace ``original`` by ``pieces`` given in dart direction.

        Pieces are flipped back to the original orientation when the dart ran
        against it. The piece holding the original tail (or the ``rest`` piece
        of a former circle) keeps the original id. Returns role -> id.
        """
        self.remove_element(original)
        if sign < 0:
            pieces = [p.reversed() for p in reversed(pieces)]
        if rest is not None:
            pieces = sorted(pieces, key=lambda p: p.role != rest)
        ids: Dict[str, str] = {}
        for index, piece in enumerate(pieces):
            eid = original if index == 0 else self.fresh_element(original)
            self.add_edge(eid, piece)
            ids[piece.role] = eid
        return ids

    def add_edge(self, eid: str, piece: Piece) -> None:
        self.edges[eid] = Edge(eid, piece.tail, piece.head, piece.left, piece.right)
        self.folds[eid] = Fold(eid, piece.high, piece.low, piece.surgery)

    def set_side(self, dart: Dart, label: str) -> None:
        """Relabel the face on the left of one dart, keeping fold data in step."""
        eid, sign = dart
        old = self.left_of(dart)
        if eid in self.edges:
            e = self.edges[eid]
            self.edges[eid] = replace(e, left=label) if sign > 0 else replace(e, right=label)
        else:
            c = self.circles[eid]
            self.circles[eid] = replace(c, inside=label) if sign > 0 else replace(c, outside=label)
        fold = self.folds.get(eid)
        if fold is not None:
            self.folds[eid] = replace(
                fold,
                high=label if fold.high == old else fold.high,
                low=label if fold.low == old else fold.low,
            )

    def merge_labels(self, keep: str, gone: str) -> None:
        """Fold face ``gone`` into face ``keep``; their fibers must agree."""
        if keep == gone:
            return
        if self.fibers.get(keep) != self.fibers.get(gone):
            raise InvalidResult(
                f"cannot merge {gone} ({self.fibers.get(gone)}) into {keep} ({self.fibers.get(keep)})",
                element=gone)
        for eid in list(self.edges) + list(self.circles):
            for sign in (1, -1):
                if self.left_of((eid, sign)) == gone:
                    self.set_side((eid, sign), keep)
        # moved points follow the kept face's factorization
        moved = sorted((p for p in self.points.values() if p.face == gone), key=lambda p: (p.order, p.id))
        start = self.next_order(keep)
        for k, p in enumerate(moved):
            self.points[p.id] = replace(p, face=keep, order=start + k)
        self.fibers.pop(gone, None)

    def next_order(self, face: str) -> int:
        return max((p.order for p in self.points.values() if p.face == face), default=0) + 1

    # merging through deleted vertices -------------------------------------

    def merge_through(self, removed: Set[str], joints: Dict[Tuple[str, int], Tuple[str, int]]) -> List[str]:
        """Join the edges meeting the ``removed`` vertices along ``joints``.

        Each maximal chain becomes one edge, or a circle when it closes up.
        The merged element keeps the smallest id of its pieces and that
        piece's orientation. Returns the ids of the merged elements.
        """
        slots: Dict[Tuple[str, int], Dart] = {}
        for e in self.edges.values():
            slots[(e.tail.vertex, e.tail.slot)] = (e.id, 1)
            slots[(e.head.vertex, e.head.slot)] = (e.id, -1)

        def step(piece: Dart) -> Optional[Dart]:
            e = self.edges[piece[0]]
            arrival = e.head if piece[1] > 0 else e.tail
            if arrival.vertex not in removed:
                return None
            return slots[joints[(arrival.vertex, arrival.slot)]]

        affected = sorted(
            e.id for e in self.edges.values() if e.tail.vertex in removed or e.head.vertex in removed)
        done: Set[str] = set()
        merged: List[str] = []
        for start in affected:
            if start in done:
                continue
            chain, closed = self._walk(start, step, len(affected))
            done.update(x for x, _ in chain)
            merged.append(self._replace_chain(chain, closed))
        for v in removed:
            self.vertices.pop(v, None)
        return merged

    def _walk(self, start: str, step, limit: int) -> Tuple[List[Dart], bool]:
        forward: List[Dart] = [(start, 1)]
        nxt = step((start, 1))
        while nxt is not None:
            if nxt[0] == start:
                if nxt[1] < 0:
                    raise InvalidResult(f"chain through {start} reverses itself", element=start)
                return forward, True
            forward.append(nxt)
            if len(forward) > limit:
                raise InvalidResult(f"chain through {start} does not terminate", element=start)
            nxt = step(nxt)
        back: List[Dart] = []
        nxt = step((start, -1))
        while nxt is not None:
            back.append(nxt)
            if len(back) > limit:
                raise InvalidResult(f"chain through {start} does not terminate", element=start)
            nxt = step(nxt)
        return [(x, -s) for x, s in reversed(back)] + forward, False

    def _replace_chain(self, chain: List[Dart], closed: bool) -> str:
        keep = min(x for x, _ in chain)
        if dict(chain)[keep] < 0:
            chain = [(x, -s) for x, s in reversed(chain)]
        lefts = {self.left_of(p) for p in chain}
        rights = {self.left_of((x, -s)) for x, s in chain}
        if len(lefts) != 1 or len(rights) != 1:
            raise InvalidResult(
                f"merged pieces {[x for x, _ in chain]} disagree on their sides: {sorted(lefts)} / {sorted(rights)}",
                element=keep)
        folds = {(self.folds[x].high, self.folds[x].low, self.folds[x].surgery) for x, _ in chain}
        if len(folds) != 1:
            raise InvalidResult(f"merged pieces {[x for x, _ in chain]} carry different fold data", element=keep)
        left, right = lefts.pop(), rights.pop()
        fold = self.folds[keep]

        first, last = self.edges[chain[0][0]], self.edges[chain[-1][0]]
        tail = first.tail if chain[0][1] > 0 else first.head
        head = last.head if chain[-1][1] > 0 else last.tail
        for x, _ in chain:
            self.remove_element(x)
        if closed:
            self.circles[keep] = Circle(keep, left, right)
        else:
            self.edges[keep] = Edge(keep, tail, head, left, right)
        self.folds[keep] = fold
        log.debug("merged %d pieces into %s %s", len(chain), "circle" if closed else "edge", keep)
        return keep


def checked(d: BlfDiagram, move: str) -> BlfDiagram:
    """Return ``d`` if it validates, otherwise raise InvalidResult."""
    report = validate(d)
    if not report.ok:
        raise InvalidResult(f"{move} produced an invalid diagram", report=report)
    return d
