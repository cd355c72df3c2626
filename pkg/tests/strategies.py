"""Hypothesis strategies for valid diagrams.

A diagram is grown as a tree of faces: every new closed fold separates a
fresh child face from an existing one and points either way. Closed folds
are round circles or circles carrying a single cusp. A few moves are then
applied on top so that double points, loop kinks, cusp pairs and bigons
show up too; a move that fails or leaves an invalid map is skipped.
"""
from hypothesis import strategies as st

from components.diagram import validate
from components.errors import BlfError
from components.models import (
    ArrangementMap,
    BlfDiagram,
    Circle,
    Edge,
    End,
    FiberDescription,
    Fold,
    HomologyClass,
    LefschetzPoint,
    SurgeryDescriptor,
    Vertex,
    VertexKind,
)
from components.moves import flip, flip_intermediate, slide_arc


@st.composite
def homology_classes(draw, genus: int, bound: int = 3):
    coords = draw(st.lists(st.integers(-bound, bound), min_size=2 * genus, max_size=2 * genus))
    return HomologyClass(genus, tuple(coords))


@st.composite
def trees(draw, max_folds: int = 6, max_points: int = 3, cusps: bool = True):
    nonsep = SurgeryDescriptor.nonseparating("c0")
    genera = {"R": draw(st.integers(0, 3))}
    vertices, edges, circles, folds = {}, {}, {}, {}

    for i in range(draw(st.integers(0, max_folds))):
        parent = draw(st.sampled_from(sorted(genera)))
        child = f"F{i}"
        up = genera[parent] == 0 or draw(st.booleans())
        genera[child] = genera[parent] + (1 if up else -1)
        high, low = (child, parent) if up else (parent, child)
        element = f"k{i}"
        if cusps and draw(st.booleans()):
            u = f"u{i}"
            vertices[u] = Vertex(u, VertexKind.CUSP)
            edges[element] = Edge(element, End(u, 0), End(u, 1), child, parent)
        else:
            circles[element] = Circle(element, child, parent)
        folds[element] = Fold(element, high, low, nonsep)

    points = []
    for label in sorted(genera):
        for order in range(1, draw(st.integers(0, max_points)) + 1):
            cycle = draw(homology_classes(genera[label]))
            points.append(LefschetzPoint(f"P{len(points) + 1}", label, "c0", order, cycle))

    return BlfDiagram(
        arrangement=ArrangementMap(vertices, edges, circles),
        fibers={label: FiberDescription.surface(g) for label, g in genera.items()},
        folds=folds,
        lefschetz=tuple(points),
    )


def slide_targets(d: BlfDiagram):
    """(arc, path) pairs for one-step slides of ``d``."""
    a = d.arrangement
    found = []
    for x in sorted(d.folds):
        low = d.folds[x].low
        for y in a.element_ids:
            sides = a.sides(y)
            if y != x and low in sides and sides[0] != sides[1]:
                other = sides[1] if sides[0] == low else sides[0]
                found.append((x, [low, other]))
    return found


@st.composite
def diagrams(draw, max_folds: int = 6, max_points: int = 3, cusps: bool = True, kinks: int = 2):
    d = draw(trees(max_folds, max_points, cusps))
    for _ in range(draw(st.integers(0, kinks))):
        kind = draw(st.sampled_from(["flip", "intermediate", "slide"] if cusps else ["flip", "slide"]))
        try:
            if kind == "slide":
                targets = slide_targets(d)
                if not targets:
                    continue
                arc, path = draw(st.sampled_from(targets))
                candidate = slide_arc(d, arc, path)
            else:
                if not d.folds:
                    continue
                arc = draw(st.sampled_from(sorted(d.folds)))
                candidate = (flip if kind == "flip" else flip_intermediate)(d, arc)
        except BlfError:
            continue
        if validate(candidate).ok:
            d = candidate
    return d
