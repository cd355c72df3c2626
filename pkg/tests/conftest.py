import sys
from pathlib import Path

import pytest

SRC = Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC))

from components.blf_io import load  # noqa: E402
from components.config import Settings  # noqa: E402
from components.models import (  # noqa: E402
    ArrangementMap,
    BlfDiagram,
    Circle,
    Edge,
    End,
    FiberDescription,
    Fold,
    SurgeryDescriptor,
    Vertex,
    VertexKind,
)


@pytest.fixture
def blf_settings():
    return Settings()


@pytest.fixture
def cp2(blf_settings):
    return load("cp2", blf_settings)


@pytest.fixture
def s4(blf_settings):
    return load("s4", blf_settings)


@pytest.fixture
def split_fiber(blf_settings):
    return load("split_fiber", blf_settings)


def sibling_circles(y_high_outside: bool = True) -> BlfDiagram:
    """Two circles side by side in a genus-2 face O.

    Circle x bounds H (genus 3) and points into O. Circle y bounds B; with
    ``y_high_outside`` it points from O into B (genus 1), otherwise from
    B (genus 3) into O.
    """
    nonsep = SurgeryDescriptor.nonseparating("c0")
    fibers = {
        "O": FiberDescription.surface(2),
        "H": FiberDescription.surface(3),
        "B": FiberDescription.surface(1 if y_high_outside else 3),
    }
    y_fold = Fold("y", "O", "B", nonsep) if y_high_outside else Fold("y", "B", "O", nonsep)
    return BlfDiagram(
        arrangement=ArrangementMap(circles={"x": Circle("x", "H", "O"), "y": Circle("y", "B", "O")}),
        fibers=fibers,
        folds={"x": Fold("x", "H", "O", nonsep), "y": y_fold},
    )


@pytest.fixture
def siblings():
    return sibling_circles(True)


@pytest.fixture
def siblings_high_bigon():
    return sibling_circles(False)


def three_circles() -> BlfDiagram:
    """Three pairwise crossing fold circles x, y, z in a genus-2 face o.

    Faces are named by the circles they lie inside. x points outward, y and
    z point inward. The central face xyz is a triangle with corners p_in
    (x meets y), q_in (x meets z) and v_in (y meets z).
    """
    nonsep = SurgeryDescriptor.nonseparating("c0")
    genera = {"o": 2, "x": 1, "y": 3, "z": 3, "xy": 2, "xz": 2, "yz": 4, "xyz": 3}
    edges = [
        ("y1", ("p_out", 1), ("v_in", 3), "xy", "x", "xy"),
        ("y2", ("v_in", 1), ("p_in", 2), "xyz", "xz", "xyz"),
        ("y3", ("p_in", 0), ("v_out", 2), "yz", "z", "yz"),
        ("y4", ("v_out", 0), ("p_out", 3), "y", "o", "y"),
        ("x1", ("q_out", 1), ("p_in", 3), "xz", "z", "z"),
        ("x2", ("p_in", 1), ("q_in", 2), "xyz", "yz", "yz"),
        ("x3", ("q_in", 0), ("p_out", 2), "xy", "y", "y"),
        ("x4", ("p_out", 0), ("q_out", 3), "x", "o", "o"),
        ("z1", ("v_out", 1), ("q_in", 3), "yz", "y", "yz"),
        ("z2", ("q_in", 1), ("v_in", 2), "xyz", "xy", "xyz"),
        ("z3", ("v_in", 0), ("q_out", 2), "xz", "x", "xz"),
        ("z4", ("q_out", 0), ("v_out", 3), "z", "o", "z"),
    ]
    vertices = {v: Vertex(v, VertexKind.DOUBLE) for v in ("p_out", "p_in", "v_in", "v_out", "q_out", "q_in")}
    folds = {}
    arcs = {}
    for eid, tail, head, left, right, high in edges:
        arcs[eid] = Edge(eid, End(*tail), End(*head), left, right)
        folds[eid] = Fold(eid, high, right if high == left else left, nonsep)
    return BlfDiagram(
        arrangement=ArrangementMap(vertices=vertices, edges=arcs),
        fibers={label: FiberDescription.surface(g) for label, g in genera.items()},
        folds=folds,
    )


@pytest.fixture
def venn():
    return three_circles()
