import pytest

from components.diagram import circuits, components, next_dart, quadrant_label, trace_faces
from components.errors import InconsistentLabels, MalformedArrangement, NotSphere
from components.models import ArrangementMap, Circle, Edge, End, Vertex, VertexKind


def double(vid="w"):
    return {vid: Vertex(vid, VertexKind.DOUBLE)}


def kink():
    """A loop at one double point: loop w:0 -> w:1 around N, arc w:3 -> w:2."""
    return ArrangementMap(
        vertices=double(),
        edges={
            "loop": Edge("loop", End("w", 0), End("w", 1), "N", "T"),
            "arc": Edge("arc", End("w", 3), End("w", 2), "T", "S"),
        },
    )


def test_empty_arrangement_has_one_unlabelled_face():
    faces = trace_faces(ArrangementMap())
    assert len(faces) == 1
    assert faces[0].id == "f0"
    assert faces[0].label is None
    assert faces[0].circuits == ()


def test_circle_has_two_faces():
    faces = trace_faces(ArrangementMap(circles={"c": Circle("c", "in", "out")}))
    assert {f.label for f in faces} == {"in", "out"}
    assert [f.id for f in faces] == ["f0", "f1"]


def test_nested_circles_share_the_annulus(cp2):
    faces = {f.label: f for f in trace_faces(cp2.arrangement)}
    assert len(faces["mid"].circuits) == 2
    assert len(faces["inner"].circuits) == 1
    assert len(faces["outer"].circuits) == 1


def test_kink_faces_and_quadrants():
    a = kink()
    faces = {f.label: f for f in trace_faces(a)}
    assert faces["N"].circuits == ((("loop", 1),),)
    assert faces["T"].circuits == ((("arc", 1), ("loop", -1)),)
    assert faces["S"].circuits == ((("arc", -1),),)
    assert [quadrant_label(a, "w", s) for s in range(4)] == ["N", "T", "S", "T"]
    assert next_dart(a, ("loop", -1)) == ("arc", 1)


def test_one_cusp_circle():
    a = ArrangementMap(
        vertices={"u": Vertex("u", VertexKind.CUSP)},
        edges={"k": Edge("k", End("u", 0), End("u", 1), "in", "out")},
    )
    assert sorted(circuits(a)) == [(("k", -1),), (("k", 1),)]
    assert {f.label for f in trace_faces(a)} == {"in", "out"}


def test_components_keep_circles_apart():
    a = ArrangementMap(
        vertices=double(),
        edges=kink().edges,
        circles={"c": Circle("c", "D", "S")},
    )
    assert components(a) == [{"arc", "loop"}, {"c"}]


def test_interleaved_loops_are_not_planar():
    a = ArrangementMap(
        vertices=double(),
        edges={
            "e1": Edge("e1", End("w", 0), End("w", 2), "A", "A"),
            "e2": Edge("e2", End("w", 1), End("w", 3), "A", "A"),
        },
    )
    with pytest.raises(NotSphere):
        trace_faces(a)


def test_sibling_circles_with_the_same_sides_do_not_nest():
    a = ArrangementMap(circles={"c1": Circle("c1", "A", "B"), "c2": Circle("c2", "A", "B")})
    with pytest.raises(NotSphere):
        trace_faces(a)


def test_one_label_on_both_sides():
    with pytest.raises(InconsistentLabels):
        trace_faces(ArrangementMap(circles={"c": Circle("c", "A", "A")}))


def test_circuit_with_two_labels():
    a = ArrangementMap(
        vertices=double(),
        edges={
            "loop": Edge("loop", End("w", 0), End("w", 1), "N", "T"),
            "arc": Edge("arc", End("w", 3), End("w", 2), "X", "S"),
        },
    )
    with pytest.raises(InconsistentLabels):
        trace_faces(a)


@pytest.mark.parametrize("edges", [
    {"e": Edge("e", End("w", 0), End("nowhere", 1), "A", "B")},
    {"e": Edge("e", End("w", 0), End("w", 4), "A", "B")},
    {"e": Edge("e", End("w", 0), End("w", 1), "A", "B")},
])
def test_malformed(edges):
    with pytest.raises(MalformedArrangement):
        trace_faces(ArrangementMap(vertices=double(), edges=edges))
