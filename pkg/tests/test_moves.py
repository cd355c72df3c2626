import textwrap

import pytest

from components.blf_io import parse, serialize
from components.diagram import euler_characteristic, quadrant_label, validate
from components.errors import (
    ArrowViolation,
    IndexViolation,
    InvalidResult,
    LiftMismatch,
    NotACusp,
    NotAdjacent,
    PreconditionViolated,
    UnknownElement,
)
from components.models import (
    ArrangementMap,
    BlfDiagram,
    Circle,
    FiberDescription,
    Fold,
    HomologyClass,
    LefschetzPoint,
    SurgeryDescriptor,
    VertexKind,
)
from components.moves import (
    BigonChoice,
    cusp_modify,
    flip,
    flip_intermediate,
    push_lefschetz,
    r2_remove,
    slide_arc,
)
from components.moves.builder import DiagramBuilder
from test_validation import KINK

ONE_CUSP = textwrap.dedent("""\
    blf 1
    arrangement
    vertex u cusp
    edge k u:0 u:1 left=I right=O
    faces
    face I fiber=c0:1
    face O fiber=c0:2
    folds
    fold k high=O low=I surgery=nonsep(c0)
    """)


# ---------------------------------------------------------------------------
# Slides and Reidemeister II
# ---------------------------------------------------------------------------


def test_slide_adds_a_bigon(siblings):
    result = slide_arc(siblings, "x", ["O", "B"])
    assert validate(result).ok
    assert result.n_double == 2
    assert sorted(result.fibers) == ["B", "B.1", "H", "O"]
    assert result.fibers["B.1"] == FiberDescription.surface(2)
    assert euler_characteristic(result) == euler_characteristic(siblings) == -4


def test_slide_then_r2_round_trip(siblings):
    slid = slide_arc(siblings, "x", ["O", "B"])
    assert serialize(r2_remove(slid, "B.1")) == serialize(siblings)


def test_slide_across_a_crossing(venn):
    assert validate(venn).ok
    result = slide_arc(venn, "x2", ["xyz", "x"])
    assert validate(result).ok
    assert euler_characteristic(result) == euler_characteristic(venn) == -6
    assert result.n_double == venn.n_double == 6
    assert "xyz" not in result.fibers
    assert result.fibers["xyz.1"] == FiberDescription.surface(2)
    assert quadrant_label(result.arrangement, "v_in", 1) == "yz"
    fold = result.folds["x2"]
    assert (fold.high, fold.low) == ("xyz.1", "x")


def test_crossing_triangle_must_be_empty(venn):
    d = venn.with_changes(lefschetz=(LefschetzPoint("L1", "xyz", "c0", 1, HomologyClass.of(1, 0, 0, 0, 0, 0)),))
    with pytest.raises(PreconditionViolated):
        slide_arc(d, "x2", ["xyz", "x"])


def test_bigon_above_both_arcs(siblings_high_bigon):
    d = siblings_high_bigon
    slid = slide_arc(d, "x", ["O", "B"])
    assert slid.fibers["B.1"] == FiberDescription.surface(4)
    assert euler_characteristic(slid) == euler_characteristic(d)
    with pytest.raises(IndexViolation):
        r2_remove(slid, "B.1")


def test_bigon_fiber_can_be_chosen(siblings_high_bigon):
    # a disconnected choice does not reach the neighbouring fibers
    choice = BigonChoice(fiber=FiberDescription.of({"c0": 3, "c1": 0}))
    with pytest.raises(InvalidResult):
        slide_arc(siblings_high_bigon, "x", ["O", "B"], bigon=choice)


def test_trivial_path_changes_nothing(siblings):
    assert slide_arc(siblings, "x", ["O"]) == siblings
    assert slide_arc(siblings, "x", []) == siblings


def test_slide_must_follow_the_arrow(siblings):
    with pytest.raises(ArrowViolation):
        slide_arc(siblings, "x", ["H", "O"])


def test_slide_needs_adjacent_faces(siblings):
    with pytest.raises(NotAdjacent):
        slide_arc(siblings, "x", ["O", "nowhere"])
    with pytest.raises(UnknownElement):
        slide_arc(siblings, "zz", ["O", "B"])


def test_r2_preconditions(siblings, cp2):
    with pytest.raises(UnknownElement):
        r2_remove(siblings, "nowhere")
    with pytest.raises(PreconditionViolated):
        r2_remove(cp2, "mid")


# ---------------------------------------------------------------------------
# Lefschetz pushes
# ---------------------------------------------------------------------------


def with_point(d, point):
    return d.with_changes(lefschetz=d.lefschetz + (point,))


def test_push_across_nonseparating_fold(cp2):
    d = with_point(cp2, LefschetzPoint("L4", "inner", "c0", 1, HomologyClass(0, ())))
    result = push_lefschetz(d, "L4", "c2", "c0", HomologyClass.of(1, 0))
    moved = result.point("L4")
    assert (moved.face, moved.order, moved.cycle) == ("mid", 1, HomologyClass.of(1, 0))
    assert euler_characteristic(result) == euler_characteristic(d) == 4


def test_push_across_separating_fold(split_fiber):
    d = with_point(split_fiber, LefschetzPoint("L1", "I", "c0b", 1, HomologyClass.of(1, 0, 0, 1)))
    result = push_lefschetz(d, "L1", "c", "c0", HomologyClass.of(1, 0, 0, 1, 0, 0))
    assert result.point("L1").component == "c0"
    with pytest.raises(LiftMismatch):
        push_lefschetz(d, "L1", "c", "c0b", HomologyClass.of(1, 0, 0, 1))


def test_push_rejections(cp2):
    d = with_point(cp2, LefschetzPoint("L4", "inner", "c0", 1, HomologyClass(0, ())))
    with pytest.raises(LiftMismatch):
        push_lefschetz(d, "L4", "c2", "c0", HomologyClass.of(1, 0, 0, 0))
    with pytest.raises(NotAdjacent):
        push_lefschetz(d, "L1", "c2", "c0", HomologyClass.of(1, 0))
    with pytest.raises(UnknownElement):
        push_lefschetz(d, "L9", "c2", "c0", HomologyClass.of(1, 0))


# ---------------------------------------------------------------------------
# Cusps and flips
# ---------------------------------------------------------------------------


def test_cusp_modify_closes_the_circle():
    d = parse(ONE_CUSP)
    result = cusp_modify(d, "u")
    assert result.n_cusp == 0
    assert list(result.arrangement.circles) == ["k"]
    (point,) = result.lefschetz
    assert (point.face, point.component, point.cycle) == ("O", "c0", HomologyClass.of(1, 0, 0, 0))
    assert euler_characteristic(result) == euler_characteristic(d)


def test_cusp_modify_takes_a_class():
    result = cusp_modify(parse(ONE_CUSP), "u", cycle=HomologyClass.of(0, 1, 1, 0))
    assert result.lefschetz[0].cycle == HomologyClass.of(0, 1, 1, 0)


def test_cusp_modify_rejections():
    with pytest.raises(NotACusp):
        cusp_modify(parse(KINK), "w")
    with pytest.raises(UnknownElement):
        cusp_modify(parse(ONE_CUSP), "zz")


def test_flip_on_a_circle(s4):
    result = flip(s4, "c")
    assert validate(result).ok
    assert (result.n_double, result.n_cusp, result.n_lefschetz) == (1, 0, 2)
    assert euler_characteristic(result) == 2
    faces = {p.face for p in result.lefschetz}
    assert len(faces) == 1
    assert result.fibers[faces.pop()] == FiberDescription.surface(2)
    assert sorted(p.order for p in result.lefschetz) == [1, 2]


def test_flip_intermediate_has_two_cusps(s4):
    stage = flip_intermediate(s4, "c")
    assert validate(stage).ok
    assert (stage.n_double, stage.n_cusp) == (1, 2)
    assert euler_characteristic(stage) == 2
    kinds = sorted(v.kind for v in stage.arrangement.vertices.values())
    assert kinds == sorted([VertexKind.DOUBLE, VertexKind.CUSP, VertexKind.CUSP])


def test_flip_on_an_edge():
    d = parse(KINK)
    result = flip(d, "arc")
    assert validate(result).ok
    assert (result.n_double, result.n_lefschetz) == (2, 2)
    assert euler_characteristic(result) == euler_characteristic(d)


def test_flip_component_must_exist(s4):
    with pytest.raises(PreconditionViolated):
        flip(s4, "c", component="c7")
    with pytest.raises(UnknownElement):
        flip(s4, "zz")


@pytest.mark.parametrize("check_intermediates", [True, False])
def test_flip_with_a_wrong_loop_fiber(s4, check_intermediates):
    # the loop interior must be one genus above the arc's higher face
    with pytest.raises(InvalidResult):
        flip(s4, "c", fiber=FiberDescription.surface(5), check_intermediates=check_intermediates)


# ---------------------------------------------------------------------------
# Working copies
# ---------------------------------------------------------------------------


def test_merged_faces_renumber_their_points():
    torus = FiberDescription.surface(1)
    a1 = HomologyClass.of(1, 0)
    points = tuple(LefschetzPoint(pid, face, "c0", order, a1)
                   for pid, face, order in [("P1", "A", 1), ("P2", "A", 2), ("Q1", "B", 2), ("Q2", "B", 1)])
    d = BlfDiagram(
        arrangement=ArrangementMap(circles={"k": Circle("k", "A", "B")}),
        fibers={"A": torus, "B": torus},
        folds={"k": Fold("k", "A", "B", SurgeryDescriptor.nonseparating("c0"))},
        lefschetz=points,
    )
    b = DiagramBuilder(d)
    b.merge_labels("A", "B")
    merged = {p.id: (p.face, p.order) for p in b.build().lefschetz}
    assert merged == {"P1": ("A", 1), "P2": ("A", 2), "Q2": ("A", 3), "Q1": ("A", 4)}
