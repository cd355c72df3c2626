import textwrap

import pytest

from components.blf_io import parse
from components.diagram import counts, high_quadrant, validate
from components.diagram.validation import violation_codes
from components.models import (
    ArrangementMap,
    BlfDiagram,
    FiberDescription,
    HomologyClass,
    LefschetzPoint,
)

KINK = """\
blf 1
arrangement
vertex w double
edge arc w:3 w:2 left=torus right=sphere
edge loop w:0 w:1 left=N right=torus
faces
face N fiber=c0:2
face sphere fiber=c0:0
face torus fiber=c0:1
folds
fold arc high=torus low=sphere surgery=nonsep(c0)
fold loop high=N low=torus surgery=nonsep(c0)
lefschetz
basepoints
basepoints 0
sections 0
"""


def blf(text):
    return parse(textwrap.dedent(text))


@pytest.mark.parametrize("name", ["cp2", "s4", "split_fiber"])
def test_bundled_examples_are_valid(name, request):
    report = validate(request.getfixturevalue(name))
    assert report.ok, report.lines()
    assert report.warnings == []


def test_kink_is_valid():
    d = parse(KINK)
    report = validate(d)
    assert report.ok, report.lines()
    assert high_quadrant(d, "w") == 0
    assert counts(d) == {"double": 1, "cusp": 0, "edges": 2, "circles": 0, "lefschetz": 0, "faces": 3}


def test_trivial_bundle_is_valid():
    d = BlfDiagram(ArrangementMap(), {"F": FiberDescription.surface(2)})
    assert validate(d).ok


def test_empty_arrangement_needs_one_fiber():
    d = BlfDiagram(ArrangementMap(), {"F": FiberDescription.surface(2), "G": FiberDescription.surface(1)})
    assert violation_codes(validate(d)) == ["V7"]


def test_two_high_quadrants():
    d = parse(KINK.replace("fold loop high=N low=torus", "fold loop high=torus low=N")
                  .replace("face N fiber=c0:2", "face N fiber=c0:0"))
    assert violation_codes(validate(d)) == ["V4"]
    assert high_quadrant(d, "w") is None


def test_missing_fold_data(s4):
    d = s4.with_changes(folds={})
    assert violation_codes(validate(d)) == ["V2"]


def test_fold_sides_must_match():
    d = parse(serialize_s4().replace("high=torus low=sphere", "high=torus low=elsewhere"))
    codes = violation_codes(validate(d))
    assert "V2" in codes


def serialize_s4():
    return textwrap.dedent("""\
        blf 1
        arrangement
        circle c inside=torus outside=sphere
        faces
        face sphere fiber=c0:0
        face torus fiber=c0:1
        folds
        fold c high=torus low=sphere surgery=nonsep(c0)
        """)


def test_surgery_does_not_reach_lower_fiber():
    d = parse(serialize_s4().replace("face torus fiber=c0:1", "face torus fiber=c0:2"))
    assert violation_codes(validate(d)) == ["V3"]


def test_separating_cusp():
    d = blf("""\
        blf 1
        arrangement
        vertex u cusp
        edge k u:0 u:1 left=I right=O
        faces
        face I fiber=c0a:1,c0b:2
        face O fiber=c0:3
        folds
        fold k high=O low=I surgery=sep(c0,1,2)
        """)
    assert violation_codes(validate(d)) == ["V5"]


def test_one_cusp_circle_is_valid():
    d = blf("""\
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
    assert validate(d).ok


def test_lefschetz_rules(s4):
    points = (
        LefschetzPoint("L1", "torus", "c0", 1, HomologyClass.of(1, 0, 0, 0)),
        LefschetzPoint("L2", "torus", "c9", 2, HomologyClass.of(1, 0)),
        LefschetzPoint("L3", "nowhere", "c0", 1, HomologyClass.of(1, 0)),
        LefschetzPoint("L4", "torus", "c0", 3, HomologyClass.of(1, 0)),
        LefschetzPoint("L5", "torus", "c0", 3, HomologyClass.of(0, 1)),
    )
    report = validate(s4.with_changes(lefschetz=points))
    assert sorted((i.code, i.element) for i in report.violations) == [
        ("V6", "L1"), ("V6", "L2"), ("V6", "L3"), ("V6", "torus"),
    ]


def test_fiber_bookkeeping(s4):
    fibers = {"torus": FiberDescription.surface(1), "ghost": FiberDescription.surface(0)}
    report = validate(s4.with_changes(fibers=fibers))
    assert sorted((i.code, i.element) for i in report.violations) == [("V7", "ghost"), ("V7", "sphere")]


def test_not_a_sphere_reported_as_v1():
    d = blf("""\
        blf 1
        arrangement
        vertex w double
        edge e1 w:0 w:2 left=A right=A
        edge e2 w:1 w:3 left=A right=A
        faces
        face A fiber=c0:0
        """)
    assert violation_codes(validate(d)) == ["V1"]


def test_warnings_only_count_when_strict():
    d = parse(textwrap.dedent("""\
        blf 1
        arrangement
        circle c inside=I outside=O
        faces
        face I fiber=c0a:0,c0b:2
        face O fiber=c0:2
        folds
        fold c high=O low=I surgery=sep(c0,0,2)
        lefschetz
        point L1 face=O component=c0 order=1 cycle=0,0,0,0
        """))
    report = validate(d)
    assert report.ok
    assert sorted(i.code for i in report.warnings) == ["W1", "W2"]
    assert report.lines() == []
    assert len(report.lines(strict=True)) == 2
