from __future__ import annotations

from collections import Counter
from typing import Dict, List, Optional, Set

from ..errors import BlfError, InconsistentLabels, NotApplicable
from ..fiber import apply_surgery, is_null_homotopic
from ..models import BlfDiagram, Issue, ValidationReport, VertexKind
from ..utils.logging import get_logger
from .arrangement import edge_at, quadrant_label, trace_faces


log = get_logger(__name__)


def face_labels(d: BlfDiagram) -> Set[str]:
    """Labels of the faces a diagram actually has.

    The empty arrangement has a single unlabelled face; its fiber is
    whichever single label the diagram declares.
    """
    if d.arrangement.is_empty:
        return set(d.fibers) if len(d.fibers) == 1 else set()
    return set(d.arrangement.labels)


def high_quadrant(d: BlfDiagram, vertex: str) -> Optional[int]:
    """Slot s whose quadrant is the higher side of both bounding arcs, if unique."""
    a = d.arrangement
    found = []
    for s in range(4):
        label = quadrant_label(a, vertex, s)
        bounding = (edge_at(a, vertex, s), edge_at(a, vertex, (s + 1) % 4))
        if all(e in d.folds and d.folds[e].high == label for e in bounding):
            found.append(s)
    return found[0] if len(found) == 1 else None


def _check_folds(d: BlfDiagram, report: ValidationReport) -> Set[str]:
    """V2 and V3. Returns the elements whose fold data is usable downstream."""
    a = d.arrangement
    usable: Set[str] = set()
    for element in a.element_ids:
        fold = d.folds.get(element)
        if fold is None:
            report.violations.append(Issue("V2", "no fold data", element))
            continue
        sides = set(a.sides(element))
        if fold.high == fold.low or {fold.high, fold.low} != sides:
            report.violations.append(
                Issue("V2", f"high={fold.high} low={fold.low} but the sides are {sorted(sides)}", element))
            continue
        if fold.element != element:
            report.violations.append(Issue("V2", f"fold data filed under {fold.element}", element))
            continue
        high, low = d.fibers.get(fold.high), d.fibers.get(fold.low)
        if high is None or low is None:
            continue  # reported as V7
        try:
            result = apply_surgery(high, fold.surgery)
        except NotApplicable as e:
            report.violations.append(Issue("V3", f"{fold.surgery} on {high}: {e.message}", element))
            continue
        if result != low:
            report.violations.append(
                Issue("V3", f"{fold.surgery} takes {high} to {result}, not {low}", element))
            continue
        usable.add(element)
        if is_null_homotopic(fold.surgery):
            report.warnings.append(Issue("W1", f"{fold.surgery} collapses a null-homotopic circle", element))

    for element in sorted(set(d.folds) - set(a.element_ids)):
        report.violations.append(Issue("V2", "fold data for an unknown arc", element))
    return usable


def _check_double(d: BlfDiagram, vertex: str, report: ValidationReport) -> None:
    a = d.arrangement
    oo = high_quadrant(d, vertex)
    if oo is None:
        report.violations.append(Issue("V4", "no single quadrant lies on the higher side of both arcs", vertex))
        return
    opposite = quadrant_label(a, vertex, (oo + 2) % 4)
    for s in ((oo + 2) % 4, (oo + 3) % 4):
        e = edge_at(a, vertex, s)
        if d.folds[e].low != opposite:
            report.violations.append(
                Issue("V4", f"quadrant {opposite} opposite the high quadrant is not lower for {e}", vertex))
            return

    start = d.fibers.get(quadrant_label(a, vertex, oo))
    target = d.fibers.get(opposite)
    if start is None or target is None:
        return
    paths = (((oo + 1) % 4, (oo + 2) % 4), (oo, (oo + 3) % 4))
    results = []
    for path in paths:
        fiber = start
        try:
            for s in path:
                fiber = apply_surgery(fiber, d.folds[edge_at(a, vertex, s)].surgery)
        except NotApplicable as e:
            report.violations.append(Issue("V4", f"surgery path through slots {path}: {e.message}", vertex))
            return
        results.append(fiber)
    if results[0] != results[1] or results[0] != target:
        report.violations.append(
            Issue("V4", f"surgery paths give {results[0]} and {results[1]}, opposite quadrant has {target}", vertex))


def _check_cusp(d: BlfDiagram, vertex: str, report: ValidationReport) -> None:
    a = d.arrangement
    e0, e1 = edge_at(a, vertex, 0), edge_at(a, vertex, 1)
    f0, f1 = d.folds[e0], d.folds[e1]
    if (f0.high, f0.low) != (f1.high, f1.low):
        report.violations.append(
            Issue("V5", f"arcs {e0} and {e1} disagree on the higher side at the cusp", vertex))
        return
    s0, s1 = f0.surgery, f1.surgery
    if s0.is_separating or s1.is_separating or s0.component != s1.component:
        report.violations.append(
            Issue("V5", f"cusp arcs need nonseparating surgeries on one component, got {s0} and {s1}", vertex))


def _check_lefschetz(d: BlfDiagram, labels: Set[str], report: ValidationReport) -> None:
    orders: Counter = Counter()
    for p in d.lefschetz:
        if p.face not in labels:
            report.violations.append(Issue("V6", f"face {p.face} does not exist", p.id))
            continue
        fiber = d.fibers.get(p.face)
        if fiber is None:
            continue
        genus = fiber.genus_of(p.component)
        if genus is None:
            report.violations.append(Issue("V6", f"component {p.component} not in fiber {fiber}", p.id))
            continue
        if p.cycle.genus != genus:
            report.violations.append(
                Issue("V6", f"cycle of genus {p.cycle.genus} on a genus {genus} component", p.id))
            continue
        if p.cycle.is_zero:
            report.warnings.append(Issue("W2", "vanishing class is zero", p.id))
        orders[(p.face, p.order)] += 1
    for (face, order), n in sorted(orders.items()):
        if n > 1:
            report.violations.append(Issue("V6", f"{n} points share order {order}", face))


def _check_fibers(d: BlfDiagram, labels: Set[str], report: ValidationReport) -> None:
    if d.arrangement.is_empty and len(d.fibers) != 1:
        report.violations.append(Issue("V7", f"empty arrangement needs one fiber, found {len(d.fibers)}"))
        return
    for label in sorted(labels - set(d.fibers)):
        report.violations.append(Issue("V7", "face has no fiber", label))
    for label in sorted(set(d.fibers) - labels):
        report.violations.append(Issue("V7", "fiber declared for an unknown face", label))


def validate(d: BlfDiagram) -> ValidationReport:
    """Check rules V1-V7. Never raises; problems come back as data."""
    report = ValidationReport()
    a = d.arrangement
    try:
        trace_faces(a)
    except InconsistentLabels as e:
        report.violations.append(Issue("V2", e.message, e.element))
        return report
    except BlfError as e:
        report.violations.append(Issue("V1", e.message, e.element))
        return report

    labels = face_labels(d)
    _check_fibers(d, labels, report)
    usable = _check_folds(d, report)

    for v in sorted(a.vertices.values(), key=lambda v: v.id):
        incident = {edge_at(a, v.id, s) for s in range(v.kind.valence)}
        if not incident <= set(d.folds):
            continue
        if v.kind == VertexKind.DOUBLE:
            _check_double(d, v.id, report)
        else:
            _check_cusp(d, v.id, report)

    _check_lefschetz(d, labels, report)
    log.debug("validated: %d violations, %d warnings (%d usable folds)",
              len(report.violations), len(report.warnings), len(usable))
    return report


def counts(d: BlfDiagram) -> Dict[str, int]:
    return {
        "double": d.n_double,
        "cusp": d.n_cusp,
        "edges": len(d.arrangement.edges),
        "circles": len(d.arrangement.circles),
        "lefschetz": d.n_lefschetz,
        "faces": len(face_labels(d)),
    }


def violation_codes(report: ValidationReport) -> List[str]:
    return [i.code for i in report.violations]
