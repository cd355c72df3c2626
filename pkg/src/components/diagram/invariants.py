from __future__ import annotations

from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from ..errors import InvalidResult, IsPencil, NotApplicable, UnknownStratum
from ..fiber import euler_of_fiber
from ..mcg import apply_matrix, as_rows, compose_word, round_handle_check
from ..models import (
    BlfDiagram,
    ConnectivityReport,
    FiberDescription,
    Handedness,
    HomologyClass,
    Stratum,
    StratumKind,
    SurgeryKind,
    TwistLetter,
    TwistWord,
    VertexKind,
)
from .arrangement import edge_at, quadrant_label, trace_faces
from .validation import high_quadrant


STRATUM_COLUMNS = ["kind", "id", "chi_c", "fiber_euler", "contribution"]


def _fiber(d: BlfDiagram, label: str) -> FiberDescription:
    try:
        return d.fibers[label]
    except KeyError:
        raise InvalidResult(f"face {label} has no fiber", element=label) from None


def _face_label(d: BlfDiagram, label: Optional[str]) -> str:
    if label is not None:
        return label
    if len(d.fibers) != 1:
        raise InvalidResult(f"empty arrangement needs exactly one fiber, found {len(d.fibers)}")
    return next(iter(d.fibers))


def stratum_fiber_euler(d: BlfDiagram, stratum: Stratum) -> int:
    """Euler characteristic of the fiber over one point of ``stratum``."""
    a = d.arrangement
    if stratum.kind == StratumKind.FACE:
        labels = set(a.labels) if not a.is_empty else set(d.fibers)
        if stratum.id not in labels:
            raise UnknownStratum(f"no face {stratum.id}", stratum.id)
        return euler_of_fiber(_fiber(d, stratum.id))
    if stratum.kind == StratumKind.LEFSCHETZ:
        p = d.point(stratum.id)
        if p is None:
            raise UnknownStratum(f"no Lefschetz point {stratum.id}", stratum.id)
        return euler_of_fiber(_fiber(d, p.face)) + 1
    if stratum.kind == StratumKind.FOLD:
        fold = d.folds.get(stratum.id)
        if fold is None or not a.has_element(stratum.id):
            raise UnknownStratum(f"no fold arc {stratum.id}", stratum.id)
        return euler_of_fiber(_fiber(d, fold.high)) + 1

    v = a.vertices.get(stratum.id)
    if v is None or v.kind.value != stratum.kind.value:
        raise UnknownStratum(f"no {stratum.kind.value} vertex {stratum.id}", stratum.id)
    if v.kind == VertexKind.DOUBLE:
        oo = high_quadrant(d, v.id)
        if oo is None:
            raise InvalidResult(f"double vertex {v.id} has no high quadrant", element=v.id)
        return euler_of_fiber(_fiber(d, quadrant_label(a, v.id, oo))) + 2
    return euler_of_fiber(_fiber(d, d.folds[edge_at(a, v.id, 0)].low))


def _strata_rows(d: BlfDiagram) -> List[Dict]:
    a = d.arrangement
    rows: List[Dict] = []

    def add(kind: StratumKind, sid: str, chi_c: int, fiber_euler: int) -> None:
        rows.append({
            "kind": kind.value,
            "id": sid,
            "chi_c": chi_c,
            "fiber_euler": fiber_euler,
            "contribution": chi_c * fiber_euler,
        })

    for face in trace_faces(a):
        label = _face_label(d, face.label)
        inside = d.points_in(label)
        add(StratumKind.FACE, label, 2 - len(face.circuits) - len(inside), euler_of_fiber(_fiber(d, label)))
        for p in inside:
            add(StratumKind.LEFSCHETZ, p.id, 1, stratum_fiber_euler(d, Stratum(StratumKind.LEFSCHETZ, p.id)))
    for element in a.element_ids:
        chi_c = -1 if element in a.edges else 0
        add(StratumKind.FOLD, element, chi_c, stratum_fiber_euler(d, Stratum(StratumKind.FOLD, element)))
    for v in sorted(a.vertices):
        kind = StratumKind(a.vertices[v].kind.value)
        add(kind, v, 1, stratum_fiber_euler(d, Stratum(kind, v)))
    return rows


def stratum_table(d: BlfDiagram) -> pd.DataFrame:
    """One row per stratum; the contribution column sums to e(X)."""
    if d.is_pencil:
        raise IsPencil(f"pencil with {d.basepoints} base points; blow up first")
    rows = _strata_rows(d)
    if not rows:
        return pd.DataFrame(columns=STRATUM_COLUMNS)
    return pd.DataFrame(rows, columns=STRATUM_COLUMNS)


def euler_characteristic(d: BlfDiagram) -> int:
    if d.is_pencil:
        raise IsPencil(f"pencil with {d.basepoints} base points; blow up first")
    return int(sum(r["contribution"] for r in _strata_rows(d)))


def parity_check(d: BlfDiagram) -> bool:
    return (euler_characteristic(d) - d.n_lefschetz - d.n_cusp) % 2 == 0


def thom_reduction_target(d: BlfDiagram) -> int:
    """Fewest Lefschetz points a broken fibration on the same total space can have."""
    return euler_characteristic(d) % 2


def connectivity_report(d: BlfDiagram) -> ConnectivityReport:
    faces = {label: fiber.connected for label, fiber in sorted(d.fibers.items())}
    return ConnectivityReport(faces=faces, connected=all(faces.values()))


# ---------------------------------------------------------------------------
# Monodromy
# ---------------------------------------------------------------------------


def _word_component(d: BlfDiagram, face: str, component: Optional[str]) -> str:
    fiber = d.fibers.get(face)
    if fiber is None:
        raise UnknownStratum(f"no face {face}", face)
    if component is None:
        if not fiber.connected:
            raise NotApplicable(f"fiber {fiber} over {face} is disconnected; name a component", face)
        return fiber.ids[0]
    if fiber.genus_of(component) is None:
        raise NotApplicable(f"component {component} not in fiber {fiber}", face)
    return component


def lefschetz_word(
    d: BlfDiagram,
    face: str,
    component: Optional[str] = None,
    handedness: Handedness = Handedness.RIGHT,
) -> TwistWord:
    """Twist word of the face's Lefschetz points in factorization order.

    The point with the lowest order is the leftmost letter, so it acts last.
    """
    cid = _word_component(d, face, component)
    genus = d.fibers[face].genus_of(cid)
    letters = tuple(
        TwistLetter(p.cycle, handedness) for p in d.points_in(face) if p.component == cid
    )
    return TwistWord(genus, letters)


def check_monodromy(
    d: BlfDiagram,
    face: str,
    z: HomologyClass,
    component: Optional[str] = None,
    handedness: Handedness = Handedness.RIGHT,
) -> bool:
    return round_handle_check(lefschetz_word(d, face, component, handedness), z)


def monodromy_image(
    d: BlfDiagram,
    face: str,
    z: HomologyClass,
    component: Optional[str] = None,
    handedness: Handedness = Handedness.RIGHT,
) -> HomologyClass:
    return apply_matrix(compose_word(lefschetz_word(d, face, component, handedness)), z)


def round_handle_report(d: BlfDiagram, handedness: Handedness = Handedness.RIGHT) -> pd.DataFrame:
    """Monodromy matrices of the higher faces whose round handles need checking.

    One row per fold with a nonseparating surgery on a positive-genus
    component whose higher face carries Lefschetz points.
    """
    rows = []
    for element, fold in sorted(d.folds.items()):
        if fold.surgery.kind != SurgeryKind.NONSEPARATING or not d.points_in(fold.high):
            continue
        genus = d.fibers[fold.high].genus_of(fold.surgery.component)
        if not genus:
            continue
        word = lefschetz_word(d, fold.high, fold.surgery.component, handedness)
        M = compose_word(word)
        rows.append({
            "fold": element,
            "face": fold.high,
            "component": fold.surgery.component,
            "genus": genus,
            "letters": len(word.letters),
            "trace": int(np.trace(M)),
            "matrix": as_rows(M),
        })
    return pd.DataFrame(rows, columns=["fold", "face", "component", "genus", "letters", "trace", "matrix"])
