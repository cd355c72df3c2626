"""Face tracing for fold-image arrangements on the 2-sphere.

Darts are traced through the rotation system (slots counter-clockwise at each
vertex); the resulting circuits are grouped into faces by their side labels.
Side labels are what place disconnected components relative to each other.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Set, Tuple

from ..errors import InconsistentLabels, MalformedArrangement, NotSphere
from ..models import ArrangementMap, Dart, Face, format_dart, dart_key
from ..utils.logging import get_logger


log = get_logger(__name__)


def check_structure(a: ArrangementMap) -> None:
    """Every edge end points at a real vertex slot and every slot is used once."""
    used: Dict[Tuple[str, int], str] = {}
    for e in a.edges.values():
        for end in (e.tail, e.head):
            v = a.vertices.get(end.vertex)
            if v is None:
                raise MalformedArrangement(f"edge {e.id} ends at unknown vertex {end.vertex}", e.id)
            if not 0 <= end.slot < v.kind.valence:
                raise MalformedArrangement(
                    f"edge {e.id} uses slot {end.slot} of {v.kind.value} vertex {v.id}", e.id)
            key = (end.vertex, end.slot)
            if key in used and not (used[key] == e.id and e.tail == e.head):
                raise MalformedArrangement(f"slot {end.vertex}:{end.slot} used twice", e.id)
            if e.tail == e.head:
                raise MalformedArrangement(f"edge {e.id} starts and ends in the same slot", e.id)
            used[key] = e.id
    for v in a.vertices.values():
        for slot in range(v.kind.valence):
            if (v.id, slot) not in used:
                raise MalformedArrangement(f"slot {v.id}:{slot} has no edge", v.id)
    clash = set(a.edges).intersection(a.circles)
    if clash:
        raise MalformedArrangement(f"ids used by both an edge and a circle: {sorted(clash)}", sorted(clash)[0])


def next_dart(a: ArrangementMap, dart: Dart) -> Dart:
    """Next dart along the face on the left of ``dart``."""
    eid, sign = dart
    if eid in a.circles:
        return dart
    e = a.edges[eid]
    arrival = e.head if sign > 0 else e.tail
    valence = a.vertices[arrival.vertex].kind.valence
    return a.slot_index[(arrival.vertex, (arrival.slot - 1) % valence)]


def all_darts(a: ArrangementMap) -> List[Dart]:
    return sorted(((x, s) for x in a.element_ids for s in (1, -1)), key=dart_key)


def circuits(a: ArrangementMap) -> List[Tuple[Dart, ...]]:
    """Boundary circuits, each rotated to start at its lowest dart."""
    seen: Set[Dart] = set()
    found: List[Tuple[Dart, ...]] = []
    for start in all_darts(a):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        d = next_dart(a, start)
        while d != start:
            if d in seen:
                raise MalformedArrangement(f"dart {format_dart(d)} reached twice while tracing", d[0])
            walk.append(d)
            seen.add(d)
            d = next_dart(a, d)
        found.append(tuple(walk))
    return found


def components(a: ArrangementMap) -> List[Set[str]]:
    """Connected components as sets of element ids (a circle is its own component)."""
    parent: Dict[str, str] = {}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in a.vertices:
        parent["v:" + v] = "v:" + v
    for e in a.edges.values():
        parent["e:" + e.id] = "e:" + e.id
    for e in a.edges.values():
        for end in (e.tail, e.head):
            ra, rb = find("e:" + e.id), find("v:" + end.vertex)
            if ra != rb:
                parent[ra] = rb

    groups: Dict[str, Set[str]] = defaultdict(set)
    for e in a.edges:
        groups[find("e:" + e)].add(e)
    found = [groups[k] for k in sorted(groups, key=lambda k: min(groups[k]))]
    found.extend({c} for c in sorted(a.circles))
    return sorted(found, key=min)


def component_vertices(a: ArrangementMap, elements: Set[str]) -> Set[str]:
    return {end.vertex for eid in elements if eid in a.edges for end in (a.edges[eid].tail, a.edges[eid].head)}


def circuit_label(a: ArrangementMap, circuit: Tuple[Dart, ...]) -> str:
    labels = {a.left_of(d) for d in circuit}
    if len(labels) != 1:
        raise InconsistentLabels(
            f"circuit {' '.join(format_dart(d) for d in circuit)} carries labels {sorted(labels)}", circuit[0][0])
    return labels.pop()


def trace_faces(a: ArrangementMap) -> Tuple[Face, ...]:
    """Faces of the arrangement with their boundary circuits.

    Raises MalformedArrangement for a broken rotation system, InconsistentLabels
    when side labels disagree with the traced circuits and NotSphere when the
    arrangement cannot sit on S^2.
    """
    check_structure(a)
    if a.is_empty:
        return (Face("f0", None, ()),)

    traced = circuits(a)
    owner: Dict[Dart, int] = {}
    comps = components(a)
    for index, comp in enumerate(comps):
        for x in comp:
            owner[(x, 1)] = owner[(x, -1)] = index

    by_component: Dict[int, List[Tuple[Dart, ...]]] = defaultdict(list)
    for circuit in traced:
        by_component[owner[circuit[0]]].append(circuit)

    for index, comp in enumerate(comps):
        n_faces = len(by_component[index])
        if any(x in a.circles for x in comp):
            v, e = 0, 0
        else:
            v, e = len(component_vertices(a, comp)), len(comp)
        if v - e + n_faces != 2:
            raise NotSphere(f"component {min(comp)} has V - E + F = {v} - {e} + {n_faces} != 2", min(comp))

    faces_of: Dict[str, List[Tuple[Dart, ...]]] = defaultdict(list)
    incidence: Set[Tuple[int, str]] = set()
    for index in range(len(comps)):
        for circuit in by_component[index]:
            label = circuit_label(a, circuit)
            if (index, label) in incidence:
                raise InconsistentLabels(
                    f"two faces of component {min(comps[index])} are both labelled {label}", min(comps[index]))
            incidence.add((index, label))
            faces_of[label].append(circuit)

    # the component/face incidence graph of a planar arrangement is a tree
    n_nodes = len(comps) + len(faces_of)
    if len(incidence) != n_nodes - 1 or not _connected(len(comps), incidence):
        raise NotSphere(
            f"face labels do not nest on a sphere ({len(comps)} components, {len(faces_of)} faces, "
            f"{len(incidence)} incidences)")

    ordered = sorted(faces_of.items(), key=lambda kv: min(dart_key(c[0]) for c in kv[1]))
    faces = tuple(
        Face(f"f{i}", label, tuple(sorted(cs, key=lambda c: dart_key(c[0]))))
        for i, (label, cs) in enumerate(ordered)
    )
    log.debug("traced %d faces from %d circuits", len(faces), len(traced))
    return faces


def _connected(n_components: int, incidence: Set[Tuple[int, str]]) -> bool:
    adjacency: Dict[str, Set[str]] = defaultdict(set)
    for index, label in incidence:
        adjacency["k%d" % index].add("f:" + label)
        adjacency["f:" + label].add("k%d" % index)
    if not adjacency:
        return n_components <= 1
    start = next(iter(adjacency))
    seen = {start}
    stack = [start]
    while stack:
        node = stack.pop()
        for nxt in adjacency[node]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(adjacency)


# ---------------------------------------------------------------------------
# Local structure at vertices
# ---------------------------------------------------------------------------


def outgoing(a: ArrangementMap, vertex: str, slot: int) -> Dart:
    return a.slot_index[(vertex, slot)]


def quadrant_label(a: ArrangementMap, vertex: str, slot: int) -> str:
    """Label of the quadrant between ``slot`` and the next slot counter-clockwise."""
    return a.left_of(outgoing(a, vertex, slot))


def edge_at(a: ArrangementMap, vertex: str, slot: int) -> str:
    return outgoing(a, vertex, slot)[0]
