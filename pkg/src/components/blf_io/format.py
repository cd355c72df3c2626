"""Reader and writer for ``.blf`` diagram files.

    blf 1
    arrangement
    vertex v1 double
    edge e1 v1:0 v1:1 left=A right=B
    circle c1 inside=A outside=B
    nested B{c1:A c2:C{c3:D}}        # shorthand for nested circles
    faces
    face A fiber=c0:2,c1:0
    folds
    fold e1 high=A low=B surgery=nonsep(c0)
    lefschetz
    point L1 face=A component=c0 order=1 cycle=1,0,0,0
    basepoints
    basepoints 0
    sections 0

Sections come in this order and each at most once. ``#`` starts a comment.
"""
from __future__ import annotations

import re
from typing import Dict, List, Optional, Set, Tuple, Union

from ..errors import BlfSyntaxError, DuplicateId, UnknownReference
from ..models import (
    ArrangementMap,
    BlfDiagram,
    Circle,
    Edge,
    End,
    FiberComponent,
    FiberDescription,
    Fold,
    HomologyClass,
    LefschetzPoint,
    SurgeryDescriptor,
    Vertex,
    VertexKind,
)

VERSION = "blf 1"
SECTIONS = ("arrangement", "faces", "folds", "lefschetz", "basepoints")
MAX_NESTING = 256

ID_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*")
INT_RE = re.compile(r"-?[0-9]+")
NONSEP_RE = re.compile(r"nonsep\(([A-Za-z_][A-Za-z0-9_.\-]*)\)")
SEP_RE = re.compile(r"sep\(([A-Za-z_][A-Za-z0-9_.\-]*),([0-9]+),([0-9]+)\)")


# ---------------------------------------------------------------------------
# Value syntax shared with move scripts and the CLI
# ---------------------------------------------------------------------------


def _int(text: str) -> int:
    if not INT_RE.fullmatch(text):
        raise ValueError(f"expected an integer, got {text!r}")
    return int(text)


def _ident(text: str, what: str = "id") -> str:
    if not ID_RE.fullmatch(text):
        raise ValueError(f"bad {what} {text!r}")
    return text


def parse_fiber(text: str) -> FiberDescription:
    comps = []
    for part in text.split(","):
        cid, sep, genus = part.partition(":")
        if not sep:
            raise ValueError(f"fiber component {part!r} needs the form id:genus")
        comps.append(FiberComponent(_ident(cid, "component"), _int(genus)))
    return FiberDescription(tuple(comps))


def parse_surgery(text: str) -> SurgeryDescriptor:
    m = NONSEP_RE.fullmatch(text)
    if m:
        return SurgeryDescriptor.nonseparating(m.group(1))
    m = SEP_RE.fullmatch(text)
    if m:
        return SurgeryDescriptor.separating(m.group(1), int(m.group(2)), int(m.group(3)))
    raise ValueError(f"bad surgery {text!r}; use nonsep(c) or sep(c,g1,g2)")


def parse_cycle(text: str) -> HomologyClass:
    if text == "-":
        return HomologyClass(0, ())
    return HomologyClass.of(*(_int(x) for x in text.split(",")))


def format_fiber(fiber: FiberDescription) -> str:
    return str(fiber)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Line:
    def __init__(self, number: int, text: str):
        self.number = number
        self.tokens: List[Tuple[str, int]] = [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", text)]
        self.text = text

    def error(self, message: str, index: int = 0) -> BlfSyntaxError:
        column = self.tokens[index][1] if index < len(self.tokens) else len(self.text) + 1
        return BlfSyntaxError(message, self.number, column)

    def column(self, index: int) -> int:
        return self.tokens[index][1] if index < len(self.tokens) else len(self.text) + 1

    def options(self, start: int, keys: Tuple[str, ...]) -> Dict[str, Tuple[str, int]]:
        found: Dict[str, Tuple[str, int]] = {}
        for index in range(start, len(self.tokens)):
            token, _ = self.tokens[index]
            key, sep, value = token.partition("=")
            if not sep or key not in keys:
                raise self.error(f"unexpected {token!r}; expected one of {', '.join(k + '=' for k in keys)}", index)
            if key in found:
                raise self.error(f"{key}= given twice", index)
            found[key] = (value, index)
        missing = [k for k in keys if k not in found]
        if missing:
            raise self.error(f"missing {', '.join(k + '=' for k in missing)}", len(self.tokens))
        return found


class _Parser:
    def __init__(self):
        self.vertices: Dict[str, Vertex] = {}
        self.edges: Dict[str, Edge] = {}
        self.circles: Dict[str, Circle] = {}
        self.fibers: Dict[str, FiberDescription] = {}
        self.folds: Dict[str, Fold] = {}
        self.points: Dict[str, LefschetzPoint] = {}
        self.basepoints: Optional[int] = None
        self.sections: Optional[int] = None
        self.edge_lines: Dict[str, _Line] = {}
        self.fold_lines: Dict[str, _Line] = {}
        self.point_lines: Dict[str, _Line] = {}

    def claim(self, line: _Line, index: int, ident: str, taken, what: str) -> str:
        if not ID_RE.fullmatch(ident):
            raise line.error(f"bad {what} id {ident!r}", index)
        if ident in taken:
            raise DuplicateId(f"duplicate {what} id {ident}", line.number, line.column(index), ident)
        return ident

    def arity(self, line: _Line, n: int) -> None:
        if len(line.tokens) != n:
            raise line.error(f"{line.tokens[0][0]} takes {n - 1} fields, got {len(line.tokens) - 1}",
                             min(n, len(line.tokens) - 1))

    def elements(self) -> Set[str]:
        return set(self.edges) | set(self.circles)

    # records -------------------------------------------------------------

    def vertex(self, line: _Line) -> None:
        self.arity(line, 3)
        vid = self.claim(line, 1, line.tokens[1][0], self.vertices, "vertex")
        kind = line.tokens[2][0]
        if kind not in ("double", "cusp"):
            raise line.error(f"vertex kind must be double or cusp, got {kind!r}", 2)
        self.vertices[vid] = Vertex(vid, VertexKind(kind))

    def _end(self, line: _Line, index: int) -> End:
        vid, sep, slot = line.tokens[index][0].partition(":")
        if not sep or not ID_RE.fullmatch(vid) or not INT_RE.fullmatch(slot):
            raise line.error(f"edge end must be vertex:slot, got {line.tokens[index][0]!r}", index)
        return End(vid, int(slot))

    def edge(self, line: _Line) -> None:
        if len(line.tokens) < 4:
            raise line.error("edge needs an id, two ends and left=/right=", len(line.tokens))
        eid = self.claim(line, 1, line.tokens[1][0], self.elements(), "edge")
        tail, head = self._end(line, 2), self._end(line, 3)
        opts = line.options(4, ("left", "right"))
        left = self._label(line, opts["left"])
        right = self._label(line, opts["right"])
        self.edges[eid] = Edge(eid, tail, head, left, right)
        self.edge_lines[eid] = line

    def _label(self, line: _Line, value: Tuple[str, int]) -> str:
        if not ID_RE.fullmatch(value[0]):
            raise line.error(f"bad face label {value[0]!r}", value[1])
        return value[0]

    def circle(self, line: _Line) -> None:
        if len(line.tokens) < 2:
            raise line.error("circle needs an id", 1)
        cid = self.claim(line, 1, line.tokens[1][0], self.elements(), "circle")
        opts = line.options(2, ("inside", "outside"))
        self.circles[cid] = Circle(cid, self._label(line, opts["inside"]), self._label(line, opts["outside"]))

    def nested(self, line: _Line, raw: str) -> None:
        start = raw.index("nested") + len("nested")
        for circle, column in _NestedReader(raw, start, line.number).read():
            if circle.id in self.elements():
                raise DuplicateId(f"duplicate circle id {circle.id}", line.number, column, circle.id)
            self.circles[circle.id] = circle

    def face(self, line: _Line) -> None:
        if len(line.tokens) < 2:
            raise line.error("face needs a label", 1)
        label = self.claim(line, 1, line.tokens[1][0], self.fibers, "face")
        value, index = line.options(2, ("fiber",))["fiber"]
        try:
            self.fibers[label] = parse_fiber(value)
        except ValueError as e:
            raise line.error(str(e), index) from None

    def fold(self, line: _Line) -> None:
        if len(line.tokens) < 2:
            raise line.error("fold needs an arc id", 1)
        fid = self.claim(line, 1, line.tokens[1][0], self.folds, "fold")
        opts = line.options(2, ("high", "low", "surgery"))
        value, index = opts["surgery"]
        try:
            surgery = parse_surgery(value)
        except ValueError as e:
            raise line.error(str(e), index) from None
        self.folds[fid] = Fold(fid, self._label(line, opts["high"]), self._label(line, opts["low"]), surgery)
        self.fold_lines[fid] = line

    def point(self, line: _Line) -> None:
        if len(line.tokens) < 2:
            raise line.error("point needs an id", 1)
        pid = self.claim(line, 1, line.tokens[1][0], self.points, "point")
        opts = line.options(2, ("face", "component", "order", "cycle"))
        try:
            component = _ident(opts["component"][0], "component")
        except ValueError as e:
            raise line.error(str(e), opts["component"][1]) from None
        try:
            order = _int(opts["order"][0])
        except ValueError as e:
            raise line.error(str(e), opts["order"][1]) from None
        try:
            cycle = parse_cycle(opts["cycle"][0])
        except ValueError as e:
            raise line.error(str(e), opts["cycle"][1]) from None
        self.points[pid] = LefschetzPoint(pid, self._label(line, opts["face"]), component, order, cycle)
        self.point_lines[pid] = line

    def count(self, line: _Line) -> None:
        self.arity(line, 2)
        key, (value, _) = line.tokens[0][0], line.tokens[1]
        if not INT_RE.fullmatch(value) or int(value) < 0:
            raise line.error(f"{key} must be a non-negative integer", 1)
        if getattr(self, key) is not None:
            raise DuplicateId(f"{key} given twice", line.number, line.column(0), key)
        setattr(self, key, int(value))

    # references ----------------------------------------------------------

    def resolve(self) -> None:
        for eid, e in sorted(self.edges.items()):
            for index, end in ((2, e.tail), (3, e.head)):
                if end.vertex not in self.vertices:
                    line = self.edge_lines[eid]
                    raise UnknownReference(f"edge {eid} ends at unknown vertex {end.vertex}",
                                           line.number, line.column(index), end.vertex)
        for fid in sorted(self.folds):
            if fid not in self.elements():
                line = self.fold_lines[fid]
                raise UnknownReference(f"fold for unknown arc {fid}", line.number, line.column(1), fid)
        for pid, p in sorted(self.points.items()):
            if p.face not in self.fibers:
                line = self.point_lines[pid]
                raise UnknownReference(f"point {pid} in unknown face {p.face}", line.number, line.column(2), p.face)

    def diagram(self) -> BlfDiagram:
        return BlfDiagram(
            arrangement=ArrangementMap(self.vertices, self.edges, self.circles),
            fibers=self.fibers,
            folds=self.folds,
            lefschetz=tuple(self.points.values()),
            basepoints=self.basepoints or 0,
            sections=self.sections or 0,
        )


class _NestedReader:
    """Recursive reader for ``LABEL{CIRCLE:LABEL{...} ...}``."""

    def __init__(self, text: str, start: int, line: int):
        self.text = text
        self.pos = start
        self.line = line
        self.found: List[Tuple[Circle, int]] = []

    def error(self, message: str) -> BlfSyntaxError:
        return BlfSyntaxError(message, self.line, self.pos + 1)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def ident(self, what: str) -> str:
        m = ID_RE.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected a {what}")
        self.pos = m.end()
        return m.group(0)

    def node(self, depth: int) -> str:
        if depth > MAX_NESTING:
            raise self.error(f"nesting deeper than {MAX_NESTING}")
        label = self.ident("face label")
        if self.pos < len(self.text) and self.text[self.pos] == "{":
            self.pos += 1
            while True:
                self.skip()
                if self.pos >= len(self.text):
                    raise self.error("unclosed '{'")
                if self.text[self.pos] == "}":
                    self.pos += 1
                    break
                column = self.pos + 1
                cid = self.ident("circle id")
                if self.pos >= len(self.text) or self.text[self.pos] != ":":
                    raise self.error("expected ':' after the circle id")
                self.pos += 1
                inside = self.node(depth + 1)
                self.found.append((Circle(cid, inside, label), column))
        return label

    def read(self) -> List[Tuple[Circle, int]]:
        self.skip()
        self.node(0)
        self.skip()
        if self.pos != len(self.text):
            raise self.error("unexpected text after the nested expression")
        return self.found


RECORDS = {
    "arrangement": ("vertex", "edge", "circle", "nested"),
    "faces": ("face",),
    "folds": ("fold",),
    "lefschetz": ("point",),
    "basepoints": ("basepoints", "sections"),
}


def parse(text: Union[str, bytes]) -> BlfDiagram:
    """Parse ``.blf`` text. Raises BlfSyntaxError, DuplicateId or UnknownReference."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as e:
            raise BlfSyntaxError(f"not UTF-8: {e.reason}", 0, e.start + 1) from None

    p = _Parser()
    section: Optional[str] = None
    seen_version = False
    for number, raw in enumerate(text.split("\n"), start=1):
        raw = raw.rstrip("\r")
        body = raw.split("#", 1)[0]
        line = _Line(number, body)
        if not line.tokens:
            continue
        head = line.tokens[0][0]
        if not seen_version:
            if body.strip() != VERSION:
                raise line.error(f"expected version line {VERSION!r}")
            seen_version = True
            continue
        if head in SECTIONS and len(line.tokens) == 1 and not (head == "basepoints" and section == "basepoints"):
            if section is not None and SECTIONS.index(head) <= SECTIONS.index(section):
                raise line.error(f"section {head} out of order")
            section = head
            continue
        if section is None:
            raise line.error(f"record {head!r} before any section")
        if head not in RECORDS[section]:
            raise line.error(f"unknown record {head!r} in section {section}")
        try:
            if head == "nested":
                p.nested(line, body)
            elif head in ("basepoints", "sections"):
                p.count(line)
            else:
                getattr(p, head)(line)
        except ValueError as e:
            raise line.error(str(e)) from None
    if not seen_version:
        raise BlfSyntaxError(f"missing version line {VERSION!r}", 1, 1)
    p.resolve()
    try:
        return p.diagram()
    except ValueError as e:
        raise BlfSyntaxError(str(e), 0, 0) from None


# ---------------------------------------------------------------------------
# Canonical writer
# ---------------------------------------------------------------------------


def serialize(d: BlfDiagram) -> str:
    a = d.arrangement
    out = [VERSION, "arrangement"]
    for vid in sorted(a.vertices):
        out.append(f"vertex {vid} {a.vertices[vid].kind.value}")
    for eid in sorted(a.edges):
        e = a.edges[eid]
        out.append(f"edge {eid} {e.tail.vertex}:{e.tail.slot} {e.head.vertex}:{e.head.slot} left={e.left} right={e.right}")
    for cid in sorted(a.circles):
        c = a.circles[cid]
        out.append(f"circle {cid} inside={c.inside} outside={c.outside}")
    out.append("faces")
    for label in sorted(d.fibers):
        out.append(f"face {label} fiber={format_fiber(d.fibers[label])}")
    out.append("folds")
    for fid in sorted(d.folds):
        f = d.folds[fid]
        out.append(f"fold {fid} high={f.high} low={f.low} surgery={f.surgery}")
    out.append("lefschetz")
    for p in d.lefschetz:
        out.append(f"point {p.id} face={p.face} component={p.component} order={p.order} cycle={p.cycle}")
    out.append("basepoints")
    out.append(f"basepoints {d.basepoints}")
    out.append(f"sections {d.sections}")
    return "\n".join(out) + "\n"
