from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property
from typing import Optional, List, Dict, Tuple, Mapping, Iterable


# ---------------------------------------------------------------------------
# Fibers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiberComponent:
    id: str
    genus: int

    def __post_init__(self):
        if not self.id:
            raise ValueError("fiber component id must be non-empty")
        if self.genus < 0:
            raise ValueError(f"genus of {self.id} must be non-negative, got {self.genus}")


@dataclass(frozen=True)
class FiberDescription:
    """Fiber over a face: a finite set of closed orientable surfaces.

    Components are kept sorted by id so equal fibers compare equal.
    """
    components: Tuple[FiberComponent, ...]

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=lambda c: c.id))
        if not comps:
            raise ValueError("a fiber needs at least one component")
        ids = [c.id for c in comps]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate fiber component ids: {ids}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, genera: Mapping[str, int]) -> "FiberDescription":
        return cls(tuple(FiberComponent(cid, g) for cid, g in genera.items()))

    @classmethod
    def surface(cls, genus: int, component: str = "c0") -> "FiberDescription":
        return cls((FiberComponent(component, genus),))

    @property
    def genera(self) -> Dict[str, int]:
        return {c.id: c.genus for c in self.components}

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(c.id for c in self.components)

    def genus_of(self, component: str) -> Optional[int]:
        return self.genera.get(component)

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    def __str__(self) -> str:
        return ",".join(f"{c.id}:{c.genus}" for c in self.components)


class SurgeryKind(str, Enum):
    NONSEPARATING = "nonsep"
    SEPARATING = "sep"


@dataclass(frozen=True)
class SurgeryDescriptor:
    """Fiberwise 2-handle seen from the higher side of a fold."""
    kind: SurgeryKind
    component: str
    g1: Optional[int] = None
    g2: Optional[int] = None

    def __post_init__(self):
        if self.kind == SurgeryKind.SEPARATING:
            if self.g1 is None or self.g2 is None:
                raise ValueError("separating surgery needs both genera")
            if self.g1 < 0 or self.g2 < 0:
                raise ValueError("separating surgery genera must be non-negative")
            lo, hi = sorted((self.g1, self.g2))
            object.__setattr__(self, "g1", lo)
            object.__setattr__(self, "g2", hi)
        elif self.g1 is not None or self.g2 is not None:
            raise ValueError("nonseparating surgery takes no genera")

    @classmethod
    def nonseparating(cls, component: str) -> "SurgeryDescriptor":
        return cls(SurgeryKind.NONSEPARATING, component)

    @classmethod
    def separating(cls, component: str, g1: int, g2: int) -> "SurgeryDescriptor":
        return cls(SurgeryKind.SEPARATING, component, g1, g2)

    @property
    def is_separating(self) -> bool:
        return self.kind == SurgeryKind.SEPARATING

    def __str__(self) -> str:
        if self.is_separating:
            return f"sep({self.component},{self.g1},{self.g2})"
        return f"nonsep({self.component})"


# ---------------------------------------------------------------------------
# Mapping class group
# ---------------------------------------------------------------------------


class Handedness(str, Enum):
    RIGHT = "right"
    LEFT = "left"

    @property
    def sign(self) -> int:
        return 1 if self == Handedness.RIGHT else -1

    def reversed(self) -> "Handedness":
        return Handedness.LEFT if self == Handedness.RIGHT else Handedness.RIGHT


@dataclass(frozen=True)
class HomologyClass:
    """Class in H_1 of a closed genus-g surface, basis a1,b1,...,ag,bg."""
    genus: int
    coords: Tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(x) for x in self.coords)
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if len(coords) != 2 * self.genus:
            raise ValueError(f"class on genus {self.genus} needs {2 * self.genus} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: int) -> "HomologyClass":
        if len(coords) % 2:
            raise ValueError("a homology class needs an even number of coordinates")
        return cls(len(coords) // 2, tuple(coords))

    @classmethod
    def basis(cls, genus: int, index: int) -> "HomologyClass":
        coords = [0] * (2 * genus)
        coords[index] = 1
        return cls(genus, tuple(coords))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(self.genus, tuple(-x for x in self.coords))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.coords) if self.coords else "-"


@dataclass(frozen=True)
class TwistLetter:
    cycle: HomologyClass
    handedness: Handedness = Handedness.RIGHT


@dataclass(frozen=True)
class TwistWord:
    """Ordered Dehn twists; the rightmost letter acts first."""
    genus: int
    letters: Tuple[TwistLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter.cycle.genus != self.genus:
                raise ValueError(f"letter on genus {letter.cycle.genus} in a genus {self.genus} word")

    @classmethod
    def right_handed(cls, genus: int, cycles: Iterable[HomologyClass]) -> "TwistWord":
        return cls(genus, tuple(TwistLetter(c, Handedness.RIGHT) for c in cycles))


# ---------------------------------------------------------------------------
# Arrangements
# ---------------------------------------------------------------------------


class VertexKind(str, Enum):
    DOUBLE = "double"
    CUSP = "cusp"

    @property
    def valence(self) -> int:
        return 4 if self == VertexKind.DOUBLE else 2


@dataclass(frozen=True)
class Vertex:
    id: str
    kind: VertexKind


@dataclass(frozen=True)
class End:
    vertex: str
    slot: int


@dataclass(frozen=True)
class Edge:
    """Fold arc between two vertex slots; left/right are face labels seen
    when walking from tail to head."""
    id: str
    tail: End
    head: End
    left: str
    right: str

    def reversed(self) -> "Edge":
        return Edge(self.id, self.head, self.tail, self.right, self.left)


@dataclass(frozen=True)
class Circle:
    """Vertexless fold circle; inside is on the left of its positive traversal."""
    id: str
    inside: str
    outside: str


# A dart is an element id with a direction: +1 along the element, -1 against it.
Dart = Tuple[str, int]


def dart_key(dart: Dart) -> Tuple[str, int]:
    return (dart[0], 0 if dart[1] > 0 else 1)


def format_dart(dart: Dart) -> str:
    return f"{dart[0]}{'+' if dart[1] > 0 else '-'}"


@dataclass(frozen=True)
class ArrangementMap:
    vertices: Dict[str, Vertex] = field(default_factory=dict)
    edges: Dict[str, Edge] = field(default_factory=dict)
    circles: Dict[str, Circle] = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return not (self.vertices or self.edges or self.circles)

    @property
    def element_ids(self) -> List[str]:
        return sorted(list(self.edges) + list(self.circles))

    @cached_property
    def slot_index(self) -> Dict[Tuple[str, int], Tuple[str, int]]:
        """(vertex, slot) -> outgoing dart leaving the vertex through that slot."""
        index: Dict[Tuple[str, int], Tuple[str, int]] = {}
        for e in self.edges.values():
            index[(e.tail.vertex, e.tail.slot)] = (e.id, 1)
            index[(e.head.vertex, e.head.slot)] = (e.id, -1)
        return index

    def left_of(self, dart: Dart) -> str:
        eid, sign = dart
        if eid in self.edges:
            e = self.edges[eid]
            return e.left if sign > 0 else e.right
        c = self.circles[eid]
        return c.inside if sign > 0 else c.outside

    def sides(self, element: str) -> Tuple[str, str]:
        """(left, right) of an edge, (inside, outside) of a circle."""
        return self.left_of((element, 1)), self.left_of((element, -1))

    def has_element(self, element: str) -> bool:
        return element in self.edges or element in self.circles

    @property
    def labels(self) -> List[str]:
        found = set()
        for element in self.element_ids:
            found.update(self.sides(element))
        return sorted(found)

    def count(self, kind: VertexKind) -> int:
        return sum(1 for v in self.vertices.values() if v.kind == kind)


@dataclass(frozen=True)
class Face:
    id: str
    label: Optional[str]
    circuits: Tuple[Tuple[Dart, ...], ...]


# ---------------------------------------------------------------------------
# Diagrams
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fold:
    element: str
    high: str
    low: str
    surgery: SurgeryDescriptor


@dataclass(frozen=True)
class LefschetzPoint:
    id: str
    face: str
    component: str
    order: int
    cycle: HomologyClass


@dataclass(frozen=True)
class BlfDiagram:
    """Broken Lefschetz fibration (or pencil) over S^2.

    Fibers are keyed by face label, folds by edge/circle id.
    """
    arrangement: ArrangementMap
    fibers: Dict[str, FiberDescription]
    folds: Dict[str, Fold] = field(default_factory=dict)
    lefschetz: Tuple[LefschetzPoint, ...] = ()
    basepoints: int = 0
    sections: int = 0

    def __post_init__(self):
        if self.basepoints < 0 or self.sections < 0:
            raise ValueError("basepoint and section counts must be non-negative")
        object.__setattr__(self, "lefschetz", tuple(sorted(self.lefschetz, key=lambda p: p.id)))

    @property
    def is_pencil(self) -> bool:
        return self.basepoints > 0

    @property
    def n_double(self) -> int:
        return self.arrangement.count(VertexKind.DOUBLE)

    @property
    def n_cusp(self) -> int:
        return self.arrangement.count(VertexKind.CUSP)

    @property
    def n_lefschetz(self) -> int:
        return len(self.lefschetz)

    def points_in(self, face: str) -> List[LefschetzPoint]:
        return sorted((p for p in self.lefschetz if p.face == face), key=lambda p: (p.order, p.id))

    def point(self, point_id: str) -> Optional[LefschetzPoint]:
        for p in self.lefschetz:
            if p.id == point_id:
                return p
        return None

    def with_changes(self, **changes) -> "BlfDiagram":
        return replace(self, **changes)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Issue:
    code: str  # V1..V7 violations, W1..W2 warnings
    message: str
    element: Optional[str] = None

    def diagnostic(self) -> str:
        return f"{self.code} {self.element or '-'} {self.message}"


@dataclass
class ValidationReport:
    violations: List[Issue] = field(default_factory=list)
    warnings: List[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self, strict: bool = False) -> List[str]:
        issues = self.violations + (self.warnings if strict else [])
        return [i.diagnostic() for i in issues]


@dataclass
class ConnectivityReport:
    faces: Dict[str, bool]
    connected: bool


class StratumKind(str, Enum):
    FACE = "face"
    LEFSCHETZ = "lefschetz"
    FOLD = "fold"
    DOUBLE = "double"
    CUSP = "cusp"


@dataclass(frozen=True)
class Stratum:
    kind: StratumKind
    id: str


@dataclass(frozen=True)
class MoveInvocation:
    name: str
    args: Tuple[str, ...] = ()
    options: Tuple[Tuple[str, str], ...] = ()
    line: int = 0

    def option(self, key: str) -> Optional[str]:
        for k, v in self.options:
            if k == key:
                return v
        return None


@dataclass(frozen=True)
class MoveScript:
    invocations: Tuple[MoveInvocation, ...] = ()
