"""
Charts as labelled, oriented rotation systems.

Edge e owns two darts: 2e is its tail (the "from" end, oriented outward at
that vertex) and 2e+1 its head (the "to" end, oriented inward). A vertex
lists its darts counterclockwise. A hoop is an edge with neither dart placed.
"""

from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple
from dataclasses import dataclass
from enum import Enum

from errors import ChartError, GenusMismatchError
from mcg.words import GenusContext, Letter

EdgeLabel = Letter

# ─────────────────────────────────────────────────────────────
# Vertex and Edge Types
# ─────────────────────────────────────────────────────────────

class VertexKind(Enum):
    BLACK = "black"                          # degree 1
    CROSSING = "crossing"                    # degree 4
    BRAIDING = "braiding"                    # degree 6
    NUCLEON_OUT = "nucleon_out"              # degree 4(2g+1), all outward
    NUCLEON_IN = "nucleon_in"                # degree 4(2g+1), all inward
    BIG_NUCLEON_OUT = "big_nucleon_out"      # degree 2(g+1)(2g+1), counterclockwise, outward
    BIG_NUCLEON_IN = "big_nucleon_in"        # degree 2(g+1)(2g+1), clockwise, inward
    TRANSITION = "transition"                # degree 2(4g+3); param = i
    TRANSITION_CW = "transition_cw"          # mirror of transition, from H3inv; param = i
    SIGMA_BURST_OUT = "sigma_burst_out"      # degree 4h(2h+1)+1; param = h
    SIGMA_BURST_IN = "sigma_burst_in"


PARAM_KINDS = frozenset({
    VertexKind.TRANSITION, VertexKind.TRANSITION_CW, VertexKind.SIGMA_BURST_OUT, VertexKind.SIGMA_BURST_IN,
})
TRANSITION_KINDS = frozenset({VertexKind.TRANSITION, VertexKind.TRANSITION_CW})


class Direction(Enum):
    OUT = "out"
    IN = "in"

    def flipped(self) -> "Direction":
        return Direction.IN if self is Direction.OUT else Direction.OUT


def dart_edge(d: int) -> int:
    return d >> 1


def dart_direction(d: int) -> Direction:
    return Direction.OUT if d % 2 == 0 else Direction.IN


def twin(d: int) -> int:
    return d ^ 1


def expected_degree(kind: VertexKind, g: int, param: Optional[int] = None) -> int:
    L = 2 * g + 1
    if kind is VertexKind.BLACK:
        return 1
    if kind is VertexKind.CROSSING:
        return 4
    if kind is VertexKind.BRAIDING:
        return 6
    if kind in (VertexKind.NUCLEON_OUT, VertexKind.NUCLEON_IN):
        return 4 * L
    if kind in (VertexKind.BIG_NUCLEON_OUT, VertexKind.BIG_NUCLEON_IN):
        return 2 * (g + 1) * L
    if kind in TRANSITION_KINDS:
        return 2 * (4 * g + 3)
    h = param or 0
    return 4 * h * (2 * h + 1) + 1


@dataclass(frozen=True)
class ChartEdge:
    id: int
    label: EdgeLabel
    tail: Optional[int] = None       # vertex id at dart 2·id
    head: Optional[int] = None       # vertex id at dart 2·id+1

    @property
    def is_hoop(self) -> bool:
        return self.tail is None and self.head is None


@dataclass(frozen=True)
class ChartVertex:
    id: int
    kind: VertexKind
    rotation: Tuple[int, ...]        # darts, counterclockwise
    param: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(self.rotation))

    @property
    def degree(self) -> int:
        return len(self.rotation)


@dataclass(frozen=True)
class Chart:
    genus: GenusContext
    vertices: Tuple[ChartVertex, ...] = ()
    edges: Tuple[ChartEdge, ...] = ()
    outer_face: Optional[int] = None     # a dart on the declared outer face

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    @cached_property
    def dart_home(self) -> Dict[int, Tuple[int, int]]:
        """dart -> (vertex id, slot in rotation)"""
        home: Dict[int, Tuple[int, int]] = {}
        for v in self.vertices:
            for slot, d in enumerate(v.rotation):
                home[d] = (v.id, slot)
        return home

    def vertex(self, vid: int) -> ChartVertex:
        return self.vertices[vid]

    def edge(self, eid: int) -> ChartEdge:
        return self.edges[eid]

    def label_of(self, d: int) -> EdgeLabel:
        return self.edges[dart_edge(d)].label

    def ccw_next(self, d: int) -> int:
        vid, slot = self.dart_home[d]
        rot = self.vertices[vid].rotation
        return rot[(slot + 1) % len(rot)]

    def signature(self, v: ChartVertex) -> List[Tuple[EdgeLabel, Direction]]:
        """(label, direction) around v, counterclockwise"""
        return [(self.label_of(d), dart_direction(d)) for d in v.rotation]

    def other_end(self, d: int) -> Optional[int]:
        """Vertex at the twin dart"""
        home = self.dart_home.get(twin(d))
        return None if home is None else home[0]

    @property
    def is_empty(self) -> bool:
        return not self.vertices and not self.edges


# ─────────────────────────────────────────────────────────────
# Builder
# ─────────────────────────────────────────────────────────────

class ChartBuilder:
    """
    Mutable chart under construction. Ids are allocated freely and compacted
    by `build`, which also derives every edge's endpoints from the rotations.
    """

    def __init__(self, genus: GenusContext):
        self.genus = genus
        self.labels: Dict[int, EdgeLabel] = {}
        self.vertices: Dict[int, Tuple[VertexKind, List[int], Optional[int]]] = {}
        self.where: Dict[int, int] = {}          # dart -> vertex id
        self._next_edge = 0
        self._next_vertex = 0
        self.outer_face: Optional[int] = None

    @classmethod
    def from_chart(cls, chart: Chart) -> "ChartBuilder":
        b = cls(chart.genus)
        for e in chart.edges:
            b.labels[e.id] = e.label
        for v in chart.vertices:
            b.vertices[v.id] = (v.kind, list(v.rotation), v.param)
            for d in v.rotation:
                b.where[d] = v.id
        b._next_edge = len(chart.edges)
        b._next_vertex = len(chart.vertices)
        b.outer_face = chart.outer_face
        return b

    def add_edge(self, label: EdgeLabel) -> int:
        label.check(self.genus)
        e = self._next_edge
        self._next_edge += 1
        self.labels[e] = label
        return e

    def add_vertex(self, kind: VertexKind, darts: Sequence[int], param: Optional[int] = None) -> int:
        v = self._next_vertex
        self._next_vertex += 1
        for d in darts:
            if d in self.where:
                raise ChartError(f"dart {d} already attached to vertex {self.where[d]}")
            if dart_edge(d) not in self.labels:
                raise ChartError(f"dart {d} belongs to no edge")
            self.where[d] = v
        self.vertices[v] = (kind, list(darts), param)
        return v

    def add_black(self, d: int) -> int:
        return self.add_vertex(VertexKind.BLACK, [d])

    def remove_vertex(self, v: int) -> Tuple[VertexKind, List[int], Optional[int]]:
        kind, darts, param = self.vertices.pop(v)
        for d in darts:
            self.where.pop(d, None)
        return kind, darts, param

    def remove_edge(self, e: int) -> None:
        for d in (2 * e, 2 * e + 1):
            v = self.where.pop(d, None)
            if v is not None:
                self.vertices[v][1].remove(d)
        del self.labels[e]

    def replace_dart(self, old: int, new: int) -> None:
        """Put `new` in the rotation slot held by `old`."""
        v = self.where.pop(old, None)
        if v is None:
            return
        darts = self.vertices[v][1]
        darts[darts.index(old)] = new
        self.where[new] = v

    def reverse_edge(self, e: int) -> None:
        """Swap the two ends of edge e, flipping its orientation."""
        tail, head = self.where.pop(2 * e, None), self.where.pop(2 * e + 1, None)
        swap = {2 * e: 2 * e + 1, 2 * e + 1: 2 * e}
        for v in {tail, head} - {None}:
            kind, darts, param = self.vertices[v]
            self.vertices[v] = (kind, [swap.get(d, d) for d in darts], param)
        if tail is not None:
            self.where[2 * e + 1] = tail
        if head is not None:
            self.where[2 * e] = head

    def build_with_maps(self) -> Tuple[Chart, Dict[int, int], Dict[int, int]]:
        """Chart plus the (old -> new) vertex and edge id maps"""
        emap = {e: k for k, e in enumerate(sorted(self.labels))}
        vmap = {v: k for k, v in enumerate(sorted(self.vertices))}

        def nd(d: int) -> int:
            return 2 * emap[dart_edge(d)] + (d & 1)

        vertices = []
        for v in sorted(self.vertices):
            kind, darts, param = self.vertices[v]
            vertices.append(ChartVertex(vmap[v], kind, tuple(nd(d) for d in darts), param))
        edges = []
        for e in sorted(self.labels):
            tail = self.where.get(2 * e)
            head = self.where.get(2 * e + 1)
            edges.append(ChartEdge(
                emap[e], self.labels[e],
                None if tail is None else vmap[tail],
                None if head is None else vmap[head],
            ))
        outer = None
        if self.outer_face is not None and dart_edge(self.outer_face) in emap:
            outer = nd(self.outer_face)
        return Chart(self.genus, tuple(vertices), tuple(edges), outer), vmap, emap

    def build(self) -> Chart:
        return self.build_with_maps()[0]


# ─────────────────────────────────────────────────────────────
# Product
# ─────────────────────────────────────────────────────────────

def product(*charts: Chart) -> Chart:
    """Disjoint union Γ ⊕ Γ' sharing one outer face (the first declared one wins)."""
    if not charts:
        raise ChartError("product needs at least one chart")
    genus = charts[0].genus
    vertices: List[ChartVertex] = []
    edges: List[ChartEdge] = []
    outer: Optional[int] = None
    for c in charts:
        if c.genus != genus:
            raise GenusMismatchError(f"cannot multiply charts of genus {genus.g} and {c.genus.g}")
        dv, de = len(vertices), len(edges)

        def shift(v: Optional[int]) -> Optional[int]:
            return None if v is None else v + dv

        vertices.extend(
            ChartVertex(v.id + dv, v.kind, tuple(d + 2 * de for d in v.rotation), v.param) for v in c.vertices
        )
        edges.extend(ChartEdge(e.id + de, e.label, shift(e.tail), shift(e.head)) for e in c.edges)
        if outer is None and c.outer_face is not None:
            outer = c.outer_face + 2 * de
    return Chart(genus, tuple(vertices), tuple(edges), outer)
