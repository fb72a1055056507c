import logging
from typing import Dict, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field

from errors import SchemaError
from mcg.words import Letter, LetterKind
from hurwitz.system import FiberCounts
from chart.model import (
    Chart, ChartVertex, Direction, EdgeLabel, VertexKind, PARAM_KINDS, TRANSITION_KINDS,
    dart_direction, dart_edge, expected_degree, twin,
)

logger = logging.getLogger(__name__)

OUT, IN = Direction.OUT, Direction.IN

VACUOUS_CONDITIONS = (
    "chart misses the disk boundary: vacuous for an abstract rotation system",
    "chart misses the base point: vacuous for an abstract rotation system",
)

# ─────────────────────────────────────────────────────────────
# Report Types
# ─────────────────────────────────────────────────────────────

@dataclass
class Violation:
    vertex: Optional[int]
    message: str

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "message": self.message}


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)
    components: int = 0
    notes: List[str] = field(default_factory=lambda: list(VACUOUS_CONDITIONS))

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, vertex: Optional[int], message: str) -> None:
        self.violations.append(Violation(vertex, message))

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "components": self.components,
            "violations": [v.to_dict() for v in self.violations],
            "notes": self.notes,
        }


# ─────────────────────────────────────────────────────────────
# Vertex Templates
# ─────────────────────────────────────────────────────────────

Sig = List[Tuple[EdgeLabel, Direction]]


def _z(indices: Sequence[int], direction: Direction) -> Sig:
    return [(Letter.zeta(i), direction) for i in indices]


def is_rotation_of(seq: Sequence, template: Sequence) -> bool:
    n = len(seq)
    if n != len(template):
        return False
    if n == 0:
        return True
    seq, template = list(seq), list(template)
    return any(seq == template[k:] + template[:k] for k in range(n))


def vertex_template(kind: VertexKind, g: int, param: Optional[int]) -> Optional[Sig]:
    """Counterclockwise (label, direction) template for the fixed-pattern kinds"""
    L = 2 * g + 1
    up = list(range(1, L + 1))
    down = up[::-1]
    T = up + down
    if kind is VertexKind.NUCLEON_OUT:
        return _z(T * 2, OUT)
    if kind is VertexKind.NUCLEON_IN:
        return _z(T * 2, IN)
    if kind is VertexKind.BIG_NUCLEON_OUT:
        return _z(up * (2 * g + 2), OUT)
    if kind is VertexKind.BIG_NUCLEON_IN:
        return _z(down * (2 * g + 2), IN)
    if kind is VertexKind.TRANSITION:
        return _z(T + [param], OUT) + _z(T + [param], IN)
    if kind is VertexKind.TRANSITION_CW:
        return _z([param] + T, OUT) + _z([param] + T, IN)
    if kind is VertexKind.SIGMA_BURST_OUT:
        chain = list(range(1, 2 * param + 1)) * (4 * param + 2)
        return _z(chain, OUT) + [(Letter.sigma(param), IN)]
    if kind is VertexKind.SIGMA_BURST_IN:
        chain = list(range(2 * param, 0, -1)) * (4 * param + 2)
        return _z(chain, IN) + [(Letter.sigma(param), OUT)]
    return None


def _zeta_index(label: EdgeLabel) -> Optional[int]:
    return label.index if label.kind is LetterKind.ZETA else None


def check_vertex(chart: Chart, v: ChartVertex) -> List[str]:
    """Template violations of one vertex (empty when it conforms)"""
    g = chart.genus.g
    problems: List[str] = []
    if v.kind in PARAM_KINDS:
        bound = chart.genus.num_zeta if v.kind in TRANSITION_KINDS else chart.genus.num_sigma
        if v.param is None or not 1 <= v.param <= bound:
            return [f"{v.kind.value} needs a parameter in 1..{bound}, got {v.param}"]
    want = expected_degree(v.kind, g, v.param)
    if v.degree != want:
        return [f"{v.kind.value} must have degree {want}, has {v.degree}"]

    sig = chart.signature(v)
    if v.kind is VertexKind.BLACK:
        return problems

    if v.kind is VertexKind.CROSSING:
        for a, b in ((0, 2), (1, 3)):
            (la, da), (lb, db) = sig[a], sig[b]
            if la != lb or da == db:
                problems.append("diagonal edges must share a label and be oriented coherently")
        i, j = _zeta_index(sig[0][0]), _zeta_index(sig[1][0])
        if i is None or j is None or abs(i - j) <= 1:
            problems.append("crossing labels must be ζ indices with |i-j| > 1")
        return problems

    if v.kind is VertexKind.BRAIDING:
        i, j = _zeta_index(sig[0][0]), _zeta_index(sig[1][0])
        labels = [lab for lab, _ in sig]
        if i is None or j is None or abs(i - j) != 1 or labels != [Letter.zeta(i), Letter.zeta(j)] * 3:
            problems.append("braiding labels must alternate i, j with |i-j| = 1")
        if not is_rotation_of([d for _, d in sig], [OUT] * 3 + [IN] * 3):
            problems.append("braiding needs three consecutive outward edges and three inward")
        return problems

    template = vertex_template(v.kind, g, v.param)
    if not is_rotation_of(sig, template):
        problems.append(f"rotation does not match the {v.kind.value} template")
    return problems


# ─────────────────────────────────────────────────────────────
# Faces and Planarity
# ─────────────────────────────────────────────────────────────

def trace_faces(chart: Chart) -> List[List[int]]:
    """Face cycles of the placed darts; next(d) = ccw successor of twin(d)"""
    placed = [d for v in chart.vertices for d in v.rotation]
    seen = set()
    faces = []
    for start in placed:
        if start in seen:
            continue
        face, d = [], start
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = chart.ccw_next(twin(d))
        faces.append(face)
    return faces


def components(chart: Chart) -> List[List[int]]:
    """Vertex sets of the connected components (hoops excluded)"""
    parent = list(range(len(chart.vertices)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in chart.edges:
        if e.tail is not None and e.head is not None:
            a, b = find(e.tail), find(e.head)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: Dict[int, List[int]] = {}
    for v in range(len(chart.vertices)):
        groups.setdefault(find(v), []).append(v)
    return [groups[k] for k in sorted(groups)]


def euler_by_component(chart: Chart) -> List[Tuple[int, int, int]]:
    """(V, E, F) per component"""
    comps = components(chart)
    comp_of = {v: k for k, vs in enumerate(comps) for v in vs}
    stats = [[len(vs), 0, 0] for vs in comps]
    for e in chart.edges:
        if e.tail is not None:
            stats[comp_of[e.tail]][1] += 1
    for face in trace_faces(chart):
        stats[comp_of[chart.dart_home[face[0]][0]]][2] += 1
    return [tuple(s) for s in stats]


# ─────────────────────────────────────────────────────────────
# Validation
# ─────────────────────────────────────────────────────────────

def _check_structure(chart: Chart, report: ValidationReport) -> bool:
    for k, v in enumerate(chart.vertices):
        if v.id != k:
            report.add(v.id, f"vertex ids must be 0..n-1 in order; found {v.id} at position {k}")
            return False
    for k, e in enumerate(chart.edges):
        if e.id != k:
            report.add(None, f"edge ids must be 0..n-1 in order; found {e.id} at position {k}")
            return False
        try:
            e.label.check(chart.genus)
        except ValueError as err:
            report.add(None, f"edge {e.id}: {err}")

    seen: Dict[int, int] = {}
    for v in chart.vertices:
        for d in v.rotation:
            if d < 0 or dart_edge(d) >= len(chart.edges):
                report.add(v.id, f"dart {d} refers to no edge")
                return False
            if d in seen:
                report.add(v.id, f"dart {d} also appears at vertex {seen[d]}")
                return False
            seen[d] = v.id

    for e in chart.edges:
        tail, head = seen.get(2 * e.id), seen.get(2 * e.id + 1)
        if (tail is None) != (head is None):
            report.add(tail if tail is not None else head, f"edge {e.id} has only one end attached")
            return False
        if tail != e.tail or head != e.head:
            report.add(None, f"edge {e.id} endpoints disagree with the rotations")
            return False
    return report.ok


def require_structure(chart: Chart) -> None:
    """Raise SchemaError unless ids, darts, labels and endpoints are consistent"""
    report = ValidationReport()
    if not _check_structure(chart, report):
        raise SchemaError(f"malformed chart: {report.violations[0].message}")


def validate(chart: Chart) -> ValidationReport:
    report = ValidationReport()
    if not _check_structure(chart, report):
        return report
    if chart.outer_face is not None and chart.outer_face not in chart.dart_home:
        report.add(None, f"outer face dart {chart.outer_face} is not placed")

    for v in chart.vertices:
        for problem in check_vertex(chart, v):
            report.add(v.id, problem)

    stats = euler_by_component(chart)
    report.components = len(stats) + sum(1 for e in chart.edges if e.is_hoop)
    for k, (V, E, F) in enumerate(stats):
        if V - E + F != 2:
            report.add(None, f"component {k} has V - E + F = {V - E + F}, not a planar embedding")

    if report.ok:
        logger.debug(f"✓ chart valid: {len(chart.vertices)} vertices, {len(chart.edges)} edges")
    else:
        logger.info(f"⚠ chart invalid: {len(report.violations)} violations")
    return report


# ─────────────────────────────────────────────────────────────
# Census
# ─────────────────────────────────────────────────────────────

def census(chart: Chart) -> FiberCounts:
    """Black vertices by adjacent label and orientation (outward = positive type)"""
    require_structure(chart)
    g = chart.genus.g
    n0 = {OUT: 0, IN: 0}
    nh = {OUT: [0] * (g // 2), IN: [0] * (g // 2)}
    for v in chart.vertices:
        if v.kind is not VertexKind.BLACK or v.degree != 1:
            continue
        d = v.rotation[0]
        label, direction = chart.label_of(d), dart_direction(d)
        if label.kind is LetterKind.ZETA:
            n0[direction] += 1
        else:
            nh[direction][label.index - 1] += 1
    return FiberCounts(g, n0[OUT], n0[IN], tuple(nh[OUT]), tuple(nh[IN]))


def interior_degrees(chart: Chart) -> List[int]:
    """Sorted distinct degrees of the non-black vertices"""
    return sorted({v.degree for v in chart.vertices if v.kind is not VertexKind.BLACK})
