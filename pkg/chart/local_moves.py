"""
C2, C3 and C4 chart moves and their inverses.

The forward moves pull a black vertex through the crossing, braiding or
transition vertex at the other end of its edge. Around that vertex the darts
opposite the black's slot pair up; each pair is joined into one edge and the
dart across from the black receives a new black vertex. The inverse moves
cut the chosen strands at a new vertex placed where a black vertex was.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from errors import MoveError
from chart.model import Chart, ChartBuilder, Direction, VertexKind, dart_direction, dart_edge, twin
from chart.validate import check_vertex, validate

logger = logging.getLogger(__name__)


class LocalMoveKind(Enum):
    C2 = "C2"              # through a crossing
    C3 = "C3"              # through a braiding vertex
    C4 = "C4"              # through a transition vertex
    C2_INV = "C2inv"
    C3_INV = "C3inv"
    C4_INV = "C4inv"

    @property
    def is_inverse(self) -> bool:
        return self.value.endswith("inv")


_VERTEX_OF = {
    LocalMoveKind.C2: VertexKind.CROSSING,
    LocalMoveKind.C3: VertexKind.BRAIDING,
    LocalMoveKind.C4: VertexKind.TRANSITION,
    LocalMoveKind.C2_INV: VertexKind.CROSSING,
    LocalMoveKind.C3_INV: VertexKind.BRAIDING,
    LocalMoveKind.C4_INV: VertexKind.TRANSITION,
}

_INVERSE = {
    LocalMoveKind.C2: LocalMoveKind.C2_INV,
    LocalMoveKind.C3: LocalMoveKind.C3_INV,
    LocalMoveKind.C4: LocalMoveKind.C4_INV,
    LocalMoveKind.C2_INV: LocalMoveKind.C2,
    LocalMoveKind.C3_INV: LocalMoveKind.C3,
    LocalMoveKind.C4_INV: LocalMoveKind.C4,
}


@dataclass(frozen=True)
class CollapseSite:
    vertex: int      # crossing / braiding / transition vertex
    black: int       # black vertex adjacent to it


@dataclass(frozen=True)
class ExpandSite:
    black: int                        # black vertex replaced by the new vertex
    strands: Tuple[int, ...]          # edges cut, one per pair, innermost first
    in_first: Tuple[bool, ...]        # True when the inward half takes the slot after the black

    def __post_init__(self):
        object.__setattr__(self, "strands", tuple(self.strands))
        object.__setattr__(self, "in_first", tuple(self.in_first))
        if len(self.strands) != len(self.in_first):
            raise MoveError("each strand needs exactly one in_first flag")


Site = Union[CollapseSite, ExpandSite]


# ─────────────────────────────────────────────────────────────
# Collapse (C2, C3, C4)
# ─────────────────────────────────────────────────────────────

def _collapse_slot(chart: Chart, kind: LocalMoveKind, site: CollapseSite) -> int:
    """Slot of the black's edge at the vertex, after checking the move applies."""
    n_v = len(chart.vertices)
    if not (0 <= site.vertex < n_v and 0 <= site.black < n_v):
        raise MoveError(f"{kind.value}: vertex id out of range")
    v, b = chart.vertex(site.vertex), chart.vertex(site.black)
    if v.kind is not _VERTEX_OF[kind]:
        raise MoveError(f"{kind.value}: vertex {v.id} is {v.kind.value}, not {_VERTEX_OF[kind].value}")
    if b.kind is not VertexKind.BLACK or b.degree != 1:
        raise MoveError(f"{kind.value}: vertex {b.id} is not a black vertex")
    home = chart.dart_home.get(twin(b.rotation[0]))
    if home is None or home[0] != v.id:
        raise MoveError(f"{kind.value}: black vertex {b.id} is not joined to vertex {v.id}")
    k = home[1]

    rot, deg = v.rotation, v.degree
    r = deg // 2

    def direction(t: int) -> Direction:
        return dart_direction(rot[(k + t) % deg])

    if kind is LocalMoveKind.C3 and direction(1) == direction(-1):
        raise MoveError(f"C3: edge at slot {k} is the middle of three edges oriented the same way")
    if kind is LocalMoveKind.C4:
        forward = {direction(t) for t in range(1, r)}
        backward = {direction(-t) for t in range(1, r)}
        if len(forward) != 1 or len(backward) != 1 or forward == backward:
            raise MoveError(f"C4: edge at slot {k} is not one of the two edges labelled by the vertex parameter")

    for t in range(1, r):
        p, q = rot[(k + t) % deg], rot[(k - t) % deg]
        if chart.label_of(p) != chart.label_of(q) or dart_direction(p) == dart_direction(q):
            raise MoveError(f"{kind.value}: slots {k + t} and {k - t} do not pair up")
    return k


def _collapse(chart: Chart, kind: LocalMoveKind, site: CollapseSite) -> Tuple[Chart, ExpandSite]:
    k = _collapse_slot(chart, kind, site)
    v = chart.vertex(site.vertex)
    rot, deg = v.rotation, v.degree
    r = deg // 2

    pair_of: Dict[int, int] = {}           # paired dart -> t
    link: Dict[int, int] = {}              # inward dart -> outward dart of the same pair
    for t in range(1, r):
        p, q = rot[(k + t) % deg], rot[(k - t) % deg]
        pair_of[p] = pair_of[q] = t
        inward, outward = (p, q) if dart_direction(p) is Direction.IN else (q, p)
        link[inward] = outward

    b = ChartBuilder.from_chart(chart)
    b.remove_vertex(site.vertex)
    b.remove_vertex(site.black)
    b.remove_edge(dart_edge(rot[k]))
    b_new = b.add_black(rot[(k + r) % deg])

    involved = sorted({dart_edge(d) for d in pair_of})
    chains: List[Tuple[int, List[int], bool]] = []     # (t, edges, closed)
    visited = set()

    def trace(first: int) -> Tuple[List[int], List[int]]:
        edges, ts, e = [], [], first
        while True:
            edges.append(e)
            visited.add(e)
            head = 2 * e + 1
            if head not in link:
                return edges, ts
            ts.append(pair_of[head])
            e = dart_edge(link[head])
            if e == first:
                return edges, ts

    for e in involved:
        if e not in visited and 2 * e not in pair_of:
            edges, ts = trace(e)
            if len(ts) != 1:
                raise MoveError(f"{kind.value}: a strand returns to vertex {v.id}; the move is not local")
            chains.append((ts[0], edges, False))
    for e in involved:
        if e not in visited:
            edges, ts = trace(e)
            if len(ts) != 1:
                raise MoveError(f"{kind.value}: a closed strand meets vertex {v.id} more than once")
            chains.append((ts[0], edges, True))

    merged: Dict[int, int] = {}
    for t, edges, closed in chains:
        n = b.add_edge(b.labels[edges[0]])
        if not closed:
            b.replace_dart(2 * edges[0], 2 * n)
            b.replace_dart(2 * edges[-1] + 1, 2 * n + 1)
        for e in edges:
            b.remove_edge(e)
        merged[t] = n

    out, vmap, emap = b.build_with_maps()
    inverse = ExpandSite(
        vmap[b_new],
        tuple(emap[merged[t]] for t in range(1, r)),
        tuple(dart_direction(rot[(k + t) % deg]) is Direction.IN for t in range(1, r)),
    )
    return out, inverse


# ─────────────────────────────────────────────────────────────
# Expand (C2inv, C3inv, C4inv)
# ─────────────────────────────────────────────────────────────

def _expand(chart: Chart, kind: LocalMoveKind, site: ExpandSite) -> Tuple[Chart, CollapseSite]:
    vkind = _VERTEX_OF[kind]
    r = {VertexKind.CROSSING: 2, VertexKind.BRAIDING: 3}.get(vkind, 4 * chart.genus.g + 3)
    if len(site.strands) != r - 1:
        raise MoveError(f"{kind.value}: needs {r - 1} strands, got {len(site.strands)}")
    if len(set(site.strands)) != len(site.strands):
        raise MoveError(f"{kind.value}: a strand can be cut only once")
    if not 0 <= site.black < len(chart.vertices):
        raise MoveError(f"{kind.value}: vertex id out of range")
    black = chart.vertex(site.black)
    if black.kind is not VertexKind.BLACK or black.degree != 1:
        raise MoveError(f"{kind.value}: vertex {black.id} is not a black vertex")
    for e in site.strands:
        if not 0 <= e < len(chart.edges):
            raise MoveError(f"{kind.value}: edge {e} does not exist")
    f = black.rotation[0]
    if dart_edge(f) in site.strands:
        raise MoveError(f"{kind.value}: the black vertex's own edge cannot be cut")

    b = ChartBuilder.from_chart(chart)
    b.remove_vertex(site.black)

    halves: List[Tuple[int, int]] = []     # (inward dart, outward dart) at the new vertex
    for e in site.strands:
        if chart.edge(e).is_hoop:
            halves.append((2 * e + 1, 2 * e))
            continue
        y = b.add_edge(b.labels[e])
        b.replace_dart(2 * e + 1, 2 * y + 1)
        halves.append((2 * e + 1, 2 * y))

    before = [i if first else o for (i, o), first in zip(halves, site.in_first)]
    after = [o if first else i for (i, o), first in zip(halves, site.in_first)]

    f_label = chart.label_of(f)
    ek_label = chart.edge(site.strands[1]).label if vkind is VertexKind.BRAIDING else f_label
    ek = b.add_edge(ek_label)
    if dart_direction(f) is Direction.OUT:
        ek_dart, cap = 2 * ek + 1, 2 * ek
    else:
        ek_dart, cap = 2 * ek, 2 * ek + 1

    param = f_label.index if vkind is VertexKind.TRANSITION else None
    v_new = b.add_vertex(vkind, [ek_dart] + before + [f] + after[::-1], param)
    b_new = b.add_black(cap)

    out, vmap, _ = b.build_with_maps()
    problems = check_vertex(out, out.vertex(vmap[v_new]))
    if problems:
        raise MoveError(f"{kind.value}: new vertex is not a {vkind.value}: {problems[0]}")
    report = validate(out)
    if not report.ok:
        raise MoveError(f"{kind.value}: result is not a chart: {report.violations[0].message}")
    return out, CollapseSite(vmap[v_new], vmap[b_new])


# ─────────────────────────────────────────────────────────────
# Public API
# ─────────────────────────────────────────────────────────────

def local_move_with_inverse(chart: Chart, kind: LocalMoveKind, site: Site) -> Tuple[Chart, Site]:
    """Apply a move and return the site at which the inverse move undoes it."""
    if kind.is_inverse:
        if not isinstance(site, ExpandSite):
            raise MoveError(f"{kind.value} needs an expand site")
        out, inverse = _expand(chart, kind, site)
    else:
        if not isinstance(site, CollapseSite):
            raise MoveError(f"{kind.value} needs a collapse site")
        out, inverse = _collapse(chart, kind, site)
    logger.debug(f"{kind.value} applied: {len(chart.vertices)} -> {len(out.vertices)} vertices")
    return out, inverse


def local_move(chart: Chart, kind: LocalMoveKind, site: Site) -> Chart:
    return local_move_with_inverse(chart, kind, site)[0]


def inverse_kind(kind: LocalMoveKind) -> LocalMoveKind:
    return _INVERSE[kind]


def collapse_sites(chart: Chart, kinds: Optional[Tuple[LocalMoveKind, ...]] = None) -> List[Tuple[LocalMoveKind, CollapseSite]]:
    """Every (kind, site) where a forward move applies, ordered by vertex then black."""
    kinds = kinds or (LocalMoveKind.C2, LocalMoveKind.C3, LocalMoveKind.C4)
    by_vertex = {_VERTEX_OF[k]: k for k in kinds if not k.is_inverse}
    sites = []
    for black in chart.vertices:
        if black.kind is not VertexKind.BLACK or black.degree != 1:
            continue
        vid = chart.other_end(black.rotation[0])
        if vid is None or chart.vertex(vid).kind not in by_vertex:
            continue
        kind = by_vertex[chart.vertex(vid).kind]
        site = CollapseSite(vid, black.id)
        try:
            _collapse(chart, kind, site)
        except MoveError:
            continue
        sites.append((kind, site))
    return sorted(sites, key=lambda ks: (ks[1].vertex, ks[1].black))
