"""
Isomorphism codes for charts.

A component is numbered breadth-first from a start dart, visiting the
counterclockwise successor before the twin. The code lists every dart's
local data together with the numbers of its successor and twin; the
component code is the least such code over the admissible start darts.
"""

from collections import deque
from typing import Dict, List, Tuple

from chart.model import Chart, dart_direction, twin
from chart.validate import components

DartCode = Tuple[str, int, str, str, int, int]


def _local(chart: Chart, d: int) -> Tuple[str, int, str, str]:
    v = chart.vertices[chart.dart_home[d][0]]
    return v.kind.value, v.param or 0, str(chart.label_of(d)), dart_direction(d).value


def _traverse(chart: Chart, start: int) -> Tuple[DartCode, ...]:
    number: Dict[int, int] = {start: 0}
    order: List[int] = [start]
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for nxt in (chart.ccw_next(d), twin(d)):
            if nxt not in number and nxt in chart.dart_home:
                number[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
    return tuple(
        _local(chart, d) + (number[chart.ccw_next(d)], number.get(twin(d), -1))
        for d in order
    )


def component_code(chart: Chart, vertex_ids: List[int]) -> Tuple[DartCode, ...]:
    darts = [d for v in vertex_ids for d in chart.vertices[v].rotation]
    if not darts:
        return ()
    # start only from darts with the least local data; that set is isomorphism-invariant
    least = min(_local(chart, d) for d in darts)
    return min(_traverse(chart, d) for d in darts if _local(chart, d) == least)


def canonical_code(chart: Chart) -> tuple:
    """Equal codes iff the charts are isomorphic as labelled rotation systems."""
    codes = sorted(component_code(chart, vs) for vs in components(chart))
    hoops = sorted(str(e.label) for e in chart.edges if e.is_hoop)
    return chart.genus.g, tuple(codes), tuple(hoops)


def is_isomorphic(a: Chart, b: Chart) -> bool:
    return canonical_code(a) == canonical_code(b)
