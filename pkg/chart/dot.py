from typing import List

from config import DOT_SHAPES
from chart.model import Chart, VertexKind


def _node_label(kind: VertexKind, param) -> str:
    if kind is VertexKind.BLACK:
        return ""
    return kind.value if param is None else f"{kind.value}({param})"


def to_dot(chart: Chart, name: str = "chart") -> str:
    """Graphviz text; edges point from tail to head and carry their generator."""
    lines: List[str] = [f"digraph {name} {{", f'  label="genus {chart.genus.g}";']
    for v in chart.vertices:
        lines.append(
            f'  v{v.id} [shape={DOT_SHAPES[v.kind.value]}, label="{_node_label(v.kind, v.param)}"];'
        )
    for e in chart.edges:
        if e.is_hoop:
            lines.append(f'  hoop{e.id} [shape=circle, style=dashed, label="{e.label}"];')
            continue
        lines.append(f'  v{e.tail} -> v{e.head} [label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
