"""
Chart Package
Labelled planar charts describing monodromy factorizations.

Modules:
- model: vertices, edges, rotation systems, builder and product
- validate: vertex templates, planarity, black-vertex census
- canonical: isomorphism codes
- builders: nucleons, free edges and the change-lemma charts
- compile: certificates to charts
- local_moves: C2/C3/C4 moves and their inverses
- dot: Graphviz export
"""

from chart.model import (
    Chart, ChartBuilder, ChartEdge, ChartVertex, Direction, VertexKind, product,
)
from chart.validate import ValidationReport, census, interior_degrees, require_structure, validate
from chart.canonical import canonical_code, is_isomorphic
from chart.compile import Capping, compile_certificate
from chart.builders import (
    build_F1, build_F2h, build_N0, build_N1, build_N2h, build_P2h, build_named, m2h_degrees,
)
from chart.local_moves import (
    CollapseSite, ExpandSite, LocalMoveKind, collapse_sites, local_move, local_move_with_inverse,
)
from chart.dot import to_dot

__all__ = [
    "Chart",
    "ChartBuilder",
    "ChartEdge",
    "ChartVertex",
    "Direction",
    "VertexKind",
    "product",
    "ValidationReport",
    "census",
    "interior_degrees",
    "require_structure",
    "validate",
    "canonical_code",
    "is_isomorphic",
    "Capping",
    "compile_certificate",
    "build_F1",
    "build_F2h",
    "build_N0",
    "build_N1",
    "build_N2h",
    "build_P2h",
    "build_named",
    "m2h_degrees",
    "CollapseSite",
    "ExpandSite",
    "LocalMoveKind",
    "collapse_sites",
    "local_move",
    "local_move_with_inverse",
    "to_dot"
]
