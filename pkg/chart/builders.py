"""Named charts: the nucleons, the free edges and the change-lemma charts."""

import logging
from typing import List, Optional

from errors import LetterRangeError
from mcg.words import GenusContext, Letter
from hurwitz.basic import descending, w0_indices
from stabilizer.macros import derive_w2h, derive_w2h_contracted
from chart.model import Chart, ChartBuilder, VertexKind
from chart.compile import Capping, compile_certificate
from chart.validate import interior_degrees

logger = logging.getLogger(__name__)

# ─────────────────────────────────────────────────────────────
# Nucleons and Free Edges
# ─────────────────────────────────────────────────────────────

def _nucleon(g: int, kind: VertexKind, indices: List[int]) -> Chart:
    """One inward nucleon, every edge capped by an outward black vertex."""
    b = ChartBuilder(GenusContext(g))
    edges = [b.add_edge(Letter.zeta(i)) for i in indices]
    b.add_vertex(kind, [2 * e + 1 for e in edges])
    for e in edges:
        b.add_black(2 * e)
    b.outer_face = 0
    return b.build()


def build_N0(g: int) -> Chart:
    """Nucleon of degree 4(2g+1) reading (1..2g+1, 2g+1..1)^2"""
    return _nucleon(g, VertexKind.NUCLEON_IN, w0_indices(g))


def build_N1(g: int) -> Chart:
    """Nucleon of degree 2(g+1)(2g+1) reading (2g+1..1)^{2g+2} counterclockwise"""
    return _nucleon(g, VertexKind.BIG_NUCLEON_IN, descending(g) * (2 * g + 2))


def _free_edge(ctx: GenusContext, label: Letter) -> Chart:
    b = ChartBuilder(ctx)
    e = b.add_edge(label)
    b.add_black(2 * e)
    b.add_black(2 * e + 1)
    b.outer_face = 0
    return b.build()


def build_F1(g: int) -> Chart:
    return _free_edge(GenusContext(g), Letter.zeta(1))


def build_F2h(g: int, h: int) -> Chart:
    ctx = GenusContext(g)
    if not 1 <= h <= ctx.num_sigma:
        raise LetterRangeError(f"h={h} out of range for genus {g} (1..{ctx.num_sigma})")
    return _free_edge(ctx, Letter.sigma(h))


# ─────────────────────────────────────────────────────────────
# Change-Lemma Charts
# ─────────────────────────────────────────────────────────────

def build_P2h(g: int, h: int, budget: Optional[int] = None) -> Chart:
    """
    (h+1)·W0 to W'2h as a chart: the start closed by h+1 nucleons, the end
    by outward black vertices. Its census is the census of (h+1)·N0.
    """
    return compile_certificate(derive_w2h(g, h, budget), Capping.NUCLEONS_AT_START)


def build_N2h(g: int, h: int, budget: Optional[int] = None) -> Chart:
    """Chart of f2h: nucleons at the start, the σ_h chain contracted into one burst vertex."""
    return compile_certificate(derive_w2h_contracted(g, h, budget), Capping.NUCLEONS_AT_START)


def m2h_degrees(g: int, h: int, budget: Optional[int] = None) -> List[int]:
    """Distinct vertex degrees of the interior of P2h, nucleons included"""
    degrees = interior_degrees(build_P2h(g, h, budget))
    logger.debug(f"interior degrees for g={g}, h={h}: {degrees}")
    return degrees


BUILDER_NAMES = ("N0", "N1", "F1", "F2h", "P2h", "N2h")


def build_named(name: str, g: int, h: int = 1) -> Chart:
    builders = {
        "N0": lambda: build_N0(g),
        "N1": lambda: build_N1(g),
        "F1": lambda: build_F1(g),
        "F2h": lambda: build_F2h(g, h),
        "P2h": lambda: build_P2h(g, h),
        "N2h": lambda: build_N2h(g, h),
    }
    if name not in builders:
        raise LetterRangeError(f"unknown chart {name!r}; expected one of {', '.join(BUILDER_NAMES)}")
    return builders[name]()
