"""
Compile a move certificate into a chart, read as a movie.

The start system sits at the bottom and the end system at the top; every
entry is a strand oriented downward. A move becomes one vertex joining the
strands it rewrites: the lower darts (tails, outward) read left to right,
then the upper darts (heads, inward) read right to left, which is the
counterclockwise order around a vertex drawn between two levels.
"""

import logging
from enum import Enum
from typing import List, Optional, Sequence

from errors import ChartError
from mcg.words import chain_indices
from hurwitz.system import HurwitzSystem
from hurwitz.basic import w0_indices, w1_indices
from hurwitz.moves import CYCLIC_MOVES, Move, MoveCertificate, MoveType, apply_move, t_block
from stabilizer.certificate import verify_certificate
from chart.model import Chart, ChartBuilder, EdgeLabel, VertexKind

logger = logging.getLogger(__name__)


class Capping(Enum):
    BLACK_BOTH = "BlackBoth"                  # black vertices at both ends
    NUCLEONS_AT_START = "NucleonsAtStart"     # W0 / W1 blocks at the start closed by nucleons


# ─────────────────────────────────────────────────────────────
# Start Caps
# ─────────────────────────────────────────────────────────────

def _cap_with_nucleons(b: ChartBuilder, strands: List[int]) -> None:
    g = b.genus.g
    labels = [b.labels[e] for e in strands]
    if not all(lab.is_zeta for lab in labels):
        raise ChartError("nucleon capping needs a start made of ζ entries only")
    indices = [lab.index for lab in labels]
    blocks = ((w0_indices(g), VertexKind.NUCLEON_IN), (w1_indices(g), VertexKind.BIG_NUCLEON_IN))

    pos = 0
    while pos < len(strands):
        for pattern, kind in blocks:
            if indices[pos:pos + len(pattern)] == pattern:
                block = strands[pos:pos + len(pattern)]
                b.add_vertex(kind, [2 * e + 1 for e in reversed(block)])
                pos += len(pattern)
                break
        else:
            raise ChartError(f"start entry {pos} does not begin a W0 or W1 block")


def _cap_start(b: ChartBuilder, strands: List[int], capping: Capping) -> None:
    if capping is Capping.BLACK_BOTH:
        for e in strands:
            b.add_black(2 * e + 1)
    else:
        _cap_with_nucleons(b, strands)


# ─────────────────────────────────────────────────────────────
# Movie
# ─────────────────────────────────────────────────────────────

def _join(
    b: ChartBuilder,
    strands: List[int],
    pos: int,
    width: int,
    out_labels: Sequence[EdgeLabel],
    kind: VertexKind,
    param: Optional[int] = None,
) -> List[int]:
    """Close strands[pos:pos+width] at a new vertex and start `out_labels` above it."""
    lower = strands[pos:pos + width]
    upper = [b.add_edge(lab) for lab in out_labels]
    darts = [2 * e for e in lower] + [2 * e + 1 for e in reversed(upper)]
    b.add_vertex(kind, darts, param)
    return strands[:pos] + upper + strands[pos + width:]


def _step(b: ChartBuilder, strands: List[int], before: HurwitzSystem, after: HurwitzSystem, m: Move) -> List[int]:
    kind, p = m.kind, m.pos

    if kind in CYCLIC_MOVES:
        n = len(strands)
        k = p if kind is MoveType.CYCLIC_LEFT else n - p
        return strands[k:] + strands[:k]

    def labels(width: int) -> List[EdgeLabel]:
        return [e.base for e in after.entries[p:p + width]]

    if kind in (MoveType.H1, MoveType.H1_INV):
        return _join(b, strands, p, 2, labels(2), VertexKind.CROSSING)
    if kind in (MoveType.H2, MoveType.H2_INV):
        return _join(b, strands, p, 3, labels(3), VertexKind.BRAIDING)
    if kind is MoveType.H3:
        w = len(t_block(before.genus.g)) + 1
        x = before.entries[p + w - 1].base.index
        return _join(b, strands, p, w, labels(w), VertexKind.TRANSITION, x)
    if kind is MoveType.H3_INV:
        w = len(t_block(before.genus.g)) + 1
        x = before.entries[p].base.index
        return _join(b, strands, p, w, labels(w), VertexKind.TRANSITION_CW, x)
    if kind is MoveType.EXPAND_SIGMA:
        h = before.entries[p].base.index
        return _join(b, strands, p, 1, labels(len(chain_indices(h))), VertexKind.SIGMA_BURST_IN, h)
    if kind is MoveType.CONTRACT_SIGMA:
        return _join(b, strands, p, len(chain_indices(m.h)), labels(1), VertexKind.SIGMA_BURST_OUT, m.h)

    # slides change conjugators, which strands cannot carry
    raise ChartError(f"{m} has no vertex in the chart movie")


def compile_certificate(cert: MoveCertificate, capping: Capping = Capping.BLACK_BOTH) -> Chart:
    """
    Chart realizing a verified certificate between positive, trivially
    conjugated systems. End strands always terminate at black vertices.
    """
    result = verify_certificate(cert)
    if not result.ok:
        raise ChartError(f"certificate fails at step {result.failed_step}: {result.reason}")
    for k, e in enumerate(cert.start.entries):
        if not e.is_plain or e.sign != 1:
            raise ChartError(f"start entry {k} ({e}) is not a trivially conjugated positive generator")

    b = ChartBuilder(cert.start.genus)
    strands = [b.add_edge(e.base) for e in cert.start.entries]
    _cap_start(b, strands, capping)

    state = cert.start
    for m in cert.moves:
        after = apply_move(state, m)
        strands = _step(b, strands, state, after, m)
        state = after

    for e in strands:
        b.add_black(2 * e)

    chart = b.build()
    logger.info(f"✓ compiled {len(cert.moves)} moves into {len(chart.vertices)} vertices, {len(chart.edges)} edges")
    return chart
