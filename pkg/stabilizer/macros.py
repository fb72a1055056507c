"""
Certificate-producing macros for the change lemma: W0^{h+1} ~ W'2h.

Stage 1 spreads the T blocks apart with H3 moves, stage 2 rotates, stage 3
and stage 4 are pure H1/H2 rewrites between words that are equal in the
positive braid monoid. Those two are produced by divisor extraction: to make
the suffix w[k:] start with a letter x that left-divides it, first make
w[k+1:] start with x, then commute (H1) or, when the head y is adjacent to
x, also make w[k+2:] start with y and apply the braid move (H2).
"""

import logging
from typing import List, Optional, Sequence

from config import DEFAULT_ALIGN_BUDGET
from errors import BudgetExhausted, HypothesisError, MoveError
from mcg.words import GenusContext
from hurwitz.system import HurwitzSystem, plain_system, repeat_system
from hurwitz.basic import W0, Wprime2h, ascending, descending, w2h_blocks, chain_offset
from hurwitz.moves import Move, MoveCertificate, MoveType
from stabilizer.certificate import CertificateRecorder

logger = logging.getLogger(__name__)

# ─────────────────────────────────────────────────────────────
# Positive Braid Alignment
# ─────────────────────────────────────────────────────────────

class _Aligner:
    def __init__(self, word: Sequence[int], budget: int):
        self.word = list(word)
        self.moves: List[Move] = []
        self.budget = budget
        self.steps = 0

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExhausted(f"alignment budget {self.budget} exhausted", self.steps)

    def pull(self, start: int, letter: int) -> None:
        """Rewrite word[start:] so that it begins with `letter`."""
        w = self.word
        if start >= len(w):
            raise MoveError(f"ζ{letter} does not left-divide the remaining word", start)
        self._tick()
        head = w[start]
        if head == letter:
            return
        self.pull(start + 1, letter)
        if abs(head - letter) > 1:
            w[start], w[start + 1] = letter, head
            self.moves.append(Move(MoveType.H1, start, (head, letter)))
        else:
            self.pull(start + 2, head)
            w[start:start + 3] = [letter, head, letter]
            self.moves.append(Move(MoveType.H2, start, (head, letter)))


def h1h2_moves(source: Sequence[int], target: Sequence[int], budget: Optional[int] = None) -> List[Move]:
    """
    H1/H2 moves turning the positive word `source` into `target`.

    Raises MoveError when the two are not equal as positive braids.
    """
    if len(source) != len(target):
        raise MoveError(f"lengths differ: {len(source)} vs {len(target)}")
    aligner = _Aligner(source, DEFAULT_ALIGN_BUDGET if budget is None else budget)
    for k, letter in enumerate(target):
        aligner.pull(k, letter)
    return aligner.moves


def _certificate(ctx: GenusContext, source: List[int], moves: List[Move]) -> MoveCertificate:
    rec = CertificateRecorder(plain_system(ctx, source))
    rec.extend(moves)
    return rec.certificate()


# ─────────────────────────────────────────────────────────────
# Macros
# ─────────────────────────────────────────────────────────────

def reverse_chain_indices(h: int):
    """((2h..1)^{2h+1}, (1..2h)^{2h+1})"""
    down = list(range(2 * h, 0, -1)) * (2 * h + 1)
    up = list(range(1, 2 * h + 1)) * (2 * h + 1)
    return down, up


def macro_reverse_chain(h: int, g: int, method: str = "construct", budget: Optional[int] = None) -> MoveCertificate:
    """
    H1/H2 certificate from (ζ2h..ζ1)^{2h+1} to (ζ1..ζ2h)^{2h+1}.

    method="search" runs the bounded bidirectional search instead of the
    deterministic aligner.
    """
    ctx = GenusContext(g)
    if not 1 <= h <= ctx.num_sigma:
        raise MoveError(f"h={h} out of range for genus {g}")
    down, up = reverse_chain_indices(h)

    if method == "search":
        from stabilizer.search import search_equivalence
        cert = search_equivalence(
            plain_system(ctx, down), plain_system(ctx, up),
            budget=budget, kinds=(MoveType.H1, MoveType.H2),
        )
        if cert is None:
            raise BudgetExhausted(f"no chain reversal found for h={h} within budget", budget or 0)
        return cert
    if method != "construct":
        raise HypothesisError(f"unknown method {method!r}")
    return _certificate(ctx, down, h1h2_moves(down, up, budget))


def block_pass_indices(g: int, h: int):
    """(δ'^{2(h+1)} δ^{2(h+1)}, the intermediate word before the chain reversal)"""
    m = h + 1
    source = descending(g) * (2 * m) + ascending(g) * (2 * m)
    prefix, suffix = w2h_blocks(g, h)
    down, up = reverse_chain_indices(h)
    return source, prefix + down + up + suffix


def macro_block_pass(g: int, h: int, budget: Optional[int] = None) -> MoveCertificate:
    ctx = GenusContext(g)
    if not 1 <= h <= ctx.num_sigma:
        raise MoveError(f"h={h} out of range for genus {g}")
    source, target = block_pass_indices(g, h)
    return _certificate(ctx, source, h1h2_moves(source, target, budget))


def spread_moves(g: int, copies: int) -> List[Move]:
    """
    H3 moves taking T^{2c} to δ^{2c} δ'^{2c}.

    Intermediate states are δ^a T^b δ'^a; each round moves the δ half of the
    last T block to the front of the T region, one letter at a time.
    """
    L = 2 * g + 1
    total = 2 * copies
    moves: List[Move] = []
    for b in range(total, 1, -1):
        a = total - b
        q = a * L + (b - 1) * 2 * L
        for t in range(L):
            for c in range(1, b):
                moves.append(Move(MoveType.H3, q + t - 2 * L * c))
    return moves


def derive_w2h(g: int, h: int, budget: Optional[int] = None) -> MoveCertificate:
    """
    Certificate from (h+1)·W0 to W'2h:
      stage 1  H3 moves       T^{2m}          -> δ^{2m} δ'^{2m}
      stage 2  cyclic shift                    -> δ'^{2m} δ^{2m}
      stage 3  H1/H2 block pass                -> prefix, (2h..1)^{2h+1}, (1..2h)^{2h+1}, suffix
      stage 4  H1/H2 chain reversal at the σ_h slot
    """
    ctx = GenusContext(g)
    if not 1 <= h <= ctx.num_sigma:
        raise MoveError(f"h={h} out of range for genus {g}")
    m = h + 1
    L = 2 * g + 1

    rec = CertificateRecorder(repeat_system(W0(ctx), m))
    rec.extend(spread_moves(g, m))
    logger.debug(f"stage 1: {len(rec.moves)} H3 moves")

    rec.apply(Move(MoveType.CYCLIC_LEFT, 2 * m * L))

    rec.extend(macro_block_pass(g, h, budget).moves)
    logger.debug(f"stage 3: {len(rec.moves)} moves so far")

    offset = chain_offset(g, h)
    rec.extend(mv.shifted(offset) for mv in macro_reverse_chain(h, g, budget=budget).moves)

    cert = rec.certificate()
    if cert.claimed_end != Wprime2h(ctx, h):
        raise MoveError(f"derivation for (g, h) = ({g}, {h}) did not reach W'2h")
    logger.info(f"✓ derived W'2h for g={g}, h={h}: {len(cert.moves)} moves")
    return cert


def derive_w2h_contracted(g: int, h: int, budget: Optional[int] = None) -> MoveCertificate:
    """derive_w2h followed by one ContractSigma; ends in W2h"""
    cert = derive_w2h(g, h, budget)
    rec = CertificateRecorder(cert.start)
    rec.extend(cert.moves)
    rec.apply(Move(MoveType.CONTRACT_SIGMA, chain_offset(g, h), h=h))
    return rec.certificate()
