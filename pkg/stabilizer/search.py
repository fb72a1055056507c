import logging
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from config import DEFAULT_SEARCH_BUDGET
from errors import MoveError
from hurwitz.system import FactorEntry, HurwitzSystem
from hurwitz.moves import (
    MOVE_ORDER, Move, MoveCertificate, MoveType, inverse_move, t_block,
)
from stabilizer.certificate import verify_certificate

logger = logging.getLogger(__name__)

State = Tuple[int, ...]

# H1inv/H2inv produce the same neighbours as H1/H2 and are left out
DEFAULT_KINDS = (MoveType.H1, MoveType.H2, MoveType.H3, MoveType.H3_INV)

# ─────────────────────────────────────────────────────────────
# State Encoding
# ─────────────────────────────────────────────────────────────

class _Codec:
    """
    Plain positive ζ_i entries encode as i; any other entry gets a negative
    code, so it never matches an H-move pattern.
    """

    def __init__(self, *systems: HurwitzSystem):
        self.others: Dict[FactorEntry, int] = {}
        self.decoded: Dict[int, FactorEntry] = {}
        for s in systems:
            for e in s.entries:
                self.encode_entry(e)

    def encode_entry(self, e: FactorEntry) -> int:
        if e.is_plain_positive_zeta:
            self.decoded.setdefault(e.base.index, e)
            return e.base.index
        if e not in self.others:
            code = -(len(self.others) + 1)
            self.others[e] = code
            self.decoded[code] = e
        return self.others[e]

    def encode(self, s: HurwitzSystem) -> State:
        return tuple(self.encode_entry(e) for e in s.entries)


def _neighbours(st: State, kinds: Iterable[MoveType], T: List[int], cyclic: bool) -> Iterator[Tuple[Move, State]]:
    """Successors in (kind, position) order"""
    n = len(st)
    w = len(T) + 1
    Tt = tuple(T)
    for kind in sorted(kinds, key=MOVE_ORDER.get):
        if kind is MoveType.H1:
            for p in range(n - 1):
                i, j = st[p], st[p + 1]
                if i > 0 and j > 0 and abs(i - j) > 1:
                    yield Move(kind, p), st[:p] + (j, i) + st[p + 2:]
        elif kind is MoveType.H2:
            for p in range(n - 2):
                i, j, k = st[p], st[p + 1], st[p + 2]
                if i > 0 and j > 0 and i == k and abs(i - j) == 1:
                    yield Move(kind, p), st[:p] + (j, i, j) + st[p + 3:]
        elif kind is MoveType.H3:
            for p in range(n - w + 1):
                x = st[p + w - 1]
                if x > 0 and st[p:p + w - 1] == Tt:
                    yield Move(kind, p), st[:p] + (x,) + Tt + st[p + w:]
        elif kind is MoveType.H3_INV:
            for p in range(n - w + 1):
                x = st[p]
                if x > 0 and st[p + 1:p + w] == Tt:
                    yield Move(kind, p), st[:p] + Tt + (x,) + st[p + w:]
        else:
            raise MoveError(f"search does not enumerate {kind.value}")
    if cyclic and n > 1:
        yield Move(MoveType.CYCLIC_LEFT, 1), st[1:] + st[:1]
        yield Move(MoveType.CYCLIC_RIGHT, 1), st[-1:] + st[:-1]


# ─────────────────────────────────────────────────────────────
# Bidirectional Search
# ─────────────────────────────────────────────────────────────

def search_equivalence(
    s1: HurwitzSystem,
    s2: HurwitzSystem,
    budget: Optional[int] = None,
    cyclic: bool = False,
    kinds: Iterable[MoveType] = DEFAULT_KINDS,
) -> Optional[MoveCertificate]:
    """
    Breadth-first search from both ends over H-moves (and single-step
    rotations when `cyclic`). States are exact entry sequences. The frontier
    with fewer states is expanded next, forward on ties, so the result is
    deterministic for a given budget. Returns a verified certificate or None.
    """
    if s1.genus != s2.genus or len(s1) != len(s2):
        return None
    if s1 == s2:
        return MoveCertificate(s1, (), s2)

    budget = DEFAULT_SEARCH_BUDGET if budget is None else budget
    kinds = tuple(kinds)
    T = t_block(s1.genus.g)
    codec = _Codec(s1, s2)
    start, goal = codec.encode(s1), codec.encode(s2)

    forward: Dict[State, Optional[Tuple[Move, State]]] = {start: None}
    backward: Dict[State, Optional[Tuple[Move, State]]] = {goal: None}
    f_front, b_front = [start], [goal]
    expanded = 0
    meet = None

    while f_front and b_front and meet is None:
        go_forward = len(f_front) <= len(b_front)
        front, seen, other = (f_front, forward, backward) if go_forward else (b_front, backward, forward)
        nxt: List[State] = []
        for st in front:
            expanded += 1
            if expanded > budget:
                logger.warning(f"⚠ search budget {budget} exhausted ({len(forward)} + {len(backward)} states)")
                return None
            for mv, succ in _neighbours(st, kinds, T, cyclic):
                if succ in seen:
                    continue
                seen[succ] = (mv, st)
                if succ in other:
                    meet = succ
                    break
                nxt.append(succ)
            if meet is not None:
                break
        if go_forward:
            f_front = nxt
        else:
            b_front = nxt

    if meet is None:
        logger.info(f"search exhausted both components without meeting ({expanded} states)")
        return None

    moves: List[Move] = []
    st = meet
    while forward[st] is not None:
        mv, st = forward[st]
        moves.append(mv)
    moves.reverse()
    st = meet
    while backward[st] is not None:
        mv, prev = backward[st]
        # st = mv(prev), so the forward step from st is the inverse of mv
        moves.append(inverse_move(mv))
        st = prev

    cert = MoveCertificate(s1, tuple(moves), s2)
    result = verify_certificate(cert)
    if not result.ok:
        raise MoveError(f"search produced an invalid certificate: {result.reason}")
    logger.info(f"✓ search found {len(moves)} moves after expanding {expanded} states")
    return cert
