from typing import Iterable, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field
from enum import Enum

from errors import GenusMismatchError, MoveError
from mcg.words import Letter, chain_indices, word_inverse
from hurwitz.system import FactorEntry, HurwitzSystem, plain_entry

# ─────────────────────────────────────────────────────────────
# Move Types
# ─────────────────────────────────────────────────────────────

class MoveType(Enum):
    """Rewriting moves on Hurwitz systems"""
    H1 = "H1"                        # (i, j) -> (j, i), |i-j| > 1
    H1_INV = "H1inv"
    H2 = "H2"                        # (i, j, i) -> (j, i, j), |i-j| = 1
    H2_INV = "H2inv"
    H3 = "H3"                        # (T, x) -> (x, T)
    H3_INV = "H3inv"                 # (x, T) -> (T, x)
    SLIDE_RIGHT = "SlideRight"       # (a, b) -> (a b a⁻¹, a)
    SLIDE_LEFT = "SlideLeft"         # (a, b) -> (b, b⁻¹ a b)
    CYCLIC_LEFT = "CyclicLeft"       # rotate left by pos
    CYCLIC_RIGHT = "CyclicRight"     # rotate right by pos
    EXPAND_SIGMA = "ExpandSigma"     # σ_h -> (ζ1..ζ2h)^{4h+2}
    CONTRACT_SIGMA = "ContractSigma"


MOVE_ORDER = {kind: k for k, kind in enumerate(MoveType)}

H_MOVES = frozenset({
    MoveType.H1, MoveType.H1_INV, MoveType.H2, MoveType.H2_INV, MoveType.H3, MoveType.H3_INV,
})

CYCLIC_MOVES = frozenset({MoveType.CYCLIC_LEFT, MoveType.CYCLIC_RIGHT})

_INVERSE_KIND = {
    MoveType.H1: MoveType.H1_INV,
    MoveType.H1_INV: MoveType.H1,
    MoveType.H2: MoveType.H2_INV,
    MoveType.H2_INV: MoveType.H2,
    MoveType.H3: MoveType.H3_INV,
    MoveType.H3_INV: MoveType.H3,
    MoveType.SLIDE_RIGHT: MoveType.SLIDE_LEFT,
    MoveType.SLIDE_LEFT: MoveType.SLIDE_RIGHT,
    MoveType.CYCLIC_LEFT: MoveType.CYCLIC_RIGHT,
    MoveType.CYCLIC_RIGHT: MoveType.CYCLIC_LEFT,
    MoveType.EXPAND_SIGMA: MoveType.CONTRACT_SIGMA,
    MoveType.CONTRACT_SIGMA: MoveType.EXPAND_SIGMA,
}


@dataclass(frozen=True)
class Move:
    kind: MoveType
    pos: int
    indices: Optional[Tuple[int, ...]] = None   # (i, j) for H1/H2 when recorded
    h: Optional[int] = None                      # Expand/ContractSigma

    def __post_init__(self):
        if self.indices is not None:
            object.__setattr__(self, "indices", tuple(self.indices))

    def shifted(self, offset: int) -> "Move":
        if self.kind in CYCLIC_MOVES:
            raise MoveError("cyclic moves cannot be shifted into a larger system")
        return Move(self.kind, self.pos + offset, self.indices, self.h)

    def sort_key(self) -> Tuple[int, int]:
        return MOVE_ORDER[self.kind], self.pos

    def __str__(self) -> str:
        extra = ""
        if self.indices:
            extra = f" {self.indices}"
        if self.h is not None:
            extra += f" h={self.h}"
        return f"{self.kind.value}@{self.pos}{extra}"


@dataclass(frozen=True)
class MoveCertificate:
    """Replayable move sequence; `claimed_end` is checked by verify_certificate"""
    start: HurwitzSystem
    moves: Tuple[Move, ...] = field(default_factory=tuple)
    claimed_end: Optional[HurwitzSystem] = None

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))
        if self.claimed_end is None:
            object.__setattr__(self, "claimed_end", self.start)
        if self.claimed_end.genus != self.start.genus:
            raise GenusMismatchError("certificate endpoints have different genus")

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def uses_cyclic(self) -> bool:
        return any(m.kind in CYCLIC_MOVES for m in self.moves)


# ─────────────────────────────────────────────────────────────
# Pattern Helpers
# ─────────────────────────────────────────────────────────────

def _window(s: HurwitzSystem, pos: int, width: int, m: Move) -> List[int]:
    """ζ indices of a window of plain positive ζ entries"""
    if pos < 0 or pos + width > len(s):
        raise MoveError(f"{m}: window [{pos}, {pos + width}) outside system of length {len(s)}", pos)
    out = []
    for e in s.entries[pos:pos + width]:
        if not e.is_plain_positive_zeta:
            raise MoveError(f"{m}: entry {e} is not a trivially conjugated positive ζ", pos)
        out.append(e.base.index)
    return out


def _check_indices(m: Move, found: Sequence[int]) -> None:
    if m.indices is not None and tuple(m.indices) != tuple(found):
        raise MoveError(f"{m}: recorded indices {m.indices} but found {tuple(found)}", m.pos)


def t_block(g: int) -> List[int]:
    n = 2 * g + 1
    return list(range(1, n + 1)) + list(range(n, 0, -1))


def _plain(s: HurwitzSystem, indices: Iterable[int]) -> Tuple[FactorEntry, ...]:
    return tuple(plain_entry(s.genus, Letter.zeta(i)) for i in indices)


# ─────────────────────────────────────────────────────────────
# Apply / Invert
# ─────────────────────────────────────────────────────────────

def apply_move(s: HurwitzSystem, m: Move) -> HurwitzSystem:
    kind, p, n = m.kind, m.pos, len(s)

    if kind in (MoveType.H1, MoveType.H1_INV):
        i, j = _window(s, p, 2, m)
        if abs(i - j) <= 1:
            raise MoveError(f"{m}: H1 needs |i-j| > 1, got ({i}, {j})", p)
        _check_indices(m, (i, j))
        return s.replace(p, p + 2, _plain(s, (j, i)))

    if kind in (MoveType.H2, MoveType.H2_INV):
        i, j, k = _window(s, p, 3, m)
        if i != k or abs(i - j) != 1:
            raise MoveError(f"{m}: H2 needs (i, j, i) with |i-j| = 1, got ({i}, {j}, {k})", p)
        _check_indices(m, (i, j))
        return s.replace(p, p + 3, _plain(s, (j, i, j)))

    if kind in (MoveType.H3, MoveType.H3_INV):
        T = t_block(s.genus.g)
        w = _window(s, p, len(T) + 1, m)
        if kind is MoveType.H3:
            if w[:-1] != T:
                raise MoveError(f"{m}: window does not start with T", p)
            return s.replace(p, p + len(w), _plain(s, [w[-1]] + T))
        if w[1:] != T:
            raise MoveError(f"{m}: window does not end with T", p)
        return s.replace(p, p + len(w), _plain(s, T + [w[0]]))

    if kind in (MoveType.SLIDE_RIGHT, MoveType.SLIDE_LEFT):
        if p < 0 or p + 2 > n:
            raise MoveError(f"{m}: position out of range for length {n}", p)
        a, b = s.entries[p], s.entries[p + 1]
        if kind is MoveType.SLIDE_RIGHT:
            new = (b.conjugated_by(a.word()), a)
        else:
            new = (b, a.conjugated_by(word_inverse(b.word())))
        return s.replace(p, p + 2, new)

    if kind in CYCLIC_MOVES:
        if not 0 <= p <= n:
            raise MoveError(f"{m}: rotation {p} out of range for length {n}", p)
        k = p if kind is MoveType.CYCLIC_LEFT else n - p
        return HurwitzSystem(s.genus, s.entries[k:] + s.entries[:k])

    if kind is MoveType.EXPAND_SIGMA:
        if not 0 <= p < n:
            raise MoveError(f"{m}: position out of range for length {n}", p)
        e = s.entries[p]
        if e.base.is_zeta:
            raise MoveError(f"{m}: entry {e} is not a σ entry", p)
        h = e.base.index
        if m.h is not None and m.h != h:
            raise MoveError(f"{m}: entry is σ_{h}", p)
        letters = chain_indices(h)
        if e.sign == -1:
            letters = letters[::-1]
        return s.replace(p, p + 1, tuple(FactorEntry(e.conjugator, Letter.zeta(i), e.sign) for i in letters))

    if kind is MoveType.CONTRACT_SIGMA:
        if m.h is None:
            raise MoveError(f"{m}: ContractSigma needs h", p)
        if not 1 <= m.h <= s.genus.num_sigma:
            raise MoveError(f"{m}: h out of range for genus {s.genus.g}", p)
        letters = chain_indices(m.h)
        width = len(letters)
        if p < 0 or p + width > n:
            raise MoveError(f"{m}: window outside system of length {n}", p)
        window = s.entries[p:p + width]
        first = window[0]
        if first.sign == -1:
            letters = letters[::-1]
        for e, i in zip(window, letters):
            if (not e.base.is_zeta or e.base.index != i
                    or e.sign != first.sign or e.conjugator != first.conjugator):
                raise MoveError(f"{m}: window does not spell the σ_{m.h} chain", p)
        return s.replace(p, p + width, (FactorEntry(first.conjugator, Letter.sigma(m.h), first.sign),))

    raise MoveError(f"unsupported move {m}", p)


def inverse_move(m: Move, before: Optional[HurwitzSystem] = None) -> Move:
    """
    Move undoing `m`. Index-carrying moves swap their recorded pattern; an
    ExpandSigma without h needs the system it was applied to.
    """
    kind = _INVERSE_KIND[m.kind]
    indices = None
    if m.indices is not None:
        i, j = m.indices
        indices = (j, i)
    h = m.h
    if m.kind is MoveType.EXPAND_SIGMA and h is None:
        if before is None:
            raise MoveError(f"{m}: inverse needs h or the original system", m.pos)
        h = before.entries[m.pos].base.index
    return Move(kind, m.pos, indices, h)


def replay(s: HurwitzSystem, moves: Iterable[Move]) -> HurwitzSystem:
    for m in moves:
        s = apply_move(s, m)
    return s


# ─────────────────────────────────────────────────────────────
# Admissible Moves
# ─────────────────────────────────────────────────────────────

def admissible_moves(s: HurwitzSystem, kinds: Iterable[MoveType]) -> List[Move]:
    """All moves of the given kinds that apply to s, in (kind, position) order."""
    kinds = sorted(set(kinds), key=MOVE_ORDER.get)
    n = len(s)
    out: List[Move] = []
    for kind in kinds:
        if kind in CYCLIC_MOVES:
            out.extend(Move(kind, k) for k in range(1, n))
            continue
        if kind in (MoveType.SLIDE_RIGHT, MoveType.SLIDE_LEFT):
            out.extend(Move(kind, k) for k in range(n - 1))
            continue
        if kind is MoveType.EXPAND_SIGMA:
            out.extend(Move(kind, k, h=e.base.index) for k, e in enumerate(s.entries) if not e.base.is_zeta)
            continue
        if kind is MoveType.CONTRACT_SIGMA:
            for h in range(1, s.genus.num_sigma + 1):
                for k in range(n):
                    try:
                        apply_move(s, Move(kind, k, h=h))
                    except MoveError:
                        continue
                    out.append(Move(kind, k, h=h))
            continue
        for k in range(n):
            try:
                apply_move(s, Move(kind, k))
            except MoveError:
                continue
            out.append(Move(kind, k))
    return out
