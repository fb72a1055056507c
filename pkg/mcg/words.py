from typing import Iterable, Iterator, List, Sequence, Tuple
from dataclasses import dataclass
from enum import Enum

from errors import GenusMismatchError, LetterRangeError

# ─────────────────────────────────────────────────────────────
# Generators
# ─────────────────────────────────────────────────────────────

class LetterKind(Enum):
    """Generator families of the hyperelliptic mapping class group"""
    ZETA = "zeta"      # twists along the chain curves C_1..C_{2g+1}
    SIGMA = "sigma"    # twists along the separating curves S_1..S_{g/2}


@dataclass(frozen=True)
class GenusContext:
    """Genus of the general fiber; fixes the generator ranges"""
    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 1:
            raise LetterRangeError(f"genus must be a positive integer, got {self.g!r}")

    @property
    def num_zeta(self) -> int:
        return 2 * self.g + 1

    @property
    def num_sigma(self) -> int:
        return self.g // 2

    @property
    def points(self) -> int:
        """Branch points permuted by the hyperelliptic involution"""
        return 2 * self.g + 2

    @property
    def dim(self) -> int:
        return 2 * self.g


@dataclass(frozen=True)
class Letter:
    kind: LetterKind
    index: int

    @classmethod
    def zeta(cls, i: int) -> "Letter":
        return cls(LetterKind.ZETA, i)

    @classmethod
    def sigma(cls, h: int) -> "Letter":
        return cls(LetterKind.SIGMA, h)

    @property
    def is_zeta(self) -> bool:
        return self.kind is LetterKind.ZETA

    def check(self, ctx: GenusContext) -> None:
        bound = ctx.num_zeta if self.is_zeta else ctx.num_sigma
        if not 1 <= self.index <= bound:
            raise LetterRangeError(
                f"{self} out of range for genus {ctx.g} (1..{bound})"
            )

    def __str__(self) -> str:
        return f"{'z' if self.is_zeta else 's'}{self.index}"


@dataclass(frozen=True)
class SignedLetter:
    letter: Letter
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise LetterRangeError(f"sign must be +1 or -1, got {self.sign!r}")

    def inverse(self) -> "SignedLetter":
        return SignedLetter(self.letter, -self.sign)

    def __str__(self) -> str:
        return str(self.letter) if self.sign == 1 else f"{self.letter}^-1"


# ─────────────────────────────────────────────────────────────
# Words
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Word:
    """
    Word in the generators; values are never reduced implicitly.
    """
    genus: GenusContext
    letters: Tuple[SignedLetter, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for s in letters:
            s.letter.check(self.genus)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[SignedLetter]:
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return word_concat(self, other)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.letters) or "1"

    @property
    def is_empty(self) -> bool:
        return not self.letters

    @property
    def is_positive(self) -> bool:
        return all(s.sign == 1 for s in self.letters)


def empty_word(ctx: GenusContext) -> Word:
    return Word(ctx, ())


def zeta_word(ctx: GenusContext, indices: Iterable[int], sign: int = 1) -> Word:
    """Word ζ_{i1}^s ζ_{i2}^s ... from a list of indices"""
    return Word(ctx, tuple(SignedLetter(Letter.zeta(i), sign) for i in indices))


def check_same_genus(*contexts: GenusContext) -> GenusContext:
    first = contexts[0]
    for ctx in contexts[1:]:
        if ctx != first:
            raise GenusMismatchError(f"genus {first.g} vs genus {ctx.g}")
    return first


# ─────────────────────────────────────────────────────────────
# Word Operations
# ─────────────────────────────────────────────────────────────

def word_concat(u: Word, v: Word) -> Word:
    ctx = check_same_genus(u.genus, v.genus)
    return Word(ctx, u.letters + v.letters)


def word_inverse(w: Word) -> Word:
    return Word(w.genus, tuple(s.inverse() for s in reversed(w.letters)))


def word_power(w: Word, n: int) -> Word:
    if n < 0:
        return word_power(word_inverse(w), -n)
    return Word(w.genus, w.letters * n)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent x·x⁻¹ pairs until none remain (single stack pass)."""
    stack: List[SignedLetter] = []
    for s in w.letters:
        if stack and stack[-1].letter == s.letter and stack[-1].sign == -s.sign:
            stack.pop()
        else:
            stack.append(s)
    return Word(w.genus, tuple(stack))


def conjugate(w: Word, by: Word) -> Word:
    """by · w · by⁻¹, unreduced"""
    return word_concat(word_concat(by, w), word_inverse(by))


# ─────────────────────────────────────────────────────────────
# Distinguished Words
# ─────────────────────────────────────────────────────────────

def iota_indices(g: int) -> List[int]:
    n = 2 * g + 1
    return list(range(1, n)) + [n, n] + list(range(n - 1, 0, -1))


def iota_word(ctx: GenusContext) -> Word:
    """ι = ζ1⋯ζ2g ζ2g+1² ζ2g⋯ζ1, the hyperelliptic involution"""
    return zeta_word(ctx, iota_indices(ctx.g))


def chain_indices(h: int) -> List[int]:
    return list(range(1, 2 * h + 1)) * (4 * h + 2)


def chain_word(h: int, ctx: GenusContext) -> Word:
    """(ζ1⋯ζ2h)^{4h+2}, equal to σ_h by the chain relation"""
    if not 1 <= h <= ctx.num_sigma:
        raise LetterRangeError(f"h={h} out of range for genus {ctx.g} (1..{ctx.num_sigma})")
    return zeta_word(ctx, chain_indices(h))


def full_chain_word(ctx: GenusContext) -> Word:
    """ζ1ζ2⋯ζ2g+1"""
    return zeta_word(ctx, range(1, ctx.num_zeta + 1))


def parse_word_text(ctx: GenusContext, text: str) -> Word:
    """
    Parse the compact form used in logs and tests, e.g. "z1 z3^-1 s1".
    "1" or an empty string is the empty word.
    """
    letters: List[SignedLetter] = []
    for token in text.split():
        if token == "1":
            continue
        body, _, exp = token.partition("^")
        if len(body) < 2 or body[0] not in "zs" or not body[1:].isdigit():
            raise LetterRangeError(f"cannot parse letter {token!r}")
        if exp not in ("", "1", "-1"):
            raise LetterRangeError(f"only exponents ±1 are allowed, got {token!r}")
        kind = LetterKind.ZETA if body[0] == "z" else LetterKind.SIGMA
        letters.append(SignedLetter(Letter(kind, int(body[1:])), -1 if exp == "-1" else 1))
    return Word(ctx, tuple(letters))


def indices_of(w: Word) -> Sequence[int]:
    """Indices of a positive ζ-word; anything else is rejected."""
    out = []
    for s in w.letters:
        if not s.letter.is_zeta or s.sign != 1:
            raise LetterRangeError(f"{s} is not a positive ζ letter")
        out.append(s.letter.index)
    return out
