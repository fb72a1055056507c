from typing import Iterable, Iterator, List, Optional, Sequence, Tuple
from dataclasses import dataclass

from sympy.combinatorics import Permutation

from errors import GenusMismatchError, HypothesisError, LetterRangeError
from mcg.words import (
    GenusContext, Letter, LetterKind, SignedLetter, Word,
    check_same_genus, empty_word, free_reduce, word_concat, word_inverse,
)
from mcg.representations import SympMatrix, perm_image, symp_image
from mcg.representations import is_transitive as perms_transitive

# ─────────────────────────────────────────────────────────────
# Data Classes
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class FactorEntry:
    """
    One monodromy factor, stored as (conjugator)·base^sign·(conjugator)⁻¹.

    Keeping the conjugate normal form makes the fiber type a syntactic property
    of `base`. The conjugator is always stored freely reduced.
    """
    conjugator: Word
    base: Letter
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise LetterRangeError(f"sign must be +1 or -1, got {self.sign!r}")
        self.base.check(self.conjugator.genus)
        object.__setattr__(self, "conjugator", free_reduce(self.conjugator))

    @property
    def genus(self) -> GenusContext:
        return self.conjugator.genus

    @property
    def is_plain(self) -> bool:
        """Trivially conjugated"""
        return self.conjugator.is_empty

    @property
    def is_plain_positive_zeta(self) -> bool:
        return self.conjugator.is_empty and self.sign == 1 and self.base.is_zeta

    def word(self) -> Word:
        middle = Word(self.genus, (SignedLetter(self.base, self.sign),))
        return word_concat(word_concat(self.conjugator, middle), word_inverse(self.conjugator))

    def conjugated_by(self, w: Word) -> "FactorEntry":
        """Entry for w·(this)·w⁻¹"""
        return FactorEntry(word_concat(w, self.conjugator), self.base, self.sign)

    def __str__(self) -> str:
        core = str(SignedLetter(self.base, self.sign))
        if self.is_plain:
            return core
        return f"[{self.conjugator}]{core}"


@dataclass(frozen=True)
class HurwitzSystem:
    genus: GenusContext
    entries: Tuple[FactorEntry, ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        for e in entries:
            if e.genus != self.genus:
                raise GenusMismatchError(f"entry {e} is over genus {e.genus.g}, system over {self.genus.g}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[FactorEntry]:
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def replace(self, start: int, stop: int, new: Sequence[FactorEntry]) -> "HurwitzSystem":
        return HurwitzSystem(self.genus, self.entries[:start] + tuple(new) + self.entries[stop:])

    @property
    def is_plain_positive(self) -> bool:
        return all(e.is_plain and e.sign == 1 for e in self.entries)

    def plain_indices(self) -> Optional[List[int]]:
        """ζ indices when every entry is a plain positive ζ, else None"""
        if not all(e.is_plain_positive_zeta for e in self.entries):
            return None
        return [e.base.index for e in self.entries]


@dataclass(frozen=True)
class FiberCounts:
    """Singular-fiber census (n₀⁺, n₀⁻, n_h⁺, n_h⁻)"""
    genus: int
    n0_plus: int = 0
    n0_minus: int = 0
    nh_plus: Tuple[int, ...] = ()
    nh_minus: Tuple[int, ...] = ()

    def __post_init__(self):
        k = self.genus // 2
        plus = tuple(self.nh_plus) or (0,) * k
        minus = tuple(self.nh_minus) or (0,) * k
        if len(plus) != k or len(minus) != k:
            raise LetterRangeError(f"genus {self.genus} needs {k} separating counts")
        if min((self.n0_plus, self.n0_minus) + plus + minus, default=0) < 0:
            raise LetterRangeError("fiber counts must be non-negative")
        object.__setattr__(self, "nh_plus", plus)
        object.__setattr__(self, "nh_minus", minus)

    @property
    def total(self) -> int:
        return self.n0_plus + self.n0_minus + sum(self.nh_plus) + sum(self.nh_minus)

    def __add__(self, other: "FiberCounts") -> "FiberCounts":
        if self.genus != other.genus:
            raise GenusMismatchError(f"genus {self.genus} vs genus {other.genus}")
        return FiberCounts(
            genus=self.genus,
            n0_plus=self.n0_plus + other.n0_plus,
            n0_minus=self.n0_minus + other.n0_minus,
            nh_plus=tuple(a + b for a, b in zip(self.nh_plus, other.nh_plus)),
            nh_minus=tuple(a + b for a, b in zip(self.nh_minus, other.nh_minus)),
        )

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "n0_plus": self.n0_plus,
            "n0_minus": self.n0_minus,
            "nh_plus": list(self.nh_plus),
            "nh_minus": list(self.nh_minus),
        }


# ─────────────────────────────────────────────────────────────
# Constructors
# ─────────────────────────────────────────────────────────────

def plain_entry(ctx: GenusContext, letter: Letter, sign: int = 1) -> FactorEntry:
    return FactorEntry(empty_word(ctx), letter, sign)


def plain_system(ctx: GenusContext, indices: Iterable[int], sign: int = 1) -> HurwitzSystem:
    """System of trivially conjugated ζ entries"""
    return HurwitzSystem(ctx, tuple(plain_entry(ctx, Letter.zeta(i), sign) for i in indices))


def empty_system(ctx: GenusContext) -> HurwitzSystem:
    return HurwitzSystem(ctx, ())


# ─────────────────────────────────────────────────────────────
# Census and Invariants
# ─────────────────────────────────────────────────────────────

def counts(s: HurwitzSystem) -> FiberCounts:
    k = s.genus.num_sigma
    n0 = {1: 0, -1: 0}
    nh = {1: [0] * k, -1: [0] * k}
    for e in s.entries:
        if e.base.kind is LetterKind.ZETA:
            n0[e.sign] += 1
        else:
            nh[e.sign][e.base.index - 1] += 1
    return FiberCounts(s.genus.g, n0[1], n0[-1], tuple(nh[1]), tuple(nh[-1]))


def fiber_sum(*systems: HurwitzSystem) -> HurwitzSystem:
    if not systems:
        raise HypothesisError("fiber_sum needs at least one system")
    ctx = check_same_genus(*(s.genus for s in systems))
    entries: Tuple[FactorEntry, ...] = ()
    for s in systems:
        entries += s.entries
    return HurwitzSystem(ctx, entries)


def repeat_system(s: HurwitzSystem, m: int) -> HurwitzSystem:
    """Fiber sum of m copies (m = 0 gives the empty system)"""
    return HurwitzSystem(s.genus, s.entries * m)


def total_monodromy(s: HurwitzSystem) -> Word:
    total = empty_word(s.genus)
    for e in s.entries:
        total = word_concat(total, e.word())
    return total


def monodromy_images(s: HurwitzSystem) -> Tuple[Permutation, SympMatrix]:
    w = total_monodromy(s)
    return perm_image(w), symp_image(w)


def is_closed(s: HurwitzSystem) -> bool:
    """Necessary condition for a fibration over S²: trivial total monodromy in both images"""
    p, m = monodromy_images(s)
    return p.is_Identity and m.is_identity


def is_chiral(s: HurwitzSystem) -> bool:
    return all(e.sign == 1 for e in s.entries)


def is_irreducible(s: HurwitzSystem) -> bool:
    return all(e.base.is_zeta for e in s.entries)


def is_transitive(s: HurwitzSystem) -> bool:
    """Transitivity of the entries' permutation images on the 2g+2 branch points"""
    n = s.genus.points
    return perms_transitive((perm_image(e.word()) for e in s.entries), n)


def euler_invariant(c: FiberCounts, g: Optional[int] = None) -> int:
    """E(f) = n₀⁺ − n₀⁻ − 4 Σ_h (n_h⁺ − n_h⁻)(2h(g−h) + 2g + 1)"""
    if g is None:
        g = c.genus
    elif g != c.genus:
        raise GenusMismatchError(f"counts are for genus {c.genus}, not {g}")
    E = c.n0_plus - c.n0_minus
    for h, (p, m) in enumerate(zip(c.nh_plus, c.nh_minus), start=1):
        E -= 4 * (p - m) * (2 * h * (g - h) + 2 * g + 1)
    return E


def divisibility_modulus(g: int) -> int:
    return 2 * (2 * g + 1) if g % 2 == 0 else 4 * (2 * g + 1)


def divisibility_check(E: int, g: int) -> bool:
    return E % divisibility_modulus(g) == 0
