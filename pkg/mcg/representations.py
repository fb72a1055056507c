"""
Two exact homomorphic images of the hyperelliptic mapping class group.

Convention: words act left to right. For both images, image(u·v) = image(u) * image(v)
where `*` reads "first, then". On column vectors this means M(u·v) = M(v) @ M(u);
on points it means (p * q)(x) = q(p(x)), which is sympy's product order.

Branch points are numbered 1..2g+2 in documents and 0..2g+1 inside sympy.

Equal images are necessary for equal mapping classes, never sufficient.
"""

from functools import lru_cache
from typing import Iterable, List, Tuple
from dataclasses import dataclass

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from errors import GenusMismatchError
from mcg.words import GenusContext, Letter, Word, chain_word

# ─────────────────────────────────────────────────────────────
# Permutation Image
# ─────────────────────────────────────────────────────────────

def identity_perm(n: int) -> Permutation:
    return Permutation(list(range(n)))


def transposition(n: int, a: int, b: int) -> Permutation:
    """Swap of branch points a and b (1-based) on n points"""
    return Permutation(a - 1, b - 1, size=n)


def perm_image(w: Word) -> Permutation:
    n = w.genus.points
    acc = identity_perm(n)
    for s in w.letters:
        if not s.letter.is_zeta:
            continue
        # transpositions are involutions, so the sign does not matter
        acc = acc * transposition(n, s.letter.index, s.letter.index + 1)
    return acc


def point_images(p: Permutation) -> Tuple[int, ...]:
    """Entry k-1 is the image of branch point k"""
    return tuple(x + 1 for x in p.array_form)


def cycle_type(p: Permutation) -> Tuple[int, ...]:
    lengths: List[int] = []
    for length, count in p.cycle_structure.items():
        lengths.extend([length] * count)
    return tuple(sorted(lengths, reverse=True))


def _group(perms: Iterable[Permutation], n: int) -> PermutationGroup:
    # the identity pins the degree to n, also for an empty generator list
    gens = [identity_perm(n)]
    for p in perms:
        if p.size != n:
            raise GenusMismatchError(f"permutation on {p.size} points, expected {n}")
        gens.append(p)
    return PermutationGroup(gens)


def orbits(perms: Iterable[Permutation], n: int) -> List[Tuple[int, ...]]:
    """Orbits on {1..n} of the group generated by `perms`, ordered by least point"""
    return sorted(tuple(sorted(x + 1 for x in orbit)) for orbit in _group(perms, n).orbits())


def is_transitive(perms: Iterable[Permutation], n: int) -> bool:
    return _group(perms, n).is_transitive()


# ─────────────────────────────────────────────────────────────
# Symplectic Image
# ─────────────────────────────────────────────────────────────

def symplectic_form(g: int) -> np.ndarray:
    """J on the basis a1, b1, ..., ag, bg with ⟨a_k, b_k⟩ = 1"""
    J = np.zeros((2 * g, 2 * g), dtype=object)
    for k in range(g):
        J[2 * k, 2 * k + 1] = 1
        J[2 * k + 1, 2 * k] = -1
    return J


def identity_matrix(n: int) -> np.ndarray:
    M = np.zeros((n, n), dtype=object)
    for k in range(n):
        M[k, k] = 1
    return M


def pairing(u: np.ndarray, v: np.ndarray, J: np.ndarray) -> int:
    return int(u.dot(J.dot(v)))


def chain_class(i: int, g: int) -> np.ndarray:
    """Homology class x_i of the chain curve C_i"""
    x = np.zeros(2 * g, dtype=object)
    if i == 2 * g + 1:
        for k in range(g):
            x[2 * k + 1] = 1          # b1 + ... + bg
    elif i == 2 * g:
        x[2 * g - 2] = 1              # a_g
    elif i % 2 == 1:
        x[2 * ((i + 1) // 2 - 1) + 1] = 1   # b_k, k = (i+1)/2
    else:
        k = i // 2
        x[2 * (k - 1)] = 1            # a_k - a_{k+1}
        x[2 * k] = -1
    return x


def transvection(x: np.ndarray, J: np.ndarray, sign: int = 1) -> np.ndarray:
    """
    T_x : v ↦ v + ⟨v, x⟩x, i.e. I − x xᵀ J; sign −1 gives the inverse I + x xᵀ J.
    Invariant under x ↦ −x.
    """
    n = len(x)
    return identity_matrix(n) - sign * np.outer(x, x).dot(J)


@dataclass(frozen=True, eq=False)
class SympMatrix:
    """Integer 2g×2g matrix; `*` composes left to right (see module doc)"""
    entries: np.ndarray

    def __eq__(self, other) -> bool:
        if not isinstance(other, SympMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(
            np.array_equal(self.entries, other.entries)
        )

    def __hash__(self) -> int:
        return hash(tuple(int(v) for v in self.entries.flat))

    def __mul__(self, other: "SympMatrix") -> "SympMatrix":
        if self.entries.shape != other.entries.shape:
            raise GenusMismatchError("matrix sizes differ")
        return SympMatrix(other.entries.dot(self.entries))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def identity(cls, n: int) -> "SympMatrix":
        return cls(identity_matrix(n))

    def inverse(self) -> "SympMatrix":
        # M⁻¹ = −J Mᵀ J for symplectic M
        J = symplectic_form(self.dim // 2)
        return SympMatrix(-J.dot(self.entries.T).dot(J))

    def is_symplectic(self) -> bool:
        J = symplectic_form(self.dim // 2)
        return bool(np.array_equal(self.entries.T.dot(J).dot(self.entries), J))

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.entries, identity_matrix(self.dim)))

    @property
    def is_minus_identity(self) -> bool:
        return bool(np.array_equal(self.entries, -identity_matrix(self.dim)))

    def tolist(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.entries]


@lru_cache(maxsize=None)
def _generator_matrices(g: int, letter: Letter) -> Tuple[SympMatrix, SympMatrix]:
    """(image, inverse image) of one generator"""
    J = symplectic_form(g)
    if letter.is_zeta:
        x = chain_class(letter.index, g)
        return SympMatrix(transvection(x, J, 1)), SympMatrix(transvection(x, J, -1))
    M = symp_image(chain_word(letter.index, GenusContext(g)))
    return M, M.inverse()


def symp_image(w: Word) -> SympMatrix:
    g = w.genus.g
    acc = identity_matrix(2 * g)
    for s in w.letters:
        pos, neg = _generator_matrices(g, s.letter)
        acc = (pos if s.sign == 1 else neg).entries.dot(acc)
    return SympMatrix(acc)


def intersection_table(g: int) -> List[List[int]]:
    """⟨x_i, x_j⟩ for the chosen chain classes"""
    J = symplectic_form(g)
    xs = [chain_class(i, g) for i in range(1, 2 * g + 2)]
    return [[pairing(u, v, J) for v in xs] for u in xs]
