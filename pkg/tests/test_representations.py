import random

import pytest
from sympy.combinatorics import Permutation

from conftest import random_word
from errors import GenusMismatchError
from mcg.words import (
    GenusContext, chain_word, free_reduce, iota_word, parse_word_text, word_concat, word_inverse,
    zeta_word,
)
from mcg.representations import (
    SympMatrix, cycle_type, is_transitive, orbits, perm_image, point_images, symp_image,
    transposition,
)


def test_permutation_composes_left_to_right():
    p = transposition(3, 1, 2)
    q = transposition(3, 2, 3)
    assert point_images(p * q)[0] == 3
    assert (p * p).is_Identity


def test_point_images_and_cycle_type():
    assert point_images(transposition(4, 1, 2)) == (2, 1, 3, 4)
    assert cycle_type(Permutation([1, 2, 0, 3])) == (3, 1)
    assert cycle_type(transposition(6, 2, 5)) == (2, 1, 1, 1, 1)


def test_perm_image_of_generators(g2):
    assert perm_image(zeta_word(g2, [1])) == transposition(6, 1, 2)
    assert perm_image(parse_word_text(g2, "s1")).is_Identity
    assert perm_image(parse_word_text(g2, "z2 z3")).size == 6


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_iota_is_minus_identity(g):
    ctx = GenusContext(g)
    assert symp_image(iota_word(ctx)).is_minus_identity
    assert perm_image(iota_word(ctx)).is_Identity


@pytest.mark.parametrize("g,h", [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2)])
def test_chain_word_is_identity(g, h):
    ctx = GenusContext(g)
    assert symp_image(chain_word(h, ctx)).is_identity
    assert perm_image(chain_word(h, ctx)).is_Identity


@pytest.mark.parametrize("g", [1, 2, 3])
def test_generators_are_symplectic(g):
    ctx = GenusContext(g)
    for i in range(1, ctx.num_zeta + 1):
        m = symp_image(zeta_word(ctx, [i]))
        assert m.is_symplectic()
        assert (m * m.inverse()).is_identity


def test_symp_image_is_a_homomorphism(g2):
    u = parse_word_text(g2, "z1 z2 z4^-1")
    v = parse_word_text(g2, "z3^-1 z2 z5")
    assert symp_image(word_concat(u, v)) == symp_image(u) * symp_image(v)
    assert perm_image(word_concat(u, v)) == perm_image(u) * perm_image(v)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_images_are_homomorphisms_on_random_words(g):
    rng = random.Random(100 + g)
    ctx = GenusContext(g)
    for _ in range(25):
        u = random_word(rng, ctx, rng.randint(0, 30))
        v = random_word(rng, ctx, rng.randint(0, 30))
        uv = word_concat(u, v)
        assert perm_image(uv) == perm_image(u) * perm_image(v)
        assert symp_image(uv) == symp_image(u) * symp_image(v)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_iota_is_central_in_both_images(g):
    rng = random.Random(200 + g)
    ctx = GenusContext(g)
    iota = iota_word(ctx)
    for _ in range(15):
        w = random_word(rng, ctx, rng.randint(1, 30))
        assert symp_image(word_concat(iota, w)) == symp_image(word_concat(w, iota))
        assert perm_image(word_concat(iota, w)) == perm_image(word_concat(w, iota))


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_free_reduce_preserves_images(g):
    rng = random.Random(300 + g)
    ctx = GenusContext(g)
    for _ in range(25):
        u = random_word(rng, ctx, rng.randint(0, 15))
        # u·u⁻¹ in the middle guarantees cancellations
        w = word_concat(word_concat(random_word(rng, ctx, 5), word_concat(u, word_inverse(u))),
                        random_word(rng, ctx, 5))
        r = free_reduce(w)
        assert len(r) <= len(w) - 2 * len(u)
        assert free_reduce(r) == r
        assert symp_image(r) == symp_image(w)
        assert perm_image(r) == perm_image(w)


def test_symp_matrix_hash_matches_equality(g2):
    a = symp_image(zeta_word(g2, [1, 2]))
    b = symp_image(zeta_word(g2, [1, 2]))
    assert a == b and hash(a) == hash(b)
    assert SympMatrix.identity(4).is_identity


def test_orbits():
    t = transposition(4, 1, 2)
    assert orbits([t], 4) == [(1, 2), (3,), (4,)]
    assert not is_transitive([t], 4)
    chain = [transposition(4, i, i + 1) for i in range(1, 4)]
    assert orbits(chain, 4) == [(1, 2, 3, 4)]
    assert is_transitive(chain, 4)


def test_orbits_of_no_generators():
    assert orbits([], 3) == [(1,), (2,), (3,)]
    assert not is_transitive([], 3)


def test_orbits_reject_wrong_degree():
    with pytest.raises(GenusMismatchError):
        orbits([transposition(4, 1, 2)], 6)
