import random

import pytest

from conftest import random_system
from errors import GenusMismatchError, HypothesisError, LetterRangeError
from mcg.words import GenusContext, Letter, empty_word, parse_word_text
from hurwitz.system import (
    FactorEntry, FiberCounts, HurwitzSystem,
    counts, divisibility_check, euler_invariant, fiber_sum, is_chiral, is_closed,
    is_irreducible, is_transitive, monodromy_images, plain_entry, plain_system, repeat_system,
)
from hurwitz.basic import (
    BASIC_NAMES, W0, W1, W1p, W2h, W2hp, Wprime2h, basic_system, chain_offset, expected_counts,
)


def _cases(gs):
    for g in gs:
        for name in ("W0", "W1", "W1p"):
            yield g, name, 1
        for h in range(1, g // 2 + 1):
            yield g, "W2h", h
            yield g, "W2hp", h


@pytest.mark.parametrize("g,name,h", list(_cases([2, 3, 4, 5])))
def test_counts_match_table(g, name, h):
    c = counts(basic_system(name, GenusContext(g), h))
    want = expected_counts(name, g, h)
    assert c.n0_plus == want["n0_plus"]
    assert c.n0_minus == want["n0_minus"]
    assert sum(c.nh_plus) == want["nh_plus"]
    assert sum(c.nh_minus) == want["nh_minus"]
    if name in ("W2h", "W2hp"):
        assert c.nh_plus[h - 1] == 1


@pytest.mark.parametrize("g,name,h", list(_cases([1, 2, 3, 4])) + [(4, "Wprime2h", 1), (4, "Wprime2h", 2)])
def test_basic_systems_are_closed(g, name, h):
    assert is_closed(basic_system(name, GenusContext(g), h))


@pytest.mark.parametrize("name,chiral,irreducible", [
    ("W0", True, True),
    ("W1", True, True),
    ("W2h", True, False),
    ("W1p", False, True),
    ("W2hp", False, False),
])
def test_table_flags(name, chiral, irreducible):
    s = basic_system(name, GenusContext(4), 1)
    assert is_chiral(s) is chiral
    assert is_irreducible(s) is irreducible


def test_sigma_slot_position():
    ctx = GenusContext(4)
    s = W2h(ctx, 2)
    assert s[chain_offset(4, 2)].base == Letter.sigma(2)
    assert len(Wprime2h(ctx, 2)) == len(s) - 1 + 4 * 2 * (2 * 2 + 1)


def test_unknown_basic_name(g2):
    with pytest.raises(LetterRangeError):
        basic_system("W9", g2)
    assert "Wprime2h" in BASIC_NAMES


def test_w2h_needs_valid_h(g2):
    with pytest.raises(LetterRangeError):
        W2h(g2, 2)
    with pytest.raises(LetterRangeError):
        W2hp(GenusContext(1), 1)


def test_euler_invariant_of_w1():
    c = counts(W1(GenusContext(2)))
    assert euler_invariant(c) == 30
    assert divisibility_check(30, 2)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_euler_invariant_of_basics(g):
    ctx = GenusContext(g)
    assert euler_invariant(counts(W0(ctx))) == 4 * (2 * g + 1)
    assert euler_invariant(counts(W1p(ctx))) == 0
    for h in range(1, g // 2 + 1):
        assert euler_invariant(counts(W2h(ctx, h))) == 0
        assert euler_invariant(counts(W2hp(ctx, h))) == 0


def test_divisibility_modulus_depends_on_parity():
    assert divisibility_check(10, 2)
    assert not divisibility_check(14, 3)
    assert divisibility_check(28, 3)


def test_fiber_counts_add_and_validate():
    a = FiberCounts(4, 1, 0, (1, 0), (0, 0))
    b = FiberCounts(4, 2, 3, (0, 1), (0, 1))
    total = a + b
    assert (total.n0_plus, total.n0_minus, total.nh_plus, total.nh_minus) == (3, 3, (1, 1), (0, 1))
    assert total.total == 9
    assert FiberCounts(4).nh_plus == (0, 0)
    with pytest.raises(LetterRangeError):
        FiberCounts(2, -1)
    with pytest.raises(LetterRangeError):
        FiberCounts(2, 0, 0, (1, 1))
    with pytest.raises(GenusMismatchError):
        FiberCounts(2) + FiberCounts(3)


def test_fiber_sum_and_repeat(g2):
    s = plain_system(g2, [1, 2])
    assert len(fiber_sum(s, s, s)) == 6
    assert repeat_system(s, 3) == fiber_sum(s, s, s)
    assert len(repeat_system(s, 0)) == 0
    with pytest.raises(GenusMismatchError):
        fiber_sum(s, plain_system(GenusContext(3), [1]))


def test_conjugated_entry(g2):
    e = plain_entry(g2, Letter.zeta(2))
    w = plain_system(g2, [1]).entries[0].word()
    c = e.conjugated_by(w)
    assert not c.is_plain
    assert str(c) == "[z1]z2"
    assert c.conjugated_by(plain_system(g2, [1], sign=-1).entries[0].word()) == e


def test_entry_sign_validated(g2):
    with pytest.raises(LetterRangeError):
        FactorEntry(empty_word(g2), Letter.zeta(1), 2)


def test_transitivity(g2):
    assert is_transitive(W0(g2))
    assert not is_transitive(plain_system(g2, [1, 3]))


def test_genus_mismatch_in_system(g2):
    with pytest.raises(GenusMismatchError):
        HurwitzSystem(g2, (plain_entry(GenusContext(3), Letter.zeta(1)),))


def test_conjugator_is_stored_reduced(g2):
    e = FactorEntry(parse_word_text(g2, "z1 z3 z3^-1 z1^-1 z2"), Letter.zeta(4))
    assert e.conjugator == parse_word_text(g2, "z2")
    assert FactorEntry(parse_word_text(g2, "z2 z2^-1"), Letter.zeta(1)).is_plain


def test_fiber_sum_needs_a_system():
    with pytest.raises(HypothesisError):
        fiber_sum()


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_euler_invariant_is_additive(g):
    rng = random.Random(g)
    ctx = GenusContext(g)
    for _ in range(20):
        a = random_system(rng, ctx, rng.randint(0, 12))
        b = random_system(rng, ctx, rng.randint(0, 12))
        total = counts(fiber_sum(a, b))
        assert total == counts(a) + counts(b)
        assert euler_invariant(total) == euler_invariant(counts(a)) + euler_invariant(counts(b))


@pytest.mark.parametrize("g", [1, 2, 3])
def test_nucleon_multiples_agree(g):
    ctx = GenusContext(g)
    small = repeat_system(W0(ctx), g + 1)
    big = repeat_system(W1(ctx), 2)
    assert len(small) == len(big) == 4 * (g + 1) * (2 * g + 1)
    assert counts(small) == counts(big)
    assert monodromy_images(small) == monodromy_images(big)
    assert euler_invariant(counts(small)) == euler_invariant(counts(big))
