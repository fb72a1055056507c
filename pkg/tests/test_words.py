import pytest

from errors import GenusMismatchError, LetterRangeError
from mcg.words import (
    GenusContext, Letter, SignedLetter, Word,
    chain_word, free_reduce, indices_of, iota_word, parse_word_text,
    word_concat, word_inverse, word_power, zeta_word,
)


def test_genus_context_ranges():
    ctx = GenusContext(4)
    assert (ctx.num_zeta, ctx.num_sigma, ctx.points, ctx.dim) == (9, 2, 10, 8)


@pytest.mark.parametrize("g", [0, -1])
def test_genus_must_be_positive(g):
    with pytest.raises(LetterRangeError):
        GenusContext(g)


@pytest.mark.parametrize("letter", [Letter.zeta(4), Letter.zeta(0), Letter.sigma(1)])
def test_letters_checked_against_genus(letter):
    with pytest.raises(LetterRangeError):
        Word(GenusContext(1), (SignedLetter(letter),))


def test_parse_and_print(g2):
    w = parse_word_text(g2, "z1 z3^-1 s1")
    assert len(w) == 3
    assert str(w) == "z1 z3^-1 s1"
    assert parse_word_text(g2, "1").is_empty
    assert str(parse_word_text(g2, "")) == "1"


@pytest.mark.parametrize("text", ["x1", "z", "z1^2", "s1^0"])
def test_parse_rejects_bad_tokens(g2, text):
    with pytest.raises(LetterRangeError):
        parse_word_text(g2, text)


def test_inverse_cancels(g2):
    w = parse_word_text(g2, "z1 z2^-1 s1 z5")
    assert free_reduce(word_concat(w, word_inverse(w))).is_empty


def test_free_reduce_nested(g2):
    w = parse_word_text(g2, "z1 z2 z2^-1 z1^-1 z3")
    assert free_reduce(w) == parse_word_text(g2, "z3")


def test_negative_power(g2):
    w = parse_word_text(g2, "z1 z2")
    assert word_power(w, -2) == parse_word_text(g2, "z2^-1 z1^-1 z2^-1 z1^-1")
    assert word_power(w, 0).is_empty


def test_concat_genus_mismatch():
    with pytest.raises(GenusMismatchError):
        word_concat(zeta_word(GenusContext(2), [1]), zeta_word(GenusContext(3), [1]))


def test_chain_word(g2):
    assert indices_of(chain_word(1, g2)) == [1, 2] * 6
    with pytest.raises(LetterRangeError):
        chain_word(2, g2)


def test_iota_word():
    assert indices_of(iota_word(GenusContext(1))) == [1, 2, 3, 3, 2, 1]


def test_indices_of_rejects_inverse_letters(g2):
    with pytest.raises(LetterRangeError):
        indices_of(parse_word_text(g2, "z1 z2^-1"))
