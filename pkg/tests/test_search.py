import logging

from mcg.words import GenusContext
from hurwitz.system import plain_system, repeat_system
from hurwitz.basic import W0, W1
from hurwitz.moves import Move, MoveType, apply_move
from stabilizer.certificate import verify_certificate
from stabilizer.search import search_equivalence


def test_single_commutation(g2):
    cert = search_equivalence(plain_system(g2, [1, 3]), plain_system(g2, [3, 1]))
    assert cert is not None
    assert len(cert) == 1
    assert verify_certificate(cert).ok


def test_identical_systems_need_no_moves(g2):
    s = plain_system(g2, [1, 2, 1])
    cert = search_equivalence(s, s)
    assert len(cert) == 0


def test_rotation_needs_cyclic_flag(g2):
    a, b = plain_system(g2, [1, 2]), plain_system(g2, [2, 1])
    assert search_equivalence(a, b) is None
    cert = search_equivalence(a, b, cyclic=True)
    assert cert.uses_cyclic
    assert verify_certificate(cert).ok


def test_braid_relation_found_from_both_ends(g2):
    a = plain_system(g2, [2, 1, 2, 1, 2, 1])
    b = plain_system(g2, [1, 2, 1, 2, 1, 2])
    cert = search_equivalence(a, b, kinds=(MoveType.H1, MoveType.H2))
    assert cert.start == a and cert.claimed_end == b
    assert verify_certificate(cert).ok


def test_search_is_deterministic(g2):
    a = plain_system(g2, [4, 1, 2, 1, 3])
    b = plain_system(g2, [2, 1, 4, 2, 3])
    first = search_equivalence(a, b)
    assert first is not None
    assert search_equivalence(a, b).moves == first.moves


def test_mismatched_lengths_return_none(g2):
    assert search_equivalence(plain_system(g2, [1]), plain_system(g2, [1, 3])) is None


def test_budget_exhaustion_returns_none(caplog):
    ctx = GenusContext(1)
    with caplog.at_level(logging.WARNING, logger="stabilizer.search"):
        assert search_equivalence(repeat_system(W0(ctx), 2), repeat_system(W1(ctx), 2), budget=10) is None
    assert "budget" in caplog.text


def test_w0_reaches_its_transition_shift():
    w0 = W0(GenusContext(1))
    shifted = apply_move(w0, Move(MoveType.H3, 0))
    assert shifted != w0
    cert = search_equivalence(w0, shifted, budget=2_000)
    assert cert is not None
    assert cert.claimed_end == shifted
    assert verify_certificate(cert).ok
    assert search_equivalence(shifted, w0, budget=2_000) is not None
