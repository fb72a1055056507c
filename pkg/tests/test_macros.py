import pytest

from errors import HypothesisError, MoveError
from mcg.words import GenusContext
from hurwitz.system import counts, repeat_system
from hurwitz.basic import W0, W2h, Wprime2h, ascending, descending
from hurwitz.moves import MoveType, replay
from stabilizer.certificate import verify_certificate
from stabilizer.macros import (
    derive_w2h, derive_w2h_contracted, h1h2_moves, macro_block_pass,
    macro_reverse_chain, reverse_chain_indices, spread_moves,
)

BRAID_KINDS = {MoveType.H1, MoveType.H1_INV, MoveType.H2, MoveType.H2_INV}


@pytest.mark.parametrize("g,copies", [(1, 1), (2, 2), (3, 1)])
def test_spread_separates_t_blocks(g, copies):
    out = replay(repeat_system(W0(GenusContext(g)), copies), spread_moves(g, copies))
    assert out.plain_indices() == ascending(g) * (2 * copies) + descending(g) * (2 * copies)


def test_spread_uses_only_h3():
    assert {m.kind for m in spread_moves(2, 2)} == {MoveType.H3}


def test_h1h2_moves_commute_and_braid():
    moves = h1h2_moves([1, 3], [3, 1])
    assert [(m.kind, m.pos, m.indices) for m in moves] == [(MoveType.H1, 0, (1, 3))]
    assert [m.kind for m in h1h2_moves([1, 2, 1], [2, 1, 2])] == [MoveType.H2]


def test_h1h2_moves_reject_unequal_braids():
    with pytest.raises(MoveError):
        h1h2_moves([1, 2], [2, 1])
    with pytest.raises(MoveError):
        h1h2_moves([1, 2], [1])


@pytest.mark.parametrize("method", ["construct", "search"])
def test_reverse_chain(method):
    cert = macro_reverse_chain(1, 2, method=method)
    down, up = reverse_chain_indices(1)
    assert cert.start.plain_indices() == down == [2, 1] * 3
    assert cert.claimed_end.plain_indices() == up
    assert verify_certificate(cert).ok
    assert {m.kind for m in cert.moves} <= BRAID_KINDS


def test_reverse_chain_rejects_bad_input():
    with pytest.raises(MoveError):
        macro_reverse_chain(2, 2)
    with pytest.raises(HypothesisError):
        macro_reverse_chain(1, 2, method="guess")


def test_block_pass_is_h1_h2_only():
    cert = macro_block_pass(2, 1)
    assert verify_certificate(cert).ok
    assert {m.kind for m in cert.moves} <= {MoveType.H1, MoveType.H2}


@pytest.mark.parametrize("g,h", [(2, 1), (3, 1), (4, 1), (4, 2)])
def test_derive_w2h_endpoints(g, h):
    ctx = GenusContext(g)
    cert = derive_w2h(g, h)
    assert cert.start == repeat_system(W0(ctx), h + 1)
    assert cert.claimed_end == Wprime2h(ctx, h)
    assert verify_certificate(cert).ok
    assert counts(cert.start) == counts(cert.claimed_end)


def test_derive_w2h_contracted_ends_in_w2h():
    cert = derive_w2h_contracted(2, 1)
    assert cert.claimed_end == W2h(GenusContext(2), 1)
    assert cert.moves[-1].kind is MoveType.CONTRACT_SIGMA
    assert verify_certificate(cert).ok


def test_derive_w2h_needs_valid_h():
    with pytest.raises(MoveError):
        derive_w2h(2, 2)
    with pytest.raises(MoveError):
        derive_w2h(1, 1)
