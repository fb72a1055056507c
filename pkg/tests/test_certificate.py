import pytest

from conftest import record
from errors import BudgetExhausted, GenusMismatchError, MoveError
from mcg.words import GenusContext
from hurwitz.system import plain_system
from hurwitz.moves import Move, MoveCertificate, MoveType
from stabilizer.certificate import CertificateRecorder, concat_certificates, verify_certificate


def test_recorded_certificate_verifies():
    cert = record(2, [4, 1, 2, 1], [Move(MoveType.H2, 1), Move(MoveType.H1, 0)])
    assert cert.claimed_end.plain_indices() == [2, 4, 1, 2]
    result = verify_certificate(cert)
    assert result.ok and bool(result)
    assert result.steps == 2
    assert result.end == cert.claimed_end


def test_tampered_end_fails_at_the_end(g2):
    cert = record(2, [1, 3], [Move(MoveType.H1, 0)])
    tampered = MoveCertificate(cert.start, cert.moves, plain_system(g2, [3, 2]))
    result = verify_certificate(tampered)
    assert not result.ok
    assert result.failed_step == 1
    assert "entry 1" in result.reason


def test_length_mismatch_reported(g2):
    cert = MoveCertificate(plain_system(g2, [1, 3]), (), plain_system(g2, [1]))
    result = verify_certificate(cert)
    assert result.failed_step == 0
    assert "entries" in result.reason


def test_inapplicable_move_fails_at_its_step(g2):
    cert = MoveCertificate(plain_system(g2, [1, 3]), (Move(MoveType.H1, 0), Move(MoveType.H2, 0)))
    result = verify_certificate(cert)
    assert (result.ok, result.steps, result.failed_step) == (False, 1, 1)
    assert result.to_dict()["failed_step"] == 1


def test_recorder_budget(g2):
    rec = CertificateRecorder(plain_system(g2, [1, 3]), budget=1)
    rec.apply(Move(MoveType.H1, 0))
    with pytest.raises(BudgetExhausted):
        rec.apply(Move(MoveType.H1, 0))


def test_concat_certificates():
    a = record(2, [1, 3], [Move(MoveType.H1, 0)])
    b = record(2, [3, 1], [Move(MoveType.H1_INV, 0)])
    joined = concat_certificates(a, b)
    assert len(joined) == 2
    assert joined.claimed_end == a.start
    with pytest.raises(MoveError):
        concat_certificates(a, a)


def test_certificate_endpoints_share_genus():
    with pytest.raises(GenusMismatchError):
        MoveCertificate(plain_system(GenusContext(2), [1]), (), plain_system(GenusContext(3), [1]))
