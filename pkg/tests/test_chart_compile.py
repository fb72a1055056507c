import pytest

from conftest import record
from errors import ChartError
from mcg.words import GenusContext
from hurwitz.system import FiberCounts, plain_system
from hurwitz.basic import W0, W1
from hurwitz.moves import Move, MoveCertificate, MoveType, t_block
from stabilizer.macros import derive_w2h
from chart.model import VertexKind, product
from chart.validate import census, interior_degrees, validate
from chart.canonical import is_isomorphic
from chart.compile import Capping, compile_certificate
from chart.builders import build_F1, build_N0, build_N1, build_N2h, build_P2h, m2h_degrees


def _kinds(chart):
    return [v.kind for v in chart.vertices]


def test_crossing_from_h1():
    c = compile_certificate(record(2, [1, 3], [Move(MoveType.H1, 0)]))
    assert validate(c).ok
    assert census(c) == FiberCounts(2, 2, 2)
    assert interior_degrees(c) == [4]
    assert _kinds(c).count(VertexKind.CROSSING) == 1


def test_braiding_from_h2():
    c = compile_certificate(record(2, [1, 2, 1], [Move(MoveType.H2, 0)]))
    assert validate(c).ok
    assert census(c) == FiberCounts(2, 3, 3)
    assert interior_degrees(c) == [6]


def test_transition_from_h3():
    T = t_block(1)
    c = compile_certificate(record(1, T + [2], [Move(MoveType.H3, 0)]))
    assert validate(c).ok
    transition = [v for v in c.vertices if v.kind is VertexKind.TRANSITION]
    assert len(transition) == 1 and transition[0].param == 2
    assert transition[0].degree == 14


def test_cyclic_moves_only_reindex():
    c = compile_certificate(record(2, [1, 3, 5], [Move(MoveType.CYCLIC_LEFT, 1), Move(MoveType.H1, 1)]))
    assert validate(c).ok
    assert _kinds(c).count(VertexKind.CROSSING) == 1


def test_empty_certificates_give_named_charts():
    g2 = GenusContext(2)
    assert is_isomorphic(compile_certificate(MoveCertificate(W0(g2)), Capping.NUCLEONS_AT_START), build_N0(2))
    assert is_isomorphic(compile_certificate(MoveCertificate(W1(g2)), Capping.NUCLEONS_AT_START), build_N1(2))
    assert is_isomorphic(compile_certificate(MoveCertificate(plain_system(g2, [1]))), build_F1(2))


def test_mirror_transition_from_h3_inverse():
    T = t_block(1)
    c = compile_certificate(record(1, [2] + T, [Move(MoveType.H3_INV, 0)]))
    assert validate(c).ok
    mirror = [v for v in c.vertices if v.kind is VertexKind.TRANSITION_CW]
    assert len(mirror) == 1 and mirror[0].param == 2
    assert mirror[0].degree == 14


def test_h3_then_inverse_gives_both_transitions():
    T = t_block(1)
    c = compile_certificate(record(1, T + [3], [Move(MoveType.H3, 0), Move(MoveType.H3_INV, 0)]))
    assert validate(c).ok
    assert _kinds(c).count(VertexKind.TRANSITION) == 1
    assert _kinds(c).count(VertexKind.TRANSITION_CW) == 1
    assert census(c) == FiberCounts(1, 7, 7)


def test_slides_have_no_chart_vertex():
    with pytest.raises(ChartError):
        compile_certificate(record(2, [1, 2], [Move(MoveType.SLIDE_RIGHT, 0)]))


def test_rejects_bad_certificates(g2):
    with pytest.raises(ChartError):
        compile_certificate(MoveCertificate(plain_system(g2, [1, 3]), (), plain_system(g2, [3, 1])))
    with pytest.raises(ChartError):
        compile_certificate(MoveCertificate(plain_system(g2, [1], sign=-1)))
    with pytest.raises(ChartError):
        compile_certificate(MoveCertificate(plain_system(g2, [1, 3])), Capping.NUCLEONS_AT_START)


def test_p2h_chart_matches_nucleon_product():
    c = build_P2h(2, 1)
    assert validate(c).ok
    assert census(c) == census(product(build_N0(2), build_N0(2))) == FiberCounts(2, 40, 0)
    assert _kinds(c).count(VertexKind.NUCLEON_IN) == 2
    degrees = interior_degrees(c)
    assert set(degrees) <= {4, 6, 20, 22}
    assert {20, 22} <= set(degrees)
    assert m2h_degrees(2, 1) == degrees


def test_black_both_capping_keeps_positive_count():
    c = compile_certificate(derive_w2h(2, 1), Capping.BLACK_BOTH)
    assert validate(c).ok
    assert census(c).n0_plus == census(build_P2h(2, 1)).n0_plus == 40
    assert census(c).n0_minus == 40


def test_n2h_chart():
    c = build_N2h(2, 1)
    assert validate(c).ok
    assert census(c) == FiberCounts(2, 28, 0, (1,), (0,))
    assert _kinds(c).count(VertexKind.NUCLEON_IN) == 2
    bursts = [v for v in c.vertices if v.kind is VertexKind.SIGMA_BURST_OUT]
    assert len(bursts) == 1 and bursts[0].param == 1 and bursts[0].degree == 13
