from mcg.words import GenusContext, Letter
from chart.model import Chart, ChartEdge, product
from chart.canonical import canonical_code, is_isomorphic
from chart.builders import build_F1, build_F2h, build_N0, build_N1
from chart.dot import to_dot


def test_same_degree_nucleons_differ():
    assert build_N0(1).vertices[0].degree == build_N1(1).vertices[0].degree == 12
    assert not is_isomorphic(build_N0(1), build_N1(1))


def test_product_order_does_not_matter():
    a = product(build_N0(2), build_F1(2))
    b = product(build_F1(2), build_N0(2))
    assert is_isomorphic(a, b)
    assert canonical_code(a) == canonical_code(b)


def test_labels_and_genus_distinguish():
    assert not is_isomorphic(build_F1(4), build_F2h(4, 1))
    assert not is_isomorphic(build_F1(2), build_F1(3))


def test_hoops_count_in_the_code():
    g2 = GenusContext(2)
    one = Chart(g2, (), (ChartEdge(0, Letter.zeta(1)),))
    two = Chart(g2, (), (ChartEdge(0, Letter.zeta(1)), ChartEdge(1, Letter.zeta(2))))
    assert not is_isomorphic(one, two)
    assert is_isomorphic(two, Chart(g2, (), (ChartEdge(0, Letter.zeta(2)), ChartEdge(1, Letter.zeta(1)))))


def test_dot_export():
    text = to_dot(build_F1(2))
    assert text.startswith("digraph chart {\n")
    assert '  v0 [shape=point, label=""];' in text
    assert '  v0 -> v1 [label="z1"];' in text
    assert text.endswith("}\n")
    hoop = to_dot(Chart(GenusContext(2), (), (ChartEdge(0, Letter.sigma(1)),)), name="h")
    assert "digraph h {" in hoop
    assert 'hoop0 [shape=circle, style=dashed, label="s1"];' in hoop


def test_dot_labels_parameters():
    text = to_dot(build_N0(1))
    assert 'v0 [shape=doublecircle, label="nucleon_in"];' in text
