import pytest

from crthrottle import families
from crthrottle.families import ConstructionError
from crthrottle.graph import Graph, common_neighbors, emit_graph6
from crthrottle.solvers import (
    capture_time,
    cop_number,
    damage_number,
    domination_number,
    exists_safe_vertex,
)


def test_wheel_fan_empty():
    w = families.wheel(5)
    assert w.degree(4) == 4 and all(w.degree(i) == 3 for i in range(4))
    assert families.empty(3).num_edges == 0
    f = families.fan(4)
    assert f.degree(3) == 3 and f.edges() == [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("build, bad", [
    (families.path, 0), (families.cycle, 2), (families.wheel, 3), (families.fan, 3),
    (families.gear, 1), (families.accordion, 1), (families.star, 0),
])
def test_parameter_minimums(build, bad):
    with pytest.raises(ValueError):
        build(bad)


def test_gear_small():
    g = families.gear(2)
    assert (g.n, g.num_edges, g.degree(4)) == (5, 6, 2)


@pytest.mark.parametrize("l", range(2, 8))
def test_gear_accordion_orders(l):
    g, a = families.gear(l), families.accordion(l)
    assert g.n == 2 * l + 1 and g.degree(g.n - 1) == l
    assert a.n == 2 * l and a.degree(a.n - 1) == l


def test_gear_damage():
    assert damage_number(families.gear(4), 1) == 1


def test_accordion_domination():
    assert domination_number(families.accordion(4)) > 2


def test_spider():
    assert emit_graph6(families.spider([1, 1, 1])) == emit_graph6(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert families.spider([2, 2]).degrees() == [2, 2, 1, 2, 1]
    s = families.spider([3, 3, 3])
    assert s.n == 10 and domination_number(s) == 4
    with pytest.raises(ValueError):
        families.spider([])


def test_petersen():
    p = families.petersen()
    assert p.n == 10
    assert domination_number(p) == 3
    assert all(common_neighbors(p, u, v) == 0 for u, v in p.edges())


def test_petersen_validator_catches_wrong_graph():
    with pytest.raises(ConstructionError):
        families.validate_petersen(families.cycle(10))


def test_h_graph_examples():
    assert domination_number(families.h_graph(9)) == 3
    assert capture_time(families.h_graph(10), 1) == 6
    assert domination_number(families.h_graph(13)) == 4
    with pytest.raises(ValueError):
        families.h_graph(6)


@pytest.mark.parametrize("n", range(7, 14))
def test_h_graph_validator_passes(n):
    families.validate_h_graph(families.h_graph(n, validate=False))


def test_h_graph_validator_rejects_wrong_edges():
    edges = [e for e in families.H_HEAD_EDGES if e != (4, 7)] + [(7, 8), (8, 9)]
    g = Graph.from_edges(9, [(u - 1, v - 1) for u, v in edges])
    with pytest.raises(ConstructionError):
        families.validate_h_graph(g)


def test_gap3_examples():
    g = families.gap3_graph()
    assert g.n == 14
    assert domination_number(g) == 5
    assert damage_number(g, 2) == 1


def test_gap3_validator_rejects_wrong_edges():
    edges = families.GAP3_EDGES[:-1]
    g = Graph.from_edges(14, [(u - 1, v - 1) for u, v in edges])
    with pytest.raises(ConstructionError):
        families.validate_gap3_graph(g)


def test_safe_vertex_family():
    g = families.cop2_safe_vertex_family(families.complete(1), 0, 0)
    assert g.n == 5
    assert cop_number(g) == 2 and damage_number(g, 1) == 1
    assert families.cop2_safe_vertex_family(families.empty(0), 0, 0) == families.cycle(4)
    g = families.cop2_safe_vertex_family(families.complete(2), 1, 2)
    assert g.n == 9 and exists_safe_vertex(g) is not None


@pytest.mark.parametrize("family, n", [
    ("path:7", 7), ("gear:4", 9), ("accordion:5", 10), ("petersen", 10),
    ("hn:12", 12), ("gap3", 14), ("spider:3,3,3", 10), ("empty:5", 5),
])
def test_parse_family(family, n):
    assert families.parse_family(family).n == n


@pytest.mark.parametrize("family", ["nosuch", "gear", "gear:a", "path:1,2"])
def test_parse_family_errors(family):
    with pytest.raises(ValueError):
        families.parse_family(family)


def test_constructors_deterministic():
    for family in ["gear:5", "hn:11", "gap3", "petersen"]:
        assert emit_graph6(families.parse_family(family)) == emit_graph6(families.parse_family(family))
