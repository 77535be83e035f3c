import pytest
from hypothesis import given

from crthrottle import families
from crthrottle.enumeration import generate_connected
from crthrottle.graph import (
    INF,
    Graph,
    GraphFormatError,
    closed_neighborhood,
    components,
    distances,
    emit_edge_list,
    emit_graph6,
    girth,
    is_chordal,
    is_connected,
    is_dismantlable,
    is_tree,
    parse_edge_list,
    parse_graph6,
    radius,
)
from crthrottle.solvers import capture_time

from conftest import graphs

K3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


class TestGraph6:
    def test_triangle(self):
        assert parse_graph6("Bw") == K3

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.num_edges == 0

    def test_path(self):
        assert parse_graph6("Bg") == P3

    def test_emit_examples(self):
        assert emit_graph6(K3) == "Bw"
        assert emit_graph6(Graph.from_edges(2, [])) == "A?"
        assert emit_graph6(P3) == "Bg"

    def test_header_is_accepted(self):
        assert parse_graph6(">>graph6<<Bw") == K3

    @pytest.mark.parametrize("text, offset", [("B\x01", 1), ("Bww", 2), ("B", 1), ("Bx", 1)])
    def test_errors_name_offset(self, text, offset):
        with pytest.raises(GraphFormatError, match=f"offset {offset}"):
            parse_graph6(text)

    def test_long_form_rejected(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("~?@c")

    def test_emit_too_large(self):
        with pytest.raises(ValueError):
            emit_graph6(Graph.from_edges(63, []))

    def test_round_trip_enumerated(self):
        for n in range(1, 8):
            for g in generate_connected(n):
                assert parse_graph6(emit_graph6(g)) == g

    @given(graphs(max_n=10))
    def test_round_trip_random(self, g):
        assert parse_graph6(emit_graph6(g)) == g


class TestEdgeList:
    def test_examples(self):
        assert parse_edge_list("n 2\n0 1") == Graph.from_edges(2, [(0, 1)])
        assert parse_edge_list("n 3\n0 1\n1 2") == P3
        assert parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0") == families.cycle(4)

    def test_duplicates_collapse(self):
        assert parse_edge_list("n 2\n0 1\n1 0\n0 1").num_edges == 1

    def test_out_of_range(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_list("n 2\n0 2")

    def test_self_loop(self):
        with pytest.raises(GraphFormatError, match="self-loop"):
            parse_edge_list("n 2\n1 1")

    @given(graphs(max_n=8))
    def test_round_trip(self, g):
        assert parse_edge_list(emit_edge_list(g)) == g


class TestMetrics:
    def test_distance_examples(self):
        assert distances(families.path(4), [0]) == [0, 1, 2, 3]
        assert distances(families.cycle(6), [0, 3]) == [0, 1, 1, 0, 1, 1]
        assert distances(families.empty(2), [0]) == [0, INF]

    def test_distance_needs_sources(self):
        with pytest.raises(ValueError):
            distances(K3, [])

    @given(graphs(max_n=7))
    def test_distance_symmetry(self, g):
        rows = [distances(g, [u]) for u in g.vertices]
        assert all(rows[u][v] == rows[v][u] for u in g.vertices for v in g.vertices)

    def test_closed_neighborhood_examples(self):
        assert closed_neighborhood(families.star(5), [4]) == set(range(5))
        assert len(closed_neighborhood(families.petersen(), [0])) == 4
        assert closed_neighborhood(families.cycle(5), [0, 2]) == {0, 1, 2, 3, 4}

    def test_connected_examples(self):
        assert is_connected(K3)
        assert not is_connected(families.empty(2))
        assert is_connected(families.gear(4))

    def test_components(self):
        g = Graph.from_edges(5, [(0, 1), (3, 4)])
        assert components(g) == [[0, 1], [2], [3, 4]]

    def test_girth_and_radius(self):
        assert girth(families.petersen()) == 5
        assert girth(families.path(4)) == INF
        assert radius(families.path(7)) == 3

    def test_tree_and_chordal(self):
        assert is_tree(families.spider([2, 3]))
        assert not is_tree(families.cycle(4))
        assert is_chordal(families.fan(6))
        assert not is_chordal(families.cycle(4))

    def test_adjacency_is_symmetric_and_loop_free(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])
        g = families.gear(3)
        assert all(v not in g.adj[v] and all(v in g.adj[w] for w in g.adj[v]) for v in g.vertices)


class TestDismantlable:
    def test_examples(self):
        assert is_dismantlable(families.path(5))
        assert not is_dismantlable(families.petersen())
        assert not is_dismantlable(families.cycle(4))

    def test_disconnected_is_false(self):
        assert not is_dismantlable(families.empty(2))
        assert is_dismantlable(families.empty(1))

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            is_dismantlable(families.empty(0))

    def test_matches_capture_time(self, connected_upto6):
        for g in connected_upto6:
            assert is_dismantlable(g) == (capture_time(g, 1, bounds=False) != INF), emit_graph6(g)
