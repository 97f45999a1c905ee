import random

import pytest
from conftest import G, random_graph, signed_graphs
from hypothesis import given, settings

from signedcover import (
    EdgeListError,
    InvalidArgument,
    SignedGraph,
    bridges,
    components,
    cut_vertices,
    degree,
    format_edge_list,
    is_connected,
    is_eulerian,
    is_two_connected,
    is_two_edge_connected,
    loops,
    parse_edge_list,
)


def _parts(g):
    return sorted(sorted(p) for p in components(g).parts)


def _vertex_groups(g, vertices, edges):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for e in edges:
        u, v = g.ends(e)
        if u in parent and v in parent:
            parent[find(u)] = find(v)
    return len({find(v) for v in vertices})


class TestDegreeAndLoops:
    def test_loop_counts_twice(self):
        assert degree(G((0, 0, "+")), 0) == 2
        assert degree(G((0, 0, "+"), (0, 0, "-")), 0) == 4

    def test_triangle_vertex(self, triangle):
        assert degree(triangle, 1) == 2

    def test_unknown_vertex(self, triangle):
        with pytest.raises(InvalidArgument):
            degree(triangle, 9)

    def test_loops(self, triangle, figure_eight, bowtie):
        assert loops(triangle) == frozenset()
        assert loops(figure_eight) == {0, 1}
        assert loops(bowtie) == frozenset()

    @given(signed_graphs())
    def test_handshake(self, g):
        assert sum(degree(g, v) for v in g.vertices) == 2 * g.num_edges()


class TestEulerianAndComponents:
    def test_eulerian_examples(self, figure_eight, triangle):
        assert is_eulerian(figure_eight)
        assert is_eulerian(triangle)
        assert not is_eulerian(G((0, 1, "+"), (1, 2, "+")))
        assert not is_eulerian(G((0, 1, "+"), (1, 2, "+"), (0, 2, "+"), (3, 4, "+"), (4, 5, "+"), (3, 5, "+")))

    def test_edgeless_is_not_eulerian(self):
        assert not is_eulerian(SignedGraph([0], {}))

    def test_figure_eight_minus_loop(self, figure_eight):
        c = components(figure_eight.remove_edges([0]))
        assert [set(p) for p in c.parts] == [{1}]
        assert c.connected_up_to_isolated

    def test_bowtie_minus_triangle(self, bowtie):
        c = components(bowtie.remove_edges([0, 1, 2]))
        assert c.connected_up_to_isolated
        assert set(c.isolated) == {1, 2}

    def test_two_triangles(self):
        g = G((0, 1, "+"), (1, 2, "+"), (0, 2, "+"), (3, 4, "+"), (4, 5, "+"), (3, 5, "+"))
        assert _parts(g) == [[0, 1, 2], [3, 4, 5]]
        assert not components(g).connected_up_to_isolated

    @given(signed_graphs(max_vertices=6, max_edges=8))
    def test_parts_partition_edges(self, g):
        c = components(g)
        seen = [e for p in c.parts for e in p]
        assert sorted(seen) == list(g.edges)
        assert len(c.parts) + len(c.isolated) == _vertex_groups(g, g.vertices, g.edges)


class TestConnectivity:
    def test_examples(self, triangle, bowtie):
        assert is_two_connected(triangle) and not bridges(triangle)
        assert not is_two_connected(bowtie) and not bridges(bowtie)
        assert cut_vertices(bowtie) == {0}
        assert bridges(G((0, 1, "+"))) == {0}

    def test_small_conventions(self):
        assert not is_two_connected(G((0, 0, "+")))
        assert not is_two_connected(G((0, 1, "+")))
        assert is_two_connected(G((0, 1, "+"), (0, 1, "-")))

    @settings(max_examples=200)
    @given(signed_graphs(max_vertices=6, max_edges=9))
    def test_bridges_match_deletion(self, g):
        base = _vertex_groups(g, g.vertices, g.edges)
        expected = {e for e in g.edges if _vertex_groups(g, g.vertices, set(g.edges) - {e}) > base}
        assert bridges(g) == expected
        assert is_two_edge_connected(g) == (is_connected(g) and not expected)

    @settings(max_examples=200)
    @given(signed_graphs(max_vertices=6, max_edges=9))
    def test_cut_vertices_match_deletion(self, g):
        h = g.without_loops()
        if not is_connected(h):
            return
        expected = set()
        for v in h.vertices:
            rest = [x for x in h.vertices if x != v]
            if rest and _vertex_groups(h, rest, [e for e in h.edges if v not in h.ends(e)]) > 1:
                expected.add(v)
        assert cut_vertices(h) == expected
        if h.num_vertices() >= 3:
            assert is_two_connected(g) == (not expected)


class TestEdgeList:
    def test_round_trip_random(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 6), rng.randint(0, 9))
            assert parse_edge_list(format_edge_list(g, comment="x")) == g

    def test_names_and_comments(self):
        g = parse_edge_list("# header\nv a\ne a b -  # trailing\ne b b +\n")
        assert g.num_vertices() == 2 and g.names[0] == "a"
        assert g.sign(0) == -1 and g.is_loop(1)

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("e 0 1 +\ne 1 2 x\n", 2, 7),
            ("e 0 1\n", 1, 6),
            ("q 1\n", 1, 1),
            ("v\n", 1, 1),
        ],
    )
    def test_errors_carry_position(self, text, line, column):
        with pytest.raises(EdgeListError) as info:
            parse_edge_list(text)
        assert info.value.line == line
        assert info.value.column == column
        assert f"line {line}, column {column}" in str(info.value)

    def test_edge_subgraph_and_equality(self, bowtie):
        sub = bowtie.edge_subgraph([0, 1, 2])
        assert set(sub.vertices) == {0, 1, 2}
        assert sub.edges == (0, 1, 2)
        assert bowtie.with_negative([0]) != bowtie
