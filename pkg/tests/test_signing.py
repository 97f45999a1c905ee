from itertools import chain, combinations

import pytest
from conftest import G, signed_graphs
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import graph_circuits

from signedcover import (
    InvalidArgument,
    balancing_switch_set,
    enumerate_circuits,
    is_balanced,
    is_balanced_circuit,
    is_balanced_subgraph,
    negative_count,
    normalize_signature,
    switch_at,
)


def _subsets(xs):
    xs = list(xs)
    return chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))


def _graph_and_set(max_vertices=5, max_edges=8):
    return signed_graphs(max_vertices, max_edges).flatmap(
        lambda g: st.tuples(st.just(g), st.sets(st.sampled_from(list(g.vertices))))
    )


class TestCircuitBalance:
    def test_examples(self, triangle):
        assert is_balanced_circuit(triangle, [0, 1, 2])
        assert not is_balanced_circuit(G((0, 0, "-")), [0])
        assert is_balanced_circuit(G((0, 1, "-"), (0, 1, "-")), [0, 1])

    def test_rejects_non_circuit(self, bowtie):
        with pytest.raises(InvalidArgument):
            is_balanced_circuit(bowtie, [0, 1])
        with pytest.raises(InvalidArgument):
            is_balanced_circuit(bowtie, list(bowtie.edges))


class TestSubgraphBalance:
    def test_examples(self, triangle):
        assert is_balanced_subgraph(triangle, triangle.edges)
        assert not is_balanced_subgraph(G((0, 1, "+"), (1, 1, "-")), [0, 1])
        assert is_balanced_subgraph(G((0, 1, "-"), (1, 2, "-"), (0, 2, "+")), [0, 1, 2])

    @settings(max_examples=150)
    @given(signed_graphs(max_vertices=4, max_edges=7))
    def test_matches_circuit_parities(self, g):
        circuits = graph_circuits(g)
        for h in _subsets(g.edges):
            hs = set(h)
            expected = all(negative_count(g, c) % 2 == 0 for c in circuits if c <= hs)
            assert is_balanced_subgraph(g, h) == expected


class TestSwitching:
    def test_figure_eight_unchanged(self, figure_eight):
        assert switch_at(figure_eight, {0}) == figure_eight

    def test_triangle_example(self):
        g = G((0, 1, "-"), (1, 2, "-"), (0, 2, "+"))
        assert not switch_at(g, {1}).negative_edges()
        assert switch_at(g, set()) == g

    @given(_graph_and_set())
    def test_involution(self, gs):
        g, s = gs
        assert switch_at(switch_at(g, s), s) == g

    @given(_graph_and_set(), st.data())
    def test_composition_is_symmetric_difference(self, gs, data):
        g, s = gs
        t = data.draw(st.sets(st.sampled_from(list(g.vertices))))
        assert switch_at(switch_at(g, s), t) == switch_at(g, set(s) ^ set(t))

    @given(_graph_and_set())
    def test_circuit_parity_invariant(self, gs):
        g, s = gs
        h = switch_at(g, s)
        for c in enumerate_circuits(g):
            assert negative_count(g, c.edges) % 2 == negative_count(h, c.edges) % 2

    def test_complement_gives_same_signature(self, bowtie):
        g = bowtie.with_negative([0, 4])
        assert switch_at(g, {0, 1}) == switch_at(g, set(g.vertices) - {0, 1})


class TestBalancingSwitchSet:
    def test_examples(self, triangle):
        s = balancing_switch_set(triangle, triangle.edges)
        assert not switch_at(triangle, s).negative_edges()
        g = G((0, 1, "-"), (1, 2, "-"), (0, 2, "+"))
        assert balancing_switch_set(g, g.edges) in ({1}, {0, 2})
        assert balancing_switch_set(G((0, 1, "-"), (1, 2, "+"), (0, 2, "+")), [0, 1, 2]) is None

    @settings(max_examples=150)
    @given(signed_graphs(max_vertices=5, max_edges=7), st.data())
    def test_agrees_with_brute_force(self, g, data):
        h = data.draw(st.sets(st.sampled_from(list(g.edges)))) if g.edges else set()
        exists = any(
            negative_count(switch_at(g, s), h) == 0 for s in _subsets(g.vertices)
        )
        s = balancing_switch_set(g, h)
        assert (s is not None) == exists
        if s is not None:
            assert negative_count(switch_at(g, s), h) == 0


class TestNormalize:
    def test_examples(self, bowtie, figure_eight):
        assert normalize_signature(bowtie.with_negative([0, 1])).negative_edges() == frozenset()
        assert len(normalize_signature(G((0, 1, "-"), (1, 2, "+"), (0, 2, "+"))).negative_edges()) == 1
        assert normalize_signature(figure_eight).negative_edges() == {0, 1}

    @settings(max_examples=100)
    @given(_graph_and_set(max_vertices=5, max_edges=7))
    def test_minimal_and_switching_invariant(self, gs):
        g, s = gs
        n = normalize_signature(g)
        assert n == normalize_signature(switch_at(g, s))
        best = min(len(switch_at(g, t).negative_edges()) for t in _subsets(g.vertices))
        assert len(n.negative_edges()) == best
        assert balancing_switch_set(g.with_signs({e: g.sign(e) * n.sign(e) for e in g.edges}), g.edges) is not None

    def test_balance_of_whole_graph(self, triangle):
        assert is_balanced(triangle)
        assert not is_balanced(triangle.with_negative([0]))
