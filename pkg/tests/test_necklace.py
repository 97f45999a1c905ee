from itertools import product

import pytest
from conftest import G
from hypothesis import given, settings
from hypothesis import strategies as st

from signedcover import (
    InvalidArgument,
    build_necklace,
    detect_necklace,
    enumerate_circuits,
    is_necklace,
    negative_count,
    switch_at,
)


def _definition_holds(g):
    """Small circuits (through exactly two hubs) balanced, long ones unbalanced."""
    hubs = {v for v in g.vertices if len(g.incident(v)) == 4}
    for c in enumerate_circuits(g):
        small = len(c.vertex_set & hubs) == 2
        if (negative_count(g, c.edges) % 2 == 0) != small:
            return False
    return True


class TestBuild:
    def test_smallest(self, necklace3):
        assert necklace3.num_vertices() == 3 and necklace3.num_edges() == 6
        assert necklace3.negative_edges() == {0, 1}
        assert necklace3.ends(0) == necklace3.ends(1) == (0, 1)

    def test_subdivided(self):
        g = build_necklace(3, [2, 1, 1, 1, 1, 1])
        assert g.num_vertices() == 4 and is_necklace(g)

    def test_k4(self):
        s = detect_necklace(build_necklace(4))
        assert s.length == 4 and len(s.small_circuits) == 4

    @pytest.mark.parametrize(
        "args",
        [(2,), (3, [1] * 5), (3, [1, 1, 1, 1, 1, 0]), (3, None, 3), (3, None, -1)],
    )
    def test_bad_arguments(self, args):
        with pytest.raises(InvalidArgument):
            build_necklace(*args)


class TestDetect:
    def test_negative_pair_literal(self, necklace3):
        s = detect_necklace(necklace3)
        assert s.length == 3 and s.negative_pair == (0, 1) and s.switch_set == frozenset()

    def test_all_positive(self, necklace3):
        assert detect_necklace(necklace3.with_signs({e: 1 for e in necklace3.edges})) is None

    def test_wrong_shapes(self, triangle, figure_eight):
        assert detect_necklace(triangle) is None
        assert detect_necklace(figure_eight) is None
        # doubled digon: only two hubs
        assert detect_necklace(G((0, 1, "-"), (0, 1, "-"), (0, 1, "+"), (0, 1, "+"))) is None
        # chord between hubs
        g = build_necklace(4)
        assert detect_necklace(G(*[(*g.ends(e), g.sign(e)) for e in g.edges], (0, 2, "+"))) is None

    def test_two_negative_pairs_is_not_a_necklace(self):
        g = build_necklace(3)
        assert detect_necklace(g.with_signs({e: -1 if e < 4 else 1 for e in g.edges})) is None

    def test_mismatched_thread_parity(self):
        g = build_necklace(3)
        assert detect_necklace(g.with_signs({e: -1 if e == 0 else 1 for e in g.edges})) is None

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_detection_matches_definition(self, k):
        base = build_necklace(k, [1, 2] * k)
        for signs in product((1, -1), repeat=base.num_edges()):
            if sum(s < 0 for s in signs) > 4:
                continue
            g = base.with_signs(dict(zip(base.edges, signs)))
            assert is_necklace(g) == _definition_holds(g)

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(3, 6).flatmap(
            lambda k: st.tuples(
                st.just(k),
                st.lists(st.integers(1, 3), min_size=2 * k, max_size=2 * k),
                st.integers(0, k - 1),
                st.sets(st.integers(0, 20)),
            )
        )
    )
    def test_round_trip_and_switching(self, params):
        k, lengths, neg, raw_switch = params
        g = build_necklace(k, lengths, neg)
        s = detect_necklace(g)
        assert s.length == k and s.profile == tuple(lengths)
        assert s.negative_index == neg
        h = switch_at(g, {v for v in raw_switch if g.has_vertex(v)})
        t = detect_necklace(h)
        assert t is not None and t.profile == s.profile
        normal = switch_at(h, t.switch_set)
        assert normal.negative_edges() == frozenset(t.negative_pair)
