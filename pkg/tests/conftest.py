import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from signedcover import SignedGraph, build_necklace  # noqa: E402


def G(*edges, vertices=()):
    """Shorthand: G((0, 1, '+'), (1, 1, '-'))."""
    return SignedGraph.from_edges(
        [(u, v, -1 if s in ("-", -1) else 1) for u, v, s in edges], vertices=vertices
    )


def random_graph(rng: random.Random, n: int, m: int, loop_rate: float = 0.2) -> SignedGraph:
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = u if rng.random() < loop_rate else rng.randrange(n)
        edges.append((u, v, rng.choice((1, -1))))
    return SignedGraph.from_edges(edges, vertices=range(n))


@st.composite
def signed_graphs(draw, max_vertices=5, max_edges=8, min_edges=0):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(min_edges, max_edges))
    vert = st.integers(0, n - 1)
    edges = draw(st.lists(st.tuples(vert, vert, st.sampled_from((1, -1))), min_size=m, max_size=m))
    return SignedGraph.from_edges(edges, vertices=range(n))


@st.composite
def switch_sets(draw, g: SignedGraph):
    return frozenset(draw(st.sets(st.sampled_from(list(g.vertices))))) if g.vertices else frozenset()


@pytest.fixture
def figure_eight():
    return G((0, 0, "-"), (0, 0, "-"))


@pytest.fixture
def triangle():
    return G((0, 1, "+"), (1, 2, "+"), (0, 2, "+"))


@pytest.fixture
def bowtie():
    return G((0, 1, "+"), (1, 2, "+"), (0, 2, "+"), (0, 3, "+"), (3, 4, "+"), (0, 4, "+"))


@pytest.fixture
def necklace3():
    return build_necklace(3)
