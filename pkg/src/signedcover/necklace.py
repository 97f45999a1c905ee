"""Necklaces: signed subdivisions of a doubled k-cycle.

Take the cycle of length k, double every edge, subdivide freely. The
circuits through exactly two degree-4 vertices are the small circuits; the
others are long. The graph is a necklace when every small circuit is
balanced and every long circuit is unbalanced. Equivalently, up to
switching, exactly two edges are negative and they lie on the two parallel
threads of one small circuit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidArgument
from .graph import EdgeId, SignedGraph, VertexId, degree, is_connected
from .signing import balancing_switch_set, negative_count


@dataclass(frozen=True)
class SmallCircuit:
    ends: tuple[VertexId, VertexId]
    threads: tuple[tuple[EdgeId, ...], tuple[EdgeId, ...]]

    @property
    def edges(self) -> frozenset:
        return frozenset(self.threads[0]) | frozenset(self.threads[1])


@dataclass(frozen=True)
class NecklaceStructure:
    """A recognized necklace.

    ``hubs`` are the degree-4 vertices in cyclic order; ``small_circuits[i]``
    joins ``hubs[i]`` and ``hubs[i+1]``. ``profile`` lists the two thread
    lengths of each small circuit, flattened. ``negative_pair`` is a pair of
    edges that, after switching at ``switch_set``, are the only negative
    edges of the graph.
    """

    length: int
    hubs: tuple[VertexId, ...]
    small_circuits: tuple[SmallCircuit, ...]
    profile: tuple[int, ...]
    negative_pair: tuple[EdgeId, EdgeId]
    negative_index: int
    switch_set: frozenset


def _threads(g: SignedGraph, hubs: set[VertexId]):
    """Maximal paths between hubs through degree-2 vertices, as (a, b, edges)."""
    seen: set[EdgeId] = set()
    out = []
    for h in sorted(hubs):
        for e in g.incident(h):
            if e in seen:
                continue
            edges = [e]
            seen.add(e)
            prev, cur = e, g.other_end(e, h)
            while cur not in hubs:
                nxt = [f for f in g.incident(cur) if f != prev]
                if len(nxt) != 1:
                    return None
                prev = nxt[0]
                edges.append(prev)
                seen.add(prev)
                cur = g.other_end(prev, cur)
            out.append((h, cur, tuple(edges)))
    if len(seen) != g.num_edges():
        return None
    return out


def detect_necklace(g: SignedGraph) -> Optional[NecklaceStructure]:
    """Recognize a necklace, or return None.

    Shape first (subdivision of a doubled cycle of length at least 3), then
    signs through circuit parities, so the answer is invariant under
    switching.
    """
    if g.num_edges() == 0 or not is_connected(g):
        return None
    if any(g.is_loop(e) for e in g.edges):
        return None
    deg = {v: degree(g, v) for v in g.vertices}
    if any(d not in (2, 4) for d in deg.values()):
        return None
    hubs = {v for v, d in deg.items() if d == 4}
    k = len(hubs)
    if k < 3:
        return None
    threads = _threads(g, hubs)
    if threads is None:
        return None
    pairs: dict[tuple[VertexId, VertexId], list[tuple[EdgeId, ...]]] = {}
    for a, b, edges in threads:
        if a == b:
            return None
        key = (min(a, b), max(a, b))
        # orient every thread from the smaller hub
        if a > b:
            edges = tuple(reversed(edges))
        pairs.setdefault(key, []).append(edges)
    if len(pairs) != k or any(len(ts) != 2 for ts in pairs.values()):
        return None
    nbrs: dict[VertexId, list[VertexId]] = {h: [] for h in hubs}
    for a, b in pairs:
        nbrs[a].append(b)
        nbrs[b].append(a)
    if any(len(ns) != 2 for ns in nbrs.values()):
        return None
    start = min(hubs)
    order = [start, min(nbrs[start])]
    while len(order) < k:
        a, b = nbrs[order[-1]]
        nxt = a if a != order[-2] else b
        if nxt == start:
            return None
        order.append(nxt)
    if start not in nbrs[order[-1]]:
        return None

    smalls = []
    for i in range(k):
        u, v = order[i], order[(i + 1) % k]
        ts = sorted(pairs[(min(u, v), max(u, v))], key=lambda t: sorted(t))
        smalls.append(SmallCircuit((u, v), (ts[0], ts[1])))

    # parities: small circuits balanced, long circuits unbalanced
    parity = []
    for sc in smalls:
        p0 = negative_count(g, sc.threads[0]) % 2
        p1 = negative_count(g, sc.threads[1]) % 2
        if p0 != p1:
            return None
        parity.append(p0)
    if sum(parity) % 2 != 1:
        return None

    neg = g.negative_edges()
    literal = None
    if len(neg) == 2:
        for i, sc in enumerate(smalls):
            a, b = sorted(neg)
            ta, tb = set(sc.threads[0]), set(sc.threads[1])
            if (a in ta and b in tb) or (a in tb and b in ta):
                literal = (i, (a, b))
                break
    if literal is not None:
        index, pair = literal
        switch = frozenset()
    else:
        index = 0
        pair = tuple(sorted((smalls[0].threads[0][0], smalls[0].threads[1][0])))
        target = {e: (-1 if e in pair else 1) for e in g.edges}
        # switching g onto the target labelling == balancing the product signs
        product = g.with_signs({e: g.sign(e) * target[e] for e in g.edges})
        switch = balancing_switch_set(product, product.edges)
        if switch is None:
            raise AssertionError("parity check passed but no switching reaches the target")
    profile = tuple(len(t) for sc in smalls for t in sc.threads)
    return NecklaceStructure(k, tuple(order), tuple(smalls), profile, pair, index, switch)


def is_necklace(g: SignedGraph) -> bool:
    return detect_necklace(g) is not None


def build_necklace(k: int, path_lengths: Optional[Sequence[int]] = None, negative_index: int = 0) -> SignedGraph:
    """Signed subdivision of the doubled k-cycle.

    ``path_lengths[2*i]`` and ``path_lengths[2*i + 1]`` are the lengths of the
    two threads between hub ``i`` and hub ``i+1`` (hubs are vertices
    ``0..k-1``). The first edge of each thread of small circuit
    ``negative_index`` is negative; everything else is positive.
    """
    if k < 3:
        raise InvalidArgument("a necklace needs k >= 3")
    lengths = [1] * (2 * k) if path_lengths is None else list(path_lengths)
    if len(lengths) != 2 * k:
        raise InvalidArgument(f"expected {2 * k} path lengths, got {len(lengths)}")
    if any(int(x) != x or x < 1 for x in lengths):
        raise InvalidArgument("path lengths must be positive integers")
    if not 0 <= negative_index < k:
        raise InvalidArgument(f"negative_index must lie in [0, {k})")
    edges = []
    next_vertex = k
    negatives = []
    for i in range(k):
        u, v = i, (i + 1) % k
        for t in range(2):
            length = lengths[2 * i + t]
            chain = [u] + list(range(next_vertex, next_vertex + length - 1)) + [v]
            next_vertex += length - 1
            for j in range(length):
                if i == negative_index and j == 0:
                    negatives.append(len(edges))
                edges.append((chain[j], chain[j + 1]))
    g = SignedGraph.from_edges([(a, b, -1 if idx in negatives else 1) for idx, (a, b) in enumerate(edges)])
    # one edge off each thread never disconnects: both hubs stay joined around the cycle
    if not is_connected(g.remove_edges(negatives)):
        raise InvalidArgument("negative pair would disconnect the necklace")
    return g
