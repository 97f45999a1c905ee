"""Balance, switching and signature normalization."""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterable, Optional

from .errors import InvalidArgument, ResourceLimit
from .graph import EdgeId, EdgeSet, SignedGraph, VertexId, degree, is_connected

SwitchSet = frozenset  # frozenset[VertexId]

MAX_NORMALIZE_VERTICES = 20


def negative_count(g: SignedGraph, edges: Iterable[EdgeId]) -> int:
    return sum(1 for e in edges if g.sign(e) < 0)


def is_circuit_edges(g: SignedGraph, edges: Iterable[EdgeId]) -> bool:
    """Whether ``edges`` form a connected 2-regular subgraph."""
    es = g.check_edges(edges)
    if not es:
        return False
    sub = g.edge_subgraph(es)
    return is_connected(sub) and all(degree(sub, v) == 2 for v in sub.vertices)


def is_balanced_circuit(g: SignedGraph, c: Iterable[EdgeId]) -> bool:
    es = frozenset(c)
    if not is_circuit_edges(g, es):
        raise InvalidArgument(f"edges {sorted(es)} do not form a circuit")
    return negative_count(g, es) % 2 == 0


def _potentials(g: SignedGraph, edges: EdgeSet) -> Optional[dict[VertexId, int]]:
    """Vertex signs with sign(uv) == s(u)*s(v) on every edge, or None."""
    adj: dict[VertexId, list[tuple[VertexId, int]]] = {}
    for e in edges:
        u, v = g.ends(e)
        if u == v:
            if g.sign(e) < 0:
                return None
            adj.setdefault(u, [])
            continue
        adj.setdefault(u, []).append((v, g.sign(e)))
        adj.setdefault(v, []).append((u, g.sign(e)))
    pot: dict[VertexId, int] = {}
    for root in sorted(adj):
        if root in pot:
            continue
        pot[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, s in adj[x]:
                want = pot[x] * s
                if y not in pot:
                    pot[y] = want
                    queue.append(y)
                elif pot[y] != want:
                    return None
    return pot


def balancing_switch_set(g: SignedGraph, h: Iterable[EdgeId]) -> Optional[SwitchSet]:
    """Vertices to switch so every edge of ``h`` becomes positive.

    Returns None exactly when ``h`` contains an unbalanced circuit.
    """
    pot = _potentials(g, g.check_edges(h))
    if pot is None:
        return None
    return frozenset(v for v, p in pot.items() if p < 0)


def is_balanced_subgraph(g: SignedGraph, h: Iterable[EdgeId]) -> bool:
    return _potentials(g, g.check_edges(h)) is not None


def is_balanced(g: SignedGraph) -> bool:
    return is_balanced_subgraph(g, g.edges)


def switch_at(g: SignedGraph, s: Iterable[VertexId]) -> SignedGraph:
    """Flip the sign of every non-loop edge with exactly one end in ``s``."""
    sset = frozenset(s)
    for v in sset:
        if not g.has_vertex(v):
            raise InvalidArgument(f"unknown vertex {v}")
    flips = {}
    for e in g.edges:
        u, v = g.ends(e)
        if (u in sset) != (v in sset):
            flips[e] = -g.sign(e)
    return g.with_signs(flips) if flips else g


def normalize_signature(g: SignedGraph) -> SignedGraph:
    """A switching-equivalent graph with as few negative edges as possible.

    Exhaustive over all switch sets that leave the least vertex alone, so the
    cost is ``2**(|V|-1)``. Ties go to the lexicographically least sorted
    negative edge list.
    """
    verts = g.vertices
    if len(verts) > MAX_NORMALIZE_VERTICES:
        raise ResourceLimit(f"normalize_signature is exhaustive; {len(verts)} vertices is too many")
    if not verts:
        return g
    best_key = None
    best_set: frozenset = frozenset()
    rest = verts[1:]
    for bits in product((False, True), repeat=len(rest)):
        s = {v for v, b in zip(rest, bits) if b}
        neg = sorted(
            e for e in g.edges
            if (g.sign(e) < 0) != ((g.ends(e)[0] in s) != (g.ends(e)[1] in s))
        )
        key = (len(neg), neg)
        if best_key is None or key < best_key:
            best_key = key
            best_set = frozenset(s)
    return switch_at(g, best_set)
