"""Circuit decompositions of even signed graphs and constructive helpers.

Covers: a single decomposition (Hierholzer-style walk split at repeated
vertices), exhaustive enumeration of decompositions, decompositions optimal
for (number of unbalanced circuits, number of circuits), the intersection
graph of a decomposition, non-separating disjoint circuits, removable edges
of 2-connected graphs, and splitting into two flow-admissible Eulerian
halves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .circuits import Circuit, enumerate_circuits, is_balanced, is_flow_admissible
from .errors import InvalidArgument, ResourceLimit
from .graph import (
    EdgeId,
    EdgeSet,
    SignedGraph,
    VertexId,
    components,
    degree,
    is_connected,
    is_eulerian,
    is_two_connected,
    max_degree,
)

MAX_DECOMPOSITION_EDGES = 14
MAX_CYCLE_RANK = 16


@dataclass(frozen=True)
class CircuitDecomposition:
    circuits: tuple[Circuit, ...]
    unbalanced: int
    certified: bool = True

    @property
    def size(self) -> int:
        return len(self.circuits)

    def key(self) -> tuple[int, int]:
        """Optimality key: more unbalanced circuits first, then more circuits."""
        return (self.unbalanced, len(self.circuits))

    def edge_lists(self) -> list[list[EdgeId]]:
        return [sorted(c.edges) for c in self.circuits]

    def signature(self) -> tuple[tuple[EdgeId, ...], ...]:
        return tuple(sorted(tuple(sorted(c.edges)) for c in self.circuits))

    def is_partition_of(self, g: SignedGraph) -> bool:
        seen: set[EdgeId] = set()
        for c in self.circuits:
            if seen & c.edge_set:
                return False
            seen |= c.edge_set
        return seen == set(g.edges)


def _make(g: SignedGraph, circuits: Iterable[Circuit], certified: bool = True) -> CircuitDecomposition:
    cs = tuple(sorted(circuits, key=Circuit.sort_key))
    return CircuitDecomposition(cs, sum(1 for c in cs if not is_balanced(g, c)), certified)


def _require_even(g: SignedGraph) -> None:
    odd = [v for v in g.vertices if degree(g, v) % 2]
    if odd:
        raise InvalidArgument(f"odd-degree vertices {odd}; only even graphs decompose into circuits")


def one_decomposition(g: SignedGraph) -> CircuitDecomposition:
    """Some partition of E(g) into circuits."""
    _require_even(g)
    unused = {v: list(reversed(g.incident(v))) for v in g.vertices}
    used: set[EdgeId] = set()
    circuits: list[Circuit] = []

    def next_edge(v: VertexId) -> Optional[EdgeId]:
        stack = unused[v]
        while stack and stack[-1] in used:
            stack.pop()
        return stack[-1] if stack else None

    for start in g.vertices:
        while next_edge(start) is not None:
            # walk from start; close a circuit whenever a vertex repeats
            path_v = [start]
            path_e: list[EdgeId] = []
            pos = {start: 0}
            cur = start
            while True:
                e = next_edge(cur)
                if e is None:
                    break
                used.add(e)
                nxt = g.other_end(e, cur)
                path_e.append(e)
                if nxt in pos:
                    i = pos[nxt]
                    circuits.append(Circuit(tuple(path_e[i:]), tuple(path_v[i:])))
                    for w in path_v[i + 1:]:
                        del pos[w]
                    del path_v[i + 1:]
                    del path_e[i:]
                else:
                    pos[nxt] = len(path_v)
                    path_v.append(nxt)
                cur = nxt
    return _make(g, circuits)


def iter_decompositions(g: SignedGraph, circuits: Optional[list[Circuit]] = None):
    """Yield every circuit decomposition once, as lists of circuit indices.

    Peels a circuit through the least uncovered edge at each step; the
    decomposition fixes which circuit that is, so nothing repeats.
    """
    cs = enumerate_circuits(g) if circuits is None else circuits
    bit = {e: 1 << i for i, e in enumerate(g.edges)}
    masks = [sum(bit[e] for e in c.edges) for c in cs]
    full = (1 << g.num_edges()) - 1
    # circuit indices through each edge, keyed by the edge's bit
    through: dict[int, list[int]] = {}
    for i, m in enumerate(masks):
        rest = m
        while rest:
            b = rest & -rest
            through.setdefault(b, []).append(i)
            rest ^= b
    chosen: list[int] = []

    def rec(remaining: int):
        if not remaining:
            yield list(chosen)
            return
        low = remaining & -remaining
        for i in through.get(low, ()):
            m = masks[i]
            if m & remaining == m:
                chosen.append(i)
                yield from rec(remaining ^ m)
                chosen.pop()

    yield from rec(full)


def all_decompositions(g: SignedGraph, max_edges: int = MAX_DECOMPOSITION_EDGES) -> list[CircuitDecomposition]:
    _require_even(g)
    if g.num_edges() > max_edges:
        raise ResourceLimit(f"{g.num_edges()} edges exceeds the exhaustive limit of {max_edges}")
    cs = enumerate_circuits(g)
    out = [_make(g, [cs[i] for i in idx]) for idx in iter_decompositions(g, cs)]
    out.sort(key=CircuitDecomposition.signature)
    return out


def optimal_decompositions(g: SignedGraph, max_edges: int = MAX_DECOMPOSITION_EDGES) -> list[CircuitDecomposition]:
    """Every decomposition attaining the best (unbalanced, size) key."""
    _require_even(g)
    if g.num_edges() > max_edges:
        raise ResourceLimit(f"{g.num_edges()} edges exceeds the exhaustive limit of {max_edges}")
    cs = enumerate_circuits(g)
    unbalanced = [0 if is_balanced(g, c) else 1 for c in cs]
    best_key = None
    best: list[list[int]] = []
    for idx in iter_decompositions(g, cs):
        key = (sum(unbalanced[i] for i in idx), len(idx))
        if best_key is None or key > best_key:
            best_key, best = key, [idx]
        elif key == best_key:
            best.append(idx)
    out = [_make(g, [cs[i] for i in idx]) for idx in best]
    out.sort(key=CircuitDecomposition.signature)
    return out


def greedy_decomposition(g: SignedGraph) -> CircuitDecomposition:
    """Peel unbalanced circuits first, shortest first; not certified optimal."""
    _require_even(g)
    remaining = g
    picked: list[Circuit] = []
    while remaining.num_edges():
        cs = enumerate_circuits(remaining)
        ub = [c for c in cs if not is_balanced(g, c)]
        c = (ub or cs)[0]
        picked.append(c)
        remaining = remaining.remove_edges(c.edges)
    return _make(g, picked, certified=False)


def optimal_decomposition(
    g: SignedGraph, max_edges: int = MAX_DECOMPOSITION_EDGES, allow_greedy: bool = False
) -> CircuitDecomposition:
    """The lexicographically least decomposition among the optimal ones.

    Above ``max_edges`` this raises ResourceLimit unless ``allow_greedy``,
    in which case the result has ``certified=False``.
    """
    if g.num_edges() > max_edges:
        if allow_greedy:
            return greedy_decomposition(g)
        raise ResourceLimit(f"{g.num_edges()} edges exceeds the exhaustive limit of {max_edges}")
    return optimal_decompositions(g, max_edges)[0]


# -- intersection graph --------------------------------------------------------


@dataclass(frozen=True)
class IntersectionGraph:
    """Circuits of a decomposition, adjacent when they share a vertex.

    ``shared[(i, j)]`` (``i < j``) is the number of shared vertices and is
    present only for adjacent pairs.
    """

    circuits: tuple[Circuit, ...]
    balanced: tuple[bool, ...]
    shared: dict[tuple[int, int], int]

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.shared

    def neighbors(self, i: int) -> list[int]:
        return sorted(j for a, b in self.shared for j in ((b,) if a == i else (a,) if b == i else ()))

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.shared)

    def is_connected(self) -> bool:
        n = len(self.circuits)
        if n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in self.neighbors(i):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n


def intersection_graph(g: SignedGraph, d: CircuitDecomposition) -> IntersectionGraph:
    cs = d.circuits
    shared = {}
    for i, j in combinations(range(len(cs)), 2):
        k = len(cs[i].vertex_set & cs[j].vertex_set)
        if k:
            shared[(i, j)] = k
    return IntersectionGraph(cs, tuple(is_balanced(g, c) for c in cs), shared)


# -- constructive helpers --------------------------------------------------------


def _as_circuit(g: SignedGraph, c) -> Circuit:
    if isinstance(c, Circuit):
        es = c.edge_set
    else:
        es = frozenset(c)
    g.check_edges(es)
    for cand in enumerate_circuits(g.edge_subgraph(es)):
        if cand.edge_set == es:
            return cand
    raise InvalidArgument(f"edges {sorted(es)} do not form a circuit")


def nonseparating_disjoint_circuit(g: SignedGraph, c) -> Circuit:
    """A circuit ``C'`` edge-disjoint from ``c`` with ``g \\ C'`` connected up to isolated vertices.

    Decomposes ``g`` with ``c`` as a member, takes a BFS spanning tree of the
    intersection graph rooted at ``c``, and returns a leaf other than ``c``.
    """
    if not is_eulerian(g):
        raise InvalidArgument("graph is not Eulerian")
    if max_degree(g) < 4:
        raise InvalidArgument("maximum degree is below 4")
    circ = _as_circuit(g, c)
    rest = one_decomposition(g.remove_edges(circ.edges))
    d = _make(g, (circ,) + rest.circuits)
    h = intersection_graph(g, d)
    root = d.circuits.index(circ)
    parent = {root: None}
    order = [root]
    for i in order:
        for j in h.neighbors(i):
            if j not in parent:
                parent[j] = i
                order.append(j)
    children = {i: 0 for i in order}
    for j, p in parent.items():
        if p is not None:
            children[p] += 1
    leaves = [i for i in order if i != root and children[i] == 0]
    leaves.sort(key=lambda i: d.circuits[i].sort_key())
    found = d.circuits[leaves[0]]
    if not components(g.remove_edges(found.edges)).connected_up_to_isolated:
        raise AssertionError("leaf circuit separated the graph")
    return found


def removable_edge(g: SignedGraph, v: VertexId) -> EdgeId:
    """An edge ``e`` avoiding ``v`` such that ``g - V(e)`` is connected.

    Takes a longest circuit through ``v`` and one of its edges not incident
    with ``v``; maximality of the circuit guarantees the remainder stays
    connected.
    """
    if not g.has_vertex(v):
        raise InvalidArgument(f"unknown vertex {v}")
    if g.num_vertices() < 3 or not is_two_connected(g):
        raise InvalidArgument("graph must be 2-connected with at least 3 vertices")
    through = [c for c in enumerate_circuits(g) if v in c.vertex_set]
    longest = max(len(c) for c in through)
    best = min((c for c in through if len(c) == longest), key=Circuit.sort_key)
    for e in sorted(best.edges):
        if v not in g.ends(e):
            if not is_connected(g.remove_vertices(g.ends(e))):
                raise AssertionError("edge of a longest circuit left a disconnected remainder")
            return e
    raise AssertionError("longest circuit has no edge avoiding v")


def _is_flow_admissible_eulerian(g: SignedGraph, part: EdgeSet) -> bool:
    sub = g.edge_subgraph(part)
    return is_eulerian(sub) and is_flow_admissible(sub)


def cover_decompose(g: SignedGraph) -> Optional[tuple[EdgeSet, EdgeSet]]:
    """Split E(g) into two non-empty flow-admissible Eulerian parts, or None.

    Candidates are the even subgraphs containing the least edge, generated
    from a basis of fundamental circuits of a spanning forest.
    """
    _require_even(g)
    edges = g.edges
    if len(edges) < 2:
        return None
    # fundamental circuits relative to a BFS spanning forest
    parent_edge: dict[VertexId, Optional[EdgeId]] = {}
    parent: dict[VertexId, Optional[VertexId]] = {}
    depth: dict[VertexId, int] = {}
    tree: set[EdgeId] = set()
    for root in g.vertices:
        if root in parent:
            continue
        parent[root], parent_edge[root], depth[root] = None, None, 0
        queue = [root]
        for x in queue:
            for e in g.incident(x):
                y = g.other_end(e, x)
                if y not in parent:
                    parent[y], parent_edge[y], depth[y] = x, e, depth[x] + 1
                    tree.add(e)
                    queue.append(y)
    bit = {e: 1 << i for i, e in enumerate(edges)}
    basis = []
    for e in edges:
        if e in tree:
            continue
        u, v = g.ends(e)
        mask = bit[e]
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            mask ^= bit[parent_edge[u]]
            u = parent[u]
        basis.append(mask)
    if len(basis) > MAX_CYCLE_RANK:
        raise ResourceLimit(f"cycle rank {len(basis)} is too large for exhaustive splitting")
    full = (1 << len(edges)) - 1
    first = 1
    candidates = []
    for combo in range(1, 1 << len(basis)):
        m = 0
        rest = combo
        i = 0
        while rest:
            if rest & 1:
                m ^= basis[i]
            rest >>= 1
            i += 1
        if m & first and m != full:
            candidates.append(m)
    candidates.sort(key=lambda m: (bin(m).count("1"), [e for e in edges if m & bit[e]]))
    for m in candidates:
        part = frozenset(e for e in edges if m & bit[e])
        other = frozenset(edges) - part
        if _is_flow_admissible_eulerian(g, part) and _is_flow_admissible_eulerian(g, other):
            return part, other
    return None


def is_cover_decomposable(g: SignedGraph) -> bool:
    return cover_decompose(g) is not None
