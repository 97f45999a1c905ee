"""Circuits, barbells and signed circuits of a signed multigraph.

Signed circuits are the circuits of the signed-graphic matroid: balanced
circuits plus barbells. An edge lying in no signed circuit is a coloop.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .errors import InvalidArgument
from .graph import EdgeId, EdgeSet, SignedGraph, VertexId, degree, is_connected
from .signing import negative_count


@dataclass(frozen=True, eq=False)
class Circuit:
    """A circuit as a closed walk: ``edges[i]`` runs from ``vertices[i]`` to ``vertices[i+1]``."""

    edges: tuple[EdgeId, ...]
    vertices: tuple[VertexId, ...]

    @property
    def edge_set(self) -> EdgeSet:
        return frozenset(self.edges)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def sort_key(self):
        return (len(self.edges), tuple(sorted(self.edges)))

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return hash(self.edge_set)

    def __repr__(self) -> str:
        return f"Circuit{list(self.edges)}"


@dataclass(frozen=True, eq=False)
class Barbell:
    """Two unbalanced circuits that share one vertex, or are joined by a path.

    ``path`` is empty in the first case. Otherwise it meets the two circuits
    only at its ends: ``path_vertices[0]`` on ``circuit_a`` and
    ``path_vertices[-1]`` on ``circuit_b``.
    """

    circuit_a: Circuit
    circuit_b: Circuit
    path: tuple[EdgeId, ...] = ()
    path_vertices: tuple[VertexId, ...] = ()

    @property
    def edge_set(self) -> EdgeSet:
        return self.circuit_a.edge_set | self.circuit_b.edge_set | frozenset(self.path)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Barbell):
            return NotImplemented
        return self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return hash(self.edge_set)


@dataclass(frozen=True, eq=False)
class SignedCircuit:
    """A balanced circuit (``kind="circuit"``) or a barbell (``kind="barbell"``).

    ``shape`` carries the structure when known; members read back from a
    serialized certificate only have their edges until they are verified.
    """

    kind: str
    edges: EdgeSet
    shape: Optional[Union[Circuit, Barbell]] = None

    def __post_init__(self):
        if self.kind not in ("circuit", "barbell"):
            raise InvalidArgument(f"unknown signed circuit kind {self.kind!r}")
        object.__setattr__(self, "edges", frozenset(self.edges))

    @classmethod
    def of(cls, shape: Union[Circuit, Barbell]) -> "SignedCircuit":
        return cls("circuit" if isinstance(shape, Circuit) else "barbell", shape.edge_set, shape)

    def sort_key(self):
        return (len(self.edges), tuple(sorted(self.edges)))

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedCircuit):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"SignedCircuit({self.kind}, {sorted(self.edges)})"


def is_balanced(g: SignedGraph, c: Circuit) -> bool:
    return negative_count(g, c.edges) % 2 == 0


# -- enumeration -------------------------------------------------------------


def enumerate_circuits(g: SignedGraph) -> list[Circuit]:
    """Every circuit of ``g`` exactly once, loops and digons included.

    Non-loop circuits are anchored at their least edge ``e0 = uv`` (``u <= v``)
    and grown from ``v`` back to ``u`` through larger edges only, so each is
    produced in exactly one traversal.
    """
    found: list[Circuit] = []
    for e in g.edges:
        u, v = g.ends(e)
        if u == v:
            found.append(Circuit((e,), (u,)))

    adj: dict[VertexId, list[tuple[EdgeId, VertexId]]] = {x: [] for x in g.vertices}
    for e in g.edges:
        u, v = g.ends(e)
        if u != v:
            adj[u].append((e, v))
            adj[v].append((e, u))

    for e0 in g.edges:
        start, first = g.ends(e0)
        if start == first:
            continue
        on_path = {start, first}
        edges = [e0]
        verts = [start, first]

        def grow(x: VertexId) -> None:
            for f, y in adj[x]:
                if f <= e0:
                    continue
                if y == start:
                    found.append(Circuit(tuple(edges) + (f,), tuple(verts)))
                    continue
                if y in on_path:
                    continue
                on_path.add(y)
                edges.append(f)
                verts.append(y)
                grow(y)
                verts.pop()
                edges.pop()
                on_path.discard(y)

        grow(first)
    found.sort(key=Circuit.sort_key)
    return found


def unbalanced_circuits(g: SignedGraph, circuits: Optional[list[Circuit]] = None) -> list[Circuit]:
    cs = enumerate_circuits(g) if circuits is None else circuits
    return [c for c in cs if not is_balanced(g, c)]


def _connecting_paths(g: SignedGraph, a: Circuit, b: Circuit):
    """Paths from V(a) to V(b) whose interior avoids both circuits."""
    va, vb = a.vertex_set, b.vertex_set
    blocked_edges = a.edge_set | b.edge_set
    paths = []
    for x in sorted(va):
        seen = {x}
        edges: list[EdgeId] = []
        verts = [x]

        def walk(y0: VertexId) -> None:
            for f in g.incident(y0):
                if f in blocked_edges or g.is_loop(f):
                    continue
                y = g.other_end(f, y0)
                if y in seen or y in va:
                    continue
                if y in vb:
                    paths.append((tuple(edges) + (f,), tuple(verts) + (y,)))
                    continue
                seen.add(y)
                edges.append(f)
                verts.append(y)
                walk(y)
                verts.pop()
                edges.pop()
                seen.discard(y)

        walk(x)
    return paths


def enumerate_barbells(g: SignedGraph, circuits: Optional[list[Circuit]] = None) -> list[Barbell]:
    """All barbells; several connecting paths give several barbells."""
    ub = unbalanced_circuits(g, circuits)
    out: dict[EdgeSet, Barbell] = {}
    for a, b in combinations(ub, 2):
        shared = a.vertex_set & b.vertex_set
        if len(shared) == 1:
            bb = Barbell(a, b)
            out.setdefault(bb.edge_set, bb)
        elif not shared:
            for path, pverts in _connecting_paths(g, a, b):
                bb = Barbell(a, b, path, pverts)
                out.setdefault(bb.edge_set, bb)
    return sorted(out.values(), key=lambda bb: (len(bb.edge_set), tuple(sorted(bb.edge_set))))


def enumerate_signed_circuits(g: SignedGraph, circuits: Optional[list[Circuit]] = None) -> list[SignedCircuit]:
    cs = enumerate_circuits(g) if circuits is None else circuits
    out: dict[EdgeSet, SignedCircuit] = {}
    for c in cs:
        if is_balanced(g, c):
            out.setdefault(c.edge_set, SignedCircuit.of(c))
    for bb in enumerate_barbells(g, cs):
        out.setdefault(bb.edge_set, SignedCircuit.of(bb))
    return sorted(out.values(), key=SignedCircuit.sort_key)


def coloops(g: SignedGraph, signed: Optional[list[SignedCircuit]] = None) -> EdgeSet:
    """Edges contained in no signed circuit."""
    sc = enumerate_signed_circuits(g) if signed is None else signed
    covered: set[EdgeId] = set()
    for s in sc:
        covered |= s.edges
    return frozenset(e for e in g.edges if e not in covered)


def is_flow_admissible(g: SignedGraph, signed: Optional[list[SignedCircuit]] = None) -> bool:
    return not coloops(g, signed)


def edge_disjoint_unbalanced_circuits(
    g: SignedGraph, count: int, circuits: Optional[list[Circuit]] = None
) -> Optional[tuple[Circuit, ...]]:
    """``count`` pairwise edge-disjoint unbalanced circuits, or None."""
    ub = unbalanced_circuits(g, circuits)
    chosen: list[Circuit] = []

    def search(start: int, used: frozenset) -> bool:
        if len(chosen) == count:
            return True
        for i in range(start, len(ub)):
            c = ub[i]
            if used & c.edge_set:
                continue
            chosen.append(c)
            if search(i + 1, used | c.edge_set):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if search(0, frozenset()) else None


def edge_disjoint_unbalanced_pair(
    g: SignedGraph, circuits: Optional[list[Circuit]] = None
) -> Optional[tuple[Circuit, Circuit]]:
    return edge_disjoint_unbalanced_circuits(g, 2, circuits)


def theta_balance_profile(g: SignedGraph, theta: Iterable[EdgeId]) -> int:
    """How many of the three circuits of a theta subgraph are balanced."""
    sub = g.edge_subgraph(g.check_edges(theta))
    degs = sorted(degree(sub, v) for v in sub.vertices)
    shape_ok = (
        sub.num_edges() > 0
        and is_connected(sub)
        and not any(sub.is_loop(e) for e in sub.edges)
        and degs[-2:] == [3, 3]
        and all(d == 2 for d in degs[:-2])
    )
    cs = enumerate_circuits(sub) if shape_ok else []
    if len(cs) != 3:
        raise InvalidArgument("edge set is not a theta subgraph")
    return sum(1 for c in cs if is_balanced(g, c))


# -- recognition of a given edge set ------------------------------------------------


def recognize_signed_circuit(g: SignedGraph, edges: Iterable[EdgeId]) -> Optional[SignedCircuit]:
    """Classify an arbitrary edge set as a signed circuit of ``g``, or None.

    Works from the edge set alone and does not consult the enumerators'
    output; used to validate certificates.
    """
    es = g.check_edges(edges)
    if not es:
        return None
    sub = g.edge_subgraph(es)
    if not is_connected(sub):
        return None
    cs = enumerate_circuits(sub)
    if len(cs) == 1 and cs[0].edge_set == es:
        c = cs[0]
        return SignedCircuit.of(c) if is_balanced(g, c) else None
    if len(cs) != 2:
        return None
    a, b = cs
    if is_balanced(g, a) or is_balanced(g, b) or a.edge_set & b.edge_set:
        return None
    rest = es - a.edge_set - b.edge_set
    shared = a.vertex_set & b.vertex_set
    if not rest:
        return SignedCircuit.of(Barbell(a, b)) if len(shared) == 1 else None
    if shared:
        return None
    # rest must be a path from a to b meeting them only at its ends
    path_graph = g.edge_subgraph(rest)
    pdeg = {v: degree(path_graph, v) for v in path_graph.vertices}
    ends = [v for v, d in pdeg.items() if d == 1]
    if len(ends) != 2 or any(d not in (1, 2) for d in pdeg.values()) or not is_connected(path_graph):
        return None
    x, y = ends
    if x in b.vertex_set:
        x, y = y, x
    if x not in a.vertex_set or y not in b.vertex_set:
        return None
    interior = set(pdeg) - {x, y}
    if interior & (a.vertex_set | b.vertex_set):
        return None
    order_e, order_v = [], [x]
    prev = None
    cur = x
    while cur != y:
        f = next(f for f in path_graph.incident(cur) if f != prev)
        order_e.append(f)
        cur = path_graph.other_end(f, cur)
        order_v.append(cur)
        prev = f
    return SignedCircuit.of(Barbell(a, b, tuple(order_e), tuple(order_v)))
