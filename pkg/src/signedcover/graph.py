"""Signed multigraphs: loops and parallel edges allowed.

Vertices and edges are plain integers. A graph is immutable once built;
every operation that "changes" a graph returns a new one and keeps the
surviving edge ids, so edge sets of a subgraph can be compared directly with
edge sets of its host.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, TextIO

from .errors import EdgeListError, InvalidArgument

VertexId = int
EdgeId = int
EdgeSet = frozenset  # frozenset[EdgeId]


class SignedGraph:
    """A multigraph with a sign (+1 or -1) on every edge."""

    __slots__ = ("_vertices", "_ends", "_sign", "_names", "_incidence", "_hash")

    def __init__(
        self,
        vertices: Iterable[VertexId],
        ends: Mapping[EdgeId, tuple[VertexId, VertexId]],
        signs: Optional[Mapping[EdgeId, int]] = None,
        names: Optional[Mapping[VertexId, str]] = None,
    ):
        vset = set(vertices)
        clean_ends: dict[EdgeId, tuple[VertexId, VertexId]] = {}
        clean_sign: dict[EdgeId, int] = {}
        for e in sorted(ends):
            u, v = ends[e]
            if u not in vset or v not in vset:
                raise InvalidArgument(f"edge {e} has an undeclared endpoint ({u}, {v})")
            clean_ends[e] = (u, v) if u <= v else (v, u)
            s = 1 if signs is None else signs.get(e, 1)
            if s not in (1, -1):
                raise InvalidArgument(f"edge {e} has sign {s!r}; expected +1 or -1")
            clean_sign[e] = s
        self._vertices = tuple(sorted(vset))
        self._ends = clean_ends
        self._sign = clean_sign
        self._names = dict(names) if names else {}
        incidence: dict[VertexId, list[EdgeId]] = {v: [] for v in self._vertices}
        for e, (u, v) in clean_ends.items():
            incidence[u].append(e)
            if v != u:
                incidence[v].append(e)
        self._incidence = {v: tuple(es) for v, es in incidence.items()}
        self._hash = None

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[VertexId, VertexId, int] | tuple[VertexId, VertexId]],
        vertices: Iterable[VertexId] = (),
    ) -> "SignedGraph":
        """Build a graph whose edge ids are 0, 1, ... in the given order.

        Each edge is ``(u, v)`` or ``(u, v, sign)``; endpoints are declared
        implicitly.
        """
        vset = set(vertices)
        ends = {}
        signs = {}
        for i, item in enumerate(edges):
            u, v = item[0], item[1]
            ends[i] = (u, v)
            signs[i] = item[2] if len(item) > 2 else 1
            vset.update((u, v))
        return cls(vset, ends, signs)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[EdgeId, ...]:
        return tuple(self._ends)

    @property
    def names(self) -> dict[VertexId, str]:
        return dict(self._names)

    def num_vertices(self) -> int:
        return len(self._vertices)

    def num_edges(self) -> int:
        return len(self._ends)

    def ends(self, e: EdgeId) -> tuple[VertexId, VertexId]:
        try:
            return self._ends[e]
        except KeyError:
            raise InvalidArgument(f"unknown edge {e}") from None

    def sign(self, e: EdgeId) -> int:
        try:
            return self._sign[e]
        except KeyError:
            raise InvalidArgument(f"unknown edge {e}") from None

    def signs(self) -> dict[EdgeId, int]:
        return dict(self._sign)

    def is_loop(self, e: EdgeId) -> bool:
        u, v = self.ends(e)
        return u == v

    def other_end(self, e: EdgeId, v: VertexId) -> VertexId:
        a, b = self.ends(e)
        if v == a:
            return b
        if v == b:
            return a
        raise InvalidArgument(f"vertex {v} is not an end of edge {e}")

    def incident(self, v: VertexId) -> tuple[EdgeId, ...]:
        """Edges at ``v``; a loop appears once."""
        try:
            return self._incidence[v]
        except KeyError:
            raise InvalidArgument(f"unknown vertex {v}") from None

    def has_vertex(self, v: VertexId) -> bool:
        return v in self._incidence

    def has_edge(self, e: EdgeId) -> bool:
        return e in self._ends

    def negative_edges(self) -> EdgeSet:
        return frozenset(e for e, s in self._sign.items() if s < 0)

    def vertices_of(self, edges: Iterable[EdgeId]) -> frozenset[VertexId]:
        out: set[VertexId] = set()
        for e in edges:
            out.update(self.ends(e))
        return frozenset(out)

    def check_edges(self, edges: Iterable[EdgeId]) -> EdgeSet:
        es = frozenset(edges)
        bad = [e for e in es if e not in self._ends]
        if bad:
            raise InvalidArgument(f"unknown edges {sorted(bad)}")
        return es

    # -- derived graphs ----------------------------------------------------

    def edge_subgraph(self, edges: Iterable[EdgeId], keep_vertices: bool = False) -> "SignedGraph":
        """The subgraph formed by ``edges``.

        Without ``keep_vertices`` only vertices touched by the edges survive.
        """
        es = self.check_edges(edges)
        verts = self._vertices if keep_vertices else self.vertices_of(es)
        return SignedGraph(
            verts,
            {e: self._ends[e] for e in es},
            {e: self._sign[e] for e in es},
            self._names,
        )

    def remove_edges(self, edges: Iterable[EdgeId]) -> "SignedGraph":
        """``G \\ X``: delete edges, keep every vertex."""
        es = self.check_edges(edges)
        return self.edge_subgraph([e for e in self._ends if e not in es], keep_vertices=True)

    def remove_vertices(self, vertices: Iterable[VertexId]) -> "SignedGraph":
        """``G - X``: delete vertices and every edge touching them."""
        drop = set(vertices)
        keep = [v for v in self._vertices if v not in drop]
        ends = {e: uv for e, uv in self._ends.items() if uv[0] not in drop and uv[1] not in drop}
        return SignedGraph(keep, ends, {e: self._sign[e] for e in ends}, self._names)

    def without_loops(self) -> "SignedGraph":
        return self.remove_edges(loops(self))

    def with_signs(self, signs: Mapping[EdgeId, int]) -> "SignedGraph":
        merged = dict(self._sign)
        merged.update(signs)
        return SignedGraph(self._vertices, self._ends, merged, self._names)

    def with_negative(self, negative: Iterable[EdgeId]) -> "SignedGraph":
        neg = self.check_edges(negative)
        return SignedGraph(
            self._vertices, self._ends, {e: (-1 if e in neg else 1) for e in self._ends}, self._names
        )

    def unsigned(self) -> "SignedGraph":
        return self.with_negative(())

    # -- value semantics -------------------------------------------------

    def _key(self):
        return (self._vertices, tuple(self._ends.items()), tuple(self._sign.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(
            f"{e}:{u}{'+' if self._sign[e] > 0 else '-'}{v}" for e, (u, v) in self._ends.items()
        )
        return f"SignedGraph(V={list(self._vertices)}, E=[{body}])"


# -- degree and structure ------------------------------------------------------


def degree(g: SignedGraph, v: VertexId) -> int:
    """Number of edge-end incidences at ``v``; a loop counts twice."""
    return sum(2 if g.is_loop(e) else 1 for e in g.incident(v))


def degrees(g: SignedGraph) -> dict[VertexId, int]:
    return {v: degree(g, v) for v in g.vertices}


def max_degree(g: SignedGraph) -> int:
    return max(degrees(g).values(), default=0)


def min_degree(g: SignedGraph) -> int:
    return min(degrees(g).values(), default=0)


def loops(g: SignedGraph) -> EdgeSet:
    return frozenset(e for e in g.edges if g.is_loop(e))


def is_even(g: SignedGraph) -> bool:
    return all(d % 2 == 0 for d in degrees(g).values())


@dataclass(frozen=True)
class Components:
    """Edge parts of the connected components plus the isolated vertices."""

    parts: tuple[EdgeSet, ...]
    vertex_parts: tuple[frozenset, ...]
    isolated: frozenset

    @property
    def connected_up_to_isolated(self) -> bool:
        return len(self.parts) == 1

    def __len__(self) -> int:
        return len(self.vertex_parts)


def _vertex_components(g: SignedGraph) -> list[list[VertexId]]:
    seen: set[VertexId] = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for e in g.incident(x):
                y = g.other_end(e, x)
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def components(g: SignedGraph) -> Components:
    """Connected components, reported as edge sets.

    Components without edges are listed in ``isolated`` and contribute no
    edge part.
    """
    parts = []
    vparts = []
    isolated = []
    for comp in _vertex_components(g):
        vparts.append(frozenset(comp))
        if len(comp) == 1 and not g.incident(comp[0]):
            isolated.append(comp[0])
            continue
        parts.append(frozenset(e for v in comp for e in g.incident(v)))
    return Components(tuple(parts), tuple(vparts), frozenset(isolated))


def is_connected(g: SignedGraph) -> bool:
    """True for a graph with exactly one component (a lone vertex counts)."""
    return len(_vertex_components(g)) == 1


def is_eulerian(g: SignedGraph) -> bool:
    """Connected, every degree even, and at least one edge."""
    return g.num_edges() > 0 and is_connected(g) and is_even(g)


def _lowpoint_dfs(g: SignedGraph):
    """Iterative DFS over the loopless part.

    Returns (articulation points, bridges). Parallel edges are distinct, so a
    digon is never a bridge.
    """
    disc: dict[VertexId, int] = {}
    low: dict[VertexId, int] = {}
    cut_vertices: set[VertexId] = set()
    bridge_set: set[EdgeId] = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        # frames: (vertex, edge used to reach it, iterator over incident edges)
        stack = [(root, None, iter(g.incident(root)))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for e in it:
                if e == via or g.is_loop(e):
                    continue
                w = g.other_end(e, v)
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e, iter(g.incident(w))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridge_set.add(via)
                if parent == root:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    cut_vertices.add(parent)
        if root_children > 1:
            cut_vertices.add(root)
    return frozenset(cut_vertices), frozenset(bridge_set)


def bridges(g: SignedGraph) -> EdgeSet:
    return _lowpoint_dfs(g)[1]


def cut_vertices(g: SignedGraph) -> frozenset:
    return _lowpoint_dfs(g)[0]


def is_two_edge_connected(g: SignedGraph) -> bool:
    return is_connected(g) and not bridges(g)


def is_two_connected(g: SignedGraph) -> bool:
    """2-vertex-connectivity of the loopless part.

    Loops are ignored. Two vertices count as 2-connected only when joined by
    at least two parallel edges; a single vertex never does.
    """
    n = g.num_vertices()
    if n < 2 or not is_connected(g):
        return False
    cuts, brs = _lowpoint_dfs(g)
    if n == 2:
        return not brs
    return not cuts


# -- edge-list text format -----------------------------------------------------


def parse_edge_list(text: str) -> SignedGraph:
    """Parse ``v <name>`` / ``e <u> <v> <+|->`` records; ``#`` starts a comment.

    Vertex names that are all non-negative integers are used as vertex ids;
    otherwise ids are assigned in order of first appearance. Edge ids follow
    line order starting at 0.
    """
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = []
        pos = 0
        for tok in line.split():
            col = line.index(tok, pos) + 1
            pos = col - 1 + len(tok)
            tokens.append((tok, col))
        if not tokens:
            continue
        kind, kcol = tokens[0]
        if kind == "v":
            if len(tokens) != 2:
                raise EdgeListError("expected 'v <name>'", lineno, kcol)
            records.append(("v", lineno, tokens[1:]))
        elif kind == "e":
            if len(tokens) != 4:
                col = tokens[-1][1] if len(tokens) > 4 else len(line.rstrip()) + 1
                raise EdgeListError("expected 'e <u> <v> <+|->'", lineno, col)
            sign_tok, scol = tokens[3]
            if sign_tok not in ("+", "-"):
                raise EdgeListError(f"sign must be '+' or '-', got {sign_tok!r}", lineno, scol)
            records.append(("e", lineno, tokens[1:]))
        else:
            raise EdgeListError(f"unknown record type {kind!r}", lineno, kcol)

    order: list[str] = []
    seen: set[str] = set()
    for kind, _, toks in records:
        for tok, _ in toks[: (1 if kind == "v" else 2)]:
            if tok not in seen:
                seen.add(tok)
                order.append(tok)
    if all(t.isdigit() for t in order):
        ids = {t: int(t) for t in order}
        if len(set(ids.values())) != len(ids):
            raise EdgeListError("vertex names collide as integers", 1, 1)
    else:
        ids = {t: i for i, t in enumerate(order)}
    ends = {}
    signs = {}
    for kind, _, toks in records:
        if kind == "e":
            e = len(ends)
            ends[e] = (ids[toks[0][0]], ids[toks[1][0]])
            signs[e] = 1 if toks[2][0] == "+" else -1
    names = {i: t for t, i in ids.items()}
    return SignedGraph(ids.values(), ends, signs, names)


def format_edge_list(g: SignedGraph, comment: Optional[str] = None) -> str:
    names = g.names
    name = lambda v: names.get(v, str(v))  # noqa: E731
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.extend(f"v {name(v)}" for v in g.vertices)
    for e in g.edges:
        u, v = g.ends(e)
        lines.append(f"e {name(u)} {name(v)} {'+' if g.sign(e) > 0 else '-'}")
    return "\n".join(lines) + "\n"


def read_edge_list(stream: TextIO) -> SignedGraph:
    return parse_edge_list(stream.read())


def write_edge_list(g: SignedGraph, stream: TextIO, comment: Optional[str] = None) -> None:
    stream.write(format_edge_list(g, comment))


def iter_edges(g: SignedGraph) -> Iterator[tuple[EdgeId, VertexId, VertexId, int]]:
    for e in g.edges:
        u, v = g.ends(e)
        yield e, u, v, g.sign(e)
