"""Exact k-covers by signed circuits.

A k-cover is a multiset of signed circuits covering every edge exactly k
times, i.e. a non-negative integer solution of ``A x = k * 1`` where ``A`` is
the edge/signed-circuit incidence matrix. The search here is a depth-first
branch on the edge with the fewest live options, with capacity pruning and a
memo of failed residual vectors, so a negative answer is a proof.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .circuits import SignedCircuit, enumerate_signed_circuits, recognize_signed_circuit
from .errors import InvalidArgument, ResourceLimit
from .graph import EdgeId, SignedGraph

DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class CoverCertificate:
    graph: SignedGraph
    k: int
    members: tuple[tuple[SignedCircuit, int], ...]

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise InvalidArgument(f"k must be a positive integer, got {self.k!r}")
        if any(m < 1 for _, m in self.members):
            raise InvalidArgument("member multiplicities must be positive")

    def total_members(self) -> int:
        return sum(m for _, m in self.members)

    def to_records(self) -> list[dict]:
        return [
            {"kind": sc.kind, "edges": sorted(sc.edges), "multiplicity": m}
            for sc, m in self.members
        ]

    @classmethod
    def from_records(cls, graph: SignedGraph, k: int, records: Iterable[dict]) -> "CoverCertificate":
        members = tuple(
            (SignedCircuit(r["kind"], frozenset(r["edges"])), int(r["multiplicity"])) for r in records
        )
        return cls(graph, k, members)


@dataclass
class CoverCheck:
    ok: bool
    multiplicity: dict[EdgeId, int]
    rejected: list[tuple[int, str]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def verify_cover(g: SignedGraph, cert: CoverCertificate) -> CoverCheck:
    """Recount edge multiplicities and re-recognize every member from its edges."""
    counts: Counter = Counter()
    rejected = []
    for i, (sc, mult) in enumerate(cert.members):
        unknown = [e for e in sc.edges if not g.has_edge(e)]
        if unknown:
            rejected.append((i, f"unknown edges {sorted(unknown)}"))
            continue
        got = recognize_signed_circuit(g, sc.edges)
        if got is None:
            rejected.append((i, f"edges {sorted(sc.edges)} are not a signed circuit"))
            continue
        if got.kind != sc.kind:
            rejected.append((i, f"edges {sorted(sc.edges)} form a {got.kind}, not a {sc.kind}"))
            continue
        for e in sc.edges:
            counts[e] += mult
    mult_map = {e: counts.get(e, 0) for e in g.edges}
    ok = not rejected and all(c == cert.k for c in mult_map.values())
    return CoverCheck(ok, mult_map, rejected)


class _Search:
    def __init__(self, g: SignedGraph, signed: Sequence[SignedCircuit], budget: int):
        self.edges = g.edges
        pos = {e: i for i, e in enumerate(self.edges)}
        self.members = [tuple(sorted(pos[e] for e in sc.edges)) for sc in signed]
        self.through: list[list[int]] = [[] for _ in self.edges]
        for ci, es in enumerate(self.members):
            for p in es:
                self.through[p].append(ci)
        self.budget = budget
        self.nodes = 0
        self.failed: set[tuple[int, ...]] = set()
        self.chosen: list[int] = []

    def run(self, k: int) -> Optional[list[int]]:
        if self._solve(tuple([k] * len(self.edges))):
            return list(self.chosen)
        return None

    def _solve(self, deficit: tuple[int, ...]) -> bool:
        if not any(deficit):
            return True
        if deficit in self.failed:
            return False
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimit(f"cover search exceeded {self.budget} nodes")
        best_p = -1
        best_live: list[int] = []
        for p, d in enumerate(deficit):
            if d == 0:
                continue
            live = []
            capacity = 0
            for ci in self.through[p]:
                cap = min(deficit[q] for q in self.members[ci])
                if cap:
                    live.append(ci)
                    capacity += cap
            if capacity < d:
                self.failed.add(deficit)
                return False
            if best_p < 0 or len(live) < len(best_live):
                best_p, best_live = p, live
        for ci in best_live:
            nxt = list(deficit)
            for q in self.members[ci]:
                nxt[q] -= 1
            self.chosen.append(ci)
            if self._solve(tuple(nxt)):
                return True
            self.chosen.pop()
        self.failed.add(deficit)
        return False


def find_k_cover(
    g: SignedGraph,
    k: int,
    signed: Optional[Sequence[SignedCircuit]] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Optional[CoverCertificate]:
    """A k-cover of ``g`` by signed circuits, or None if none exists.

    Raises ResourceLimit when the search needs more than ``node_budget``
    nodes; that outcome proves nothing either way.
    """
    if int(k) != k or k < 1:
        raise InvalidArgument(f"k must be a positive integer, got {k!r}")
    sc = enumerate_signed_circuits(g) if signed is None else list(signed)
    if g.num_edges() == 0:
        return CoverCertificate(g, k, ())
    search = _Search(g, sc, node_budget)
    picks = search.run(k)
    if picks is None:
        return None
    counts = Counter(picks)
    members = tuple((sc[ci], counts[ci]) for ci in sorted(counts))
    return CoverCertificate(g, k, members)


def min_uniform_cover(
    g: SignedGraph, k_max: int = 6, node_budget: int = DEFAULT_NODE_BUDGET
) -> Optional[int]:
    """Least k in 1..k_max for which ``g`` has a k-cover, or None."""
    cert = min_uniform_cover_certificate(g, k_max, node_budget)
    return None if cert is None else cert.k


def min_uniform_cover_certificate(
    g: SignedGraph, k_max: int = 6, node_budget: int = DEFAULT_NODE_BUDGET
) -> Optional[CoverCertificate]:
    if k_max < 1:
        raise InvalidArgument("k_max must be at least 1")
    sc = enumerate_signed_circuits(g)
    covered = set().union(*(s.edges for s in sc)) if sc else set()
    if len(covered) < g.num_edges():
        return None
    for k in range(1, k_max + 1):
        cert = find_k_cover(g, k, sc, node_budget)
        if cert is not None:
            return cert
    return None


def combine_covers(a: CoverCertificate, b: CoverCertificate) -> CoverCertificate:
    """Multiset union: a k-cover plus an l-cover is a (k+l)-cover."""
    if a.graph != b.graph:
        raise InvalidArgument("certificates belong to different graphs")
    merged: dict[frozenset, list] = {}
    for sc, m in a.members + b.members:
        if sc.edges in merged:
            merged[sc.edges][1] += m
        else:
            merged[sc.edges] = [sc, m]
    members = tuple(
        (sc, m) for sc, m in sorted(merged.values(), key=lambda item: item[0].sort_key())
    )
    return CoverCertificate(a.graph, a.k + b.k, members)


def repeat_cover(cert: CoverCertificate, times: int) -> CoverCertificate:
    if times < 1:
        raise InvalidArgument("times must be positive")
    out = cert
    for _ in range(times - 1):
        out = combine_covers(out, cert)
    return out
