"""Slow reference implementations that share no code with the library's search paths."""

from __future__ import annotations

from itertools import combinations

from signedcover import SignedGraph


def _component_edge_groups(g: SignedGraph, edges):
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        u, v = g.ends(e)
        parent[find(u)] = find(v)
    groups: dict = {}
    for e in edges:
        groups.setdefault(find(g.ends(e)[0]), []).append(e)
    return groups.values()


def _is_balanced_edges(g: SignedGraph, edges) -> bool:
    # product-of-signs potentials by relaxation; no shared code with the library
    pot = {}
    pending = list(edges)
    while pending:
        progress = False
        rest = []
        for e in pending:
            u, v = g.ends(e)
            if not pot:
                pot[u] = 1
            if u in pot and v in pot:
                if pot[u] * g.sign(e) != pot[v]:
                    return False
                progress = True
            elif u in pot:
                pot[v] = pot[u] * g.sign(e)
                progress = True
            elif v in pot:
                pot[u] = pot[v] * g.sign(e)
                progress = True
            else:
                rest.append(e)
        if not progress:
            u, _ = g.ends(rest[0])
            pot[u] = 1
        pending = rest
    return True


def is_independent(g: SignedGraph, edges) -> bool:
    """Independence in the signed-graphic (frame) matroid.

    Every component is a tree, or has exactly one circuit and that circuit is
    unbalanced.
    """
    for group in _component_edge_groups(g, edges):
        verts = {x for e in group for x in g.ends(e)}
        if len(group) > len(verts):
            return False
        if len(group) == len(verts) and _is_balanced_edges(g, group):
            return False
    return True


def matroid_circuits(g: SignedGraph) -> set[frozenset]:
    """Minimal dependent edge sets, by brute force over all subsets."""
    out = set()
    es = list(g.edges)
    for r in range(1, len(es) + 1):
        for sub in combinations(es, r):
            s = frozenset(sub)
            if any(c <= s for c in out):
                continue
            if not is_independent(g, s):
                out.add(s)
    return out


def graph_circuits(g: SignedGraph) -> set[frozenset]:
    """Edge sets inducing a connected 2-regular subgraph (loops count 2)."""
    out = set()
    es = list(g.edges)
    for r in range(1, len(es) + 1):
        for sub in combinations(es, r):
            deg: dict = {}
            for e in sub:
                u, v = g.ends(e)
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            if len(list(_component_edge_groups(g, sub))) == 1:
                out.add(frozenset(sub))
    return out


def has_k_cover(g: SignedGraph, k: int, members=None) -> bool:
    """Exhaustive search over multiplicity vectors, one signed circuit at a time."""
    members = sorted(matroid_circuits(g) if members is None else members, key=sorted)
    es = list(g.edges)
    if not es:
        return True
    idx = {e: i for i, e in enumerate(es)}
    rows = [tuple(idx[e] for e in c) for c in members]
    # last member index through each edge; past it the edge can no longer change
    last = [-1] * len(es)
    for ci, row in enumerate(rows):
        for p in row:
            last[p] = ci
    dead: set = set()

    def go(ci: int, deficit: tuple) -> bool:
        if not any(deficit):
            return True
        if ci == len(rows):
            return False
        if any(d and last[p] < ci for p, d in enumerate(deficit)):
            return False
        if (ci, deficit) in dead:
            return False
        row = rows[ci]
        top = min(deficit[p] for p in row)
        for m in range(top, -1, -1):
            nxt = list(deficit)
            for p in row:
                nxt[p] -= m
            if go(ci + 1, tuple(nxt)):
                return True
        dead.add((ci, deficit))
        return False

    return go(0, tuple([k] * len(es)))
