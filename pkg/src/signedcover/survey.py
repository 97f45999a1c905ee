"""Exhaustive generation of small signed graphs and property sweeps.

Instances are produced once per switching-isomorphism class: unsigned
multigraphs are generated up to isomorphism, then their signings are reduced
modulo automorphisms and switching. A sweep evaluates a named property on
every instance of a source and collects counterexamples in edge-list form so
they can be replayed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Callable, Iterator, Optional

from . import circuits as circ
from .cover import find_k_cover, min_uniform_cover_certificate, repeat_cover, verify_cover
from .decomposition import (
    intersection_graph,
    nonseparating_disjoint_circuit,
    optimal_decompositions,
    removable_edge,
)
from .errors import InvalidArgument, ResourceLimit
from .graph import (
    SignedGraph,
    components,
    format_edge_list,
    is_connected,
    is_eulerian,
    is_two_connected,
    is_two_edge_connected,
    max_degree,
    min_degree,
    parse_edge_list,
)
from .necklace import detect_necklace
from .signing import balancing_switch_set, is_balanced, switch_at

MAX_CANONICAL_VERTICES = 8
MAX_SWEEP_VERTICES = 8
MAX_SWEEP_EDGES = 12
FILTERS = ("eulerian", "flow_admissible_eulerian", "all")


# -- canonical forms ---------------------------------------------------------------


def _vertex_invariant(g: SignedGraph, v) -> tuple[int, int]:
    loops = sum(1 for e in g.incident(v) if g.is_loop(e))
    return (len(g.incident(v)) + loops, loops)


def _ordered_labelings(g: SignedGraph) -> Iterator[dict]:
    """Relabelings 0..n-1 that list vertices by non-decreasing invariant.

    The invariant ignores signs and labels, so this family of labelings is
    carried onto itself by any isomorphism; minimizing over it is canonical.
    """
    classes: dict[tuple, list] = {}
    for v in g.vertices:
        classes.setdefault(_vertex_invariant(g, v), []).append(v)
    groups = [classes[key] for key in sorted(classes)]
    for choice in product(*(permutations(grp) for grp in groups)):
        order = [v for grp in choice for v in grp]
        yield {v: i for i, v in enumerate(order)}


def canonical_form(g: SignedGraph) -> bytes:
    """Key that is equal for two graphs iff they are switching-isomorphic.

    Minimum signed edge encoding over vertex relabelings and switch sets.
    Exhaustive; refuses graphs with more than 8 vertices.
    """
    n = g.num_vertices()
    if n > MAX_CANONICAL_VERTICES:
        raise ResourceLimit(f"canonical_form is exhaustive; {n} vertices exceeds {MAX_CANONICAL_VERTICES}")
    raw = [(g.ends(e), g.sign(e)) for e in g.edges]
    best = None
    for lab in _ordered_labelings(g):
        mapped = [(lab[u], lab[v], s) for (u, v), s in raw]
        mapped = [(a, b, s) if a <= b else (b, a, s) for a, b, s in mapped]
        # switching the complement gives the same signature; keep label 0 fixed
        for bits in range(1 << max(n - 1, 0)):
            side = bits << 1
            enc = sorted(
                (a, b, 0 if (s < 0) != (a != b and ((side >> a) & 1) != ((side >> b) & 1)) else 1)
                for a, b, s in mapped
            )
            t = tuple(enc)
            if best is None or t < best:
                best = t
    flat = [n, len(raw)] + [x for trip in (best or ()) for x in trip]
    return bytes(flat)


# -- generation ------------------------------------------------------------------


def _slot_graph(n: int, slots: list[tuple[int, int]], mult: list[int], negs: Optional[list[int]] = None) -> SignedGraph:
    edges = []
    for i, (a, b) in enumerate(slots):
        r = negs[i] if negs else 0
        edges.extend([(a, b, -1)] * r + [(a, b, 1)] * (mult[i] - r))
    return SignedGraph.from_edges(edges, vertices=range(n))


def _loopless_vectors(n: int, max_e: int, even: bool):
    pairs = list(combinations(range(n), 2))
    counts = [0] * len(pairs)

    def rec(i: int, left: int):
        if i == len(pairs):
            yield list(counts)
            return
        for c in range(left + 1):
            counts[i] = c
            yield from rec(i + 1, left - c)
        counts[i] = 0

    for vec in rec(0, max_e):
        deg = [0] * n
        for (a, b), c in zip(pairs, vec):
            deg[a] += c
            deg[b] += c
        if even and any(d % 2 for d in deg):
            continue
        if n > 1 and min(deg) == 0:
            continue
        yield pairs, vec


def _loop_vectors(n: int, total_max: int):
    def rec(i: int, left: int, acc: list[int]):
        if i == n:
            yield list(acc)
            return
        for c in range(left + 1):
            acc.append(c)
            yield from rec(i + 1, left - c, acc)
            acc.pop()

    yield from rec(0, total_max, [])


def _unsigned_encoding(slots, mult, lab) -> tuple:
    out = []
    for (a, b), c in zip(slots, mult):
        x, y = lab[a], lab[b]
        if x > y:
            x, y = y, x
        out.extend([(x, y)] * c)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _unsigned_classes(n: int, max_e: int, even: bool) -> tuple:
    """Connected multigraphs on exactly n vertices, one per isomorphism class.

    Each entry is (slots, multiplicities, automorphisms as label maps).
    """
    found: dict[tuple, tuple] = {}
    for pairs, vec in _loopless_vectors(n, max_e, even):
        m0 = sum(vec)
        base = _slot_graph(n, pairs, vec)
        if n > 1 and not is_connected(base):
            continue
        for lvec in _loop_vectors(n, max_e - m0):
            if m0 + sum(lvec) == 0:
                continue
            slots = [(v, v) for v in range(n)] + pairs
            mult = lvec + vec
            g = _slot_graph(n, slots, mult)
            encs = [(_unsigned_encoding(slots, mult, lab), lab) for lab in _ordered_labelings(g)]
            best = min(e for e, _ in encs)
            if best in found:
                continue
            # relabel onto the canonical representative
            lab = next(lab for e, lab in encs if e == best)
            cslots: dict[tuple[int, int], int] = {}
            for (a, b), c in zip(slots, mult):
                if c:
                    x, y = sorted((lab[a], lab[b]))
                    cslots[(x, y)] = cslots.get((x, y), 0) + c
            keys = sorted(cslots)
            cmult = [cslots[s] for s in keys]
            cg = _slot_graph(n, keys, cmult)
            auts = tuple(
                tuple(lab2[v] for v in range(n))
                for lab2 in _ordered_labelings(cg)
                if _unsigned_encoding(keys, cmult, lab2) == best
            )
            found[best] = (tuple(keys), tuple(cmult), auts)
    return tuple(found[k] for k in sorted(found))


def _signed_classes(n: int, slots, mult, auts):
    """Negative-edge counts per slot, one vector per switching-automorphism class."""
    index = {s: i for i, s in enumerate(slots)}
    images = []
    for q in auts:
        images.append([index[tuple(sorted((q[a], q[b])))] for a, b in slots])
    switchers = []
    for bits in range(1 << max(n - 1, 0)):
        side = bits << 1
        switchers.append([a != b and ((side >> a) & 1) != ((side >> b) & 1) for a, b in slots])
    seen = set()
    out = []
    for negs in product(*(range(c + 1) for c in mult)):
        best = None
        for img in images:
            moved = [0] * len(slots)
            for i, j in enumerate(img):
                moved[j] = negs[i]
            for flip in switchers:
                t = tuple(mult[i] - x if flip[i] else x for i, x in enumerate(moved))
                if best is None or t < best:
                    best = t
        if best not in seen:
            seen.add(best)
            out.append(best)
    out.sort()
    return out


def _check_bounds(max_v: int, max_e: int) -> None:
    if max_v < 1 or max_e < 1:
        raise InvalidArgument("bounds must be positive")
    if max_v > MAX_SWEEP_VERTICES or max_e > MAX_SWEEP_EDGES:
        raise ResourceLimit(
            f"bounds ({max_v}, {max_e}) exceed the exhaustive guards "
            f"({MAX_SWEEP_VERTICES}, {MAX_SWEEP_EDGES})"
        )


@lru_cache(maxsize=32)
def _instances(max_v: int, max_e: int, filter: str) -> tuple[SignedGraph, ...]:
    even = filter != "all"
    out = []
    for n in range(1, max_v + 1):
        for slots, mult, auts in _unsigned_classes(n, max_e, even):
            for negs in _signed_classes(n, slots, mult, auts):
                g = _slot_graph(n, list(slots), list(mult), list(negs))
                if filter == "flow_admissible_eulerian" and not circ.is_flow_admissible(g):
                    continue
                out.append(g)
    return tuple(out)


def generate_instances(max_v: int, max_e: int, filter: str = "eulerian") -> Iterator[SignedGraph]:
    """Connected signed multigraphs with at most ``max_v`` vertices and ``max_e`` edges.

    Yields one graph per switching-isomorphism class, in a fixed order.
    ``filter`` is ``"eulerian"``, ``"flow_admissible_eulerian"`` or ``"all"``.
    """
    if filter not in FILTERS:
        raise InvalidArgument(f"unknown filter {filter!r}; choose from {FILTERS}")
    _check_bounds(max_v, max_e)
    yield from _instances(max_v, max_e, filter)


def theta_graphs(max_path: int = 3) -> Iterator[SignedGraph]:
    """Every signing of every theta whose three paths have lengths 1..max_path."""
    for lengths in combinations_with_replacement(range(1, max_path + 1), 3):
        edges = []
        nxt = 2
        for length in lengths:
            chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
            nxt += length - 1
            edges.extend(zip(chain, chain[1:]))
        for signs in product((1, -1), repeat=len(edges)):
            yield SignedGraph.from_edges([(a, b, s) for (a, b), s in zip(edges, signs)])


def two_connected_atlas(max_v: int = 6) -> Iterator[SignedGraph]:
    """2-connected simple graphs on 3..max_v vertices from the networkx graph atlas."""
    import networkx as nx

    if max_v > 7:
        raise ResourceLimit("the graph atlas stops at 7 vertices")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < 3 or n > max_v or not nx.is_biconnected(h):
            continue
        yield SignedGraph.from_edges(sorted(h.edges()), vertices=h.nodes())


# -- properties --------------------------------------------------------------------


@dataclass(frozen=True)
class Outcome:
    status: str  # "pass", "fail", "skip" or "inconclusive"
    detail: str = ""
    value: Optional[int] = None


PASS = Outcome("pass")


def _skip(why: str) -> Outcome:
    return Outcome("skip", why)


def _fail(why: str, value: Optional[int] = None) -> Outcome:
    return Outcome("fail", why, value)


def _check_thm_6cover(g: SignedGraph) -> Outcome:
    cert = min_uniform_cover_certificate(g, 6)
    if cert is None:
        return _fail("no k-cover for any k <= 6")
    if 6 % cert.k == 0:
        six = repeat_cover(cert, 6 // cert.k)
    else:
        six = find_k_cover(g, 6)
        if six is None:
            return _fail(f"min cover is {cert.k} but no 6-cover exists", cert.k)
    if not verify_cover(g, six):
        return _fail("6-cover certificate failed verification", cert.k)
    return Outcome("pass", value=cert.k)


def _check_min_cover(g: SignedGraph) -> Outcome:
    cert = min_uniform_cover_certificate(g, 6)
    if cert is None:
        return _fail("no k-cover for any k <= 6")
    if not verify_cover(g, cert):
        return _fail("certificate failed verification", cert.k)
    if len(g.negative_edges()) % 2 == 0 and cert.k > 2:
        return _fail(f"even negative count but min cover is {cert.k}", cert.k)
    return Outcome("pass", value=cert.k)


def _check_even_2cover(g: SignedGraph) -> Outcome:
    if len(g.negative_edges()) % 2:
        return _skip("odd negative count")
    cert = find_k_cover(g, 2)
    if cert is None:
        return _fail("no 2-cover")
    return PASS if verify_cover(g, cert) else _fail("2-cover failed verification")


def _check_one_cover(g: SignedGraph) -> Outcome:
    return PASS if find_k_cover(g, 1) is not None else _fail("no 1-cover")


def _check_nonseparating_circuit(g: SignedGraph) -> Outcome:
    if max_degree(g) < 4:
        return _skip("maximum degree below 4")
    for c in circ.enumerate_circuits(g):
        other = nonseparating_disjoint_circuit(g, c)
        if other.edge_set & c.edge_set:
            return _fail(f"{sorted(other.edges)} meets {sorted(c.edges)}")
        if not circ.recognize_signed_circuit(g.unsigned(), other.edges):
            return _fail(f"{sorted(other.edges)} is not a circuit")
        if not components(g.remove_edges(other.edges)).connected_up_to_isolated:
            return _fail(f"removing {sorted(other.edges)} disconnects the graph")
    return PASS


def _check_removable_edge(g: SignedGraph) -> Outcome:
    if g.num_vertices() < 3 or not is_two_connected(g):
        return _skip("not 2-connected on at least 3 vertices")
    for v in g.vertices:
        e = removable_edge(g, v)
        if v in g.ends(e):
            return _fail(f"edge {e} touches {v}")
        if not is_connected(g.remove_vertices(g.ends(e))):
            return _fail(f"removing the ends of edge {e} disconnects the graph")
    return PASS


def _sample_subgraphs(g: SignedGraph, count: int = 24) -> list[frozenset]:
    cs = circ.enumerate_circuits(g)
    out = {c.edge_set for c in cs}
    out.update(a.edge_set | b.edge_set for a, b in combinations(cs, 2))
    out.add(frozenset(g.edges))
    rng = random.Random(format_edge_list(g))
    edges = list(g.edges)
    for _ in range(count):
        out.add(frozenset(e for e in edges if rng.random() < 0.5))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def _check_balancing_switch(g: SignedGraph) -> Outcome:
    for h in _sample_subgraphs(g):
        sub = g.edge_subgraph(h)
        balanced = all(circ.is_balanced(g, c) for c in circ.enumerate_circuits(sub))
        s = balancing_switch_set(g, h)
        if balanced:
            if s is None:
                return _fail(f"balanced subgraph {sorted(h)} has no balancing switch set")
            switched = switch_at(g, s)
            if any(switched.sign(e) < 0 for e in h):
                return _fail(f"switching at {sorted(s)} leaves negatives in {sorted(h)}")
        elif s is not None:
            return _fail(f"unbalanced subgraph {sorted(h)} got a switch set")
    return PASS


def _check_theta(g: SignedGraph) -> Outcome:
    count = circ.theta_balance_profile(g, g.edges)
    return Outcome("pass" if count in (1, 3) else "fail", f"{count} balanced circuits", count)


def _check_disjoint_pair_flow(g: SignedGraph) -> Outcome:
    if not is_two_edge_connected(g):
        return _skip("not 2-edge-connected")
    if circ.edge_disjoint_unbalanced_pair(g) is None:
        return _skip("no edge-disjoint unbalanced pair")
    cl = circ.coloops(g)
    return PASS if not cl else _fail(f"coloops {sorted(cl)}")


def _check_disjoint_unbalanced_pair(g: SignedGraph) -> Outcome:
    if not is_eulerian(g) or is_balanced(g) or not circ.is_flow_admissible(g):
        return _skip("not a flow-admissible unbalanced Eulerian graph")
    return PASS if circ.edge_disjoint_unbalanced_pair(g) else _fail("no edge-disjoint unbalanced pair")


def _check_three_unbalanced(g: SignedGraph) -> Outcome:
    if not is_eulerian(g) or len(g.negative_edges()) % 2 == 0 or not circ.is_flow_admissible(g):
        return _skip("not a flow-admissible Eulerian graph with odd negative count")
    found = circ.edge_disjoint_unbalanced_circuits(g, 3)
    return PASS if found else _fail("no three edge-disjoint unbalanced circuits")


def _standing_hypotheses(g: SignedGraph) -> Optional[str]:
    if not is_eulerian(g):
        return "not Eulerian"
    if min_degree(g) < 4:
        return "minimum degree below 4"
    if not is_two_connected(g.without_loops()):
        return "not 2-connected after deleting loops"
    if not circ.is_flow_admissible(g):
        return "not flow-admissible"
    return None


def _check_balanced_neighbours(g: SignedGraph) -> Outcome:
    why = _standing_hypotheses(g)
    if why:
        return _skip(why)
    for d in optimal_decompositions(g):
        h = intersection_graph(g, d)
        for (i, j), k in h.shared.items():
            if (h.balanced[i] or h.balanced[j]) and not 1 <= k <= 2:
                return _fail(f"circuits {d.edge_lists()[i]} and {d.edge_lists()[j]} share {k} vertices")
    return PASS


def _check_unbalanced_neighbours_necklace(g: SignedGraph) -> Outcome:
    why = _standing_hypotheses(g)
    if why:
        return _skip(why)
    for d in optimal_decompositions(g):
        h = intersection_graph(g, d)
        for (i, j), k in h.shared.items():
            if h.balanced[i] or h.balanced[j] or k < 3:
                continue
            union = d.circuits[i].edge_set | d.circuits[j].edge_set
            if detect_necklace(g.edge_subgraph(union)) is None:
                return _fail(f"union {sorted(union)} is not a necklace")
    return PASS


@dataclass(frozen=True)
class Property:
    name: str
    description: str
    source: str
    check: Callable[[SignedGraph], Outcome]


PROPERTIES: dict[str, Property] = {
    p.name: p
    for p in [
        Property("thm_6cover", "every flow-admissible signed Eulerian graph has a 6-cover",
                 "flow_admissible_eulerian", _check_thm_6cover),
        Property("min_cover", "least k with a k-cover is at most 6, and at most 2 for even negative count",
                 "flow_admissible_eulerian", _check_min_cover),
        Property("even_2cover", "signed Eulerian graphs with an even number of negative edges have 2-covers",
                 "eulerian", _check_even_2cover),
        Property("one_cover", "every Eulerian signed graph has a 1-cover (false; for demonstrations)",
                 "eulerian", _check_one_cover),
        Property("nonseparating_circuit", "some circuit disjoint from C leaves G connected up to isolated vertices",
                 "eulerian", _check_nonseparating_circuit),
        Property("removable_edge", "a 2-connected graph has an edge avoiding v whose ends can be deleted",
                 "two_connected_atlas", _check_removable_edge),
        Property("balancing_switch", "balanced subgraphs switch to all-positive; unbalanced ones cannot",
                 "eulerian", _check_balancing_switch),
        Property("theta_balance", "a signed theta has 1 or 3 balanced circuits",
                 "thetas", _check_theta),
        Property("disjoint_pair_flow", "2-edge-connected with two edge-disjoint unbalanced circuits implies flow-admissible",
                 "eulerian", _check_disjoint_pair_flow),
        Property("disjoint_unbalanced_pair", "flow-admissible unbalanced Eulerian graphs have two edge-disjoint unbalanced circuits",
                 "flow_admissible_eulerian", _check_disjoint_unbalanced_pair),
        Property("three_unbalanced", "odd negative count adds a third edge-disjoint unbalanced circuit",
                 "flow_admissible_eulerian", _check_three_unbalanced),
        Property("balanced_neighbours", "in an optimal decomposition a balanced circuit meets a neighbour in 1 or 2 vertices",
                 "flow_admissible_eulerian", _check_balanced_neighbours),
        Property("unbalanced_neighbours_necklace", "adjacent unbalanced circuits sharing 3+ vertices form a necklace",
                 "flow_admissible_eulerian", _check_unbalanced_neighbours_necklace),
    ]
}


def get_property(name: str) -> Property:
    try:
        return PROPERTIES[name]
    except KeyError:
        raise InvalidArgument(f"unknown property {name!r}; choose from {sorted(PROPERTIES)}") from None


def check_property(name: str, g: SignedGraph) -> Outcome:
    """Evaluate one property on one graph; a blown search budget is inconclusive."""
    prop = get_property(name)
    try:
        return prop.check(g)
    except ResourceLimit as exc:
        return Outcome("inconclusive", str(exc))


def instances_for(source: str, max_v: int, max_e: int, max_path: int = 3) -> list[SignedGraph]:
    if source == "thetas":
        return list(theta_graphs(max_path))
    if source == "two_connected_atlas":
        return list(two_connected_atlas(min(max_v, 7)))
    return list(generate_instances(max_v, max_e, source))


# -- sweeps ------------------------------------------------------------------------


@dataclass
class SweepReport:
    property: str
    bounds: dict
    instances: int = 0
    checked: int = 0
    skipped: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    inconclusive: list[dict] = field(default_factory=list)
    histogram: dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.inconclusive

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "bounds": dict(self.bounds),
            "instances": self.instances,
            "checked": self.checked,
            "skipped": self.skipped,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
            "inconclusive": list(self.inconclusive),
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "SweepReport":
        return cls(
            property=data["property"],
            bounds=dict(data["bounds"]),
            instances=data["instances"],
            checked=data["checked"],
            skipped=data["skipped"],
            counterexamples=list(data["counterexamples"]),
            inconclusive=list(data["inconclusive"]),
            histogram={int(k): v for k, v in data["histogram"].items()},
        )

    @classmethod
    def from_json(cls, text: str) -> "SweepReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [
            f"property: {self.property}",
            f"bounds: " + " ".join(f"{k}={v}" for k, v in sorted(self.bounds.items())),
            f"instances: {self.instances}",
            f"checked: {self.checked}",
            f"skipped: {self.skipped}",
            f"counterexamples: {len(self.counterexamples)}",
            f"inconclusive: {len(self.inconclusive)}",
            f"result: {'pass' if self.passed else 'FAIL'}",
        ]
        if self.histogram:
            lines.append("histogram: " + " ".join(f"{k}:{v}" for k, v in sorted(self.histogram.items())))
        for i, item in enumerate(self.counterexamples):
            lines.append("")
            lines.append(f"counterexample: {i}")
            lines.append(f"detail: {item['detail']}")
            lines.append("graph:")
            lines.extend("  " + ln for ln in item["graph"].splitlines())
        for i, item in enumerate(self.inconclusive):
            lines.append("")
            lines.append(f"inconclusive: {i}")
            lines.append(f"detail: {item['detail']}")
            lines.append("graph:")
            lines.extend("  " + ln for ln in item["graph"].splitlines())
        return "\n".join(lines) + "\n"


def _evaluate(args: tuple[str, str]) -> Outcome:
    name, text = args
    return check_property(name, parse_edge_list(text))


def run_sweep(name: str, max_v: int = 5, max_e: int = 8, max_path: int = 3, jobs: int = 1) -> SweepReport:
    """Evaluate property ``name`` on every instance of its source.

    The report lists instances in generation order whatever ``jobs`` is.
    """
    prop = get_property(name)
    if prop.source in FILTERS:
        _check_bounds(max_v, max_e)
        bounds = {"max_v": max_v, "max_e": max_e, "source": prop.source}
    elif prop.source == "thetas":
        bounds = {"max_path": max_path, "source": prop.source}
    else:
        bounds = {"max_v": max_v, "source": prop.source}
    graphs = instances_for(prop.source, max_v, max_e, max_path)
    texts = [format_edge_list(g) for g in graphs]
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            outcomes = pool.map(_evaluate, [(name, t) for t in texts], chunksize=16)
    else:
        outcomes = [check_property(name, g) for g in graphs]
    report = SweepReport(name, bounds, instances=len(graphs))
    for text, out in zip(texts, outcomes):
        if out.status == "skip":
            report.skipped += 1
            continue
        report.checked += 1
        if out.value is not None:
            report.histogram[out.value] = report.histogram.get(out.value, 0) + 1
        if out.status == "fail":
            report.counterexamples.append({"graph": text, "detail": out.detail})
        elif out.status == "inconclusive":
            report.inconclusive.append({"graph": text, "detail": out.detail})
    return report


def replay(report: SweepReport) -> list[Outcome]:
    """Re-check every counterexample of a report in isolation."""
    return [check_property(report.property, parse_edge_list(item["graph"])) for item in report.counterexamples]
