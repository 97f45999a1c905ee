"""Command-line front end.

Exit status is the only pass/fail channel: 0 success or pass, 1 property
failure or infeasible cover, 2 input error, 3 search budget or size guard
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import circuits as circ
from .cover import DEFAULT_NODE_BUDGET, find_k_cover, min_uniform_cover_certificate, verify_cover
from .decomposition import (
    all_decompositions,
    intersection_graph,
    one_decomposition,
    optimal_decomposition,
)
from .errors import InvalidArgument, ResourceLimit
from .graph import (
    SignedGraph,
    bridges,
    format_edge_list,
    is_eulerian,
    is_two_connected,
    loops,
    parse_edge_list,
)
from .necklace import build_necklace, detect_necklace
from .signing import is_balanced
from .survey import PROPERTIES, check_property, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _read_graph(path: str) -> SignedGraph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidArgument(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _circuit_records(g: SignedGraph, cs) -> list[dict]:
    return [{"edges": sorted(c.edges), "balanced": circ.is_balanced(g, c)} for c in cs]


def _cert_payload(cert) -> dict:
    return {"k": cert.k, "members": cert.to_records()}


def _cert_text(cert) -> str:
    lines = [f"k: {cert.k}", f"members: {cert.total_members()}"]
    for r in cert.to_records():
        lines.append(f"  {r['kind']} {' '.join(map(str, r['edges']))} x{r['multiplicity']}")
    return "\n".join(lines)


def _scalar_text(v) -> str:
    if isinstance(v, list):
        return "{" + ", ".join(map(str, v)) + "}"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


# -- subcommands -------------------------------------------------------------------


def cmd_analyze(args) -> int:
    g = _read_graph(args.input)
    sc = circ.enumerate_signed_circuits(g)
    cl = circ.coloops(g, sc)
    payload = {
        "vertices": g.num_vertices(),
        "edges": g.num_edges(),
        "negative_edges": sorted(g.negative_edges()),
        "loops": sorted(loops(g)),
        "balanced": is_balanced(g),
        "eulerian": is_eulerian(g),
        "two_connected": is_two_connected(g),
        "bridges": sorted(bridges(g)),
        "signed_circuits": len(sc),
        "coloops": sorted(cl),
        "flow_admissible": not cl,
        "necklace": detect_necklace(g) is not None,
    }
    text = "\n".join(f"{k}: {_scalar_text(v)}" for k, v in payload.items())
    _emit(args, payload, text)
    return EXIT_OK


def cmd_circuits(args) -> int:
    g = _read_graph(args.input)
    recs = _circuit_records(g, circ.enumerate_circuits(g))
    text = "\n".join(
        f"{'balanced' if r['balanced'] else 'unbalanced'} {' '.join(map(str, r['edges']))}" for r in recs
    ) or "(no circuits)"
    _emit(args, {"circuits": recs}, text)
    return EXIT_OK


def cmd_signed_circuits(args) -> int:
    g = _read_graph(args.input)
    sc = circ.enumerate_signed_circuits(g)
    recs = [{"kind": s.kind, "edges": sorted(s.edges)} for s in sc]
    text = "\n".join(f"{r['kind']} {' '.join(map(str, r['edges']))}" for r in recs) or "(no signed circuits)"
    _emit(args, {"signed_circuits": recs}, text)
    return EXIT_OK


def cmd_cover(args) -> int:
    g = _read_graph(args.input)
    cert = find_k_cover(g, args.k, node_budget=args.budget)
    if cert is None:
        _emit(args, {"k": args.k, "feasible": False}, f"no {args.k}-cover exists")
        return EXIT_FAIL
    if not verify_cover(g, cert):
        raise AssertionError("solver produced an invalid certificate")
    _emit(args, dict(_cert_payload(cert), feasible=True), _cert_text(cert))
    return EXIT_OK


def cmd_min_cover(args) -> int:
    g = _read_graph(args.input)
    cert = min_uniform_cover_certificate(g, args.max, args.budget)
    if cert is None:
        _emit(args, {"max": args.max, "min_k": None}, f"no k-cover for k <= {args.max}")
        return EXIT_FAIL
    if not verify_cover(g, cert):
        raise AssertionError("solver produced an invalid certificate")
    payload = dict(_cert_payload(cert), min_k=cert.k, max=args.max)
    _emit(args, payload, f"min_k: {cert.k}\n" + _cert_text(cert))
    return EXIT_OK


def _decomposition_payload(g, d) -> dict:
    h = intersection_graph(g, d)
    return {
        "circuits": d.edge_lists(),
        "balanced": list(h.balanced),
        "unbalanced_count": d.unbalanced,
        "certified": d.certified,
        "intersection": [{"pair": [i, j], "shared_vertices": k} for (i, j), k in sorted(h.shared.items())],
    }


def _decomposition_text(payload: dict) -> str:
    lines = [f"circuits: {len(payload['circuits'])}", f"unbalanced: {payload['unbalanced_count']}"]
    for i, (c, b) in enumerate(zip(payload["circuits"], payload["balanced"])):
        lines.append(f"  C{i} {'balanced' if b else 'unbalanced'}: {' '.join(map(str, c))}")
    for item in payload["intersection"]:
        i, j = item["pair"]
        lines.append(f"  H C{i}-C{j} shared {item['shared_vertices']}")
    return "\n".join(lines)


def cmd_decompose(args) -> int:
    g = _read_graph(args.input)
    if args.all:
        ds = all_decompositions(g)
        payloads = [_decomposition_payload(g, d) for d in ds]
        text = f"decompositions: {len(ds)}\n" + "\n\n".join(_decomposition_text(p) for p in payloads)
        _emit(args, {"decompositions": payloads}, text)
        return EXIT_OK
    d = optimal_decomposition(g, allow_greedy=args.greedy) if args.optimal else one_decomposition(g)
    p = _decomposition_payload(g, d)
    _emit(args, p, _decomposition_text(p))
    return EXIT_OK


def cmd_necklace(args) -> int:
    if args.build is not None:
        lengths = [int(x) for x in args.lengths.split(",")] if args.lengths else None
        g = build_necklace(args.build, lengths, args.negative_index)
        if args.format == "json":
            edges = [[*g.ends(e), g.sign(e)] for e in g.edges]
            print(json.dumps({"k": args.build, "edges": edges}, indent=2))
        else:
            sys.stdout.write(format_edge_list(g))
        return EXIT_OK
    g = _read_graph(args.detect)
    s = detect_necklace(g)
    if s is None:
        _emit(args, {"necklace": False}, "necklace: false")
        return EXIT_FAIL
    payload = {
        "necklace": True,
        "length": s.length,
        "hubs": list(s.hubs),
        "profile": list(s.profile),
        "small_circuits": [sorted(sc.edges) for sc in s.small_circuits],
        "negative_pair": list(s.negative_pair),
        "switch_set": sorted(s.switch_set),
    }
    text = "\n".join(
        [
            "necklace: true",
            f"length: {s.length}",
            f"hubs: {' '.join(map(str, s.hubs))}",
            f"profile: {' '.join(map(str, s.profile))}",
            f"negative_pair: {s.negative_pair[0]} {s.negative_pair[1]}",
            f"switch_set: {' '.join(map(str, sorted(s.switch_set)))}",
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_sweep(args) -> int:
    report = run_sweep(args.property, args.max_v, args.max_e, args.max_path, args.jobs)
    if args.save_counterexamples:
        out = Path(args.save_counterexamples)
        out.mkdir(parents=True, exist_ok=True)
        for i, item in enumerate(report.counterexamples):
            header = f"{report.property}: {item['detail']}\n"
            (out / f"{report.property}_{i:04d}.txt").write_text(
                "".join(f"# {ln}\n" for ln in header.splitlines()) + item["graph"]
            )
    if args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    if report.counterexamples:
        return EXIT_FAIL
    if report.inconclusive:
        return EXIT_LIMIT
    return EXIT_OK


def cmd_lemma(args) -> int:
    g = _read_graph(args.input)
    out = check_property(args.name, g)
    _emit(
        args,
        {"property": args.name, "status": out.status, "detail": out.detail, "value": out.value},
        f"property: {args.name}\nstatus: {out.status}" + (f"\ndetail: {out.detail}" if out.detail else ""),
    )
    return {"pass": EXIT_OK, "skip": EXIT_OK, "fail": EXIT_FAIL}.get(out.status, EXIT_LIMIT)


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="signedcover", description="Signed circuit covers of signed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        p = sub.add_parser(name, parents=[fmt], help=help_text)
        p.add_argument("input", help="edge-list file, or - for standard input")
        p.set_defaults(func=func)
        return p

    graph_cmd("analyze", cmd_analyze, "balance, Eulerian, flow-admissibility, coloops")
    graph_cmd("circuits", cmd_circuits, "list every circuit")
    graph_cmd("signed-circuits", cmd_signed_circuits, "list balanced circuits and barbells")
    p = graph_cmd("cover", cmd_cover, "find a k-cover")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p = graph_cmd("min-cover", cmd_min_cover, "least k with a k-cover")
    p.add_argument("--max", type=int, default=6)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p = graph_cmd("decompose", cmd_decompose, "circuit decompositions")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--optimal", action="store_true")
    mode.add_argument("--all", action="store_true")
    p.add_argument("--greedy", action="store_true", help="with --optimal, fall back to an uncertified greedy pass on large graphs")

    p = sub.add_parser("necklace", parents=[fmt], help="detect or build necklaces")
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--detect", metavar="INPUT")
    how.add_argument("--build", type=int, metavar="K")
    p.add_argument("--lengths", help="2K comma-separated thread lengths")
    p.add_argument("--negative-index", type=int, default=0)
    p.set_defaults(func=cmd_necklace)

    p = sub.add_parser("sweep", parents=[fmt], help="check a property on every small instance")
    p.add_argument("--property", required=True, choices=sorted(PROPERTIES))
    p.add_argument("--max-v", type=int, default=5)
    p.add_argument("--max-e", type=int, default=8)
    p.add_argument("--max-path", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--save-counterexamples", metavar="DIR")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lemma", parents=[fmt], help="check one property on one graph")
    p.add_argument("name", choices=sorted(PROPERTIES))
    p.add_argument("input")
    p.set_defaults(func=cmd_lemma)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
