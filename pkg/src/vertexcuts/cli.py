"""Command-line interface.

Machine-readable JSON on stdout for every subcommand; ``--pretty`` adds an
indented rendering.  All randomized commands take ``--seed`` and identical
seeds with identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dot import graph_to_dot
from .errors import VertexCutError
from .flow import vertex_connectivity
from .graph import format_edge_list, load_edge_list
from .index import build, deserialize, query, serialize
from .oracle import enumerate_min_cuts
from .report import write_report
from .sparsify import nagamochi_ibaraki
from .structure import (
    CrossingMatchingRelation,
    LaminarRelation,
    SmallRelation,
    WheelRelation,
    classify_pair,
)
from .suites import SUITES, run_suite


def _emit(doc: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))


def _parse_set(text: str, to_id: dict[str, int]) -> frozenset[int]:
    out = set()
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok not in to_id:
            raise VertexCutError(f"unknown vertex label {tok!r}")
        out.add(to_id[tok])
    return frozenset(out)


def _labels_of(labels: tuple[str, ...], vs) -> list[str]:
    return sorted((labels[v] for v in vs), key=lambda s: (len(s), s))


def _cmd_sparsify(args) -> int:
    g, labels = load_edge_list(args.graph)
    h = nagamochi_ibaraki(g, args.k)
    text = format_edge_list(h, labels)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        _emit({"edges": h.m, "n": h.n, "written": args.output}, args.pretty)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_connectivity(args) -> int:
    g, labels = load_edge_list(args.graph)
    kappa, cut = vertex_connectivity(g)
    doc = {
        "kappa": kappa,
        "cut": _labels_of(labels, cut) if cut is not None else None,
        "complete": cut is None,
    }
    _emit(doc, args.pretty)
    return 0


def _cmd_build_index(args) -> int:
    g, labels = load_edge_list(args.graph)
    if list(labels) != [str(i) for i in range(g.n)]:
        raise VertexCutError("index construction requires 0..n-1 vertex labels")
    ix = build(g, seed=args.seed, mode=args.mode)
    blob = serialize(ix)
    with open(args.output, "wb") as fh:
        fh.write(blob)
    _emit(
        {"n": ix.n, "kappa": ix.kappa, "t": ix.t, "bytes": len(blob), "written": args.output},
        args.pretty,
    )
    return 0


def _cmd_query(args) -> int:
    with open(args.index, "rb") as fh:
        ix = deserialize(fh.read())
    ans = query(ix, args.u, args.v)
    doc = {"u": args.u, "v": args.v, "kappa": ix.kappa, "verdict": ans.verdict}
    if ans.verdict == "separated":
        doc["cut"] = sorted(ans.cut)
        doc["connectivity"] = ix.kappa
    elif ans.verdict == "mixed-separated":
        doc["edge"] = list(ans.edge)
        doc["vertices"] = sorted(ans.vertices)
        doc["connectivity"] = ix.kappa
    else:
        doc["connectivity"] = f">={ix.kappa + 1}"
    _emit(doc, args.pretty)
    return 0


def _relation_doc(rel, labels) -> dict:
    if isinstance(rel, LaminarRelation):
        return {"type": "laminar", "host_side": rel.host_side, "guest_side": rel.guest_side}
    if isinstance(rel, SmallRelation):
        return {
            "type": "small",
            "which": rel.which,
            "small_sides": [_labels_of(labels, s) for s in rel.small_sides],
        }
    if isinstance(rel, CrossingMatchingRelation):
        return {
            "type": "crossing-matching",
            "side_a": rel.side_a,
            "pivot": _labels_of(labels, rel.pivot),
            "matched": _labels_of(labels, rel.matched),
        }
    if isinstance(rel, WheelRelation):
        wh = rel.wheel
        return {
            "type": "wheel",
            "center": _labels_of(labels, wh.center),
            "spokes": [_labels_of(labels, c) for c in wh.spokes],
            "sectors": [_labels_of(labels, s) for s in wh.sectors],
        }
    raise VertexCutError(f"unknown relation {rel!r}")


def _cmd_classify(args) -> int:
    g, labels = load_edge_list(args.graph)
    to_id = {lab: i for i, lab in enumerate(labels)}
    u = _parse_set(args.cut_a, to_id)
    w = _parse_set(args.cut_b, to_id)
    kappa, _ = vertex_connectivity(g)
    rel = classify_pair(g, u, w, kappa)
    doc = {"kappa": kappa, "relation": _relation_doc(rel, labels)}
    _emit(doc, args.pretty)
    return 0


def _cmd_enumerate_cuts(args) -> int:
    g, labels = load_edge_list(args.graph)
    kappa, cuts = enumerate_min_cuts(g, max_n=args.max_n, max_kappa=args.max_kappa)
    doc = {
        "kappa": kappa,
        "count": len(cuts),
        "cuts": sorted(sorted(_labels_of(labels, c)) for c in cuts),
    }
    _emit(doc, args.pretty)
    return 0


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.seed)
    failures = sum(1 for r in reports if not r["ok"])
    doc = {
        "suite": args.suite,
        "seed": args.seed,
        "instances": len(reports),
        "failures": failures,
        "reports": reports,
    }
    if args.report_dir:
        doc["artifacts"] = write_report(args.report_dir, args.suite, reports)
    _emit(doc, args.pretty)
    return 1 if failures else 0


def _cmd_export_dot(args) -> int:
    g, labels = load_edge_list(args.graph)
    to_id = {lab: i for i, lab in enumerate(labels)}
    cut = _parse_set(args.cut, to_id) if args.cut else None
    center = _parse_set(args.wheel_center, to_id) if args.wheel_center is not None else None
    spokes = (
        [_parse_set(part, to_id) for part in args.wheel_spokes.split("|")]
        if args.wheel_spokes
        else None
    )
    text = graph_to_dot(g, labels, cut=cut, wheel_center=center, wheel_spokes=spokes)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vertexcuts",
        description="Minimum vertex cut structure and (kappa+1)-connectivity queries",
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sparsify", help="connectivity-preserving sparse subgraph")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_sparsify)

    p = sub.add_parser("connectivity", help="kappa(G) with a witness cut")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_connectivity)

    p = sub.add_parser("build-index", help="build the small-cut index")
    p.add_argument("graph")
    p.add_argument("--mode", choices=("exact", "randomized"), default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_build_index)

    p = sub.add_parser("query", help="(kappa+1)-connectivity query via an index")
    p.add_argument("--index", required=True)
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("classify", help="relation between two minimum cuts")
    p.add_argument("graph")
    p.add_argument("--cut-a", required=True, help="comma-separated labels")
    p.add_argument("--cut-b", required=True, help="comma-separated labels")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate-cuts", help="all minimum cuts (desk scale)")
    p.add_argument("graph")
    p.add_argument("--max-n", type=int, default=16)
    p.add_argument("--max-kappa", type=int, default=5)
    p.set_defaults(func=_cmd_enumerate_cuts)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-dir", help="write JSON + CSV + figure here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export-dot", help="DOT text with a highlighted cut or wheel")
    p.add_argument("graph")
    p.add_argument("--cut")
    p.add_argument("--wheel-center", default=None)
    p.add_argument("--wheel-spokes", default=None, help="spoke sets separated by |")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VertexCutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
