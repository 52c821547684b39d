"""Command line front end: ``subsum {build,invariants,sweep,reconstruct,prime}``."""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import asdict
from pathlib import Path

from .closed_form import predict_invariants, predict_prime_sum
from .errors import SubsumError
from .graphs import (
    build_extended,
    build_generalized,
    build_subgroup_sum,
    components_with_profiles,
    from_json,
    to_dot,
    to_json,
)
from .groups import classify_cosets
from .literals import parse_group, parse_subgroup
from .oracle import oracle_invariants
from .reconstruct import analyze_extended, analyze_subgroup_sum
from .verify import SweepConfig, _render, diff_reports, sweep


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_build(args) -> int:
    g = parse_group(args.group)
    h = parse_subgroup(g, args.subgroup)
    if args.variant == "extended":
        gr = build_extended(g, h)
    elif args.variant == "sum":
        gr = build_subgroup_sum(g, h)
    else:
        if args.kernel is None:
            raise SubsumError("--variant generalized needs -K")
        gr = build_generalized(g, h, parse_subgroup(g, args.kernel))
    text = to_json(gr) if args.json else to_dot(gr, f"{args.variant} {g}")
    _emit(text, args.out)

    census = Counter(str(p) for _, p in components_with_profiles(gr))
    info = sys.stdout if args.out else sys.stderr
    print(f"{g}, |H|={h.k}: {gr.n} vertices, {gr.edge_count} edges, "
          f"{sum(census.values())} components", file=info)
    for name, count in sorted(census.items()):
        print(f"  {name} x{count}", file=info)
    return 0


def cmd_invariants(args) -> int:
    g = parse_group(args.group)
    h = parse_subgroup(g, args.subgroup)
    stats = classify_cosets(g, h)
    closed = oracle = None
    if args.engine in ("closed", "verify"):
        closed = predict_invariants(stats, str(g), args.subgroup)
    if args.engine in ("oracle", "verify"):
        oracle = oracle_invariants(g, h, args.max_hole, str(g), args.subgroup)
    if args.engine != "verify":
        _emit((closed or oracle).dumps(), args.out)
        return 0

    diffs = diff_reports(closed, oracle, stats)
    lines = []
    for d in diffs:
        status = "ok" if d.match else "MISMATCH"
        flag = f"  [{d.flag}]" if d.flag else ""
        lines.append(f"{status:8} {d.invariant:32} closed={_render(d.name, d.closed)} "
                     f"oracle={_render(d.name, d.oracle)}{flag}")
    _emit("\n".join(lines), args.out)
    bad = [d.invariant for d in diffs if not d.match]
    if bad:
        print("mismatched fields: " + ", ".join(bad), file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        max_order=args.max_order,
        min_order=args.min_order,
        group_family="given" if args.group else args.family,
        groups=args.group or [],
        subgroup_family="explicit" if args.subgroup else args.subgroups,
        subgroups=args.subgroup or [],
        engines=args.engine,
        max_hole=args.max_hole,
        jobs=args.jobs,
    )
    result = sweep(cfg)
    _emit(result.to_json() if args.json else result.to_csv(), args.out)
    print(json.dumps(result.summary()), file=sys.stderr)
    for err in result.errors:
        print(f"error: {err}", file=sys.stderr)
    return 1 if result.summary()["unflagged_mismatches"] else 0


def cmd_reconstruct(args) -> int:
    gr = from_json(Path(args.input).read_text())
    params = analyze_extended(gr) if args.mode == "extended" else analyze_subgroup_sum(gr)
    _emit(json.dumps(params.to_json()), args.out)
    return 0


def cmd_prime(args) -> int:
    g = parse_group(args.group)
    _emit(json.dumps(asdict(predict_prime_sum(g, args.prime)), indent=2), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subsum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, subgroup=True):
        p.add_argument("-g", "--group", required=True, help="factor orders, e.g. 4,2,9")
        if subgroup:
            p.add_argument("-H", "--subgroup", required=True,
                           help="n:<int> | gens:(a,b);(c,d) | full | zero")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("build", help="build a sum graph and export it")
    common(p)
    p.add_argument("-K", "--kernel", help="second subgroup for --variant generalized")
    p.add_argument("--variant", choices=["sum", "extended", "generalized"], default="sum")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz output (default)")
    fmt.add_argument("--json", action="store_true", help="JSON graph output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("invariants", help="compute or cross-check invariants")
    common(p)
    p.add_argument("--engine", choices=["closed", "oracle", "verify"], default="closed")
    p.add_argument("--max-hole", type=int, default=None,
                   help="also search odd holes/antiholes up to this length (oracle)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("sweep", help="verify closed forms against the oracle over a family")
    p.add_argument("--max-order", type=int, default=16)
    p.add_argument("--min-order", type=int, default=2)
    p.add_argument("--family", choices=["all-abelian", "cyclic"], default="all-abelian")
    p.add_argument("-g", "--group", action="append", help="explicit group (repeatable)")
    p.add_argument("--subgroups", choices=["all-nG", "all-single-generator", "corpus"],
                   default="all-nG")
    p.add_argument("-H", "--subgroup", action="append", help="explicit subgroup (repeatable)")
    p.add_argument("--engine", choices=["closed", "oracle", "both"], default="both")
    p.add_argument("--max-hole", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="CSV output (default)")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reconstruct", help="recover (G, H) parameters from a JSON graph")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=["extended", "sum"], required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("prime", help="prime sum graph report for H = pG")
    common(p, subgroup=False)
    p.add_argument("-p", "--prime", type=int, required=True)
    p.set_defaults(func=cmd_prime)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SubsumError, OSError) as exc:
        print(f"subsum: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
