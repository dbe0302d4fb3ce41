"""Command-line front end (`mull`).

Output is deterministic byte-for-byte for identical invocations, with or
without a warm cache.  Exit status: 0 on success, 1 when a verification
command finds a failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijections import distinct_to_symmetric, symmetric_to_distinct
from .cache import Cache
from .characters import (
    CountsTable,
    counts_table,
    fixed_size_bound,
    verify_identity,
)
from .export import graph_to_dot, graph_to_jsonl
from .folding import check_fold_relations, fold_cartan, unfold
from .involution import fixed_set, irr_alternating_count, mullineux, mullineux_map
from .partitions import CrystalKind, format_partition, parse_partition
from .twisted import canonical_path_twisted, enumerate_twisted
from .typea import enumerate_kleshchev

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _kind_from(args) -> CrystalKind:
    return CrystalKind(args.kind, args.ell)


def _fixed_payload(e: int, n: int) -> str:
    records = fixed_set(e, n)
    lines = [_dump({"n": rec.n, "partition": list(rec.partition),
                    "residue_profile": list(rec.residue_profile)})
             for rec in records]
    return "\n".join(lines) + ("\n" if lines else "")


def cmd_compute(args) -> int:
    lam = parse_partition(args.partition)
    print(format_partition(mullineux(lam, args.e)))
    return EXIT_OK


def cmd_fixed(args) -> int:
    cache = Cache()
    payload = cache.fetch(("fixed", f"e{args.e}", f"n{args.n}"),
                          lambda: _fixed_payload(args.e, args.n))
    if args.profile:
        sys.stdout.write(payload)
        return EXIT_OK
    for line in payload.splitlines():
        print(format_partition(tuple(json.loads(line)["partition"])))
    return EXIT_OK


def _export_payload(args) -> str:
    if args.kind == "typea":
        graph = enumerate_kleshchev(args.e, args.bound)
        header = {"bound": args.bound, "e": args.e, "format": "mull.crystal",
                  "kind": "typea", "version": 1}
    else:
        kind = _kind_from(args)
        graph = enumerate_twisted(kind, args.bound)
        header = {"bound": args.bound, "ell": args.ell, "format": "mull.crystal",
                  "kind": args.kind, "version": 1}
    if args.format == "dot":
        return graph_to_dot(graph)
    return graph_to_jsonl(graph, header)


def cmd_crystal_export(args) -> int:
    if args.kind == "typea":
        if args.e is None:
            raise ValueError("--kind typea requires -e")
        param = f"e{args.e}"
    else:
        if args.ell is None:
            raise ValueError(f"--kind {args.kind} requires --ell")
        param = f"ell{args.ell}"
    cache = Cache()
    payload = cache.fetch(
        ("export", args.kind, param, f"b{args.bound}", args.format),
        lambda: _export_payload(args))
    sys.stdout.write(payload)
    return EXIT_OK


def cmd_twisted_path(args) -> int:
    kind = _kind_from(args)
    lam = parse_partition(args.partition)
    word = canonical_path_twisted(lam, kind)
    print(",".join(str(x) for x in word) if word else "-")
    return EXIT_OK


def cmd_eta(args) -> int:
    kind = _kind_from(args)
    lam = parse_partition(args.partition)
    if args.check:
        report = check_fold_relations(lam, kind)
        print(_dump(report.to_dict()))
        return EXIT_OK if report.ok else EXIT_VERIFY_FAILED
    print(format_partition(unfold(lam, kind)))
    return EXIT_OK


def cmd_bijection(args) -> int:
    lam = parse_partition(args.partition)
    image = (distinct_to_symmetric(lam) if args.direction == "dp2sp"
             else symmetric_to_distinct(lam))
    print(format_partition(image))
    return EXIT_OK


def cmd_fold_cartan(args) -> int:
    folded = fold_cartan(args.e)
    for row in folded.matrix:
        print(" ".join(str(entry) for entry in row))
    return EXIT_OK


def _counts_payload(e: int, bound: int) -> str:
    table = counts_table(e, bound, mullineux_map(e, bound))
    lines = [_dump({"count": count, "m": m, "mp": mp, "n": n})
             for (n, m, mp), count in sorted(table.counts.items())]
    return "\n".join(lines) + ("\n" if lines else "")


def _table_from_payload(e: int, bound: int, payload: str) -> CountsTable:
    counts = {}
    for line in payload.splitlines():
        rec = json.loads(line)
        counts[(rec["n"], rec["m"], rec["mp"])] = rec["count"]
    return CountsTable(e, e // 2, bound, counts)


def cmd_verify(args) -> int:
    kind = _kind_from(args)
    bound = fixed_size_bound(kind, args.max_deg)
    cache = Cache()
    payload = cache.fetch(("counts", f"e{kind.e}", f"s{bound}"),
                          lambda: _counts_payload(kind.e, bound))
    table = _table_from_payload(kind.e, bound, payload)
    report = verify_identity(kind, args.max_deg, table=table)
    if args.json:
        print(_dump(report.to_dict()))
    else:
        print("degree lhs rhs-from-counts rhs-from-crystal status")
        for row in report.rows:
            status = "ok" if row.ok else "MISMATCH"
            print(f"{row.degree} {row.lhs} {row.rhs_counts} {row.rhs_crystal} {status}")
        print("PASS" if report.ok else "FAIL")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_alt_count(args) -> int:
    print(irr_alternating_count(args.e, args.n))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mull",
        description="Mullineux involution, good-node crystals, and exact "
                    "fixed-point counting identities on partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Mullineux image of an e-regular partition")
    p.add_argument("-e", type=int, required=True)
    p.add_argument("partition")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("fixed", help="Mullineux-fixed partitions of n")
    p.add_argument("-e", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--profile", action="store_true",
                   help="emit JSON records with residue profiles")
    p.set_defaults(func=cmd_fixed)

    p = sub.add_parser("crystal", help="crystal graph utilities")
    crystal_sub = p.add_subparsers(dest="crystal_command", required=True)
    pe = crystal_sub.add_parser("export", help="export a level-bounded crystal graph")
    pe.add_argument("--kind", choices=("typea", "odd", "even"), required=True)
    pe.add_argument("-e", type=int, default=None)
    pe.add_argument("--ell", type=int, default=None)
    pe.add_argument("--bound", type=int, required=True)
    pe.add_argument("--format", choices=("dot", "jsonl"), required=True)
    pe.set_defaults(func=cmd_crystal_export)

    p = sub.add_parser("twisted", help="twisted crystal utilities")
    twisted_sub = p.add_subparsers(dest="twisted_command", required=True)
    pt = twisted_sub.add_parser("path", help="residue word from empty to a class member")
    pt.add_argument("--kind", choices=("odd", "even"), required=True)
    pt.add_argument("--ell", type=int, required=True)
    pt.add_argument("partition")
    pt.set_defaults(func=cmd_twisted_path)

    p = sub.add_parser("eta", help="Mullineux-fixed image of a twisted-crystal vertex")
    p.add_argument("--kind", choices=("odd", "even"), required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="emit the JSON relation report instead of the image")
    p.add_argument("partition")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("bijection", help="distinct-parts <-> symmetric partitions")
    p.add_argument("direction", choices=("dp2sp", "sp2dp"))
    p.add_argument("partition")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("fold-cartan", help="folded affine Cartan matrix for e")
    p.add_argument("-e", type=int, required=True)
    p.set_defaults(func=cmd_fold_cartan)

    p = sub.add_parser("verify", help="three-way check of the counting identity")
    p.add_argument("--kind", choices=("odd", "even"), required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("alt-count", help="irreducible count from the fixed-point formula")
    p.add_argument("-e", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_alt_count)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
