"""Command-line front end: list the identity catalog, run verifications,
dump series and Hall-Littlewood polynomials, emit structured reports.

Exit codes: 0 all requested checks match, 1 any mismatch/error (witness
printed), 2 usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .hall import hl_poly
from .identities import REGISTRY, dump_expressions, dump_series, run_identity, verify_all
from .partitions import Partition

SCHEMA = "qhall-report/1"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qhall",
        description="Exact verification of Hall-Littlewood / q-series identities.",
    )
    sub = parser.add_subparsers(dest="command")

    p_list = sub.add_parser("list", help="list the identity catalog")
    p_list.add_argument("--output", choices=("human", "structured"), default="human")

    p_verify = sub.add_parser("verify", help="verify one identity")
    p_verify.add_argument("identity")
    _common_flags(p_verify)

    p_all = sub.add_parser("verify-all", help="verify the whole catalog")
    _common_flags(p_all)

    p_dump = sub.add_parser("dump", help="dump a named series or a Hall-Littlewood polynomial")
    dump_sub = p_dump.add_subparsers(dest="target")
    p_ds = dump_sub.add_parser("series", help="dump a registered series expression")
    p_ds.add_argument("expr")
    p_ds.add_argument("--q-order", type=int, default=12)
    p_dh = dump_sub.add_parser("hl", help="dump P_lambda in n variables")
    p_dh.add_argument("partition", help='e.g. "(2,1)" or "()"')
    p_dh.add_argument("n", type=int)
    p_dh.add_argument("--q-square", action="store_true")

    return parser


def _common_flags(p):
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q-order", type=int, dest="q_order")
    p.add_argument("--z-order", type=int, dest="z_order")
    p.add_argument("--points", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--profile",
        choices=("quick", "full"),
        default=os.environ.get("QHALL_PROFILE", "quick"),
    )
    p.add_argument("--output", choices=("human", "structured"), default="human")


def _overrides(args):
    return {
        "k": args.k,
        "n": args.n,
        "q_order": args.q_order,
        "z_order": args.z_order,
        "points": args.points,
        "seed": args.seed,
    }


def _emit_reports(reports, output):
    if output == "structured":
        doc = {"schema": SCHEMA, "reports": [r.to_dict() for r in reports]}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.human_line())
    return 0 if all(r.status == "match" for r in reports) else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "list":
        if args.output == "structured":
            doc = {
                "schema": SCHEMA,
                "identities": [
                    {"id": e.id, "strategy": e.strategy, "description": e.description}
                    for e in sorted(REGISTRY.values(), key=lambda e: e.id)
                ],
                "series_expressions": dump_expressions(),
            }
            print(json.dumps(doc, indent=2, sort_keys=True))
        else:
            for e in sorted(REGISTRY.values(), key=lambda e: e.id):
                print(f"{e.id:<22} {e.strategy:<18} {e.description}")
        return 0

    if args.command == "verify":
        if args.identity not in REGISTRY:
            print(
                f"unknown identity {args.identity!r}; run `qhall list` for the catalog",
                file=sys.stderr,
            )
            return 2
        report = run_identity(args.identity, args.profile, _overrides(args))
        return _emit_reports([report], args.output)

    if args.command == "verify-all":
        reports = verify_all(args.profile, args.seed)
        return _emit_reports(reports, args.output)

    if args.command == "dump":
        if args.target == "series":
            try:
                s = dump_series(args.expr, args.q_order)
            except KeyError:
                print(f"unknown series expression {args.expr!r}", file=sys.stderr)
                return 2
            for e, c in s.serialize():
                print(f"{e}\t{c}")
            return 0
        if args.target == "hl":
            try:
                lam = Partition.parse(args.partition)
            except ValueError as exc:
                print(str(exc), file=sys.stderr)
                return 2
            if args.n < 1:
                print("n must be positive", file=sys.stderr)
                return 2
            p = hl_poly(lam, args.n, q_square=args.q_square)
            for line in p.dump_lines() or ["0"]:
                print(line)
            return 0
        print("dump target must be `series` or `hl`", file=sys.stderr)
        return 2

    parser.print_usage(sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
