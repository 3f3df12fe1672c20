"""Command-line interface: bound, decide, reduce, check, enumerate, iso.

Text output goes to stdout in a stable, diff-friendly shape; `--json` swaps
in a machine-readable report carrying the tool version and the effective
configuration.  Exit codes: 0/1/2 mirror the decide verdict (Integrable /
NotIntegrable / Inconclusive); `check` exits 1 on any failed clause; `iso`
exits 1 on non-isomorphic inputs; 3 signals usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .abelian import d as abelian_d
from .abelian import describe
from .cohomology import reduce_integral
from .enumeration import (
    CatalogEntry,
    catalog_load,
    catalog_store,
    groups_of_order,
)
from .group import GroupError, GroupTable
from .groupfile import format_table, load_group_file
from .integrability import (
    INTEGRABLE,
    INCONCLUSIVE,
    NOT_INTEGRABLE,
    bound,
    decide,
    lemma_suite,
)
from .isomorphism import DEFAULT_AUT_CAP, aut_order, fingerprint, isomorphic, mu

__all__ = ["main", "entry"]

_VERDICT_EXIT = {INTEGRABLE: 0, NOT_INTEGRABLE: 1, INCONCLUSIVE: 2}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; this tool reserves 2 for Inconclusive."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="integra", description=__doc__)
    parser.add_argument("--version", action="version", version=f"integra {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, catalog: bool = False) -> None:
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="parallelism degree (accepted for compatibility; runs sequentially)")
        if catalog:
            p.add_argument("--cap", type=int, default=None, metavar="N",
                           help="stop the order scan at N even if the bound is larger")
            p.add_argument("--catalog", default=None, metavar="DIR",
                           help="directory for persisted catalogs (default: $INTEGRA_CATALOG)")
            p.add_argument("--a5", action="store_true",
                           help="enable the A5 fixture so order 60 can be enumerated")

    p = sub.add_parser("bound", help="print the integral-order bound for a group")
    p.add_argument("file", help="group file (%%table or %%perm)")
    common(p)

    p = sub.add_parser("decide", help="decide integrability by exhaustive search")
    p.add_argument("file")
    p.add_argument("--emit-table", action="store_true", help="include the witness table")
    common(p, catalog=True)

    p = sub.add_parser("reduce", help="run the kernel-shrinking reduction pipeline")
    p.add_argument("file")
    p.add_argument("--emit-table", action="store_true", help="include the output table")
    common(p)

    p = sub.add_parser("check", help="evaluate the structural lemma clauses")
    p.add_argument("file")
    p.add_argument("--aut-cap", type=int, default=DEFAULT_AUT_CAP, metavar="N",
                   help="cap on the enumerated automorphism list for clause (vi)")
    common(p)

    p = sub.add_parser("enumerate", help="list all groups of one order")
    p.add_argument("--order", type=int, required=True, metavar="N")
    p.add_argument("--emit-table", action="store_true", help="include every table")
    common(p, catalog=True)

    p = sub.add_parser("iso", help="test two groups for isomorphism")
    p.add_argument("file")
    p.add_argument("other")
    common(p)

    return parser


def _config(args: argparse.Namespace) -> dict:
    cfg = {"jobs": getattr(args, "jobs", 1)}
    for key in ("cap", "catalog", "a5", "aut_cap", "order"):
        if hasattr(args, key):
            cfg[key] = getattr(args, key)
    return cfg


def _echo(args: argparse.Namespace) -> None:
    cfg = ", ".join(f"{k}={v}" for k, v in _config(args).items())
    print(f"# integra {__version__} ({cfg})", file=sys.stderr)


def _emit_json(args: argparse.Namespace, payload: dict) -> None:
    payload["version"] = __version__
    payload["config"] = _config(args)
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _catalog_dir(args: argparse.Namespace) -> str | None:
    return args.catalog or os.environ.get("INTEGRA_CATALOG") or None


def _make_provider(args: argparse.Namespace):
    directory = _catalog_dir(args)

    def provider(order: int) -> list[CatalogEntry]:
        if directory is not None:
            entries, found = catalog_load(order, directory)
            if found:
                return entries
        entries = groups_of_order(order, include_a5=args.a5)
        if directory is not None:
            Path(directory).mkdir(parents=True, exist_ok=True)
            catalog_store(entries, directory)
        return entries

    return provider


def _load(path: str) -> GroupTable:
    return load_group_file(path)


def _validate_caps(parser: _Parser, args: argparse.Namespace) -> None:
    for key in ("cap", "aut_cap", "jobs"):
        value = getattr(args, key, None)
        if value is not None and value < 1:
            parser.error(f"--{key.replace('_', '-')} must be positive, got {value}")


def _histogram_str(fp) -> str:
    return " ".join(f"{order}^{count}" for order, count in fp.order_histogram)


def cmd_bound(args: argparse.Namespace) -> int:
    g = _load(args.file)
    value = bound(g)
    if g.n == 1:
        if args.json:
            _emit_json(args, {"bound": str(value), "order": 1})
        else:
            print("bound = 1")
        return 0
    parts = {
        "aut": aut_order(g),
        "z": len(g.center()),
        "mu": mu(g),
        "d": abelian_d(g.subgroup(g.center())[0]),
    }
    if args.json:
        _emit_json(args, {"bound": str(value), "order": g.n, **parts})
    else:
        detail = ", ".join(f"{k}={v}" for k, v in parts.items())
        print(f"bound = {value} ({detail})")
    return 0


def cmd_decide(args: argparse.Namespace) -> int:
    g = _load(args.file)
    start = time.perf_counter()
    outcome = decide(g, cap=args.cap, include_a5=args.a5, provider=_make_provider(args))
    total = time.perf_counter() - start

    if args.json:
        payload = {
            "verdict": outcome.verdict,
            "bound": str(outcome.bound),
            "witness_order": outcome.witness_order,
            "searched_orders": list(outcome.searched_orders),
            "cap_applied": outcome.cap_applied,
            "reason": outcome.reason,
            "timings": {
                "per_order": {str(m): round(t, 6) for m, t in outcome.timings.items()},
                "total_s": round(total, 6),
            },
        }
        if args.emit_table and outcome.witness_group is not None:
            payload["witness_table"] = format_table(outcome.witness_group)
        _emit_json(args, payload)
    else:
        print(f"verdict = {outcome.verdict}")
        print(f"bound = {outcome.bound}")
        if outcome.witness_order is not None:
            print(f"witness order = {outcome.witness_order}")
        print(f"searched orders = {', '.join(map(str, outcome.searched_orders)) or '(none)'}")
        if outcome.cap_applied is not None:
            print(f"cap applied = {outcome.cap_applied}")
        if outcome.reason:
            print(f"reason: {outcome.reason}")
        if args.emit_table and outcome.witness_group is not None:
            print(format_table(outcome.witness_group), end="")
    return _VERDICT_EXIT[outcome.verdict]


def cmd_reduce(args: argparse.Namespace) -> int:
    h = _load(args.file)
    q, report = reduce_integral(h)
    if args.json:
        payload = report.to_dict()
        if args.emit_table:
            payload["table"] = format_table(q)
        _emit_json(args, payload)
    else:
        print(f"input order = {report.input_order}")
        print(f"center order = {report.center_order}")
        print(f"alpha = {report.alpha}")
        print(f"center factors = {list(report.center_factors)}")
        print(f"enlarged factors = {list(report.enlarged_factors)}")
        print(f"omega order = {report.omega_order}")
        print(f"output order = {report.output_order}")
        print(f"derived subgroup: {report.input_derived} -> {report.output_derived}")
        verdict = "ok" if report.bound_ok else "VIOLATED"
        print(f"bound check: {report.output_order} <= {report.bound_value} {verdict}")
        if args.emit_table:
            print(format_table(q), end="")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    h = _load(args.file)
    report = lemma_suite(h, aut_cap=args.aut_cap)
    if args.json:
        _emit_json(
            args,
            {
                "subject_order": report.subject_order,
                "ok": report.ok,
                "clauses": [
                    {"clause": c.clause, "status": c.status, "detail": c.detail}
                    for c in report.clauses
                ],
            },
        )
    else:
        for c in report.clauses:
            print(f"{c.clause:<11} {c.status.upper():<7} {c.detail}")
        print(f"result: {'all clauses hold' if report.ok else 'clause failure'}")
    return 0 if report.ok else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    provider = _make_provider(args)
    entries = provider(args.order)
    if args.json:
        payload_entries = []
        for pos, entry in enumerate(entries, start=1):
            item = {
                "index": pos,
                "description": describe(entry.table),
                "provenance": entry.provenance,
                "abelian": entry.fingerprint.abelian,
                "exponent": entry.fingerprint.exponent,
                "center_order": entry.fingerprint.center_order,
                "order_histogram": [list(pair) for pair in entry.fingerprint.order_histogram],
                "class_sizes": list(entry.fingerprint.class_sizes),
            }
            if args.emit_table:
                item["table"] = format_table(entry.table)
            payload_entries.append(item)
        _emit_json(args, {"order": args.order, "count": len(entries), "entries": payload_entries})
    else:
        print(f"{len(entries)} groups of order {args.order}")
        for pos, entry in enumerate(entries, start=1):
            fp = entry.fingerprint
            print(
                f"[{pos}] {describe(entry.table)} | provenance={entry.provenance} "
                f"| exponent={fp.exponent} | center={fp.center_order} "
                f"| element orders {_histogram_str(fp)}"
            )
            if args.emit_table:
                print(format_table(entry.table), end="")
    return 0


def cmd_iso(args: argparse.Namespace) -> int:
    g = _load(args.file)
    h = _load(args.other)
    witness = isomorphic(g, h)
    if witness is not None:
        mapping = [int(x) for x in witness.image]
        if args.json:
            _emit_json(args, {"isomorphic": True, "witness": mapping})
        else:
            print("isomorphic")
            print(f"witness: {mapping}")
        return 0
    if g.n != h.n:
        label = "order"
    else:
        label = fingerprint(g).first_difference(fingerprint(h)) or "exhaustive search"
    if args.json:
        _emit_json(args, {"isomorphic": False, "first_difference": label})
    else:
        print(f"non-isomorphic ({label})")
    return 1


_COMMANDS = {
    "bound": cmd_bound,
    "decide": cmd_decide,
    "reduce": cmd_reduce,
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "iso": cmd_iso,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _validate_caps(parser, args)
    if not args.json:
        _echo(args)
    try:
        return _COMMANDS[args.command](args)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
