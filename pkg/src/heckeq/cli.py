"""Command-line front end.

Commands::

    heckeq list        [--filter GLOB] [--controls]
    heckeq verify      (--id ID_OR_GLOB | --all | --manifest FILE) [--order N] ...
    heckeq inequality  (--id ID_OR_GLOB | --all) [--max-n N] [--bridge-order N]
    heckeq expand      (NAME | --id ID [--side lhs|rhs]) [--order N]

Exit status: 0 when every executed check passes, 1 on any MISMATCH or
violated inequality, 2 on usage errors, unknown ids and builder errors.
"""

from __future__ import annotations

import argparse
import fnmatch
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from . import partitions
from .identities import engine
from .identities.records import Status
from .identities.registry import CONTROL_REGISTRY, REGISTRY, all_ids
from .ring import DEFAULT_WEIGHTS

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def report_to_dict(rep) -> dict:
    mm = rep.mismatch
    return {
        "id": rep.id,
        "mode": rep.mode.value,
        "order": rep.order_used,
        "status": rep.status.value,
        "mismatch": None if mm is None else {
            "exponent": mm.exponent, "dega": mm.dega, "degb": mm.degb,
            "lhs": frac(mm.lhs), "rhs": frac(mm.rhs),
        },
        "elapsed_ms": rep.elapsed_ms,
    }


def _format_report(rep) -> str:
    line = f"{rep.status.value:<13} {rep.id:<24} {rep.mode.value:<18} order={rep.order_used:<4} {rep.elapsed_ms:.1f} ms"
    mm = rep.mismatch
    if mm is not None:
        where = f" ({mm.where})" if mm.where else ""
        line += (f"\n    first difference at q^{mm.exponent} a^{mm.dega} b^{mm.degb}{where}:"
                 f" lhs {frac(mm.lhs)} vs rhs {frac(mm.rhs)}")
    if rep.error:
        line += f"\n    {rep.error}"
    return line


def _select(pattern: Optional[str], include_controls: bool) -> list:
    """Ids matching an exact id, an alias or a glob."""
    if pattern is None:
        return all_ids(include_controls)
    try:
        return [engine.lookup(pattern).id]
    except engine.UnknownIdentityError as exc:
        pool = all_ids(include_controls)
        hits = [i for i in pool if fnmatch.fnmatchcase(i, pattern)]
        if not hits:
            raise UsageError(str(exc)) from None
        return hits


def _read_manifest(path: str) -> list:
    ids = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                ids.append(line)
    for rid in ids:
        engine.lookup(rid)
    return ids


def _emit(text: str, output: Optional[str]):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _check_order(value, name, minimum):
    if value is not None and value < minimum:
        raise UsageError(f"{name} must be >= {minimum}")


def cmd_list(args) -> int:
    ids = all_ids(args.controls)
    if args.filter:
        ids = [i for i in ids if fnmatch.fnmatchcase(i, args.filter)]
    rows = []
    for rid in ids:
        rec = REGISTRY.get(rid) or CONTROL_REGISTRY[rid]
        rows.append({"id": rid, "mode": rec.mode.value, "default_order": rec.default_order,
                     "description": rec.description})
    if args.format == "json":
        _emit(json.dumps(rows, indent=2), args.output)
    else:
        _emit("\n".join(f"{r['id']:<24} {r['mode']:<18} {r['default_order']:<4} {r['description']}"
                        for r in rows), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_order(args.order, "--order", engine.MIN_ORDER)
    _check_order(args.weighted_order, "--weighted-order", engine.MIN_ORDER)
    _check_order(args.transform_order, "--transform-order", engine.MIN_ORDER)
    _check_order(args.n_max, "--n-max", 0)
    if args.parallelism < 1:
        raise UsageError("--parallelism must be >= 1")
    if args.manifest:
        ids = _read_manifest(args.manifest)
    elif args.all:
        ids = all_ids(args.controls)
    elif args.id:
        ids = _select(args.id, include_controls=True)
    else:
        raise UsageError("verify needs --id, --all or --manifest")
    reports = engine.verify_all(order=args.order, parallelism=args.parallelism, ids=ids,
                                param_order=args.weighted_order, n_max=args.n_max,
                                transform_order=args.transform_order)
    if args.format == "json":
        _emit(json.dumps([report_to_dict(r) for r in reports], indent=2), args.output)
    else:
        lines = [_format_report(r) for r in reports]
        counts = {s: sum(r.status is s for r in reports) for s in Status}
        lines.append(", ".join(f"{s.value}: {n}" for s, n in counts.items()))
        _emit("\n".join(lines), args.output)
    statuses = {r.status for r in reports}
    if Status.BUILDER_ERROR in statuses:
        return EXIT_USAGE
    if Status.MISMATCH in statuses:
        return EXIT_FAIL
    return EXIT_OK


def _select_inequalities(pattern: Optional[str]) -> list:
    pool = sorted(partitions.INEQUALITIES)
    if pattern is None:
        return pool
    hits = [i for i in pool if fnmatch.fnmatchcase(i, pattern)]
    if not hits:
        import difflib

        near = difflib.get_close_matches(pattern, pool, n=3, cutoff=0.4)
        hint = f"; did you mean {', '.join(near)}?" if near else ""
        raise UsageError(f"unknown inequality id {pattern!r}{hint}")
    return hits


def cmd_inequality(args) -> int:
    _check_order(args.max_n, "--max-n", 0)
    if not args.all and not args.id:
        raise UsageError("inequality needs --id or --all")
    ids = _select_inequalities(None if args.all else args.id)
    table = partitions.cached_table(max(args.max_n, (args.bridge_order or 0)))
    rows, failed = [], False
    for iid in ids:
        t0 = time.perf_counter()
        rep = partitions.inequality_check(iid, args.max_n, table)
        row = {"id": iid, "max_n": args.max_n,
               "status": "NONNEGATIVE" if rep.ok else "VIOLATED",
               "violations": list(rep.violations), "zeros": list(rep.zeros)}
        if args.bridge_order:
            b = partitions.coefficient_nonnegativity_bridge(iid, args.bridge_order, table)
            row["bridge"] = {"identity": b.identity, "order": b.order,
                             "status": "VERIFIED" if b.ok else "MISMATCH",
                             "first_disagreement": b.first_disagreement}
            failed |= not b.ok
        row["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        failed |= not rep.ok
        rows.append(row)
    if args.format == "json":
        _emit(json.dumps(rows, indent=2), args.output)
    else:
        lines = []
        for r in rows:
            line = f"{r['status']:<12} {r['id']:<16} N<={r['max_n']:<6} zeros={len(r['zeros'])}"
            if r["violations"]:
                line += f" first violation at N={r['violations'][0]}"
            if "bridge" in r:
                line += f" bridge[{r['bridge']['identity']}]={r['bridge']['status']}"
            lines.append(line + f" {r['elapsed_ms']:.1f} ms")
        _emit("\n".join(lines), args.output)
    return EXIT_FAIL if failed else EXIT_OK


def _builtin_series(name: str, order: int):
    from .identities.registry import p_gf, pbar_gf, pod_gf

    if name == "lambert":
        return partitions.lambert_series(order)
    table = {"partitions": p_gf, "pod": pod_gf, "overpartitions": pbar_gf}
    if name not in table:
        raise UsageError(f"unknown series {name!r}; choose from {', '.join(BUILTIN_SERIES)}")
    return table[name]().build(order, DEFAULT_WEIGHTS, False)


BUILTIN_SERIES = ("partitions", "pod", "overpartitions", "lambert")


def cmd_expand(args) -> int:
    _check_order(args.order, "--order", 1)
    if args.id:
        rec = engine.lookup(args.id)
        builder = getattr(rec, args.side)
        if builder is None:
            raise UsageError(f"{rec.id} has no series builder to expand")
        try:
            s = builder.build(args.order, DEFAULT_WEIGHTS, builder.is_parametric)
        except engine.BUILDER_ERRORS as exc:
            print(f"builder error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        label = f"{rec.id}:{args.side}"
    elif args.name:
        s = _builtin_series(args.name, args.order)
        label = args.name
    else:
        raise UsageError("expand needs a series name or --id")
    terms = sorted(s.terms())
    if args.format == "json":
        _emit(json.dumps({"series": label, "order": s.order,
                          "terms": [{"exponent": e, "dega": i, "degb": j, "coeff": frac(c)}
                                    for e, i, j, c in terms]}, indent=2), args.output)
    else:
        _emit(f"{label} + O(weight {s.order})\n" + s.to_string(max_terms=args.max_terms), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckeq",
                                     description="Verify Hecke-type q-series identities exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", "-o", help="write the report here instead of stdout")

    p = sub.add_parser("list", help="list registered identities")
    p.add_argument("--filter", help="glob on ids")
    p.add_argument("--controls", action="store_true", help="include negative controls")
    common(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", help="expand both sides and compare")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--id", help="identity id, alias or glob")
    g.add_argument("--all", action="store_true")
    g.add_argument("--manifest", help="text file with one id per line")
    p.add_argument("--controls", action="store_true", help="with --all, also run negative controls")
    p.add_argument("--order", type=int, help="q-order for univariate identities")
    p.add_argument("--weighted-order", type=int, help="weighted order for parameterized theorems")
    p.add_argument("--transform-order", type=int, help="q-order for sampled transformations")
    p.add_argument("--n-max", type=int, help="largest n for terminating lemmas")
    p.add_argument("--parallelism", "-j", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("inequality", help="scan a partition inequality")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--id", help="inequality id or glob")
    g.add_argument("--all", action="store_true")
    p.add_argument("--max-n", type=int, default=500)
    p.add_argument("--bridge-order", type=int, default=None,
                   help="also compare S(N) with the bridge series below this order")
    common(p)
    p.set_defaults(func=cmd_inequality)

    p = sub.add_parser("expand", help="print a truncated series")
    p.add_argument("name", nargs="?", help=f"builtin series: {', '.join(BUILTIN_SERIES)}")
    p.add_argument("--id", help="expand one side of a registered identity instead")
    p.add_argument("--side", choices=("lhs", "rhs"), default="lhs")
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--max-terms", type=int, default=40)
    common(p)
    p.set_defaults(func=cmd_expand)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, engine.UnknownIdentityError, ValueError, OSError) as exc:
        print(f"heckeq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
