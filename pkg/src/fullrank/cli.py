"""Command line interface: ``fullrank {table,series,verify,scan}``.

Exit status is 0 when every requested check passes, 1 when any check fails and
2 for usage errors, out-of-range parameters or unwritable output paths.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import durfee, genfun, identities, partitions

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    "t": None,
    "r": None,
    "s": None,
    "d": None,
    "order": 100,
    "n_from": 0,
    "n_to": 200,
    "by_class": False,
    "out": None,
    "format": None,
    "threads": 1,
    "source": None,
}

CONFIG_KEYS = {"from": "n_from", "to": "n_to", "by-class": "by_class"}


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, *names: str):
    # defaults are None so that values from --config are only overridden by explicit flags
    if "t" in names:
        p.add_argument("--t", type=int, help="modulus t")
    if "r" in names:
        p.add_argument("--r", type=int, help="residue r")
    if "s" in names:
        p.add_argument("--s", type=int, help="residue s")
    if "d" in names:
        p.add_argument("--d", type=int, help="size class d (sizes t n + d)")
    p.add_argument("--order", type=int, help="truncation order (default 100)")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--threads", type=int, help="worker threads (DURFEE_THREADS overrides)")
    p.add_argument("--config", help="JSON file with option values")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fullrank", description="Rank and full-rank tables, identities and scans.")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="NF_2 / N count tables or f/g difference series as CSV")
    table.add_argument("kind", choices=("rank", "fullrank", "f", "g"))
    table.add_argument("--source", choices=("enumeration", "genfun", "G", "lambert"),
                       help="rank: enumeration|genfun|G; fullrank: genfun|lambert|enumeration")
    _common(table, "t", "r", "s", "d")

    series = sub.add_parser("series", help="a generating function as JSON")
    series.add_argument("kind", choices=("R", "G", "R2", "R2-lambert"))
    _common(series, "t")

    verify = sub.add_parser("verify", help="run identity checks and print JSON report lines")
    verify.add_argument("id", nargs="?", help="identity id or 'all'")
    verify.add_argument("--list", action="store_true", help="list identity ids")
    _common(verify, "t", "r")

    scan = sub.add_parser("scan", help="sign pattern of NF_2(r,t;n) - NF_2(s,t;n)")
    _common(scan, "t", "r", "s")
    scan.add_argument("--from", dest="n_from", type=int, help="first size (default 0)")
    scan.add_argument("--to", dest="n_to", type=int, help="last size (default 200)")
    scan.add_argument("--by-class", dest="by_class", action="store_const", const=True,
                      help="split sizes by residue mod t")
    return parser


def _resolve(args: argparse.Namespace) -> dict:
    opts = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                config = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(config, dict):
            raise UsageError("config must be a JSON object")
        for key, value in config.items():
            key = CONFIG_KEYS.get(key, key.replace("-", "_"))
            if key not in DEFAULTS:
                raise UsageError(f"unknown config key {key!r}")
            opts[key] = value
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    env = os.environ.get("DURFEE_THREADS")
    if env:
        try:
            opts["threads"] = int(env)
        except ValueError:
            raise UsageError(f"DURFEE_THREADS must be an integer, got {env!r}") from None
    if opts["order"] is None or opts["order"] < 0:
        raise UsageError("--order must be a non-negative integer")
    if opts["threads"] < 1:
        raise UsageError("--threads must be at least 1")
    return opts


def _need(opts: dict, *names: str):
    for name in names:
        if opts[name] is None:
            raise UsageError(f"--{name} is required")
    t = opts.get("t")
    if t is not None and t < 1:
        raise UsageError("--t must be a positive integer")


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


def _table_json(table: partitions.RankTable) -> str:
    payload = {
        "t": table.t,
        "order": table.order,
        "provenance": table.provenance.value,
        "counts": [[str(c) for c in row] for row in table.counts],
    }
    return json.dumps(payload) + "\n"


def cmd_table(kind: str, opts: dict) -> int:
    _need(opts, "t")
    t, order, source = opts["t"], opts["order"], opts["source"]
    if kind in ("f", "g"):
        _need(opts, "r", "s")
        r, s, d = opts["r"], opts["s"], opts["d"]
        if kind == "f":
            series = genfun.FSeriesRequest(t, r, s, order, d).series()
        elif d is None:
            series = partitions.g_diff(t, r, s, order)
        else:
            series = partitions.g_class(t, r, s, d, order)
        if opts["format"] == "json":
            _emit(series.to_json() + "\n", opts["out"])
        else:
            _emit(genfun.fg_table_csv([(t, r, s, d, series)]), opts["out"])
        return EXIT_OK
    if kind == "rank":
        source = source or "enumeration"
        if source == "enumeration":
            table = partitions.rank_counts_enumeration(t, order)
        elif source in ("genfun", "G"):
            table = partitions.rank_counts_genfun(t, order, "durfee" if source == "genfun" else "G")
        else:
            raise UsageError(f"source {source!r} does not apply to rank tables")
    else:
        source = source or "genfun"
        if source == "enumeration":
            table = durfee.full_rank_counts_enumeration(t, order)
        elif source in ("genfun", "lambert"):
            method = "double-sum" if source == "genfun" else "lambert"
            prov = partitions.Provenance.R2_DOUBLE_SUM if source == "genfun" else partitions.Provenance.R2_LAMBERT
            table = partitions.RankTable.from_series(genfun.R2(t, order, method), prov)
        else:
            raise UsageError(f"source {source!r} does not apply to full-rank tables")
    _emit(_table_json(table) if opts["format"] == "json" else table.to_csv(), opts["out"])
    return EXIT_OK


def cmd_series(kind: str, opts: dict) -> int:
    _need(opts, "t")
    t, order = opts["t"], opts["order"]
    build = {
        "R": partitions.rank_genfun_durfee,
        "G": partitions.G_series,
        "R2": genfun.R2_double_sum,
        "R2-lambert": genfun.R2_lambert,
    }[kind]
    _emit(build(t, order).to_json() + "\n", opts["out"])
    return EXIT_OK


def cmd_verify(identity_id: str | None, list_ids: bool, opts: dict) -> int:
    if list_ids:
        _emit("".join(f"{c.identity_id}\t{c.description}\n" for c in identities.REGISTRY.values()), opts["out"])
        return EXIT_OK
    if identity_id is None:
        raise UsageError("an identity id (or 'all') is required")
    order = opts["order"]
    try:
        if identity_id == "all":
            reports = identities.run_all(order, opts["threads"])
        else:
            reports = identities.run_check(identity_id, order, t=opts["t"], r=opts["r"])
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    _emit(identities.reports_to_jsonl(reports), opts["out"])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_scan(opts: dict) -> int:
    _need(opts, "t", "r", "s")
    t = opts["t"]
    for name in ("r", "s"):
        if not 0 <= opts[name] < t:
            raise UsageError(f"--{name} must lie in [0, {t})")
    n_to = opts["n_to"]
    if not 0 <= opts["n_from"] <= n_to:
        raise UsageError(f"empty window [{opts['n_from']}, {n_to}]")
    scan = identities.scan_inequality(t, opts["r"], opts["s"], opts["n_from"], n_to, bool(opts["by_class"]))
    _emit(scan.to_json() + "\n", opts["out"])
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _resolve(args)
        if args.command == "table":
            return cmd_table(args.kind, opts)
        if args.command == "series":
            return cmd_series(args.kind, opts)
        if args.command == "verify":
            return cmd_verify(args.id, args.list, opts)
        return cmd_scan(opts)
    except (UsageError, identities.PreconditionError, ValueError) as exc:
        print(f"fullrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
