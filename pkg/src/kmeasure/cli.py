"""Command-line interface: verification suites, partition statistics, tables.

Exit status contract: 0 when everything checked passed, 1 when at least one
identity or equidistribution claim failed, 2 on usage or parse errors.
Plain and csv output carry no timings, so identical configurations produce
byte-identical output; json includes per-check elapsed_ms.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from dataclasses import dataclass, field

from . import identities
from .partitions import (
    durfee,
    enumerate_partitions,
    kmeasure,
    parse_partition,
    partition_stats,
    sylvester_counts,
)

USAGE_ERROR = 2


@dataclass
class RunConfig:
    qcap: int = 20
    zcap: int | None = None  # None here means "default to qcap"
    ks: list[int] = field(default_factory=lambda: [1, 2, 3, 4, 5])
    identity: str | None = None
    fmt: str = "plain"
    jobs: int = 1

    def resolved_zcap(self) -> int:
        return self.qcap if self.zcap is None else self.zcap


def _parse_k_list(text: str) -> list[int]:
    try:
        ks = [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("k list must be comma-separated integers")
    if not ks or any(k < 1 for k in ks):
        raise argparse.ArgumentTypeError("each k must be a positive integer")
    return ks


def _default_jobs() -> int:
    env = os.environ.get("KMEASURE_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmeasure",
        description="Exact verification of partition k-measure series identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run identity checks")
    verify.add_argument("--qcap", type=int, default=20, help="q-truncation order")
    verify.add_argument("--zcap", type=int, default=None, help="z-truncation order (default: qcap)")
    verify.add_argument("--k", type=_parse_k_list, default=[1, 2, 3, 4, 5],
                        help="comma-separated k values")
    verify.add_argument("--identity", default=None,
                        help="only run checks whose name contains this substring")
    verify.add_argument("--format", dest="fmt", choices=("plain", "json", "csv"),
                        default="plain")
    verify.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: KMEASURE_JOBS or cpu count)")

    stats = sub.add_parser("stats", help="statistics of one partition")
    stats.add_argument("partition", help='comma-separated parts, e.g. "4,3,1"; empty for the empty partition')
    stats.add_argument("--k", type=_parse_k_list, default=[1, 2, 3, 4, 5])
    stats.add_argument("--format", dest="fmt", choices=("plain", "json"), default="plain")

    table = sub.add_parser("table", help="joint distribution tables per n")
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--pair", choices=("mu2-durfee", "muk-length", "sylvester"),
                       default="mu2-durfee")
    table.add_argument("--k", type=int, default=2, help="k for the muk-length pair")
    table.add_argument("--format", dest="fmt", choices=("plain", "csv", "json"),
                       default="plain")
    return parser


# ------------------------------------------------------------------ verify


def cmd_verify(config: RunConfig) -> int:
    tasks = identities.default_tasks(config.qcap, config.resolved_zcap(), config.ks)
    if config.identity is not None:
        tasks = [task for task in tasks if config.identity in task[0]]
        if not tasks:
            print(f"error: no identity matches {config.identity!r}", file=sys.stderr)
            return USAGE_ERROR
    reports = identities.run_suite(tasks, jobs=config.jobs)
    if config.fmt == "json":
        print(identities.reports_json(reports))
    elif config.fmt == "csv":
        print(identities.reports_csv(reports))
    else:
        print(identities.reports_table(reports))
        failed = sum(1 for r in reports if not r.passed)
        print(f"\n{len(reports) - failed}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


# ------------------------------------------------------------------- stats


def cmd_stats(text: str, ks, fmt: str) -> int:
    try:
        parts = parse_partition(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    stats = partition_stats(parts, ks)
    if fmt == "json":
        print(json.dumps({
            "partition": list(parts),
            "size": stats.size,
            "length": stats.length,
            "smallest": stats.smallest,
            "durfee": stats.durfee,
            "measures": {str(k): v for k, v in sorted(stats.measures.items())},
        }, indent=2))
    else:
        print(f"partition: {','.join(map(str, parts)) or '(empty)'}")
        print(f"size:      {stats.size}")
        print(f"length:    {stats.length}")
        print(f"smallest:  {stats.smallest}")
        print(f"durfee:    {stats.durfee}")
        for k in sorted(stats.measures):
            print(f"measure k={k}: {stats.measures[k]}")
    return 0


# ------------------------------------------------------------------- table


def _table_rows(n_max: int, pair: str, k: int):
    """Rows (n, statistic value, lhs count, rhs count, match) per n <= n_max.

    mu2-durfee and sylvester compare two distributions a theorem asserts
    are equal; muk-length is informational (no equality claimed).
    """
    rows = []
    for n in range(n_max + 1):
        if pair == "sylvester":
            lhs, rhs = sylvester_counts(n)
        else:
            lhs, rhs = Counter(), Counter()
            for parts in enumerate_partitions(n):
                rhs_stat = durfee(parts) if pair == "mu2-durfee" else len(parts)
                lhs_stat = kmeasure(parts, 2 if pair == "mu2-durfee" else k)
                lhs[lhs_stat] += 1
                rhs[rhs_stat] += 1
        for value in sorted(set(lhs) | set(rhs)):
            a, b = lhs.get(value, 0), rhs.get(value, 0)
            rows.append((n, value, a, b, a == b))
    return rows


def cmd_table(n_max: int, pair: str, k: int, fmt: str) -> int:
    if n_max < 0:
        print("error: --n-max must be nonnegative", file=sys.stderr)
        return USAGE_ERROR
    rows = _table_rows(n_max, pair, k)
    if fmt == "csv":
        print("n,statistic_value,count_lhs,count_rhs,match")
        for row in rows:
            print(",".join(str(x) for x in row))
    elif fmt == "json":
        print(json.dumps([
            dict(n=n, statistic_value=v, count_lhs=a, count_rhs=b, match=m)
            for n, v, a, b, m in rows
        ], indent=2))
    else:
        print(f"{'n':>4} {'value':>6} {'lhs':>8} {'rhs':>8}  match")
        for n, v, a, b, m in rows:
            flag = "" if m else "  <-- MISMATCH"
            print(f"{n:>4} {v:>6} {a:>8} {b:>8}  {str(m).lower()}{flag}")
    mismatch = any(not m for *_rest, m in rows)
    # muk-length carries no equality claim, so mismatches there are expected
    return 1 if mismatch and pair != "muk-length" else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize and re-raise
        return USAGE_ERROR if exc.code else 0
    if args.command == "verify":
        config = RunConfig(
            qcap=args.qcap,
            zcap=args.zcap,
            ks=args.k,
            identity=args.identity,
            fmt=args.fmt,
            jobs=args.jobs if args.jobs is not None else _default_jobs(),
        )
        if config.qcap < 0 or (config.zcap is not None and config.zcap < 0):
            print("error: caps must be nonnegative", file=sys.stderr)
            return USAGE_ERROR
        return cmd_verify(config)
    if args.command == "stats":
        return cmd_stats(args.partition, args.k, args.fmt)
    return cmd_table(args.n_max, args.pair, args.k, args.fmt)


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
