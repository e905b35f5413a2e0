"""Batch verification front end.

Subcommands:
  verify      run identity checks over parameter grids, emit a report
  table       print one exact partition count
  gauss       print a Gaussian polynomial
  oracle-diff exhaustively compare the DP counts against brute-force enumeration

Exit codes: 0 all checks pass, 1 at least one check fails, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .bigpoly import format_poly
from .identities import (
    CaseResult,
    get_descriptor,
    registry,
    run_identity,
)
from .partitions import (
    ORACLE_LIMIT_DEFAULT,
    UNBOUNDED,
    PartitionSpec,
    count_P,
    count_P_most,
    count_P_of,
    count_P_star,
    count_Q,
    count_Q_most,
    count_Q_of,
    count_Q_star,
    enumerate_partitions,
)
from .qbinom import bracket_base

WORKERS_ENV = "QPARTID_WORKERS"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    families: list[str]
    preset: Optional[str] = None
    overrides: dict[str, list[int]] = field(default_factory=dict)
    fmt: str = "human"
    out: Optional[str] = None
    workers: int = 1
    oracle_limit: int = ORACLE_LIMIT_DEFAULT
    inject_failure: bool = False

    def echo(self) -> dict:
        return {
            "families": list(self.families),
            "preset": self.preset,
            "overrides": {k: list(v) for k, v in sorted(self.overrides.items())},
            "format": self.fmt,
            "workers": self.workers,
            "oracle_limit": self.oracle_limit,
            "inject_failure": self.inject_failure,
        }


def _result_row(identity_id: str, result: CaseResult) -> dict:
    mismatch = result.first_mismatch
    if isinstance(mismatch, tuple):
        mismatch = list(mismatch)
    return {
        "id": identity_id,
        "params": result.case.as_dict(),
        "pass": result.passed,
        "first_mismatch": mismatch,
        "lhs_hash": result.lhs_hash,
        "rhs_hash": result.rhs_hash,
    }


def _family_task(identity_id: str, grid: dict, tamper_first: bool):
    start = time.perf_counter()
    results = run_identity(identity_id, grid, tamper_first=tamper_first)
    elapsed = time.perf_counter() - start
    return identity_id, elapsed, [_result_row(identity_id, r) for r in results]


def _grid_for(identity_id: str, overrides: dict[str, list[int]]) -> dict[str, list[int]]:
    desc = get_descriptor(identity_id)
    return {
        name: list(overrides.get(name, desc.default_grid[name]))
        for name in desc.params
    }


def run_verify(config: RunConfig) -> tuple[dict, int]:
    """Evaluate the selected families and assemble the run report."""
    known = {d.id for d in registry()}
    for fam in config.families:
        if fam not in known:
            raise UsageError(f"unknown identity id {fam!r}")
    families = sorted(set(config.families))
    tasks = [
        (fam, _grid_for(fam, config.overrides), config.inject_failure and i == 0)
        for i, fam in enumerate(families)
    ]

    started = time.perf_counter()
    outcomes = []
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            futures = [pool.submit(_family_task, *t) for t in tasks]
            outcomes = [f.result() for f in futures]
    else:
        outcomes = [_family_task(*t) for t in tasks]

    rows = []
    timing = {}
    for identity_id, elapsed, family_rows in outcomes:
        timing[identity_id] = round(elapsed, 6)
        rows.extend(family_rows)
    timing["total"] = round(time.perf_counter() - started, 6)

    failures = sum(1 for r in rows if not r["pass"])
    report = {
        "version": __version__,
        "config": config.echo(),
        "results": rows,
        "totals": {
            "cases": len(rows),
            "passes": len(rows) - failures,
            "failures": failures,
        },
        "timing": timing,
    }
    return report, (0 if failures == 0 else 1)


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt == "tsv":
        lines = ["id\tparams\tpass\tfirst_mismatch\tlhs_hash\trhs_hash"]
        for row in report["results"]:
            params = ",".join(f"{k}={v}" for k, v in row["params"].items())
            mismatch = row["first_mismatch"]
            mismatch_s = "" if mismatch is None else json.dumps(mismatch)
            lines.append(
                f"{row['id']}\t{params}\t{int(row['pass'])}\t{mismatch_s}"
                f"\t{row['lhs_hash']}\t{row['rhs_hash']}"
            )
        return "\n".join(lines) + "\n"
    # human: per-family summary, at most 10 failures listed per family
    lines = []
    by_family: dict[str, list[dict]] = {}
    for row in report["results"]:
        by_family.setdefault(row["id"], []).append(row)
    for fam in sorted(by_family):
        rows = by_family[fam]
        failed = [r for r in rows if not r["pass"]]
        took = report["timing"].get(fam, 0.0)
        status = "ok" if not failed else f"{len(failed)} FAILED"
        lines.append(f"{fam}: {len(rows)} cases, {status} ({took:.2f}s)")
        for r in failed[:10]:
            params = ",".join(f"{k}={v}" for k, v in r["params"].items())
            lines.append(f"  FAIL {params} first_mismatch={r['first_mismatch']}")
    totals = report["totals"]
    verdict = "PASS" if totals["failures"] == 0 else "FAIL"
    lines.append(
        f"TOTAL: {totals['cases']} cases, {totals['passes']} passed, "
        f"{totals['failures']} failed -> {verdict} "
        f"({report['timing']['total']:.2f}s)"
    )
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise UsageError(f"{flag} expects a comma-separated integer list, got {text!r}")
    if not values:
        raise UsageError(f"{flag} got an empty list")
    if any(v < 0 for v in values):
        raise UsageError(f"{flag} values must be >= 0")
    return values


def _collect_overrides(args) -> dict[str, list[int]]:
    overrides: dict[str, list[int]] = {}
    for name, flag in (("n", "--n-max"), ("m", "--m-max"), ("p", "--p-max")):
        hi = getattr(args, name + "_max")
        if hi is not None:
            if hi < 0:
                raise UsageError(f"{flag} must be >= 0")
            overrides[name] = list(range(hi + 1))
    for name, flag in (("a", "--a-set"), ("b", "--b-set"), ("c", "--c-set")):
        raw = getattr(args, name + "_set")
        if raw is not None:
            overrides[name] = _parse_int_list(raw, flag)
    return overrides


def cmd_verify(args) -> int:
    overrides = _collect_overrides(args)
    if args.preset == "desk" and overrides:
        raise UsageError("--preset desk pins the default grids; range overrides conflict")
    if args.all:
        families = [d.id for d in registry()]
    elif args.family:
        families = list(args.family)
    else:
        raise UsageError("select identities with --family ID (repeatable) or --all")
    config = RunConfig(
        families=families,
        preset=args.preset,
        overrides=overrides,
        fmt=args.format,
        out=args.out,
        workers=args.workers,
        oracle_limit=args.oracle_limit,
        inject_failure=args.inject_failure,
    )
    report, code = run_verify(config)
    _emit(render_report(report, config.fmt), config.out)
    return code


_TABLE_FUNCS = {
    "P": (("n", "m"), ("p",), lambda n, m, p: count_P(n, m, p)),
    "Q": (("n", "m"), ("p",), lambda n, m, p: count_Q(n, m, p)),
    "Pstar": (("n", "m"), ("p",), lambda n, m, p: count_P_star(n, m, p)),
    "Qstar": (("n", "m"), ("p",), lambda n, m, p: count_Q_star(n, m, p)),
    "Pmost": (("n",), ("p",), lambda n, p: count_P_most(n, p)),
    "Qmost": (("n",), ("p",), lambda n, p: count_Q_most(n, p)),
    "Pn": (("n",), (), lambda n: count_P_of(n)),
    "Qn": (("n",), (), lambda n: count_Q_of(n)),
}


def cmd_table(args) -> int:
    required, optional, func = _TABLE_FUNCS[args.func]
    values = {}
    for name in required:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"table --func {args.func} requires --{name}")
        if v < 0:
            raise UsageError(f"--{name} must be >= 0")
        values[name] = v
    for name in optional:
        v = getattr(args, name)
        values[name] = UNBOUNDED if v is None else v
    call_args = [values[name] for name in required + optional]
    value = func(*call_args)
    if args.format == "tsv":
        shown = {k: values.get(k) for k in ("n", "m", "p")}
        cells = ["-" if shown[k] is None else str(shown[k]) for k in ("n", "m", "p")]
        text = "n\tm\tp\tvalue\n" + "\t".join(cells + [str(value)]) + "\n"
    else:
        text = f"{value}\n"
    _emit(text, args.out)
    return 0


def cmd_gauss(args) -> int:
    if args.m < 0 or args.p < 0:
        raise UsageError("--m and --p must be >= 0")
    if args.base < 1:
        raise UsageError("--base must be >= 1")
    poly = bracket_base(args.m + args.p, args.m, args.base)
    coeffs = " ".join(str(c) for c in poly.coeffs) or "0"
    _emit(f"{format_poly(poly)}\ncoeffs: {coeffs}\n", args.out)
    return 0


def cmd_oracle_diff(args) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    if args.n_max > args.oracle_limit:
        raise UsageError(
            f"--n-max {args.n_max} exceeds the oracle limit {args.oracle_limit}"
        )
    started = time.perf_counter()
    rows = []
    for n in range(args.n_max + 1):
        for m in range(n + 1):
            for p in range(n + 1):
                spec = PartitionSpec(n, exact_parts=m, max_part=p)
                plain = len(enumerate_partitions(spec, args.oracle_limit))
                spec_d = PartitionSpec(n, exact_parts=m, max_part=p, distinct=True)
                distinct = len(enumerate_partitions(spec_d, args.oracle_limit))
                dp_p, dp_q = count_P(n, m, p), count_Q(n, m, p)
                ok = plain == dp_p and distinct == dp_q
                mismatch = None if ok else [dp_p, plain] if plain != dp_p else [dp_q, distinct]
                rows.append(
                    {
                        "id": "oracle_diff",
                        "params": {"n": n, "m": m, "p": p},
                        "pass": ok,
                        "first_mismatch": mismatch,
                        "lhs_hash": "",
                        "rhs_hash": "",
                    }
                )
    failures = sum(1 for r in rows if not r["pass"])
    report = {
        "version": __version__,
        "config": {"n_max": args.n_max, "oracle_limit": args.oracle_limit},
        "results": rows,
        "totals": {
            "cases": len(rows),
            "passes": len(rows) - failures,
            "failures": failures,
        },
        "timing": {
            "oracle_diff": round(time.perf_counter() - started, 6),
            "total": round(time.perf_counter() - started, 6),
        },
    }
    _emit(render_report(report, args.format), args.out)
    return 0 if failures == 0 else 1


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpartid",
        description="Exact verification of partition-count and q-binomial identities.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "tsv", "human"), default="human")
        p.add_argument("--out", metavar="PATH", default=None)
        p.add_argument(
            "--oracle-limit", type=int, default=ORACLE_LIMIT_DEFAULT, metavar="N"
        )

    v = sub.add_parser("verify", help="run identity checks over parameter grids")
    v.add_argument("--family", action="append", metavar="ID", help="identity id (repeatable)")
    v.add_argument("--all", action="store_true", help="verify every registered identity")
    v.add_argument("--preset", choices=("desk",), default=None)
    v.add_argument("--n-max", type=int, default=None, metavar="N")
    v.add_argument("--m-max", type=int, default=None, metavar="N")
    v.add_argument("--p-max", type=int, default=None, metavar="N")
    v.add_argument("--a-set", default=None, metavar="LIST")
    v.add_argument("--b-set", default=None, metavar="LIST")
    v.add_argument("--c-set", default=None, metavar="LIST")
    v.add_argument("--workers", type=int, default=_default_workers(), metavar="N")
    v.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    add_common(v)
    v.set_defaults(handler=cmd_verify)

    t = sub.add_parser("table", help="print one exact partition count")
    t.add_argument("--func", choices=sorted(_TABLE_FUNCS), required=True)
    t.add_argument("--n", type=int, default=None)
    t.add_argument("--m", type=int, default=None)
    t.add_argument("--p", type=int, default=None)
    add_common(t)
    t.set_defaults(handler=cmd_table)

    g = sub.add_parser("gauss", help="print a Gaussian polynomial")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--base", type=int, default=1)
    add_common(g)
    g.set_defaults(handler=cmd_gauss)

    o = sub.add_parser("oracle-diff", help="compare DP counts against enumeration")
    o.add_argument("--n-max", type=int, required=True, metavar="N")
    add_common(o)
    o.set_defaults(handler=cmd_oracle_diff)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
