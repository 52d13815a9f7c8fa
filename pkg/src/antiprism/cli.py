"""Command line front end: ``antiprism <command> ...``.

Commands
--------
subdivide   triangulate a facet-list file (antiprism, barycentric, crossing)
table       print a polynomial family as CSV or JSON
verify      run a real-rootedness claim over a range of n
crosscheck  compare brute-force oracles against recurrences and constructions
count       print a brute-force count triangle as CSV

Exit status: 0 success, 1 a check or claim failed, 2 a capacity bound was
hit, 3 the input was malformed. Options can also be set through environment
variables named ``ANTIPRISM_<OPTION>`` (for example ``ANTIPRISM_JOBS=4``);
explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import __version__
from .complex import SimplicialComplex
from .enumeration import (DEFAULT_ENUM_CAP, count_derangement_exc, count_exc_prefix,
                          multipointed_full, multipointed_partial, proper_multipointed,
                          proper_multipointed_partial, stirling2)
from .errors import CapacityError, MalformedInputError, NotAFaceError
from .facetio import format_facets, read_facets, write_carrier_json
from .poly import IntPolynomial
from .polynomials import (bar_ell, bar_p, binomial_eulerian, derangement, ell_A, eulerian,
                          f_A, h_A, h_A_boundary, q_A, q_nr, theta_A)
from .subdivision import (CarrierMap, antiprism_by_crossings, antiprism_triangulation,
                          barycentric)

EXIT_OK, EXIT_FAIL, EXIT_CAPACITY, EXIT_INPUT = 0, 1, 2, 3
ENV_PREFIX = "ANTIPRISM_"


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    n_max: int = 7
    enum_cap: int = DEFAULT_ENUM_CAP
    shell_cap: int = 12
    fmt: str = "csv"
    out: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.fmt not in ("json", "csv"):
            raise MalformedInputError(f"unknown format {self.fmt!r}")
        for name in ("enum_cap", "shell_cap", "jobs"):
            if getattr(self, name) < 1:
                raise MalformedInputError(f"--{name.replace('_', '-')} must be positive")
        if self.n_max < 0:
            raise MalformedInputError("--n-max must be nonnegative")


def _env(name: str, default, cast=str):
    raw = os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise MalformedInputError(f"bad value {raw!r} for {ENV_PREFIX}{name.upper()}")


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([str(x) for x in r])
    return buf.getvalue()


# subdivide


def _compose(outer: CarrierMap, inner: CarrierMap) -> CarrierMap:
    """Carriers of an iterated subdivision: follow ``outer`` into ``inner``."""
    return CarrierMap({v: inner.carrier(c) for v, c in outer.vertex_carriers.items()})


def _subdivide_once(c: SimplicialComplex, method: str) -> tuple[SimplicialComplex, CarrierMap]:
    if method == "antiprism":
        return antiprism_triangulation(c)
    if method == "barycentric":
        return barycentric(c)
    if method == "crossing":
        return antiprism_by_crossings(c)
    raise MalformedInputError(f"unknown method {method!r}")


def _summary(c: SimplicialComplex, method: str, iterations: int) -> dict:
    info = {
        "method": method,
        "iterations": str(iterations),
        "vertices": str(len(c.vertices)),
        "facets": str(len(c.facets)),
        "dim": str(c.dim),
        "f_vector": [str(x) for x in c.f_vector()],
        "h_vector": None,
    }
    if c.is_pure() and not c.is_empty():
        h = c.h_polynomial(c.dim + 1)
        info["h_vector"] = [str(x) for x in h.coefficient_list(c.dim + 2)]
    return info


def cmd_subdivide(cfg: RunConfig, method: str, iterations: int, check_shellable: bool) -> int:
    if not cfg.input:
        raise MalformedInputError("subdivide needs --input")
    base = read_facets(cfg.input)
    shellable = None
    if check_shellable:
        shellable, _ = base.is_shellable(cap=cfg.shell_cap)
    cur = base
    carrier = CarrierMap.identity(base.vertices)
    for _ in range(iterations):
        cur, cm = _subdivide_once(cur, method)
        carrier = _compose(cm, carrier)
    summary = _summary(cur, method, iterations)
    if shellable is not None:
        summary["input_shellable"] = shellable
    text = json.dumps(summary, indent=2) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(format_facets(cur), encoding="utf-8")
        write_carrier_json(carrier, cfg.out + ".carrier.json")
        Path(cfg.out + ".summary.json").write_text(text, encoding="utf-8")
        sys.stdout.write(text)
    else:
        sys.stdout.write(format_facets(cur))
        sys.stderr.write(text)
    return EXIT_OK


# table


FAMILIES: dict[str, tuple[Callable[[int], IntPolynomial], int]] = {
    # name: (family, first n listed by default)
    "h": (h_A, 0),
    "ell": (ell_A, 0),
    "barp": (bar_p, 1),
    "ellbar": (bar_ell, 1),
    "theta": (theta_A, 1),
    "hbd": (h_A_boundary, 1),
    "eulerian": (eulerian, 0),
    "derangement": (derangement, 0),
    "binomial_eulerian": (binomial_eulerian, 0),
}
TABLES = sorted(FAMILIES) + ["fA", "qA", "qnr"]


def table_rows(family: str, n_min: int, n_max: int, r_max: int | None = None):
    """``(header, rows)`` for a family; coefficient columns are padded with zeros."""
    if family in FAMILIES:
        fam, _ = FAMILIES[family]
        ns = range(max(n_min, 0), n_max + 1)
        polys = [(n, fam(n)) for n in ns]
        width = max((p.degree + 1 for _, p in polys), default=1)
        header = ["n"] + [f"x^{i}" for i in range(width)]
        return header, [[n] + p.coefficient_list(width) for n, p in polys]
    if family in ("fA", "qA"):
        header = ["n"] + [f"k={k}" for k in range(n_max + 1)]
        rows = []
        for n in range(max(n_min, 0), n_max + 1):
            vals = list(f_A(n)) if family == "fA" else [q_A(n, k) for k in range(n + 1)]
            rows.append([n] + vals + [0] * (n_max - n))
        return header, rows
    if family == "qnr":
        r_max = n_max if r_max is None else r_max
        cells = [(n, r, q_nr(n, r)) for n in range(max(n_min, 0), n_max + 1)
                 for r in range(r_max + 1)]
        width = max(p.degree + 1 for _, _, p in cells)
        header = ["n", "r"] + [f"x^{i}" for i in range(width)]
        return header, [[n, r] + p.coefficient_list(width) for n, r, p in cells]
    raise MalformedInputError(f"unknown table {family!r}; choose from {TABLES}")


def cmd_table(cfg: RunConfig, family: str, n_min: int, r_max: int | None) -> int:
    header, rows = table_rows(family, n_min, cfg.n_max, r_max)
    if cfg.fmt == "csv":
        _emit(_csv_text(header, rows), cfg.out)
    else:
        doc = {"table": family,
               "columns": header,
               "rows": [[str(x) for x in r] for r in rows]}
        _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    return EXIT_OK


# verify


def cmd_verify(cfg: RunConfig, claim: str, n_min: int, timing: bool) -> int:
    from .verify import CLAIMS, verify

    if claim not in CLAIMS:
        raise MalformedInputError(f"unknown claim {claim!r}; choose from {sorted(CLAIMS)}")
    report = verify(claim, range(n_min, cfg.n_max + 1), jobs=cfg.jobs)
    instances = report.to_json()
    if not timing:
        for inst in instances:
            inst["elapsed_ms"] = "0"
    if cfg.fmt == "json":
        doc = {
            "claim": claim,
            "n_min": str(n_min),
            "n_max": str(cfg.n_max),
            "generated_at": _dt.datetime.now(_dt.timezone.utc).isoformat() if timing else "",
            "all_hold": report.holds,
            "instances": instances,
        }
        _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    else:
        rows = [[i["claim"], i["n"], i["status"], ";".join(i["failed_checks"]),
                 ";".join(i["coincident_roots"]), i["elapsed_ms"]] for i in instances]
        _emit(_csv_text(["claim", "n", "status", "failed_checks", "coincident_roots",
                         "elapsed_ms"], rows), cfg.out)
    if report.failures:
        return EXIT_FAIL
    if report.capacity_hit:
        return EXIT_CAPACITY
    return EXIT_OK


# crosscheck


def cmd_crosscheck(cfg: RunConfig) -> int:
    from .crosscheck import run_crosschecks

    results = run_crosschecks(cfg.n_max)
    if cfg.fmt == "csv":
        text = _csv_text(["check", "n", "result", "expected", "observed"],
                         [r.row() for r in results])
    else:
        text = json.dumps([dict(zip(["check", "n", "result", "expected", "observed"], r.row()))
                           for r in results], indent=2) + "\n"
    _emit(text, cfg.out)
    bad = [r for r in results if not r.ok]
    for r in bad:
        sys.stderr.write(f"mismatch: {r.name} (n={r.n})\n")
    return EXIT_FAIL if bad else EXIT_OK


# count


COUNTS: dict[str, Callable[..., int]] = {
    "partial": multipointed_partial,
    "full": multipointed_full,
    "proper": proper_multipointed,
    "proper_partial": proper_multipointed_partial,
    "exc_prefix": count_exc_prefix,
    "derangement_exc": count_derangement_exc,
}


def cmd_count(cfg: RunConfig, kind: str) -> int:
    if kind == "stirling2":
        def f(n, k):
            return stirling2(n, k)
    elif kind in COUNTS:
        fn = COUNTS[kind]
        if cfg.n_max > cfg.enum_cap:
            # fail before spending time on the rows that fit
            raise CapacityError(f"n_max={cfg.n_max} exceeds the enumeration cap {cfg.enum_cap}")

        def f(n, k):
            return fn(n, k, cap=cfg.enum_cap)
    else:
        raise MalformedInputError(f"unknown count {kind!r}")
    header = ["n"] + [f"k={k}" for k in range(cfg.n_max + 1)]
    rows = [[n] + [f(n, k) if k <= n else 0 for k in range(cfg.n_max + 1)]
            for n in range(cfg.n_max + 1)]
    _emit(_csv_text(header, rows), cfg.out)
    return EXIT_OK


# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiprism",
        description="Antiprism triangulations: subdivisions, polynomial tables and "
                    "exact real-rootedness checks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_max_default=7, fmt_default="csv"):
        p.add_argument("--n-max", type=int, default=_env("n_max", n_max_default, int))
        p.add_argument("--format", dest="fmt", choices=("json", "csv"),
                       default=_env("format", fmt_default))
        p.add_argument("--out", default=_env("out", None),
                       help="output file (default: standard output)")
        p.add_argument("--jobs", type=int, default=_env("jobs", 1, int))
        p.add_argument("--enum-cap", type=int, default=_env("enum_cap", DEFAULT_ENUM_CAP, int))
        p.add_argument("--shell-cap", type=int, default=_env("shell_cap", 12, int))

    p = sub.add_parser("subdivide", help="subdivide a facet-list file")
    common(p)
    p.add_argument("--input", default=_env("input", None), help="facet-list file")
    p.add_argument("--method", choices=("antiprism", "barycentric", "crossing"),
                   default=_env("method", "antiprism"))
    p.add_argument("--iterations", type=int, default=1,
                   help="apply the subdivision this many times")
    p.add_argument("--check-shellable", action="store_true",
                   help="also decide shellability of the input (bounded by --shell-cap)")

    p = sub.add_parser("table", help="print a polynomial family")
    p.add_argument("family", choices=TABLES)
    common(p)
    p.add_argument("--n-min", type=int, default=None,
                   help="smallest n (default: where the family's standard list starts)")
    p.add_argument("--r-max", type=int, default=None, help="largest r for the qnr table")

    p = sub.add_parser("verify", help="check a claim for a range of n")
    common(p, n_max_default=15, fmt_default="json")
    p.add_argument("--claim", required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--no-timing", dest="timing", action="store_false",
                   help="omit wall-clock fields so reports are byte-reproducible")

    p = sub.add_parser("crosscheck", help="oracle comparisons")
    common(p, n_max_default=6)

    p = sub.add_parser("count", help="brute-force count triangle")
    p.add_argument("kind", choices=sorted(COUNTS) + ["stirling2"])
    common(p, n_max_default=6)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser()
    except MalformedInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        cfg = RunConfig(command=args.command, input=getattr(args, "input", None),
                        n_max=args.n_max, enum_cap=args.enum_cap, shell_cap=args.shell_cap,
                        fmt=args.fmt, out=args.out, jobs=args.jobs)
        if args.command == "subdivide":
            if args.iterations < 1:
                raise MalformedInputError("--iterations must be positive")
            return cmd_subdivide(cfg, args.method, args.iterations, args.check_shellable)
        if args.command == "table":
            n_min = args.n_min
            if n_min is None:
                n_min = FAMILIES[args.family][1] if args.family in FAMILIES else 0
            return cmd_table(cfg, args.family, n_min, args.r_max)
        if args.command == "verify":
            return cmd_verify(cfg, args.claim, args.n_min, args.timing)
        if args.command == "crosscheck":
            return cmd_crosscheck(cfg)
        return cmd_count(cfg, args.kind)
    except CapacityError as exc:
        sys.stderr.write(f"capacity: {exc}\n")
        return EXIT_CAPACITY
    except (MalformedInputError, NotAFaceError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
