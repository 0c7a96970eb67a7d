"""Command-line interface.

Subcommands: generate, solve, census, family, verify, extremal.  Census and
verify exit nonzero when a reference-count mismatch or property violation is
found, so shell pipelines can gate on them.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import census as census_mod
from . import generate as generate_mod
from .domination import classify, exact_gamma, exact_gamma_c
from .families import FamilySpec
from .graphs import bits, graph6_read, graph6_write
from .planar import (
    Triangulation,
    canonical_code,
    planar_code_read,
    planar_code_write,
    underlying_graph,
)


def _write_bytes(path: Optional[str], data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_triangulations(ts, fmt: str, out: Optional[str]) -> None:
    if fmt == "planar_code":
        _write_bytes(out, planar_code_write(ts))
    elif fmt == "graph6":
        _write_text(out, "".join(graph6_write(underlying_graph(t)) + "\n" for t in ts))
    else:  # json: rotation systems plus codes
        payload = [{"n": t.n, "rotations": [list(r) for r in t.rot],
                    "code": canonical_code(t).hex()} for t in ts]
        _write_text(out, json.dumps(payload, indent=1) + "\n")


def _cmd_generate(args) -> int:
    ts = generate_mod.triangulations(args.n)
    _emit_triangulations(ts, args.format, args.out)
    if args.out not in (None, "-"):
        print(f"wrote {len(ts)} triangulations of order {args.n} to {args.out}")
    return 0


def _read_input(path: Optional[str], fmt: str):
    if fmt == "planar_code":
        data = sys.stdin.buffer.read() if path in (None, "-") else open(path, "rb").read()
        return planar_code_read(data)
    if fmt == "graph6":
        text = sys.stdin.read() if path in (None, "-") else open(path, "r", encoding="utf-8").read()
        return [graph6_read(line) for line in text.splitlines() if line.strip()]
    raise ValueError(f"cannot read format {fmt}")


def _cmd_solve(args) -> int:
    items = _read_input(args.input, args.format)
    failures = 0
    for idx, item in enumerate(items):
        try:
            if isinstance(item, Triangulation):
                cert = classify(item)
                g = underlying_graph(item)
            else:
                g = item
                cert = exact_gamma_c(g)
            rec = {"index": idx, "n": g.n, "gamma_c": cert.value,
                   "witness": sorted(bits(cert.witness)), "method": cert.method}
            if args.gamma:
                gcert = exact_gamma(g)
                rec["gamma"] = gcert.value
                rec["gamma_witness"] = sorted(bits(gcert.witness))
        except ValueError as exc:
            rec = {"index": idx, "error": str(exc)}
            failures += 1
        print(json.dumps(rec))
    return 1 if failures else 0


def _census_range(args) -> tuple:
    n_max = args.n_max
    if args.long:
        n_max = max(n_max, 14)
    elif args.extended:
        n_max = max(n_max, 13)
    return args.n_min, n_max


def _cmd_census(args) -> int:
    n_min, n_max = _census_range(args)
    levels = None
    if args.input:
        with open(args.input, "rb") as fh:
            levels = census_mod.levels_from_planar_code(fh.read())
    rows, records = census_mod.census_records(n_min, n_max, args.workers, levels=levels)
    print(f"{'n':>4} {'total':>9} " + " ".join(f"gc={v:<5}" for v in census_mod.GAMMA_C_COLUMNS)
          + "  seconds")
    for row in rows:
        cells = " ".join(f"{row.count(v):>8}" for v in census_mod.GAMMA_C_COLUMNS)
        print(f"{row.n:>4} {row.total:>9} {cells}  {row.wall_time:.2f}")
    if args.csv:
        _write_text(args.csv, census_mod.rows_to_csv(rows))
    if args.json:
        _write_text(args.json, census_mod.results_to_json(rows, records))
    status = 0
    if args.compare:
        diff = census_mod.compare_reference(rows)
        for line in diff.mismatches:
            print(f"MISMATCH {line}")
        for line in diff.no_oracle:
            print(f"UNCHECKED {line}")
        print("reference check: " + ("ok" if diff.ok else f"{len(diff.mismatches)} mismatches"))
        status = 0 if diff.ok else 1
    return status


def _cmd_family(args) -> int:
    spec = FamilySpec(args.which, args.k)
    t = spec.build(verify_cap=args.verify_cap)
    _emit_triangulations([t], args.format, args.out)
    if args.values:
        g = underlying_graph(t)
        info = {"kind": spec.kind, "k": spec.k, "n": t.n,
                "gamma_c": exact_gamma_c(g).value, "gamma": exact_gamma(g).value}
        print(json.dumps(info))
    return 0


def _cmd_verify(args) -> int:
    n_min, n_max = _census_range(args)
    _, records = census_mod.census_records(n_min, n_max, args.workers)
    report = census_mod.verify_corpus(records, cross_solver_max_n=args.cross_max_n)
    for line in report.violations:
        print(f"VIOLATION {line}")
    print(f"checked {report.graphs_checked} graphs, {report.checks_run} checks, "
          f"{len(report.violations)} violations")
    return 0 if report.ok else 1


def _cmd_extremal(args) -> int:
    n_min, n_max = _census_range(args)
    _, records = census_mod.census_records(n_min, n_max, args.workers)
    code = compile(args.where, "<where>", "eval")
    for name in code.co_names:
        if name not in ("n", "gamma", "gamma_c", "Delta"):
            raise SystemExit(f"unknown name {name!r} in --where (use n, gamma, gamma_c, Delta)")

    def predicate(rec) -> bool:
        env = {"n": rec.n, "gamma_c": rec.gamma_c, "Delta": rec.Delta}
        if "gamma" in code.co_names:
            env["gamma"] = rec.gamma
        return bool(eval(code, {"__builtins__": {}}, env))

    hits = census_mod.find_extremal(records, predicate)
    for rec in hits:
        print(json.dumps(rec.to_dict()))
    print(f"{len(hits)} graphs match", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tridom",
        description="Plane-triangulation generation and exact connected domination.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="enumerate all triangulations of one order")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--format", choices=["planar_code", "graph6", "json"], default="planar_code")
    g.add_argument("--out", default=None, help="output file (default stdout)")
    g.set_defaults(func=_cmd_generate)

    s = sub.add_parser("solve", help="solve connected domination for input graphs")
    s.add_argument("--format", choices=["planar_code", "graph6"], default="planar_code")
    s.add_argument("--input", default=None, help="input file (default stdin)")
    s.add_argument("--gamma", action="store_true", help="also compute plain domination")
    s.set_defaults(func=_cmd_solve)

    c = sub.add_parser("census", help="count triangulations by connected domination number")
    c.add_argument("--n-min", type=int, default=5)
    c.add_argument("--n-max", type=int, default=11)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--extended", action="store_true", help="include orders 12 and 13")
    c.add_argument("--long", action="store_true", help="include order 14 (slow)")
    c.add_argument("--compare", action="store_true", help="diff against the reference table")
    c.add_argument("--csv", default=None, help="write rows as CSV")
    c.add_argument("--json", default=None, help="write rows and records as JSON")
    c.add_argument("--input", default=None,
                   help="planar_code file to classify instead of native generation")
    c.set_defaults(func=_cmd_census)

    f = sub.add_parser("family", help="build an extremal family member")
    f.add_argument("--which", choices=["A", "B", "chain"], required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--verify-cap", type=int, default=24,
                   help="verify exact values while order <= cap")
    f.add_argument("--format", choices=["planar_code", "graph6", "json"], default="planar_code")
    f.add_argument("--out", default=None)
    f.add_argument("--values", action="store_true", help="print exact domination values")
    f.set_defaults(func=_cmd_family)

    v = sub.add_parser("verify", help="re-verify structural properties over the census")
    v.add_argument("--n-min", type=int, default=5)
    v.add_argument("--n-max", type=int, default=11)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--extended", action="store_true")
    v.add_argument("--long", action="store_true")
    v.add_argument("--cross-max-n", type=int, default=10,
                   help="cross-check both solvers up to this order")
    v.set_defaults(func=_cmd_verify)

    e = sub.add_parser("extremal", help="filter census graphs by a predicate")
    e.add_argument("--n-min", type=int, default=5)
    e.add_argument("--n-max", type=int, default=11)
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--extended", action="store_true")
    e.add_argument("--long", action="store_true")
    e.add_argument("--where", required=True,
                   help="expression over n, gamma, gamma_c, Delta, e.g. 'gamma_c > gamma + 1'")
    e.set_defaults(func=_cmd_extremal)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
