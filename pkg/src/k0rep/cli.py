"""Command-line interface: ``k0rep compute | verify | sweep``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 the two
computed routes disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from k0rep.abelian import FgAbelianGroup, format_group
from k0rep.ar_quiver import k0_via_ar, orbit_size
from k0rep.closed_forms import DEFAULT_MAX_VERTICES, predict
from k0rep.coxeter import K0Job, k0_repetitive
from k0rep.dynkin import DynkinSpec
from k0rep.golden import run_golden

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2, 3
METHODS = ("snf", "ar", "predict", "both", "all")
CSV_COLUMNS = ("family", "n", "p", "group", "rank", "torsion", "source")


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def vertex_budget(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("K0REP_MAX_VERTICES")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_MAX_VERTICES


def _spec_or_exit(parser: argparse.ArgumentParser, family: str, n: int) -> DynkinSpec:
    try:
        return DynkinSpec(family, n)
    except ValueError as err:
        parser.error(str(err))


def _expand(method: str) -> list[str]:
    return {"both": ["snf", "ar"], "all": ["snf", "ar", "predict"]}.get(method, [method])


def cmd_compute(args, parser) -> int:
    spec = _spec_or_exit(parser, args.family, args.n)
    if args.p < 1:
        parser.error("--p must be >= 1")
    budget = vertex_budget(args.max_vertices)
    methods = _expand(args.method)
    results: dict[str, FgAbelianGroup | None] = {}
    notes: dict[str, str] = {}
    for m in methods:
        if m == "snf":
            results[m] = k0_repetitive(K0Job(spec, args.p))
        elif m == "ar":
            if orbit_size(spec, args.p) > budget:
                if args.method == "ar":
                    parser.error(f"orbit quiver has {orbit_size(spec, args.p)} vertices, budget {budget}")
                results[m], notes[m] = None, "skipped(budget)"
            else:
                results[m] = k0_via_ar(spec, args.p)
        else:
            pred = predict(spec, args.p)
            results[m], notes[m] = pred.resolved_group(), pred.source
    present = [g for g in results.values() if g is not None]
    consistent = all(g == present[0] for g in present)
    routes_agree = results.get("snf") is None or results.get("ar") is None or results["snf"] == results["ar"]

    if len(methods) == 1:
        g = results[methods[0]]
        if args.format == "json":
            print(json.dumps(g.to_json() if g is not None else None))
        else:
            print(format_group(g) if g is not None else f"not covered ({notes[methods[0]]})")
        return EXIT_OK

    if args.format == "json":
        out = {
            "family": spec.family,
            "n": spec.n,
            "p": args.p,
            "results": {m: (g.to_json() if g is not None else None) for m, g in results.items()},
            "notes": notes,
            "consistent": consistent,
        }
        print(json.dumps(out))
    else:
        for m, g in results.items():
            line = f"{m}: {format_group(g) if g is not None else '-'}"
            if m in notes:
                line += f"  [{notes[m]}]"
            print(line)
    if not routes_agree:
        print("snf and ar disagree", file=sys.stderr)
        return EXIT_INCONSISTENT
    if not consistent:
        print("closed form disagrees with the computed group", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    budget = vertex_budget(args.max_vertices)
    lines, failures, records = [], 0, []
    if args.suite in ("paper", "all"):
        for case, ok, detail in run_golden(budget):
            failures += not ok
            lines.append(f"{'PASS' if ok else 'FAIL'} paper: {case.name}" + ("" if ok else f" -- {detail}"))
            records.append({"suite": "paper", "case": case.name, "ok": ok, "detail": detail})
    if args.suite in ("cross", "all"):
        for family, n_lo in (("A", 1), ("D", 3)):
            for n in range(n_lo, args.max_n + 1):
                spec = DynkinSpec(family, n)
                for p in range(1, args.max_p + 1):
                    snf = k0_repetitive(K0Job(spec, p))
                    if orbit_size(spec, p) > budget:
                        ok, ar_text = True, "skipped(budget)"
                    else:
                        ar = k0_via_ar(spec, p)
                        ok, ar_text = ar == snf, format_group(ar)
                    failures += not ok
                    name = f"{family}{n} p={p}"
                    detail = f"snf={format_group(snf)} ar={ar_text}"
                    lines.append(f"{'PASS' if ok else 'FAIL'} cross: {name}" + ("" if ok else f" -- {detail}"))
                    records.append({"suite": "cross", "case": name, "ok": ok, "detail": detail})
    total = len(records)
    if args.format == "json":
        print(json.dumps({"cases": records, "passed": total - failures, "failed": failures}, ensure_ascii=False))
    else:
        print("\n".join(lines))
        print(f"{total - failures}/{total} passed")
    return EXIT_FAIL if failures else EXIT_OK


@dataclass(frozen=True)
class _Cell:
    family: str
    n: int
    p: int
    methods: tuple[str, ...]
    budget: int


def _sweep_cell(cell: _Cell) -> tuple[dict, bool]:
    spec = DynkinSpec(cell.family, cell.n)
    pred = predict(spec, cell.p)
    answers = {}
    if "snf" in cell.methods:
        answers["snf"] = k0_repetitive(K0Job(spec, cell.p))
    if "ar" in cell.methods and orbit_size(spec, cell.p) <= cell.budget:
        answers["ar"] = k0_via_ar(spec, cell.p)
    if "predict" in cell.methods:
        answers["predict"] = pred.resolved_group()
    consistent = "snf" not in answers or "ar" not in answers or answers["snf"] == answers["ar"]
    group = next((g for g in answers.values() if g is not None), None)
    row = {
        "family": cell.family,
        "n": cell.n,
        "p": cell.p,
        "group": format_group(group) if group is not None else "",
        "rank": group.rank if group is not None else None,
        "torsion": list(group.torsion) if group is not None else None,
        "source": pred.source,
    }
    return row, consistent


def cmd_sweep(args, parser) -> int:
    n_lo, n_hi = args.n_range
    p_lo, p_hi = args.p_range
    for n in (n_lo, n_hi):
        _spec_or_exit(parser, args.family, n)
    if p_lo < 1:
        parser.error("--p-range must start at 1 or more")
    methods = tuple(_expand(args.method))
    budget = vertex_budget(args.max_vertices)
    cells = [
        _Cell(args.family, n, p, methods, budget)
        for n in range(n_lo, n_hi + 1)
        for p in range(p_lo, p_hi + 1)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_cell, cells, chunksize=8))
    else:
        results = [_sweep_cell(c) for c in cells]
    rows = [r for r, _ in results]

    if args.format == "json":
        text = json.dumps(rows, ensure_ascii=False, indent=1) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            torsion = " ".join(str(d) for d in r["torsion"]) if r["torsion"] is not None else ""
            writer.writerow(
                [r["family"], r["n"], r["p"], r["group"].replace(" ⊕ ", " + "),
                 "" if r["rank"] is None else r["rank"], torsion, r["source"]]
            )
        text = buf.getvalue()

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as err:
            print(f"k0rep sweep: cannot write {args.out}: {err}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    if not all(ok for _, ok in results):
        print("snf and ar disagree on at least one cell", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k0rep", description="Grothendieck groups of repetitive cluster categories of type A and D."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flag(p):
        p.add_argument("--max-vertices", type=int, default=None,
                       help=f"AR-oracle vertex budget (default {DEFAULT_MAX_VERTICES}, or $K0REP_MAX_VERTICES)")

    c = sub.add_parser("compute", help="K_0 of one category")
    c.add_argument("--family", choices=("A", "D"), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--method", choices=METHODS, default="snf")
    c.add_argument("--format", choices=("text", "json"), default="text")
    budget_flag(c)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run golden cases and the cross-method grid")
    v.add_argument("--suite", choices=("paper", "cross", "all"), default="all")
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--max-p", type=int, default=8)
    v.add_argument("--format", choices=("text", "json"), default="text")
    budget_flag(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="tabulate K_0 over a grid of (n, p)")
    s.add_argument("--family", choices=("A", "D"), required=True)
    s.add_argument("--n-range", type=parse_range, required=True, metavar="LO..HI")
    s.add_argument("--p-range", type=parse_range, required=True, metavar="LO..HI")
    s.add_argument("--method", choices=METHODS, default="snf")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--out", default=None, metavar="PATH")
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    budget_flag(s)
    s.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
