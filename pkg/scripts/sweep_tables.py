"""Print K_0 tables over a grid of (n, p) for both families.

Example: python3 scripts/sweep_tables.py --max-n 6 --max-p 12
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from k0rep.abelian import format_group
from k0rep.coxeter import K0Job, k0_repetitive


@dataclass(frozen=True)
class TableConfig:
    max_n: int = 6
    max_p: int = 12
    families: tuple[str, ...] = ("A", "D")


def table(family: str, cfg: TableConfig) -> list[list[str]]:
    lo = 1 if family == "A" else 3
    rows = []
    for n in range(lo, cfg.max_n + 1):
        rows.append([f"{family}{n}"] + [
            format_group(k0_repetitive(K0Job.of(family, n, p))).replace(" ⊕ ", "+")
            for p in range(1, cfg.max_p + 1)
        ])
    return rows


def render(rows: list[list[str]], max_p: int) -> str:
    header = [""] + [f"p={p}" for p in range(1, max_p + 1)]
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths))  # noqa: E731
    return "\n".join([fmt(header)] + [fmt(r) for r in rows])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=TableConfig.max_n)
    ap.add_argument("--max-p", type=int, default=TableConfig.max_p)
    ap.add_argument("--family", choices=("A", "D"), action="append")
    args = ap.parse_args()
    cfg = TableConfig(args.max_n, args.max_p, tuple(args.family or TableConfig.families))
    for family in cfg.families:
        print(f"type {family}")
        print(render(table(family, cfg), cfg.max_p))
        print()


if __name__ == "__main__":
    main()
