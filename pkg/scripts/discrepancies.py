"""List every covered (family, n, p) where the closed form disagrees with K_0.

Also re-evaluates the even-n, even-p presentation with m = gcd(p, n + 1),
which is the reading that matches the computed groups.
"""

from __future__ import annotations

import argparse
import re
from collections import Counter
from dataclasses import dataclass
from math import gcd

from k0rep.abelian import Presentation, format_group, from_presentation
from k0rep.closed_forms import predict, theorem_range
from k0rep.coxeter import K0Job, k0_repetitive
from k0rep.dynkin import DynkinSpec


@dataclass(frozen=True)
class ScanConfig:
    max_n: int = 11
    periods: int = 2


def even_even_corrected(n: int, p: int) -> Presentation:
    m = gcd(p, n + 1)
    a, b = divmod(n, m)
    c = (n + 1 - p) % m or m
    rel = [a + 1 if j <= b else a for j in range(1, m + 1)]
    rel[c - 1] += 1
    return Presentation(m, (tuple(rel),))


def scan(cfg: ScanConfig) -> list[tuple[str, int, int, str, str, str]]:
    out = []
    for family, lo in (("A", 1), ("D", 3)):
        for n in range(lo, cfg.max_n + 1):
            period = 2 * (n + 1) if family == "A" else 2 * (n - 1)
            for p in range(1, cfg.periods * period + 1):
                pr = predict(DynkinSpec(family, n), p)
                claimed = pr.resolved_group()
                if claimed is None:
                    continue
                actual = k0_repetitive(K0Job.of(family, n, p))
                if claimed != actual:
                    out.append((family, n, p, format_group(claimed), format_group(actual), pr.source))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=ScanConfig.max_n)
    ap.add_argument("--periods", type=int, default=ScanConfig.periods)
    ap.add_argument("--quiet", action="store_true", help="only print per-rule counts")
    args = ap.parse_args()
    rows = scan(ScanConfig(args.max_n, args.periods))
    if not args.quiet:
        for family, n, p, claimed, actual, source in rows:
            print(f"{family}{n} p={p}: closed form {claimed}, computed {actual}  [{source}]")
    print("\nper rule:")
    for rule, count in sorted(Counter(re.sub(r" \(q=.*", "", r[5]) for r in rows).items()):
        print(f"  {count:4d}  {rule}")

    print("\neven n, even p with m = gcd(p, n + 1):")
    bad = 0
    for n in range(2, args.max_n + 1, 2):
        for p in range(2, theorem_range(n) + 1, 2):
            got = from_presentation(even_even_corrected(n, p))
            bad += got != k0_repetitive(K0Job.of("A", n, p))
    print(f"  {bad} mismatches")


if __name__ == "__main__":
    main()
