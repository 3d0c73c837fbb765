"""Write the AR-quiver of C_{n,p} as a Graphviz DOT file.

Example: python3 scripts/export_orbit_quiver.py A 3 3 -o a3_p3.dot
"""

from __future__ import annotations

import argparse
import sys

from k0rep.ar_quiver import build_orbit_quiver, mesh_relations, to_dot
from k0rep.dynkin import DynkinSpec


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("family", choices=("A", "D"))
    ap.add_argument("n", type=int)
    ap.add_argument("p", type=int)
    ap.add_argument("-o", "--out", default=None)
    ap.add_argument("--relations", action="store_true", help="also print the mesh relations")
    args = ap.parse_args()
    q = build_orbit_quiver(DynkinSpec(args.family, args.n), args.p)
    dot = to_dot(q)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dot)
        print(f"{len(q.vertices)} vertices, {len(q.arrows)} arrows -> {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(dot)
    if args.relations:
        for r in mesh_relations(q):
            mids = " + ".join(str(v) for v in r.middles) or "0"
            print(f"[{r.start}] - ({mids}) + [{r.end}]", file=sys.stderr)


if __name__ == "__main__":
    main()
