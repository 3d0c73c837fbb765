"""Brute-force K_0 from the Auslander-Reiten quiver of the orbit category.

The derived category of a Dynkin quiver has AR-quiver Z*Delta.  Its
vertices are ``(x, level)``; for every edge ``a - b`` of the diagram with
``a < b`` there are arrows ``(x, a) -> (x, b)`` and ``(x, b) -> (x + 1, a)``,
and ``tau(x, l) = (x - 1, l)``.  The repetitive cluster category has as
AR-quiver the quotient of Z*Delta by the glide ``(tau^-1 Sigma)^p``.  Its
Grothendieck group is the free group on the orbit vertices modulo one mesh
relation ``[tau Z] - sum(middles) + [Z]`` per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from k0rep.abelian import FgAbelianGroup
from k0rep.dynkin import DynkinSpec
from k0rep.linalg import IntMatrix, cokernel


class ZVertex(NamedTuple):
    x: int
    level: int

    def __str__(self) -> str:
        return f"({self.x},{self.level})"


class GlideError(RuntimeError):
    """The glide does not act as a translation after finitely many steps."""


def levels(spec: DynkinSpec) -> list[int]:
    return list(range(1, spec.n + 1)) if spec.family == "A" else list(range(spec.n))


def edges(spec: DynkinSpec) -> list[tuple[int, int]]:
    if spec.family == "A":
        return [(l, l + 1) for l in range(1, spec.n)]
    return [(0, 2), (1, 2)] + [(l, l + 1) for l in range(2, spec.n - 1)]


@lru_cache(maxsize=None)
def _neighbours(spec: DynkinSpec) -> tuple[dict, dict]:
    up = {l: [] for l in levels(spec)}    # l -> larger neighbours
    down = {l: [] for l in levels(spec)}  # l -> smaller neighbours
    for a, b in edges(spec):
        up[a].append(b)
        down[b].append(a)
    return up, down


def tau(v: ZVertex) -> ZVertex:
    return ZVertex(v.x - 1, v.level)


def tau_inverse(v: ZVertex) -> ZVertex:
    return ZVertex(v.x + 1, v.level)


def shift_sigma(spec: DynkinSpec, v: ZVertex) -> ZVertex:
    """The suspension as an automorphism of Z*Delta.

    Type A reflects the levels: ``(x, y) -> (x + y, n + 1 - y)``.  Type D
    translates by ``n - 1`` and, for odd ``n``, swaps the fork levels 0 and 1.
    """
    if spec.family == "A":
        return ZVertex(v.x + v.level, spec.n + 1 - v.level)
    level = v.level
    if spec.n % 2 and level in (0, 1):
        level = 1 - level
    return ZVertex(v.x + spec.n - 1, level)


def predecessors(spec: DynkinSpec, v: ZVertex) -> list[ZVertex]:
    up, down = _neighbours(spec)
    return [ZVertex(v.x, a) for a in down[v.level]] + [ZVertex(v.x - 1, b) for b in up[v.level]]


def successors(spec: DynkinSpec, v: ZVertex) -> list[ZVertex]:
    up, down = _neighbours(spec)
    return [ZVertex(v.x, b) for b in up[v.level]] + [ZVertex(v.x + 1, a) for a in down[v.level]]


@dataclass(frozen=True)
class Glide:
    """``(x, l) -> (x + shift[l], perm[l])``, the map ``(tau^-1 Sigma)^p``.

    ``period`` is the least power acting as a pure translation, by ``width``.
    """

    shift: dict
    perm: dict
    period: int
    width: int

    def __call__(self, v: ZVertex) -> ZVertex:
        return ZVertex(v.x + self.shift[v.level], self.perm[v.level])


def make_glide(spec: DynkinSpec, p: int) -> Glide:
    shift, perm = {}, {}
    for l in levels(spec):
        v = ZVertex(0, l)
        for _ in range(p):
            v = tau_inverse(shift_sigma(spec, v))
        shift[l], perm[l] = v.x, v.level
    # smallest power of the level permutation that is the identity
    period, cur = 1, dict(perm)
    while any(cur[l] != l for l in cur):
        cur = {l: perm[cur[l]] for l in cur}
        period += 1
        if period > len(perm):
            raise GlideError(f"level permutation of {spec} glide has no finite order")
    widths = set()
    for l in levels(spec):
        v = ZVertex(0, l)
        for _ in range(period):
            v = ZVertex(v.x + shift[v.level], perm[v.level])
        widths.add(v.x)
    if len(widths) != 1 or widths == {0}:
        raise GlideError(f"glide power for {spec}, p={p} is not a translation: {widths}")
    return Glide(shift, perm, period, widths.pop())


def canonical(glide: Glide, v: ZVertex) -> ZVertex:
    """Least ``(x, level)`` among the glide orbit's points in ``0 <= x < width``."""
    best = None
    w = v
    for _ in range(glide.period):
        cand = ZVertex(w.x % glide.width, w.level)
        if best is None or cand < best:
            best = cand
        w = glide(w)
    return best


@dataclass
class OrbitQuiver:
    spec: DynkinSpec
    p: int
    glide: Glide
    vertices: list[ZVertex]
    arrows: list[tuple[ZVertex, ZVertex]]
    tau: dict[ZVertex, ZVertex]
    index: dict[ZVertex, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        self.index = {v: i for i, v in enumerate(self.vertices)}

    def arrows_into(self, v: ZVertex) -> list[ZVertex]:
        return [s for s, t in self.arrows if t == v]


def orbit_size(spec: DynkinSpec, p: int) -> int:
    """Expected vertex count of the orbit quiver: p copies of a cluster-category domain."""
    return p * spec.num_cluster_indecomposables


def build_orbit_quiver(spec: DynkinSpec, p: int) -> OrbitQuiver:
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    g = make_glide(spec, p)
    reps = set()
    for x in range(g.width):
        for l in levels(spec):
            v = ZVertex(x, l)
            c = canonical(g, v)
            # the canonical point of an orbit must be fixed by canonicalisation
            if canonical(g, c) != c:
                raise GlideError(f"{v} maps to two representatives")
            reps.add(c)
    vertices = sorted(reps)
    arrows = [(v, canonical(g, w)) for v in vertices for w in successors(spec, v)]
    tau_map = {v: canonical(g, tau(v)) for v in vertices}
    if len(set(tau_map.values())) != len(vertices):
        raise GlideError("tau is not a bijection on orbit vertices")
    return OrbitQuiver(spec, p, g, vertices, arrows, tau_map)


@dataclass(frozen=True)
class MeshRelation:
    start: ZVertex
    middles: tuple[ZVertex, ...]
    end: ZVertex


def mesh_relations(q: OrbitQuiver) -> list[MeshRelation]:
    """One mesh ``tau Z -> middles -> Z`` per orbit vertex, in vertex order."""
    into = {v: [] for v in q.vertices}
    for s, t in q.arrows:
        into[t].append(s)
    return [MeshRelation(q.tau[z], tuple(sorted(into[z])), z) for z in q.vertices]


def ar_relation_matrix(q: OrbitQuiver) -> IntMatrix:
    """Vertices x relations; column ``j`` is ``[tau Z] - sum [E] + [Z]`` for the j-th mesh."""
    cols = []
    for rel in mesh_relations(q):
        col = [0] * len(q.vertices)
        col[q.index[rel.start]] += 1
        col[q.index[rel.end]] += 1
        for e in rel.middles:
            col[q.index[e]] -= 1
        cols.append(col)
    return IntMatrix.from_columns(cols, rows=len(q.vertices))


def k0_via_ar(spec: DynkinSpec, p: int) -> FgAbelianGroup:
    return cokernel(ar_relation_matrix(build_orbit_quiver(spec, p)))


def knit_classes(spec: DynkinSpec, width: int) -> dict[ZVertex, tuple[int, ...]]:
    """Additive K_0 classes on ``0 <= x < width`` of Z*Delta.

    The slice ``x = 0`` gets the unit vectors; every later vertex follows
    from its mesh, ``[Z] = sum [middles] - [tau Z]``.
    """
    ls = levels(spec)
    unit = {l: tuple(int(k == i) for k in range(len(ls))) for i, l in enumerate(ls)}
    cls = {ZVertex(0, l): unit[l] for l in ls}
    for x in range(1, width):
        for l in ls:  # increasing level: the same-column predecessors are done
            z = ZVertex(x, l)
            acc = [-c for c in cls[tau(z)]]
            for m in predecessors(spec, z):
                acc = [a + b for a, b in zip(acc, cls[m])]
            cls[z] = tuple(acc)
    return cls


def to_dot(q: OrbitQuiver) -> str:
    """Graphviz source for the orbit quiver; dotted edges show tau."""
    lines = [f'digraph "C_{q.spec.family}{q.spec.n}_p{q.p}" {{', "  rankdir=LR;"]
    for v in q.vertices:
        lines.append(f'  "{v}" [pos="{v.x},{v.level}!"];')
    for s, t in q.arrows:
        lines.append(f'  "{s}" -> "{t}";')
    for z, tz in q.tau.items():
        lines.append(f'  "{z}" -> "{tz}" [style=dotted, arrowhead=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"
