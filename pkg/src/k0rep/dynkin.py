"""Dynkin quivers of type A and D: simple-basis classes, Cartan and Coxeter matrices.

Orientations are fixed.  Type A has vertices 1..n with arrows i -> i+1.
Type D has vertices 0..n-1 with arrows i-1 -> i for i >= 2 and 0 -> 2, so
vertices 0 and 1 are the two tines of the fork, both pointing into 2.

All vectors are coordinates in the basis of simple classes, in the order
returned by ``simple_index_set``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from k0rep.linalg import IntMatrix, mat_pow

Family = Literal["A", "D"]


@dataclass(frozen=True)
class DynkinSpec:
    family: Family
    n: int

    def __post_init__(self):
        if self.family not in ("A", "D"):
            raise ValueError(f"unknown Dynkin family {self.family!r}")
        if self.family == "A" and self.n < 1:
            raise ValueError("type A needs n >= 1")
        if self.family == "D" and self.n < 3:
            raise ValueError("type D needs n >= 3")

    def __str__(self) -> str:
        return f"{self.family}{self.n}"

    @property
    def coxeter_number(self) -> int:
        return self.n + 1 if self.family == "A" else 2 * (self.n - 1)

    @property
    def num_cluster_indecomposables(self) -> int:
        """Indecomposables of the classical cluster category (one glide domain)."""
        return self.n * (self.n + 3) // 2 if self.family == "A" else self.n * self.n


def simple_index_set(spec: DynkinSpec) -> list[int]:
    if spec.family == "A":
        return list(range(1, spec.n + 1))
    return list(range(spec.n))


def _arrows(spec: DynkinSpec) -> list[tuple[int, int]]:
    if spec.family == "A":
        return [(i, i + 1) for i in range(1, spec.n)]
    return [(0, 2)] + [(i - 1, i) for i in range(2, spec.n)]


def _reachable(spec: DynkinSpec) -> dict[int, set[int]]:
    """Vertex -> set of vertices reachable by a (possibly empty) path."""
    succ: dict[int, list[int]] = {v: [] for v in simple_index_set(spec)}
    for s, t in _arrows(spec):
        succ[s].append(t)
    out = {}
    for v in succ:
        seen, stack = {v}, [v]
        while stack:
            for w in succ[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out[v] = seen
    return out


def _indicator(spec: DynkinSpec, support) -> tuple[int, ...]:
    return tuple(int(v in support) for v in simple_index_set(spec))


def projective_classes(spec: DynkinSpec) -> list[tuple[int, ...]]:
    """``[P_i]``: composition factors are the vertices reachable from ``i``."""
    reach = _reachable(spec)
    return [_indicator(spec, reach[i]) for i in simple_index_set(spec)]


def injective_classes(spec: DynkinSpec) -> list[tuple[int, ...]]:
    """``[I_i]``: composition factors are the vertices from which ``i`` is reachable."""
    reach = _reachable(spec)
    labels = simple_index_set(spec)
    return [_indicator(spec, {j for j in labels if i in reach[j]}) for i in labels]


@lru_cache(maxsize=None)
def cartan_matrix(spec: DynkinSpec) -> IntMatrix:
    """Columns are the projective classes."""
    return IntMatrix.from_columns(projective_classes(spec))


def _unitriangular_inverse(c: IntMatrix) -> IntMatrix:
    # The Cartan matrix is lower unitriangular in the simple ordering for both
    # orientations (every arrow goes from a smaller to a larger label).
    n = c.rows
    inv = [[0] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = 1
        for i in range(j + 1, n):
            inv[i][j] = -sum(c[i, k] * inv[k][j] for k in range(j, i))
    return IntMatrix(inv, cols=n)


@lru_cache(maxsize=None)
def coxeter_matrix(spec: DynkinSpec) -> IntMatrix:
    """``Phi = -C^T C^{-1}``, so that ``Phi [P_i] = -[I_i]`` and ``Phi [X] = [tau X]``."""
    c = cartan_matrix(spec)
    return -(c.T @ _unitriangular_inverse(c))


def order_identities(spec: DynkinSpec) -> tuple[int, int]:
    """Least ``h >= 1`` with ``Phi**h == sign * I``, returned as ``(h, sign)``."""
    phi = coxeter_matrix(spec)
    ident = IntMatrix.identity(spec.n)
    power = ident
    for h in range(1, 2 * (spec.n + 1) + 1):
        power = power @ phi
        if power == ident:
            return h, 1
        if power == -ident:
            return h, -1
    raise RuntimeError(f"no power of the Coxeter matrix of {spec} is +-I; convention bug")


def phi_power(spec: DynkinSpec, p: int) -> IntMatrix:
    return mat_pow(coxeter_matrix(spec), p)
