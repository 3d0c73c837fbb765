"""Exact integer matrices, powers and Smith normal form.

Everything here works on Python ints, so nothing overflows: entries of
Coxeter powers grow before they get reduced, and the cokernel computation
must see them exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from k0rep.abelian import FgAbelianGroup


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]], cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(([int(i == j) for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(([0] * cols for _ in range(rows)), cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> IntMatrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        for c in columns:
            if len(c) != rows:
                raise ValueError("columns of unequal length")
        return cls(([c[i] for c in columns] for i in range(rows)), cols=len(columns))

    @classmethod
    def diagonal(cls, rows: int, cols: int, diag: Sequence[int]) -> IntMatrix:
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls(out, cols=cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(zip(*self._data), cols=self.rows) if self.rows else IntMatrix.zeros(self.cols, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(([a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)), cols=self.cols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(([a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)), cols=self.cols)

    def __neg__(self) -> IntMatrix:
        return IntMatrix(([-a for a in r] for r in self._data), cols=self.cols)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(([k * a for a in r] for r in self._data), cols=self.cols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            ([sum(a * b for a, b in zip(r, c)) for c in other_cols] for r in self._data),
            cols=other.cols,
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._data)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix((r + s for r, s in zip(self._data, other._data)), cols=self.cols + other.cols)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def mat_pow(m: IntMatrix, p: int) -> IntMatrix:
    """Exact ``m**p`` by repeated squaring; ``m**0`` is the identity."""
    if not m.is_square:
        raise ValueError(f"power of non-square {m.shape} matrix")
    if p < 0:
        raise ValueError("negative exponent")
    result = IntMatrix.identity(m.rows)
    base = m
    while p:
        if p & 1:
            result = result @ base
        p >>= 1
        if p:
            base = base @ base
    return result


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == diag(d)`` with ``d`` a divisibility chain, zeros last.

    ``U`` and ``V`` are ``None`` when transforms were not requested.
    """

    d: tuple[int, ...]
    U: IntMatrix | None = None
    V: IntMatrix | None = None


def smith_normal_form(m: IntMatrix, transforms: bool = True) -> SnfResult:
    """Smith normal form over the integers.

    The pivot at each stage is the nonzero entry of least absolute value in
    the remaining block (first in row-major order on ties).  Rows are reduced
    against the pivot, then columns, and the pivot is replaced by any smaller
    remainder until its row and column are clear and it divides the rest of
    the block.
    """
    rows, cols = m.shape
    a = m.tolist()
    u = IntMatrix.identity(rows).tolist() if transforms else None
    v = IntMatrix.identity(cols).tolist() if transforms else None

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            if u is not None:
                u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            if v is not None:
                for r in v:
                    r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        rs, rd = a[src], a[dst]
        for j in range(cols):
            if rs[j]:
                rd[j] += q * rs[j]
        if u is not None:
            us, ud = u[src], u[dst]
            for j in range(rows):
                if us[j]:
                    ud[j] += q * us[j]

    def add_col(dst, src, q):
        for r in a:
            if r[src]:
                r[dst] += q * r[src]
        if v is not None:
            for r in v:
                if r[src]:
                    r[dst] += q * r[src]

    def find_pivot(t):
        best = None
        for i in range(t, rows):
            r = a[i]
            for j in range(t, cols):
                x = r[j]
                if x:
                    ax = abs(x)
                    if best is None or ax < best[0]:
                        best = (ax, i, j)
                        if ax == 1:
                            return best
        return best

    diag = []
    for t in range(min(rows, cols)):
        found = find_pivot(t)
        if found is None:
            break
        _, pi, pj = found
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            piv = a[t][t]
            moved = False
            for i in range(t + 1, rows):
                x = a[i][t]
                if x:
                    add_row(i, t, -(x // piv))
                    if a[i][t]:
                        moved = True
            for j in range(t + 1, cols):
                x = a[t][j]
                if x:
                    add_col(j, t, -(x // piv))
                    if a[t][j]:
                        moved = True
            if moved:
                # a nonzero remainder is smaller than the pivot; bring it in
                best = None
                for i in range(t, rows):
                    x = a[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, cols):
                    x = a[t][j]
                    if x and abs(x) < best[0]:
                        best = (abs(x), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad_row = None
            for i in range(t + 1, rows):
                r = a[i]
                for j in range(t + 1, cols):
                    if r[j] % piv:
                        bad_row = i
                        break
                if bad_row is not None:
                    break
            if bad_row is None:
                break
            add_row(t, bad_row, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        diag.append(a[t][t])

    d = tuple(diag) + (0,) * (min(rows, cols) - len(diag))
    if not transforms:
        return SnfResult(d)
    return SnfResult(d, IntMatrix(u, cols=rows), IntMatrix(v, cols=cols))


def cokernel(m: IntMatrix) -> FgAbelianGroup:
    """``Z^rows`` modulo the column span of ``m``."""
    d = smith_normal_form(m, transforms=False).d
    nonzero = [x for x in d if x]
    return FgAbelianGroup(rank=m.rows - len(nonzero), torsion=tuple(x for x in nonzero if x > 1))
