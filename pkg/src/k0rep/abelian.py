"""Finitely generated abelian groups in invariant-factor form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ... | d_k`` and every ``d_i >= 2``.

    Two groups are isomorphic exactly when their fields are equal.
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", torsion)
        if self.rank < 0:
            raise ValueError(f"negative rank {self.rank}")
        for d in torsion:
            if d < 2:
                raise ValueError(f"torsion factor {d} < 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {torsion} is not a divisibility chain")

    @classmethod
    def free(cls, rank: int) -> FgAbelianGroup:
        return cls(rank=rank)

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> FgAbelianGroup:
        """Direct sum of cyclic groups ``Z/o`` (``o == 0`` meaning ``Z``), normalised.

        Orders need not form a chain; they are combined into invariant factors.
        """
        from k0rep.linalg import IntMatrix, cokernel

        return cokernel(IntMatrix.diagonal(len(orders), len(orders), [abs(o) for o in orders]))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` when infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, obj: dict) -> FgAbelianGroup:
        return cls(rank=int(obj["rank"]), torsion=tuple(obj["torsion"]))

    def __str__(self) -> str:
        return format_group(self)


def is_isomorphic(g: FgAbelianGroup, h: FgAbelianGroup) -> bool:
    return g.rank == h.rank and g.torsion == h.torsion


def format_group(g: FgAbelianGroup, sep: str = " ⊕ ") -> str:
    """Human-readable form: ``"0"``, ``"Z"``, ``"Z^3 ⊕ Z/2"``."""
    parts = []
    if g.rank == 1:
        parts.append("Z")
    elif g.rank > 1:
        parts.append(f"Z^{g.rank}")
    parts.extend(f"Z/{d}" for d in g.torsion)
    return sep.join(parts) if parts else "0"


@dataclass(frozen=True)
class Presentation:
    """``<x_1..x_m | r_1, r_2, ...>`` with each relation an integer vector of length m."""

    num_generators: int
    relations: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        rels = tuple(tuple(int(c) for c in r) for r in self.relations)
        object.__setattr__(self, "relations", rels)
        if self.num_generators < 0:
            raise ValueError("negative generator count")
        for r in rels:
            if len(r) != self.num_generators:
                raise ValueError(
                    f"relation {r} has length {len(r)}, expected {self.num_generators}"
                )

    def __str__(self) -> str:
        gens = ", ".join(f"x{i + 1}" for i in range(self.num_generators))
        if not self.relations:
            return f"<{gens}>"

        def term(c, i):
            return f"x{i + 1}" if c == 1 else f"-x{i + 1}" if c == -1 else f"{c}x{i + 1}"

        rels = []
        for r in self.relations:
            body = " + ".join(term(c, i) for i, c in enumerate(r) if c) or "0"
            rels.append(body.replace("+ -", "- ") + " = 0")
        return f"<{gens} | {', '.join(rels)}>"


def from_presentation(p: Presentation) -> FgAbelianGroup:
    """Evaluate a presentation: the cokernel of its relation matrix."""
    from k0rep.linalg import IntMatrix, cokernel

    m = IntMatrix.from_columns(p.relations, rows=p.num_generators)
    return cokernel(m)


def canonical_presentation(g: FgAbelianGroup) -> Presentation:
    """One generator per cyclic factor, torsion generators first."""
    m = len(g.torsion) + g.rank
    rels = []
    for i, d in enumerate(g.torsion):
        r = [0] * m
        r[i] = d
        rels.append(tuple(r))
    return Presentation(m, tuple(rels))
