"""K_0 of the repetitive cluster category as a cokernel of ``1 -+ Phi^p``.

The orbit category of the derived category under ``(tau^-1 Sigma)^p``
identifies ``[X]`` with ``[tau^-p Sigma^p X] = (-1)^p Phi^-p [X]``, so its
Grothendieck group is the cokernel of ``I - (-1)^p Phi^p``: ``I + Phi^p`` for
odd ``p`` and ``I - Phi^p`` for even ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from k0rep.abelian import FgAbelianGroup
from k0rep.dynkin import DynkinSpec, coxeter_matrix, order_identities
from k0rep.linalg import IntMatrix, cokernel, mat_pow


@dataclass(frozen=True)
class K0Job:
    spec: DynkinSpec
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")

    @classmethod
    def of(cls, family: str, n: int, p: int) -> K0Job:
        return cls(DynkinSpec(family, n), p)

    def __str__(self) -> str:
        return f"C({self.spec.family},{self.spec.n},p={self.p})"


def relation_matrix(job: K0Job, fast: bool = False) -> IntMatrix:
    """``I + Phi^p`` (p odd) or ``I - Phi^p`` (p even).

    With ``fast`` the exponent is first reduced using the Coxeter order; the
    default computes ``Phi^p`` outright so periodicity is checked, not assumed.
    """
    phi = coxeter_matrix(job.spec)
    ident = IntMatrix.identity(job.spec.n)
    if fast:
        h, sign = order_identities(job.spec)
        q, r = divmod(job.p, h)
        power = mat_pow(phi, r)
        if sign < 0 and q % 2:
            power = -power
    else:
        power = mat_pow(phi, job.p)
    return ident + power if job.p % 2 else ident - power


def k0_repetitive(job: K0Job, fast: bool = False) -> FgAbelianGroup:
    return cokernel(relation_matrix(job, fast=fast))


def apply_phi_power(job: K0Job, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != job.spec.n:
        raise ValueError(f"vector of length {len(v)} for rank {job.spec.n}")
    return mat_pow(coxeter_matrix(job.spec), job.p).apply(v)


def job_result(job: K0Job, group: FgAbelianGroup, method: str = "snf") -> dict:
    """JSON-ready record: job parameters plus the group encoding."""
    return {
        "family": job.spec.family,
        "n": job.spec.n,
        "p": job.p,
        "method": method,
        **group.to_json(),
    }
