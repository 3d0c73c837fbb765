"""Published values used by ``k0rep verify --suite paper``.

Each case is a named check returning ``(ok, detail)``.  Group cases are
checked against the Coxeter cokernel and, within the vertex budget, the
AR-mesh oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from k0rep.abelian import FgAbelianGroup, Presentation, format_group, from_presentation
from k0rep.ar_quiver import build_orbit_quiver, k0_via_ar, orbit_size
from k0rep.coxeter import K0Job, apply_phi_power, k0_repetitive, relation_matrix
from k0rep.dynkin import DynkinSpec, cartan_matrix, coxeter_matrix, injective_classes, phi_power
from k0rep.linalg import IntMatrix, cokernel

Z = FgAbelianGroup.free
ZERO = FgAbelianGroup()


def _z2(n: int) -> FgAbelianGroup:
    return FgAbelianGroup(torsion=(2,) * n)


@dataclass(frozen=True)
class GoldenCase:
    name: str
    check: Callable[[int], tuple[bool, str]]


def _group_case(family: str, n: int, p: int, expected: FgAbelianGroup, label: str) -> GoldenCase:
    def check(max_vertices: int) -> tuple[bool, str]:
        spec = DynkinSpec(family, n)
        got = k0_repetitive(K0Job(spec, p))
        ok = got == expected
        detail = f"snf={format_group(got)}"
        if orbit_size(spec, p) <= max_vertices:
            ar = k0_via_ar(spec, p)
            ok = ok and ar == expected
            detail += f" ar={format_group(ar)}"
        else:
            detail += " ar=skipped(budget)"
        return ok, f"expected {format_group(expected)}, {detail}"

    return GoldenCase(f"K0 {family}{n} p={p} = {format_group(expected)} ({label})", check)


def _fact(name: str, fn: Callable[[], tuple[bool, str]]) -> GoldenCase:
    return GoldenCase(name, lambda _budget: fn())


def _matrix_fact(name: str, got: Callable[[], object], expected: object) -> GoldenCase:
    def fn():
        g = got()
        return g == expected, f"expected {expected!r}, got {g!r}"

    return _fact(name, fn)


def _order_fact(family: str, n: int, h: int, sign: int) -> GoldenCase:
    def fn():
        spec = DynkinSpec(family, n)
        target = IntMatrix.identity(n).scale(sign)
        power = phi_power(spec, h)
        return power == target, f"Phi^{h} = {power.tolist()}"

    return _fact(f"Coxeter {family}{n}: Phi^{h} = {'+' if sign > 0 else '-'}I", fn)


def golden_cases() -> list[GoldenCase]:
    cases = [
        _matrix_fact(
            "Cartan D4 columns",
            lambda: cartan_matrix(DynkinSpec("D", 4)).columns(),
            [(1, 0, 1, 1), (0, 1, 1, 1), (0, 0, 1, 1), (0, 0, 0, 1)],
        ),
        _matrix_fact("[I_3] in D4", lambda: injective_classes(DynkinSpec("D", 4))[3], (1, 1, 1, 1)),
        _matrix_fact("[I_0] in D4", lambda: injective_classes(DynkinSpec("D", 4))[0], (1, 0, 0, 0)),
        _matrix_fact(
            "Coxeter matrix A2", lambda: coxeter_matrix(DynkinSpec("A", 2)).tolist(), [[0, -1], [1, -1]]
        ),
        _matrix_fact(
            "Coxeter D4, tau S_0 = S_2 + S_1",
            lambda: coxeter_matrix(DynkinSpec("D", 4)).column(0),
            (0, 1, 1, 0),
        ),
        _order_fact("A", 3, 4, 1),
        _order_fact("D", 5, 4, -1),
        _matrix_fact(
            "Coker(2I) = (Z/2)^3",
            lambda: cokernel(IntMatrix.identity(3).scale(2)),
            _z2(3),
        ),
        _matrix_fact(
            "<x | -x = 0> = 0", lambda: from_presentation(Presentation(1, ((-1,),))), ZERO
        ),
        _matrix_fact("<x> = Z", lambda: from_presentation(Presentation(1, ())), Z(1)),
        _matrix_fact(
            "I - Phi^4 = 0 for A3",
            lambda: relation_matrix(K0Job.of("A", 3, 4)),
            IntMatrix.zeros(3, 3),
        ),
        _matrix_fact(
            "I + Phi^3 = 2I for A2",
            lambda: relation_matrix(K0Job.of("A", 2, 3)),
            IntMatrix.identity(2).scale(2),
        ),
        _matrix_fact(
            "Phi^2 e_1 = e_3 for A5",
            lambda: apply_phi_power(K0Job.of("A", 5, 2), (1, 0, 0, 0, 0)),
            (0, 0, 1, 0, 0),
        ),
        _matrix_fact(
            "Phi^3 e_0 = e_1 + e_2 + e_3 + e_4 for D6",
            lambda: apply_phi_power(K0Job.of("D", 6, 3), (1, 0, 0, 0, 0, 0)),
            (0, 1, 1, 1, 1, 0),
        ),
        _matrix_fact(
            "AR-quiver of C(D3, p=2) has 18 vertices",
            lambda: len(build_orbit_quiver(DynkinSpec("D", 3), 2).vertices),
            18,
        ),
        _group_case("A", 3, 1, Z(1), "cluster category, n odd"),
        _group_case("A", 2, 1, ZERO, "cluster category, n even"),
        _group_case("D", 4, 1, Z(2), "cluster category, n even"),
        _group_case("D", 5, 1, Z(1), "cluster category, n odd"),
        _group_case("A", 2, 3, _z2(2), "p ≡ n+1 mod 2(n+1)"),
        _group_case("A", 2, 5, ZERO, "n = 2 table"),
        _group_case("A", 2, 7, ZERO, "n = 2 table"),
        _group_case("A", 2, 6, Z(2), "n = 2 table"),
        _group_case("D", 5, 4, Z(5), "p ≡ n−1 mod 2(n−1), n odd"),
        _group_case("D", 5, 8, Z(5), "p ≡ 0 mod 2(n−1)"),
    ]
    for p in (1, 5, 9, 13):
        cases.append(_group_case("A", 3, p, Z(1), "n = 3 table, p ≡ 1 mod 4"))
    for p in (3, 7, 11, 15):
        cases.append(_group_case("A", 3, p, Z(1), "n = 3 table, p ≡ 3 mod 4"))
    for p in (4, 8, 12, 16):
        cases.append(_group_case("A", 3, p, Z(3), "n = 3 table, p ≡ 0 mod 4"))
    return cases


def run_golden(max_vertices: int) -> list[tuple[GoldenCase, bool, str]]:
    return [(case, *case.check(max_vertices)) for case in golden_cases()]
