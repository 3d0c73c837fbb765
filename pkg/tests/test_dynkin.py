import pytest
from sympy import Matrix, eye

from k0rep.dynkin import (
    DynkinSpec,
    cartan_matrix,
    coxeter_matrix,
    injective_classes,
    order_identities,
    phi_power,
    projective_classes,
    simple_index_set,
)
from k0rep.linalg import IntMatrix


def quiver_arrows(family, n):
    # written out independently of the package: A has i -> i+1, D has 0 -> 2 and i-1 -> i
    if family == "A":
        return [(i, i + 1) for i in range(1, n)]
    return [(0, 2)] + [(i - 1, i) for i in range(2, n)]


def count_paths(arrows, src, dst):
    if src == dst:
        return 1
    return sum(count_paths(arrows, t, dst) for s, t in arrows if s == src)


def cartan_by_paths(family, n):
    labels = list(range(1, n + 1)) if family == "A" else list(range(n))
    arrows = quiver_arrows(family, n)
    return [[count_paths(arrows, j, i) for j in labels] for i in labels]


SPECS = [DynkinSpec("A", n) for n in range(1, 13)] + [DynkinSpec("D", n) for n in range(3, 13)]


def test_simple_index_set():
    assert simple_index_set(DynkinSpec("A", 3)) == [1, 2, 3]
    assert simple_index_set(DynkinSpec("D", 4)) == [0, 1, 2, 3]
    assert simple_index_set(DynkinSpec("D", 3)) == [0, 1, 2]


@pytest.mark.parametrize("family,n", [("A", 0), ("D", 2), ("E", 6)])
def test_invalid_specs(family, n):
    with pytest.raises(ValueError):
        DynkinSpec(family, n)


def test_cartan_examples():
    assert cartan_matrix(DynkinSpec("A", 2)).columns() == [(1, 1), (0, 1)]
    assert cartan_matrix(DynkinSpec("D", 4)).columns() == [
        (1, 0, 1, 1), (0, 1, 1, 1), (0, 0, 1, 1), (0, 0, 0, 1)
    ]
    assert cartan_matrix(DynkinSpec("A", 1)) == IntMatrix([[1]])


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_cartan_matches_path_count_and_is_unimodular(spec):
    c = cartan_matrix(spec)
    assert c.tolist() == cartan_by_paths(spec.family, spec.n)
    assert c.det() in (1, -1)


def test_cartan_unimodular_up_to_rank_64():
    for family, lo in (("A", 1), ("D", 3)):
        for n in range(lo, 65):
            assert cartan_matrix(DynkinSpec(family, n)).det() in (1, -1)


def test_injective_examples():
    d4 = injective_classes(DynkinSpec("D", 4))
    assert d4[3] == (1, 1, 1, 1)
    assert d4[0] == (1, 0, 0, 0)
    # socle of I_1 in A_3: nothing maps into vertex 1
    assert injective_classes(DynkinSpec("A", 3))[0] == (1, 0, 0)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_injectives_are_rows_of_cartan(spec):
    assert injective_classes(spec) == [cartan_matrix(spec).row(i) for i in range(spec.n)]
    assert projective_classes(spec) == cartan_matrix(spec).columns()


def test_coxeter_examples():
    assert coxeter_matrix(DynkinSpec("A", 2)) == IntMatrix([[0, -1], [1, -1]])
    assert coxeter_matrix(DynkinSpec("A", 1)) == IntMatrix([[-1]])
    assert coxeter_matrix(DynkinSpec("D", 4)).column(0) == (0, 1, 1, 0)


def unit(n, i):
    return tuple(int(k == i) for k in range(n))


@pytest.mark.parametrize("n", range(1, 65))
def test_coxeter_contract_type_a(n):
    phi = coxeter_matrix(DynkinSpec("A", n))
    for i in range(n - 1):
        assert phi.column(i) == unit(n, i + 1)
    assert phi.column(n - 1) == (-1,) * n


@pytest.mark.parametrize("n", range(3, 65))
def test_coxeter_contract_type_d(n):
    phi = coxeter_matrix(DynkinSpec("D", n))
    for a in (0, 1):
        expected = [0] * n
        expected[2] += 1
        expected[(a + 1) % 2] += 1
        assert phi.column(a) == tuple(expected)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_coxeter_maps_projectives_to_negated_injectives(spec):
    phi = coxeter_matrix(spec)
    for proj, inj in zip(projective_classes(spec), injective_classes(spec)):
        assert phi.apply(proj) == tuple(-x for x in inj)


def brute_order(spec):
    """First h with Phi^h = +-I, found with sympy powers."""
    phi = Matrix(coxeter_matrix(spec).tolist())
    ident = eye(spec.n)
    power = ident
    for h in range(1, 200):
        power = power * phi
        if power == ident:
            return h, 1
        if power == -ident:
            return h, -1


def test_order_identity_examples():
    assert order_identities(DynkinSpec("A", 3)) == (4, 1)
    assert order_identities(DynkinSpec("A", 2)) == (3, 1)
    assert order_identities(DynkinSpec("A", 1)) == (1, -1)
    # for odd n the fork swap survives: Phi^(n-1) is -I composed with swapping S_0, S_1
    assert order_identities(DynkinSpec("D", 5)) == (8, 1)
    assert phi_power(DynkinSpec("D", 5), 4).tolist() == [
        [0, -1, 0, 0, 0], [-1, 0, 0, 0, 0], [0, 0, -1, 0, 0], [0, 0, 0, -1, 0], [0, 0, 0, 0, -1]
    ]
    assert order_identities(DynkinSpec("D", 4)) == (3, -1)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_order_identities_against_brute_force(spec):
    h, sign = order_identities(spec)
    assert (h, sign) == brute_order(spec)
    assert phi_power(spec, h) == IntMatrix.identity(spec.n).scale(sign)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_coxeter_period(spec):
    ident = IntMatrix.identity(spec.n)
    assert phi_power(spec, 2 * spec.coxeter_number) == ident
    if spec.family == "A":
        assert phi_power(spec, spec.n + 1) == ident


@pytest.mark.parametrize("n", range(3, 13))
def test_d_type_power_on_fork(n):
    spec = DynkinSpec("D", n)
    for p in range(1, n - 1):
        power = phi_power(spec, p)
        for a in (0, 1):
            expected = [0] * n
            for j in range(2, p + 2):
                expected[j] += 1
            expected[(a + p) % 2] += 1
            assert power.apply(unit(n, a)) == tuple(expected)


def a_type_simple_shift(n, i, p):
    """Coordinates of [S_{i+p}], indices mod n+1 and [S_0] = -sum [S_j]."""
    j = (i + p) % (n + 1)
    if j == 0:
        return (-1,) * n
    return unit(n, j - 1)


@pytest.mark.parametrize("n", range(1, 13))
def test_a_type_power_on_simples(n):
    spec = DynkinSpec("A", n)
    for p in range(1, 3 * (n + 1) + 1):
        power = phi_power(spec, p)
        for i in range(1, n + 1):
            assert power.apply(unit(n, i - 1)) == a_type_simple_shift(n, i, p)
