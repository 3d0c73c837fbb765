from collections import Counter

import pytest

from k0rep.abelian import FgAbelianGroup
from k0rep.ar_quiver import (
    ZVertex,
    ar_relation_matrix,
    build_orbit_quiver,
    canonical,
    k0_via_ar,
    knit_classes,
    levels,
    make_glide,
    mesh_relations,
    orbit_size,
    shift_sigma,
    successors,
    tau,
    to_dot,
)
from k0rep.coxeter import K0Job, k0_repetitive
from k0rep.dynkin import DynkinSpec

A = lambda n: DynkinSpec("A", n)  # noqa: E731
D = lambda n: DynkinSpec("D", n)  # noqa: E731

SMALL = [A(n) for n in range(1, 11)] + [D(n) for n in range(3, 11)]


def test_shift_examples():
    assert shift_sigma(A(3), ZVertex(0, 1)) == ZVertex(1, 3)
    assert shift_sigma(D(5), ZVertex(0, 0)) == ZVertex(4, 1)
    assert shift_sigma(D(6), ZVertex(0, 0)) == ZVertex(5, 0)


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_sigma_squared_is_a_tau_power(spec):
    h = spec.coxeter_number
    for x in range(-3, 4):
        for l in levels(spec):
            v = ZVertex(x, l)
            assert shift_sigma(spec, shift_sigma(spec, v)) == ZVertex(x + h, l)


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_sigma_is_a_quiver_automorphism(spec):
    for x in range(-2, 3):
        for l in levels(spec):
            v = ZVertex(x, l)
            image = Counter(shift_sigma(spec, w) for w in successors(spec, v))
            assert image == Counter(successors(spec, shift_sigma(spec, v)))


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_sigma_negates_k0_classes(spec):
    # knitted classes are additive on meshes; the suspension must act by -1
    width = 3 * spec.coxeter_number + 2
    cls = knit_classes(spec, width)
    checked = 0
    for v, c in cls.items():
        s = shift_sigma(spec, v)
        if s in cls:
            assert cls[s] == tuple(-x for x in c)
            checked += 1
    assert checked >= spec.n


def test_orbit_counts_examples():
    assert len(build_orbit_quiver(A(1), 1).vertices) == 2
    assert len(build_orbit_quiver(D(3), 2).vertices) == 18
    assert len(build_orbit_quiver(A(3), 3).vertices) == 27


def test_a3_p3_matches_drawn_vertex_labels():
    # diagonal labels (i, j, k) of the drawn AR-quiver of C(A3, p=3), read
    # left to right; the last three repeat the first three after wrapping
    drawn = [
        (1, 3, 1), (1, 4, 1), (1, 5, 1), (2, 4, 1), (2, 5, 1), (2, 6, 1), (3, 5, 1), (3, 6, 1),
        (1, 3, 2), (4, 6, 1), (1, 4, 2), (2, 4, 2), (1, 5, 2), (2, 5, 2), (3, 5, 2), (2, 6, 2),
        (3, 6, 2), (4, 6, 2), (1, 3, 3), (1, 4, 3), (1, 5, 3), (2, 4, 3), (2, 5, 3), (2, 6, 3),
        (3, 5, 3), (3, 6, 3), (1, 3, 1), (4, 6, 3), (1, 4, 1), (1, 5, 1),
    ]
    assert len(set(drawn)) == 27
    assert len(build_orbit_quiver(A(3), 3).vertices) == len(set(drawn))


@pytest.mark.parametrize("family,n", [("A", n) for n in range(1, 9)] + [("D", n) for n in range(3, 9)])
def test_orbit_counts(family, n):
    spec = DynkinSpec(family, n)
    for p in range(1, 9):
        assert len(build_orbit_quiver(spec, p).vertices) == orbit_size(spec, p)


@pytest.mark.parametrize("family,n", [("A", n) for n in range(1, 7)] + [("D", n) for n in range(3, 7)])
def test_tau_bijective_and_mesh_symmetry(family, n):
    spec = DynkinSpec(family, n)
    for p in range(1, 6):
        q = build_orbit_quiver(spec, p)
        assert sorted(q.tau.values()) == q.vertices
        arrows = Counter(q.arrows)
        for (e, z), mult in arrows.items():
            assert arrows[(q.tau[z], e)] == mult


def test_canonical_rep_in_strip():
    g = make_glide(A(3), 3)
    for x in range(-20, 20):
        for l in levels(A(3)):
            c = canonical(g, ZVertex(x, l))
            assert 0 <= c.x < g.width
            assert canonical(g, g(ZVertex(x, l))) == c


def test_mesh_relations_a1():
    q = build_orbit_quiver(A(1), 1)
    rels = mesh_relations(q)
    assert len(rels) == 2
    assert all(r.middles == () for r in rels)
    assert ar_relation_matrix(q).tolist() == [[1, 1], [1, 1]]


def test_mesh_relations_d3_centre_has_two_middles():
    q = build_orbit_quiver(D(3), 2)
    rels = mesh_relations(q)
    assert len(rels) == len(q.vertices)
    # level 2 is the centre of D3 = A3 with the fork on levels 0, 1
    centre = [r for r in rels if r.end.level == 2]
    assert {len(r.middles) for r in centre} == {2}
    ends = [r for r in rels if r.end.level in (0, 1)]
    assert {len(r.middles) for r in ends} == {1}


def test_mesh_relations_d4_centre():
    q = build_orbit_quiver(D(4), 1)
    centre = [r for r in mesh_relations(q) if r.end.level == 2]
    assert {len(r.middles) for r in centre} == {3}


@pytest.mark.parametrize("spec", [A(2), D(4), A(4)], ids=str)
def test_one_relation_per_vertex(spec):
    q = build_orbit_quiver(spec, 3)
    assert len(mesh_relations(q)) == len(q.vertices)
    assert [r.end for r in mesh_relations(q)] == q.vertices


def test_k0_via_ar_examples():
    assert k0_via_ar(A(2), 1) == FgAbelianGroup()
    assert k0_via_ar(A(3), 4) == FgAbelianGroup.free(3)
    assert k0_via_ar(D(3), 2) == k0_repetitive(K0Job.of("D", 3, 2))


def test_relation_matrix_is_reproducible():
    assert ar_relation_matrix(build_orbit_quiver(D(4), 2)) == ar_relation_matrix(build_orbit_quiver(D(4), 2))


def test_tau_moves_left():
    assert tau(ZVertex(3, 2)) == ZVertex(2, 2)


def test_dot_export():
    dot = to_dot(build_orbit_quiver(D(3), 2))
    assert dot.startswith('digraph "C_D3_p2"')
    assert '"(0,0)" -> "(0,2)";' in dot
    assert dot.count("style=dotted") == 18
