from itertools import combinations

import pytest

from antiprism.complex import SimplicialComplex, cone
from antiprism.enumeration import fubini
from antiprism.errors import MalformedInputError, NotAFaceError
from antiprism.labels import Antipode, FaceLabel, PointedFace
from antiprism.poly import poly
from antiprism.polynomials import eulerian
from antiprism.subdivision import (CarrierMap, antiprism_adjacent, antiprism_by_crossings,
                                   antiprism_from_partitions, antiprism_over,
                                   antiprism_sphere, antiprism_triangulation, barycentric,
                                   contract_to_cone, crossing_operation, interior_vertices,
                                   partition_face, restriction, stellar_subdivision)

S = SimplicialComplex
P = PointedFace


# barycentric subdivision

def test_barycentric_edge_is_path():
    sub, _ = barycentric(S.simplex(2))
    assert sub.f_vector() == (1, 3, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_barycentric_h_is_eulerian(n):
    sub, _ = barycentric(S.simplex(n))
    assert sub.h_polynomial(n) == eulerian(n)


def test_barycentric_point():
    sub, cm = barycentric(S.simplex(1))
    assert sub.sorted_facets() == [(FaceLabel([1]),)]
    assert cm[FaceLabel([1])] == frozenset({1})


def test_barycentric_carrier_is_top_of_chain():
    sub, cm = barycentric(S.simplex(3))
    for f in sub.facets:
        assert cm.carrier(f) == frozenset({1, 2, 3})


# pointed-face graph

def test_adjacency_examples():
    assert antiprism_adjacent(P([1, 2], 1), P([1, 2], 2))
    assert antiprism_adjacent(P([1], 1), P([1, 2], 2))
    assert not antiprism_adjacent(P([1], 1), P([1, 2], 1))
    assert not antiprism_adjacent(P([1], 1), P([2], 2))


def test_sdA_point():
    sub, _ = antiprism_triangulation(S.simplex(1))
    assert sub.sorted_facets() == [(P([1], 1),)]


def test_sdA_edge_is_four_vertex_path():
    sub, _ = antiprism_triangulation(S.simplex(2))
    u1, u2 = P([1, 2], 1), P([1, 2], 2)
    v1, v2 = P([1], 1), P([2], 2)
    assert set(sub.facets) == {frozenset({u1, u2}), frozenset({v1, u2}), frozenset({v2, u1})}


def test_sdA_triangle_f_vector():
    sub, _ = antiprism_triangulation(S.simplex(3))
    assert sub.f_vector() == (1, 12, 24, 13)


@pytest.mark.parametrize("n", range(1, 6))
def test_vertex_and_facet_counts(n):
    sub, _ = antiprism_triangulation(S.simplex(n))
    assert len(sub.vertices) == n * 2 ** (n - 1)
    assert len(sub.facets) == fubini(n)


# partition model

def test_partition_correspondence_example():
    face = partition_face((frozenset({1}), frozenset({2})), (frozenset({1}), frozenset({2})))
    assert face == frozenset({P([1], 1), P([1, 2], 2)})


def test_partition_model_weight_one_faces():
    sub = antiprism_from_partitions(S.simplex(3))
    assert len(sub.vertices) == 12


# constructions agree

@pytest.mark.parametrize("n", range(1, 6))
def test_three_constructions_agree_on_simplex(n):
    base = S.simplex(n)
    clique, _ = antiprism_triangulation(base)
    assert clique == antiprism_from_partitions(base)
    assert clique == antiprism_by_crossings(base)[0]


@pytest.mark.parametrize("n", range(2, 6))
def test_three_constructions_agree_on_boundary(n):
    base = S.simplex_boundary(n)
    clique, _ = antiprism_triangulation(base)
    assert clique == antiprism_from_partitions(base)
    assert clique == antiprism_by_crossings(base)[0]


def test_constructions_agree_on_random_shellable_2_complexes():
    from conftest import random_shellable

    seen = 0
    seed = 0
    while seen < 10:
        c = random_shellable(1000 + seed, max_dim=2, max_facets=5)
        seed += 1
        if c.dim != 2:
            continue
        seen += 1
        clique, _ = antiprism_triangulation(c)
        assert clique == antiprism_from_partitions(c)
        assert clique == antiprism_by_crossings(c)[0]


def test_crossing_order_facet_then_edges_on_triangle():
    cur = crossing_operation(S.simplex(3), [1, 2, 3])
    for e in [(1, 2), (1, 3), (2, 3)]:
        cur = crossing_operation(cur, e)
    assert cur.f_vector() == (1, 12, 24, 13)


# carriers and restrictions

@pytest.mark.parametrize("n", range(1, 5))
def test_carrier_monotone_and_equals_union(n):
    sub, cm = antiprism_triangulation(S.simplex(n))
    for f in sub.faces():
        union = frozenset().union(*(v.face for v in f)) if f else frozenset()
        assert cm.carrier(f) == union
        for v in f:
            assert cm.carrier(f - {v}) <= cm.carrier(f)


def test_restriction_examples():
    sub, cm = antiprism_triangulation(S.simplex(3))
    assert restriction(sub, cm, [1, 2]) == antiprism_triangulation(S.simplex(2))[0]
    assert restriction(sub, cm, [1, 2, 3]) == sub
    bsub, bcm = barycentric(S.simplex(3))
    assert restriction(bsub, bcm, [2]).sorted_facets() == [(FaceLabel([2]),)]


# antiprism over a boundary triangulation

def test_antiprism_over_trivial_boundary_of_edge():
    g, _ = antiprism_over(S.simplex_boundary(2), [1, 2])
    assert g.f_vector() == (1, 4, 3)
    relabel = {1: P([1], 1), 2: P([2], 2)}
    renamed = S([frozenset(relabel.get(v, v) for v in f) for f in g.facets])
    assert renamed == antiprism_triangulation(S.simplex(2))[0]


def test_antiprism_over_barycentric_boundary():
    bd, cm = barycentric(S.simplex_boundary(3))
    g, gcm = antiprism_over(bd, [1, 2, 3], cm)
    assert g.h_polynomial(3) == poly([1, 6, 3])
    assert g.boundary() == bd
    assert all(gcm[P([1, 2, 3], v)] == frozenset({1, 2, 3}) for v in (1, 2, 3))


@pytest.mark.parametrize("n", range(2, 5))
def test_antiprism_over_boundary_has_that_boundary(n):
    for bd, cm in (antiprism_triangulation(S.simplex_boundary(n)),
                   barycentric(S.simplex_boundary(n)),
                   (S.simplex_boundary(n), CarrierMap.identity(range(1, n + 1)))):
        g, _ = antiprism_over(bd, range(1, n + 1), cm)
        assert g.boundary() == bd


def test_antiprism_over_sdA_boundary_is_sdA_simplex():
    for n in range(2, 5):
        bd, cm = antiprism_triangulation(S.simplex_boundary(n))
        g, _ = antiprism_over(bd, range(1, n + 1), cm)
        assert g == antiprism_triangulation(S.simplex(n))[0]


def test_antiprism_over_without_restriction_map():
    foreign = S.from_facets([["a"], ["b"]])
    with pytest.raises(MalformedInputError):
        antiprism_over(foreign, [1, 2])


def test_antiprism_sphere_square():
    sphere = antiprism_sphere(S.simplex(2), [1, 2])
    assert sphere.f_vector() == (1, 4, 4)
    assert all(len(sphere.link([v]).facets) == 2 for v in sphere.vertices)
    assert Antipode(1) in sphere.vertices


def test_antiprism_sphere_h_of_sdA_edge():
    sub, cm = antiprism_triangulation(S.simplex(2))
    sphere = antiprism_sphere(sub, [1, 2], cm)
    assert sphere.h_polynomial(2) == poly([1, 4, 1])


@pytest.mark.parametrize("n", range(1, 5))
def test_antiprism_sphere_euler_characteristic(n):
    for g, cm in ((S.simplex(n), None), antiprism_triangulation(S.simplex(n))):
        sphere = antiprism_sphere(g, range(1, n + 1), cm)
        f = sphere.f_vector()
        chi = sum((-1) ** i * f[i + 1] for i in range(len(f) - 1))
        assert chi == 1 + (-1) ** (n - 1)


# stellar subdivisions and crossings

def test_stellar_on_edge():
    assert stellar_subdivision(S.simplex(2), [1, 2]).f_vector() == (1, 3, 2)


def test_crossing_on_edge():
    assert crossing_operation(S.simplex(2), [1, 2]).f_vector() == (1, 4, 3)


def test_stellar_preserves_link():
    c = S.simplex_boundary(4)
    new = stellar_subdivision(c, [1, 2])
    w = FaceLabel([1, 2])
    assert new.link([w]) == S.from_facets([[1, 3], [1, 4], [2, 3], [2, 4]])


def test_subdividing_bad_faces_rejected():
    c = S.simplex_boundary(3)
    with pytest.raises(NotAFaceError):
        stellar_subdivision(c, [1, 2, 3])
    with pytest.raises(MalformedInputError):
        crossing_operation(c, [1])


# contraction of interior vertices

@pytest.mark.parametrize("n", range(1, 5))
def test_contraction_reaches_cone(n):
    sub, cm = antiprism_triangulation(S.simplex(n))
    U = interior_vertices(sub, cm, range(1, n + 1))
    assert len(U) == n
    run = contract_to_cone(sub, U)
    assert run.ok
    assert run.result == cone(U[0], sub.boundary())
