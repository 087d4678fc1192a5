from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfpoly.errors import DimensionMismatch, EmptyInput, NotFullDimensional, SearchBudgetExceeded
from gfpoly.intlinalg import det
from gfpoly.polytope import (
    LatticePolytope,
    count_interior_lattice_points,
    count_lattice_points,
    f_vector,
    h_representation,
    hull,
    interior_lattice_points,
    lattice_point_array,
    lattice_points,
    transform,
    unimodular_equivalent,
)
from gfpoly.ehrhart import normalized_volume
from gfpoly.fixtures import simplex_vertices

from oracles import box_points, brute_vertices, unimodular_matrices

SQUARE = LatticePolytope([(-1, -1), (-1, 1), (1, -1), (1, 1)])
UNIT_SQUARE = LatticePolytope([(0, 0), (0, 1), (1, 0), (1, 1)])
TRIANGLE = LatticePolytope([(1, 0), (0, 1), (-1, -1)])
DIAMOND = LatticePolytope([(1, 0), (-1, 0), (0, 1), (0, -1)])
CUBE = LatticePolytope(list(itertools.product((0, 1), repeat=3)))
OCTAHEDRON = LatticePolytope([tuple(s * int(i == j) for j in range(3)) for i in range(3) for s in (1, -1)])

FIXTURES = [SQUARE, UNIT_SQUARE, TRIANGLE, DIAMOND, CUBE, OCTAHEDRON, LatticePolytope(simplex_vertices(3))]


def test_hull_examples():
    assert hull([(0, 0), (0, 1), (1, 0), (1, 1), (0, 0)]).vertices == UNIT_SQUARE.vertices
    assert LatticePolytope([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)]).n_vertices == 4
    seg = hull([(0,), (1,), (2,)])
    assert seg.vertices == ((0,), (2,)) and seg.dim == 1
    with pytest.raises(EmptyInput):
        hull([])


def test_lower_dimensional_hull():
    P = LatticePolytope([(0, 0, 0), (1, 1, 0), (2, 2, 0), (0, 1, 0)])
    assert P.dim == 2 and P.ambient_dim == 3 and P.n_vertices == 3
    # 2P = conv{0, (4,4), (0,2)}: area 4, 8 boundary points, Pick gives 1 interior
    assert count_lattice_points(P, 2) == 9
    with pytest.raises(NotFullDimensional):
        h_representation(P)
    with pytest.raises(NotFullDimensional):
        f_vector(P)


def test_h_representation_examples():
    H = h_representation(SQUARE)
    assert sorted((f.normal, f.offset) for f in H.facets) == [((-1, 0), 1), ((0, -1), 1), ((0, 1), 1), ((1, 0), 1)]
    H = h_representation(TRIANGLE)
    assert sorted((f.normal, f.offset) for f in H.facets) == [((-2, 1), 1), ((1, -2), 1), ((1, 1), 1)]
    H = h_representation(LatticePolytope([(0, 0), (1, 0), (0, 1)]))
    assert sorted((f.normal, f.offset) for f in H.facets) == [((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)]


@pytest.mark.parametrize("P", FIXTURES, ids=lambda P: f"{P.n_vertices}v{P.dim}d")
def test_h_representation_round_trip(P):
    H = h_representation(P)
    for f in H.facets:
        assert math.gcd(*f.normal) == 1
        tight = [v for v in P.vertices if sum(a * x for a, x in zip(f.normal, v)) == f.offset]
        assert len(tight) >= P.dim
        assert all(sum(a * x for a, x in zip(f.normal, v)) <= f.offset for v in P.vertices)
    # vertices are exactly the points where dim-many independent facets meet
    assert set(P.vertices) == brute_vertices(P.vertices)
    assert LatticePolytope(P.vertices) == P


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=9))
def test_vertices_match_brute_force_2d(points):
    assert set(LatticePolytope(points).vertices) == brute_vertices(points)


@given(st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=4, max_size=8))
def test_vertices_match_brute_force_3d(points):
    P = LatticePolytope(points)
    assert set(P.vertices) == brute_vertices(points)


def test_lattice_point_examples():
    assert len(lattice_points(UNIT_SQUARE, 2)) == 9
    assert lattice_points(TRIANGLE, 1) == {(1, 0), (0, 1), (-1, -1), (0, 0)}
    assert len(lattice_points(DIAMOND, 1)) == 5
    assert lattice_points(CUBE, 0) == {(0, 0, 0)}


def test_interior_examples():
    assert interior_lattice_points(SQUARE, 1) == {(0, 0)}
    assert interior_lattice_points(UNIT_SQUARE, 1) == set()
    assert len(interior_lattice_points(TRIANGLE, 2)) == 4 == len(lattice_points(TRIANGLE, 1))


@pytest.mark.parametrize("P", FIXTURES, ids=lambda P: f"{P.n_vertices}v{P.dim}d")
def test_lattice_points_match_box_scan(P):
    for n in range(4):
        assert lattice_points(P, n) == box_points(P, n)
    counts = [count_lattice_points(P, n) for n in range(5)]
    assert counts == sorted(counts) and counts[0] == 1


@given(st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=4, max_size=7), st.integers(1, 3))
def test_random_lattice_points_match_box_scan(points, n):
    P = LatticePolytope(points)
    if P.dim < 3:
        return
    pts = box_points(P, n)
    assert lattice_points(P, n) == pts
    H = h_representation(P)
    strict = {x for x in pts if all(sum(a * b for a, b in zip(f.normal, x)) < n * f.offset for f in H.facets)}
    assert interior_lattice_points(P, n) == strict
    arr = lattice_point_array(P, n)
    assert [tuple(r) for r in arr.tolist()] == sorted(pts)


def test_f_vector_examples():
    assert f_vector(UNIT_SQUARE).counts == (4, 4)
    assert f_vector(CUBE).counts == (8, 12, 6)
    assert f_vector(OCTAHEDRON).counts == (6, 12, 8)


@given(st.lists(st.tuples(*[st.integers(-2, 2)] * 4), min_size=5, max_size=10))
def test_euler_relation(points):
    P = LatticePolytope(points)
    if P.dim == 4:
        f = f_vector(P)
        assert f.satisfies_euler
        assert f.counts[0] == P.n_vertices and f.counts[-1] == len(h_representation(P).facets)


def test_unimodular_examples():
    shear = [[1, 0], [1, 1]]  # (x, y) -> (x + y, y) in row convention
    image = transform(SQUARE, shear)
    assert image != SQUARE and unimodular_equivalent(SQUARE, image)
    assert not unimodular_equivalent(SQUARE, DIAMOND)
    assert normalized_volume(SQUARE) == 8 and normalized_volume(DIAMOND) == 4
    assert not unimodular_equivalent(UNIT_SQUARE, LatticePolytope([(0, 0), (1, 0), (0, 1)]))
    with pytest.raises(DimensionMismatch):
        unimodular_equivalent(SQUARE, CUBE)


def test_translation_found_for_non_reflexive():
    moved = transform(UNIT_SQUARE, [[0, 1], [1, 0]], (5, -3))
    assert unimodular_equivalent(UNIT_SQUARE, moved)
    # a 2x1 rectangle and its sheared, translated image
    long = LatticePolytope([(0, 0), (2, 0), (0, 1), (2, 1)])
    other = LatticePolytope([(7, 1), (9, 1), (8, 2), (10, 2)])
    assert unimodular_equivalent(long, other)
    assert unimodular_equivalent(long, LatticePolytope([(0, 0), (1, 0), (0, 2), (1, 2)]))


def test_search_budget_is_reported():
    P = LatticePolytope(simplex_vertices(4))
    Q = transform(P, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(SearchBudgetExceeded) as err:
        unimodular_equivalent(P, Q, budget=0)
    assert err.value.budget == 0
    assert unimodular_equivalent(P, Q)


@pytest.mark.parametrize("P", [TRIANGLE, CUBE, OCTAHEDRON, LatticePolytope(simplex_vertices(3))],
                         ids=["triangle", "cube", "octahedron", "simplex"])
@given(data=st.data())
def test_unimodular_images_keep_invariants(P, data):
    U = data.draw(unimodular_matrices(P.ambient_dim))
    assert abs(det(U)) == 1
    t = data.draw(st.lists(st.integers(-3, 3), min_size=P.ambient_dim, max_size=P.ambient_dim))
    Q = transform(P, U, t)
    assert [count_lattice_points(Q, n) for n in (1, 2, 3)] == [count_lattice_points(P, n) for n in (1, 2, 3)]
    assert f_vector(Q) == f_vector(P)
    assert normalized_volume(Q) == normalized_volume(P)
    assert unimodular_equivalent(P, Q)


@given(st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=4, max_size=7), st.integers(2, 3))
def test_minkowski_sums_stay_inside(points, k):
    P = LatticePolytope(points)
    if P.dim < 3:
        return
    base = lattice_point_array(P, 1)
    sums = {tuple(np.sum(c, axis=0)) for c in itertools.combinations_with_replacement(base.tolist(), k)}
    assert sums <= lattice_points(P, k)


def test_interior_count_requires_full_dimension():
    with pytest.raises(NotFullDimensional):
        count_interior_lattice_points(LatticePolytope([(0, 0), (1, 1)]), 1)
