from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from gfpoly.constructions import chain_polytope, omega_of_posets, order_polytope
from gfpoly.errors import BudgetExceeded, NotFullDimensional
from gfpoly.fixtures import simplex_vertices
from gfpoly.polytope import LatticePolytope, h_representation, unimodular_equivalent
from gfpoly.posets import chain
from gfpoly.reflexive import (
    census_histogram,
    classify_reflexive_2d,
    dual_polytope,
    is_normal,
    is_reflexive,
    lattice_points_by_box,
    one_point_polygons,
    reflexivity_report,
    verify_witness,
)

from oracles import box_points, posets

SQUARE = LatticePolytope([(-1, -1), (-1, 1), (1, -1), (1, 1)])
UNIT_SQUARE = LatticePolytope([(0, 0), (0, 1), (1, 0), (1, 1)])


def cube(m: int) -> LatticePolytope:
    return LatticePolytope(list(itertools.product((0, 1), repeat=m)))


def test_reflexive_examples():
    assert is_reflexive(SQUARE)
    assert is_reflexive(LatticePolytope(simplex_vertices(3)))
    assert not is_reflexive(UNIT_SQUARE)
    assert not is_reflexive(LatticePolytope([(0, 0), (0, 2), (2, 0), (2, 2)]))
    with pytest.raises(NotFullDimensional):
        is_reflexive(LatticePolytope([(0, 0), (1, 1)]))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_cubes_are_normal(m):
    cert = is_normal(cube(m))
    assert cert.verdict is True and cert.level_bound == max(2, m - 1)


@given(posets(max_d=5))
def test_order_and_chain_polytopes_normal(P):
    assert is_normal(order_polytope(P)).verdict is True
    assert is_normal(chain_polytope(P)).verdict is True


def test_non_normal_simplex_has_witness():
    # Reeve-type simplex: only its vertices as lattice points, but 2P gains a new one
    P = LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
    cert = is_normal(P)
    assert cert.verdict is False and cert.witness_level == 2
    assert verify_witness(P, cert.witness, 2)
    # a decomposable point is rejected by the re-check
    assert not verify_witness(P, (1, 1, 0), 2)


def test_truncated_search_is_inconclusive():
    cert = is_normal(cube(5), max_level=2)
    assert cert.verdict is None and cert.checked_levels == [2]


def test_budget():
    with pytest.raises(BudgetExceeded):
        is_normal(cube(4), budget=10)


def test_box_scan_oracle_agrees():
    P = LatticePolytope(simplex_vertices(3))
    assert lattice_points_by_box(P, 2) == box_points(P, 2)


def test_report_examples():
    rep = reflexivity_report(SQUARE)
    assert rep.reflexive and rep.normal["verdict"] is True
    assert rep.f_vector == [4, 4]
    assert rep.ehrhart == [1, 4, 4]
    C = chain(2)
    rep = reflexivity_report(omega_of_posets(C, C, "oc"))
    assert rep.reflexive and rep.normal["verdict"] is True
    rep = reflexivity_report(LatticePolytope([(0, 0), (0, 2), (2, 0), (2, 2)]))
    assert rep.reflexive is False
    keys = list(rep.to_json())
    assert keys[:8] == ["vertices", "facets", "reflexive", "normal", "f_vector", "ehrhart", "volume", "normalized_volume"]


@pytest.fixture(scope="module")
def census():
    return classify_reflexive_2d()


def test_census_classes(census):
    assert len(census) == 16
    assert census_histogram(census) == {3: 1, 4: 3, 5: 2, 6: 4, 7: 2, 8: 3, 9: 1}
    by_poly = {}
    for r in census:
        by_poly.setdefault(r.ehrhart.coeffs, []).append(r)
    assert len(by_poly[(1, 2, 2)]) == 3
    assert len(by_poly[(1, 3, 3)]) == 4


def test_census_members_reflexive_normal_distinct(census):
    polys = [r.polytope for r in census]
    for r in census:
        assert is_reflexive(r.polytope) and r.normal
        b = Fraction(r.boundary_points, 2)
        assert r.ehrhart.coeffs == (1, b, b)
    for A, B in itertools.combinations(polys, 2):
        assert not unimodular_equivalent(A, B)


def test_every_one_point_polygon_is_reflexive():
    for P in one_point_polygons(2):
        assert is_reflexive(P)


def test_duals_of_census_are_reflexive(census):
    for r in census:
        D = dual_polytope(r.polytope)
        assert is_reflexive(D)
        # duality is an involution
        assert dual_polytope(D) == r.polytope
        assert r.boundary_points + (len(box_points(D)) - 1) == 12


def test_dual_needs_unit_offsets():
    with pytest.raises(ValueError):
        dual_polytope(UNIT_SQUARE)


def test_dual_of_simplex_fixture():
    P = LatticePolytope(simplex_vertices(3))
    D = dual_polytope(P)
    assert is_reflexive(D) and dual_polytope(D) == P
    assert all(f.offset == 1 for f in h_representation(D).facets)
