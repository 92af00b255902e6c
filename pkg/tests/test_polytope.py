from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import q
from ke_polytope.casedb import builtin_cases, get_case
from ke_polytope.errors import DegenerateInput, EmptyRegion, LowerDimensional, UnboundedRegion
from ke_polytope.polytope import (
    HalfPlane,
    Polygon,
    contains,
    halfplanes_from_case,
    intersect,
    triangle_area,
    triangulate,
)
from ke_polytope.qfield import ZERO
from ke_polytope.rootdata import Vec2, coroot, cross, pairing

h = Fraction(1, 2)


def hp(nx, ny, off):
    return HalfPlane(Vec2(q(nx), q(ny)), q(off))


UNIT_SQUARE = [hp(1, 0, 0), hp(0, 1, 0), hp(-1, 0, -1), hp(0, -1, -1)]


def test_case_one_halfplanes():
    hs = halfplanes_from_case(get_case(1))
    assert hs == [
        HalfPlane(Vec2(q(1), q()), q()),
        HalfPlane(Vec2(q(-h), q(0, h)), q()),
        HalfPlane(Vec2(q(-h), q(0, -h)), q(-3)),
    ]
    # the last one is x + sqrt3*y <= 6
    third = hs[2]
    assert third.satisfied(Vec2(q(6), q())) and not third.satisfied(Vec2(q(6), q(0, Fraction(1, 100))))


def _weight_coefficients(case, h, scale):
    """The constraint written in (scaled) fundamental-weight coordinates."""
    w1, w2 = case.root_system.fundamental_weights
    return pairing(h.normal, w1 * scale), pairing(h.normal, w2 * scale), h.offset


def test_case_two_third_constraint():
    # x + y <= 5 for p = x*w1 + y*w2
    a, b, off = _weight_coefficients(get_case(2), halfplanes_from_case(get_case(2))[2], 1)
    assert (a, b, off) == (-1, -1, -5)


def test_case_five_third_constraint():
    # x + 2y <= 4 for p = x*2w1 + y*2w2
    a, b, off = _weight_coefficients(get_case(5), halfplanes_from_case(get_case(5))[2], 2)
    assert (a / off, b / off) == (Fraction(1, 4), Fraction(1, 2))


def test_case_one_polygon():
    poly = intersect(halfplanes_from_case(get_case(1)))
    assert poly.vertex_set() == {Vec2(q(), q()), Vec2(q(3), q(0, 1)), Vec2(q(), q(0, 2))}


def test_unit_square():
    poly = intersect(UNIT_SQUARE)
    assert len(poly) == 4
    assert poly.vertex_set() == {Vec2(q(a), q(b)) for a in (0, 1) for b in (0, 1)}
    assert poly.signed_area() == 1


def test_contradictory_is_empty():
    with pytest.raises(EmptyRegion):
        intersect([hp(1, 0, 1), hp(-1, 0, 0), hp(0, 1, 0)])


def test_empty_with_spanning_normals():
    with pytest.raises(EmptyRegion):
        intersect([hp(1, 0, 2), hp(0, 1, 2), hp(-1, -1, 0)])


def test_unbounded():
    with pytest.raises(UnboundedRegion):
        intersect([hp(1, 0, 0), hp(0, 1, 0), hp(1, 1, 0)])
    with pytest.raises(UnboundedRegion):
        intersect([hp(1, 0, 0), hp(-1, 0, -1), hp(2, 0, -3)])


def test_lower_dimensional():
    # a single point: x >= 0, y >= 0, x + y <= 0
    with pytest.raises(LowerDimensional):
        intersect([hp(1, 0, 0), hp(0, 1, 0), hp(-1, -1, 0)])
    # a segment: 0 <= x <= 1 with y pinned to 0
    with pytest.raises(LowerDimensional):
        intersect([hp(1, 0, 0), hp(-1, 0, -1), hp(0, 1, 0), hp(0, -1, 0)])


def test_degenerate_inputs():
    with pytest.raises(DegenerateInput):
        hp(0, 0, 1)
    with pytest.raises(DegenerateInput):
        intersect(UNIT_SQUARE[:2])
    with pytest.raises(DegenerateInput):
        Polygon((Vec2(q(), q()), Vec2(q(), q(1)), Vec2(q(1), q())))


def test_redundant_and_duplicate_constraints():
    hs = UNIT_SQUARE + [hp(1, 1, -5), UNIT_SQUARE[0], hp(1, 1, 0)]
    assert intersect(hs).vertex_set() == intersect(UNIT_SQUARE).vertex_set()


@pytest.mark.parametrize("case", builtin_cases(), ids=lambda c: f"case{c.id}")
def test_builtin_polytope_vertices(case):
    poly = intersect(halfplanes_from_case(case))
    assert poly.vertex_set() == frozenset(case.expected.polytope_vertices)


@pytest.mark.parametrize("case", builtin_cases(), ids=lambda c: f"case{c.id}")
def test_vertices_are_tight_and_in_chamber(case):
    hs = halfplanes_from_case(case)
    poly = intersect(hs)
    for v in poly.vertices:
        slacks = [h.slack(v).sign() for h in hs]
        assert all(s >= 0 for s in slacks)
        assert slacks.count(0) >= 2
        for alpha in case.root_system.simple_roots:
            assert pairing(coroot(alpha), v).sign() >= 0
    assert poly.signed_area().sign() > 0


def test_case_one_membership():
    poly = intersect(halfplanes_from_case(get_case(1)))
    assert contains(poly, Vec2(q(Fraction(5, 4)), q(0, Fraction(5, 4))), strict=True)
    assert contains(poly, Vec2(q(), q()))
    assert not contains(poly, Vec2(q(), q()), strict=True)
    assert not contains(poly, Vec2(q(-1), q()))


def test_triangulate():
    tri_poly = intersect(halfplanes_from_case(get_case(3)))
    (tri,) = triangulate(tri_poly)
    assert set(tri) == {Vec2(q(), q()), Vec2(q(9), q(0, 3)), Vec2(q(), q(0, 6))}

    square = intersect(UNIT_SQUARE)
    tris = triangulate(square)
    assert len(tris) == 2
    assert [triangle_area(t) for t in tris] == [h, h]


# -- property tests against a brute-force hull ------------------------------

coords = st.fractions(min_value=-6, max_value=6, max_denominator=5)
points = st.lists(st.builds(lambda a, b, c: Vec2(q(a, c), q(b)), coords, coords, st.sampled_from([0, 0, h])),
                  min_size=3, max_size=8, unique=True)


def brute_force_hull(pts):
    """Hull vertices: points that are endpoints of an edge with every other point strictly to the left
    or on the segment."""
    verts = set()
    for a, b in permutations(pts, 2):
        sides = [cross(b - a, p - a).sign() for p in pts]
        if all(s >= 0 for s in sides):
            # keep only the extreme endpoints of a collinear run
            on_line = [p for p, s in zip(pts, sides) if s == 0]
            d = b - a
            proj = [pairing(d, p - a) for p in on_line]
            if pairing(d, b - a) == max(proj) and min(proj) == ZERO:
                verts.update({a, b})
    return verts


@settings(max_examples=150, deadline=None)
@given(points, st.lists(st.fractions(min_value=0, max_value=3, max_denominator=4), max_size=3))
def test_intersection_recovers_hull(pts, pushes):
    hull = brute_force_hull(pts)
    assume(len(hull) >= 3)
    # orient each hull edge so the polygon lies on its left
    halfplanes = []
    for a in hull:
        for b in hull:
            if a == b:
                continue
            sides = [cross(b - a, p - a).sign() for p in hull]
            if all(s >= 0 for s in sides) and sides.count(0) == 2:
                normal = Vec2(-(b - a).y, (b - a).x)
                halfplanes.append(HalfPlane(normal, pairing(normal, a)))
    for push, base in zip(pushes, list(halfplanes)):
        halfplanes.append(HalfPlane(base.normal, base.offset - q(push)))
    poly = intersect(halfplanes)
    assert poly.vertex_set() == frozenset(hull)
    assert poly.signed_area().sign() > 0
    for v in poly.vertices:
        assert contains(poly, v) and not contains(poly, v, strict=True)
    n = len(poly.vertices)
    center = Vec2(sum((v.x for v in poly.vertices), ZERO) / n, sum((v.y for v in poly.vertices), ZERO) / n)
    assert contains(poly, center, strict=True)
    for a, b in poly.edges():
        mid = (a + b) * h
        assert contains(poly, mid) and not contains(poly, mid, strict=True)
        outward = Vec2((b - a).y, -(b - a).x)
        assert not contains(poly, mid + outward * Fraction(1, 1000))
    total = sum((triangle_area(t) for t in triangulate(poly)), ZERO)
    assert total == poly.signed_area()
