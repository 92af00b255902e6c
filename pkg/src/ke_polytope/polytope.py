"""Moment polytopes as exact half-plane intersections in the plane."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegenerateInput, EmptyRegion, LowerDimensional, UnboundedRegion
from .qfield import ONE, ZERO, QuadNum
from .rootdata import Vec2, cross, pairing

Triangle = tuple[Vec2, Vec2, Vec2]


@dataclass(frozen=True)
class HalfPlane:
    """The closed half-plane ``{p : <normal, p> >= offset}``."""

    normal: Vec2
    offset: QuadNum

    def __post_init__(self):
        if self.normal.is_zero():
            raise DegenerateInput("half-plane with zero normal")

    def slack(self, p: Vec2) -> QuadNum:
        return pairing(self.normal, p) - self.offset

    def satisfied(self, p: Vec2, strict: bool = False) -> bool:
        s = self.slack(p).sign()
        return s > 0 if strict else s >= 0


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[Vec2, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3:
            raise LowerDimensional(f"a polygon needs at least 3 vertices, got {len(vs)}")
        n = len(vs)
        for i in range(n):
            turn = cross(vs[(i + 1) % n] - vs[i], vs[(i + 2) % n] - vs[(i + 1) % n])
            if turn.sign() <= 0:
                raise DegenerateInput("vertices are not strictly convex in counter-clockwise order")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def signed_area(self) -> QuadNum:
        total = ZERO
        for a, b in self.edges():
            total = total + cross(a, b)
        return total / 2

    def vertex_set(self) -> frozenset[Vec2]:
        return frozenset(self.vertices)

    def bounding_box(self) -> tuple[QuadNum, QuadNum, QuadNum, QuadNum]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def halfplanes_from_case(case) -> list[HalfPlane]:
    """One half-plane ``<v, p - 2rho> >= -1`` per generator ``v`` of the dual polytope."""
    apex = case.two_rho_theta
    gens = [v / m for v, m in zip(case.color_normals, case.color_coefficients)]
    gens += list(case.gstable_normals)
    return [HalfPlane(v, pairing(v, apex) - ONE) for v in gens]


def _meet(h1: HalfPlane, h2: HalfPlane):
    det = cross(h1.normal, h2.normal)
    if not det:
        return None
    (a, b), (c, d) = h1.normal, h2.normal
    e, f = h1.offset, h2.offset
    return Vec2((e * d - b * f) / det, (a * f - e * c) / det)


def _perp(v: Vec2) -> Vec2:
    return Vec2(-v.y, v.x)


def _has_recession_direction(normals: Sequence[Vec2]) -> bool:
    # a nontrivial recession cone has a boundary ray along some normal's perpendicular
    for n in normals:
        for d in (_perp(n), -_perp(n)):
            if all(pairing(m, d).sign() >= 0 for m in normals):
                return True
    return False


def _feasible_parallel(halfplanes: Sequence[HalfPlane]) -> bool:
    """Feasibility when every normal is a multiple of the first one."""
    base = halfplanes[0].normal
    norm = pairing(base, base)
    lower, upper = None, None
    for h in halfplanes:
        c = pairing(h.normal, base) / norm
        bound = h.offset / c
        if c.sign() > 0:
            lower = bound if lower is None or bound > lower else lower
        else:
            upper = bound if upper is None or bound < upper else upper
    return lower is None or upper is None or lower <= upper


def _ccw_order(points: list[Vec2]) -> list[Vec2]:
    n = len(points)
    cx = sum((p.x for p in points), ZERO) / n
    cy = sum((p.y for p in points), ZERO) / n
    center = Vec2(cx, cy)

    def half(v: Vec2) -> int:
        # 0 for angles in [0, pi), 1 for [pi, 2pi)
        sy = v.y.sign()
        return 0 if sy > 0 or (sy == 0 and v.x.sign() > 0) else 1

    def compare(p: Vec2, q: Vec2) -> int:
        u, v = p - center, q - center
        hu, hv = half(u), half(v)
        if hu != hv:
            return hu - hv
        return -cross(u, v).sign()

    return sorted(points, key=cmp_to_key(compare))


def _drop_collinear(vs: list[Vec2]) -> list[Vec2]:
    changed = True
    while changed and len(vs) >= 3:
        changed = False
        for i in range(len(vs)):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % len(vs)]
            if not cross(b - a, c - b):
                del vs[i]
                changed = True
                break
    return vs


def intersect(halfplanes: Iterable[HalfPlane]) -> Polygon:
    """Exact bounded intersection of half-planes as a CCW polygon.

    Vertices are the pairwise boundary-line crossings that satisfy every
    constraint; redundant constraints just contribute no vertices.
    """
    hs = list(halfplanes)
    if len(hs) < 3:
        raise DegenerateInput("need at least 3 half-planes for a bounded region")
    normals = [h.normal for h in hs]

    if all(not cross(normals[0], n) for n in normals):
        if _feasible_parallel(hs):
            raise UnboundedRegion("all constraint normals are parallel")
        raise EmptyRegion("constraints are contradictory")

    found: list[Vec2] = []
    seen: set[Vec2] = set()
    for h1, h2 in combinations(hs, 2):
        p = _meet(h1, h2)
        if p is None or p in seen:
            continue
        if all(h.satisfied(p) for h in hs):
            seen.add(p)
            found.append(p)

    if not found:
        raise EmptyRegion("no point satisfies every constraint")
    if _has_recession_direction(normals):
        raise UnboundedRegion("constraint normals do not positively span the plane")
    if len(found) < 3:
        raise LowerDimensional("feasible set has empty interior")
    ordered = _drop_collinear(_ccw_order(found))
    if len(ordered) < 3:
        raise LowerDimensional("feasible set has empty interior")
    # canonical start: lowest, then leftmost vertex
    first = min(range(len(ordered)), key=cmp_to_key(
        lambda i, j: (ordered[i].y - ordered[j].y).sign() or (ordered[i].x - ordered[j].x).sign()))
    return Polygon(tuple(ordered[first:] + ordered[:first]))


def contains(poly: Polygon, p: Vec2, strict: bool = False) -> bool:
    for a, b in poly.edges():
        s = cross(b - a, p - a).sign()
        if s < 0 or (strict and s == 0):
            return False
    return True


def triangulate(poly: Polygon, apex: int = 0) -> list[Triangle]:
    """Fan triangulation from ``poly.vertices[apex]``; every triangle is CCW."""
    vs = poly.vertices
    n = len(vs)
    vs = vs[apex % n:] + vs[:apex % n]
    return [(vs[0], vs[i], vs[i + 1]) for i in range(1, n - 1)]


def triangle_area(tri: Triangle) -> QuadNum:
    a, b, c = tri
    return cross(b - a, c - a) / 2
