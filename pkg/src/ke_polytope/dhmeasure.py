"""Duistermaat-Heckman density, exact polygon integrals, volumes and barycenters."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping

from .errors import DegenerateInput, ZeroMass
from .polytope import Polygon, Triangle, halfplanes_from_case, intersect, triangulate
from .qfield import ZERO, QuadNum, Scalar
from .rootdata import Vec2, cross

Monomial = tuple[int, int]


class Poly2:
    """Sparse bivariate polynomial ``sum c[i, j] * x**i * y**j`` over Q(sqrt 3)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        clean = {}
        for mono, c in (terms or {}).items():
            c = QuadNum.coerce(c)
            if c:
                clean[mono] = c
        self.terms: dict[Monomial, QuadNum] = clean

    @classmethod
    def constant(cls, c: Scalar) -> Poly2:
        return cls({(0, 0): c})

    @classmethod
    def linear(cls, a: Scalar, b: Scalar, c: Scalar = 0) -> Poly2:
        """The affine form ``a*x + b*y + c``."""
        return cls({(1, 0): a, (0, 1): b, (0, 0): c})

    @classmethod
    def x(cls) -> Poly2:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> Poly2:
        return cls({(0, 1): 1})

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*x^{i}*y^{j}" for (i, j), c in sorted(self.terms.items()))
        return f"Poly2({body or '0'})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly2):
            return self.terms == other.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self.terms}) <= 1

    def __add__(self, other: Poly2) -> Poly2:
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, ZERO) + c
        return Poly2(out)

    def __neg__(self) -> Poly2:
        return Poly2({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Poly2) -> Poly2:
        return self + (-other)

    def __mul__(self, other: Poly2 | Scalar) -> Poly2:
        if not isinstance(other, Poly2):
            return Poly2({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, QuadNum] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, ZERO) + c1 * c2
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly2:
        result, base = Poly2.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: Scalar, y: Scalar) -> QuadNum:
        total = ZERO
        for (i, j), c in self.terms.items():
            total = total + c * QuadNum.coerce(x) ** i * QuadNum.coerce(y) ** j
        return total

    def evaluate_float(self, x, y):
        """Evaluate with float (or numpy array) arguments."""
        total = 0.0
        for (i, j), c in self.terms.items():
            total = total + float(c) * x**i * y**j
        return total


def density(case) -> Poly2:
    """Product of the positive-root linear forms, each to the case multiplicity."""
    f = Poly2.constant(1)
    for alpha in case.root_system.positive_roots:
        f = f * Poly2.linear(alpha.x, alpha.y)
    return f ** case.multiplicity


@lru_cache(maxsize=None)
def _simplex_moment(a: int, b: int) -> Fraction:
    # integral of u^a v^b over {u, v >= 0, u + v <= 1}
    return Fraction(factorial(a) * factorial(b), factorial(a + b + 2))


def _times_affine(p: dict, c0: QuadNum, cu: QuadNum, cv: QuadNum) -> dict:
    out: dict[Monomial, QuadNum] = {}
    for (i, j), c in p.items():
        if c0:
            out[(i, j)] = out.get((i, j), ZERO) + c * c0
        if cu:
            out[(i + 1, j)] = out.get((i + 1, j), ZERO) + c * cu
        if cv:
            out[(i, j + 1)] = out.get((i, j + 1), ZERO) + c * cv
    return out


def _plus_const(p: dict, c: QuadNum) -> dict:
    if c:
        p[(0, 0)] = p.get((0, 0), ZERO) + c
    return p


def _pull_back(f: Poly2, tri: Triangle) -> tuple[dict, QuadNum]:
    """Compose ``f`` with the affine map from the unit simplex onto ``tri``.

    Returns the (u, v)-polynomial as a dict and the Jacobian determinant.
    """
    v0, v1, v2 = tri
    e1, e2 = v1 - v0, v2 - v0
    jac = cross(e1, e2)
    if not jac:
        raise DegenerateInput("triangle has zero area")
    X = (v0.x, e1.x, e2.x)
    Y = (v0.y, e1.y, e2.y)

    by_xpow: dict[int, dict[int, QuadNum]] = {}
    for (i, j), c in f.terms.items():
        by_xpow.setdefault(i, {})[j] = c

    def horner_y(coeffs: dict[int, QuadNum]) -> dict:
        top = max(coeffs)
        acc = {(0, 0): coeffs[top]}
        for j in range(top - 1, -1, -1):
            acc = _plus_const(_times_affine(acc, *Y), coeffs.get(j, ZERO))
        return acc

    if not by_xpow:
        return {}, jac
    top = max(by_xpow)
    acc = horner_y(by_xpow[top])
    for i in range(top - 1, -1, -1):
        acc = _times_affine(acc, *X)
        if i in by_xpow:
            for mono, c in horner_y(by_xpow[i]).items():
                acc[mono] = acc.get(mono, ZERO) + c
    return acc, jac


def _simplex_integral(p: dict) -> QuadNum:
    total = ZERO
    for (a, b), c in p.items():
        total = total + c * _simplex_moment(a, b)
    return total


def integrate_triangle(f: Poly2, tri: Triangle) -> QuadNum:
    """Exact integral of ``f`` over a non-degenerate triangle."""
    p, jac = _pull_back(f, tri)
    return _simplex_integral(p) * abs(jac)


def triangle_moments(f: Poly2, tri: Triangle) -> tuple[QuadNum, QuadNum, QuadNum]:
    """Integrals of ``f``, ``x*f`` and ``y*f`` over ``tri`` from one pull-back."""
    p, jac = _pull_back(f, tri)
    v0, v1, v2 = tri
    e1, e2 = v1 - v0, v2 - v0
    px = _times_affine(p, v0.x, e1.x, e2.x)
    py = _times_affine(p, v0.y, e1.y, e2.y)
    scale = abs(jac)
    return tuple(_simplex_integral(q) * scale for q in (p, px, py))


def integrate_polygon(f: Poly2, poly: Polygon, apex: int = 0) -> QuadNum:
    return sum((integrate_triangle(f, t) for t in triangulate(poly, apex)), ZERO)


def moment_polygon(case) -> Polygon:
    return intersect(halfplanes_from_case(case))


@lru_cache(maxsize=64)
def moments(case) -> tuple[QuadNum, QuadNum, QuadNum]:
    """``(volume, int x dDH, int y dDH)`` over the case's moment polytope."""
    f = density(case)
    vol = mx = my = ZERO
    for tri in triangulate(moment_polygon(case)):
        a, b, c = triangle_moments(f, tri)
        vol, mx, my = vol + a, mx + b, my + c
    return vol, mx, my


def volume(case) -> QuadNum:
    return moments(case)[0]


def barycenter(case) -> Vec2:
    vol, mx, my = moments(case)
    if not vol:
        raise ZeroMass("Duistermaat-Heckman density integrates to zero over the polytope")
    return Vec2(mx / vol, my / vol)
