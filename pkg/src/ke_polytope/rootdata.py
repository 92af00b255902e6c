"""Euclidean realizations of the rank-2 root systems A2 and G2.

Roots, weights and coweights all live in one copy of R^2 whose coordinates
are in Q(sqrt 3).  The Euclidean inner product plays the role of the
invariant form; coroots are ``2*alpha/|alpha|^2`` so that the same dot
product also computes the natural pairing between coweights and weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import DegenerateInput
from .qfield import ZERO, QuadNum, Scalar, quad_from_json, quad_to_json


class Vec2(NamedTuple):
    x: QuadNum
    y: QuadNum

    @classmethod
    def of(cls, x: Scalar, y: Scalar) -> Vec2:
        return cls(QuadNum.coerce(x), QuadNum.coerce(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __mul__(self, c: Scalar) -> Vec2:
        return Vec2(self.x * c, self.y * c)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> Vec2:
        return Vec2(self.x / c, self.y / c)

    def is_zero(self) -> bool:
        return not self.x and not self.y

    def to_float(self) -> tuple[float, float]:
        return float(self.x), float(self.y)

    def to_json(self) -> list[dict]:
        return [quad_to_json(self.x), quad_to_json(self.y)]

    @classmethod
    def from_json(cls, obj) -> Vec2:
        from .errors import ParseError

        if not isinstance(obj, (list, tuple)) or len(obj) != 2:
            raise ParseError(f"expected a pair of exact numbers, got {obj!r}")
        return cls(quad_from_json(obj[0]), quad_from_json(obj[1]))


def pairing(u: Vec2, v: Vec2) -> QuadNum:
    return u.x * v.x + u.y * v.y


def cross(u: Vec2, v: Vec2) -> QuadNum:
    """Determinant of the 2x2 matrix with columns ``u`` and ``v``."""
    return u.x * v.y - u.y * v.x


def coroot(alpha: Vec2) -> Vec2:
    norm = pairing(alpha, alpha)
    if not norm:
        raise DegenerateInput("coroot of the zero vector")
    return alpha * (QuadNum(2) / norm)


def solve2(a: Vec2, b: Vec2, rhs: Vec2) -> tuple[QuadNum, QuadNum]:
    """Solve ``s*a + t*b = rhs`` exactly by Cramer's rule."""
    det = cross(a, b)
    if not det:
        raise DegenerateInput("linearly dependent vectors")
    return cross(rhs, b) / det, cross(a, rhs) / det


def _dual_basis(basis: tuple[Vec2, Vec2]) -> tuple[Vec2, Vec2]:
    # rows of the inverse of the matrix whose rows are basis vectors
    (a, b), (c, d) = basis
    det = a * d - b * c
    if not det:
        raise DegenerateInput("simple roots are linearly dependent")
    return Vec2(d / det, -c / det), Vec2(-b / det, a / det)


def solve_fundamental(simple_roots) -> tuple[tuple[Vec2, Vec2], tuple[Vec2, Vec2]]:
    """Fundamental weights and coweights dual to the given simple roots.

    Weights satisfy ``<coroot(alpha_i), w_j> = delta_ij`` and coweights
    ``<cw_i, alpha_j> = delta_ij``.
    """
    a1, a2 = simple_roots
    weights = _dual_basis((coroot(a1), coroot(a2)))
    coweights = _dual_basis((a1, a2))
    return weights, coweights


@dataclass(frozen=True)
class RootSystemRealization:
    label: str
    simple_roots: tuple[Vec2, Vec2]
    positive_roots: tuple[Vec2, ...]
    fundamental_weights: tuple[Vec2, Vec2]
    fundamental_coweights: tuple[Vec2, Vec2]

    @property
    def simple_coroots(self) -> tuple[Vec2, Vec2]:
        return coroot(self.simple_roots[0]), coroot(self.simple_roots[1])

    def from_weight_coords(self, a: Scalar, b: Scalar) -> Vec2:
        w1, w2 = self.fundamental_weights
        return w1 * a + w2 * b

    def from_coroot_coords(self, a: Scalar, b: Scalar) -> Vec2:
        c1, c2 = self.simple_coroots
        return c1 * a + c2 * b

    def from_coweight_coords(self, a: Scalar, b: Scalar) -> Vec2:
        c1, c2 = self.fundamental_coweights
        return c1 * a + c2 * b

    def root_coords(self, v: Vec2) -> tuple[QuadNum, QuadNum]:
        return solve2(self.simple_roots[0], self.simple_roots[1], v)

    def weight_coords(self, v: Vec2) -> tuple[QuadNum, QuadNum]:
        return solve2(self.fundamental_weights[0], self.fundamental_weights[1], v)


half = Fraction(1, 2)

# positive roots as (c1, c2) in the simple-root basis, in the listed order
_POSITIVE = {
    "A2": ((1, 0), (0, 1), (1, 1)),
    "G2": ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)),
}

_SIMPLE = {
    "A2": (Vec2.of(1, 0), Vec2(QuadNum(-half), QuadNum(0, half))),
    "G2": (Vec2.of(1, 0), Vec2(QuadNum(Fraction(-3, 2)), QuadNum(0, half))),
}


@lru_cache(maxsize=None)
def realize(label: str) -> RootSystemRealization:
    if label not in _SIMPLE:
        raise DegenerateInput(f"unknown root system {label!r}; expected 'A2' or 'G2'")
    a1, a2 = _SIMPLE[label]
    positive = tuple(a1 * c1 + a2 * c2 for c1, c2 in _POSITIVE[label])
    weights, coweights = solve_fundamental((a1, a2))
    return RootSystemRealization(label, (a1, a2), positive, weights, coweights)


def rho2(label: str) -> Vec2:
    """Sum of the positive roots of the realization."""
    total = Vec2(ZERO, ZERO)
    for alpha in realize(label).positive_roots:
        total = total + alpha
    return total
