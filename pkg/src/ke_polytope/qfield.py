"""Exact arithmetic in the real quadratic field Q(sqrt 3).

Elements are stored as ``(a + b*sqrt3) / d`` with integers ``a, b`` and
``d > 0`` sharing no common factor, so equal numbers always have equal
storage.  Rationals are plain :class:`fractions.Fraction` objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational
from typing import Union

from .errors import DivisionByZero, ParseError, RangeError

Rat = Fraction
Scalar = Union[int, Fraction, "QuadNum"]


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


class QuadNum:
    """Immutable number ``r + s*sqrt(3)`` with rational ``r`` and ``s``."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, r: int | Fraction | str = 0, s: int | Fraction | str = 0) -> None:
        r = _as_fraction(r)
        s = _as_fraction(s)
        d = r.denominator * s.denominator // gcd(r.denominator, s.denominator)
        self._set(r.numerator * (d // r.denominator), s.numerator * (d // s.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> QuadNum:
        if d < 0:
            a, b, d = -a, -b, -d
        obj = object.__new__(cls)
        obj._set(a, b, d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QuadNum is immutable")

    @classmethod
    def coerce(cls, x: Scalar) -> QuadNum:
        if isinstance(x, QuadNum):
            return x
        if isinstance(x, (int, Rational)):
            f = Fraction(x)
            return cls._raw(f.numerator, 0, f.denominator)
        raise TypeError(f"cannot convert {type(x).__name__} to QuadNum")

    @property
    def r(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def s(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_rational(self) -> bool:
        return self._b == 0

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __repr__(self) -> str:
        return f"QuadNum({str(self.r)!r}, {str(self.s)!r})"

    def __str__(self) -> str:
        r, s = self.r, self.s
        if s == 0:
            return str(r)
        tail = "√3" if abs(s) == 1 else f"{abs(s)}·√3"
        if r == 0:
            return ("-" if s < 0 else "") + tail
        return f"{r} {'-' if s < 0 else '+'} {tail}"

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadNum):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Rational)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __neg__(self) -> QuadNum:
        return QuadNum._raw(-self._a, -self._b, self._d)

    def __pos__(self) -> QuadNum:
        return self

    def __add__(self, other: Scalar) -> QuadNum:
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return QuadNum._raw(self._a + o._a, self._b + o._b, d1)
        return QuadNum._raw(self._a * d2 + o._a * d1, self._b * d2 + o._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> QuadNum:
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> QuadNum:
        return (-self) + other

    def __mul__(self, other: Scalar) -> QuadNum:
        if isinstance(other, int):
            return QuadNum._raw(self._a * other, self._b * other, self._d)
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return QuadNum._raw(a1 * a2 + 3 * b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> QuadNum:
        # 1/(a + b√3) = (a - b√3)/(a² - 3b²); the norm is never 0 for nonzero input
        a, b, d = self._a, self._b, self._d
        norm = a * a - 3 * b * b
        if norm == 0:
            raise DivisionByZero("inverse of zero in Q(sqrt 3)")
        return QuadNum._raw(a * d, -b * d, norm)

    def __truediv__(self, other: Scalar) -> QuadNum:
        try:
            o = QuadNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> QuadNum:
        return QuadNum.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> QuadNum:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sign(self) -> int:
        a, b = self._a, self._b
        sa, sb = _sign(a), _sign(b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the larger of a² and 3b² wins (they are never equal)
        return sa if a * a > 3 * b * b else sb

    def __lt__(self, other: Scalar) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Scalar) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Scalar) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Scalar) -> bool:
        return (self - other).sign() >= 0

    def __abs__(self) -> QuadNum:
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return q3_to_float(self)


def _as_fraction(x) -> Fraction:
    if isinstance(x, str):
        return rat_from_str(x)
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


ZERO = QuadNum()
ONE = QuadNum(1)
SQRT3 = QuadNum(0, 1)


def q3_add(a: QuadNum, b: QuadNum) -> QuadNum:
    return a + b


def q3_mul(a: QuadNum, b: QuadNum) -> QuadNum:
    return a * b


def q3_neg(a: QuadNum) -> QuadNum:
    return -a


def q3_inv(a: QuadNum) -> QuadNum:
    return a.inverse()


def q3_sign(a: QuadNum) -> int:
    return QuadNum.coerce(a).sign()


def q3_to_float(a: QuadNum) -> float:
    """Round ``a`` to a double without ever evaluating sqrt(3) in floating point.

    The integer square root gives ``floor(|b|*sqrt(3)*2**k)`` exactly, so the
    scaled numerator is known to within 2 units; ``k`` is raised until that
    slack is below 2**-60 relative to the value.
    """
    a = QuadNum.coerce(a)
    if not a:
        return 0.0
    num_a, num_b, den = a._a, a._b, a._d
    k = 64
    while True:
        root = isqrt(3 * num_b * num_b << (2 * k))
        scaled = (num_a << k) + (root if num_b >= 0 else -root)
        if abs(scaled).bit_length() >= 72:
            break
        k += 64
    try:
        return float(Fraction(scaled, den << k))
    except OverflowError as exc:
        raise RangeError(f"{a} does not fit in a double") from exc


def rat_to_str(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(text: str) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            if int(den) <= 0:
                raise ParseError(f"denominator must be positive in {text!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except ValueError as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc


def quad_to_json(x: QuadNum) -> dict:
    x = QuadNum.coerce(x)
    return {"rat": rat_to_str(x.r), "sqrt3": rat_to_str(x.s)}


def quad_from_json(obj) -> QuadNum:
    if isinstance(obj, str):
        return QuadNum(rat_from_str(obj))
    if isinstance(obj, int) and not isinstance(obj, bool):
        return QuadNum(obj)
    if not isinstance(obj, dict) or set(obj) - {"rat", "sqrt3"}:
        raise ParseError(f"expected {{'rat': ..., 'sqrt3': ...}}, got {obj!r}")
    return QuadNum(rat_from_str(obj.get("rat", "0")), rat_from_str(obj.get("sqrt3", "0")))
