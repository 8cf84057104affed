"""Exact Gaussian-rational scalars.

A :class:`Scalar` is ``(re + i*im)`` with both parts rational.  Internally it
is stored as three integers ``(a, b, d)`` meaning ``(a + i b) / d`` with
``d > 0`` and ``gcd(a, b, d) == 1``, which keeps the hot arithmetic paths on
plain Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

__all__ = ["Scalar", "ScalarLike", "as_scalar", "ZERO", "ONE", "I"]

ScalarLike = Union["Scalar", int, Fraction, str]


def _norm(a: int, b: int, d: int) -> "Scalar":
    if d < 0:
        a, b, d = -a, -b, -d
    if d != 1:
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
    s = object.__new__(Scalar)
    s._a = a
    s._b = b
    s._d = d
    return s


def _parse_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Scalar:
    """Exact complex number with rational real and imaginary parts.

    Floats are rejected on purpose; build values from ints, ``Fraction`` or
    strings such as ``"3/4"``.

    >>> Scalar(1, 2) * Scalar(1, -2)
    Scalar(5)
    >>> (Scalar(1) / Scalar(0, 2)).im
    Fraction(-1, 2)
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re: ScalarLike = 0, im: ScalarLike = 0):
        if isinstance(re, Scalar):
            if im != 0:
                raise TypeError("complex real part with nonzero imaginary part")
            self._a, self._b, self._d = re._a, re._b, re._d
            return
        r = _parse_rational(re)
        m = _parse_rational(im)
        d = r.denominator * m.denominator // gcd(r.denominator, m.denominator)
        a = r.numerator * (d // r.denominator)
        b = m.numerator * (d // m.denominator)
        s = _norm(a, b, d)
        self._a, self._b, self._d = s._a, s._b, s._d

    # -- accessors ---------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "Scalar":
        return _norm(self._a, -self._b, self._d)

    conj = conjugate

    def abs2(self) -> Fraction:
        """Squared modulus ``s * conj(s)`` as an exact rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._d == o._d:
            return _norm(self._a + o._a, self._b + o._b, self._d)
        return _norm(self._a * o._d + o._a * self._d,
                     self._b * o._d + o._b * self._d,
                     self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return _norm(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, e = self._a, self._b, o._a, o._b
        return _norm(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def inverse(self) -> "Scalar":
        n2 = self._a * self._a + self._b * self._b
        if n2 == 0:
            raise ZeroDivisionError("Scalar division by zero")
        # 1/((a+ib)/d) = d (a - ib) / (a^2 + b^2)
        return _norm(self._d * self._a, -self._d * self._b, n2)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    # -- rendering --------------------------------------------------------
    def __repr__(self):
        if self._b == 0:
            return f"Scalar({_fmt(self.re)!r})" if self._d != 1 else f"Scalar({self._a})"
        return f"Scalar({_fmt(self.re)!r}, {_fmt(self.im)!r})"

    def __str__(self):
        if self._b == 0:
            return _fmt(self.re)
        if self._a == 0:
            return f"{_fmt(self.im)}i"
        sign = "+" if self._b > 0 else "-"
        return f"{_fmt(self.re)}{sign}{_fmt(abs(self.im))}i"

    def to_json(self) -> dict:
        """``{"re": "p/q", "im": "p/q"}`` -- never floats."""
        return {"re": _fmt(self.re), "im": _fmt(self.im)}


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return _norm(x, 0, 1)
    if isinstance(x, Fraction):
        return _norm(x.numerator, 0, x.denominator)
    return NotImplemented


def as_scalar(x: ScalarLike) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar(x)


ZERO = _norm(0, 0, 1)
ONE = _norm(1, 0, 1)
I = _norm(0, 1, 1)
