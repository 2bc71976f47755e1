"""Exact complex numbers with rational real and imaginary parts.

Text form is ``a/b`` or ``a/b+c/d*i`` with optional signs; integers may be
written without a denominator and a bare ``i`` means the imaginary unit::

    >>> GaussianRational.parse("-3/2+1/1*i")
    GaussianRational('-3/2+1*i')
    >>> str(GaussianRational(1, 2) * GaussianRational(1, -2))
    '5'
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from ..errors import ExprSyntaxError

# gmpy2's mpq is an exact rational roughly an order of magnitude faster than
# fractions.Fraction; it hashes and compares identically.
_MPQ = type(mpq(0))
_Q0 = mpq(0)

_RAT = r"\d+(?:/\d+)?"
_TEXT_RE = re.compile(
    rf"""^\s*(?:
        (?P<re>[+-]?{_RAT})(?:\s*(?P<sign>[+-])\s*(?P<im>{_RAT})?\s*(?:\*\s*)?i)?
      | (?P<pure>[+-]?(?:{_RAT})?)\s*(?:\*\s*)?i
    )\s*$""",
    re.VERBOSE,
)


def _frac(x):
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, Rational):
        return mpq(int(x.numerator), int(x.denominator))
    if isinstance(x, str):
        return mpq(x.strip())
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


_SCALARS = (int, _MPQ, Fraction)


def _new(re, im):
    g = _alloc(GaussianRational)
    g.re = re
    g.im = im
    return g


_alloc = object.__new__


class GaussianRational:
    """Element of Q(i).  Treated as immutable; never assign to its fields."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact")
        if isinstance(x, str):
            return cls.parse(x)
        return cls(x)

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        m = _TEXT_RE.match(text)
        if m is None:
            raise ExprSyntaxError(f"malformed Gaussian rational {text!r}", text, 0)
        if m.group("re") is not None:
            real = mpq(m.group("re"))
            if m.group("sign") is None:
                return cls(real)
            imag = mpq(m.group("im") or 1)
            return cls(real, -imag if m.group("sign") == "-" else imag)
        pure = m.group("pure")
        if pure in ("", "+"):
            return cls(0, 1)
        if pure == "-":
            return cls(0, -1)
        return cls(0, mpq(pure))

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, _SCALARS):
                return _new(self.re + other, self.im)
            return NotImplemented
        return _new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return _new(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, _SCALARS):
                return _new(self.re - other, self.im)
            return NotImplemented
        return _new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if isinstance(other, _SCALARS):
                return _new(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return _new(a * c, _Q0)
        return _new(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not other.im:
            return _new(self.re / other.re, self.im / other.re)
        norm = other.re * other.re + other.im * other.im
        return self * GaussianRational(other.re / norm, -other.im / norm)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / (self ** -n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    # comparison / hashing ---------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _SCALARS):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def sort_key(self):
        return (self.re, self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    # text -------------------------------------------------------------

    def __str__(self):
        if not self.im:
            return str(self.re)
        imag = f"{abs(self.im)}*i"
        if not self.re:
            return imag if self.im > 0 else "-" + imag
        return f"{self.re}{'+' if self.im > 0 else '-'}{imag}"

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gq(x) -> GaussianRational:
    """Shorthand coercion used throughout the package."""
    return GaussianRational.coerce(x)
