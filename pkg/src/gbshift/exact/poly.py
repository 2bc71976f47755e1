"""Dense univariate polynomials over the Gaussian rationals.

Coefficients are stored lowest degree first; the zero polynomial has no
coefficients at all.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, Sequence

from ..errors import ConstantPolynomial, NonzeroRemainder, ZeroRoot
from .gaussian import ONE, ZERO, GaussianRational, gq


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def falling(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1), i.e. the factor produced by k derivatives of z**n."""
    if k > n:
        return 0
    return factorial(n) // factorial(n - k)


class Poly:
    """Immutable polynomial ``sum(coeffs[k] * z**k)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip([gq(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def monomial(cls, n: int, coeff=1) -> "Poly":
        return cls([0] * n + [coeff])

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        """Monic product of (z - root)."""
        p = cls([1])
        for r in roots:
            p = p * cls([-gq(r), 1])
        return p

    # structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, GaussianRational)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def padded(self, length: int) -> list:
        """Coefficient list zero-padded (never truncated) to ``length``."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} slots")
        return list(self.coeffs) + [ZERO] * (length - len(self.coeffs))

    # ring operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = gq(other)
            if not c:
                return Poly()
            return Poly._raw(tuple(a * c for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Poly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        for _ in range(n):
            result = result * self
        return result

    def shift_up(self, n: int = 1) -> "Poly":
        """Multiply by z**n."""
        if not self.coeffs:
            return self
        return Poly._raw((ZERO,) * n + self.coeffs)

    def derivative(self, k: int = 1) -> "Poly":
        c = self.coeffs
        return Poly._raw(tuple(c[n] * falling(n, k) for n in range(k, len(c))))

    def __call__(self, x) -> GaussianRational:
        x = gq(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative_at(self, x, k: int) -> GaussianRational:
        """k-th derivative evaluated at x, without building the derivative."""
        x = gq(x)
        acc = ZERO
        c = self.coeffs
        for n in range(len(c) - 1, k - 1, -1):
            acc = acc * x + c[n] * falling(n, k)
        return acc

    def taylor(self, center) -> list:
        """Coefficients of the expansion in powers of (z - center)."""
        center = gq(center)
        if not center:
            return list(self.coeffs)
        # repeated synthetic division (Horner shift)
        c = list(self.coeffs)
        n = len(c)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                c[j] = c[j] + center * c[j + 1]
        return c

    def __repr__(self):
        return f"Poly([{', '.join(repr(str(c)) for c in self.coeffs)}])"

    def __str__(self):
        from .text import format_poly

        return format_poly(self)


def exact_div(num, den):
    """Quotient of ``num`` by a linear factor, requiring a zero remainder.

    ``num`` may be a :class:`Poly` or a :class:`~gbshift.exact.bivar.BivarPoly`;
    ``den`` must be a linear polynomial of the same kind.
    """
    from .bivar import BivarPoly

    if isinstance(num, BivarPoly):
        return num.exact_div(den)
    if not isinstance(den, Poly) or den.degree != 1:
        raise ValueError("exact_div expects a linear Poly divisor")
    # den = a + b z = b (z - r)
    a, b = den.coeffs
    r = -a / b
    c = num.coeffs
    if not c:
        return Poly()
    q = [ZERO] * (len(c) - 1)
    acc = ZERO
    for n in range(len(c) - 1, 0, -1):
        acc = acc * r + c[n]
        q[n - 1] = acc
    remainder = acc * r + c[0]
    if remainder:
        raise NonzeroRemainder(f"remainder {remainder} dividing by {den!r}")
    return Poly(q) * (ONE / b)


def divide_by_root(p: Poly, root, times: int = 1) -> Poly:
    """Divide by (z - root)**times exactly."""
    lin = Poly([-gq(root), 1])
    for _ in range(times):
        p = exact_div(p, lin)
    return p


class FactoredPoly:
    """``prod((1 - z/root)**mult)``: a polynomial normalized by value 1 at 0."""

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[tuple] = ()):
        merged: dict = {}
        for root, mult in factors:
            root = gq(root)
            mult = int(mult)
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if not root:
                raise ZeroRoot("a factored polynomial with value 1 at 0 cannot vanish at 0")
            if mult:
                merged[root] = merged.get(root, 0) + mult
        object.__setattr__(
            self,
            "factors",
            tuple(sorted(merged.items(), key=lambda rm: rm[0].sort_key())),
        )

    def __setattr__(self, name, value):
        raise AttributeError("FactoredPoly is immutable")

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    @property
    def roots(self) -> tuple:
        return tuple(r for r, _ in self.factors)

    def multiplicity(self, root) -> int:
        return dict(self.factors).get(gq(root), 0)

    def divisors(self) -> list:
        """Every divisor q with q(0) = 1, including the constant 1."""
        out = [FactoredPoly()]
        for root, mult in self.factors:
            out = [FactoredPoly(d.factors + ((root, k),)) for d in out for k in range(mult + 1)]
        return sorted(out, key=lambda d: (d.degree, [(r.sort_key(), m) for r, m in d.factors]))

    def __eq__(self, other):
        return isinstance(other, FactoredPoly) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        inner = ", ".join(f"({str(r)!r}, {m})" for r, m in self.factors)
        return f"FactoredPoly([{inner}])"


def expand(fp: FactoredPoly) -> Poly:
    """Expand ``prod((1 - z/root)**mult)``; the constant term is exactly 1."""
    p = Poly([1])
    for root, mult in fp.factors:
        if not root:
            raise ZeroRoot("root 0 is incompatible with P(0) = 1")
        lin = Poly([1, -ONE / root])
        for _ in range(mult):
            p = p * lin
    return p


def require_nonconstant(fp: FactoredPoly) -> None:
    if fp.degree == 0:
        raise ConstantPolynomial("expected a nonconstant polynomial")


def binomial_shift(power: int, point, k: int) -> GaussianRational:
    """k-th derivative of z**power at ``point``."""
    if k > power:
        return ZERO
    return gq(point) ** (power - k) * falling(power, k)




def as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, Sequence) and not isinstance(x, str):
        return Poly(x)
    return Poly([x])
