"""Truncated Taylor expansions (jets) and exponential polynomials.

A :class:`Jet` of order N stores the Taylor coefficients ``c[0..N]`` of a germ
in powers of ``(z - center)``; coefficients beyond N are unknown, not zero.
Every operation documents its order rule and returns the weakest order it
can guarantee.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable

from gmpy2 import mpq

from ..errors import CenterMismatch, NonzeroCenterForExpPoly, OrderTooSmall
from .gaussian import ZERO, GaussianRational, gq
from .poly import Poly


class Jet:
    __slots__ = ("center", "order", "coeffs")

    def __init__(self, coeffs: Iterable, center=0, order: int | None = None):
        cs = [gq(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("jet order must be nonnegative")
        cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        object.__setattr__(self, "center", gq(center))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    @classmethod
    def one(cls, order: int, center=0) -> "Jet":
        return cls([1], center, order)

    def _check(self, other: "Jet") -> None:
        if self.center != other.center:
            raise CenterMismatch(f"jets centered at {self.center} and {other.center}")

    def __getitem__(self, n: int) -> GaussianRational:
        if n > self.order:
            raise OrderTooSmall(f"coefficient {n} is beyond jet order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return (self.center, self.order, self.coeffs) == (other.center, other.order, other.coeffs)

    def __hash__(self):
        return hash((self.center, self.order, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise OrderTooSmall(f"cannot raise jet order {self.order} to {order}")
        return Jet(self.coeffs[: order + 1], self.center, order)

    # order rule for +, -, *: min of the operand orders
    def __add__(self, other):
        if not isinstance(other, Jet):
            return self + Jet([other], self.center, self.order)
        self._check(other)
        n = min(self.order, other.order)
        return Jet([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], self.center, n)

    __radd__ = __add__

    def __neg__(self):
        return Jet([-c for c in self.coeffs], self.center, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            c = gq(other)
            return Jet([x * c for x in self.coeffs], self.center, self.order)
        self._check(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = ZERO
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Jet(out, self.center, n)

    __rmul__ = __mul__

    def derivative(self, k: int = 1) -> "Jet":
        """k-th derivative; order drops by k."""
        if k > self.order:
            raise OrderTooSmall(f"cannot differentiate an order-{self.order} jet {k} times")
        c = self.coeffs
        out = [c[n + k] * (factorial(n + k) // factorial(n)) for n in range(self.order - k + 1)]
        return Jet(out, self.center, self.order - k)

    def integral(self) -> "Jet":
        """Antiderivative vanishing at the center; order grows by one."""
        out = [ZERO] + [c * mpq(1, n + 1) for n, c in enumerate(self.coeffs)]
        return Jet(out, self.center, self.order + 1)

    def derivative_at_center(self, k: int) -> GaussianRational:
        """f^(k)(center) = k! * c[k]."""
        return self[k] * factorial(k)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Jet([{body}], center={self.center}, order={self.order})"


def jet_mul(a: Jet, b: Jet) -> Jet:
    return a * b


def jet_of_poly(p: Poly, center=0, order: int = 0) -> Jet:
    """Taylor coefficients of a polynomial about ``center`` (exact at any order)."""
    return Jet(p.taylor(center), center, order)


class ExpPoly:
    """``sum(poly_j(z) * exp(mu_j * z))`` with distinct frequencies and no zero terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple] = ()):
        merged: dict = {}
        for mu, p in terms:
            mu = gq(mu)
            merged[mu] = merged.get(mu, Poly()) + p
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(((m, p) for m, p in merged.items() if p), key=lambda mp: mp[0].sort_key())),
        )

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    def __eq__(self, other):
        return isinstance(other, ExpPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        return ExpPoly(self.terms + other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "ExpPoly(" + ", ".join(f"({m}, {p!r})" for m, p in self.terms) + ")"


def jet_of_exppoly(e: ExpPoly, order: int, center=0) -> Jet:
    """Jet at 0: coefficient n is sum_j sum_{k<=n} poly_j[k] mu_j**(n-k) / (n-k)!."""
    if gq(center):
        raise NonzeroCenterForExpPoly("exponential polynomial jets are exact only at center 0")
    out = [ZERO] * (order + 1)
    for mu, p in e.terms:
        for n in range(order + 1):
            acc = ZERO
            for k in range(min(n, p.degree) + 1):
                if p[k]:
                    acc = acc + p[k] * mu ** (n - k) * mpq(1, factorial(n - k))
            out[n] = out[n] + acc
    return Jet(out, 0, order)
