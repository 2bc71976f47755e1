"""The generalized backward shift and its two-point shift operators.

On the entire-function side the generator is ``g0 = expand(P)``: a polynomial
with ``g0(0) = 1``.  All operators act on :class:`Poly` exactly; the two-point
operators return a :class:`BivarPoly` in (t, z).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .exact.bivar import BivarPoly
from .exact.gaussian import GaussianRational, gq
from .exact.linalg import Matrix, zeros
from .exact.poly import FactoredPoly, Poly, exact_div, expand

_Z = Poly([0, 1])


@dataclass(frozen=True)
class G0Config:
    """Generator data: ``P`` fixes g0 on the entire-function side (there the
    exponential factor is pinned to 1); ``lambdaQ`` is the center used by the
    Duhamel product on the holomorphic side."""

    P: FactoredPoly = field(default_factory=FactoredPoly)
    lambdaQ: GaussianRational = field(default_factory=lambda: gq(0))

    def __post_init__(self):
        object.__setattr__(self, "lambdaQ", gq(self.lambdaQ))
        if self.g0(0) != 1:
            raise ValueError("g0(0) must equal 1")

    @cached_property
    def g0(self) -> Poly:
        return expand(self.P)

    @property
    def deg(self) -> int:
        return self.P.degree

    @classmethod
    def from_roots(cls, *roots, lambdaQ=0) -> "G0Config":
        """Convenience: ``from_roots(1, (2, 2))`` is P = (1-z)(1-z/2)^2."""
        factors = [r if isinstance(r, tuple) else (r, 1) for r in roots]
        return cls(FactoredPoly(factors), gq(lambdaQ))


def gbs_apply(cfg: G0Config, f: Poly) -> Poly:
    """(f(t) - g0(t) f(0)) / t; the numerator vanishes at 0 because g0(0) = 1."""
    return exact_div(f - cfg.g0 * f[0], _Z)


def gbs_power(cfg: G0Config, f: Poly, n: int) -> Poly:
    if n < 0:
        raise ValueError("power must be nonnegative")
    for _ in range(n):
        if not f:
            break
        f = gbs_apply(cfg, f)
    return f


def m_apply(f: Poly) -> Poly:
    """Multiplication by the independent variable."""
    return f.shift_up(1)


def pommiez_apply(f: Poly) -> Poly:
    """The plain backward shift (f - f(0)) / z."""
    return exact_div(f - f[0], _Z)


def dz_bivar(f: Poly) -> BivarPoly:
    """(f(t) - f(z)) / (t - z)."""
    num = BivarPoly.in_t(f) - BivarPoly.in_z(f)
    return num.exact_div(BivarPoly.t_minus_z())


def dz_at(f: Poly, z0) -> Poly:
    """D_{z0}(f) as a polynomial in t."""
    return dz_bivar(f).at_z(z0)


def shift_apply(cfg: G0Config, f: Poly) -> BivarPoly:
    """T_{z,g0}(f)(t) = (t f(t) g0(z) - z f(z) g0(t)) / (t - z)."""
    mf = m_apply(f)
    g = cfg.g0
    num = BivarPoly.in_t(mf) * BivarPoly.in_z(g) - BivarPoly.in_z(mf) * BivarPoly.in_t(g)
    return num.exact_div(BivarPoly.t_minus_z())


def tilde_shift_apply(cfg: G0Config, f: Poly) -> BivarPoly:
    """(f(t) g0(z) - f(z) g0(t)) / (t - z)."""
    g = cfg.g0
    num = BivarPoly.in_t(f) * BivarPoly.in_z(g) - BivarPoly.in_z(f) * BivarPoly.in_t(g)
    return num.exact_div(BivarPoly.t_minus_z())


def shift_diagonal_closed_form(cfg: G0Config, f: Poly) -> Poly:
    """z g0(z) f'(z) - z f(z) g0'(z) + f(z) g0(z): the value of T at t = z."""
    g = cfg.g0
    return m_apply(g * f.derivative()) - m_apply(f * g.derivative()) + f * g


def operator_matrix(op, n_in: int, n_out: int) -> Matrix:
    """Matrix of a linear map on polynomials, columns = images of 1, z, ..., z^(n_in-1)."""
    out = zeros(n_out, n_in)
    for j in range(n_in):
        img = op(Poly.monomial(j))
        if img.degree >= n_out:
            raise ValueError(f"image of z^{j} has degree {img.degree} >= {n_out}")
        for i, c in enumerate(img.coeffs):
            out[i][j] = c
    return out


def gbs_matrix(cfg: G0Config, dim: int, power: int = 1) -> Matrix:
    """Matrix of D^power on C[z]_{dim-1}.

    The map is square once ``dim > deg P``; for smaller spaces the image may
    need more rows, so the row count is widened to ``max(dim, deg P)``.
    """
    rows = max(dim, cfg.deg)
    return operator_matrix(lambda f: gbs_power(cfg, f, power), dim, rows)


def poly_to_vector(p: Poly, length: int) -> list:
    return p.padded(length)


def vector_to_poly(v) -> Poly:
    return Poly(v)


__all__ = [
    "G0Config",
    "dz_at",
    "dz_bivar",
    "gbs_apply",
    "gbs_matrix",
    "gbs_power",
    "m_apply",
    "operator_matrix",
    "pommiez_apply",
    "shift_apply",
    "shift_diagonal_closed_form",
    "tilde_shift_apply",
]
