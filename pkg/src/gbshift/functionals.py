"""Finite-support analytic functionals and their convolution.

A :class:`Functional` is a finite sum ``sum(c * delta(mu, k))`` acting by
``f -> sum(c * f^(k)(mu))``.  These are dense in the dual space and are the
only functionals the package computes with.
"""

from __future__ import annotations

import logging
from math import comb
from typing import Iterable

from .errors import ConstantPolynomial, ReconstructionInconsistent
from .exact.bivar import BivarPoly
from .exact.gaussian import ZERO, GaussianRational, gq
from .exact.jet import ExpPoly
from .exact.linalg import NoSolution, solve
from .exact.poly import FactoredPoly, Poly, falling
from .operators import G0Config, shift_apply

log = logging.getLogger(__name__)

OTIMES_EXTRA_MOMENTS = 5
OTIMES_MAX_RETRIES = 3


class Functional:
    """Immutable finite linear combination of point-derivative evaluations.

    Atoms are ``(point, order, coeff)`` triples, kept sorted with distinct
    ``(point, order)`` keys and nonzero coefficients.
    """

    __slots__ = ("atoms",)

    def __init__(self, atoms: Iterable[tuple] = ()):
        acc: dict = {}
        for mu, k, c in atoms:
            k = int(k)
            if k < 0:
                raise ValueError("derivative order must be nonnegative")
            key = (gq(mu), k)
            acc[key] = acc.get(key, ZERO) + gq(c)
        object.__setattr__(
            self,
            "atoms",
            tuple(
                (mu, k, c)
                for (mu, k), c in sorted(acc.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1]))
                if c
            ),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Functional is immutable")

    @property
    def support(self) -> list:
        seen = []
        for mu, _, _ in self.atoms:
            if mu not in seen:
                seen.append(mu)
        return seen

    @property
    def max_order(self) -> int:
        """Highest derivative order, -1 for the zero functional."""
        return max((k for _, k, _ in self.atoms), default=-1)

    def __bool__(self):
        return bool(self.atoms)

    def __eq__(self, other):
        return isinstance(other, Functional) and self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __add__(self, other):
        return Functional(self.atoms + other.atoms)

    def __neg__(self):
        return Functional((mu, k, -c) for mu, k, c in self.atoms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = gq(scalar)
        return Functional((mu, k, c * s) for mu, k, c in self.atoms)

    __rmul__ = __mul__

    def __call__(self, f):
        return apply(self, f)

    def __repr__(self):
        from .serialize import format_functional

        return f"Functional({format_functional(self)!r})"


def delta(mu, k: int = 0, coeff=1) -> Functional:
    return Functional([(mu, k, coeff)])


def apply(phi: Functional, f, var: str = "t"):
    """Apply ``phi``.

    For a :class:`Poly` this returns a Gaussian rational.  For a
    :class:`BivarPoly` ``phi`` acts in the variable ``var`` and the result is a
    polynomial in the other one.
    """
    if isinstance(f, BivarPoly):
        g = f if var == "t" else f.swap()
        out = Poly()
        for mu, k, c in phi.atoms:
            out = out + g.at_t(mu, k) * c
        return out
    acc = ZERO
    for mu, k, c in phi.atoms:
        acc = acc + c * f.derivative_at(mu, k)
    return acc


def on_monomial(mu: GaussianRational, k: int, n: int) -> GaussianRational:
    """delta(mu, k) applied to z**n: n!/(n-k)! mu**(n-k)."""
    if k > n:
        return ZERO
    return mu ** (n - k) * falling(n, k)


def delta_q(q: FactoredPoly) -> Functional:
    """Sum of delta(root, k) for k below the multiplicity of each root of q."""
    if q.degree == 0:
        raise ConstantPolynomial("the canonical functional needs a nonconstant q")
    return Functional((root, k, 1) for root, mult in q.factors for k in range(mult))


def compose_with_power(phi: Functional, r: int) -> Functional:
    """The functional f -> phi(z**r * f), written atom by atom (Leibniz rule)."""
    atoms = []
    for mu, k, c in phi.atoms:
        for j in range(k + 1):
            w = on_monomial(mu, k - j, r)
            if w:
                atoms.append((mu, j, c * w * comb(k, j)))
    return Functional(atoms)


def bphi_poly(cfg: G0Config, phi: Functional, f: Poly) -> Poly:
    """B_phi(f)(z) = phi_t(T_{z,g0}(f)(t))."""
    return apply(phi, shift_apply(cfg, f), "t")


def bphi_monomial(g0: Poly, psi_moments, i: int) -> Poly:
    """B_psi(z**i) written directly in the moments m[n] = psi(t**n).

    Splitting g0 = sum(g_a z**a), each (t**(i+1) z**a - z**(i+1) t**a)/(t - z)
    is a geometric sum, so no bivariate division is needed.  ``psi_moments``
    must cover indices up to max(i, deg g0 - 1).
    """
    m = psi_moments
    out = [ZERO] * (max(i, g0.degree - 1) + 1)
    for a, g in enumerate(g0.coeffs):
        if not g:
            continue
        if a <= i:
            for p in range(i - a + 1):
                if m[a + p]:
                    out[i - p] = out[i - p] + g * m[a + p]
        elif a >= i + 2:
            for p in range(a - i - 1):
                if m[i + 1 + p]:
                    out[a - 1 - p] = out[a - 1 - p] - g * m[i + 1 + p]
    return Poly(out)


def otimes(cfg: G0Config, phi: Functional, psi: Functional) -> Functional:
    """Convolution (phi (x) psi)(f) = phi_z(psi(T_{z,g0}(f))).

    The product is again supported on supp(phi) | supp(psi).  It is recovered
    from its values on monomials by solving the confluent interpolation system;
    ``OTIMES_EXTRA_MOMENTS`` further monomials are checked, and the derivative
    order bound is raised if the check fails.
    """
    if not phi or not psi:
        return Functional()
    points = sorted(set(phi.support) | set(psi.support), key=lambda m: m.sort_key())
    bound = phi.max_order + psi.max_order + 1
    g0 = cfg.g0
    moments: list = []
    for attempt in range(OTIMES_MAX_RETRIES + 1):
        unknowns = [(mu, k) for mu in points for k in range(bound + 1)]
        n_eq = len(unknowns) + OTIMES_EXTRA_MOMENTS
        top = max(n_eq, g0.degree)
        psi_m = [moment(psi, n) for n in range(top)]
        phi_m = [moment(phi, n) for n in range(top + g0.degree)]
        while len(moments) < n_eq:
            img = bphi_monomial(g0, psi_m, len(moments))
            moments.append(sum((c * phi_m[j] for j, c in enumerate(img.coeffs) if c), ZERO))
        rows = [[on_monomial(mu, k, i) for mu, k in unknowns] for i in range(n_eq)]
        try:
            sol = solve(rows, moments[:n_eq])
        except NoSolution:
            log.debug("otimes: order bound %d insufficient (attempt %d)", bound, attempt)
            bound += 1
            continue
        return Functional((mu, k, c) for (mu, k), c in zip(unknowns, sol))
    raise ReconstructionInconsistent(
        f"could not reconstruct the convolution with derivative order up to {bound - 1}"
    )


def moment(phi: Functional, n: int) -> GaussianRational:
    return sum((c * on_monomial(mu, k, n) for mu, k, c in phi.atoms), ZERO)


def fourier_laplace(phi: Functional) -> ExpPoly:
    """phi applied to t -> exp(z t): each atom contributes c z^k exp(mu z)."""
    return ExpPoly((mu, Poly.monomial(k, c)) for mu, k, c in phi.atoms)
