"""Independent reference computations in sympy.

Nothing here imports the package's algorithms: the definitions are written
straight from their formulas and evaluated symbolically, then converted back
to exact package values only for comparison.
"""

from __future__ import annotations

import sympy as sp

from gbshift.exact import GaussianRational, Jet, Poly

t, z, w, s = sp.symbols("t z w s")


def to_sym(x) -> sp.Expr:
    return sp.Rational(int(x.re.numerator), int(x.re.denominator)) + sp.I * sp.Rational(
        int(x.im.numerator), int(x.im.denominator)
    )


def from_sym(x) -> GaussianRational:
    return GaussianRational(str(sp.Rational(sp.re(x))), str(sp.Rational(sp.im(x))))


def poly_sym(p: Poly, var=z) -> sp.Expr:
    return sum((to_sym(c) * var**k for k, c in enumerate(p.coeffs)), sp.Integer(0))


def sym_poly(expr, var=z) -> Poly:
    expr = sp.expand(expr)
    if expr == 0:
        return Poly()
    coeffs = sp.Poly(expr, var).all_coeffs()[::-1]
    return Poly([from_sym(c) for c in coeffs])


def g0_sym(roots) -> sp.Expr:
    """prod (1 - z/r)^m from [(root, mult)] given as sympy numbers."""
    out = sp.Integer(1)
    for r, m in roots:
        out *= (1 - z / r) ** m
    return sp.expand(out)


def gbs(g0, f):
    return sp.cancel((f - g0 * f.subs(z, 0)) / z)


def shift(g0, f):
    """(t f(t) g0(z) - z f(z) g0(t)) / (t - z) as an expanded expression in t, z."""
    num = t * f.subs(z, t) * g0 - z * f * g0.subs(z, t)
    return sp.expand(sp.cancel(num / (t - z)))


def functional(atoms, expr, var):
    """atoms: [(mu, k, c)] with sympy numbers."""
    return sp.expand(sum(c * sp.diff(expr, var, k).subs(var, mu) for mu, k, c in atoms))


def bphi(g0, atoms, f):
    return functional(atoms, shift(g0, f), t)


def otimes_moment(g0, phi, psi, i):
    return functional(phi, bphi(g0, psi, z**i), z)


def duhamel(P, lam, f, h):
    """First product form for polynomials f, h in z (P given as a polynomial in u)."""
    u = sp.Symbol("u")
    Pp = sp.Poly(P, u)
    b = Pp.all_coeffs()[::-1]
    m = Pp.degree()
    pd = lambda q, g: sum(q[j] * sp.diff(g, z, j) for j in range(len(q)))
    uf = pd(b, f)
    xi = sp.Symbol("xi")
    hp = sp.diff(h, z)
    integral = sp.integrate(uf.subs(z, xi) * hp.subs(z, z + lam - xi), (xi, lam, z))
    diff = sp.expand(sp.cancel((P.subs(u, t) - P.subs(u, z)) / (t - z)))
    corr = 0
    for j in range(m):
        pj = sp.expand(diff).coeff(z, j)
        ptj = sp.Poly(sp.expand(t * pj), t).all_coeffs()[::-1] if pj != 0 else []
        corr += pd(ptj, f) * sp.diff(h, z, j).subs(z, lam)
    return sp.expand(h.subs(z, lam) * uf + integral - corr)


def taylor(expr, lam, order) -> list:
    """Taylor coefficients of a polynomial expression about lam, as Gaussian rationals."""
    local = sp.expand(expr.subs(z, w + lam))
    return [from_sym(local.coeff(w, k)) for k in range(order + 1)]


def jet_from_sym(expr, lam, order) -> Jet:
    return Jet(taylor(expr, lam, order), from_sym(lam), order)
