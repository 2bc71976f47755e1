"""The generalized Duhamel product on jets centered at lambda.

With ``u = P(D) f`` and local variable ``w = z - lambda``::

    (f * h)(z) = h(lambda) u(z) + int_lambda^z u(xi) h'(z + lambda - xi) dxi
                 - sum_j ptilde_j(D) f(z) * h^(j)(lambda)

where ``(P(t) - P(z)) / (t - z) = sum_j p_j(t) z^j`` and ``ptilde_j = t p_j``.
Segment integrals of monomials are exact: the integral over [0, w] of
``s^a (w - s)^b`` is ``a! b! / (a + b + 1)! * w^(a + b + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from gmpy2 import mpq

from .commutant import AuditReport
from .errors import CenterMismatch, NonzeroCenterForExpPoly, OrderTooSmall, SingularJetMatrix
from .exact.gaussian import ZERO, GaussianRational, gq
from .exact.jet import Jet, jet_of_exppoly
from .exact.linalg import Matrix, det, nullspace, solve
from .exact.poly import FactoredPoly, Poly, expand
from .functionals import Functional, fourier_laplace, otimes
from .operators import G0Config


@dataclass(frozen=True)
class DuhamelConfig:
    P: Poly
    lam: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "lam", gq(self.lam))
        if isinstance(self.P, FactoredPoly):
            object.__setattr__(self, "P", expand(self.P))
        if self.P(0) != 1:
            raise ValueError("P(0) must equal 1")

    @property
    def m(self) -> int:
        return self.P.degree

    @classmethod
    def from_g0(cls, cfg: G0Config) -> "DuhamelConfig":
        return cls(cfg.g0, cfg.lambdaQ)

    @classmethod
    def classical(cls, lam=0) -> "DuhamelConfig":
        return cls(Poly([1]), lam)


def pj_polys(P: Poly) -> tuple[list, list]:
    """Coefficients in z of (P(t) - P(z)) / (t - z), plus their multiples by t.

    Expanding each power, (t^k - z^k)/(t - z) = sum_{a+b=k-1} t^a z^b, so
    p_j(t) = sum_{k>j} c_k t^(k-1-j).
    """
    m = P.degree
    p = [Poly([P[k] for k in range(j + 1, m + 1)]) for j in range(m)]
    return p, [q.shift_up(1) for q in p]


def pd_apply(P: Poly, f):
    """r(D) f = sum b_j f^(j).  On a jet the order drops by deg P."""
    if isinstance(f, Jet):
        m = max(P.degree, 0)
        if f.order < m:
            raise OrderTooSmall(f"jet order {f.order} is below deg P = {m}")
        n = f.order - m
        out = [ZERO] * (n + 1)
        for j, b in enumerate(P.coeffs):
            if b:
                dj = f.derivative(j).coeffs
                for k in range(n + 1):
                    out[k] = out[k] + b * dj[k]
        return Jet(out, f.center, n)
    out = Poly()
    for j, b in enumerate(P.coeffs):
        if b:
            out = out + f.derivative(j) * b
    return out


def _beta(a: int, b: int):
    """a! b! / (a + b + 1)!"""
    return mpq(factorial(a) * factorial(b), factorial(a + b + 1))


def _prepare(cfg: DuhamelConfig, f: Jet, h: Jet):
    for j in (f, h):
        if j.center != cfg.lam:
            raise CenterMismatch(f"jet centered at {j.center}, expected {cfg.lam}")
    m = cfg.m
    if f.order < m:
        raise OrderTooSmall(f"f needs order >= deg P = {m}, got {f.order}")
    if h.order < m - 1:
        raise OrderTooSmall(f"h needs order >= deg P - 1 = {m - 1}, got {h.order}")
    return min(f.order - m, h.order)


def _correction(cfg: DuhamelConfig, f: Jet, h: Jet, n: int) -> list:
    """Coefficients of sum_j ptilde_j(D) f * h^(j)(lambda) up to w^n."""
    out = [ZERO] * (n + 1)
    _, pt = pj_polys(cfg.P)
    for j, q in enumerate(pt):
        hj = h.coeffs[j] * factorial(j)
        if not hj:
            continue
        g = pd_apply(q, f).coeffs
        for k in range(n + 1):
            out[k] = out[k] + hj * g[k]
    return out


def duhamel_product(cfg: DuhamelConfig, f: Jet, h: Jet) -> Jet:
    """f * h as a jet of order min(f.order - deg P, h.order)."""
    n = _prepare(cfg, f, h)
    u = pd_apply(cfg.P, f).coeffs
    hc = h.coeffs
    out = [hc[0] * u[k] for k in range(n + 1)]
    # u(s) h'(w - s): h' has coefficient b*h_b at power b-1
    for a in range(n):
        if not u[a]:
            continue
        for b in range(1, n - a + 1):
            if hc[b]:
                out[a + b] = out[a + b] + u[a] * hc[b] * (b * _beta(a, b - 1))
    corr = _correction(cfg, f, h, n)
    return Jet([x - y for x, y in zip(out, corr)], cfg.lam, n)


def duhamel_product_ibp(cfg: DuhamelConfig, f: Jet, h: Jet) -> Jet:
    """The integrated-by-parts form u(lambda) h(z) + int u'(eta) h(z + lambda - eta) deta - sum.

    Must agree exactly with :func:`duhamel_product`.
    """
    n = _prepare(cfg, f, h)
    u = pd_apply(cfg.P, f).coeffs
    hc = h.coeffs
    out = [u[0] * hc[k] for k in range(n + 1)]
    for a in range(1, n + 1):
        if not u[a]:
            continue
        for b in range(0, n - a + 1):
            if hc[b]:
                out[a + b] = out[a + b] + u[a] * hc[b] * (a * _beta(a - 1, b))
    corr = _correction(cfg, f, h, n)
    return Jet([x - y for x, y in zip(out, corr)], cfg.lam, n)


def criterion_value(cfg: DuhamelConfig, f: Jet) -> GaussianRational:
    """P(D)(f)(lambda)."""
    return pd_apply(cfg.P, f).coeffs[0]


def _monomial_jet(cfg: DuhamelConfig, j: int, N: int) -> Jet:
    c = [ZERO] * (N + 1)
    c[j] = gq(1)
    return Jet(c, cfg.lam, N)


def duhamel_matrix(cfg: DuhamelConfig, f: Jet, N: int) -> Matrix:
    """Matrix of h -> f * h on N-jets; column j is f * (z - lambda)^j."""
    if N < cfg.m - 1:
        raise OrderTooSmall(f"N={N} is below deg P - 1 = {cfg.m - 1}")
    if f.order < N + cfg.m:
        raise OrderTooSmall(f"f needs order >= N + deg P = {N + cfg.m}, got {f.order}")
    f = f.truncate(N + cfg.m)
    cols = [duhamel_product(cfg, f, _monomial_jet(cfg, j, N)).coeffs for j in range(N + 1)]
    return [[cols[j][i] for j in range(N + 1)] for i in range(N + 1)]


def duhamel_invert(cfg: DuhamelConfig, f: Jet, g: Jet, N: int) -> Jet:
    """The N-jet h with f * h = g to order N."""
    a = duhamel_matrix(cfg, f, N)
    if not det(a):
        raise SingularJetMatrix(
            f"the jet matrix of h -> f*h is singular at order {N}", criterion_value(cfg, f)
        )
    if g.center != cfg.lam:
        raise CenterMismatch(f"jet centered at {g.center}, expected {cfg.lam}")
    if g.order < N:
        raise OrderTooSmall(f"g needs order >= {N}, got {g.order}")
    rhs = list(g.coeffs[: N + 1])
    h = Jet(solve(a, rhs), cfg.lam, N)
    if duhamel_product(cfg, f.truncate(N + cfg.m), h).coeffs != tuple(rhs):
        raise ArithmeticError("back-substitution residual is nonzero")
    return h


def _normalized(v: list) -> list:
    lead = next(x for x in v if x)
    return [x / lead for x in v]


def wigley_check(cfg: DuhamelConfig, f: Jet, N: int) -> AuditReport:
    """Compare "h -> f*h is invertible iff P(D)(f)(lambda) != 0" with the jet matrix at order N."""
    value = criterion_value(cfg, f)
    a = duhamel_matrix(cfg, f, N)
    d = det(a)
    observed = {"criterion": value, "det": d, "invertible": bool(d)}
    if not d:
        w = Jet(_normalized(nullspace(a)[0]), cfg.lam, N)
        observed["kernel_witness"] = w
        observed["f_times_witness"] = duhamel_product(cfg, f.truncate(N + cfg.m), w)
    return AuditReport(
        "duhamel-criterion",
        {"P": cfg.P, "lambda": cfg.lam, "f": f, "order": N},
        observed,
        "invertible" if value else "singular",
        bool(value) == bool(d),
    )


def bridge_sides(cfg: G0Config, phi: Functional, psi: Functional, N: int) -> tuple[Jet, Jet]:
    """(jet of F(phi (x) psi), F(phi) * F(psi)) at order N, both at center 0."""
    if cfg.lambdaQ:
        raise NonzeroCenterForExpPoly("the transform bridge is exact only for lambda = 0")
    dcfg = DuhamelConfig.from_g0(cfg)
    left = jet_of_exppoly(fourier_laplace(otimes(cfg, phi, psi)), N)
    fj = jet_of_exppoly(fourier_laplace(phi), N + dcfg.m)
    hj = jet_of_exppoly(fourier_laplace(psi), N)
    return left, duhamel_product(dcfg, fj, hj)


def duality_bridge(cfg: G0Config, phi: Functional, psi: Functional, N: int = 8) -> AuditReport:
    left, right = bridge_sides(cfg, phi, psi, N)
    from .commutant import cfg_instance

    return AuditReport(
        "duality-bridge",
        cfg_instance(cfg, phi=phi, psi=psi, order=N),
        {"transform_of_product": left, "product_of_transforms": right},
        "F(phi (x) psi) = F(phi) * F(psi)",
        left == right,
    )
