"""Operators commuting with the generalized backward shift.

Every such operator has the form ``B_phi(f)(z) = phi(T_{z,g0}(f))``.  Here
``phi`` is a finite-support :class:`Functional` and everything is decided on
finite sections C[z]_N and on the invariant subspaces P*C[z]_m = Ker D^(m+1),
which genuinely lie in the function space, so the results are exact
statements rather than approximations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    CriterionFailed,
    OrderTooSmall,
    RestrictedMatrixSingular,
    ZeroFunctional,
)
from .exact.gaussian import ZERO, gq
from .exact.linalg import Matrix, det, matmul, nullspace, pad_rows, rank, solve
from .exact.poly import FactoredPoly, Poly, exact_div, expand
from .functionals import Functional, apply, compose_with_power, delta_q
from .operators import G0Config, gbs_apply, gbs_matrix, operator_matrix, shift_apply, tilde_shift_apply

DEFAULT_ORDER = 12

ZERO_KERNEL = "Zero"
PRINCIPAL_IDEAL = "PrincipalIdeal"
FINITE_DIM = "FiniteDim"
NOT_IN_LATTICE = "NotInLattice"

ISOMORPHISM = "Isomorphism"
SHIFT_POWER = "ShiftPower"
CANONICAL_TIMES_SHIFT = "CanonicalTimesShift"


def bphi_apply(cfg: G0Config, phi: Functional, f: Poly) -> Poly:
    """Apply phi in t to the two-point shift of f; the result is a polynomial in z."""
    return apply(phi, shift_apply(cfg, f), "t")


def aphi_apply(cfg: G0Config, phi: Functional, f: Poly) -> Poly:
    """A_phi(f)(z) = phi_t(t * Ttilde_{z,g0}(f)(t)); B_phi = phi(g0) I + A_phi."""
    tt = tilde_shift_apply(cfg, f)
    return apply(phi, _times_t(tt), "t")


def _times_t(b):
    from .exact.bivar import BivarPoly

    return BivarPoly.in_t(Poly([0, 1])) * b


def bphi_matrix(cfg: G0Config, phi: Functional, N: int) -> Matrix:
    """Matrix of B_phi from C[z]_N to C[z]_{N + deg P}; column i is B_phi(z^i)."""
    return operator_matrix(lambda f: bphi_apply(cfg, phi, f), N + 1, N + 1 + cfg.deg)


def _vectors_to_polys(vs) -> list:
    return [Poly(v) for v in vs]


def _in_q_span(p: Poly, qpoly: Poly, n: int) -> bool:
    """Is p in q * C[z]_n ?"""
    if not p:
        return True
    if p.degree - qpoly.degree > n:
        return False
    rest = _poly_divmod(p, qpoly)
    return rest is not None and rest.degree <= n


def _poly_divmod(p: Poly, d: Poly):
    """Exact quotient p / d, or None when d does not divide p."""
    if d.degree == 0:
        return p * (1 / d[0])
    num = list(p.coeffs)
    dl = d.coeffs[-1]
    q = [ZERO] * max(len(num) - d.degree, 0)
    for k in range(len(num) - 1, d.degree - 1, -1):
        c = num[k] / dl
        q[k - d.degree] = c
        if c:
            for j, dc in enumerate(d.coeffs):
                num[k - d.degree + j] = num[k - d.degree + j] - c * dc
    if any(num[: d.degree]):
        return None
    return Poly(q)


@dataclass(frozen=True)
class KernelClassification:
    kind: str
    basis: tuple
    order_used: int
    q: FactoredPoly | None = None
    n: int | None = None
    lattice_condition: bool | None = None
    d_invariant: bool = True

    @property
    def dim(self) -> int:
        return len(self.basis)

    def describe(self) -> str:
        if self.kind == PRINCIPAL_IDEAL:
            return f"PrincipalIdeal(q={_q_text(self.q)})"
        if self.kind == FINITE_DIM:
            return f"FiniteDim(q={_q_text(self.q)}, n={self.n})"
        return self.kind

    def to_json(self) -> dict:
        from .serialize import to_jsonable

        return {
            "kind": self.kind,
            "q": to_jsonable(self.q) if self.q is not None else None,
            "q_expanded": to_jsonable(expand(self.q)) if self.q is not None else None,
            "n": self.n,
            "dim": self.dim,
            "order_used": self.order_used,
            "lattice_condition": self.lattice_condition,
            "d_invariant": self.d_invariant,
            "basis": [to_jsonable(b) for b in self.basis],
        }


def _q_text(q: FactoredPoly) -> str:
    return str(expand(q))


def _span_closed_under_d(cfg: G0Config, basis: list, N: int) -> bool:
    if not basis:
        return True
    cols = [b.padded(N + 1) for b in basis]
    base_rank = rank(cols)
    for b in basis:
        img = gbs_apply(cfg, b)
        if rank(cols + [img.padded(N + 1)]) != base_rank:
            return False
    return True


def kernel_classify(cfg: G0Config, phi: Functional, N: int = DEFAULT_ORDER) -> KernelClassification:
    """Compute Ker B_phi inside C[z]_N and match it against the invariant-subspace lattice.

    Candidates are q*C[z]_n for every divisor q of P (q(0) = 1).  When
    n = N - deg q the candidate is the truncation of the ideal qE.
    """
    if N < 2 * cfg.deg + 2:
        raise OrderTooSmall(f"N={N} is below the adequacy floor 2*deg(P)+2={2 * cfg.deg + 2}")
    ker = _vectors_to_polys(nullspace(bphi_matrix(cfg, phi, N)))
    d = len(ker)
    if d == 0:
        return KernelClassification(ZERO_KERNEL, (), N)
    for q in cfg.P.divisors():
        n = d - 1
        if n > N - q.degree:
            continue
        qp = expand(q)
        if all(_in_q_span(b, qp, n) for b in ker):
            basis = tuple(qp.shift_up(j) for j in range(n + 1))
            invariant = _span_closed_under_d(cfg, list(basis), N)
            if n == N - q.degree:
                return KernelClassification(PRINCIPAL_IDEAL, basis, N, q, None, None, invariant)
            cond = n >= cfg.deg - q.degree - 1
            return KernelClassification(FINITE_DIM, basis, N, q, n, cond, invariant)
    return KernelClassification(
        NOT_IN_LATTICE, tuple(ker), N, d_invariant=_span_closed_under_d(cfg, ker, N)
    )


def restricted_matrix(cfg: G0Config, phi: Functional, m: int) -> Matrix:
    """B_phi on P*C[z]_m in the basis P, P z, ..., P z^m (the space is B_phi-invariant)."""
    g0 = cfg.g0
    cols = []
    for j in range(m + 1):
        img = bphi_apply(cfg, phi, g0.shift_up(j))
        quo = _poly_divmod(img, g0)
        if quo is None or quo.degree > m:
            raise ArithmeticError("image left the invariant subspace P*C[z]_m")
        cols.append(quo.padded(m + 1))
    return [[cols[j][i] for j in range(m + 1)] for i in range(m + 1)]


def invariant_determinants(cfg: G0Config, phi: Functional, N: int) -> list:
    """det of B_phi restricted to P*C[z]_m for m = 0 .. N - deg P."""
    return [det(restricted_matrix(cfg, phi, m)) for m in range(N - cfg.deg + 1)]


@dataclass
class AuditReport:
    claim_id: str
    instance: dict
    observed: dict
    paper_prediction: str
    agree: bool
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        from .serialize import to_jsonable

        out = {
            "claim_id": self.claim_id,
            **to_jsonable(self.instance),
            "observed": to_jsonable(self.observed),
            "paper_prediction": self.paper_prediction,
            "agree": self.agree,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def cfg_instance(cfg: G0Config, **extra) -> dict:
    from .serialize import factored_to_json

    inst = {"cfg": {"P": factored_to_json(cfg.P), "lambdaQ": str(cfg.lambdaQ)}}
    inst.update(extra)
    return inst


def iso_check(cfg: G0Config, phi: Functional, N: int = DEFAULT_ORDER) -> AuditReport:
    """Compare "B_phi is an isomorphism iff phi(g0) != 0" with what the finite sections show."""
    value = apply(phi, cfg.g0)
    kc = kernel_classify(cfg, phi, N)
    dets = invariant_determinants(cfg, phi, N)
    injective = kc.kind == ZERO_KERNEL and all(dets)
    predicted = bool(value)
    return AuditReport(
        "isomorphism-theorem",
        cfg_instance(cfg, phi=phi),
        {
            "phi_g0": value,
            "kernel": kc.describe(),
            "kernel_dim": kc.dim,
            "kernel_basis": list(kc.basis),
            "invariant_determinants": dets,
            "injective_on_sections": injective,
        },
        "isomorphism" if predicted else "not injective",
        predicted == injective,
    )


def eigen_check(cfg: G0Config, phi: Functional) -> AuditReport:
    """B_phi(g0) == phi(g0) * g0."""
    value = apply(phi, cfg.g0)
    image = bphi_apply(cfg, phi, cfg.g0)
    return AuditReport(
        "eigen-relation",
        cfg_instance(cfg, phi=phi),
        {"phi_g0": value, "B_phi_g0": image},
        "B_phi(g0) = phi(g0) g0",
        image == cfg.g0 * value,
    )


def invert_on_invariant(cfg: G0Config, phi: Functional, g: Poly, m: int | None = None) -> Poly:
    """Solve B_phi(f) = g for f in P*C[z]_m (requires phi(g0) != 0)."""
    if not apply(phi, cfg.g0):
        raise CriterionFailed("phi(g0) = 0: B_phi is not invertible")
    quo = _poly_divmod(g, cfg.g0)
    if quo is None:
        raise ValueError("g is not in the invariant subspace P*C[z]")
    if m is None:
        m = max(quo.degree, 0)
    if quo.degree > m:
        raise ValueError(f"g is not in P*C[z]_{m}")
    a = restricted_matrix(cfg, phi, m)
    if not det(a):
        raise RestrictedMatrixSingular(f"B_phi restricted to P*C[z]_{m} is singular")
    x = solve(a, quo.padded(m + 1))
    f = cfg.g0 * Poly(x)
    if bphi_apply(cfg, phi, f) != g:
        raise ArithmeticError("back-substitution residual is nonzero")
    return f


@dataclass(frozen=True)
class FactorizationResult:
    """B_phi = B_delta(q) D^n B_psi (with the canonical factor absent for ShiftPower)."""

    branch: str
    verified: bool
    n: int = 0
    psi: Functional | None = None
    q: FactoredPoly | None = None
    audit_notes: tuple = ()

    def to_json(self) -> dict:
        from .serialize import to_jsonable

        return {
            "branch": self.branch,
            "n": self.n,
            "psi": to_jsonable(self.psi) if self.psi is not None else None,
            "q": to_jsonable(self.q) if self.q is not None else None,
            "verified": self.verified,
            "audit_notes": list(self.audit_notes),
        }


def _vanishing_depth(cfg: G0Config, phi: Functional, N: int) -> int:
    """Largest m <= N with phi(P z^j) = 0 for all j <= m, or -1."""
    g0 = cfg.g0
    m = -1
    for j in range(N + 1):
        if apply(phi, g0.shift_up(j)):
            break
        m = j
    return m


def _shift_out(cfg: G0Config, phi: Functional, N: int):
    """Peel D^n off B_phi: returns (n, psi) with phi = psi o D^n and psi(g0) != 0, or None."""
    n = 0
    psi = phi
    while not apply(psi, cfg.g0):
        m = _vanishing_depth(cfg, psi, N)
        if m >= N:
            return None
        psi = compose_with_power(psi, m + 1)
        n += m + 1
    return n, psi


def factorize(cfg: G0Config, phi: Functional, N: int = DEFAULT_ORDER) -> FactorizationResult:
    """Constructive factorization of a nonzero B_phi, verified by exact matrix recomposition."""
    if not phi:
        raise ZeroFunctional("cannot factorize the zero operator")
    p = cfg.deg
    lhs = bphi_matrix(cfg, phi, N)
    notes = []
    if apply(phi, cfg.g0):
        kc = kernel_classify(cfg, phi, max(N, 2 * p + 2))
        if kc.kind != ZERO_KERNEL:
            notes.append(f"phi(g0) != 0 but Ker B_phi is {kc.describe()} at order {kc.order_used}")
        return FactorizationResult(ISOMORPHISM, True, audit_notes=tuple(notes))

    peeled = _shift_out(cfg, phi, N)
    if peeled is not None:
        n, psi = peeled
        rhs = matmul(gbs_matrix(cfg, N + p + 1, n), bphi_matrix(cfg, psi, N))
        ok = rhs == lhs
        if not ok:
            notes.append("recomposition D^n B_psi differs from B_phi")
        return FactorizationResult(SHIFT_POWER, ok, n, psi, audit_notes=tuple(notes))

    kc = kernel_classify(cfg, phi, max(N, 2 * p + 2))
    if kc.kind != PRINCIPAL_IDEAL or kc.q is None or kc.q.degree == 0:
        notes.append(f"kernel {kc.describe()} is neither finite-dimensional nor a proper ideal qE")
        return FactorizationResult(CANONICAL_TIMES_SHIFT, False, audit_notes=tuple(notes))
    q = kc.q
    dq = delta_q(q)
    # xi o B_delta(q) = phi only needs checking on a complement of qE: C[z]_{deg q - 1}.
    pool = [(0, k) for k in range(p)]
    images = [bphi_apply(cfg, dq, Poly.monomial(i)) for i in range(q.degree)]
    rows = [[img.derivative_at(mu, k) for mu, k in pool] for img in images]
    rhs_vals = [apply(phi, Poly.monomial(i)) for i in range(q.degree)]
    try:
        x = solve(rows, rhs_vals)
    except ArithmeticError:
        notes.append("no xi supported on delta(0, k), k < deg P, solves xi o B_delta(q) = phi")
        return FactorizationResult(CANONICAL_TIMES_SHIFT, False, q=q, audit_notes=tuple(notes))
    xi = Functional((mu, k, c) for (mu, k), c in zip(pool, x))
    peeled = _shift_out(cfg, xi, N)
    if peeled is None:
        notes.append("xi vanishes on P*C[z]_N; a second canonical factor would be needed")
        return FactorizationResult(CANONICAL_TIMES_SHIFT, False, q=q, audit_notes=tuple(notes))
    n, psi = peeled
    rhs = matmul(
        bphi_matrix(cfg, dq, N + p),
        matmul(gbs_matrix(cfg, N + p + 1, n), bphi_matrix(cfg, psi, N)),
    )
    ok = pad_rows(lhs, len(rhs)) == rhs
    if not ok:
        notes.append("recomposition B_delta(q) D^n B_psi differs from B_phi")
    return FactorizationResult(CANONICAL_TIMES_SHIFT, ok, n, psi, q, tuple(notes))


def recompose(cfg: G0Config, result: FactorizationResult, N: int) -> Matrix:
    """Matrix of the product named by a factorization, on C[z]_N."""
    p = cfg.deg
    if result.branch == ISOMORPHISM:
        raise ValueError("the isomorphism branch carries no factors")
    inner = matmul(gbs_matrix(cfg, N + p + 1, result.n), bphi_matrix(cfg, result.psi, N))
    if result.branch == SHIFT_POWER:
        return inner
    return matmul(bphi_matrix(cfg, delta_q(result.q), N + p), inner)


def image_in_canonical_span(cfg: G0Config, q: FactoredPoly, f: Poly) -> bool:
    """Is B_delta(q)(f) in span{P/(z - root)^s : 1 <= s <= mult_q(root)}?"""
    img = bphi_apply(cfg, delta_q(q), f)
    g0 = cfg.g0
    gens = []
    for root, mult in q.factors:
        lin = Poly([-root, 1])
        cur = g0
        for _ in range(mult):
            cur = exact_div(cur, lin)
            gens.append(cur)
    if not img:
        return True
    width = max(g0.degree + 1, img.degree + 1)
    cols = [[g.padded(width)[i] for g in gens] for i in range(width)]
    try:
        solve(cols, img.padded(width))
    except ArithmeticError:
        return False
    return True


def commutes_with_shift(cfg: G0Config, phi: Functional, N: int) -> bool:
    """B_phi D == D B_phi on C[z]_N, compared as maps into C[z]_{N + deg P}."""
    p = cfg.deg
    b_small = bphi_matrix(cfg, phi, N)
    d_small = gbs_matrix(cfg, N + 1)
    d_big = gbs_matrix(cfg, N + p + 1)
    left = matmul(bphi_matrix(cfg, phi, max(N, p)), pad_rows(d_small, max(N, p) + 1))
    right = matmul(d_big, b_small)
    rows = max(len(left), len(right))
    return pad_rows(left, rows) == pad_rows(right, rows)


def scalar(x):
    return gq(x)
