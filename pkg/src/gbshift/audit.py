"""Evaluate stated results on concrete instances and record what actually happens.

Each claim id maps to an evaluator producing an :class:`AuditReport`.  A
disagreement is data, never an exception: library errors raised while
evaluating an instance are captured in the report with ``agree=False``.
"""

from __future__ import annotations

from typing import Callable

from .commutant import (
    PRINCIPAL_IDEAL,
    ZERO_KERNEL,
    AuditReport,
    bphi_apply,
    bphi_matrix,
    cfg_instance,
    eigen_check,
    factorize,
    image_in_canonical_span,
    iso_check,
    kernel_classify,
)
from .duhamel import DuhamelConfig, duality_bridge, duhamel_product, wigley_check
from .errors import GBShiftError
from .exact.gaussian import ZERO
from .exact.jet import Jet, jet_of_exppoly, jet_of_poly
from .exact.linalg import matmul, rank, solve
from .exact.poly import FactoredPoly, Poly, expand
from .functionals import Functional, apply, delta_q, fourier_laplace, otimes
from .operators import G0Config

DEFAULT_ORDER = 12


def _injective(cfg, phi, N):
    kc = kernel_classify(cfg, phi, N)
    return kc, kc.kind == ZERO_KERNEL


def kernel_lemma(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    """A non-injective B_phi must kill g0."""
    phi = inst["phi"]
    kc, injective = _injective(cfg, phi, N)
    image = bphi_apply(cfg, phi, cfg.g0)
    return AuditReport(
        "kernel-lemma",
        cfg_instance(cfg, phi=phi),
        {"injective": injective, "kernel": kc.describe(), "B_phi_g0": image, "phi_g0": apply(phi, cfg.g0)},
        "B_phi not injective implies B_phi(g0) = 0",
        injective or not image,
    )


def injectivity_lemma(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    """phi(g0) != 0 must force an injective B_phi."""
    phi = inst["phi"]
    value = apply(phi, cfg.g0)
    kc, injective = _injective(cfg, phi, N)
    return AuditReport(
        "injectivity-lemma",
        cfg_instance(cfg, phi=phi),
        {"phi_g0": value, "kernel": kc.describe(), "kernel_basis": list(kc.basis), "injective": injective},
        "injective" if value else "no claim (phi(g0) = 0)",
        (not value) or injective,
    )


def isomorphism_theorem(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    return iso_check(cfg, inst["phi"], N)


def eigen_relation(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    return eigen_check(cfg, inst["phi"])


def delta_orthogonality(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    """Point functionals at zeros of P multiply to zero, and so do their operators."""
    phi, psi = inst["phi"], inst["psi"]
    prod = otimes(cfg, phi, psi)
    m = matmul(bphi_matrix(cfg, phi, N + cfg.deg), bphi_matrix(cfg, psi, N))
    op_zero = not any(x for row in m for x in row)
    return AuditReport(
        "delta-orthogonality",
        cfg_instance(cfg, phi=phi, psi=psi),
        {"product": prod, "product_is_zero": not prod, "operator_product_is_zero": op_zero},
        "product = 0 and B_phi B_psi = 0",
        not prod and op_zero,
    )


def algebra_morphism(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    phi, psi = inst["phi"], inst["psi"]
    prod = otimes(cfg, phi, psi)
    mismatches = [
        i
        for i in range(N + 1)
        if bphi_apply(cfg, prod, Poly.monomial(i)) != bphi_apply(cfg, phi, bphi_apply(cfg, psi, Poly.monomial(i)))
    ]
    return AuditReport(
        "algebra-morphism",
        cfg_instance(cfg, phi=phi, psi=psi),
        {"product": prod, "mismatched_degrees": mismatches},
        "B_(phi (x) psi) = B_phi B_psi",
        not mismatches,
    )


def canonical_kernel(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    q = inst["q"]
    dq = delta_q(q)
    kc = kernel_classify(cfg, dq, N)
    in_span = all(image_in_canonical_span(cfg, q, Poly.monomial(i)) for i in range(N + 1))
    ok = kc.kind == PRINCIPAL_IDEAL and kc.q == q and in_span
    return AuditReport(
        "canonical-kernel",
        cfg_instance(cfg, q=q, phi=dq),
        {"kernel": kc.describe(), "image_in_span": in_span},
        f"Ker B_delta(q) = ({expand(q)}) E",
        ok,
    )


def surjectivity_corollary(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    """Desk rendering: is C[z]_N inside B_phi(C[z]_N), with an exact right inverse there?"""
    phi = inst["phi"]
    value = apply(phi, cfg.g0)
    m = bphi_matrix(cfg, phi, N)
    missing = []
    preimages = []
    for i in range(N + 1):
        target = [ZERO] * len(m)
        target[i] = target[i] + 1
        try:
            preimages.append(Poly(solve(m, target)))
        except ArithmeticError:
            missing.append(i)
    surjective = not missing
    observed = {"phi_g0": value, "rank": rank(m), "monomials_outside_image": missing}
    if surjective:
        observed["right_inverse_verified"] = all(
            bphi_apply(cfg, phi, p) == Poly.monomial(i) for i, p in enumerate(preimages)
        )
    return AuditReport(
        "surjectivity-corollary",
        cfg_instance(cfg, phi=phi, order=N),
        observed,
        "surjective with a right inverse" if value else "no claim (phi(g0) = 0)",
        (not value) or surjective,
    )


def _as_jet(x, center, order):
    if isinstance(x, Jet):
        return x
    if isinstance(x, Functional):
        return jet_of_exppoly(fourier_laplace(x), order)
    return jet_of_poly(x, center, order)


def duhamel_criterion(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    dcfg = DuhamelConfig.from_g0(cfg)
    f = _as_jet(inst["f"], dcfg.lam, N + dcfg.m)
    rep = wigley_check(dcfg, f, N)
    if "witness" in inst:
        order = inst.get("witness_order", N)
        w = _as_jet(inst["witness"], dcfg.lam, order)
        prod = duhamel_product(dcfg, _as_jet(inst["f"], dcfg.lam, order + dcfg.m), w)
        rep.observed["witness"] = w
        rep.observed["f_times_given_witness"] = prod
        rep.observed["given_witness_annihilated"] = prod.is_zero()
    return rep


def duality(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    return duality_bridge(cfg, inst["phi"], inst["psi"], inst.get("order", 8))


def factorization_theorem(cfg: G0Config, inst: dict, N: int) -> AuditReport:
    phi = inst["phi"]
    res = factorize(cfg, phi, N)
    return AuditReport(
        "factorization-theorem",
        cfg_instance(cfg, phi=phi),
        {"factorization": res},
        "B_phi = B_delta(q) D^n B_psi or D^n B_psi",
        res.verified,
    )


CLAIMS: dict[str, Callable] = {
    "kernel-lemma": kernel_lemma,
    "injectivity-lemma": injectivity_lemma,
    "isomorphism-theorem": isomorphism_theorem,
    "eigen-relation": eigen_relation,
    "delta-orthogonality": delta_orthogonality,
    "algebra-morphism": algebra_morphism,
    "canonical-kernel": canonical_kernel,
    "surjectivity-corollary": surjectivity_corollary,
    "duhamel-criterion": duhamel_criterion,
    "duality-bridge": duality,
    "factorization-theorem": factorization_theorem,
}


def audit_claims(cfg: G0Config, claim_id: str, instances: list, N: int = DEFAULT_ORDER) -> list:
    """One report per instance, in input order."""
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(sorted(CLAIMS))}")
    evaluator = CLAIMS[claim_id]
    reports = []
    for inst in instances:
        try:
            reports.append(evaluator(cfg, inst, N))
        except GBShiftError as exc:
            reports.append(
                AuditReport(
                    claim_id,
                    cfg_instance(cfg, **inst),
                    {"error": type(exc).__name__, "message": str(exc)},
                    "evaluation completes",
                    False,
                )
            )
    return reports


def q_divisors(cfg: G0Config) -> list[FactoredPoly]:
    """Nonconstant divisors of P, the valid inputs of the canonical-kernel claim."""
    return [q for q in cfg.P.divisors() if q.degree > 0]
