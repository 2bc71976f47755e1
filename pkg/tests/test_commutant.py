from fractions import Fraction

import oracle as o
import pytest
import sympy as sp

from gbshift import FactoredPoly, G0Config, Poly, apply, delta, delta_q, otimes
from gbshift.commutant import (
    FINITE_DIM,
    NOT_IN_LATTICE,
    PRINCIPAL_IDEAL,
    ZERO_KERNEL,
    aphi_apply,
    bphi_apply,
    bphi_matrix,
    commutes_with_shift,
    eigen_check,
    factorize,
    image_in_canonical_span,
    invariant_determinants,
    invert_on_invariant,
    iso_check,
    kernel_classify,
    recompose,
)
from gbshift.errors import CriterionFailed, OrderTooSmall, ZeroFunctional
from gbshift.exact.gaussian import I, gq
from gbshift.exact.linalg import pad_rows
from gbshift.functionals import Functional

MONOS = [Poly.monomial(i) for i in range(4)]


def test_bphi_examples(cfg1, cfg12):
    for f in (Poly([1]), Poly([0, 1]), Poly([0, 0, 1])):
        assert bphi_apply(cfg1, delta(1), f) == Poly([f(1)])
        assert bphi_apply(cfg12, delta(0), f) == f
    assert bphi_apply(cfg1, delta(0, 1), Poly([1])) == Poly()
    assert bphi_apply(cfg1, delta(0, 1), Poly([0, 1])) == Poly([1, -1])
    f = Poly([3, 1, 4, 1, 5])
    expect = Poly([1, -1]) * Poly(f.coeffs[1:])
    assert bphi_apply(cfg1, delta(0, 1), f) == expect


@pytest.mark.parametrize(
    "roots, atoms",
    [([(1, 1)], [(0, 1, 1)]), ([(1, 1), (2, 1)], [(sp.Rational(1, 2), 2, 1), (1, 0, -1)]), ([(1, 2)], [(sp.I, 1, 2)])],
)
def test_bphi_matches_sympy(roots, atoms):
    cfg = G0Config(FactoredPoly(roots))
    g0 = o.g0_sym(roots)
    phi = Functional((o.from_sym(sp.sympify(mu)), k, c) for mu, k, c in atoms)
    for i in range(7):
        assert bphi_apply(cfg, phi, Poly.monomial(i)) == o.sym_poly(o.bphi(g0, atoms, o.z**i))


def test_aphi_decomposition(cfg1, cfg12):
    assert aphi_apply(cfg1, delta(0, 1), Poly([1])) == Poly([1])
    for cfg in (cfg1, cfg12):
        for phi in (delta(0), delta(0, 1), delta(2, 1) + delta(I, 0, 3)):
            for f in MONOS + [Poly()]:
                assert bphi_apply(cfg, phi, f) == f * apply(phi, cfg.g0) + aphi_apply(cfg, phi, f)
        assert aphi_apply(cfg, delta(0), Poly([1, 2, 3])) == Poly()


def test_bphi_matrix_examples(cfg1):
    ident = bphi_matrix(cfg1, delta(0), 4)
    assert all(ident[i][j] == (i == j) for i in range(5) for j in range(5))
    assert ident[5] == [0] * 5
    m = bphi_matrix(cfg1, delta(1), 2)
    assert [row for row in m] == [[1, 1, 1], [0, 0, 0], [0, 0, 0], [0, 0, 0]]
    zero = bphi_matrix(cfg1, Functional(), 3)
    assert not any(x for row in zero for x in row)


def test_kernel_classify_examples(cfg1, cfg12):
    kc = kernel_classify(cfg1, delta(1), 12)
    assert kc.kind == PRINCIPAL_IDEAL and kc.q == FactoredPoly([(1, 1)]) and kc.dim == 12
    kc = kernel_classify(cfg1, delta(0, 1), 12)
    assert kc.kind == FINITE_DIM and kc.q.degree == 0 and kc.n == 0 and kc.basis == (Poly([1]),)
    assert kc.lattice_condition
    assert kernel_classify(cfg1, delta(0), 12).kind == ZERO_KERNEL
    kc = kernel_classify(cfg12, delta(1) + delta(2), 12)
    assert kc.describe() == "PrincipalIdeal(q=1 - 3/2*z + 1/2*z^2)"
    with pytest.raises(OrderTooSmall):
        kernel_classify(cfg12, delta(1), 5)


def test_zero_functional_kernel_is_everything(cfg1):
    kc = kernel_classify(cfg1, Functional(), 6)
    assert kc.kind == PRINCIPAL_IDEAL and kc.q.degree == 0 and kc.dim == 7


def test_kernels_are_d_invariant(cfg_sq):
    for phi in (delta(1), delta(1, 1), delta(0, 1), delta(0, 2) + delta(1)):
        kc = kernel_classify(cfg_sq, phi, 12)
        assert kc.kind != NOT_IN_LATTICE
        assert kc.d_invariant


@pytest.mark.parametrize("roots", [[(1, 1)], [(1, 2)], [(1, 1), (2, 1)], [(1, 2), (Fraction(1, 2) + I, 1)]])
def test_canonical_kernel_and_image(roots):
    cfg = G0Config(FactoredPoly(roots))
    for q in cfg.P.divisors():
        if not q.degree:
            continue
        kc = kernel_classify(cfg, delta_q(q), 12)
        assert kc.kind == PRINCIPAL_IDEAL and kc.q == q
        assert all(image_in_canonical_span(cfg, q, Poly.monomial(i)) for i in range(13))


def test_iso_check_examples(cfg1):
    r = iso_check(cfg1, delta(0))
    assert r.agree and r.observed["phi_g0"] == 1 and r.observed["kernel"] == ZERO_KERNEL
    assert all(r.observed["invariant_determinants"])
    r = iso_check(cfg1, delta(1))
    assert r.agree and r.observed["phi_g0"] == 0
    r = iso_check(cfg1, delta(0, 1))
    assert not r.agree
    assert r.observed["phi_g0"] == -1 and r.observed["kernel_basis"] == [Poly([1])]


def test_restricted_determinants_are_powers_of_phi_g0(cfg12):
    phi = delta(0, 1) + delta(Fraction(1, 2), 0, 3)
    v = apply(phi, cfg12.g0)
    dets = invariant_determinants(cfg12, phi, 8)
    assert dets == [v ** (m + 1) for m in range(len(dets))]


def test_eigen_check(cfg1):
    for phi in (delta(0, 1), delta(0), delta(1)):
        assert eigen_check(cfg1, phi).agree
    assert bphi_apply(cfg1, delta(0, 1), cfg1.g0) == Poly([-1, 1])


def test_commutation_with_shift(cfg12):
    for phi in (delta(1, 2), delta(I, 1) + delta(3)):
        assert commutes_with_shift(cfg12, phi, 10)


def test_algebra_morphism(cfg12):
    phi, psi = delta(1, 1) + delta(0, 2), delta(Fraction(1, 2), 1, -2)
    prod = otimes(cfg12, phi, psi)
    for i in range(10):
        zi = Poly.monomial(i)
        assert bphi_apply(cfg12, prod, zi) == bphi_apply(cfg12, phi, bphi_apply(cfg12, psi, zi))


def test_invert_on_invariant(cfg1):
    g = cfg1.g0 * Poly([2, 0, 1])
    assert invert_on_invariant(cfg1, delta(0), g) == g
    assert invert_on_invariant(cfg1, delta(0, 0, 2), g) == g * Fraction(1, 2)
    phi = delta(0) + delta(1)
    f = invert_on_invariant(cfg1, phi, cfg1.g0 * Poly([1, 1]), 1)
    assert bphi_apply(cfg1, phi, f) == cfg1.g0 * Poly([1, 1])
    with pytest.raises(CriterionFailed):
        invert_on_invariant(cfg1, delta(1), g)
    with pytest.raises(ValueError):
        invert_on_invariant(cfg1, delta(0), Poly([1, 1]))


def _check_recomposition(cfg, phi, res, N=12):
    lhs = bphi_matrix(cfg, phi, N)
    rhs = recompose(cfg, res, N)
    rows = max(len(lhs), len(rhs))
    assert pad_rows(lhs, rows) == pad_rows(rhs, rows)


def test_factorize_canonical_branch(cfg12):
    res = factorize(cfg12, delta(1))
    assert res.branch == "CanonicalTimesShift" and res.verified
    assert res.q == FactoredPoly([(1, 1)]) and res.n == 0
    _check_recomposition(cfg12, delta(1), res)


def test_factorize_shift_branch(cfg1):
    phi = delta(0, 1) + delta(0)
    res = factorize(cfg1, phi)
    assert res.branch == "ShiftPower" and res.n == 1 and res.verified
    assert apply(res.psi, cfg1.g0) != 0
    _check_recomposition(cfg1, phi, res)


def test_factorize_isomorphism_and_zero(cfg1):
    res = factorize(cfg1, delta(0, 1))
    assert res.branch == "Isomorphism"
    assert res.audit_notes  # kernel is nonzero although phi(g0) != 0
    with pytest.raises(ZeroFunctional):
        factorize(cfg1, Functional())


@pytest.mark.parametrize(
    "phi",
    [delta(1) + delta(2, 0, -1), delta(1, 1), delta(1) + delta(1, 1, 3), delta(1, 1) + delta(2), delta(1) * gq(I)],
)
def test_factorize_verifies_in_general(phi):
    cfg = G0Config(FactoredPoly([(1, 2), (2, 1)]))
    assert apply(phi, cfg.g0) == 0
    res = factorize(cfg, phi)
    assert res.verified and res.branch == "CanonicalTimesShift"
    _check_recomposition(cfg, phi, res)
