"""Acceptance criteria 1-12, each a single test printing one PASS/FAIL line.

Library results are compared against the sympy reference in ``oracle.py``
wherever an independent computation is feasible within the time budget;
all comparisons are exact.
"""

import json
import random
from fractions import Fraction
from importlib import resources
from math import factorial

import oracle as o
import pytest
import sympy as sp

from gbshift import FactoredPoly, G0Config, Jet, Poly, delta, delta_q, otimes, suites
from gbshift.audit import audit_claims
from gbshift.cli import main, parse_function
from gbshift.cli.commands import functional_arg
from gbshift.cli.scenario import context_from_scenario, dumps, run_scenario
from gbshift.commutant import (
    bphi_apply,
    bphi_matrix,
    factorize,
    kernel_classify,
    recompose,
)
from gbshift.duhamel import DuhamelConfig, duhamel_invert, duhamel_product, wigley_check
from gbshift.exact.jet import jet_of_exppoly
from gbshift.exact.linalg import nullspace, pad_rows
from gbshift.exact.poly import expand
from gbshift.exact.text import format_poly
from gbshift.functionals import fourier_laplace
from gbshift.operators import gbs_matrix
from gbshift.suites import (
    FACTORIZATION_FIXTURES,
    SUITES,
    duality_pairs,
    functional_pairs,
    load_fixture,
    random_jet,
)

ROOTS = [[(1, 1)], [(1, 2)], [(1, 1), (2, 1)]]
N = 12
RESULTS: dict = {}


def report(n: int, title: str, failures: list) -> None:
    ok = not failures
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
    if failures:
        line += "  [" + "; ".join(map(str, failures[:3])) + "]"
    RESULTS[n] = line
    print(line)
    assert ok, line


def suite_failures(name: str) -> list:
    res = SUITES[name]()
    return [f"{name}: {f}" for f in res.failures] if res.checks else [f"{name}: no checks ran"]


def sym_atoms(phi):
    return [(o.to_sym(mu), k, o.to_sym(c)) for mu, k, c in phi.atoms]


def sym_span_equal(vectors, polys, width):
    """Row spaces equal, decided by sympy rank."""
    a = sp.Matrix([[o.to_sym(x) for x in v] + [0] * (width - len(v)) for v in vectors])
    b = sp.Matrix([[sp.expand(p).coeff(o.z, k) for k in range(width)] for p in polys])
    return a.rows == b.rows == a.rank() == a.col_join(b).rank()


def sym_operator_nullspace(op, width):
    """Nullspace of a sympy-defined linear operator on C[z]_{width-1}."""
    cols = [sp.Poly(sp.expand(op(o.z**i)), o.z) if op(o.z**i) != 0 else None for i in range(width)]
    rows = max((c.degree() + 1 for c in cols if c is not None), default=1)
    m = sp.Matrix(rows, width, lambda r, c: cols[c].as_expr().coeff(o.z, r) if cols[c] is not None else 0)
    return [list(v) for v in m.nullspace()]


def test_criterion_01_kernel_law():
    failures = []
    for roots in ROOTS:
        g0 = o.g0_sym(roots)
        cfg = G0Config(FactoredPoly(roots))
        assert o.sym_poly(g0) == cfg.g0
        for n in range(1, 5):
            expected = [g0 * o.z**j for j in range(n)]

            def op(f, n=n):
                for _ in range(n):
                    f = o.gbs(g0, f)
                return f

            oracle_ker = [[o.from_sym(x) for x in v] for v in sym_operator_nullspace(op, N + 1)]
            if not sym_span_equal(oracle_ker, expected, N + 1):
                failures.append(f"oracle Ker D^{n}, P={g0}")
            lib_ker = nullspace(gbs_matrix(cfg, N + 1, n))
            if not sym_span_equal(lib_ker, expected, N + 1):
                failures.append(f"Ker D^{n}, P={g0}")
    failures += suite_failures("kernel-laws")
    report(1, "kernel law Ker D^n = P C[z]_{n-1}", failures)


def test_criterion_02_right_inverse():
    failures = suite_failures("right-inverse")
    for roots in ROOTS:
        g0 = o.g0_sym(roots)
        for i in range(N + 1):
            if sp.expand(o.gbs(g0, o.z ** (i + 1)) - o.z**i) != 0:
                failures.append(f"oracle D M z^{i}, P={g0}")
    report(2, "D M = id on C[z]_12", failures)


def test_criterion_03_algebra_morphism():
    pairs = functional_pairs()
    assert len(pairs) >= 25
    points = {mu for _, phi, psi in pairs for mu, _, _ in phi.atoms + psi.atoms}
    assert len(points) == 5 and max(phi.max_order for _, phi, _ in pairs) <= 3
    failures = suite_failures("algebra-morphism")
    for cfg, phi, psi in pairs[::8]:
        g0 = o.poly_sym(cfg.g0)
        prod = otimes(cfg, phi, psi)
        for i in range(9):
            want = o.bphi(g0, sym_atoms(phi), o.bphi(g0, sym_atoms(psi), o.z**i))
            if bphi_apply(cfg, prod, Poly.monomial(i)) != o.sym_poly(want):
                failures.append(f"oracle B_(phi x psi) z^{i} for {phi!r} {psi!r}")
    report(3, "B_(phi x psi) = B_phi B_psi, commutative, associative", failures)


def test_criterion_04_eigen_relation():
    failures = suite_failures("eigen")
    for cfg, phi, psi in functional_pairs():
        g0 = o.poly_sym(cfg.g0)
        for f in (phi, psi):
            got = o.bphi(g0, sym_atoms(f), g0)
            want = o.functional(sym_atoms(f), g0, o.z) * g0
            if sp.expand(got - want) != 0 or bphi_apply(cfg, f, cfg.g0) != o.sym_poly(want):
                failures.append(f"B_phi g0 for {f!r}")
    report(4, "B_phi(g0) = phi(g0) g0", failures)


def test_criterion_05_unit_laws():
    failures = suite_failures("units")
    rng = random.Random(5)
    for lam in (0, Fraction(1, 2)):
        h = random_jet(rng, lam, 6)
        hs = sum(o.to_sym(c) * (o.z - o.to_sym(h.center)) ** k for k, c in enumerate(h.coeffs))
        got = o.duhamel(1 - sp.Symbol("u"), sp.nsimplify(lam), sp.Integer(1), hs)
        if o.jet_from_sym(got, sp.nsimplify(lam), 5) != h.truncate(5):
            failures.append(f"oracle 1 * h at lambda={lam}")
    report(5, "unit laws for B, otimes and the Duhamel product", failures)


def test_criterion_06_canonical_kernels():
    failures = suite_failures("canonical-kernels")
    for roots in ROOTS:
        cfg = G0Config(FactoredPoly(roots))
        g0 = o.g0_sym(roots)
        for q in cfg.P.divisors():
            if not q.degree:
                continue
            atoms = sym_atoms(delta_q(q))
            qs = o.poly_sym(expand(q))
            expected = [qs * o.z**j for j in range(N - q.degree + 1)]
            ker = [[o.from_sym(x) for x in v] for v in sym_operator_nullspace(lambda f: o.bphi(g0, atoms, f), N + 1)]
            lib = nullspace(bphi_matrix(cfg, delta_q(q), N))
            if not (sym_span_equal(ker, expected, N + 1) and sym_span_equal(lib, expected, N + 1)):
                failures.append(f"Ker B_delta(q), q={expand(q)}")
            kc = kernel_classify(cfg, delta_q(q), N)
            if kc.q != q:
                failures.append(f"classification of q={expand(q)}")
    report(6, "Ker B_delta(q) = q C[z], image in the canonical span", failures)


def test_criterion_07_duhamel_ring():
    failures = suite_failures("duhamel-ring")
    classical = DuhamelConfig.classical()
    for a in range(7):
        for b in range(7):
            got = duhamel_product(classical, Jet([0] * a + [1], 0, 12), Jet([0] * b + [1], 0, 12))
            oracle = o.duhamel(sp.Integer(1), 0, o.z**a, o.z**b)
            law = sp.Rational(factorial(a) * factorial(b), factorial(a + b)) * o.z ** (a + b)
            if sp.expand(oracle - law) != 0 or got != o.jet_from_sym(law, 0, 12):
                failures.append(f"z^{a} * z^{b}")
    rng = random.Random(7)
    u = sp.Symbol("u")
    for P_sym, lam in ((1 + 0 * u, 0), ((1 - u) ** 2, Fraction(1, 2)), ((1 - u) * (1 - u / 2), 0)):
        d = DuhamelConfig(o.sym_poly(sp.expand(P_sym), u), lam)
        f, h = random_jet(rng, lam, 6 + d.m), random_jet(rng, lam, 6 + d.m)
        ls = sp.nsimplify(lam)
        fs, hs = (sum(o.to_sym(c) * (o.z - ls) ** k for k, c in enumerate(j.coeffs)) for j in (f, h))
        want = o.jet_from_sym(o.duhamel(sp.expand(P_sym), ls, fs, hs), ls, 6)
        if duhamel_product(d, f, h).truncate(6) != want:
            failures.append(f"oracle product, P={P_sym}, lambda={lam}")
    report(7, "Duhamel ring laws, monomial law, both product forms", failures)


def _transform_jet(phi, order):
    expr = sum(c * o.z**k * sp.exp(mu * o.z) for mu, k, c in sym_atoms(phi))
    series = sp.series(expr, o.z, 0, order + 1).removeO() if expr != 0 else sp.Integer(0)
    return o.jet_from_sym(series, 0, order)


def test_criterion_08_duality_bridge():
    pairs = duality_pairs()
    assert len(pairs) >= 10
    failures = suite_failures("duality")
    cfg, phi, psi = pairs[0]
    left = jet_of_exppoly(fourier_laplace(otimes(cfg, phi, psi)), 8)
    witness = o.jet_from_sym(o.z**2 / 2 - o.z, 0, 8)
    if left != witness or _transform_jet(otimes(cfg, phi, psi), 8) != witness:
        failures.append("witness delta(0,1), P=1-u")
    d = DuhamelConfig.from_g0(cfg)
    right = duhamel_product(d, jet_of_exppoly(fourier_laplace(phi), 8 + d.m), jet_of_exppoly(fourier_laplace(psi), 8 + d.m))
    if right.truncate(8) != witness:
        failures.append("witness right-hand side")
    for cfg, phi, psi in pairs[1:4]:
        if _transform_jet(otimes(cfg, phi, psi), 8) != jet_of_exppoly(fourier_laplace(otimes(cfg, phi, psi)), 8):
            failures.append(f"oracle transform {phi!r} {psi!r}")
    report(8, "transform of the convolution = Duhamel product of transforms", failures)


def test_criterion_09_inversion():
    d = DuhamelConfig.classical()
    h = duhamel_invert(d, Jet([1, 1, 0, 0, 0, 0, 0]), Jet([0, 1, 0, 0, 0, 0, 0]), 6)
    want = Jet([0, 1, Fraction(-1, 2), Fraction(1, 6), Fraction(-1, 24), Fraction(1, 120), Fraction(-1, 720)])
    failures = [] if h == want else [f"got {h.coeffs}"]
    hs = sum(o.to_sym(c) * o.z**k for k, c in enumerate(h.coeffs))
    residual = o.jet_from_sym(o.duhamel(sp.Integer(1), 0, 1 + o.z, hs) - o.z, 0, 6)
    if any(residual.coeffs):
        failures.append("oracle residual nonzero")
    failures += suite_failures("inversion")
    report(9, "classical inverse of 1+z against z", failures)


def test_criterion_10_factorization():
    failures = suite_failures("factorization")
    for name in FACTORIZATION_FIXTURES:
        data = load_fixture(name)
        ctx = context_from_scenario(data)
        for task in data["tasks"]:
            phi = functional_arg(task["phi"])
            res = factorize(ctx.cfg, phi, ctx.order)
            lhs, rhs = bphi_matrix(ctx.cfg, phi, ctx.order), recompose(ctx.cfg, res, ctx.order)
            rows = max(len(lhs), len(rhs))
            if not res.verified or pad_rows(lhs, rows) != pad_rows(rhs, rows):
                failures.append(f"{name}: {res.branch}")
    report(10, "factorization fixtures verify by matrix recomposition", failures)


def test_criterion_11_audit_outcomes():
    failures = []
    cfg1 = G0Config(FactoredPoly([(1, 1)]))

    (a,) = audit_claims(cfg1, "isomorphism-theorem", [{"phi": delta(1)}])
    basis = [Poly([1, -1]).shift_up(j) for j in range(12)]
    if not (a.observed["phi_g0"] == 0 and a.observed["kernel_basis"] == basis and a.observed["kernel"] == "PrincipalIdeal(q=1 - z)"):
        failures.append("(a) kernel (1-z) C[z]_11")

    (b,) = audit_claims(cfg1, "isomorphism-theorem", [{"phi": delta(0, 1)}])
    if not (b.observed["phi_g0"] == -1 and b.observed["kernel_basis"] == [Poly([1])] and b.agree is False):
        failures.append("(b) constants in the kernel")

    d = DuhamelConfig(Poly([1, -1]), 0)
    c = wigley_check(d, Jet([0, 1] + [0] * 12), 12)
    ez = jet_of_exppoly(fourier_laplace(delta(1)), 8)
    zero = duhamel_product(d, Jet([0, 1] + [0] * 8), ez)
    if not (c.observed["criterion"] == -1 and not c.observed["invertible"] and c.agree is False):
        failures.append("(c) criterion")
    if zero != Jet([0] * 9, 0, 8):
        failures.append("(c) z * e^z")
    zs = o.duhamel(1 - sp.Symbol("u"), 0, o.z, sp.series(sp.exp(o.z), o.z, 0, 10).removeO())
    if any(o.taylor(zs, 0, 8)):
        failures.append("(c) oracle z * e^z")

    (dd,) = audit_claims(cfg1, "delta-orthogonality", [{"phi": delta(1), "psi": delta(1)}])
    if not (dd.observed["product"] == delta(1) and dd.agree is False):
        failures.append("(d) coincident zeros")
    moments = [o.from_sym(o.otimes_moment(o.g0_sym([(1, 1)]), [(1, 0, 1)], [(1, 0, 1)], i)) for i in range(6)]
    if moments != [1] * 6:
        failures.append("(d) oracle moments of delta(1) x delta(1)")
    cfg12 = G0Config(FactoredPoly([(1, 1), (2, 1)]))
    distinct = audit_claims(cfg12, "delta-orthogonality", [{"phi": delta(1), "psi": delta(2)}, {"phi": delta(2), "psi": delta(1)}])
    if not all(r.agree for r in distinct):
        failures.append("(d) distinct zeros")
    report(11, "audit reproduces the four recorded outcomes", failures)


def _expression(rng, depth=0):
    roll = rng.random()
    if depth > 2 or roll < 0.3:
        return rng.choice(["z", "i", str(rng.randint(0, 9)), f"{rng.randint(1, 9)}/{rng.randint(1, 9)}"])
    if roll < 0.5:
        return f"({_expression(rng, depth + 1)})^{rng.randint(0, 3)}"
    return f"{_expression(rng, depth + 1)} {rng.choice('+-*')} {_expression(rng, depth + 1)}"


def test_criterion_12_cli(tmp_path, capsys, monkeypatch):
    failures = []
    rng = random.Random(2024)
    for _ in range(100):
        src = _expression(rng)
        p = parse_function(src)
        if parse_function(format_poly(p)) != p or o.sym_poly(sp.sympify(src.replace("^", "**"), {"i": sp.I, "z": o.z})) != p:
            failures.append(f"round trip {src!r}")
    if main(["verify", "kernel-laws"]) != 0:
        failures.append("verify exit 0")
    if main(["eval", "gbs", "(1-z", "--g0", "1"]) != 2:
        failures.append("parse error exit 2")
    monkeypatch.setitem(suites.SUITES, "units", lambda: suites.SuiteResult("units", 1, ["forced"]))
    if main(["verify", "units"]) != 1:
        failures.append("failing suite exit 1")
    capsys.readouterr()
    path = resources.files("gbshift").joinpath("fixtures", "audit_counterexamples.json")
    blobs = []
    for k in range(2):
        out = tmp_path / f"{k}.json"
        main(["run", str(path), "--json", "--out", str(out)])
        blobs.append(out.read_bytes())
    if blobs[0] != blobs[1] or blobs[0] != dumps(run_scenario(str(path))).encode():
        failures.append("report bytes differ")
    if json.loads(blobs[0])["results"][0]["task"]["op"] != "audit":
        failures.append("report shape")
    report(12, "CLI round trip, exit codes, byte-stable reports", failures)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
