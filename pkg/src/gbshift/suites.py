"""Named invariant suites: exact checks that must all hold.

Each suite returns a :class:`SuiteResult`; the command line exits nonzero if
any selected suite has failures.  Known disagreements with the source claims
are not here; they live in the audit catalog.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from math import factorial

from gmpy2 import mpq

from .commutant import (
    bphi_apply,
    bphi_matrix,
    commutes_with_shift,
    factorize,
    image_in_canonical_span,
    invert_on_invariant,
    kernel_classify,
    recompose,
)
from .duhamel import (
    DuhamelConfig,
    bridge_sides,
    duhamel_invert,
    duhamel_matrix,
    duhamel_product,
    duhamel_product_ibp,
    pd_apply,
)
from .exact.bivar import BivarPoly
from .exact.gaussian import ZERO, I, gq
from .exact.jet import Jet
from .exact.linalg import nullspace, pad_rows, rank
from .exact.poly import FactoredPoly, Poly, expand
from .functionals import Functional, apply, delta, delta_q, otimes
from .operators import (
    G0Config,
    dz_bivar,
    gbs_apply,
    gbs_matrix,
    m_apply,
    pommiez_apply,
    shift_apply,
    shift_diagonal_closed_form,
)

ORDER = 12
SEED = 20240517

STANDARD_P = (
    FactoredPoly([(1, 1)]),
    FactoredPoly([(1, 2)]),
    FactoredPoly([(1, 1), (2, 1)]),
)
DUHAMEL_P = (FactoredPoly(),) + STANDARD_P
POOL_POINTS = (gq(0), gq(1), gq(2), gq(mpq(1, 2)), I)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, label: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(label)

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checks": self.checks, "failures": self.failures}


def standard_configs() -> list:
    return [G0Config(p) for p in STANDARD_P]


def random_functional(rng: random.Random, max_atoms: int = 2, max_order: int = 3) -> Functional:
    atoms = []
    for _ in range(rng.randint(1, max_atoms)):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        atoms.append((rng.choice(POOL_POINTS), rng.randint(0, max_order), c))
    return Functional(atoms) or delta(0)


def functional_pairs(count: int = 25, seed: int = SEED) -> list:
    """Deterministic (cfg, phi, psi) triples covering every pool point and order."""
    rng = random.Random(seed)
    cfgs = standard_configs()
    out = []
    for k in range(count):
        phi = random_functional(rng)
        psi = random_functional(rng)
        out.append((cfgs[k % len(cfgs)], phi, psi))
    return out


def random_jet(rng: random.Random, center, order: int) -> Jet:
    return Jet([mpq(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order + 1)], center, order)


def _span_equal(vectors: list, basis: list, width: int) -> bool:
    a = [list(v) + [ZERO] * (width - len(v)) for v in vectors]
    b = [p.padded(width) for p in basis]
    return len(a) == len(b) and rank(a) == len(a) == rank(a + b)


def suite_kernel_laws() -> SuiteResult:
    res = SuiteResult("kernel-laws")
    for cfg in standard_configs():
        for n in range(1, 5):
            ker = nullspace(gbs_matrix(cfg, ORDER + 1, n))
            expected = [cfg.g0.shift_up(j) for j in range(n)]
            res.check(_span_equal(ker, expected, ORDER + 1), f"Ker D^{n} for P={cfg.g0}")
        for i in range(ORDER + 1):
            f = Poly.monomial(i) + Poly([1, -2]) * i
            lhs = gbs_apply(cfg, f)
            rhs = pommiez_apply(f) + pommiez_apply(Poly([1]) - cfg.g0) * f[0]
            res.check(lhs == rhs, f"perturbation identity, P={cfg.g0}, i={i}")
            mf = m_apply(f)
            ident = BivarPoly.in_z(cfg.g0) * dz_bivar(mf) - BivarPoly.in_z(mf) * dz_bivar(cfg.g0)
            t = shift_apply(cfg, f)
            res.check(t == ident, f"two-point identity, P={cfg.g0}, i={i}")
            res.check(t.swap() == t, f"symmetry of the shift, P={cfg.g0}, i={i}")
            res.check(t.diagonal() == shift_diagonal_closed_form(cfg, f), f"diagonal, P={cfg.g0}, i={i}")
    return res


def suite_right_inverse() -> SuiteResult:
    res = SuiteResult("right-inverse")
    for cfg in standard_configs():
        for i in range(ORDER + 1):
            f = Poly.monomial(i)
            res.check(gbs_apply(cfg, m_apply(f)) == f, f"D M z^{i}, P={cfg.g0}")
    return res


def suite_algebra_morphism(pairs=None) -> SuiteResult:
    res = SuiteResult("algebra-morphism")
    pairs = pairs or functional_pairs()
    for cfg, phi, psi in pairs:
        prod = otimes(cfg, phi, psi)
        res.check(prod == otimes(cfg, psi, phi), f"commutativity {phi!r} {psi!r}")
        for i in range(9):
            zi = Poly.monomial(i)
            res.check(
                bphi_apply(cfg, prod, zi) == bphi_apply(cfg, phi, bphi_apply(cfg, psi, zi)),
                f"B of product on z^{i}, {phi!r} {psi!r}",
            )
        res.check(commutes_with_shift(cfg, phi, 8), f"B_phi D = D B_phi for {phi!r}")
    for k in range(0, len(pairs) - 2, 3):
        cfg, a, b = pairs[k]
        c = pairs[k + 1][1]
        left = otimes(cfg, otimes(cfg, a, b), c)
        right = otimes(cfg, a, otimes(cfg, b, c))
        res.check(left == right, f"associativity {a!r} {b!r} {c!r}")
    return res


def suite_eigen(pairs=None) -> SuiteResult:
    res = SuiteResult("eigen")
    for cfg, phi, psi in pairs or functional_pairs():
        for f in (phi, psi):
            res.check(bphi_apply(cfg, f, cfg.g0) == cfg.g0 * apply(f, cfg.g0), f"eigen {f!r}, P={cfg.g0}")
            for i in range(4):
                zi = Poly.monomial(i)
                w = gq(i) / 3
                res.check(
                    bphi_apply(cfg, delta(w), zi) == shift_apply(cfg, zi).at_t(w),
                    f"T at t={w} as commutant element",
                )
    return res


def suite_units() -> SuiteResult:
    res = SuiteResult("units")
    rng = random.Random(SEED + 1)
    unit = delta(0)
    for cfg in standard_configs():
        for i in range(ORDER + 1):
            res.check(bphi_apply(cfg, unit, Poly.monomial(i)) == Poly.monomial(i), f"B_delta0 z^{i}")
        for _ in range(5):
            phi = random_functional(rng)
            res.check(otimes(cfg, unit, phi) == phi == otimes(cfg, phi, unit), f"unit {phi!r}")
    for p in DUHAMEL_P:
        for lam in (0, mpq(1, 2)):
            d = DuhamelConfig(p, lam)
            for _ in range(3):
                h = random_jet(rng, d.lam, 10)
                one = Jet.one(10 + d.m, d.lam)
                res.check(duhamel_product(d, one, h) == h, f"1*h, P={d.P}, lambda={lam}")
                res.check(
                    duhamel_product(d, h.truncate(10), Jet.one(10, d.lam)) == h.truncate(10 - d.m),
                    f"h*1, P={d.P}, lambda={lam}",
                )
    return res


def suite_canonical_kernels() -> SuiteResult:
    res = SuiteResult("canonical-kernels")
    for cfg in standard_configs():
        for q in cfg.P.divisors():
            if q.degree == 0:
                continue
            dq = delta_q(q)
            ker = nullspace(bphi_matrix(cfg, dq, ORDER))
            qp = expand(q)
            expected = [qp.shift_up(j) for j in range(ORDER - q.degree + 1)]
            res.check(_span_equal(ker, expected, ORDER + 1), f"Ker B_delta(q), q={qp}")
            kc = kernel_classify(cfg, dq, ORDER)
            res.check(kc.d_invariant, f"kernel D-invariant, q={qp}")
            for i in range(ORDER + 1):
                res.check(image_in_canonical_span(cfg, q, Poly.monomial(i)), f"image of z^{i}, q={qp}")
    return res


def suite_duhamel_ring(triples: int = 20) -> SuiteResult:
    res = SuiteResult("duhamel-ring")
    rng = random.Random(SEED + 2)
    n = 10
    configs = [DuhamelConfig(p, lam) for p in DUHAMEL_P for lam in (0, mpq(1, 2))]
    for k in range(triples):
        d = configs[k % len(configs)]
        m = d.m
        a, b, c = (random_jet(rng, d.lam, n + 2 * m) for _ in range(3))
        ab = duhamel_product(d, a, b)
        res.check(ab == duhamel_product(d, b, a), f"commutativity #{k}")
        res.check(ab == duhamel_product_ibp(d, a, b), f"two forms agree #{k}")
        left = duhamel_product(d, ab, c.truncate(n))
        right = duhamel_product(d, a, duhamel_product(d, b, c))
        top = min(left.order, right.order)
        res.check(left.truncate(top) == right.truncate(top) and top >= n - m, f"associativity #{k}")
    classical = DuhamelConfig.classical()
    for a in range(7):
        for b in range(7):
            za = Jet([0] * a + [1], 0, 12)
            zb = Jet([0] * b + [1], 0, 12)
            want = [ZERO] * 13
            want[a + b] = gq(mpq(factorial(a) * factorial(b), factorial(a + b)))
            res.check(duhamel_product(classical, za, zb) == Jet(want, 0, 12), f"z^{a} * z^{b}")
    for d in configs:
        f = random_jet(rng, d.lam, 8 + d.m)
        mat = duhamel_matrix(d, f, 8)
        u0 = pd_apply(d.P, f).coeffs[0]
        res.check(all(mat[j][j] == u0 for j in range(d.m, 9)), f"diagonal entries, P={d.P}")
    return res


def duality_pairs(count: int = 12, seed: int = SEED + 3) -> list:
    rng = random.Random(seed)
    cfgs = [G0Config(p) for p in DUHAMEL_P]
    out = [(G0Config(FactoredPoly([(1, 1)])), delta(0, 1), delta(0, 1))]
    for k in range(count - 1):
        out.append((cfgs[k % len(cfgs)], random_functional(rng), random_functional(rng)))
    return out


def suite_duality() -> SuiteResult:
    res = SuiteResult("duality")
    for cfg, phi, psi in duality_pairs():
        left, right = bridge_sides(cfg, phi, psi, 8)
        res.check(left == right, f"transform bridge {phi!r} {psi!r}, P={cfg.g0}")
    return res


def suite_inversion() -> SuiteResult:
    res = SuiteResult("inversion")
    d = DuhamelConfig.classical()
    h = duhamel_invert(d, Jet([1, 1, 0, 0, 0, 0, 0]), Jet([0, 1, 0, 0, 0, 0, 0]), 6)
    want = Jet([0, 1, mpq(-1, 2), mpq(1, 6), mpq(-1, 24), mpq(1, 120), mpq(-1, 720)])
    res.check(h == want, "classical 1+z inverse of z")
    rng = random.Random(SEED + 4)
    for p in DUHAMEL_P:
        d = DuhamelConfig(p, mpq(1, 2))
        f = Jet([1] + [rng.randint(-3, 3) for _ in range(8 + d.m)], d.lam)
        if pd_apply(d.P, f).coeffs[0] and rank(duhamel_matrix(d, f, 8)) == 9:
            g = random_jet(rng, d.lam, 8)
            sol = duhamel_invert(d, f, g, 8)
            res.check(duhamel_product(d, f.truncate(8 + d.m), sol) == g, f"back-substitution, P={d.P}")
    for cfg in standard_configs():
        phi = delta(0) + delta(1)
        g = cfg.g0 * Poly([1, 2, -1])
        f = invert_on_invariant(cfg, phi, g)
        res.check(bphi_apply(cfg, phi, f) == g, f"invariant-subspace inverse, P={cfg.g0}")
    return res


def load_fixture(name: str) -> dict:
    return json.loads(resources.files("gbshift").joinpath("fixtures", name).read_text())


FACTORIZATION_FIXTURES = ("factorization_canonical.json", "factorization_shift_power.json")


def suite_factorization() -> SuiteResult:
    from .cli.commands import functional_arg
    from .cli.scenario import context_from_scenario

    res = SuiteResult("factorization")
    for name in FACTORIZATION_FIXTURES:
        data = load_fixture(name)
        ctx = context_from_scenario(data)
        for task in data["tasks"]:
            phi = functional_arg(task["phi"])
            result = factorize(ctx.cfg, phi, ctx.order)
            res.check(result.verified, f"{name}: verified")
            if result.branch != "Isomorphism":
                lhs = bphi_matrix(ctx.cfg, phi, ctx.order)
                rhs = recompose(ctx.cfg, result, ctx.order)
                rows = max(len(lhs), len(rhs))
                res.check(pad_rows(lhs, rows) == pad_rows(rhs, rows), f"{name}: recomposition")
            expected = task.get("expect_branch")
            if expected:
                res.check(result.branch == expected, f"{name}: branch {result.branch}")
    return res


SUITES = {
    "kernel-laws": suite_kernel_laws,
    "right-inverse": suite_right_inverse,
    "algebra-morphism": suite_algebra_morphism,
    "eigen": suite_eigen,
    "units": suite_units,
    "canonical-kernels": suite_canonical_kernels,
    "duhamel-ring": suite_duhamel_ring,
    "duality": suite_duality,
    "inversion": suite_inversion,
    "factorization": suite_factorization,
}


def run_suite(name: str) -> list:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return [SUITES[name]()]
