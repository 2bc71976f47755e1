from gbshift import FactoredPoly, G0Config, Poly, delta
from gbshift.audit import CLAIMS, audit_claims, q_divisors
from gbshift.serialize import to_jsonable

CFG1 = G0Config(FactoredPoly([(1, 1)]))
CFG12 = G0Config(FactoredPoly([(1, 1), (2, 1)]))


def single(cfg, claim, **inst):
    (report,) = audit_claims(cfg, claim, [inst])
    return report


def test_kernel_lemma_counterexample():
    r = single(CFG1, "kernel-lemma", phi=delta(0, 1))
    assert not r.agree
    assert r.observed["B_phi_g0"] == -CFG1.g0 and not r.observed["injective"]
    assert single(CFG1, "kernel-lemma", phi=delta(1)).agree


def test_injectivity_and_isomorphism_counterexample():
    assert not single(CFG1, "injectivity-lemma", phi=delta(0, 1)).agree
    assert not single(CFG1, "isomorphism-theorem", phi=delta(0, 1)).agree
    assert single(CFG1, "isomorphism-theorem", phi=delta(0) + delta(1)).agree


def test_delta_orthogonality():
    r = single(CFG1, "delta-orthogonality", phi=delta(1), psi=delta(1))
    assert not r.agree and r.observed["product"] == delta(1)
    r = single(CFG12, "delta-orthogonality", phi=delta(1), psi=delta(2))
    assert r.agree and r.observed["operator_product_is_zero"]


def test_algebra_morphism_and_canonical_kernel():
    assert single(CFG12, "algebra-morphism", phi=delta(1, 2), psi=delta(0, 1) + delta(2)).agree
    reports = audit_claims(CFG12, "canonical-kernel", [{"q": q} for q in q_divisors(CFG12)])
    assert len(reports) == 3 and all(r.agree for r in reports)


def test_surjectivity_desk_rendering():
    r = single(CFG1, "surjectivity-corollary", phi=delta(0, 1))
    assert not r.agree and 0 in r.observed["monomials_outside_image"]
    r = single(CFG1, "surjectivity-corollary", phi=delta(0, 0, 3))
    assert r.agree and r.observed["right_inverse_verified"]


def test_duhamel_criterion_with_witness():
    r = single(CFG1, "duhamel-criterion", f=Poly([0, 1]), witness=delta(1), witness_order=8)
    assert not r.agree
    assert r.observed["criterion"] == -1 and not r.observed["invertible"]
    assert r.observed["given_witness_annihilated"]
    assert r.observed["f_times_given_witness"].order == 8


def test_errors_become_reports():
    r = single(CFG1, "canonical-kernel", q=FactoredPoly())
    assert not r.agree and r.observed["error"] == "ConstantPolynomial"


def test_reports_serialize_to_schema():
    data = to_jsonable(single(CFG1, "isomorphism-theorem", phi=delta(0, 1)))
    assert set(data) >= {"claim_id", "cfg", "phi", "observed", "paper_prediction", "agree"}
    assert data["cfg"] == {"P": [{"root": "1", "mult": 1}], "lambdaQ": "0"}
    assert data["phi"] == [{"point": "0", "order": 1, "coeff": "1"}]


def test_catalog_is_complete():
    assert set(CLAIMS) == {
        "kernel-lemma",
        "injectivity-lemma",
        "isomorphism-theorem",
        "eigen-relation",
        "delta-orthogonality",
        "algebra-morphism",
        "canonical-kernel",
        "surjectivity-corollary",
        "duhamel-criterion",
        "duality-bridge",
        "factorization-theorem",
    }
