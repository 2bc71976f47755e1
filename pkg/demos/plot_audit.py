"""
Auditing stated results on explicit instances
=============================================

``audit_claims`` evaluates a claim on concrete inputs and records what was
observed next to what was predicted.  A disagreement is a result, not an
error.
"""

from gbshift import CLAIMS, FactoredPoly, G0Config, Jet, delta
from gbshift.audit import audit_claims
from gbshift.duhamel import DuhamelConfig, wigley_check

cfg = G0Config(FactoredPoly([(1, 1)]))
print(sorted(CLAIMS))

# %%
# With ``g0 = 1 - z`` the functional ``delta(0, 1)`` gives ``phi(g0) = -1``,
# yet its operator sends every constant to zero.
(report,) = audit_claims(cfg, "isomorphism-theorem", [{"phi": delta(0, 1)}])
print(report.agree, report.observed["phi_g0"], report.observed["kernel"])

# %%
# The convolution of ``delta(1)`` with itself is ``delta(1)`` again,
# not zero.
(report,) = audit_claims(cfg, "delta-orthogonality", [{"phi": delta(1), "psi": delta(1)}])
print(report.agree, report.observed["product"])

# %%
# With ``P = 1 - u`` the jet ``z`` has criterion value -1 but is still
# a zero divisor: it annihilates the jet of ``e^z``.
d = DuhamelConfig.from_g0(cfg)
report = wigley_check(d, Jet([0, 1] + [0] * 12), 12)
print(report.agree, report.observed["criterion"], report.observed["kernel_witness"])
