"""
Commutant operators and their kernels
=====================================

Functionals with finite support act on polynomials through ``B_phi``.
This demo classifies kernels and factors one operator.
"""

from gbshift import FactoredPoly, G0Config, Poly, bphi_apply, delta, factorize, kernel_classify, otimes
from gbshift.functionals import delta_q

cfg = G0Config(FactoredPoly([(1, 1), (2, 1)]))

# %%
# ``delta(mu, k)`` is the k-th derivative at ``mu``.  The unit is
# ``delta(0)``, and the convolution of two functionals corresponds to
# composing their operators.
phi, psi = delta(1, 1), delta(0, 2) + delta(2)
prod = otimes(cfg, phi, psi)
z3 = Poly.monomial(3)
assert bphi_apply(cfg, prod, z3) == bphi_apply(cfg, phi, bphi_apply(cfg, psi, z3))
print("phi x psi =", prod)

# %%
# For each divisor ``q`` of ``P`` there is a canonical functional whose
# operator has kernel ``q C[z]``.
for q in cfg.P.divisors():
    if q.degree:
        print(kernel_classify(cfg, delta_q(q), 12).describe())

# %%
# ``factorize`` returns a branch label together with its witnesses, and
# verifies the decomposition by multiplying matrices back together.
result = factorize(cfg, delta(1) + delta(2, 0, -1))
print(result.branch, "verified:", result.verified, "q:", result.q, "n:", result.n)
