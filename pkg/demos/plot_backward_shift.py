"""
The generalized backward shift on polynomials
=============================================

A first look at ``gbs_apply`` and what its powers annihilate.
"""

from gbshift import FactoredPoly, G0Config, Poly, gbs_apply, gbs_power, m_apply
from gbshift.exact.linalg import nullspace
from gbshift.operators import gbs_matrix, shift_apply

# %%
# A configuration is fixed by the zeros of ``P``.  Here ``P = (1 - z)^2``,
# normalized so that ``g0 = expand(P)`` takes the value 1 at the origin.
cfg = G0Config(FactoredPoly([(1, 2)]))
print("g0 =", cfg.g0)

# %%
# ``D f = (f - g0 f(0)) / z``.  A constant goes to ``(1 - g0)/z`` and
# ``g0`` itself goes to zero.
for f in (Poly([1]), Poly([0, 1]), cfg.g0):
    print(f"D({f}) = {gbs_apply(cfg, f)}")

# %%
# Multiplication by ``z`` is a right inverse.
f = Poly([3, -1, 0, 2])
assert gbs_apply(cfg, m_apply(f)) == f

# %%
# The kernel of ``D^n`` on polynomials of degree at most 12 is spanned by
# ``g0, z g0, ..., z^(n-1) g0``.  The nullspace is computed exactly.
for n in range(1, 4):
    basis = nullspace(gbs_matrix(cfg, 13, n))
    print(f"dim Ker D^{n} =", len(basis))
assert gbs_power(cfg, cfg.g0 * Poly([0, 0, 1]), 3) == Poly()

# %%
# The two-point shift ``T_z f`` is a polynomial in ``(t, z)``, symmetric in
# the two variables.
T = shift_apply(cfg, Poly([0, 1]))
print(T)
assert T.swap() == T
