"""
Duhamel products of jets
========================

On the transform side, functionals become exponential polynomials and the
convolution becomes a Duhamel product.  Everything here runs on truncated
Taylor expansions ("jets").
"""

from fractions import Fraction

from gbshift import DuhamelConfig, FactoredPoly, G0Config, Jet, delta, duhamel_invert, duhamel_product
from gbshift.duhamel import bridge_sides

# %%
# With ``P = 1`` and center 0 the product is the classical one, and
# ``z^a * z^b = a! b! / (a + b)! z^(a+b)``.
classical = DuhamelConfig.classical()
z2 = Jet([0, 0, 1, 0, 0, 0])
z3 = Jet([0, 0, 0, 1, 0, 0])
print(duhamel_product(classical, z2, z3))

# %%
# Inverting ``h -> (1 + z) * h`` against ``g = z`` gives the alternating series
# of ``1 - e^(-z)``.
h = duhamel_invert(classical, Jet([1, 1, 0, 0, 0, 0, 0]), Jet([0, 1, 0, 0, 0, 0, 0]), 6)
print(h)

# %%
# A general ``P`` and a nonzero center.
d = DuhamelConfig(FactoredPoly([(1, 1), (2, 1)]), Fraction(1, 2))
f = Jet([1, 2, 0, -1, 0, 0, 0, 0], d.lam)
g = Jet([0, 1, 1, 0, 0, 0, 0, 0], d.lam)
assert duhamel_product(d, f, g) == duhamel_product(d, g, f)

# %%
# The bridge: transforming a convolution equals multiplying the transforms.
cfg = G0Config(FactoredPoly([(1, 1)]))
left, right = bridge_sides(cfg, delta(0, 1), delta(0, 1), 8)
print(left)
assert left == right
