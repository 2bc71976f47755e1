"""Exact calculus for the generalized backward shift D(f) = (f - g0 f(0)) / z.

Everything is computed over the Gaussian rationals: the operator and its
two-point shifts on polynomials, the commutant operators B_phi built from
finite-support functionals, their convolution, kernel classification and
factorization, and the Duhamel product on jets.
"""

from .audit import CLAIMS, audit_claims
from .commutant import (
    AuditReport,
    FactorizationResult,
    KernelClassification,
    aphi_apply,
    bphi_apply,
    bphi_matrix,
    eigen_check,
    factorize,
    invert_on_invariant,
    iso_check,
    kernel_classify,
)
from .duhamel import (
    DuhamelConfig,
    duality_bridge,
    duhamel_invert,
    duhamel_matrix,
    duhamel_product,
    duhamel_product_ibp,
    pd_apply,
    pj_polys,
    wigley_check,
)
from .exact import (
    BivarPoly,
    ExpPoly,
    FactoredPoly,
    GaussianRational,
    Jet,
    Poly,
    exact_div,
    expand,
    gq,
    jet_mul,
    jet_of_exppoly,
    jet_of_poly,
    nullspace,
    solve,
)
from .functionals import Functional, apply, delta, delta_q, fourier_laplace, otimes
from .operators import (
    G0Config,
    dz_at,
    dz_bivar,
    gbs_apply,
    gbs_matrix,
    gbs_power,
    m_apply,
    shift_apply,
    tilde_shift_apply,
)

__version__ = "0.1.0"
