"""Dense bivariate polynomials in (t, z).

``coeffs[a][b]`` is the coefficient of ``t**a * z**b``.  The matrix is kept in
canonical form: every row has the same length and there are no trailing zero
rows or columns, so equal polynomials have equal matrices.
"""

from __future__ import annotations

from ..errors import NonzeroRemainder
from .gaussian import ONE, ZERO, GaussianRational, gq
from .poly import Poly, falling


def _canon(rows) -> tuple:
    rows = [list(r) for r in rows]
    width = 0
    for r in rows:
        for b in range(len(r) - 1, -1, -1):
            if r[b]:
                width = max(width, b + 1)
                break
    height = 0
    for a, r in enumerate(rows):
        if any(r):
            height = a + 1
    return tuple(
        tuple(rows[a][:width]) + (ZERO,) * (width - len(rows[a][:width])) for a in range(height)
    )


class BivarPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _canon([[gq(c) for c in row] for row in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    @classmethod
    def _raw(cls, rows) -> "BivarPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _canon(rows))
        return p

    @classmethod
    def in_t(cls, p: Poly) -> "BivarPoly":
        return cls._raw([[c] for c in p.coeffs])

    @classmethod
    def in_z(cls, p: Poly) -> "BivarPoly":
        return cls._raw([list(p.coeffs)])

    @classmethod
    def t_minus_z(cls) -> "BivarPoly":
        return cls._raw([[ZERO, -ONE], [ONE, ZERO]])

    @property
    def shape(self) -> tuple:
        if not self.coeffs:
            return (0, 0)
        return (len(self.coeffs), len(self.coeffs[0]))

    @property
    def deg_t(self) -> int:
        return self.shape[0] - 1

    @property
    def deg_z(self) -> int:
        return self.shape[1] - 1

    def __getitem__(self, ab) -> GaussianRational:
        a, b = ab
        h, w = self.shape
        if 0 <= a < h and 0 <= b < w:
            return self.coeffs[a][b]
        return ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, BivarPoly):
            return NotImplemented
        h = max(self.shape[0], other.shape[0])
        w = max(self.shape[1], other.shape[1])
        return BivarPoly._raw(
            [[self[a, b] + other[a, b] for b in range(w)] for a in range(h)]
        )

    def __neg__(self):
        return BivarPoly._raw([[-c for c in row] for row in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivarPoly):
            c = gq(other)
            return BivarPoly._raw([[x * c for x in row] for row in self.coeffs])
        (h1, w1), (h2, w2) = self.shape, other.shape
        if not h1 or not h2:
            return BivarPoly()
        out = [[ZERO] * (w1 + w2 - 1) for _ in range(h1 + h2 - 1)]
        for a1, r1 in enumerate(self.coeffs):
            for b1, x in enumerate(r1):
                if not x:
                    continue
                for a2, r2 in enumerate(other.coeffs):
                    row = out[a1 + a2]
                    for b2, y in enumerate(r2):
                        if y:
                            row[b1 + b2] = row[b1 + b2] + x * y
        return BivarPoly._raw(out)

    __rmul__ = __mul__

    def swap(self) -> "BivarPoly":
        """Exchange the roles of t and z."""
        h, w = self.shape
        return BivarPoly._raw([[self.coeffs[a][b] for a in range(h)] for b in range(w)])

    def row_poly(self, a: int) -> Poly:
        """Coefficient of t**a, as a polynomial in z."""
        if 0 <= a < self.shape[0]:
            return Poly._raw(_trim(self.coeffs[a]))
        return Poly()

    def at_t(self, x, k: int = 0) -> Poly:
        """k-th t-derivative at t = x, as a polynomial in z."""
        x = gq(x)
        h, w = self.shape
        out = []
        for b in range(w):
            acc = ZERO
            for a in range(h - 1, k - 1, -1):
                acc = acc * x + self.coeffs[a][b] * falling(a, k)
            out.append(acc)
        return Poly(out)

    def at_z(self, x, k: int = 0) -> Poly:
        """k-th z-derivative at z = x, as a polynomial in t."""
        return self.swap().at_t(x, k)

    def diagonal(self) -> Poly:
        """Substitute t = z."""
        h, w = self.shape
        out = [ZERO] * max(h + w - 1, 0)
        for a in range(h):
            for b in range(w):
                out[a + b] = out[a + b] + self.coeffs[a][b]
        return Poly(out)

    def __call__(self, t, z) -> GaussianRational:
        return self.at_t(t)(z)

    def exact_div(self, den: "BivarPoly") -> "BivarPoly":
        """Divide by a linear form ``alpha + beta*t + gamma*z`` exactly."""
        if not isinstance(den, BivarPoly):
            raise ValueError("bivariate exact_div expects a BivarPoly divisor")
        alpha, beta, gamma = den[0, 0], den[1, 0], den[0, 1]
        h, w = den.shape
        for a in range(h):
            for b in range(w):
                if a + b > 1 and den[a, b]:
                    raise ValueError("divisor is not linear")
        if not beta and not gamma:
            raise ValueError("divisor is constant")
        if not beta:
            return self.swap().exact_div(den.swap()).swap()
        # long division in t over C[z]; den = beta*t + (alpha + gamma*z)
        low = Poly([alpha, gamma])
        inv_beta = ONE / beta
        rows = [self.row_poly(a) for a in range(self.shape[0])]
        quot = [Poly()] * max(len(rows) - 1, 0)
        for a in range(len(rows) - 1, 0, -1):
            lead = rows[a] * inv_beta
            quot[a - 1] = lead
            rows[a - 1] = rows[a - 1] - lead * low
        if rows and rows[0]:
            raise NonzeroRemainder("bivariate division left a nonzero remainder")
        w = max((len(q) for q in quot), default=0)
        return BivarPoly._raw([q.padded(w) for q in quot])

    def __repr__(self):
        return f"BivarPoly({[[str(c) for c in row] for row in self.coeffs]})"


def _trim(row) -> tuple:
    n = len(row)
    while n and not row[n - 1]:
        n -= 1
    return tuple(row[:n])

