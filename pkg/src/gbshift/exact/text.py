"""Canonical text and JSON forms for exact values."""

from __future__ import annotations

from .gaussian import GaussianRational, gq
from .poly import Poly


def gq_to_str(x: GaussianRational) -> str:
    return str(x)


def poly_to_json(p: Poly) -> list:
    """Lowest degree first, each coefficient as a canonical string."""
    return [str(c) for c in p.coeffs]


def poly_from_json(items) -> Poly:
    return Poly([GaussianRational.parse(s) if isinstance(s, str) else gq(s) for s in items])


def _coeff_text(c: GaussianRational) -> str:
    s = str(c)
    if c.im and c.re:
        return f"({s})"
    return s


def format_poly(p: Poly, var: str = "z") -> str:
    """Expression text that the function parser reads back to the same Poly."""
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        if k == 0:
            parts.append(_coeff_text(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{_coeff_text(c)}*{mono}")
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out
