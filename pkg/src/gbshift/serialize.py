"""JSON and text forms shared by the audit reports and the command line."""

from __future__ import annotations

from .exact.bivar import BivarPoly
from .exact.gaussian import GaussianRational, gq
from .exact.jet import ExpPoly, Jet
from .exact.poly import FactoredPoly, Poly
from .exact.text import format_poly, poly_to_json
from .functionals import Functional


def factored_to_json(fp: FactoredPoly) -> list:
    return [{"root": str(r), "mult": m} for r, m in fp.factors]


def factored_from_json(items) -> FactoredPoly:
    return FactoredPoly((GaussianRational.parse(str(d["root"])), int(d["mult"])) for d in items)


def functional_to_json(phi: Functional) -> list:
    return [{"point": str(mu), "order": k, "coeff": str(c)} for mu, k, c in phi.atoms]


def functional_from_json(items) -> Functional:
    return Functional(
        (GaussianRational.parse(str(d["point"])), int(d["order"]), GaussianRational.parse(str(d.get("coeff", "1"))))
        for d in items
    )


def _point_text(x: GaussianRational) -> str:
    return str(x)


def format_functional(phi: Functional) -> str:
    """Text such as ``delta(1,0) + 2*delta(0,3)`` accepted by the functional parser."""
    if not phi:
        return "0"
    parts = []
    for mu, k, c in phi.atoms:
        term = f"delta({_point_text(mu)},{k})"
        if c == 1:
            parts.append(("+", term))
        elif c == -1:
            parts.append(("-", term))
        elif c.is_real and c.re < 0:
            parts.append(("-", f"{-c.re}*{term}"))
        elif c.is_real:
            parts.append(("+", f"{c}*{term}"))
        else:
            parts.append(("+", f"({c})*{term}"))
    sign, first = parts[0]
    out = first if sign == "+" else "-" + first
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def bivar_to_json(b: BivarPoly) -> list:
    """Rows indexed by the power of t, columns by the power of z."""
    return [[str(c) for c in row] for row in b.coeffs]


def jet_to_json(j: Jet) -> dict:
    return {"center": str(j.center), "order": j.order, "coeffs": [str(c) for c in j.coeffs]}


def exppoly_to_json(e: ExpPoly) -> list:
    return [{"frequency": str(mu), "poly": poly_to_json(p)} for mu, p in e.terms]


def to_jsonable(value):
    """Recursively turn exact values into JSON-compatible data (strings for numbers)."""
    if isinstance(value, GaussianRational):
        return str(value)
    if isinstance(value, Poly):
        return poly_to_json(value)
    if isinstance(value, FactoredPoly):
        return factored_to_json(value)
    if isinstance(value, Functional):
        return functional_to_json(value)
    if isinstance(value, BivarPoly):
        return bivar_to_json(value)
    if isinstance(value, Jet):
        return jet_to_json(value)
    if isinstance(value, ExpPoly):
        return exppoly_to_json(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(gq(value))


__all__ = [
    "bivar_to_json",
    "exppoly_to_json",
    "factored_from_json",
    "factored_to_json",
    "format_functional",
    "format_poly",
    "functional_from_json",
    "functional_to_json",
    "jet_to_json",
    "to_jsonable",
]
