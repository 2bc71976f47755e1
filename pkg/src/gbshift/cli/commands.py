"""Task executors shared by the subcommands and the scenario runner.

Each executor takes a :class:`Context` and a task record of plain strings and
numbers (as found in scenario JSON) and returns exact values; serialization
happens at the edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import audit as audit_mod
from ..commutant import aphi_apply, bphi_apply, factorize, invert_on_invariant, kernel_classify
from ..duhamel import DuhamelConfig, duhamel_invert, duhamel_product, pd_apply
from ..exact.gaussian import GaussianRational
from ..exact.jet import jet_of_exppoly, jet_of_poly
from ..exact.poly import FactoredPoly
from ..functionals import Functional, fourier_laplace, otimes
from ..operators import (
    G0Config,
    dz_at,
    dz_bivar,
    gbs_apply,
    gbs_power,
    m_apply,
    pommiez_apply,
    shift_apply,
    tilde_shift_apply,
)
from ..serialize import factored_from_json, functional_from_json
from .parsing import parse_function, parse_functional, parse_roots

DEFAULT_ORDER = 12


class TaskError(ValueError):
    """A task record is missing fields or names an unknown operation."""


@dataclass(frozen=True)
class Context:
    cfg: G0Config
    order: int = DEFAULT_ORDER

    @property
    def dcfg(self) -> DuhamelConfig:
        return DuhamelConfig.from_g0(self.cfg)


def _need(task: dict, key: str):
    if key not in task or task[key] is None:
        raise TaskError(f"task {task.get('op', '?')!r} needs field {key!r}")
    return task[key]


def functional_arg(value) -> Functional:
    if isinstance(value, Functional):
        return value
    if isinstance(value, list):
        return functional_from_json(value)
    return parse_functional(str(value))


def poly_arg(value):
    if isinstance(value, list):
        from ..exact.text import poly_from_json

        return poly_from_json(value)
    return parse_function(str(value))


def roots_arg(value) -> FactoredPoly:
    if isinstance(value, FactoredPoly):
        return value
    if isinstance(value, list):
        return factored_from_json(value)
    return parse_roots(str(value))


EVAL_OPERATORS = ("gbs", "gbs-power", "m", "pommiez", "dz", "shift", "tilde-shift", "bphi", "aphi", "pd")


def run_eval(ctx: Context, task: dict):
    op = task.get("operator", "gbs")
    f = poly_arg(_need(task, "f"))
    if op == "gbs":
        return gbs_apply(ctx.cfg, f)
    if op == "gbs-power":
        return gbs_power(ctx.cfg, f, int(_need(task, "n")))
    if op == "m":
        return m_apply(f)
    if op == "pommiez":
        return pommiez_apply(f)
    if op == "dz":
        if task.get("z0") is None:
            return dz_bivar(f)
        return dz_at(f, GaussianRational.parse(str(task["z0"])))
    if op == "shift":
        return shift_apply(ctx.cfg, f)
    if op == "tilde-shift":
        return tilde_shift_apply(ctx.cfg, f)
    if op == "bphi":
        return bphi_apply(ctx.cfg, functional_arg(_need(task, "phi")), f)
    if op == "aphi":
        return aphi_apply(ctx.cfg, functional_arg(_need(task, "phi")), f)
    if op == "pd":
        return pd_apply(ctx.cfg.g0, f)
    raise TaskError(f"unknown operator {op!r}; choose from {', '.join(EVAL_OPERATORS)}")


def run_product(ctx: Context, task: dict):
    kind = task.get("kind", "otimes")
    if kind == "otimes":
        return otimes(ctx.cfg, functional_arg(_need(task, "phi")), functional_arg(_need(task, "psi")))
    if kind == "duhamel":
        d = ctx.dcfg
        f = jet_of_poly(poly_arg(_need(task, "f")), d.lam, ctx.order + d.m)
        h = jet_of_poly(poly_arg(_need(task, "h")), d.lam, ctx.order)
        return duhamel_product(d, f, h)
    raise TaskError(f"unknown product kind {kind!r}; choose otimes or duhamel")


def run_invert(ctx: Context, task: dict):
    kind = task.get("kind", "commutant")
    g = poly_arg(_need(task, "g"))
    if kind == "commutant":
        m = task.get("m")
        return invert_on_invariant(ctx.cfg, functional_arg(_need(task, "phi")), g, None if m is None else int(m))
    if kind == "duhamel":
        d = ctx.dcfg
        f = jet_of_poly(poly_arg(_need(task, "f")), d.lam, ctx.order + d.m)
        return duhamel_invert(d, f, jet_of_poly(g, d.lam, ctx.order), ctx.order)
    raise TaskError(f"unknown inversion kind {kind!r}; choose commutant or duhamel")


def run_classify(ctx: Context, task: dict):
    return kernel_classify(ctx.cfg, functional_arg(_need(task, "phi")), ctx.order)


def run_factorize(ctx: Context, task: dict):
    return factorize(ctx.cfg, functional_arg(_need(task, "phi")), ctx.order)


def run_transform(ctx: Context, task: dict):
    e = fourier_laplace(functional_arg(_need(task, "phi")))
    return {"exppoly": e, "jet": jet_of_exppoly(e, ctx.order)}


def parse_instance(raw: dict) -> dict:
    """Turn the string fields of an audit instance into exact values."""
    inst = {}
    for key, value in raw.items():
        if key in ("phi", "psi"):
            inst[key] = functional_arg(value)
        elif key == "f":
            inst[key] = poly_arg(value)
        elif key == "q":
            inst[key] = roots_arg(value)
        elif key == "witness":
            inst[key] = poly_arg(value)
        elif key == "witness_transform_of":
            inst["witness"] = functional_arg(value)
        elif key in ("order", "witness_order"):
            inst[key] = int(value)
        else:
            raise TaskError(f"unknown audit instance field {key!r}")
    return inst


def run_audit(ctx: Context, task: dict):
    claim = _need(task, "claim")
    if claim not in audit_mod.CLAIMS:
        raise TaskError(f"unknown claim {claim!r}; known: {', '.join(sorted(audit_mod.CLAIMS))}")
    instances = [parse_instance(r) for r in task.get("instances", [])]
    if claim == "canonical-kernel" and not instances:
        instances = [{"q": q} for q in audit_mod.q_divisors(ctx.cfg)]
    return audit_mod.audit_claims(ctx.cfg, claim, instances, ctx.order)


RUNNERS = {
    "eval": run_eval,
    "product": run_product,
    "invert": run_invert,
    "classify": run_classify,
    "factorize": run_factorize,
    "transform": run_transform,
    "audit": run_audit,
}


def run_task(ctx: Context, task: dict):
    op = task.get("op")
    if op not in RUNNERS:
        raise TaskError(f"unknown op {op!r}; choose from {', '.join(RUNNERS)}")
    return RUNNERS[op](ctx, task)
