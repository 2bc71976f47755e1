"""Command line entry point.

Exit codes: 0 success, 1 an invariant suite failed, 2 usage or parse error.
Audit disagreements are results, not failures.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import GBShiftError
from ..exact.gaussian import GaussianRational
from ..exact.poly import Poly
from ..functionals import Functional
from ..operators import G0Config
from ..serialize import format_functional, to_jsonable
from ..suites import SUITES, run_suite
from .commands import DEFAULT_ORDER, EVAL_OPERATORS, Context, TaskError, run_task
from .parsing import parse_roots
from .render import render
from .scenario import context_from_scenario, dumps, load_scenario, run_scenario

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--g0", default="1", help='roots of P with optional multiplicity, e.g. "1, 2:2"; "none" for P = 1')
    p.add_argument("--lambda", dest="lam", default="0", help="center of the Duhamel jets (Gaussian rational)")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="section / jet order N (default 12)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--out", help="write output to this file")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="gbshift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="apply one operator to a polynomial")
    ev.add_argument("operator", choices=EVAL_OPERATORS)
    ev.add_argument("f", help="polynomial in z, e.g. '(1-z)^2'")
    ev.add_argument("--phi")
    ev.add_argument("--n", type=int, help="power for gbs-power")
    ev.add_argument("--z0", help="evaluation point for dz")

    pr = sub.add_parser("product", parents=[common], help="convolution of functionals or Duhamel product")
    kind = pr.add_mutually_exclusive_group(required=True)
    kind.add_argument("--otimes", action="store_true")
    kind.add_argument("--duhamel", action="store_true")
    pr.add_argument("--phi")
    pr.add_argument("--psi")
    pr.add_argument("--f")
    pr.add_argument("--h")

    inv = sub.add_parser("invert", parents=[common], help="solve B_phi f = g or f * h = g")
    inv.add_argument("--duhamel", action="store_true", help="invert h -> f * h on jets")
    inv.add_argument("--phi")
    inv.add_argument("--f")
    inv.add_argument("--g", required=True)
    inv.add_argument("--m", type=int, help="invariant subspace P*C[z]_m (commutant inversion)")

    for name, text in (
        ("classify", "kernel of B_phi matched against the invariant-subspace lattice"),
        ("factorize", "constructive factorization of B_phi"),
        ("transform", "Fourier-Laplace transform of phi"),
    ):
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("--phi", required=True)

    ve = sub.add_parser("verify", parents=[common], help="run invariant suites")
    ve.add_argument("suite", nargs="?", default="all", choices=["all", *SUITES])

    au = sub.add_parser("audit", parents=[common], help="evaluate a stated result on instances")
    au.add_argument("claims", nargs="*", help="claim ids (all audit tasks of the scenario if omitted)")
    au.add_argument("--scenario", help="scenario file whose audit tasks are run")
    au.add_argument("--phi")
    au.add_argument("--psi")
    au.add_argument("--f")
    au.add_argument("--q")

    ru = sub.add_parser("run", parents=[common], help="run a scenario file")
    ru.add_argument("scenario")
    return parser


def _context(args) -> Context:
    cfg = G0Config(parse_roots(args.g0), GaussianRational.parse(args.lam))
    return Context(cfg, args.order)


def _task_from_args(args) -> dict:
    cmd = args.command
    if cmd == "eval":
        return {"op": "eval", "operator": args.operator, "f": args.f, "phi": args.phi, "n": args.n, "z0": args.z0}
    if cmd == "product":
        kind = "otimes" if args.otimes else "duhamel"
        return {"op": "product", "kind": kind, "phi": args.phi, "psi": args.psi, "f": args.f, "h": args.h}
    if cmd == "invert":
        kind = "duhamel" if args.duhamel else "commutant"
        return {"op": "invert", "kind": kind, "phi": args.phi, "f": args.f, "g": args.g, "m": args.m}
    return {"op": cmd, "phi": args.phi}


def _audit_tasks(args) -> tuple[dict | None, list]:
    if args.scenario:
        data = load_scenario(args.scenario)
        tasks = [t for t in data.get("tasks", []) if t.get("op") == "audit"]
        if args.claims:
            tasks = [t for t in tasks if t.get("claim") in args.claims]
        return data, tasks
    inst = {k: getattr(args, k) for k in ("phi", "psi", "f", "q") if getattr(args, k) is not None}
    if not args.claims:
        raise TaskError("name at least one claim id or pass --scenario")
    return None, [{"op": "audit", "claim": c, "instances": [inst] if inst else []} for c in args.claims]


def _emit(args, payload, text: str) -> None:
    out = dumps(payload) if args.json else text
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _run(args) -> int:
    if args.command == "verify":
        results = run_suite(args.suite)
        payload = [r.to_json() for r in results]
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checks} checks)"
            + "".join(f"\n  - {f}" for f in r.failures)
            for r in results
        ]
        _emit(args, payload, "\n".join(lines) + "\n")
        return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED

    if args.command == "run":
        report = run_scenario(args.scenario)
        _emit(args, report, render(report))
        return EXIT_OK

    if args.command == "audit":
        data, tasks = _audit_tasks(args)
        if data is not None:
            ctx = context_from_scenario(data)
        else:
            ctx = _context(args)
        reports = []
        for task in tasks:
            reports.extend(to_jsonable(run_task(ctx, task)))
        _emit(args, reports, render(reports))
        return EXIT_OK

    ctx = _context(args)
    value = run_task(ctx, _task_from_args(args))
    result = to_jsonable(value)
    _emit(args, result, _human(value) or render(result))
    return EXIT_OK


def _human(value) -> str | None:
    """Expression text for bare polynomials and functionals."""
    if isinstance(value, Poly):
        return f"{value}\n"
    if isinstance(value, Functional):
        return format_functional(value) + "\n"
    return None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (SyntaxError, TaskError, GBShiftError, ValueError, KeyError, OSError) as exc:
        print(f"gbshift: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
