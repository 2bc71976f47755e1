"""Scenario files: one generator, a jet order, and a list of tasks.

::

    {"g0": {"factors": [{"root": "1", "mult": 1}]},
     "lambda": "0",
     "jet_order": 12,
     "tasks": [{"op": "classify", "phi": "delta(0,1)"}]}

Reports are plain JSON with canonical rational strings, so identical inputs
give identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import GBShiftError
from ..exact.gaussian import GaussianRational
from ..operators import G0Config
from ..serialize import factored_from_json, factored_to_json, to_jsonable
from .commands import DEFAULT_ORDER, Context, TaskError, run_task


def load_scenario(source) -> dict:
    if isinstance(source, dict):
        return source
    return json.loads(Path(source).read_text())


def context_from_scenario(data: dict) -> Context:
    try:
        factors = data["g0"]["factors"]
    except (KeyError, TypeError):
        raise TaskError("scenario needs g0.factors") from None
    cfg = G0Config(factored_from_json(factors), GaussianRational.parse(str(data.get("lambda", "0"))))
    return Context(cfg, int(data.get("jet_order", DEFAULT_ORDER)))


def run_scenario(source) -> dict:
    """Run every task in order; a failing task records its error and the rest still run."""
    data = load_scenario(source)
    ctx = context_from_scenario(data)
    results = []
    for task in data.get("tasks", []):
        entry = {"task": task}
        try:
            entry["result"] = to_jsonable(run_task(ctx, task))
        except (GBShiftError, TaskError) as exc:
            entry["error"] = {"type": type(exc).__name__, "message": str(exc)}
        results.append(entry)
    return {
        "g0": {"factors": factored_to_json(ctx.cfg.P)},
        "lambda": str(ctx.cfg.lambdaQ),
        "jet_order": ctx.order,
        "results": results,
    }


def dumps(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
