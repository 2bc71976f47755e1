"""Human-readable text for JSON results: nested keys become indented lines."""

from __future__ import annotations


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


def _is_flat(items) -> bool:
    return all(not isinstance(v, (dict, list)) for v in items)


def _lines(value, indent: int) -> list:
    pad = "  " * indent
    if isinstance(value, dict):
        out = []
        for key, v in value.items():
            if isinstance(v, (dict, list)) and v and not (isinstance(v, list) and _is_flat(v)):
                out.append(f"{pad}{key}:")
                out.extend(_lines(v, indent + 1))
            else:
                out.append(f"{pad}{key}: {_flat(v)}")
        return out
    if isinstance(value, list):
        if _is_flat(value):
            return [pad + _flat(value)]
        out = []
        for k, v in enumerate(value):
            out.append(f"{pad}[{k}]")
            out.extend(_lines(v, indent + 1))
        return out
    return [pad + _scalar(value)]


def _flat(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{}"
    return _scalar(value)


def render(value) -> str:
    return "\n".join(_lines(value, 0)) + "\n"
