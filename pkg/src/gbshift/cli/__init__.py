"""Command line front end: expression parsing, scenarios, suites, reports."""

from .main import main
from .parsing import parse_function, parse_functional, parse_roots
from .scenario import run_scenario

__all__ = ["main", "parse_function", "parse_functional", "parse_roots", "run_scenario"]
