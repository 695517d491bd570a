"""Exact height coefficients of tautological cycles and pm-graph invariants."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    CapacityError,
    GraphParseError,
    GraphValidationError,
    InputError,
    suite_names,
)

__all__ = [
    "CapacityError",
    "GraphParseError",
    "GraphValidationError",
    "InputError",
    "format_graph",
    "height_coefficients",
    "invariants",
    "suite_names",
    "verify",
    "wilms_constant",
]


def height_coefficients(m, g, threads=0):
    """(a, b, c) plus G and N for the multi-index m in genus g."""
    raw = _core.height_coefficients(list(m), g, threads)
    return {
        "a": Fraction(raw["a"]),
        "b": Fraction(raw["b"]),
        "c": Fraction(raw["c"]),
        "G": int(raw["G"]),
        "N": tuple(Fraction(x) for x in raw["N"]),
        "identity": raw["identity"],
    }


def invariants(graph):
    """Invariant report for a graph given as JSON text or a dict."""
    text = graph if isinstance(graph, str) else json.dumps(graph)
    report = json.loads(_core.invariants_json(text))
    out = {}
    for key, value in report.items():
        if key == "delta_i":
            out[key] = {int(i): Fraction(v) for i, v in value.items()}
        else:
            out[key] = None if value is None else Fraction(value)
    return out


def format_graph(graph):
    text = graph if isinstance(graph, str) else json.dumps(graph)
    return _core.format_graph(text)


def verify(suite="paper", g_range="2..5"):
    """Returns (ok, report dict)."""
    ok, text = _core.run_suite(suite, g_range)
    return ok, json.loads(text)


def wilms_constant(g):
    return Fraction(_core.wilms_constant(g))
