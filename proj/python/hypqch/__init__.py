"""Python bindings for the hypqch core.

Structured results come back as plain dicts decoded from the same JSON the
command-line tool prints. Domain errors raise ``hypqch.Error`` whose args are
``(kind, message, rule)``.
"""

import json

from . import _hypqch
from ._hypqch import (
    Error,
    annulus_modulus,
    collar_width,
    geodesic_length_from_trace,
    shortpants_step,
)

__all__ = [
    "Error",
    "annulus_modulus",
    "bound_report",
    "certify",
    "classify_cover",
    "collar_width",
    "error_kind",
    "geodesic_length_from_trace",
    "pants_graph",
    "qch_admissible",
    "run_cli",
    "shortpants_step",
    "solve_pentagon",
]


def error_kind(exc):
    """Kind name of a raised hypqch.Error, e.g. "DegeneratePentagon"."""
    return exc.args[0]


def solve_pentagon(b):
    """Returns {"b", "a", "c"} for the right-angled pentagon P_b."""
    b_, a, c = _hypqch.solve_pentagon(b)
    return {"b": b_, "a": a, "c": c}


def bound_report(K, L, R=None, m_inj=1.0, pants_bound=None):
    return json.loads(_hypqch.bound_report(K, L, R, m_inj, pants_bound))


def pants_graph(g, b):
    return json.loads(_hypqch.pants_graph(g, b))


def certify(b, n, refine=False):
    return json.loads(_hypqch.certify(b, n, refine))


def classify_cover(base_genus, deck, planar):
    """deck: {"order": int | "infinite", "end_count": 1 | 2 | "infinitely"}."""
    return json.loads(_hypqch.classify_cover(base_genus, json.dumps(deck), planar))


def qch_admissible(surface):
    """surface: {"genus": int | "infinite", "ends": ..., ...}. Returns (ok, reason)."""
    return _hypqch.qch_admissible(json.dumps(surface))


def run_cli(*args):
    """Runs the command-line tool in process. Returns (exit_code, stdout, stderr)."""
    return _hypqch.run_cli([str(a) for a in args])
