"""Quasihomogeneity of algebroid curves R = k[[x_1, ..., x_n]] inside k[[t]].

Generators are written in the command line syntax, e.g. ``"t^4+t^5, t^7, t^8, t^9"``.
"""

import json

from . import _core
from ._core import DEFAULT_MAX_PRECISION, Error, ParseError, contains, h_invariant, inverse_valuation, semigroup, verdict

__all__ = [
    "DEFAULT_MAX_PRECISION",
    "Error",
    "ParseError",
    "analyze",
    "contains",
    "h_invariant",
    "inverse_valuation",
    "is_quasihomogeneous",
    "run_cli",
    "semigroup",
    "verdict",
]

__version__ = "0.1.0"


def analyze(generators, *, precision=None, max_precision=DEFAULT_MAX_PRECISION, checks="all", reparametrize=True):
    """Full report as a dict, with the same layout as ``qhcurve analyze --json``."""
    return json.loads(
        _core.analyze_json(
            generators,
            precision=precision,
            max_precision=max_precision,
            checks=checks,
            reparametrize=reparametrize,
        )
    )


def is_quasihomogeneous(generators):
    return analyze(generators, checks="trace", reparametrize=False)["quasihomogeneous"]


def run_cli(args, stdin=""):
    """Returns ``(exit_code, stdout, stderr)``."""
    return _core.run_cli(list(args), stdin)
