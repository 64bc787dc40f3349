"""Exact verification toolkit for invariant Minkowski forms on so(p,q) quotients."""

import json as _json

from ._core import (
    DEFAULT_SEED,
    __version__,
    catalog,
    check_lemma,
    iwasawa_dims,
    kernel,
    killing_signature,
    roots,
    signature,
    so_dimension,
    solve,
    verify_quotient,
)
from ._core import run_all_json as _run_all_json


def run_all(max_n, seed=DEFAULT_SEED):
    """Run every check suite up to max_n; returns the report as a dict."""
    return _json.loads(_run_all_json(max_n, seed))


__all__ = [
    "DEFAULT_SEED",
    "__version__",
    "catalog",
    "check_lemma",
    "iwasawa_dims",
    "kernel",
    "killing_signature",
    "roots",
    "run_all",
    "signature",
    "so_dimension",
    "solve",
    "verify_quotient",
]
