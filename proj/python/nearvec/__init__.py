"""Finite near-vector spaces over GF(p^r) with twisted scalar action.

Configs are dicts of the form {"p", "r", "modulus_poly", "exponents"} or raw
tables {"raw": {...}}. Results are the same JSON documents the CLI prints.
"""

import json

from . import _core

Error = _core.Error
SUITES = tuple(_core.suites)


def _dump(x):
    return x if isinstance(x, str) else json.dumps(x)


def error_kind(exc):
    """Kind name carried by a nearvec.Error, e.g. "NotCoprime"."""
    return str(exc).split(":", 1)[0]


def info(config, max_size=0):
    return json.loads(_core.info(_dump(config), max_size))


def quasi_kernel(config, max_size=0):
    return json.loads(_core.quasi_kernel(_dump(config), max_size))


def decompose(config, max_size=0):
    return json.loads(_core.decompose(_dump(config), max_size))


def span(config, vectors, max_size=0):
    return json.loads(_core.span(_dump(config), _dump(list(vectors)), max_size))


def dim(config, vector, max_size=0):
    return json.loads(_core.dim(_dump(config), _dump(vector), max_size))


def verify(config, suite="all", seed=20240917, max_size=0):
    return json.loads(_core.verify(_dump(config), suite, seed, max_size))


def hom(source, target, spec):
    return json.loads(_core.hom(_dump(source), _dump(target), _dump(spec)))


__all__ = ["Error", "SUITES", "error_kind", "info", "quasi_kernel", "decompose", "span", "dim",
           "verify", "hom"]
