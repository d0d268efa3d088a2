"""Compute all 27 lines on a smooth cubic surface from three skew lines.

Thin dict-level wrappers around the C++ extension module; every function
takes and returns plain Python dicts matching the JSON schemas documented in
the project README.
"""

import json as _json

from . import _core

__all__ = [
    "solve",
    "verify",
    "classify",
    "oracle",
    "generate",
    "sample",
    "demo",
    "export_viz",
]


def solve(document):
    """Solve a canonical surface or a {surface, lines} skew-triple document."""
    return _json.loads(_core.solve_json(_json.dumps(document)))


def verify(surface, table):
    return _json.loads(_core.verify_json(_json.dumps(surface), _json.dumps(table)))


def classify(surface):
    return _json.loads(_core.classify_json(_json.dumps(surface)))


def oracle(surface, budget=2000, seed=1):
    return _json.loads(_core.oracle_json(_json.dumps(surface), budget, seed))


def generate(seed, scale=1.0, real=False):
    return _json.loads(_core.generate_json(seed, scale, real))


def sample(name):
    """Built-in surfaces: real27, real15, real7, fermat."""
    return _json.loads(_core.sample_json(name))


def demo():
    return _json.loads(_core.demo_json())


def export_viz(surface, table=None, box=5.0, grid=24):
    table_text = _json.dumps(table) if table is not None else ""
    return _json.loads(_core.export_viz_json(_json.dumps(surface), table_text, box, grid))
