"""Cup-length bounds for TC, TC^S and TC^S_sigma, and symmetric motion planners."""

import json

from ._core import (
    DomainError,
    ParseError,
    antipodalize,
    default_suite,
    disjointify_index,
    sphere_plan,
    table_csv,
    torus_plan,
)
from . import _core

__all__ = [
    "DomainError",
    "ParseError",
    "algebra",
    "antipodalize",
    "bounds",
    "cup_lengths",
    "default_suite",
    "disjointify_index",
    "sphere_plan",
    "table_csv",
    "torus_plan",
    "verify",
]


def bounds(spec, certificates=False):
    return json.loads(_core.bounds_json(spec, certificates))


def algebra(spec):
    return json.loads(_core.algebra_json(spec))


def cup_lengths(algebra_doc):
    if not isinstance(algebra_doc, str):
        algebra_doc = json.dumps(algebra_doc)
    return _core.cup_lengths(algebra_doc)


def verify(planner, n=2, pairs=10000, seed=42):
    return json.loads(_core.verify_json(planner, n, pairs, seed))
