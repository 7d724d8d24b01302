"""Python access to the relalg native core.

Structured results (classifications, verification reports, batch results)
come back as plain dicts and lists.
"""
import json as _json
import os as _os

from ._relalg import (  # noqa: F401
    Algebra,
    ParseError,
    PartialLabeling,
    SolverLaunchError,
    UnknownAlgebra,
    catalog,
    catalog_names,
    cycle_table,
    fnv1a64,
    is_prime,
    parse_algebra,
    peircean_closure,
    scan,
    smallest_primitive_root,
)
from . import _relalg

__all__ = [
    "Algebra", "ParseError", "PartialLabeling", "SolverLaunchError", "UnknownAlgebra",
    "catalog", "catalog_names", "classify", "cycle_table", "encode", "fnv1a64",
    "is_prime", "parse_algebra", "peircean_closure", "point_bound", "scan",
    "smallest_primitive_root", "solve", "verify",
]


def _as_algebra(algebra):
    return algebra if isinstance(algebra, Algebra) else catalog(algebra)


def classify(p, m, g=None):
    return _json.loads(_relalg._classify_json(p, m, g))


def verify(algebra, representation):
    """`representation` is a dict, a JSON string, or a path to a JSON file."""
    if isinstance(representation, dict):
        text = _json.dumps(representation)
    elif _os.path.exists(str(representation)):
        with open(representation, encoding="utf-8") as f:
            text = f.read()
    else:
        text = representation
    return _json.loads(_relalg._verify_json(_as_algebra(algebra), text))


def solve(algebra, mode, n_from, n_to, solver_cmd=None, timeout=0.0, workers=1, results_path=""):
    cmd = solver_cmd or _os.environ.get("RA_SOLVER_CMD", "")
    return _json.loads(
        _relalg._solve_json(_as_algebra(algebra), mode, n_from, n_to, cmd, timeout, workers, results_path))


def point_bound(algebra):
    out = _relalg._point_bound_json(_as_algebra(algebra))
    return None if out is None else _json.loads(out)


def encode(algebra, mode, n, symmetry_break_atom=None, degree_bounds=False, nonempty_atoms=False):
    """DIMACS text for `algebra` (an Algebra or a catalog name)."""
    return _relalg.encode(_as_algebra(algebra), mode, n, symmetry_break_atom, degree_bounds, nonempty_atoms)
