"""Quaternionic function classification, generators and per-slice Laurent series."""

import json

from ._core import (
    DomainError,
    Function,
    KindError,
    PreconditionError,
    Quaternion,
    SpecError,
    SphericalPoint,
    catalog_names,
    fueter_left,
    fueter_right,
    iota,
    parse_function,
    to_spherical,
    verify_props,
)
from . import _core


def classify(spec, grid=None, h=1e-5, scheme="central", tol_abs=1e-6, tol_rel=1e-6):
    f = parse_function(spec) if isinstance(spec, str) else spec
    return json.loads(_core.classify_json(f, grid, h, scheme, tol_abs, tol_rel))


def laurent(spec, center=(0.0, 1.0), radii=(0.2, 0.6), n_range=(-8, 8), quadrature_points=64):
    f = parse_function(spec) if isinstance(spec, str) else spec
    doc = json.loads(_core.laurent_json(f, tuple(center), tuple(radii), tuple(n_range), quadrature_points))
    doc["coefficients"] = {int(n): grid for n, grid in doc["coefficients"].items()}
    return doc


__all__ = [
    "DomainError",
    "Function",
    "KindError",
    "PreconditionError",
    "Quaternion",
    "SpecError",
    "SphericalPoint",
    "catalog_names",
    "classify",
    "fueter_left",
    "fueter_right",
    "iota",
    "laurent",
    "parse_function",
    "to_spherical",
    "verify_props",
]
