"""Exact computation of the set of non-properness of plane polynomial maps."""

from .poly import SparsePoly, QQ, DEFAULT_VARS, PolyError
from .parsing import parse_polynomial, ParseError
from .core import (
    FIELD_COMPLEX,
    FIELD_REAL,
    Component,
    JelonekSet,
    NotDominantError,
    Options,
    check_dominant,
    degree_bound,
    implicitize_param,
    jelonek_2_baseline,
    sparse_jelonek_2,
)

__all__ = [
    "SparsePoly", "QQ", "DEFAULT_VARS", "PolyError",
    "parse_polynomial", "ParseError",
    "FIELD_COMPLEX", "FIELD_REAL", "Component", "JelonekSet",
    "NotDominantError", "Options", "check_dominant", "degree_bound",
    "implicitize_param", "jelonek_2_baseline", "sparse_jelonek_2",
]
