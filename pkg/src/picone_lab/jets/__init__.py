"""Exact second-order forward-mode differentiation of expression-tree fields."""

from picone_lab.jets.expr import (
    FieldExpr,
    constant,
    coordinate,
    cos,
    derivative,
    eval_jet,
    evaluate,
    exp,
    laplacian_expr,
    log,
    sin,
)
from picone_lab.jets.fd import fd_crosscheck
from picone_lab.jets.jet import Jet2, laplacian
from picone_lab.jets.parse import parse_field

__all__ = [
    "FieldExpr",
    "Jet2",
    "constant",
    "coordinate",
    "cos",
    "derivative",
    "eval_jet",
    "evaluate",
    "exp",
    "fd_crosscheck",
    "laplacian",
    "laplacian_expr",
    "log",
    "parse_field",
    "sin",
]
