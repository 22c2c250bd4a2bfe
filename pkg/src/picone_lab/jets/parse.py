"""Prefix s-expression reader for FieldExprs.

Grammar::

    expr    := NUMBER | SYMBOL | "(" OP expr+ ")"
    SYMBOL  := x0 | x1 | y | pi | e          (y is an alias of x0)
    OP      := + | - | * | / | neg | ^ | pow | sqrt | sin | cos | exp | log

``+`` and ``*`` take one or more arguments, ``-`` negates a single argument
and folds left over several, ``/`` is binary. ``(^ base k)`` and
``(pow base r)`` need a numeric exponent: an integral one gives an integer
power (any base), a fractional one a real power (positive base only).
``(sqrt a)`` is ``(pow a 0.5)``.

Example: ``(* (sin (* pi x0)) (sin (* pi x1)))``.
"""

from __future__ import annotations

import math
from functools import reduce

from picone_lab.errors import ConfigError
from picone_lab.jets.expr import (
    Add,
    Const,
    Coord,
    Cos,
    Div,
    Exp,
    FieldExpr,
    IntPow,
    Log,
    Mul,
    Neg,
    Node,
    RealPow,
    Sin,
    Sub,
)

_SYMBOLS: dict[str, Node] = {
    "x0": Coord(0),
    "x1": Coord(1),
    "y": Coord(0),
    "pi": Const(math.pi),
    "e": Const(math.e),
}

_UNARY: dict[str, type[Node]] = {"sin": Sin, "cos": Cos, "exp": Exp, "log": Log, "neg": Neg}

Token = str
Tree = str | float | list  # nested lists of tokens


def _tokenize(text: str) -> list[Token]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _atom(token: Token) -> str | float:
    try:
        return float(token)
    except ValueError:
        return token


def _read(tokens: list[Token], pos: int) -> tuple[Tree, int]:
    if pos >= len(tokens):
        raise ConfigError("expression", "unexpected end of expression")
    token = tokens[pos]
    if token == "(":
        items: list[Tree] = []
        pos += 1
        while True:
            if pos >= len(tokens):
                raise ConfigError("expression", "missing ')'")
            if tokens[pos] == ")":
                return items, pos + 1
            item, pos = _read(tokens, pos)
            items.append(item)
    if token == ")":
        raise ConfigError("expression", "unexpected ')'")
    return _atom(token), pos + 1


def _exponent(tree: Tree, op: str) -> float:
    if not isinstance(tree, float):
        raise ConfigError("expression", f"'{op}' needs a numeric exponent, got {tree!r}")
    return tree


def _power(base: Node, r: float) -> Node:
    return IntPow(base, int(r)) if r.is_integer() else RealPow(base, r)


def _build(tree: Tree) -> Node:
    if isinstance(tree, float):
        return Const(tree)
    if isinstance(tree, str):
        if tree not in _SYMBOLS:
            raise ConfigError("expression", f"unknown symbol '{tree}'")
        return _SYMBOLS[tree]
    if not tree:
        raise ConfigError("expression", "empty list '()'")
    op, *rest = tree
    if not isinstance(op, str):
        raise ConfigError("expression", f"operator expected, got {op!r}")
    if not rest:
        raise ConfigError("expression", f"'{op}' needs at least one argument")

    if op in ("^", "pow"):
        if len(rest) != 2:
            raise ConfigError("expression", f"'{op}' takes a base and an exponent")
        return _power(_build(rest[0]), _exponent(rest[1], op))

    args = [_build(t) for t in rest]
    match op:
        case "+":
            return reduce(Add, args)
        case "*":
            return reduce(Mul, args)
        case "-":
            return Neg(args[0]) if len(args) == 1 else reduce(Sub, args)
        case "/":
            if len(args) != 2:
                raise ConfigError("expression", "'/' takes exactly two arguments")
            return Div(args[0], args[1])
        case "sqrt":
            return RealPow(args[0], 0.5)
        case _ if op in _UNARY:
            if len(args) != 1:
                raise ConfigError("expression", f"'{op}' takes exactly one argument")
            return _UNARY[op](args[0])
    raise ConfigError("expression", f"unknown operator '{op}'")


def parse_field(text: str, dimension: int | None = None) -> FieldExpr:
    """Parse an s-expression into a FieldExpr.

    The dimension defaults to one more than the highest coordinate used (at least 1).
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ConfigError("expression", "empty expression")
    tree, pos = _read(tokens, 0)
    if pos != len(tokens):
        raise ConfigError("expression", f"trailing input after position {pos}: {tokens[pos:]}")
    node = _build(tree)
    dim = dimension if dimension is not None else max(node.max_coordinate() + 1, 1)
    return FieldExpr(node, dim)
