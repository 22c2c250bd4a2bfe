"""Expression trees for closed-form smooth fields, with exact jet evaluation.

Nodes are immutable. A :class:`FieldExpr` pairs a root node with its declared
spatial dimension; arithmetic on FieldExprs builds larger trees, which is how the
compound quotients ``u^p / v^(p-1)`` and ``u^p / f(v)`` are formed before being
differentiated exactly.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from picone_lab.errors import DimensionMismatch, DomainError
from picone_lab.jets.jet import Jet2

# ---------------------------------------------------------------------------
# Nodes
# ---------------------------------------------------------------------------


class Node:
    """Base class for expression-tree nodes."""

    __slots__ = ()

    def jet(self, points: np.ndarray) -> Jet2:
        raise NotImplementedError

    def children(self) -> tuple[Node, ...]:
        return ()

    def max_coordinate(self) -> int:
        return max((c.max_coordinate() for c in self.children()), default=-1)

    def __str__(self) -> str:
        return self.sexpr()

    def sexpr(self) -> str:
        raise NotImplementedError


def _first_bad(points: np.ndarray, mask: np.ndarray) -> str:
    idx = np.argwhere(mask)[0]
    pt = points[tuple(idx)] if mask.ndim else points
    return "(" + ", ".join(f"{c:.6g}" for c in np.atleast_1d(pt)) + ")"


@dataclass(frozen=True, slots=True)
class Const(Node):
    value: float

    def jet(self, points: np.ndarray) -> Jet2:
        return Jet2.constant(self.value, points.shape[:-1], points.shape[-1])

    def sexpr(self) -> str:
        if self.value == math.pi:
            return "pi"
        if self.value == math.e:
            return "e"
        return repr(float(self.value))


@dataclass(frozen=True, slots=True)
class Coord(Node):
    index: int

    def jet(self, points: np.ndarray) -> Jet2:
        return Jet2.coordinate(points, self.index)

    def max_coordinate(self) -> int:
        return self.index

    def sexpr(self) -> str:
        return f"x{self.index}"


@dataclass(frozen=True, slots=True)
class _Binary(Node):
    left: Node
    right: Node

    def children(self) -> tuple[Node, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Add(_Binary):
    def jet(self, points: np.ndarray) -> Jet2:
        return self.left.jet(points) + self.right.jet(points)

    def sexpr(self) -> str:
        return f"(+ {self.left} {self.right})"


@dataclass(frozen=True, slots=True)
class Sub(_Binary):
    def jet(self, points: np.ndarray) -> Jet2:
        return self.left.jet(points) - self.right.jet(points)

    def sexpr(self) -> str:
        return f"(- {self.left} {self.right})"


@dataclass(frozen=True, slots=True)
class Mul(_Binary):
    def jet(self, points: np.ndarray) -> Jet2:
        return self.left.jet(points) * self.right.jet(points)

    def sexpr(self) -> str:
        return f"(* {self.left} {self.right})"


@dataclass(frozen=True, slots=True)
class Div(_Binary):
    def jet(self, points: np.ndarray) -> Jet2:
        den = self.right.jet(points)
        bad = np.asarray(den.value) == 0.0
        if np.any(bad):
            raise DomainError(f"division by zero at {_first_bad(points, bad)}", self.sexpr())
        return self.left.jet(points) / den

    def sexpr(self) -> str:
        return f"(/ {self.left} {self.right})"


@dataclass(frozen=True, slots=True)
class _Unary(Node):
    arg: Node

    def children(self) -> tuple[Node, ...]:
        return (self.arg,)


@dataclass(frozen=True, slots=True)
class Neg(_Unary):
    def jet(self, points: np.ndarray) -> Jet2:
        return -self.arg.jet(points)

    def sexpr(self) -> str:
        return f"(neg {self.arg})"


@dataclass(frozen=True, slots=True)
class IntPow(_Unary):
    exponent: int

    def jet(self, points: np.ndarray) -> Jet2:
        j = self.arg.jet(points)
        b, k = np.asarray(j.value), self.exponent
        if k < 0 and np.any(b == 0.0):
            raise DomainError(
                f"negative power of zero at {_first_bad(points, b == 0.0)}", self.sexpr()
            )
        if k == 0:
            return Jet2.constant(1.0, b.shape, j.dimension)
        if k == 1:
            return j
        return j.chain(b**k, k * b ** (k - 1), k * (k - 1) * b ** (k - 2))

    def sexpr(self) -> str:
        return f"(^ {self.arg} {self.exponent})"


@dataclass(frozen=True, slots=True)
class RealPow(_Unary):
    """``base ** exponent`` for a real exponent; the base must be strictly positive."""

    exponent: float

    def jet(self, points: np.ndarray) -> Jet2:
        j = self.arg.jet(points)
        b, r = np.asarray(j.value), self.exponent
        bad = ~(b > 0.0)
        if np.any(bad):
            raise DomainError(
                f"real power of non-positive base at {_first_bad(points, bad)}", self.sexpr()
            )
        f0 = b**r
        return j.chain(f0, r * f0 / b, r * (r - 1.0) * f0 / b**2)

    def sexpr(self) -> str:
        return f"(pow {self.arg} {self.exponent!r})"


@dataclass(frozen=True, slots=True)
class Sin(_Unary):
    def jet(self, points: np.ndarray) -> Jet2:
        j = self.arg.jet(points)
        s = np.sin(j.value)
        return j.chain(s, np.cos(j.value), -s)

    def sexpr(self) -> str:
        return f"(sin {self.arg})"


@dataclass(frozen=True, slots=True)
class Cos(_Unary):
    def jet(self, points: np.ndarray) -> Jet2:
        j = self.arg.jet(points)
        c = np.cos(j.value)
        return j.chain(c, -np.sin(j.value), -c)

    def sexpr(self) -> str:
        return f"(cos {self.arg})"


@dataclass(frozen=True, slots=True)
class Exp(_Unary):
    def jet(self, points: np.ndarray) -> Jet2:
        j = self.arg.jet(points)
        e = np.exp(j.value)
        return j.chain(e, e, e)

    def sexpr(self) -> str:
        return f"(exp {self.arg})"


@dataclass(frozen=True, slots=True)
class Log(_Unary):
    def jet(self, points: np.ndarray) -> Jet2:
        j = self.arg.jet(points)
        b = np.asarray(j.value)
        bad = ~(b > 0.0)
        if np.any(bad):
            raise DomainError(f"log of non-positive value at {_first_bad(points, bad)}", self.sexpr())
        return j.chain(np.log(b), 1.0 / b, -1.0 / b**2)

    def sexpr(self) -> str:
        return f"(log {self.arg})"


# ---------------------------------------------------------------------------
# Symbolic first derivative (no simplification beyond constant folding of zeros)
# ---------------------------------------------------------------------------

_ZERO = Const(0.0)
_ONE = Const(1.0)


def _is_zero(node: Node) -> bool:
    return isinstance(node, Const) and node.value == 0.0


def _add(a: Node, b: Node) -> Node:
    if _is_zero(a):
        return b
    if _is_zero(b):
        return a
    return Add(a, b)


def _sub(a: Node, b: Node) -> Node:
    if _is_zero(b):
        return a
    if _is_zero(a):
        return Neg(b)
    return Sub(a, b)


def _mul(a: Node, b: Node) -> Node:
    if _is_zero(a) or _is_zero(b):
        return _ZERO
    if a == _ONE:
        return b
    if b == _ONE:
        return a
    return Mul(a, b)


def derivative_node(node: Node, i: int) -> Node:
    """∂node/∂x_i as a new tree."""
    match node:
        case Const():
            return _ZERO
        case Coord(index=k):
            return _ONE if k == i else _ZERO
        case Add(left=a, right=b):
            return _add(derivative_node(a, i), derivative_node(b, i))
        case Sub(left=a, right=b):
            return _sub(derivative_node(a, i), derivative_node(b, i))
        case Mul(left=a, right=b):
            return _add(_mul(derivative_node(a, i), b), _mul(a, derivative_node(b, i)))
        case Div(left=a, right=b):
            num = _sub(_mul(derivative_node(a, i), b), _mul(a, derivative_node(b, i)))
            return _ZERO if _is_zero(num) else Div(num, IntPow(b, 2))
        case Neg(arg=a):
            da = derivative_node(a, i)
            return _ZERO if _is_zero(da) else Neg(da)
        case IntPow(arg=a, exponent=k):
            if k == 0:
                return _ZERO
            outer = _ONE if k == 1 else _mul(Const(float(k)), IntPow(a, k - 1))
            return _mul(outer, derivative_node(a, i))
        case RealPow(arg=a, exponent=r):
            return _mul(_mul(Const(r), RealPow(a, r - 1.0)), derivative_node(a, i))
        case Sin(arg=a):
            return _mul(Cos(a), derivative_node(a, i))
        case Cos(arg=a):
            da = derivative_node(a, i)
            return _ZERO if _is_zero(da) else Neg(_mul(Sin(a), da))
        case Exp(arg=a):
            return _mul(node, derivative_node(a, i))
        case Log(arg=a):
            da = derivative_node(a, i)
            return _ZERO if _is_zero(da) else Div(da, a)
    raise TypeError(f"cannot differentiate node {node!r}")


def substitute_node(node: Node, mapping: dict[int, Node]) -> Node:
    """Replace coordinate leaves ``x_k`` by ``mapping[k]``."""
    match node:
        case Coord(index=k):
            return mapping.get(k, node)
        case Const():
            return node
        case _Binary(left=a, right=b):
            return type(node)(substitute_node(a, mapping), substitute_node(b, mapping))
        case IntPow(arg=a, exponent=k):
            return IntPow(substitute_node(a, mapping), k)
        case RealPow(arg=a, exponent=r):
            return RealPow(substitute_node(a, mapping), r)
        case _Unary(arg=a):
            return type(node)(substitute_node(a, mapping))
    raise TypeError(f"cannot substitute into node {node!r}")


# ---------------------------------------------------------------------------
# FieldExpr
# ---------------------------------------------------------------------------


def _combined_dimension(a: FieldExpr, b: FieldExpr) -> int:
    if a.dimension == b.dimension:
        return a.dimension
    if a.node.max_coordinate() < 0:
        return b.dimension
    if b.node.max_coordinate() < 0:
        return a.dimension
    raise DimensionMismatch(f"cannot combine fields of dimension {a.dimension} and {b.dimension}")


@dataclass(frozen=True, slots=True)
class FieldExpr:
    """A closed-form scalar field on R^n (n in {1, 2})."""

    node: Node
    dimension: int = 1
    label: str | None = None

    def __post_init__(self) -> None:
        if self.dimension not in (1, 2):
            raise DimensionMismatch(f"field dimension must be 1 or 2, got {self.dimension}")
        if self.node.max_coordinate() >= self.dimension:
            raise DimensionMismatch(
                f"coordinate x{self.node.max_coordinate()} used in a "
                f"{self.dimension}-dimensional field"
            )

    def __str__(self) -> str:
        return self.label or self.node.sexpr()

    @property
    def sexpr(self) -> str:
        return self.node.sexpr()

    def named(self, label: str) -> FieldExpr:
        return FieldExpr(self.node, self.dimension, label)

    def _binary(self, other: FieldExpr | float, cls: type[_Binary], swap: bool = False) -> FieldExpr:
        o = other if isinstance(other, FieldExpr) else constant(other, self.dimension)
        left, right = (o.node, self.node) if swap else (self.node, o.node)
        return FieldExpr(cls(left, right), _combined_dimension(self, o))

    def __add__(self, other: FieldExpr | float) -> FieldExpr:
        return self._binary(other, Add)

    def __radd__(self, other: float) -> FieldExpr:
        return self._binary(other, Add, swap=True)

    def __sub__(self, other: FieldExpr | float) -> FieldExpr:
        return self._binary(other, Sub)

    def __rsub__(self, other: float) -> FieldExpr:
        return self._binary(other, Sub, swap=True)

    def __mul__(self, other: FieldExpr | float) -> FieldExpr:
        return self._binary(other, Mul)

    def __rmul__(self, other: float) -> FieldExpr:
        return self._binary(other, Mul, swap=True)

    def __truediv__(self, other: FieldExpr | float) -> FieldExpr:
        return self._binary(other, Div)

    def __rtruediv__(self, other: float) -> FieldExpr:
        return self._binary(other, Div, swap=True)

    def __neg__(self) -> FieldExpr:
        return FieldExpr(Neg(self.node), self.dimension)

    def __pow__(self, exponent: float) -> FieldExpr:
        """Integer exponents give an IntPow node; anything else a RealPow node."""
        if float(exponent).is_integer():
            return FieldExpr(IntPow(self.node, int(exponent)), self.dimension)
        return FieldExpr(RealPow(self.node, float(exponent)), self.dimension)

    def compose(self, inner: FieldExpr) -> FieldExpr:
        """``self(inner(x))`` for a 1-D ``self``: substitutes ``x0`` by ``inner``."""
        if self.dimension != 1:
            raise DimensionMismatch("only 1-D fields can be composed with another field")
        return FieldExpr(substitute_node(self.node, {0: inner.node}), inner.dimension)

    def on_axis(self, axis: int, dimension: int) -> FieldExpr:
        """Re-embed a 1-D field as a function of coordinate ``axis`` in R^dimension."""
        return FieldExpr(substitute_node(self.node, {0: Coord(axis)}), dimension, self.label)


def coordinate(index: int, dimension: int = 1) -> FieldExpr:
    return FieldExpr(Coord(index), dimension)


def constant(value: float, dimension: int = 1) -> FieldExpr:
    return FieldExpr(Const(float(value)), dimension)


def sin(f: FieldExpr) -> FieldExpr:
    return FieldExpr(Sin(f.node), f.dimension)


def cos(f: FieldExpr) -> FieldExpr:
    return FieldExpr(Cos(f.node), f.dimension)


def exp(f: FieldExpr) -> FieldExpr:
    return FieldExpr(Exp(f.node), f.dimension)


def log(f: FieldExpr) -> FieldExpr:
    return FieldExpr(Log(f.node), f.dimension)


def derivative(expr: FieldExpr, i: int) -> FieldExpr:
    if not 0 <= i < expr.dimension:
        raise DimensionMismatch(f"no axis {i} in a {expr.dimension}-dimensional field")
    return FieldExpr(derivative_node(expr.node, i), expr.dimension)


def laplacian_expr(expr: FieldExpr) -> FieldExpr:
    """Δexpr as an expression tree, so that Δ(Δexpr) is available through jets."""
    terms = [derivative_node(derivative_node(expr.node, i), i) for i in range(expr.dimension)]
    node = terms[0]
    for t in terms[1:]:
        node = _add(node, t)
    return FieldExpr(node, expr.dimension)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def as_points(x: Sequence[float] | Sequence[Sequence[float]] | np.ndarray, dimension: int) -> np.ndarray:
    """Coerce a point or a batch of points to a float array with last axis ``dimension``."""
    pts = np.asarray(x, dtype=float)
    if pts.ndim == 0 and dimension == 1:
        pts = pts.reshape(1)
    if pts.ndim == 0 or pts.shape[-1] != dimension or pts.ndim > 2:
        raise DimensionMismatch(
            f"expected points of dimension {dimension}, got array of shape {pts.shape}"
        )
    return pts


def eval_jet(expr: FieldExpr, x: Sequence[float] | np.ndarray) -> Jet2:
    """Exact value, gradient and Hessian of ``expr`` at ``x``.

    ``x`` is a single point of shape ``(n,)`` or a batch of shape ``(m, n)``;
    the returned jet has the matching batch shape.
    """
    pts = as_points(x, expr.dimension)
    if pts.ndim == 1:
        return expr.node.jet(pts[None, :]).at(0)
    return expr.node.jet(pts)


def evaluate(expr: FieldExpr, x: Sequence[float] | np.ndarray) -> np.ndarray:
    """Values only."""
    return np.asarray(eval_jet(expr, x).value)
