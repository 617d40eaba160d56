"""The real representation ring RO(Pin(2)).

Every element has a unique normal form ``d*D + f(A) + B*g(A)`` with an integer
``d`` and integer polynomials ``f`` (constant term included) and ``g``, where

    D^2 = 1,  D*A = A,  D*B = B,  B^2 = 4A - 8B.

``K`` and ``H`` are not basis elements; they enter through ``K = A + 1 + D``
and ``H = B + 2 + 2D``.
"""
from __future__ import annotations

import ast
from dataclasses import dataclass
from functools import reduce
from typing import Union

from . import poly
from .poly import IntPoly

Scalar = Union[int, "RepRingElem"]


@dataclass(frozen=True)
class RepRingElem:
    d: int = 0
    f: IntPoly = ()
    g: IntPoly = ()

    def __post_init__(self):
        object.__setattr__(self, "f", poly.trim(self.f))
        object.__setattr__(self, "g", poly.trim(self.g))

    @classmethod
    def coerce(cls, x: Scalar) -> "RepRingElem":
        if isinstance(x, RepRingElem):
            return x
        if isinstance(x, int):
            return cls(0, poly.const(x))
        raise TypeError(f"cannot coerce {type(x).__name__} into RO(G)")

    def is_zero(self) -> bool:
        return self.d == 0 and not self.f and not self.g

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other: Scalar) -> "RepRingElem":
        o = RepRingElem.coerce(other)
        return RepRingElem(self.d + o.d, poly.add(self.f, o.f), poly.add(self.g, o.g))

    __radd__ = __add__

    def __neg__(self) -> "RepRingElem":
        return RepRingElem(-self.d, poly.neg(self.f), poly.neg(self.g))

    def __sub__(self, other: Scalar) -> "RepRingElem":
        return self + (-RepRingElem.coerce(other))

    def __rsub__(self, other: Scalar) -> "RepRingElem":
        return RepRingElem.coerce(other) - self

    def __mul__(self, other: Scalar) -> "RepRingElem":
        if isinstance(other, int):
            return RepRingElem(other * self.d, poly.scale(self.f, other), poly.scale(self.g, other))
        o = RepRingElem.coerce(other)
        d1, f1, g1 = self.d, self.f, self.g
        d2, f2, g2 = o.d, o.f, o.g
        # D*f(A) = f(0)*D + (f - f(0))
        d = d1 * poly.at0(f2) + d2 * poly.at0(f1)
        f = poly.add(poly.mul(f1, f2), poly.const(d1 * d2))
        f = poly.add(f, poly.scale(poly.drop_const(f2), d1))
        f = poly.add(f, poly.scale(poly.drop_const(f1), d2))
        g = poly.add(poly.mul(f1, g2), poly.mul(f2, g1))
        g = poly.add(g, poly.add(poly.scale(g2, d1), poly.scale(g1, d2)))
        gg = poly.mul(g1, g2)
        if gg:
            f = poly.add(f, poly.scale(poly.shift(gg), 4))
            g = poly.sub(g, poly.scale(gg, 8))
        return RepRingElem(d, f, g)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RepRingElem":
        if n < 0:
            raise ValueError("RO(G) powers need n >= 0")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = RepRingElem.coerce(other)
        if not isinstance(other, RepRingElem):
            return NotImplemented
        return (self.d, self.f, self.g) == (other.d, other.f, other.g)

    def __hash__(self):
        return hash((self.d, self.f, self.g))

    def __str__(self):
        parts = []
        if self.d:
            parts.append(f"{self.d}D" if abs(self.d) != 1 else ("D" if self.d == 1 else "-D"))
        if self.f:
            parts.append(poly.to_str(self.f))
        if self.g:
            gs = poly.to_str(self.g)
            parts.append({"1": "B", "-1": "-B"}.get(gs, f"B*({gs})"))
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


ZERO = RepRingElem()
ONE = RepRingElem(0, (1,))
D = RepRingElem(1)
A = RepRingElem(0, (0, 1))
B = RepRingElem(0, (), (1,))
K = A + 1 + D
H = B + 2 + 2 * D

GENERATORS = {"1": ONE, "D": D, "A": A, "B": B, "K": K, "H": H}


def from_generators(expr) -> RepRingElem:
    """Normal form of a formal integer expression in 1, D, K, H, A, B.

    ``expr`` is either a string such as ``"K - 2*H + D + 5"`` (``^`` and ``**``
    both mean power) or a term tree of nested tuples ``("+", x, y)``,
    ``("*", x, y)``, ``("-", x, y)``, ``("neg", x)``, ``("^", x, n)`` whose leaves
    are ints or generator names.
    """
    if isinstance(expr, RepRingElem):
        return expr
    if isinstance(expr, int):
        return RepRingElem.coerce(expr)
    if isinstance(expr, str):
        if expr.strip() in GENERATORS:
            return GENERATORS[expr.strip()]
        tree = ast.parse(expr.replace("^", "**"), mode="eval")
        return _eval_ast(tree.body)
    if isinstance(expr, tuple):
        op, *args = expr
        if op == "neg":
            return -from_generators(args[0])
        if op == "^":
            return from_generators(args[0]) ** int(args[1])
        vals = [from_generators(a) for a in args]
        if op == "+":
            return reduce(lambda x, y: x + y, vals, ZERO)
        if op == "*":
            return reduce(lambda x, y: x * y, vals, ONE)
        if op == "-":
            return vals[0] - vals[1]
    raise ValueError(f"malformed term: {expr!r}")


def _eval_ast(node) -> RepRingElem:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return RepRingElem.coerce(node.value)
    if isinstance(node, ast.Name) and node.id in GENERATORS:
        return GENERATORS[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_ast(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ValueError("exponent must be a nonnegative integer literal")
            return _eval_ast(node.left) ** node.right.value
        left, right = _eval_ast(node.left), _eval_ast(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
    raise ValueError(f"unsupported syntax in RO(G) expression: {ast.dump(node)}")


def phi0(x: RepRingElem) -> int:
    """Trace of j: D -> -1, A -> 0, B -> 0."""
    return poly.at0(x.f) - x.d


def aug(x: RepRingElem) -> int:
    """Dimension: D -> 1, A -> 0, B -> 0."""
    return poly.at0(x.f) + x.d


PSI3_A = A ** 3 + 6 * A ** 2 + 9 * A
PSI3_B = A * B + B + 4 * A


def _subst_poly(p: IntPoly, x: RepRingElem) -> RepRingElem:
    out = ZERO
    for c in reversed(p):
        out = out * x + c
    return out


def psi3(x: RepRingElem) -> RepRingElem:
    """Adams operation psi^3, extended from its values on D, A, B."""
    return x.d * D + _subst_poly(x.f, PSI3_A) + PSI3_B * _subst_poly(x.g, PSI3_A)


# exterior powers of the generators: (lambda^2, lambda^3)
_LAMBDA = {
    "D": (ZERO, ZERO),
    "K": (D, ZERO),
    "H": (K + D + 3, H),
}


def psi3_via_lambda(gen: str) -> RepRingElem:
    """psi^3(x) = x^3 - 3*lambda^2(x)*x + 3*lambda^3(x) for x in {D, K, H}."""
    if gen not in _LAMBDA:
        raise ValueError(f"psi3_via_lambda is only defined on D, K, H, not {gen!r}")
    x = GENERATORS[gen]
    lam2, lam3 = _LAMBDA[gen]
    return x ** 3 - 3 * lam2 * x + 3 * lam3


@dataclass(frozen=True)
class VirtualRep:
    """``r`` trivial lines, ``a`` copies of D and ``h`` copies of H."""

    r: int = 0
    a: int = 0
    h: int = 0

    def __post_init__(self):
        if min(self.r, self.a, self.h) < 0:
            raise ValueError("VirtualRep counts must be nonnegative")

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        return VirtualRep(self.r + other.r, self.a + other.a, self.h + other.h)


THETA3_H = A + B + 4 * D + 5


def theta3(v: VirtualRep) -> RepRingElem:
    """Bott cannibalistic class theta_3 for ``r`` and ``a`` even."""
    if v.r % 2 or v.a % 2:
        raise ValueError(f"theta3 needs an even number of R and D summands, got {v}")
    return 3 ** (v.r // 2) * (1 + 2 * D) ** (v.a // 2) * THETA3_H ** v.h
