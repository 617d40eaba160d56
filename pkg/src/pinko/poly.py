"""Dense univariate polynomials in A, stored as trimmed coefficient tuples.

``IntPoly`` has exact integer coefficients; ``Poly2`` has coefficients in
{0, 1} (the two-element field). Index ``i`` holds the coefficient of ``A**i``
and the zero polynomial is ``()``.
"""
from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Tuple

IntPoly = Tuple[int, ...]
Poly2 = Tuple[int, ...]

ZERO: IntPoly = ()
ONE: IntPoly = (1,)
X: IntPoly = (0, 1)


def trim(coeffs: Iterable[int]) -> IntPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def const(n: int) -> IntPoly:
    return (n,) if n else ()


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return trim(a + b for a, b in zip_longest(p, q, fillvalue=0))


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return trim(a - b for a, b in zip_longest(p, q, fillvalue=0))


def neg(p: IntPoly) -> IntPoly:
    return tuple(-a for a in p)


def scale(p: IntPoly, n: int) -> IntPoly:
    if n == 0:
        return ()
    return tuple(n * a for a in p)


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def shift(p: IntPoly, n: int = 1) -> IntPoly:
    """Multiply by ``A**n``."""
    return (0,) * n + p if p else ()


def power(p: IntPoly, n: int) -> IntPoly:
    if n < 0:
        raise ValueError("negative exponent")
    out, base = ONE, p
    while n:
        if n & 1:
            out = mul(out, base)
        base = mul(base, base)
        n >>= 1
    return out


def at0(p: IntPoly) -> int:
    return p[0] if p else 0


def drop_const(p: IntPoly) -> IntPoly:
    """``p - p(0)``."""
    return trim((0,) + p[1:]) if p else ()


def degree(p: IntPoly) -> int:
    return len(p) - 1


def compose(p: IntPoly, q: IntPoly) -> IntPoly:
    """``p(q(A))`` by Horner's rule."""
    out: IntPoly = ()
    for a in reversed(p):
        out = add(mul(out, q), const(a))
    return out


def mod2(p: Iterable[int]) -> Poly2:
    return trim(a & 1 for a in p)


def add2(p: Poly2, q: Poly2) -> Poly2:
    return trim(a ^ b for a, b in zip_longest(p, q, fillvalue=0))


def mul2(p: Poly2, q: Poly2) -> Poly2:
    return mod2(mul(p, q))


def to_str(p: IntPoly, var: str = "A") -> str:
    terms = []
    for i, a in enumerate(p):
        if not a:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            terms.append(str(a))
        elif a == 1:
            terms.append(mono)
        elif a == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{a}{mono}")
    if not terms:
        return "0"
    return " + ".join(reversed(terms)).replace("+ -", "- ")
