"""Split submodules J(X) of KO_G and exact membership tests inside them.

An odd split submodule of level ``l`` is ``G^l * KO_G(4D)`` with
``G = A + 2D + 6 - 2H``; an even one is the ideal of RO(G) generated by
``(2 + A - 2D - 2B)^l (2 - 2D - B)`` and ``(A - 2B)^l (B - A)``. Membership of
``a(1 - D)lambda`` (resp. ``a(1 - D)``) is decided by an exact integer solve
over coefficients truncated at ``A**max_degree``; a miss is upgraded to a
refutation only when the 2-divisibility bound certifies it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import List, Optional, Sequence, Tuple

from . import poly
from .intlinalg import IntegerSystem
from .ko_graded import KOClass, Lam4, _act_lam4, lam, nu2, phi
from .rep_ring import A, B, D, H, K, RepRingElem, phi0

DEFAULT_MAX_DEGREE = 16

MEMBER = "member"
NOT_FOUND = "not_found"
REFUTED = "refuted"

ODD_BOUND = "odd-split-divisibility"
EVEN_BOUND = "even-split-divisibility"


@dataclass(frozen=True)
class SplitKind:
    parity: str
    l: int

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if self.l < 0:
            raise ValueError(f"split level must be nonnegative, got {self.l}")

    @property
    def grade_residue(self) -> int:
        return 0 if self.parity == "even" else 4


@dataclass(frozen=True)
class MembershipResult:
    outcome: str
    witness: Optional[tuple] = None
    searched_degree: Optional[int] = None
    refuted_by: Optional[str] = None

    @property
    def is_member(self) -> bool:
        return self.outcome == MEMBER


def even_split_generators(l: int) -> Tuple[RepRingElem, RepRingElem]:
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    first = (2 + A - 2 * D - 2 * B) ** l * (2 - 2 * D - B)
    second = (A - 2 * B) ** l * (B - A)
    return first, second


def odd_split_generator(l: int) -> RepRingElem:
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    g = (A + 2 * D + 6 - 2 * H) ** l
    assert g == (K - 2 * H + D + 5) ** l, "odd split generator identity failed"
    return g


def kappa_of_split(kind: SplitKind) -> int:
    return 2 * kind.l if kind.parity == "odd" else 2 * kind.l + 2


def div_bound(kind: SplitKind) -> int:
    return 2 ** (2 * kind.l + 1) if kind.parity == "odd" else 2 ** (2 * kind.l + 3)


def kappa_of_split_direct(kind: SplitKind) -> int:
    """The same number read off from phi of the generators."""
    if kind.parity == "odd":
        return nu2(phi(KOClass(4, _act_lam4(odd_split_generator(kind.l), lam().payload))))
    g1, g2 = even_split_generators(kind.l)
    return nu2(gcd(phi0(g1), phi0(g2)))


# -- coordinates --------------------------------------------------------------

def _monomial_basis(max_degree: int) -> List[tuple]:
    """(d, f, g) triples spanning D, A^0..A^N and B*A^0..B*A^N."""
    out = [(1, (), ()), (0, (1,), ())]
    out += [(0, poly.shift((1,), n), ()) for n in range(1, max_degree + 1)]
    out += [(0, (), poly.shift((1,), m)) for m in range(max_degree + 1)]
    return out


def _coords(d: int, f: Sequence[int], g: Sequence[int], width: int) -> List[int]:
    if len(f) > width or len(g) > width:
        raise ValueError("coordinate width too small")
    return [d] + list(f) + [0] * (width - len(f)) + list(g) + [0] * (width - len(g))


def _build(images: List[tuple]) -> Tuple[IntegerSystem, int]:
    width = max([len(f) for _, f, _ in images] + [len(g) for _, _, g in images] + [1])
    cols = [_coords(d, f, g, width) for d, f, g in images]
    matrix = [[c[i] for c in cols] for i in range(len(cols[0]))]
    return IntegerSystem(matrix), width


@lru_cache(maxsize=None)
def _odd_system(l: int, max_degree: int):
    gen = odd_split_generator(l)
    basis = [Lam4(*t) for t in _monomial_basis(max_degree)]
    images = []
    for x in basis:
        y = _act_lam4(gen, x)
        images.append((y.d, y.f, y.g))
    system, width = _build(images)
    return system, width, basis


@lru_cache(maxsize=None)
def _even_system(l: int, max_degree: int):
    gens = even_split_generators(l)
    basis = [RepRingElem(*t) for t in _monomial_basis(max_degree)]
    pairs = [(i, x) for i in range(2) for x in basis]
    images = []
    for i, x in pairs:
        y = gens[i] * x
        images.append((y.d, y.f, y.g))
    system, width = _build(images)
    return system, width, basis


def _check_pre(l: int, max_degree: int):
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    if max_degree < 2 * l + 2:
        raise ValueError(f"max_degree must be at least 2l+2 = {2 * l + 2}, got {max_degree}")


def _combine(coeffs: Sequence[int], basis) -> object:
    out = None
    for c, x in zip(coeffs, basis):
        if c:
            term = x.scale(c) if isinstance(x, Lam4) else x * c
            out = term if out is None else out + term
    return out


def membership_grade4(a: int, l: int, max_degree: int = DEFAULT_MAX_DEGREE,
                      use_bound: bool = True) -> MembershipResult:
    """Is ``a(1 - D)lambda`` in ``(A + 2D + 6 - 2H)^l * KO_G(4D)``?

    A member's witness is a 1-tuple holding the Lam4 multiplicand.
    """
    _check_pre(l, max_degree)
    if a == 0:
        return MembershipResult(MEMBER, (Lam4(),), max_degree)
    if use_bound and (2 * a) % div_bound(SplitKind("odd", l)):
        return MembershipResult(REFUTED, None, max_degree, ODD_BOUND)
    system, width, basis = _odd_system(l, max_degree)
    x = system.solve(_coords(-a, (a,), (), width))
    if x is None:
        return MembershipResult(NOT_FOUND, None, max_degree)
    w = _combine(x, basis) or Lam4()
    return MembershipResult(MEMBER, (w,), max_degree)


def membership_grade0(a: int, l: int, max_degree: int = DEFAULT_MAX_DEGREE,
                      use_bound: bool = True) -> MembershipResult:
    """Is ``a(1 - D)`` in the ideal generated by the even split generators?

    A member's witness is the coefficient pair ``(x, y)`` in RO(G).
    """
    _check_pre(l, max_degree)
    zero = RepRingElem()
    if a == 0:
        return MembershipResult(MEMBER, (zero, zero), max_degree)
    if use_bound and (2 * a) % div_bound(SplitKind("even", l)):
        return MembershipResult(REFUTED, None, max_degree, EVEN_BOUND)
    system, width, basis = _even_system(l, max_degree)
    sol = system.solve(_coords(-a, (a,), (), width))
    if sol is None:
        return MembershipResult(NOT_FOUND, None, max_degree)
    n = len(basis)
    x = _combine(sol[:n], basis) or zero
    y = _combine(sol[n:], basis) or zero
    return MembershipResult(MEMBER, (x, y), max_degree)


def expand_witness(kind: SplitKind, witness: tuple):
    """Re-expand a member witness into the element it certifies."""
    if kind.parity == "odd":
        return _act_lam4(odd_split_generator(kind.l), witness[0])
    g1, g2 = even_split_generators(kind.l)
    return g1 * witness[0] + g2 * witness[1]


def membership(kind: SplitKind, a: int, max_degree: int = DEFAULT_MAX_DEGREE,
               use_bound: bool = True) -> MembershipResult:
    fn = membership_grade4 if kind.parity == "odd" else membership_grade0
    return fn(a, kind.l, max_degree, use_bound)


def target(kind: SplitKind, a: int):
    """``a(1 - D)lambda`` or ``a(1 - D)`` as a payload."""
    if kind.parity == "odd":
        return Lam4(-a, (a,))
    return RepRingElem(-a, (a,))


__all__ = [
    "DEFAULT_MAX_DEGREE", "MEMBER", "NOT_FOUND", "REFUTED", "ODD_BOUND", "EVEN_BOUND",
    "SplitKind", "MembershipResult", "even_split_generators", "odd_split_generator",
    "kappa_of_split", "kappa_of_split_direct", "div_bound", "membership_grade4",
    "membership_grade0", "membership", "expand_witness", "target",
]
