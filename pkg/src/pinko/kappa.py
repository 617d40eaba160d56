"""Numerical kappa-o invariants of spectrum classes.

All values are half-integers, stored doubled so that arithmetic stays exact.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence, Union


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    doubled: int

    @classmethod
    def of(cls, x: Union["HalfInt", int, Fraction, str]) -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(x, int):
            return cls(2 * x)
        fx = Fraction(x)
        if (2 * fx).denominator != 1:
            raise ValueError(f"{x} is not a half-integer")
        return cls(int(2 * fx))

    def __add__(self, other):
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __rsub__(self, other):
        return HalfInt.of(other) - self

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __eq__(self, other):
        try:
            return self.doubled == HalfInt.of(other).doubled
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.doubled < HalfInt.of(other).doubled

    def __hash__(self):
        return hash(self.doubled)

    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def floor(self) -> int:
        return self.doubled // 2

    def to_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __str__(self):
        return str(self.doubled // 2) if self.doubled % 2 == 0 else f"{self.doubled}/2"

    def __repr__(self):
        return f"HalfInt({self})"


HALF = HalfInt(1)


def alpha(i: int) -> int:
    return 1 if i % 8 in (1, 2, 3, 5) else 0


def beta(k: int, j: int) -> int:
    """sum_{i=0}^{j-1} alpha(k - i)."""
    if j < 0:
        raise ValueError(f"beta needs j >= 0, got {j}")
    full, rest = divmod(j, 8)
    return 4 * full + sum(alpha(k - i) for i in range(rest))


_H_TABLE = {
    0: (HalfInt(0), HalfInt(5), HalfInt(6), HalfInt(3)),
    1: (HalfInt(0), HalfInt(1), HalfInt(6), HalfInt(7)),
}


def h_value(mu: int, m: int) -> HalfInt:
    if mu not in (0, 1) or m not in range(4):
        raise ValueError(f"h is tabulated for mu in {{0,1}}, m in 0..3; got ({mu}, {m})")
    return _H_TABLE[mu][m]


class ModelSpace(enum.Enum):
    """Level-0 model spaces: S^0 and the unreduced suspensions of G and T."""

    S0 = "S0"
    GTilde = "GTilde"
    TTilde = "TTilde"


_MODEL_KAPPA = {
    ModelSpace.S0: (0, 0, 0, 0, 0, 0, 0, 0),
    ModelSpace.GTilde: (1, 1, 1, 0, 0, 0, 0, 0),
    ModelSpace.TTilde: (2, 2, 1, 0, 0, 0, 0, 1),
}


def model_kappa(model: ModelSpace, k: int) -> int:
    """kappa-o of Sigma^{kD} applied to the model space, for 0 <= k <= 7."""
    if k not in range(8):
        raise ValueError(f"model_kappa takes k in 0..7, got {k}")
    return _MODEL_KAPPA[ModelSpace(model)][k]


@dataclass(frozen=True)
class SpectrumClass:
    """The formal desuspension [(model, a, b)] by ``a`` copies of D and ``b`` of H."""

    model: ModelSpace
    a: int
    b: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "model", ModelSpace(self.model))
        object.__setattr__(self, "b", HalfInt.of(self.b))

    @property
    def level(self) -> int:
        return -self.a

    def suspend(self, d: int = 0, h=0) -> "SpectrumClass":
        """Sigma^{dD + hH}; ``h`` may be a half-integer."""
        return SpectrumClass(self.model, self.a - d, self.b - HalfInt.of(h))


def kappa_of_class(s: SpectrumClass, M: int = None, N: int = None) -> HalfInt:
    """kappa-o of a spectrum class through an honest suspension of its model.

    ``M`` and ``N`` pick the representative; the value does not depend on them.
    """
    b_int, s_doubled = divmod(s.b.doubled, 2)
    if M is None:
        M = max(1, -(-(s.a + 8) // 8))
    if N is None:
        N = max(0, -(-b_int // 2))
    d_count = 8 * M - s.a
    h_count = 2 * N - b_int
    if d_count < 8 or h_count < 0:
        raise ValueError(f"representative M={M}, N={N} does not suspend {s} honestly")
    if h_count % 2 == 0:
        val = model_kappa(s.model, d_count % 8) + h_count
    else:
        # peel one H as Sigma^{H+4D} Sigma^{-4D}
        val = model_kappa(s.model, (d_count - 4) % 8) + 3 - beta(d_count, 4) + h_count - 1
    return HalfInt(2 * (val - 2 * N) - s_doubled)


def kappa_o_i(s: SpectrumClass, i: int) -> HalfInt:
    if i not in range(8):
        raise ValueError(f"kappa_o_i takes i in 0..7, got {i}")
    return kappa_of_class(s.suspend(d=i))


def kappa_table(s: SpectrumClass) -> tuple:
    return tuple(kappa_o_i(s, i) for i in range(8))


def half_H_suspend_kappa(table: Sequence[HalfInt], mu: int, p: int, k: int) -> HalfInt:
    """kappa-o of Sigma^{(p/2)H} Sigma^{kD} S(Y) from the kappa-o_i row of Y."""
    if p < 0:
        raise ValueError(f"p must be nonnegative, got {p}")
    if mu not in (0, 1):
        raise ValueError(f"mu must be 0 or 1, got {mu}")
    l, m = divmod(p, 4)
    same = HalfInt.of(table[k % 8]) + 2 * l
    shifted = HalfInt.of(table[(k + 4) % 8]) + 2 * l - beta(k, 4)
    if m == 0:
        return same
    if mu == 0:
        return {1: shifted + HalfInt(5), 2: shifted + 3, 3: same + HalfInt(3)}[m]
    return {1: same + HALF, 2: shifted + 3, 3: shifted + HalfInt(7)}[m]
