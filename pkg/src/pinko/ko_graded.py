"""Normal forms for the 8-periodic groups KO_G(lD) and the maps between them.

A class stores its true integer grade ``l``; the payload shape depends on
``l mod 8``:

====  ===========================  =========================================
 res  payload                      meaning
====  ===========================  =========================================
  0   RepRingElem                  element of RO(G)
  1   int n                        n*eta
  2   Torsion(n, t)                n*eta^2 + gamma^2 * t(A) * c
  3   Torsion(n, t)                n*gamma*lambda + gamma * t(A) * c
  4   Lam4(d, f, g)                d*D*lambda + f(A)*lambda + g(A)*c
  5   int n                        n*eta*lambda
  6   Torsion(n, t), t(0) = 0      n*gamma^2 + gamma^2 * t(A)
  7   Torsion(n, t), t(0) = 0      n*gamma + gamma * t(A)
====  ===========================  =========================================

``t`` is a polynomial over the two-element field. Grades that differ by a
multiple of 8 are identified through powers of the Bott class b_{8D}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, List, Union

from . import poly
from .poly import IntPoly, Poly2
from .rep_ring import ONE as R_ONE, RepRingElem, phi0

ZERO_IMAGE = "zero"


@dataclass(frozen=True)
class Lam4:
    """``d*D*lambda + f(A)*lambda + g(A)*c`` in KO_G(4D)."""

    d: int = 0
    f: IntPoly = ()
    g: IntPoly = ()

    def __post_init__(self):
        object.__setattr__(self, "f", poly.trim(self.f))
        object.__setattr__(self, "g", poly.trim(self.g))

    def __add__(self, o: "Lam4") -> "Lam4":
        return Lam4(self.d + o.d, poly.add(self.f, o.f), poly.add(self.g, o.g))

    def scale(self, n: int) -> "Lam4":
        return Lam4(n * self.d, poly.scale(self.f, n), poly.scale(self.g, n))

    def is_zero(self) -> bool:
        return self.d == 0 and not self.f and not self.g


@dataclass(frozen=True)
class Torsion:
    """A free coefficient ``n`` plus a 2-torsion polynomial ``t``."""

    n: int = 0
    t: Poly2 = ()

    def __post_init__(self):
        object.__setattr__(self, "t", poly.mod2(self.t))

    def __add__(self, o: "Torsion") -> "Torsion":
        return Torsion(self.n + o.n, poly.add2(self.t, o.t))

    def scale(self, n: int) -> "Torsion":
        return Torsion(n * self.n, self.t if n & 1 else ())

    def is_zero(self) -> bool:
        return self.n == 0 and not self.t


Payload = Union[RepRingElem, Lam4, Torsion, int]

_PAYLOAD_TYPE = {0: RepRingElem, 1: int, 2: Torsion, 3: Torsion, 4: Lam4, 5: int, 6: Torsion, 7: Torsion}


@dataclass(frozen=True)
class KOClass:
    grade: int
    payload: Payload = field(default=0)

    def __post_init__(self):
        res = self.grade % 8
        want = _PAYLOAD_TYPE[res]
        p = self.payload
        if want is RepRingElem and isinstance(p, int):
            p = RepRingElem.coerce(p)
        elif want is Torsion and isinstance(p, int):
            p = Torsion(p)
        elif want is Lam4 and p == 0:
            p = Lam4()
        if not isinstance(p, want) or (want is int and isinstance(p, bool)):
            raise TypeError(f"grade {self.grade} (residue {res}) needs a {want.__name__} payload, got {p!r}")
        if res in (6, 7) and p.t and p.t[0]:
            raise ValueError(f"residue {res} torsion has no constant term (gamma*1 is the free generator)")
        object.__setattr__(self, "payload", p)

    @property
    def residue(self) -> int:
        return self.grade % 8

    def is_zero(self) -> bool:
        p = self.payload
        return p == 0 if isinstance(p, int) else p.is_zero()

    def __add__(self, other: "KOClass") -> "KOClass":
        if other.grade != self.grade:
            raise ValueError(f"cannot add classes of grades {self.grade} and {other.grade}")
        return KOClass(self.grade, self.payload + other.payload)

    def __neg__(self) -> "KOClass":
        return self.scale(-1)

    def __sub__(self, other: "KOClass") -> "KOClass":
        return self + (-other)

    def scale(self, n: int) -> "KOClass":
        p = self.payload
        if isinstance(p, int):
            return KOClass(self.grade, n * p)
        if isinstance(p, RepRingElem):
            return KOClass(self.grade, p * n)
        return KOClass(self.grade, p.scale(n))

    def __rmul__(self, n):
        if isinstance(n, int):
            return self.scale(n)
        if isinstance(n, RepRingElem):
            return act(n, self)
        return NotImplemented

    def __str__(self):
        return f"[{self.grade}] {render_payload(self)}"


def render_payload(x: KOClass) -> str:
    p, res = x.payload, x.residue
    if res == 0:
        return str(p)
    if res in (1, 5):
        return f"{p}*" + ("eta" if res == 1 else "eta*lambda")
    if res == 4:
        parts = []
        if p.d:
            parts.append(f"{p.d}*D*lambda")
        if p.f:
            parts.append(f"({poly.to_str(p.f)})*lambda")
        if p.g:
            parts.append(f"({poly.to_str(p.g)})*c")
        return " + ".join(parts) or "0"
    free = {2: "eta^2", 3: "gamma*lambda", 6: "gamma^2", 7: "gamma"}[res]
    tors = {2: "gamma^2*({})*c", 3: "gamma*({})*c", 6: "gamma^2*({})", 7: "gamma*({})"}[res]
    parts = [f"{p.n}*{free}"] if p.n else []
    if p.t:
        parts.append(tors.format(poly.to_str(p.t)))
    return " + ".join(parts) or "0"


# -- distinguished classes ----------------------------------------------------

def unit(grade: int = 0) -> KOClass:
    return KOClass(grade, R_ONE if grade % 8 == 0 else _free_generator(grade % 8))


def _free_generator(res: int) -> Payload:
    if res in (1, 5):
        return 1
    if res == 4:
        return Lam4(0, (1,))
    return Torsion(1)


def eta() -> KOClass:
    return KOClass(1, 1)


def lam() -> KOClass:
    return KOClass(4, Lam4(0, (1,)))


def c_class() -> KOClass:
    return KOClass(4, Lam4(0, (), (1,)))


def gamma() -> KOClass:
    return KOClass(-1, Torsion(1))


def free_generator(grade: int) -> KOClass:
    """The class with phi = 1 in the given grade."""
    return unit(grade)


def basis(grade: int, max_degree: int = 4) -> List[KOClass]:
    """Additive generators of KO_G(grade*D), truncated at ``A**max_degree``."""
    res = grade % 8
    ns = range(1, max_degree + 1)
    ms = range(0, max_degree + 1)
    if res == 0:
        out = [RepRingElem(0, (1,)), RepRingElem(1)]
        out += [RepRingElem(0, poly.shift((1,), n)) for n in ns]
        out += [RepRingElem(0, (), poly.shift((1,), m)) for m in ms]
    elif res in (1, 5):
        out = [1]
    elif res == 4:
        out = [Lam4(0, (1,)), Lam4(1)]
        out += [Lam4(0, poly.shift((1,), n)) for n in ns]
        out += [Lam4(0, (), poly.shift((1,), m)) for m in ms]
    elif res in (2, 3):
        out = [Torsion(1)] + [Torsion(0, poly.shift((1,), m)) for m in ms]
    else:
        out = [Torsion(1)] + [Torsion(0, poly.shift((1,), n)) for n in ns]
    return [KOClass(grade, p) for p in out]


# -- RO(G)-module structure ---------------------------------------------------

def _lam4_D(x: Lam4) -> Lam4:
    # D*lambda = D*lambda, D*(D*lambda) = lambda, D*A^n = A^n, D*c = c
    f0 = poly.at0(x.f)
    return Lam4(f0, poly.add(poly.drop_const(x.f), poly.const(x.d)), x.g)


def _lam4_A(x: Lam4) -> Lam4:
    return Lam4(0, poly.shift(poly.add(x.f, poly.const(x.d))), poly.shift(x.g))


def _lam4_H(x: Lam4) -> Lam4:
    # H*lambda = 4c, H*D*lambda = 4c, H*c = (A + 2 + 2D)*lambda
    g0 = poly.at0(x.g)
    f = poly.add(poly.mul((2, 1), x.g), poly.scale(poly.drop_const(x.g), 2))
    return Lam4(2 * g0, f, poly.scale(poly.add(x.f, poly.const(x.d)), 4))


def _lam4_B(x: Lam4) -> Lam4:
    # B = H - 2 - 2D
    return _lam4_H(x) + x.scale(-2) + _lam4_D(x).scale(-2)


def _act_lam4(r: RepRingElem, x: Lam4) -> Lam4:
    out = _lam4_D(x).scale(r.d)
    y = x
    for i, a in enumerate(r.f):
        if i:
            y = _lam4_A(y)
        if a:
            out = out + y.scale(a)
    y = _lam4_B(x)
    for i, a in enumerate(r.g):
        if i:
            y = _lam4_A(y)
        if a:
            out = out + y.scale(a)
    return out


def act(r: RepRingElem, x: KOClass) -> KOClass:
    """The RO(G)-module action; the grade is unchanged."""
    r = RepRingElem.coerce(r)
    res, p = x.residue, x.payload
    if res == 0:
        return KOClass(x.grade, r * p)
    if res == 4:
        return KOClass(x.grade, _act_lam4(r, p))
    # D acts by -1 on eta, gamma and their free multiples; A, B kill them,
    # except that A*gamma = gamma*A survives as 2-torsion.
    n = phi0(r)
    if res in (1, 5):
        return KOClass(x.grade, n * p)
    # on torsion D acts by -1 = +1 mod 2, A by shifting, B by zero
    dt = poly.add(r.f, poly.const(r.d))
    t = poly.mul2(poly.mod2(dt), p.t)
    if res in (6, 7):
        t = poly.add2(t, poly.mod2(poly.scale(poly.drop_const(r.f), p.n)))
    return KOClass(x.grade, Torsion(n * p.n, t))


def mul_gamma(x: KOClass) -> KOClass:
    """Multiplication by gamma(D): KO_G(lD) -> KO_G((l-1)D)."""
    res, p, g = x.residue, x.payload, x.grade - 1
    if res == 0:
        return KOClass(g, Torsion(phi0(p), poly.mod2(poly.drop_const(p.f))))
    if res == 7:
        return KOClass(g, Torsion(p.n, p.t))
    if res == 6:
        # gamma^3 is identified with eta*lambda through b_{8D}
        return KOClass(g, p.n)
    if res == 5:
        return KOClass(g, Lam4(-p, (p,)))
    if res == 4:
        return KOClass(g, Torsion(poly.at0(p.f) - p.d, poly.mod2(p.g)))
    if res == 3:
        return KOClass(g, Torsion(2 * p.n, p.t))
    if res == 2:
        return KOClass(g, 2 * p.n)
    return KOClass(g, RepRingElem(-p, (p,)))


def mul_eta(x: KOClass) -> KOClass:
    """Multiplication by eta(D): KO_G(lD) -> KO_G((l+1)D)."""
    res, p, g = x.residue, x.payload, x.grade + 1
    if res == 0:
        return KOClass(g, phi0(p))
    if res == 1:
        return KOClass(g, Torsion(p))
    if res == 2:
        return KOClass(g, Torsion(p.n))
    if res == 3:
        return KOClass(g, Lam4(-p.n, (p.n,)))
    if res == 4:
        return KOClass(g, poly.at0(p.f) - p.d)
    if res == 5:
        return KOClass(g, Torsion(2 * p))
    if res == 6:
        return KOClass(g, Torsion(2 * p.n))
    return KOClass(g, RepRingElem(-p.n, (p.n,)))


def phi(x: KOClass) -> int:
    """The evaluation homomorphism phi_l : KO_G(lD) -> Z."""
    res, p = x.residue, x.payload
    if res == 0:
        return phi0(p)
    if res == 4:
        return poly.at0(p.f) - p.d
    if res in (1, 5):
        return p
    return p.n


def bott_shift(x: KOClass, k: int) -> KOClass:
    if k % 8:
        raise ValueError(f"Bott shifts come in multiples of 8, got {k}")
    return KOClass(x.grade + k, x.payload)


def nu2(n: int) -> int:
    if n == 0:
        raise ValueError("2-adic valuation of 0")
    n = abs(n)
    return (n & -n).bit_length() - 1


def submodule_phi_image(gens: Iterable[KOClass]) -> Union[int, str]:
    """Exponent k with phi(RO(G)*gens) = (2^k), or ``ZERO_IMAGE``.

    phi0 is onto Z and phi(r*x) = phi0(r)*phi(x), so the image is the ideal
    generated by the phi-values of the generators.
    """
    gens = list(gens)
    if not gens:
        return ZERO_IMAGE
    grades = {x.grade for x in gens}
    if len(grades) != 1:
        raise ValueError(f"generators live in several grades: {sorted(grades)}")
    g = 0
    for x in gens:
        g = gcd(g, phi(x))
    return ZERO_IMAGE if g == 0 else nu2(g)
