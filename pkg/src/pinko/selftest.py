"""Quick internal consistency suite, runnable from the CLI.

Each check returns ``(label, ok, detail)``; nothing here raises on failure.
"""
from __future__ import annotations

import random
from typing import Callable, List, Tuple

from . import ko_graded as ko
from .catalog import builtin_catalog
from .kappa import HalfInt, beta, half_H_suspend_kappa, kappa_of_class
from .ko_graded import KOClass, act, c_class, eta, gamma, lam, mul_eta, mul_gamma, phi
from .split import SplitKind, div_bound, expand_witness, membership, target
from .rep_ring import A, B, D, H, K, ONE, RepRingElem, psi3, psi3_via_lambda

Check = Tuple[str, bool, str]


def _power(x: KOClass, step: Callable, n: int) -> KOClass:
    for _ in range(n):
        x = step(x)
    return x


def relation_checks() -> List[Check]:
    """Ring presentation and module relations among gamma, eta, lambda, c."""
    g, e, lm, c = gamma(), eta(), lam(), c_class()
    G = K - 2 * H + D + 5
    out = [
        ("D^2 = 1", D * D == ONE),
        ("DA = A", D * A == A),
        ("DB = B", D * B == B),
        ("B^2 = 4(A - 2B)", B * B == 4 * (A - 2 * B)),
        ("H*lambda = 4c", act(H, lm) == c.scale(4)),
        ("H*c = (A + 2 + 2D)*lambda", act(H, c) == act(A + 2 + 2 * D, lm)),
        ("D*c = c", act(D, c) == c),
        ("(D + 1)*gamma = 0", act(D + 1, g).is_zero()),
        ("2A*gamma = 0", act(2 * A, g).is_zero()),
        ("B*gamma = 0", act(B, g).is_zero()),
        ("(D + 1)*eta = 0", act(D + 1, e).is_zero()),
        ("A*eta = 0", act(A, e).is_zero()),
        ("B*eta = 0", act(B, e).is_zero()),
        ("gamma*eta = 1 - D", mul_gamma(e) == KOClass(0, ONE - D)),
        ("gamma*lambda = eta^3", mul_gamma(lm) == mul_eta(mul_eta(e))),
        ("gamma^8 * b_8D = 8(1 - D)", ko.bott_shift(_power(ko.unit(0), mul_gamma, 8), 8) == KOClass(0, 8 * (ONE - D))),
        ("eta*lambda = gamma^3 * b_8D", mul_eta(lm) == _power(ko.unit(8), mul_gamma, 3)),
        ("eta*c = 0", mul_eta(c).is_zero()),
        ("gamma(H)^2 b_2H = K - 2H + D + 5 = 2 + A - 2D - 2B", G == 2 + A - 2 * D - 2 * B),
        ("gamma(H + 4D) b: 8(1 - D)*G = (4(1 - D))^2", 8 * (ONE - D) * G == (4 * (ONE - D)) ** 2),
        ("gamma(H)lambda(H) = 4 - H = 2 - 2D - B", 4 - H == 2 - 2 * D - B),
        ("gamma(H)c(H) = H - 1 - D - K = B - A", H - 1 - D - K == B - A),
    ]
    return [(label, bool(ok), "") for label, ok in out]


def psi3_checks(trials: int = 200, seed: int = 0) -> List[Check]:
    rng = random.Random(seed)

    def rand():
        return RepRingElem(rng.randint(-3, 3), tuple(rng.randint(-3, 3) for _ in range(5)),
                           tuple(rng.randint(-3, 3) for _ in range(5)))

    mult = add = True
    for _ in range(trials):
        x, y = rand(), rand()
        mult &= psi3(x * y) == psi3(x) * psi3(y)
        add &= psi3(x + y) == psi3(x) + psi3(y)
    out = [
        ("psi3 multiplicative", mult, f"{trials} random pairs"),
        ("psi3 additive", add, f"{trials} random pairs"),
        ("psi3(A) = A^3 + 6A^2 + 9A", psi3(A) == A ** 3 + 6 * A ** 2 + 9 * A, ""),
        ("psi3(B) = AB + B + 4A", psi3(B) == A * B + B + 4 * A, ""),
        ("psi3(D) = D", psi3(D) == D, ""),
    ]
    for gen in ("D", "K", "H"):
        x = {"D": D, "K": K, "H": H}[gen]
        out.append((f"psi3({gen}) agrees with the lambda formula", psi3(x) == psi3_via_lambda(gen), ""))
    return out


def ladder_checks(max_degree: int = 3) -> List[Check]:
    """phi_{k-j}(gamma^j x) = 2^beta(k, j) phi_k(x) on additive generators."""
    bad = []
    count = 0
    for k in range(1, 17):
        for x in ko.basis(k, max_degree):
            y = x
            for j in range(9):
                count += 1
                if phi(y) != 2 ** beta(k, j) * phi(x):
                    bad.append((k, j, str(x)))
                y = mul_gamma(y)
    return [("gamma ladder", not bad, f"{count} cases" if not bad else f"failures {bad[:3]}")]


def kappa_checks() -> List[Check]:
    cat = builtin_catalog()
    out = []
    for e in cat:
        parity = all(k.doubled % 2 == e.mu for k in e.kappa)
        closed = all(
            half_H_suspend_kappa(e.kappa, e.mu, p, k)
            == kappa_of_class(e.spectrum.suspend(d=k, h=HalfInt(p)))
            for p in range(0, 18) for k in range(8)
        )
        out.append((f"kappa parity {e.name}", parity, ""))
        out.append((f"half-H suspension closed forms {e.name}", closed, ""))
    return out


def split_checks(max_degree: int = 12, levels=range(3), amplitude: int = 16) -> List[Check]:
    """Membership agrees with the 2-divisibility bound, witnesses re-expand."""
    out = []
    for parity in ("odd", "even"):
        for l in levels:
            kind = SplitKind(parity, l)
            bad = []
            for a in range(-amplitude, amplitude + 1):
                r = membership(kind, a, max_degree, use_bound=False)
                if r.is_member != ((2 * a) % div_bound(kind) == 0):
                    bad.append(a)
                elif r.is_member and expand_witness(kind, r.witness) != target(kind, a):
                    bad.append(a)
            out.append((f"split membership {parity} l={l}", not bad, f"bad a: {bad}" if bad else ""))
    return out


def run_all() -> List[Check]:
    return relation_checks() + psi3_checks() + ladder_checks() + kappa_checks()
