"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
import random
import time

from conftest import ACCEPTANCE_LINES
from pinko import obstruction as ob
from pinko.catalog import builtin_catalog, loads_catalog, serialize
from pinko.kappa import HalfInt, alpha, beta, half_H_suspend_kappa, kappa_of_class, kappa_table
from pinko.ko_graded import basis, mul_gamma, phi
from pinko.rep_ring import A, B, D, H, K, RepRingElem, psi3, psi3_via_lambda
from pinko.selftest import relation_checks
from pinko.split import SplitKind, div_bound, expand_witness, membership, target

CAT = builtin_catalog()


def report(n, ok, detail):
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def h(*doubled):
    return tuple(HalfInt(x) for x in doubled)


EXPECTED_KAPPA = {
    "S3": h(0, 0, 0, 0, 0, 0, 0, 0),
    "Sigma(2,3,12n-1)": h(2, 2, 2, 0, 0, 0, 0, 0),
    "-Sigma(2,3,12n-1)": h(0, 0, -2, -2, 0, 0, 0, 0),
    "Sigma(2,3,12n-5)": h(1, 1, 1, -1, -1, -1, -1, -1),
    "-Sigma(2,3,12n-5)": h(3, 3, 1, -1, -1, -1, -1, 1),
    "Sigma(2,3,12n+1)": h(0, 0, 0, 0, 0, 0, 0, 0),
    "-Sigma(2,3,12n+1)": h(0, 0, 0, 0, 0, 0, 0, 0),
    "Sigma(2,3,12n+5)": h(3, 3, 1, -1, -1, -1, 1, 3),
    "-Sigma(2,3,12n+5)": h(-1, -1, -1, -1, -1, -1, -1, -1),
}

EXPECTED_BOUNDS = {
    "Sigma(2,3,12n-1)": (2, 0, 1, 2),
    "-Sigma(2,3,12n-1)": (3, 2, 3, 3),
    "Sigma(2,3,12n+1)": (3, 1, 2, 3),
    "-Sigma(2,3,12n+1)": (3, 1, 2, 3),
    "Sigma(2,3,12n-5)": (1, 2, 3, 3),
    "-Sigma(2,3,12n-5)": (2, 1, 2, 2),
    "Sigma(2,3,12n+5)": (2, 0, 1, 2),
    "-Sigma(2,3,12n+5)": (2, 3, 4, 4),
}


def test_criterion_01_relations():
    t = time.perf_counter()
    checks = relation_checks()
    elapsed = time.perf_counter() - t
    bad = [label for label, ok, _ in checks if not ok]
    report(1, not bad and elapsed < 1.0, f"{len(checks)} relations exact in {elapsed:.3f}s; failures {bad}")


def test_criterion_02_psi3():
    rng = random.Random(20261016)

    def rand():
        return RepRingElem(rng.randint(-5, 5), tuple(rng.randint(-5, 5) for _ in range(5)),
                           tuple(rng.randint(-5, 5) for _ in range(5)))

    bad = 0
    for _ in range(500):
        x, y = rand(), rand()
        bad += psi3(x * y) != psi3(x) * psi3(y)
        bad += psi3(x + y) != psi3(x) + psi3(y)
    gens = (psi3(A) == A ** 3 + 6 * A ** 2 + 9 * A and psi3(B) == A * B + B + 4 * A and psi3(D) == D)
    lam = all(psi3(x) == psi3_via_lambda(n) for n, x in (("D", D), ("K", K), ("H", H)))
    report(2, bad == 0 and gens and lam, f"500 pairs, {bad} failures; generator values {gens}; lambda route {lam}")


def test_criterion_03_gamma_ladder():
    bad, count = [], 0
    for k in range(1, 17):
        for x in basis(k, 4):
            y = x
            for j in range(9):
                count += 1
                if phi(y) != 2 ** beta(k, j) * phi(x):
                    bad.append((k, j))
                y = mul_gamma(y)
    report(3, not bad, f"{count} ladder identities, failures {bad[:5]}")


def test_criterion_04_kappa_table():
    mism = []
    for name, row in EXPECTED_KAPPA.items():
        e = CAT.resolve(name)
        got = kappa_table(e.spectrum)
        mism += [(name, i) for i in range(8) if got[i] != row[i]]
    report(4, not mism, f"{8 * len(EXPECTED_KAPPA)} entries compared, mismatches {mism}")


def test_criterion_05_bound_table():
    table = ob.bound_table(CAT)  # best_bound raises if representatives disagree
    mism = []
    for name, want in EXPECTED_BOUNDS.items():
        got = tuple(table[name].values())
        mism += [(name, i) for i in range(4) if got[i] != want[i]]
    report(5, not mism and len(table) == 8, f"32 cells compared, mismatches {mism}")


def test_criterion_06_closed_oracle():
    bad, count = [], 0
    for p in range(0, 65, 2):
        for q in range(1, p + 7):
            count += 1
            form = ob.FormSpec(p, q)
            if ob.closed_check(form).status != ob.closed_oracle(form):
                bad.append((p, q))
    report(6, not bad, f"{count} closed forms compared, disagreements {bad[:5]}")


def test_criterion_07_prop31():
    certs, bad = 0, []
    for d in range(3):
        for k in range(3):
            for lp in range(3):
                for l in range(1, 4):
                    try:
                        c = ob.prop31_certify(d, k, l, lp, 12)
                    except (ob.ConsistencyError, ob.NotApplicableError) as exc:
                        bad.append(((d, k, l, lp), str(exc)))
                        continue
                    ok = (c.details["rank"] == c.details["unknowns"]
                          and sorted(c.details["p_solutions"]) == [-1, 1])
                    certs += ok
                    if not ok:
                        bad.append((d, k, l, lp))
    report(7, certs == 81 and not bad, f"{certs}/81 certificates, failures {bad[:3]}")


def test_criterion_08_split_divisibility():
    bad, members = [], 0
    for parity in ("odd", "even"):
        for l in range(3):
            kind = SplitKind(parity, l)
            for a in range(-16, 17):
                r = membership(kind, a, 12, use_bound=False)
                if r.is_member != ((2 * a) % div_bound(kind) == 0):
                    bad.append((parity, l, a))
                if r.is_member:
                    members += 1
                    if expand_witness(kind, r.witness) != target(kind, a):
                        bad.append((parity, l, a, "witness"))
    report(8, not bad, f"198 membership queries, {members} witnesses re-expanded, failures {bad[:5]}")


def test_criterion_09_half_H_closed_forms():
    bad, count = [], 0
    mus = set()
    for e in CAT:
        mus.add(e.mu)
        for p in range(18):
            for k in range(8):
                count += 1
                want = kappa_of_class(e.spectrum.suspend(d=k, h=HalfInt(p)))
                if half_H_suspend_kappa(e.kappa, e.mu, p, k) != want:
                    bad.append((e.name, p, k))
    report(9, not bad and mus == {0, 1}, f"{count} comparisons over mu in {sorted(mus)}, failures {bad[:5]}")


def test_criterion_10_structure():
    problems = []
    for k in range(-16, 17):
        if beta(k, 8) != 4:
            problems.append(("beta8", k))
        for i in range(10):
            for j in range(10):
                if beta(k, i + j) != beta(k, i) + beta(k - i, j):
                    problems.append(("telescope", k, i, j))
    for e in CAT:
        for i in range(8):
            # moving up one level costs at most alpha of the new level
            if e.kappa[i] > e.kappa[(i + 1) % 8] + alpha(i + 1):
                problems.append(("monotone", e.name, i))
            if e.kappa[i].doubled % 2 != e.mu:
                problems.append(("parity", e.name, i))
        if not e.is_brieskorn:
            continue
        for p in range(e.mu, 34, 2):
            seen_allowed = False
            for q in range(1, p + 8):
                excl = ob.bounding_report(e, ob.FormSpec(p, q), CAT).status == ob.EXCLUDED
                if excl and seen_allowed:
                    problems.append(("q-monotone", e.name, p, q))
                seen_allowed |= not excl
    text = serialize(CAT)
    again = loads_catalog(text)
    if again != CAT or serialize(again) != text:
        problems.append(("round-trip",))
    report(10, not problems, f"beta, monotonicity, parity, q-monotonicity, round-trip; problems {problems[:5]}")
