"""Exclusion routes for spin 4-manifolds with intersection form p(-E8) + q*hyperbolic.

Every route returns a :class:`Verdict`. ``Excluded`` carries certificates
whose ``lhs``/``rhs`` are the two sides of the violated inequality;
``NotApplicable`` means the route's hypotheses fail and says nothing about
the form. Ill-posed inputs (wrong parity, negative counts) raise
:class:`InputError`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .catalog import Catalog, ManifoldEntry, builtin_catalog
from .kappa import HalfInt, ModelSpace, beta, h_value
from .ko_graded import act, gamma, mul_gamma
from .rep_ring import A, D, H, K, ONE, RepRingElem, VirtualRep, phi0, psi3, theta3

ALLOWED = "Allowed"
EXCLUDED = "Excluded"
NOT_APPLICABLE = "NotApplicable"

THM_1_6 = "Thm1_6"
THM_1_11 = "Thm1_11"
COR_1_12 = "Cor1_12"
SPHERE = "SphereProp31"
FF = "FukumotoFuruta"
CLOSED = "Closed"

# (mu(Y0), p mod 4) pairs that use the first form of the cobordism inequality
_SAME_INDEX_CASES = {(0, 0), (0, 3), (1, 0), (1, 1)}


class InputError(ValueError):
    """The question is ill-posed (no such spin manifold for trivial reasons)."""


class NotApplicableError(ValueError):
    """A route's hypotheses fail."""


class ConsistencyError(AssertionError):
    """An internal cross-check failed; the engine refuses to answer."""


@dataclass(frozen=True)
class FormSpec:
    p: int
    q: int

    def __post_init__(self):
        for name in ("p", "q"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InputError(f"{name} must be a nonnegative integer, got {v!r}")

    def __str__(self):
        return f"{self.p}(-E8) + {self.q}H"


@dataclass(frozen=True)
class Certificate:
    route: str
    k: Optional[int]
    lhs: Optional[HalfInt]
    rhs: Optional[HalfInt]
    narrative: str
    details: dict = field(default_factory=dict, compare=False, hash=False)


@dataclass(frozen=True)
class Verdict:
    status: str
    certificates: Tuple[Certificate, ...] = ()
    route: str = ""
    reason: str = ""

    def __post_init__(self):
        if self.status == EXCLUDED and not self.certificates:
            raise ConsistencyError("an Excluded verdict needs a certificate")

    @property
    def excluded(self) -> bool:
        return self.status == EXCLUDED


def _not_applicable(route: str, reason: str) -> Verdict:
    return Verdict(NOT_APPLICABLE, (), route, reason)


def _same_parity(lhs: HalfInt, rhs: HalfInt) -> None:
    if (lhs.doubled - rhs.doubled) % 2:
        raise ConsistencyError(f"inequality sides {lhs} and {rhs} are not both integral or both half-integral")


def _check_parity(p: int, mu: int, what: str) -> None:
    if p % 2 != mu % 2:
        raise InputError(f"p = {p} has the wrong parity for {what} (needs p = {mu} mod 2)")


def _kap(Y: ManifoldEntry, i: int) -> HalfInt:
    return Y.kappa[i % 8]


# -- cobordism inequalities ---------------------------------------------------

def _cobordism_sides(Y0, Y1, form, k) -> Tuple[HalfInt, HalfInt, bool]:
    l, m = divmod(form.p, 4)
    same = (Y0.mu, m) in _SAME_INDEX_CASES
    h = h_value(Y0.mu, m)
    if same:
        lhs = _kap(Y0, k) + 2 * l + h
        rhs = _kap(Y1, k + form.q) + beta(k + form.q, form.q)
    else:
        lhs = _kap(Y0, k + 4) + 2 * l + h
        rhs = _kap(Y1, k + form.q) + beta(k + form.q, 4 + form.q)
    _same_parity(lhs, rhs)
    return lhs, rhs, same


def check_thm_1_6(Y0: ManifoldEntry, Y1: ManifoldEntry, form: FormSpec, ks=range(8)) -> Verdict:
    """Cobordism inequalities for every suspension index k (scan order is irrelevant)."""
    _check_parity(form.p, Y0.mu + Y1.mu, f"a cobordism {Y0.name} -> {Y1.name}")
    certs = []
    for k in ks:
        lhs, rhs, same = _cobordism_sides(Y0, Y1, form, k)
        if lhs > rhs:
            i0 = k % 8 if same else (k + 4) % 8
            certs.append(Certificate(
                THM_1_6, k % 8, lhs, rhs,
                f"k={k % 8}: kappa_{i0}({Y0.name}) + 2l + h = {lhs} > "
                f"kappa_{(k + form.q) % 8}({Y1.name}) + beta = {rhs}",
                {"case": "i" if same else "ii"}))
    certs.sort(key=lambda c: c.k)
    return Verdict(EXCLUDED if certs else ALLOWED, tuple(certs), THM_1_6)


def check_thm_1_11(Y0: ManifoldEntry, Y1: ManifoldEntry, form: FormSpec) -> Verdict:
    """The sharpened inequality at one index when Y0 is Floer KO_G-split."""
    if form.q <= 0:
        raise InputError("the split refinement needs q > 0")
    _check_parity(form.p, Y0.mu + Y1.mu, f"a cobordism {Y0.name} -> {Y1.name}")
    if Y0.floer_split != "yes":
        return _not_applicable(THM_1_11, f"{Y0.name} is not known to be Floer KO_G-split (status {Y0.floer_split})")
    m = form.p % 4
    k = 4 if (Y0.mu, m) in _SAME_INDEX_CASES else 0
    lhs, rhs, _ = _cobordism_sides(Y0, Y1, form, k)
    lhs = lhs + 1
    if lhs > rhs:
        cert = Certificate(THM_1_11, k, lhs, rhs,
                           f"k={k}: split sharpening {lhs} > {rhs} for {Y0.name} -> {Y1.name}")
        return Verdict(EXCLUDED, (cert,), THM_1_11)
    return Verdict(ALLOWED, (), THM_1_11)


def bounding_sides(Y: ManifoldEntry, form: FormSpec) -> Tuple[int, HalfInt, HalfInt]:
    """(index, lhs, rhs) of the strict bounding inequality lhs < rhs."""
    l, m = divmod(form.p, 4)
    q = form.q
    if m == 0:
        i, lhs, rhs = 4 + q, HalfInt.of(2 * l), _kap(Y, 4 + q) + beta(4 + q, q)
    elif m == 1:
        i, lhs, rhs = q, HalfInt.of(2 * l) + HalfInt(5), _kap(Y, q) + beta(q, 4 + q)
    elif m == 2:
        i, lhs, rhs = q, HalfInt.of(2 * l + 3), _kap(Y, q) + beta(q, 4 + q)
    else:
        i, lhs, rhs = 4 + q, HalfInt.of(2 * l) + HalfInt(3), _kap(Y, 4 + q) + beta(4 + q, q)
    _same_parity(lhs, rhs)
    return i % 8, lhs, rhs


def check_bounding(Y: ManifoldEntry, form: FormSpec) -> Verdict:
    """Strict kappa-o inequality for a spin W with boundary Y."""
    if form.q <= 0:
        raise InputError("the bounding inequality needs q > 0")
    _check_parity(form.p, Y.mu, f"a spin filling of {Y.name}")
    i, lhs, rhs = bounding_sides(Y, form)
    if lhs < rhs:
        return Verdict(ALLOWED, (), COR_1_12)
    cert = Certificate(COR_1_12, i, lhs, rhs,
                       f"p = 4*{form.p // 4}+{form.p % 4}: needs {lhs} < kappa_{i}({Y.name}) + beta = {rhs}")
    return Verdict(EXCLUDED, (cert,), COR_1_12)


# -- sphere-model route -------------------------------------------------------

def route_sphere_prop31(Y: ManifoldEntry, form: FormSpec, catalog: Optional[Catalog] = None) -> Verdict:
    """Adams-operation obstruction when the reversed boundary has the sphere model.

    Applies when p/2 - b0 = 4*lt with lt > 0, where the reversed entry is
    [(S^0, 0, b0)]; then every q <= 8*lt + 2 is excluded (larger forms reduce
    to q = 8*lt + 2 by removing S^2 x S^2 summands).
    """
    _check_parity(form.p, Y.mu, f"a spin filling of {Y.name}")
    rev = (catalog or builtin_catalog()).reversed(Y)
    if rev is None:
        return _not_applicable(SPHERE, f"no catalog entry for the reverse of {Y.name}")
    if rev.spectrum.model is not ModelSpace.S0 or rev.spectrum.a != 0:
        return _not_applicable(SPHERE, f"{rev.name} does not have the sphere model")
    b0 = rev.spectrum.b
    twice = form.p - b0.doubled  # 2 * (p/2 - b0)
    if twice <= 0 or twice % 8:
        return _not_applicable(SPHERE, f"p/2 - b0 = {HalfInt(twice)} is not a positive multiple of 4")
    lt = twice // 8
    bound = 8 * lt + 2
    if form.q > bound:
        return Verdict(ALLOWED, (), SPHERE, f"q = {form.q} > 8*{lt}+2")
    cert = Certificate(SPHERE, None, HalfInt.of(form.q), HalfInt.of(bound),
                       f"S(-Y) = [(S^0,0,{b0})], p/2 - b0 = 4*{lt}; q = {form.q} <= {bound} "
                       f"reduces to a map ruled out by the Adams-operation argument with l = {lt}",
                       {"l": lt, "b0": str(b0)})
    return Verdict(EXCLUDED, (cert,), SPHERE)


def _theta_pair(d, k, l, lp):
    v1 = VirtualRep(8 * d, 8 * (l + lp + 1), 2 * k)
    v2 = VirtualRep(8 * d, 8 * lp + 8, 4 * l + 2 * k)
    return theta3(v1), theta3(v2)


def _gamma2_image(r: RepRingElem):
    return act(r, mul_gamma(gamma()))


def _f2_nullspace(columns: List[tuple], nvars: int) -> List[List[int]]:
    """Basis of the kernel of the F2 matrix whose columns are bit tuples."""
    width = max((len(c) for c in columns), default=0)
    rows = [[(columns[j][i] if i < len(columns[j]) else 0) & 1 for j in range(nvars)] for i in range(width)]
    pivots, r = [], 0
    for col in range(nvars):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(nvars) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * nvars
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = rows[i][f]
        basis.append(v)
    return basis


def prop31_certify(d: int, k: int, l: int, lp: int, h_degree_bound: int = 12) -> Certificate:
    """Certify that no equivariant map of the given shape exists.

    With alpha = p + A*h(A), the Adams relation on gamma^2 forces h = 0 and p
    even; evaluating phi0 on the degree relation then forces p = +-1.
    """
    if min(d, k, l, lp) < 0:
        raise InputError("prop31 parameters must be nonnegative")
    if l == 0:
        raise NotApplicableError("the sphere-model argument needs l > 0")
    if h_degree_bound < 0:
        raise InputError("h_degree_bound must be nonnegative")
    theta1, theta2 = _theta_pair(d, k, l, lp)
    steps = {"theta1": str(theta1), "theta2": str(theta2)}
    if phi0(theta1) != phi0(theta2) or phi0(theta1) != 3 ** (4 * d):
        raise ConsistencyError("theta classes do not have matching phi0 = 3^(4d)")
    # unknowns: p, then h_j multiplying A^(j+1)
    exprs = [theta2 - theta1]
    for j in range(h_degree_bound):
        mono = A ** (j + 1)
        exprs.append(theta2 * psi3(mono) - theta1 * mono)
    images = [_gamma2_image(e) for e in exprs]
    if any(img.payload.n for img in images):
        raise ConsistencyError("free part of the Adams relation on gamma^2 does not vanish")
    cols = [img.payload.t for img in images]
    kernel = _f2_nullspace(cols, len(cols))
    steps["rank"] = len(cols) - len(kernel)
    steps["unknowns"] = len(cols)
    if kernel:
        raise ConsistencyError(f"Adams relation on gamma^2 leaves {len(kernel)} free parameters; expected h = 0, p even")
    # endgame: phi0 of G^(2l+k) (8(1-D))^(l'+1) p = G^k (8(1-D))^(l+l'+1) u with phi0(u) = +-1
    G = K - 2 * H + D + 5
    E = 8 * (ONE - D)
    left = phi0(G ** (2 * l + k) * E ** (lp + 1))
    right = phi0(G ** k * E ** (l + lp + 1))
    sols = []
    for sign in (1, -1):
        num = sign * right
        if num % left:
            raise ConsistencyError(f"phi0 endgame has no integral p for unit sign {sign}")
        sols.append(num // left)
    if any(abs(s) != 1 for s in sols):
        raise ConsistencyError(f"phi0 endgame gives p in {sols}, expected +-1")
    steps.update({"phi0_left_coeff": left, "phi0_right": right, "p_solutions": sols})
    return Certificate(
        SPHERE, k, HalfInt.of(abs(sols[0])), HalfInt.of(0),
        f"(d,k,l,l')=({d},{k},{l},{lp}): gamma^2 relation has only h=0, p even; "
        f"phi0 endgame {left}*p = +-{right} gives p = +-1, contradicting evenness",
        steps)


# -- Fukumoto-Furuta route ----------------------------------------------------

def route_fukumoto_furuta(Y: ManifoldEntry, form: FormSpec) -> Verdict:
    """q - p >= offset + mu_bar whenever 0 < p + mu_bar is divisible by 8."""
    _check_parity(form.p, Y.mu, f"a spin filling of {Y.name}")
    if Y.mu_bar is None:
        return _not_applicable(FF, f"{Y.name} has no mu_bar")
    offset = 3 if Y.orientation == "-" else 2
    s = form.p + Y.mu_bar
    if s <= 0 or s % 8:
        return _not_applicable(FF, f"p + mu_bar = {s} is not a positive multiple of 8")
    need = offset + Y.mu_bar
    if form.q - form.p >= need:
        return Verdict(ALLOWED, (), FF)
    cert = Certificate(FF, None, HalfInt.of(form.q - form.p), HalfInt.of(need),
                       f"p + mu_bar = {s}: needs q - p = {form.q - form.p} >= {offset} + {Y.mu_bar}")
    return Verdict(EXCLUDED, (cert,), FF)


# -- combinations -------------------------------------------------------------

@dataclass(frozen=True)
class BoundingReport:
    manifold: str
    form: FormSpec
    routes: Dict[str, Verdict]

    @property
    def status(self) -> str:
        return EXCLUDED if any(v.excluded for v in self.routes.values()) else ALLOWED

    @property
    def certificates(self) -> Tuple[Certificate, ...]:
        return tuple(c for v in self.routes.values() for c in v.certificates)


def bounding_report(Y: ManifoldEntry, form: FormSpec, catalog: Optional[Catalog] = None) -> BoundingReport:
    """All bounding routes; every excluding route keeps its certificate."""
    routes = {
        COR_1_12: check_bounding(Y, form),
        SPHERE: route_sphere_prop31(Y, form, catalog),
        FF: route_fukumoto_furuta(Y, form),
    }
    return BoundingReport(Y.name, form, routes)


def closed_check(form: FormSpec) -> Verdict:
    """Closed spin manifolds, derived from the bounding routes with Y = S^3."""
    if form.p % 2:
        raise InputError(f"p = {form.p} is odd; closed spin forms have p even")
    if form.q <= 0:
        raise InputError("closed_check needs q > 0")
    s3 = builtin_catalog().resolve("S3")
    certs = []
    for v in (check_bounding(s3, form), route_sphere_prop31(s3, form)):
        for c in v.certificates:
            certs.append(Certificate(CLOSED, c.k, c.lhs, c.rhs, c.narrative, {"via": c.route, **c.details}))
    return Verdict(EXCLUDED if certs else ALLOWED, tuple(certs), CLOSED)


def closed_oracle_min_q(p: int) -> int:
    """Smallest q not excluded for closed forms, by explicit residue thresholds."""
    if p % 2:
        raise InputError("p must be even")
    r = p % 8
    q = p + {0: 1, 2: 1, 4: 2, 6: 3}[r]
    if r == 0 and p > 0:
        q = max(q, p + 3)
    return q


def closed_oracle(form: FormSpec) -> str:
    return EXCLUDED if form.q < closed_oracle_min_q(form.p) else ALLOWED


def best_bound(Y: ManifoldEntry, m: int, catalog: Optional[Catalog] = None, reps: int = 4) -> int:
    """Constant c with q - p >= c for fillings of Y with p = m mod 8, p > 1."""
    if m not in range(8):
        raise InputError(f"m must be in 0..7, got {m}")
    _check_parity(m, Y.mu, f"a spin filling of {Y.name}")
    found = {}
    for t in range(reps):
        p = m + 8 * t
        if p <= 1:
            continue
        d = 1 - p
        while bounding_report(Y, FormSpec(p, p + d), catalog).status == EXCLUDED:
            d += 1
        found[p] = d
    values = set(found.values())
    if len(values) != 1:
        raise ConsistencyError(f"bound for {Y.name}, m={m} depends on p: {found}")
    return values.pop()


BOUND_TABLE_ROWS = (
    ("B12nMinus1", "+"), ("B12nMinus1", "-"), ("B12nPlus1", "+"), ("B12nPlus1", "-"),
    ("B12nMinus5", "+"), ("B12nMinus5", "-"), ("B12nPlus5", "+"), ("B12nPlus5", "-"),
)


def bound_row(Y: ManifoldEntry, catalog: Optional[Catalog] = None) -> Dict[int, int]:
    return {m: best_bound(Y, m, catalog) for m in range(Y.mu, 8, 2)}


def bound_table(catalog: Optional[Catalog] = None) -> Dict[str, Dict[int, int]]:
    """c_m for every Brieskorn family, keyed by family name then m."""
    catalog = catalog or builtin_catalog()
    out = {}
    for fam, o in BOUND_TABLE_ROWS:
        Y = catalog.family_entry(fam, o)
        out[Y.name] = bound_row(Y, catalog)
    return out


# descriptive names for the routes above
check_cobordism = check_thm_1_6
check_split_cobordism = check_thm_1_11
route_sphere_model = route_sphere_prop31
certify_sphere_map = prop31_certify
table_8_5 = bound_table
