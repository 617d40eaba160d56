"""Catalog of homology spheres: S^3 and the Brieskorn families +-Sigma(2,3,r).

Brieskorn entries are stored once per family and orientation; kappa-o does not
depend on ``n``. :func:`parse_manifold` resolves a concrete name such as
``-Sigma(2,3,11)`` to its family entry with ``n`` filled in.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from math import gcd
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple

from .kappa import HalfInt, ModelSpace, SpectrumClass, kappa_table

FAMILIES = ("S3", "B12nMinus1", "B12nMinus5", "B12nPlus1", "B12nPlus5")
SPLIT_STATUSES = ("yes", "no", "unknown")

# r = 12n + offset, keyed by r mod 12
_FAMILY_OF_RESIDUE = {11: ("B12nMinus1", -1), 7: ("B12nMinus5", -5), 1: ("B12nPlus1", 1), 5: ("B12nPlus5", 5)}
_OFFSET = {fam: off for fam, off in _FAMILY_OF_RESIDUE.values()}

# (family, orientation) -> (model, b, mu_bar, floer_split)
_FAMILY_DATA = {
    ("B12nMinus1", "+"): (ModelSpace.GTilde, HalfInt(0), 0, "unknown"),
    ("B12nMinus1", "-"): (ModelSpace.TTilde, HalfInt(2), 0, "unknown"),
    ("B12nMinus5", "+"): (ModelSpace.GTilde, HalfInt(1), 1, "unknown"),
    ("B12nMinus5", "-"): (ModelSpace.TTilde, HalfInt(1), -1, "unknown"),
    ("B12nPlus1", "+"): (ModelSpace.S0, HalfInt(0), 0, "yes"),
    ("B12nPlus1", "-"): (ModelSpace.S0, HalfInt(0), 0, "yes"),
    ("B12nPlus5", "+"): (ModelSpace.S0, HalfInt(-1), -1, "no"),
    ("B12nPlus5", "-"): (ModelSpace.S0, HalfInt(1), 1, "yes"),
}


class CatalogError(ValueError):
    """A catalog record or manifold name failed validation."""


@dataclass(frozen=True)
class ManifoldEntry:
    name: str
    family: str
    orientation: str
    mu: int
    spectrum: SpectrumClass
    kappa: Tuple[HalfInt, ...]
    floer_split: str
    mu_bar: Optional[int] = None
    n: Optional[int] = None

    @property
    def is_brieskorn(self) -> bool:
        return self.family != "S3"

    @property
    def key(self) -> Tuple[str, str]:
        return self.family, self.orientation

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise CatalogError(f"{self.name}: unknown family {self.family!r}")
        if self.orientation not in ("+", "-"):
            raise CatalogError(f"{self.name}: orientation must be '+' or '-', got {self.orientation!r}")
        if self.mu not in (0, 1):
            raise CatalogError(f"{self.name}: mu must be 0 or 1, got {self.mu!r}")
        if self.floer_split not in SPLIT_STATUSES:
            raise CatalogError(f"{self.name}: floer_split must be one of {SPLIT_STATUSES}, got {self.floer_split!r}")
        if len(self.kappa) != 8:
            raise CatalogError(f"{self.name}: kappa needs 8 entries, got {len(self.kappa)}")
        want = kappa_table(self.spectrum)
        for i, (have, exp) in enumerate(zip(self.kappa, want)):
            if have != exp:
                raise CatalogError(f"{self.name}: kappa[{i}] = {have} but the spectrum gives {exp}")
        for i, k in enumerate(self.kappa):
            if k.doubled % 2 != self.mu:
                raise CatalogError(f"{self.name}: 2*kappa[{i}] = {k.doubled} has the wrong parity for mu = {self.mu}")
        if self.is_brieskorn:
            model, _, mu_bar, _ = _FAMILY_DATA[self.key]
            if self.spectrum.model is not model:
                raise CatalogError(f"{self.name}: family {self.family}{self.orientation} has model {model.value}, got {self.spectrum.model.value}")
            if self.mu_bar != mu_bar:
                raise CatalogError(f"{self.name}: mu_bar must be {mu_bar} for this family, got {self.mu_bar}")
            if self.mu_bar % 2 != self.mu:
                raise CatalogError(f"{self.name}: mu_bar and mu disagree mod 2")
            if self.n is not None and (self.n < 0 or (self.n == 0 and self.family != "B12nPlus5")):
                raise CatalogError(f"{self.name}: n = {self.n} is out of range for {self.family}")
        elif self.mu_bar is not None or self.n is not None:
            raise CatalogError(f"{self.name}: S3 carries neither mu_bar nor n")


def family_name(family: str, orientation: str) -> str:
    if family == "S3":
        return "S3"
    off = _OFFSET[family]
    sign = "-" if orientation == "-" else ""
    return f"{sign}Sigma(2,3,12n{off:+d})"


def manifold_name(family: str, orientation: str, n: Optional[int]) -> str:
    if family == "S3" or n is None:
        return family_name(family, orientation)
    sign = "-" if orientation == "-" else ""
    return f"{sign}Sigma(2,3,{12 * n + _OFFSET[family]})"


def _make_entry(family: str, orientation: str) -> ManifoldEntry:
    if family == "S3":
        spec = SpectrumClass(ModelSpace.S0, 0, HalfInt(0))
        return ManifoldEntry("S3", "S3", "+", 0, spec, kappa_table(spec), "yes")
    model, b, mu_bar, split = _FAMILY_DATA[(family, orientation)]
    spec = SpectrumClass(model, 0, b)
    return ManifoldEntry(family_name(family, orientation), family, orientation, b.doubled % 2,
                         spec, kappa_table(spec), split, mu_bar)


class Catalog:
    def __init__(self, entries: Iterable[ManifoldEntry] = ()):
        self.entries: Dict[str, ManifoldEntry] = {}
        for e in entries:
            self.add(e)

    def add(self, entry: ManifoldEntry, replace_existing: bool = False) -> None:
        entry.validate()
        if entry.name in self.entries and not replace_existing:
            raise CatalogError(f"duplicate catalog name {entry.name!r}")
        self.entries[entry.name] = entry

    def __iter__(self):
        return iter(self.entries.values())

    def __len__(self):
        return len(self.entries)

    def __contains__(self, name):
        return name in self.entries

    def family_entry(self, family: str, orientation: str) -> Optional[ManifoldEntry]:
        if family == "S3":
            return self.entries.get("S3")
        return self.entries.get(family_name(family, orientation))

    def reversed(self, entry: ManifoldEntry) -> Optional[ManifoldEntry]:
        """The entry for the orientation-reversed manifold, if catalogued."""
        if entry.family == "S3":
            return self.entries.get("S3")
        flip = "-" if entry.orientation == "+" else "+"
        fam = self.family_entry(entry.family, flip)
        if fam is not None and entry.n is not None:
            fam = replace(fam, n=entry.n, name=manifold_name(fam.family, flip, entry.n))
        return fam

    def resolve(self, name: str) -> ManifoldEntry:
        name = name.strip()
        if name in self.entries:
            return self.entries[name]
        family, orientation, n = parse_name(name)
        fam = self.family_entry(family, orientation)
        if fam is None:
            raise CatalogError(f"no catalog entry for {family_name(family, orientation)}")
        return replace(fam, n=n, name=manifold_name(family, orientation, n))

    def __eq__(self, other):
        return isinstance(other, Catalog) and self.entries == other.entries


def builtin_catalog() -> Catalog:
    entries = [_make_entry("S3", "+")]
    for fam in FAMILIES[1:]:
        for o in ("+", "-"):
            entries.append(_make_entry(fam, o))
    return Catalog(entries)


_NAME_RE = re.compile(r"^\s*(-?)\s*Sigma\(\s*2\s*,\s*3\s*,\s*(\d+)\s*\)\s*$")


def parse_name(name: str) -> Tuple[str, str, Optional[int]]:
    """(family, orientation, n) for ``S3`` or ``[-]Sigma(2,3,r)``."""
    if name.strip() in ("S3", "-S3"):
        return "S3", "+", None
    m = _NAME_RE.match(name)
    if not m:
        raise CatalogError(f"cannot parse manifold name {name!r}; expected S3 or [-]Sigma(2,3,r)")
    orientation = "-" if m.group(1) else "+"
    r = int(m.group(2))
    if gcd(r, 6) != 1:
        raise CatalogError(f"Sigma(2,3,{r}) needs gcd(r,6) = 1")
    if r < 5:
        raise CatalogError(f"Sigma(2,3,{r}) is not a Brieskorn sphere in the catalog (r >= 5)")
    family, off = _FAMILY_OF_RESIDUE[r % 12]
    return family, orientation, (r - off) // 12


def parse_manifold(name: str, catalog: Optional[Catalog] = None) -> ManifoldEntry:
    return (catalog or builtin_catalog()).resolve(name)


# -- external format ----------------------------------------------------------

def entry_to_record(e: ManifoldEntry) -> dict:
    return {
        "name": e.name,
        "family": e.family,
        "n": e.n,
        "orientation": e.orientation,
        "mu": e.mu,
        "mu_bar": e.mu_bar,
        "spectrum": {"model": e.spectrum.model.value, "a": e.spectrum.a, "b_doubled": e.spectrum.b.doubled},
        "kappa_doubled": [k.doubled for k in e.kappa],
        "floer_split": e.floer_split,
    }


_RECORD_FIELDS = ("name", "family", "orientation", "mu", "spectrum", "kappa_doubled", "floer_split")


def _int_field(rec, key, where, optional=False):
    v = rec.get(key)
    if v is None and optional:
        return None
    if not isinstance(v, int) or isinstance(v, bool):
        raise CatalogError(f"{where}: field {key!r} must be an integer, got {v!r}")
    return v


def entry_from_record(rec: dict) -> ManifoldEntry:
    if not isinstance(rec, dict):
        raise CatalogError(f"catalog record must be an object, got {type(rec).__name__}")
    where = f"record {rec.get('name', '?')!r}"
    for key in _RECORD_FIELDS:
        if key not in rec:
            raise CatalogError(f"{where}: missing field {key!r}")
    if not isinstance(rec["name"], str):
        raise CatalogError(f"{where}: field 'name' must be a string")
    if rec["family"] not in FAMILIES:
        raise CatalogError(f"{where}: field 'family' has unknown tag {rec['family']!r}")
    spec = rec["spectrum"]
    if not isinstance(spec, dict):
        raise CatalogError(f"{where}: field 'spectrum' must be an object")
    for key in ("model", "a", "b_doubled"):
        if key not in spec:
            raise CatalogError(f"{where}: missing field 'spectrum.{key}'")
    try:
        model = ModelSpace(spec["model"])
    except ValueError:
        raise CatalogError(f"{where}: field 'spectrum.model' has unsupported model {spec['model']!r}") from None
    kd = rec["kappa_doubled"]
    if not isinstance(kd, list) or len(kd) != 8 or not all(isinstance(x, int) and not isinstance(x, bool) for x in kd):
        raise CatalogError(f"{where}: field 'kappa_doubled' must be a list of 8 integers")
    entry = ManifoldEntry(
        name=rec["name"],
        family=rec["family"],
        orientation=rec["orientation"],
        mu=_int_field(rec, "mu", where),
        spectrum=SpectrumClass(model, _int_field(spec, "a", where), HalfInt(_int_field(spec, "b_doubled", where))),
        kappa=tuple(HalfInt(x) for x in kd),
        floer_split=rec["floer_split"],
        mu_bar=_int_field(rec, "mu_bar", where, optional=True),
        n=_int_field(rec, "n", where, optional=True),
    )
    entry.validate()
    return entry


def serialize(catalog: Catalog) -> str:
    records = [entry_to_record(e) for e in sorted(catalog, key=lambda e: e.name)]
    return json.dumps(records, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def loads_catalog(text: str, base: Optional[Catalog] = None) -> Catalog:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog is not valid JSON: {exc}") from None
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise CatalogError("catalog must be a JSON array of entry objects")
    out = Catalog((base or builtin_catalog()).entries.values())
    for rec in data:
        out.add(entry_from_record(rec), replace_existing=True)
    return out


def load_catalog(path, base: Optional[Catalog] = None) -> Catalog:
    """Read a JSON catalog file and merge it over ``base`` (the builtin one by default)."""
    return loads_catalog(Path(path).read_text(encoding="utf-8"), base)
