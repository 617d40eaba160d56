"""Command-line front end.

Exit codes: 0 on success (any verdict, including not-applicable routes),
1 on usage errors, 2 on validation or consistency failures.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional

from . import obstruction as ob
from .catalog import Catalog, builtin_catalog, load_catalog
from .config import EngineConfig
from .kappa import HalfInt

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


# argparse treats "-Sigma(...)" as an option; shield such names while parsing
_NEG_NAME = re.compile(r"^-(Sigma\(|S3$)")
_SHIELD = "\x00"


def _shield(argv: List[str]) -> List[str]:
    return [_SHIELD + a if _NEG_NAME.match(a) else a for a in argv]


def _manifold(text: str) -> str:
    return text[1:] if text.startswith(_SHIELD) else text


def _jsonable(x):
    if isinstance(x, HalfInt):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _cert_dict(c: ob.Certificate) -> dict:
    return {"route": c.route, "k": c.k, "lhs": c.lhs, "rhs": c.rhs,
            "narrative": c.narrative, "details": c.details}


def _verdict_dict(v: ob.Verdict) -> dict:
    return {"route": v.route, "status": v.status, "reason": v.reason,
            "certificates": [_cert_dict(c) for c in v.certificates]}


def _route_label(c: ob.Certificate) -> str:
    via = c.details.get("via")
    return f"{c.route}/{via}" if via else c.route


def _render_verdict_text(v: ob.Verdict, indent: str = "  ") -> List[str]:
    head = f"{indent}{v.route}: {v.status}"
    if v.reason:
        head += f" ({v.reason})"
    lines = [head]
    for c in v.certificates:
        lines.append(f"{indent}  [{_route_label(c)}] {c.narrative}")
    return lines


# -- subcommands --------------------------------------------------------------

def cmd_kappa(args, cat: Catalog, cfg: EngineConfig):
    Y = cat.resolve(args.manifold)
    data = {"manifold": Y.name, "family": Y.family, "orientation": Y.orientation, "n": Y.n,
            "mu": Y.mu, "mu_bar": Y.mu_bar, "floer_split": Y.floer_split,
            "spectrum": {"model": Y.spectrum.model.value, "a": Y.spectrum.a, "b": Y.spectrum.b},
            "kappa": list(Y.kappa)}
    text = [f"{Y.name}  (family {Y.family}{Y.orientation})",
            f"  mu = {Y.mu}, mu_bar = {'-' if Y.mu_bar is None else Y.mu_bar}, Floer KO_G-split: {Y.floer_split}",
            f"  spectrum [({Y.spectrum.model.value}, {Y.spectrum.a}, {Y.spectrum.b})]",
            "  kappa_0..7: " + ", ".join(str(k) for k in Y.kappa)]
    return data, text


def cmd_check_bounding(args, cat, cfg):
    Y = cat.resolve(args.manifold)
    rep = ob.bounding_report(Y, ob.FormSpec(args.p, args.q), cat)
    data = {"manifold": Y.name, "p": args.p, "q": args.q, "status": rep.status,
            "routes": {k: _verdict_dict(v) for k, v in rep.routes.items()}}
    text = [f"{Y.name} bounding {rep.form}: {rep.status}"]
    for v in rep.routes.values():
        text += _render_verdict_text(v)
    return data, text


def cmd_check_cobordism(args, cat, cfg):
    Y0, Y1 = cat.resolve(args.y0), cat.resolve(args.y1)
    form = ob.FormSpec(args.p, args.q)
    routes = {ob.THM_1_6: ob.check_thm_1_6(Y0, Y1, form)}
    if form.q > 0:
        routes[ob.THM_1_11] = ob.check_thm_1_11(Y0, Y1, form)
    status = ob.EXCLUDED if any(v.excluded for v in routes.values()) else ob.ALLOWED
    data = {"y0": Y0.name, "y1": Y1.name, "p": args.p, "q": args.q, "status": status,
            "routes": {k: _verdict_dict(v) for k, v in routes.items()}}
    text = [f"cobordism {Y0.name} -> {Y1.name} with {form}: {status}"]
    for v in routes.values():
        text += _render_verdict_text(v)
    return data, text


def cmd_bound_table(args, cat, cfg):
    Y = cat.resolve(args.manifold)
    row = {m: ob.best_bound(Y, m, cat, cfg.representatives) for m in range(Y.mu, 8, 2)}
    data = {"manifold": Y.name, "bounds": row}
    text = [f"{Y.name}: q - p >= c_m for p = m mod 8, p > 1"]
    text += [f"  m={m}: {c}" for m, c in row.items()]
    return data, text


def cmd_table(args, cat, cfg):
    table = ob.bound_table(cat)
    data = {"table": table}
    text = []
    for parity in (0, 1):
        ms = list(range(parity, 8, 2))
        text.append(f"{'':<20}" + "".join(f"m={m:<4}" for m in ms))
        for name, row in table.items():
            if list(row) == ms:
                text.append(f"{name:<20}" + "".join(f"{row[m]:<6}" for m in ms))
    return data, text


def cmd_closed(args, cat, cfg):
    form = ob.FormSpec(args.p, args.q)
    v = ob.closed_check(form)
    data = {"p": args.p, "q": args.q, **_verdict_dict(v), "threshold_check": ob.closed_oracle(form)}
    text = [f"closed spin manifold with {form}: {v.status}"]
    text += [f"  [{_route_label(c)}] {c.narrative}" for c in v.certificates]
    return data, text


def cmd_verify_prop31(args, cat, cfg):
    bound = cfg.h_degree_bound if args.h_degree_bound is None else args.h_degree_bound
    try:
        c = ob.prop31_certify(args.d, args.k, args.l, args.lprime, bound)
    except ob.NotApplicableError as exc:
        data = {"status": ob.NOT_APPLICABLE, "reason": str(exc)}
        return data, [f"{ob.SPHERE}: {ob.NOT_APPLICABLE} ({exc})"]
    data = {"status": "certified", **_cert_dict(c)}
    text = [f"certified: {c.narrative}"]
    text += [f"  {k}: {v}" for k, v in c.details.items()]
    return data, text


def cmd_selftest(args, cat, cfg):
    from .selftest import run_all, split_checks
    results = run_all() + split_checks(min(cfg.max_degree, 12))
    ok = all(r[1] for r in results)
    data = {"ok": ok, "checks": [{"name": n, "ok": r, "detail": d} for n, r, d in results]}
    text = [f"{'PASS' if r else 'FAIL'}  {n}" + (f"  ({d})" if d else "") for n, r, d in results]
    text.append(f"{sum(r[1] for r in results)}/{len(results)} checks passed")
    return data, text, (EXIT_OK if ok else EXIT_INVALID)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pinko", description="Pin(2)-equivariant KO-theory obstruction engine")
    p.add_argument("--catalog", metavar="FILE", help="JSON catalog merged over the builtin one")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--max-degree", type=int, default=EngineConfig.max_degree,
                   help="truncation degree for split-membership solves")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("kappa", help="kappa-o row and invariants of a manifold")
    s.add_argument("manifold", type=_manifold)
    s.set_defaults(func=cmd_kappa)

    s = sub.add_parser("check-bounding", help="can the manifold bound p(-E8) + qH?")
    s.add_argument("manifold", type=_manifold)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_check_bounding)

    s = sub.add_parser("check-cobordism", help="spin cobordism Y0 -> Y1 with form p(-E8) + qH")
    s.add_argument("y0", type=_manifold)
    s.add_argument("y1", type=_manifold)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_check_cobordism)

    s = sub.add_parser("bound-table", help="constants c_m for one manifold")
    s.add_argument("manifold", type=_manifold)
    s.set_defaults(func=cmd_bound_table)

    s = sub.add_parser("table", help="constants c_m for all Brieskorn families")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("closed", help="closed spin manifold with form p(-E8) + qH")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_closed)

    s = sub.add_parser("verify-prop31", help="certify the Adams-operation obstruction")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--lprime", type=int, required=True)
    s.add_argument("--h-degree-bound", type=int, default=None)
    s.set_defaults(func=cmd_verify_prop31)

    s = sub.add_parser("selftest", help="run the internal relation and property checks")
    s.set_defaults(func=cmd_selftest)
    return p


def run_cli(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_shield(list(sys.argv[1:] if argv is None else argv)))
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        cfg = EngineConfig(max_degree=args.max_degree)
        cat = load_catalog(args.catalog) if args.catalog else builtin_catalog()
        res = args.func(args, cat, cfg)
    except ValueError as exc:
        # InputError, CatalogError and bad configurations
        return _fail(args, err, out, type(exc).__name__, str(exc))
    except (ob.ConsistencyError, OSError) as exc:
        return _fail(args, err, out, type(exc).__name__, str(exc))
    data, text = res[0], res[1]
    code = res[2] if len(res) > 2 else EXIT_OK
    if args.format == "machine":
        out.write(json.dumps({"command": args.command, "result": _jsonable(data)}, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text) + "\n")
    return code


def _fail(args, err, out, kind, msg) -> int:
    if args.format == "machine":
        out.write(json.dumps({"command": args.command, "error": {"kind": kind, "message": msg}}, sort_keys=True) + "\n")
    else:
        print(f"pinko: {kind}: {msg}", file=err)
    return EXIT_INVALID


def main(argv: Optional[List[str]] = None) -> int:
    return run_cli(argv)


__all__ = ["run_cli", "main", "build_parser"]
