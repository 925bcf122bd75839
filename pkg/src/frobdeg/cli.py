"""Command-line front end.

Exit codes: 0 success, 1 internal verification failure, 2 invalid input,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .certify import certified_degree, counter_example
from .errors import CapacityExceeded, ConstantInput, FieldTooSmall, InvalidInput, VerificationFailed
from .field import PrimeField, make_rng, parse_field
from .oracle import DEFAULT_CAPACITY, brute_g, brute_solve
from .poly import NEG_INF, format_poly, parse_poly, parse_poly_list
from .solver import (
    SolverConfig,
    charp_unbounded,
    frobenius_degree,
    lower_bound,
    solve_for,
    type_denumerant,
    upper_bound,
)

COMMANDS = ("degree", "bounds", "solve", "counterexample", "denumerant", "oracle", "charp")


@dataclass
class RunConfig:
    field: object
    command: str
    polys: list
    target: object = None
    seed: int = 0
    permute_cap: int = 5040
    capacity: int = DEFAULT_CAPACITY
    json: bool = False
    verify: bool = False
    strict: bool = False


def _default_seed() -> int:
    raw = os.environ.get("FROBDEG_SEED")
    return int(raw) if raw else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("polys", nargs="+", help="comma-separated generators, e.g. \"t^2, t^2+1\"")
    common.add_argument("--field", default="Q", help="Q, F<p> or F<p>^<k> (default Q)")
    common.add_argument("--modulus", help="irreducible modulus in u for extension fields")
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default $FROBDEG_SEED or 0)")
    common.add_argument("--permute-cap", type=int, default=5040)
    common.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--verify", action="store_true", help="re-check certificates before printing")
    common.add_argument("--strict", action="store_true", help="reject constant generators")

    parser = argparse.ArgumentParser(prog="frobdeg", description="Frobenius problem for polynomials")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("degree", parents=[common], help="compute g")
    p.add_argument("--certify", action="store_true", help="also construct a counter-example")
    sub.add_parser("bounds", parents=[common], help="lower and upper bounds for g")
    p = sub.add_parser("solve", parents=[common], help="cone witness for a target")
    p.add_argument("--target", required=True)
    p = sub.add_parser("counterexample", parents=[common], help="counter-example of degree g")
    p.add_argument("--degree", type=int, default=None, help="degree to certify (default: g)")
    p = sub.add_parser("denumerant", parents=[common], help="types of the solutions for a target")
    p.add_argument("--target", required=True)
    p = sub.add_parser("oracle", parents=[common], help="brute-force g over a finite field")
    p.add_argument("--dmax", type=int, default=None, help="highest degree scanned (default: upper bound)")
    p.add_argument("--target", help="brute-force a witness for this target instead")
    p = sub.add_parser("charp", parents=[common], help="high-degree witness when char <= n")
    p.add_argument("--target", required=True)
    p.add_argument("--min-degree", "-m", type=int, default=1)
    return parser


def _g_json(g):
    return "-inf" if g == NEG_INF else g


def _fmt(p):
    return None if p is None else format_poly(p)


def _blank(command, field) -> dict:
    return {
        "command": command,
        "field": str(field),
        "g": None,
        "lower_bound": None,
        "upper_bound": None,
        "method": None,
        "counterexample": None,
        "witness": None,
        "types": None,
        "count": None,
    }


def _not_representable(G, A, config) -> bool:
    if solve_for(G, A) is not None:
        return False
    F = A[0].field
    if F.is_finite:
        try:
            return brute_solve(G, A, config.capacity) is None
        except CapacityExceeded:
            pass
    return True


def _require_verified(ok: bool, what: str):
    if not ok:
        raise VerificationFailed(f"{what} failed re-verification")


def _run(cfg: RunConfig, args) -> dict:
    A, F = cfg.polys, cfg.field
    out = _blank(cfg.command, F)
    solver_cfg = SolverConfig(permute_cap=cfg.permute_cap, capacity=cfg.capacity)
    rng = make_rng(cfg.seed)
    if cfg.strict and any(p.degree == 0 for p in A):
        raise ConstantInput("constant generator rejected in strict mode")

    if cfg.command in ("degree", "counterexample") or (cfg.command == "oracle" and not cfg.target):
        if cfg.command == "oracle":
            d_max = args.dmax if args.dmax is not None else upper_bound(A, cfg.permute_cap)
            report = brute_g(A, d_max, capacity=cfg.capacity)
        elif cfg.command == "degree" and args.certify:
            report = certified_degree(A, rng, solver_cfg)
        elif cfg.command == "counterexample" and args.degree is not None:
            G = counter_example(A, args.degree, rng)
            out.update(g=args.degree, method="certify", counterexample=_fmt(G))
            if cfg.verify:
                _require_verified(_not_representable(G, A, solver_cfg), "counter-example")
            return out
        elif cfg.command == "counterexample":
            report = certified_degree(A, rng, solver_cfg)
        else:
            report = frobenius_degree(A, solver_cfg)
        out.update(
            g=_g_json(report.g),
            lower_bound=report.lower_bound,
            upper_bound=report.upper_bound,
            method=report.method,
            probed_degrees=report.probed_degrees,
            counterexample=_fmt(report.counterexample),
        )
        if cfg.verify and report.counterexample is not None:
            G = report.counterexample
            ok = G.is_monic() and G.degree == report.g and _not_representable(G, A, solver_cfg)
            _require_verified(ok, "counter-example")
        return out

    if cfg.command == "bounds":
        out.update(
            lower_bound=lower_bound([p.degree for p in A]),
            upper_bound=upper_bound(A, cfg.permute_cap),
        )
        return out

    target = cfg.target
    out["target"] = format_poly(target)
    if cfg.command in ("solve", "oracle", "charp"):
        if cfg.command == "solve":
            w = solve_for(target, A)
        elif cfg.command == "oracle":
            w = brute_solve(target, A, cfg.capacity)
        else:
            w = charp_unbounded(A, target, args.min_degree)
        if w is not None and cfg.verify:
            _require_verified(w.is_valid(target, A), "witness")
        out["witness"] = None if w is None else [format_poly(x) for x in w.x]
        out["representable"] = w is not None
        return out

    if cfg.command == "denumerant":
        den = type_denumerant(target, A)
        out.update(
            types=[["-inf" if e == NEG_INF else e for e in T.entries] for T in den.types],
            count=den.count,
        )
        if den.dim2 is not None:
            out.update(C=den.dim2.C, chi_AB=den.dim2.chi_AB, chi_BA=den.dim2.chi_BA)
        return out
    raise InvalidInput(f"unknown command {cfg.command}")


def _text(out: dict) -> str:
    lines = []
    if out["g"] is not None:
        lines.append(f"g = {out['g']}")
    if out["lower_bound"] is not None or out["upper_bound"] is not None:
        lines.append(f"bounds: {out['lower_bound']} <= g <= {out['upper_bound']}")
    if out["method"]:
        lines.append(f"method: {out['method']}")
    if out.get("probed_degrees"):
        lines.append("probed degrees: " + ", ".join(map(str, out["probed_degrees"])))
    if out["counterexample"] is not None:
        lines.append(f"counterexample: {out['counterexample']}")
    if "target" in out:
        lines.append(f"target: {out['target']}")
    if "representable" in out:
        if out["witness"] is None:
            lines.append("not representable")
        else:
            lines.extend(f"x{i + 1} = {x}" for i, x in enumerate(out["witness"]))
    if out["types"] is not None:
        lines.append(f"types ({out['count']}):")
        lines.extend("  (" + ", ".join(map(str, T)) + ")" for T in out["types"])
    if "C" in out:
        lines.append(f"C = {out['C']}, chi_AB = {out['chi_AB']}, chi_BA = {out['chi_BA']}")
    return "\n".join(lines)


def _config(args) -> RunConfig:
    modulus = None
    if args.modulus:
        p = int(args.field.strip()[1:].split("^")[0])
        modulus = parse_poly(args.modulus, PrimeField(p), var="u").coeffs
    field = parse_field(args.field, modulus)
    polys = parse_poly_list(",".join(args.polys), field)
    target = parse_poly(args.target, field) if getattr(args, "target", None) else None
    return RunConfig(
        field=field,
        command=args.command,
        polys=polys,
        target=target,
        seed=args.seed if args.seed is not None else _default_seed(),
        permute_cap=args.permute_cap,
        capacity=args.capacity,
        json=args.json,
        verify=args.verify,
        strict=args.strict,
    )


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        out = _run(cfg, args)
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidInput, FieldTooSmall, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.json:
        print(json.dumps(out, sort_keys=True), file=stdout)
    else:
        print(_text(out), file=stdout)
    return 0


def main():
    sys.exit(run())
