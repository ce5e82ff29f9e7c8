"""Command-line front end: build representations, verify, simulate, export.

Exit codes: 0 all checks passed, 1 a check or dimension guard failed,
2 usage error or malformed input.  Output is deterministic JSON (sorted
keys) or CSV; no configuration files or environment variables.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

import numpy as np

from . import __version__, kitaev, representations, verifiers
from .linalg import DimensionGuardError, matrix_from_json, matrix_to_json

FAMILIES = (
    "ivanov",
    "ivanov-circular",
    "extraspecial-bell",
    "temperley-lieb",
    "jones",
    "quaternion-triple",
    "fibonacci",
)

FAMILY_CHECKS = {
    "ivanov": ("braid", "order", "conjugation"),
    "ivanov-circular": ("braid", "order"),
    "extraspecial-bell": ("braid", "order", "string", "extraspecial"),
    "temperley-lieb": ("tl",),
    "jones": ("braid", "order"),
    "quaternion-triple": ("braid", "order"),
    "fibonacci": ("braid", "order"),
}

# fibonacci generators have order 20, beyond the order cap of 16; the order
# check stays available for it but is not run by default
DEFAULT_FAMILY_CHECKS = {**FAMILY_CHECKS, "fibonacci": ("braid",)}

MATRIX_CHECKS = ("ybe", "entangling")

EXPORTS = {
    "r-gate": lambda: representations.R_GATE,
    "b-ii": lambda: representations.B_II,
    "bell-m": lambda: representations.BELL_M,
    "bell-a": lambda: representations.BELL_A,
    "bell-b": lambda: representations.BELL_B,
    "swap": lambda: representations.SWAP,
}


def _dump(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _require_n(args, parser) -> int:
    if args.n is None:
        parser.error(f"--n is required for family {args.family}")
    return args.n


def _build_family(family: str, n: int | None, tol: float):
    """Returns (rep_or_none, tl_or_none, string_or_none) for a family."""
    if family in ("ivanov", "ivanov-circular"):
        rep = representations.ivanov(n, circular=family.endswith("circular"))
        return rep, None, None
    if family == "temperley-lieb":
        return None, representations.temperley_lieb(n), None
    if family == "jones":
        tl = representations.temperley_lieb(n)
        return representations.jones_from_tl(tl, representations.JONES_A, tol), None, None
    if family == "extraspecial-bell":
        ms = representations.bell_basis_string(n)
        return representations.extraspecial_rep(ms), None, ms
    if family == "quaternion-triple":
        return representations.quaternion_triple_rep(), None, None
    if family == "fibonacci":
        return representations.fibonacci_rep(), None, None
    raise ValueError(f"unknown family {family}")


def cmd_build_rep(args, parser) -> int:
    needs_n = args.family not in ("quaternion-triple", "fibonacci")
    n = _require_n(args, parser) if needs_n else None
    try:
        rep, tl, _ = _build_family(args.family, n, args.tol)
    except (DimensionGuardError, ValueError) as exc:
        return _fail(str(exc), 1)
    payload: dict = {"version": __version__, "family": args.family, "parameters": {"n": n}}
    if tl is not None:
        payload.update(
            {
                "dim": tl[0].shape[0],
                "loop_value": math.sqrt(2.0),
                "generators": [matrix_to_json(u) for u in tl],
                "tl_residual": verifiers.check_tl_relations(tl, math.sqrt(2.0)).max_residual,
            }
        )
    else:
        report = verifiers.check_braid_relations(rep, args.tol)
        payload.update(
            {
                "strands": rep.strands,
                "dim": rep.dim,
                "circular": rep.circular,
                "generators": [matrix_to_json(g) for g in rep.generators],
                "braid_residual": report.max_residual,
            }
        )
    _dump(payload, args.out)
    return 0


def _family_reports(args, parser, checks: list[str]) -> list[verifiers.VerificationReport]:
    allowed = FAMILY_CHECKS[args.family]
    bad = [c for c in checks if c not in allowed]
    if bad:
        parser.error(f"checks {bad} not applicable to family {args.family} (allowed: {allowed})")
    needs_n = args.family not in ("quaternion-triple", "fibonacci")
    n = _require_n(args, parser) if needs_n else None
    rep, tl, ms = _build_family(args.family, n, args.tol)
    reports = []
    for check in checks:
        if check == "braid":
            reports.append(verifiers.check_braid_relations(rep, args.tol))
        elif check == "order":
            witnesses = []
            for i in range(len(rep.generators)):
                order = verifiers.generator_order(rep, i, tol=args.tol)
                witnesses.append(
                    verifiers.Witness(
                        f"generator {i}",
                        0.0 if order is not None else 1.0,
                        {"order": order if order is not None else "exceeds cap"},
                    )
                )
            reports.append(
                verifiers.VerificationReport.from_witnesses(
                    "generator-order", rep.family, {"cap": 16}, 0.0, witnesses
                )
            )
        elif check == "tl":
            reports.append(verifiers.check_tl_relations(tl, math.sqrt(2.0), args.tol))
        elif check == "string":
            reports.append(verifiers.check_majorana_string(ms, args.tol))
        elif check == "extraspecial":
            reports.append(
                verifiers.check_extraspecial(representations.string_products(ms), args.tol)
            )
        elif check == "conjugation":
            reports.append(verifiers.check_conjugation_rep(n, min(args.tol, 1e-12)))
    return reports


def _matrix_reports(args, parser, checks: list[str]) -> list[verifiers.VerificationReport]:
    bad = [c for c in checks if c not in MATRIX_CHECKS]
    if bad:
        parser.error(f"checks {bad} not applicable to --matrix (allowed: {MATRIX_CHECKS})")
    try:
        with open(args.matrix, encoding="utf-8") as fh:
            matrix = matrix_from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        parser.error(f"cannot read matrix file: {exc}")
    reports = []
    for check in checks:
        if check == "ybe":
            reports.append(verifiers.check_ybe(matrix, args.tol))
        elif check == "entangling":
            reports.append(verifiers.check_entangling(matrix))
    return reports


def cmd_verify(args, parser) -> int:
    if (args.family is None) == (args.matrix is None):
        parser.error("provide exactly one of --family or --matrix")
    checks = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else []
    try:
        if args.family:
            if not checks:
                checks = list(DEFAULT_FAMILY_CHECKS[args.family])
            reports = _family_reports(args, parser, checks)
        else:
            if not checks:
                checks = list(MATRIX_CHECKS)
            reports = _matrix_reports(args, parser, checks)
    except (DimensionGuardError, ValueError) as exc:
        return _fail(str(exc), 1)
    ok = all(r.passed for r in reports)
    payload = {
        "version": __version__,
        "source": {"family": args.family, "matrix": args.matrix, "n": args.n},
        "tolerance": args.tol,
        "checks": [r.to_dict() for r in reports],
        "pass": ok,
    }
    _dump(payload, args.out)
    return 0 if ok else 1


def _load_schedule(args, parser) -> kitaev.ThetaSchedule:
    if args.schedule:
        try:
            with open(args.schedule, encoding="utf-8") as fh:
                data = json.load(fh)
            return kitaev.ThetaSchedule(tuple(data["times"]), tuple(data["thetas"]))
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            parser.error(f"cannot read schedule file: {exc}")
    if args.fn == "linear":
        fn = lambda t: args.rate * t  # noqa: E731
    elif args.fn == "sin":
        fn = math.sin
    else:
        parser.error("provide --schedule FILE or --fn {linear,sin}")
    return kitaev.ThetaSchedule.from_function(fn, args.t0, args.t1, args.samples)


def cmd_evolve(args, parser) -> int:
    schedule = _load_schedule(args, parser)
    try:
        residual = kitaev.schrodinger_residual(schedule, args.k, args.n)
    except (DimensionGuardError, ValueError) as exc:
        return _fail(str(exc), 1)
    ok = residual <= args.tol
    payload = {
        "version": __version__,
        "n": args.n,
        "k": args.k,
        "samples": len(schedule.times),
        "dt": schedule.dt,
        "residual": residual,
        "tolerance": args.tol,
        "pass": ok,
    }
    _dump(payload, args.out)
    return 0 if ok else 1


def _parse_axis(spec: str, parser, name: str) -> list[float]:
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) == 3:
            start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
            if steps < 1:
                raise ValueError("steps must be >= 1")
            return [float(x) for x in np.linspace(start, stop, steps)]
    except ValueError as exc:
        parser.error(f"malformed {name} grid '{spec}': {exc}")
    parser.error(f"malformed {name} grid '{spec}': use VALUE or START:STOP:STEPS")


def cmd_scan_gap(args, parser) -> int:
    axis1 = _parse_axis(args.t1, parser, "--t1")
    axis2 = _parse_axis(args.t2, parser, "--t2")
    couplings = [(a, b) for a in axis1 for b in axis2]
    try:
        points = kitaev.gap_scan(args.N, args.boundary, couplings)
    except (DimensionGuardError, ValueError) as exc:
        return _fail(str(exc), 1)
    if args.format == "csv":
        lines = ["theta1_dot,theta2_dot,gap,N,boundary"]
        lines += [
            f"{p.theta1_dot!r},{p.theta2_dot!r},{p.gap!r},{p.pairs},{p.boundary}"
            for p in points
        ]
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        payload = {
            "version": __version__,
            "N": args.N,
            "boundary": args.boundary,
            "points": [p.to_dict() for p in points],
        }
        _dump(payload, args.out)
    return 0


def cmd_export(args, parser) -> int:
    matrix = EXPORTS[args.what]()
    payload = matrix_to_json(matrix)
    payload["name"] = args.what
    payload["version"] = __version__
    _dump(payload, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majorana-braids",
        description="Construct, verify and simulate Majorana braid representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-rep", help="construct a representation and emit JSON")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, help="Majorana count (or Bell pair count)")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.set_defaults(handler=cmd_build_rep)

    p = sub.add_parser("verify", help="run relation/property checks")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--matrix", help="path to a matrix JSON file")
    p.add_argument("--n", type=int)
    p.add_argument(
        "--checks",
        help="comma-separated checks: braid,order,conjugation,tl,string,extraspecial "
        "(family) or ybe,entangling (matrix); defaults to all applicable",
    )
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("evolve", help="schedule-driven Schroedinger residual")
    p.add_argument("--n", type=int, required=True, help="Majorana count")
    p.add_argument("--k", type=int, required=True, help="site index (1-based)")
    p.add_argument("--schedule", help="JSON file with {'times': [...], 'thetas': [...]}")
    p.add_argument("--fn", choices=("linear", "sin"), help="built-in schedule shape")
    p.add_argument("--rate", type=float, default=math.pi / 4, help="slope for --fn linear")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=10001)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_evolve)

    p = sub.add_parser(
        "scan-gap",
        help="excitation gap over a coupling grid",
        description="Scan the chain's excitation gap E1 - E0. "
        "CSV columns: theta1_dot,theta2_dot,gap,N,boundary.",
    )
    p.add_argument("--N", type=int, required=True, help="Majorana pair count")
    p.add_argument("--boundary", choices=("open", "periodic"), default="periodic")
    p.add_argument("--t1", required=True, help="theta_dot_1 grid: VALUE or START:STOP:STEPS")
    p.add_argument("--t2", required=True, help="theta_dot_2 grid: VALUE or START:STOP:STEPS")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_scan_gap)

    p = sub.add_parser("export", help="write a named gate as matrix JSON")
    p.add_argument("--what", required=True, choices=sorted(EXPORTS))
    p.add_argument("--out")
    p.set_defaults(handler=cmd_export)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args, parser)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
