"""Batch command-line interface.

Exit codes: 0 success / feasible / holds; 1 certified-not or violation
found; 2 usage or input error; 3 numeric failure (condition loss, nonzero
remainder, internal disagreement).  Machine output goes to stdout (or
--out FILE); diagnostics go to stderr.  FREERAD_TOL overrides the default
tolerance of 1e-9.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .classify import (
    LinearBoundReport,
    Verdict,
    decide_cnd,
    decide_pd,
    linear_bound_report,
    schoenberg,
)
from .errors import (
    BadInput,
    ConditionLoss,
    ExactnessError,
    FreeradError,
    InternalDisagreement,
    NonzeroRemainder,
    NotRadial,
)
from .jsonio import (
    dumps,
    parse_atomic_measure,
    parse_moments,
    parse_payload,
    parse_radial_function,
    scalar_to_json,
    to_jsonable,
)
from .moments import (
    RadialFunction,
    atoms_from_moments,
    synthesize_phi,
    synthesize_psi,
)
from .oracle import GramReport, gram_cnd, gram_pd, mu_values, radial_convolve
from .spherical import psi_one, psi_values, s_from_z, spherical_values
from .words import Rank

NUMERIC_FAILURES = (ConditionLoss, NonzeroRemainder, InternalDisagreement, NotRadial)

TABLE_COMMANDS = {"eval-spherical", "eval-psi", "psi-one", "synthesize-phi", "synthesize-psi"}


def _default_tol() -> float:
    raw = os.environ.get("FREERAD_TOL", "1e-9")
    try:
        tol = float(raw)
    except ValueError:
        raise BadInput(f"FREERAD_TOL is not a number: {raw!r}") from None
    if tol < 0:
        raise BadInput(f"FREERAD_TOL must be >= 0, got {tol}")
    return tol


def _parse_scalar_arg(text: str, exact: bool):
    try:
        frac = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise BadInput(f"cannot parse number {text!r}") from None
    return frac if exact else float(frac)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise BadInput(f"cannot read {path}: {exc}") from None


def _load_json(path: str):
    text = _read_input(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadInput(f"{path}: invalid JSON: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freerad",
        description="Radial positive/conditionally-negative definite functions on free groups.",
    )
    parser.add_argument("--version", action="version", version=f"freerad {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, rank=False, s=False, z=False, depth=False,
            radius=False, infile=False, k=False, t=False, n=False, tol=True):
        p = sub.add_parser(name, help=help_text)
        if rank:
            p.add_argument("--rank", help="group rank: an integer >= 1 or 'inf'")
        if s:
            p.add_argument("--s", help="eigenvalue parameter (number or p/q)")
        if z:
            p.add_argument("--z", required=True, help="classical parameter z")
        if depth:
            p.add_argument("--depth", type=int, help="largest word length")
        if radius:
            p.add_argument("--radius", type=int, required=True, help="ball radius")
        if infile:
            p.add_argument("--in", dest="infile", required=True,
                           help="input JSON file ('-' for stdin)")
        if k:
            p.add_argument("--k", type=int, required=True, help="number of atoms")
        if t:
            p.add_argument("--t", required=True, help="Schoenberg time t > 0")
        if n:
            p.add_argument("--n", type=int, default=None,
                           help="largest sphere index to check")
        if tol:
            p.add_argument("--tol", type=float, default=None,
                           help="tolerance (default 1e-9; FREERAD_TOL overrides)")
        p.add_argument("--exact", action="store_true",
                       help="exact rational arithmetic; rejects irrational-required paths")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="emit JSON")
        fmt.add_argument("--csv", action="store_true", help="emit n,value CSV rows")
        p.add_argument("--out", default=None, help="write output to FILE instead of stdout")
        return p

    add("eval-spherical", "evaluate the spherical function phi_s", rank=True, s=True, depth=True)
    add("eval-psi", "evaluate psi_s = (1 - phi_s)/(1 - s)", rank=True, s=True, depth=True)
    add("psi-one", "evaluate the s = 1 family psi_1", rank=True, depth=True)
    add("synthesize-phi", "integrate spherical functions against an atomic measure",
        rank=True, depth=True, infile=True)
    add("synthesize-psi", "integrate the psi family against an atomic measure",
        rank=True, depth=True, infile=True)
    add("decide-pd", "decide positive definiteness from a radial function file",
        rank=True, depth=True, infile=True)
    add("decide-cnd", "decide conditional negative definiteness", rank=True, depth=True, infile=True)
    add("atoms", "recover an atomic measure from a moment sequence", infile=True, k=True)
    add("oracle-gram", "brute-force Gram PSD test over a Cayley ball",
        rank=True, radius=True, infile=True)
    add("oracle-cnd", "brute-force conditional-negativity test over a Cayley ball",
        rank=True, radius=True, infile=True)
    add("convolve-check", "verify the radial convolution algebra on a ball",
        rank=True, radius=True, s=True, n=True)
    add("bound", "linear growth bound report for a psi-role function", rank=True, infile=True)
    add("schoenberg", "exp(-t psi) transform of a psi-role function", t=True, infile=True)
    add("s-from-z", "convert the classical z parameter to the eigenvalue s", rank=True, z=True)
    return parser


def _require(args, name):
    value = getattr(args, name, None)
    if value is None:
        raise BadInput(f"--{name} is required for this command")
    return value


def _get_rank(args, fallback: Rank | None = None) -> Rank:
    if getattr(args, "rank", None) is not None:
        return Rank.parse(args.rank)
    if fallback is not None:
        return fallback
    raise BadInput("--rank is required for this command")


def _load_radial(args) -> RadialFunction:
    data = _load_json(args.infile)
    f = parse_radial_function(data, exact=args.exact)
    if getattr(args, "rank", None) is not None:
        f = RadialFunction(Rank.parse(args.rank), f.values, role=f.role)
    depth = getattr(args, "depth", None)
    if depth is not None:
        if depth > f.depth:
            raise BadInput(
                f"--depth {depth} exceeds provided values (depth {f.depth}); "
                "no extrapolation is performed"
            )
        f = RadialFunction(f.rank, f.values[: depth + 1], role=f.role)
    return f


def _table_function(args) -> RadialFunction:
    rank = _get_rank(args)
    depth = _require(args, "depth")
    if args.command == "psi-one":
        vals = [psi_one(rank, n) for n in range(depth + 1)]
        if not args.exact:
            vals = [float(v) for v in vals]
        return RadialFunction(rank, tuple(vals), role="psi")
    s = _parse_scalar_arg(_require(args, "s"), args.exact)
    if args.command == "eval-spherical":
        return RadialFunction(rank, tuple(spherical_values(rank, s, depth)), role="phi")
    return RadialFunction(rank, tuple(psi_values(rank, s, depth)), role="psi")


def _run_convolve_check(args, tol: float):
    rank = _get_rank(args)
    radius = args.radius
    top = args.n if args.n is not None else radius - 1
    if top < 1 or top > radius - 1:
        raise BadInput(f"--n must lie in [1, radius-1], got {top}")
    q = rank.q
    recurrence_dev = 0.0
    for n in range(1, top + 1):
        got = radial_convolve(rank, radius, mu_values(rank, 1), mu_values(rank, n), tol=tol)
        expected = [Fraction(0)] * (n + 2)
        for i, v in enumerate(mu_values(rank, n - 1)):
            expected[i] += Fraction(1, q + 1) * v
        for i, v in enumerate(mu_values(rank, n + 1)):
            expected[i] += Fraction(q, q + 1) * v
        dev = max(abs(a - b) for a, b in zip(got, expected))
        recurrence_dev = max(recurrence_dev, float(dev))
    payload = {
        "rank": rank.json_value(),
        "radius": radius,
        "recurrence_top": top,
        "recurrence_max_dev": recurrence_dev,
    }
    eigen_dev = None
    if args.s is not None:
        s = _parse_scalar_arg(args.s, args.exact)
        table = spherical_values(rank, s, radius - 1)
        got = radial_convolve(rank, radius, mu_values(rank, 1), table, tol=tol)
        eigen_dev = max(
            abs(float(got[n] - s * table[n])) for n in range(radius - 1)
        )
        payload["eigenfunction_s"] = scalar_to_json(s)
        payload["eigenfunction_max_dev"] = eigen_dev
    worst = max(recurrence_dev, eigen_dev or 0.0)
    if worst > tol:
        raise InternalDisagreement(
            f"radial algebra check deviates by {worst:.3g} (tol {tol:g})"
        )
    text = f"radial algebra holds on ball radius {radius} (max dev {worst:.3g})"
    return payload, text, 0


def _render_text(payload, obj) -> str:
    if isinstance(obj, RadialFunction):
        return "\n".join(f"{n} {scalar_to_json(v)}" for n, v in enumerate(obj.values))
    if isinstance(obj, Verdict):
        lines = [f"{obj.status} (depth {obj.depth})"]
        if obj.moment_verdict.witness is not None:
            name, eig = obj.moment_verdict.witness
            lines.append(f"witness: {name} min eigenvalue {eig:.6g}")
        return "\n".join(lines)
    if isinstance(obj, GramReport):
        return (
            f"{obj.verdict}: dim {obj.dim}, radius {obj.radius}, "
            f"min eigenvalue {obj.min_eig:.6g}"
        )
    if isinstance(obj, LinearBoundReport):
        return (
            f"{'holds' if obj.holds else 'violated'}: "
            f"c = {scalar_to_json(obj.constant)}, a = {scalar_to_json(obj.rank_factor)}"
        )
    return json.dumps(payload)


def _emit(args, payload, obj, text: str) -> None:
    if args.json:
        body = dumps(obj) if obj is not None else json.dumps(payload, indent=2, sort_keys=True)
    elif args.csv:
        if not isinstance(obj, RadialFunction):
            raise BadInput("--csv is only available for value-table commands")
        rows = ["n,value"] + [
            f"{n},{scalar_to_json(v)}" for n, v in enumerate(obj.values)
        ]
        body = "\n".join(rows)
    else:
        body = text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _dispatch(args, tol: float):
    cmd = args.command
    if cmd in ("eval-spherical", "eval-psi", "psi-one"):
        f = _table_function(args)
        return to_jsonable(f), f, _render_text(None, f), 0
    if cmd in ("synthesize-phi", "synthesize-psi"):
        rank = _get_rank(args)
        depth = _require(args, "depth")
        measure = parse_atomic_measure(_load_json(args.infile), exact=args.exact)
        make = synthesize_phi if cmd == "synthesize-phi" else synthesize_psi
        f = make(rank, measure, depth)
        return to_jsonable(f), f, _render_text(None, f), 0
    if cmd in ("decide-pd", "decide-cnd"):
        f = _load_radial(args)
        verdict = decide_pd(f, tol) if cmd == "decide-pd" else decide_cnd(f, tol)
        code = 1 if verdict.status == "CertifiedNot" else 0
        return to_jsonable(verdict), verdict, _render_text(None, verdict), code
    if cmd == "atoms":
        m = parse_moments(_load_json(args.infile), exact=args.exact)
        if args.exact and args.k > 2:
            raise ExactnessError(
                "exact atom extraction is limited to k <= 2 (the eigenvalue "
                "step is irrational beyond that)"
            )
        measure = atoms_from_moments(m, args.k, tol)
        text = "\n".join(
            f"{scalar_to_json(s)} {scalar_to_json(w)}" for s, w in measure.atoms
        )
        return to_jsonable(measure), measure, text, 0
    if cmd in ("oracle-gram", "oracle-cnd"):
        f = _load_radial(args)
        check = gram_pd if cmd == "oracle-gram" else gram_cnd
        report = check(f.rank, args.radius, f, tol)
        code = 1 if report.verdict == "violated" else 0
        return to_jsonable(report), report, _render_text(None, report), code
    if cmd == "convolve-check":
        payload, text, code = _run_convolve_check(args, tol)
        return payload, None, text, code
    if cmd == "bound":
        f = _load_radial(args)
        report = linear_bound_report(f)
        code = 0 if report.holds else 1
        return to_jsonable(report), report, _render_text(None, report), code
    if cmd == "schoenberg":
        if args.exact:
            raise ExactnessError("exp(-t psi) is irrational; --exact is unavailable here")
        f = parse_radial_function(_load_json(args.infile), exact=False)
        t = _parse_scalar_arg(args.t, exact=False)
        out = schoenberg(f, t)
        return to_jsonable(out), out, _render_text(None, out), 0
    if cmd == "s-from-z":
        rank = _get_rank(args)
        z = _parse_scalar_arg(args.z, args.exact)
        s = s_from_z(rank, z)
        payload = {"rank": rank.json_value(), "z": scalar_to_json(z), "s": scalar_to_json(s)}
        return payload, None, str(scalar_to_json(s)), 0
    raise BadInput(f"unknown command {cmd!r}")


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = args.tol if getattr(args, "tol", None) is not None else _default_tol()
        payload, obj, text, code = _dispatch(args, tol)
        _emit(args, payload, obj, text)
        return code
    except NUMERIC_FAILURES as exc:
        print(f"freerad: numeric failure: {exc}", file=sys.stderr)
        return 3
    except FreeradError as exc:
        print(f"freerad: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
