"""Command-line front end.

    sheffer-dunkl gamma --nu -1/2 --max 5
    sheffer-dunkl sequence --family truncated --nu 0 -N 6 --format json
    sheffer-dunkl verify-thorne --family euler --nu 1/4 --n-max 8
    sheffer-dunkl verify-sheffer --family truncated --nu 1/4 --n-max 8
    sheffer-dunkl moments --family bernoulli --nu 0 -N 8
    sheffer-dunkl besselk-check --density besselK_signed --nu -3/4 --n-max 8

Exit status: 0 on success, 1 when a verification fails (the report is still
written), 2 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import ShefferDunklError
from .moments import (
    auxiliary_F,
    sheffer_moments,
    sheffer_reconstruct,
    thorne_measure,
    thorne_verify,
)
from .numeric import NUMERIC_DENSITIES, DensityEval, Quadrature, crosscheck_moments
from .rational import DunklParam, format_rational, gamma_factorial, to_rational
from .series import default_order
from .sheffer import FAMILIES, generate_sequence, generating_moments, preset_family

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nu(text: str) -> DunklParam:
    try:
        value = to_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse nu = {text!r}; use an integer or p/q") from None
    if value <= -1:
        raise UsageError(f"nu must be > -1, got {text}")
    return DunklParam(value)


def _count(args, name: str) -> int:
    n = getattr(args, name)
    if n is None:
        n = args.order
    if n < 0:
        raise UsageError(f"{name} must be non-negative")
    if n > args.order:
        raise UsageError(f"{name} = {n} exceeds the configured series order {args.order}")
    return n


# -- verbs: each returns (payload, table, pretty_text, ok) -----------------------

def cmd_gamma(args):
    nu = _nu(args.nu)
    top = args.max if args.max is not None else args.order
    values = [gamma_factorial(n, nu) for n in range(top + 1)]
    payload = {"nu": format_rational(nu.nu), "gamma": [format_rational(v) for v in values]}
    table = [["n", "gamma"]] + [[n, format_rational(v)] for n, v in enumerate(values)]
    pretty = "\n".join(f"gamma({n}, {nu}) = {format_rational(v)}" for n, v in enumerate(values))
    return payload, table, pretty, True


def cmd_sequence(args):
    nu = _nu(args.nu)
    N = _count(args, "N")
    seq = generate_sequence(preset_family(args.family, nu, args.order), N)
    payload = seq.to_dict()
    table = [["n", "k", "coeff"]] + [
        [n, k, format_rational(c)] for n, p in enumerate(seq) for k, c in enumerate(p.coeffs)
    ]
    pretty = "\n".join(f"s_{n}(x) = {p}" for n, p in enumerate(seq))
    return payload, table, pretty, True


def cmd_verify_thorne(args):
    nu = _nu(args.nu)
    N = _count(args, "n_max")
    seq = generate_sequence(preset_family(args.family, nu, args.order), N)
    report = thorne_verify(thorne_measure(args.family, nu), seq)
    payload = report.to_dict()
    table = [["n", "r", "value", "expected", "pass"]] + [
        [r["n"], r["r"], r["value"], r["expected"], r["pass"]] for r in payload["pairs"]
    ]
    lines = [f"{'PASS' if r['pass'] else 'FAIL'}  n={r['n']:<3d} r={r['r']:<3d} "
             f"value={r['value']}  expected={r['expected']}" for r in payload["pairs"]]
    lines.append(f"all_pass: {report.all_pass}")
    return payload, table, "\n".join(lines), report.all_pass


def cmd_verify_sheffer(args):
    nu = _nu(args.nu)
    N = _count(args, "n_max")
    spec = preset_family(args.family, nu, args.order)
    target = generate_sequence(spec, N)
    assoc = generate_sequence(spec.associated(), N)
    omega = sheffer_moments(spec.g)
    rebuilt = sheffer_reconstruct(omega[: N + 1], assoc, spec.g)
    rows = [
        {"n": n, "reconstructed": a.to_dict()["coeffs"], "generated": b.to_dict()["coeffs"], "pass": a == b}
        for n, (a, b) in enumerate(zip(rebuilt, target))
    ]
    ok = all(r["pass"] for r in rows)
    payload = {"family": args.family, "nu": format_rational(nu.nu),
               "omega": [format_rational(w) for w in omega[: N + 1]], "rows": rows, "all_pass": ok}
    table = [["n", "reconstructed", "generated", "pass"]] + [
        [r["n"], " ".join(r["reconstructed"]), " ".join(r["generated"]), r["pass"]] for r in rows
    ]
    lines = [f"{'PASS' if a == b else 'FAIL'}  s_{n}(x) = {a}" for n, (a, b) in enumerate(zip(rebuilt, target))]
    lines.append(f"all_pass: {ok}")
    return payload, table, "\n".join(lines), ok


def cmd_moments(args):
    nu = _nu(args.nu)
    N = _count(args, "N")
    spec = preset_family(args.family, nu, args.order)
    mu = generating_moments(spec.g)[: N + 1]
    omega = sheffer_moments(spec.g)[: N + 1]
    F2pi = auxiliary_F(mu, N, nu)
    fmt = format_rational
    payload = {
        "family": args.family,
        "nu": fmt(nu.nu),
        "mu": [fmt(m) for m in mu],
        "omega": [fmt(w) for w in omega],
        "two_pi_F": {"real": [fmt(c) for c in F2pi.real.coeffs], "imag": [fmt(c) for c in F2pi.imag.coeffs]},
    }
    table = [["n", "mu", "omega", "two_pi_F_real", "two_pi_F_imag"]] + [
        [n, fmt(mu[n]), fmt(omega[n]), fmt(F2pi.real[n]), fmt(F2pi.imag[n])] for n in range(N + 1)
    ]
    pretty = "\n".join(
        f"n={n:<3d} mu={fmt(mu[n])}  omega={fmt(omega[n])}  2piF=({fmt(F2pi.real[n])}) + i({fmt(F2pi.imag[n])})"
        for n in range(N + 1))
    return payload, table, pretty, True


def cmd_besselk_check(args):
    try:
        nu = float(Fraction(args.nu.replace("−", "-")))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse nu = {args.nu!r}") from None
    if nu <= -1:
        raise UsageError(f"nu must be > -1, got {args.nu}")
    d = DensityEval(args.density, nu)
    report = crosscheck_moments(d, args.n_max, args.tol, Quadrature(rtol=args.rtol))
    payload = report.to_dict()
    table = [["n", "numeric", "target", "rel_err"]] + [
        [r.n, repr(r.numeric), repr(r.target), repr(r.rel_err)] for r in report.rows
    ]
    lines = [f"n={r.n:<3d} numeric={r.numeric:.15g}  target={r.target:.15g}  rel_err={r.rel_err:.2e}"
             for r in report.rows]
    lines.append(f"pass: {report.passed} (tol {args.tol:g})")
    return payload, table, "\n".join(lines), report.passed


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--order", type=int, default=None,
                        help="series truncation order (default $SHEFFER_DUNKL_ORDER or 16)")

    parser = argparse.ArgumentParser(prog="sheffer-dunkl", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gamma", parents=[common], help="tabulate gamma_{n,nu}")
    p.add_argument("--nu", required=True)
    p.add_argument("--max", type=int)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("sequence", parents=[common], help="generate a named family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("-N", type=int)
    p.set_defaults(func=cmd_sequence)

    for verb, func, text in (("verify-thorne", cmd_verify_thorne, "check the Thorne-type table"),
                             ("verify-sheffer", cmd_verify_sheffer, "rebuild a family from omega moments")):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("--family", choices=FAMILIES, required=True)
        p.add_argument("--nu", required=True)
        p.add_argument("--n-max", dest="n_max", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("moments", parents=[common], help="export mu, omega and 2*pi*F for a family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("-N", type=int)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("besselk-check", parents=[common], help="numeric moments of a Bessel-K density")
    p.add_argument("--density", choices=NUMERIC_DENSITIES, required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--rtol", type=float, default=1e-10, help="quadrature relative tolerance")
    p.set_defaults(func=cmd_besselk_check)
    return parser


def _render(fmt: str, payload, table, pretty) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(table)
        return buf.getvalue()
    return pretty + "\n"


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse mistakes "-1/2" for an option flag
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--nu":
            value = next(it, None)
            out.append(tok if value is None else f"--nu={value}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.order is None:
            args.order = default_order()
        if args.order < 0:
            raise UsageError("--order must be non-negative")
        payload, table, pretty, ok = args.func(args)
    except (UsageError, ShefferDunklError) as exc:
        print(f"sheffer-dunkl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(args.format, payload, table, pretty)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
