"""Command-line front end.

Exit codes: 0 identity found / check passed, 1 proven negative answer
(no solution within bounds, not a member, mismatch), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import re
import sys
from dataclasses import dataclass

from .factsum import DegreeBounds, NoSolutionWithinBounds, synth_fact_sum
from .faulhaber import faulhaber_row
from .oracle import default_n_max, verify_closed_form
from .poly import BiPoly, UniPoly
from .polysum import membership_sz, synth_poly_sum
from .syntax import ParseError, format_canonical, parse_poly
from .weighted import (
    Constant,
    Periodic,
    PolynomialWeight,
    synth_weighted_constant,
    synth_weighted_periodic,
    synth_weighted_polynomial,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2
WEIGHTED_CHECK_UPTO = 100


class UsageError(Exception):
    pass


@dataclass
class CliResult:
    code: int
    stdout: str
    stderr: str


@dataclass
class Outcome:
    code: int
    lines: list[str]
    record: dict


def _parse(text: str, what: str = "expression") -> BiPoly:
    try:
        return parse_poly(text)
    except ParseError as exc:
        raise UsageError(f"cannot parse {what}: {exc.message} at position {exc.pos}\n  {text}\n  {' ' * exc.pos}^") from None


def _parse_uni(text: str, command: str) -> UniPoly:
    q = _parse(text)
    if not q.is_univariate():
        raise UsageError(f"{command} takes a polynomial in n only; n! is not allowed here")
    return UniPoly.from_bipoly(q)


def _record(command: str, status: str, input_, result=None, **extra) -> dict:
    rec = {"command": command, "status": status, "input": input_, "result": result}
    rec.update(extra)
    return rec


def _bounds_dict(b: DegreeBounds) -> dict:
    return {"deg_x": b.deg_x, "deg_y": b.deg_y}


def cmd_faulhaber(args) -> Outcome:
    if args.k < 1:
        raise UsageError("k must be a positive integer")
    text = format_canonical(faulhaber_row(args.k).poly())
    return Outcome(EXIT_OK, [text], _record("faulhaber", "ok", args.k, text))


def cmd_synth(args) -> Outcome:
    f = _parse_uni(args.expr, "synth")
    g = synth_poly_sum(f)
    n_max = default_n_max(f)
    report = verify_closed_form(f, g, n_max)
    assert report.ok, report
    text = format_canonical(g)
    return Outcome(EXIT_OK, [text], _record("synth", "ok", args.expr, text, verified_upto=n_max))


def cmd_synth_fact(args) -> Outcome:
    p = _parse(args.expr)
    default = DegreeBounds.default_for(p)
    deg_x = default.deg_x if args.deg_x is None else args.deg_x
    deg_y = default.deg_y if args.deg_y is None else args.deg_y
    if deg_x < 0 or deg_y < 0:
        raise UsageError("degree bounds must be nonnegative")
    bounds = DegreeBounds(deg_x, deg_y)
    result = synth_fact_sum(p, bounds)
    integral = p.has_integer_coefficients()
    if isinstance(result, NoSolutionWithinBounds):
        line = f"no-solution-within-bounds deg_x={bounds.deg_x} deg_y={bounds.deg_y}"
        rec = _record("synth-fact", "no-solution", args.expr, None, bounds=_bounds_dict(bounds),
                      integer_coefficients=integral)
        return Outcome(EXIT_NEGATIVE, [line], rec)
    text = format_canonical(result.q)
    rec = _record("synth-fact", "ok", args.expr, text, bounds=_bounds_dict(bounds),
                  verified_upto=result.verified_upto, integer_coefficients=integral)
    return Outcome(EXIT_OK, [text], rec)


def cmd_member(args) -> Outcome:
    g = _parse_uni(args.expr, "member")
    verdict = membership_sz(g)
    if verdict.accepted:
        text = format_canonical(verdict.witness_f)
        return Outcome(EXIT_OK, [f"member f = {text}"], _record("member", "ok", args.expr, text))
    reason = str(verdict.reject_reason)
    return Outcome(EXIT_NEGATIVE, [f"not-member: {reason}"],
                   _record("member", "not-member", args.expr, None, reason=reason))


def _parse_weights(spec: str):
    kind, sep, body = spec.partition(":")
    if not sep or not body.strip():
        raise UsageError(f"bad --weights {spec!r}; expected const:<c>, poly:<expr> or periodic:<c1,c2,...>")
    try:
        if kind == "const":
            return Constant(int(body))
        if kind == "periodic":
            return Periodic(tuple(int(v) for v in body.split(",")))
    except ValueError:
        raise UsageError(f"bad integer in --weights {spec!r}") from None
    if kind == "poly":
        w = _parse_uni(body, "poly weight")
        if not w.has_integer_coefficients():
            raise UsageError("polynomial weight must have integer coefficients")
        return PolynomialWeight(w)
    raise UsageError(f"unknown weight family {kind!r}")


def _weighted_check(f: UniPoly, alpha, closed) -> None:
    total = 0
    for n in range(1, WEIGHTED_CHECK_UPTO + 1):
        total += alpha(n) * f(n)
        assert closed(n) == total, f"weighted closed form fails at n={n}"


def cmd_weighted(args) -> Outcome:
    f = _parse_uni(args.expr, "weighted")
    alpha = _parse_weights(args.weights)
    if isinstance(alpha, Periodic):
        forms = synth_weighted_periodic(f, alpha.pattern)
        _weighted_check(f, alpha, forms)
        texts = [format_canonical(g) for g in forms.forms]
        lines = [f"r={r}: {t}" for r, t in enumerate(texts, start=1)]
        result = [{"residue": r, "result": t} for r, t in enumerate(texts, start=1)]
        return Outcome(EXIT_OK, lines, _record("weighted", "ok", args.expr, result,
                                               verified_upto=WEIGHTED_CHECK_UPTO))
    if isinstance(alpha, Constant):
        g = synth_weighted_constant(f, alpha.c)
    else:
        g = synth_weighted_polynomial(f, alpha.w)
    _weighted_check(f, alpha, g)
    text = format_canonical(g)
    return Outcome(EXIT_OK, [text], _record("weighted", "ok", args.expr, text,
                                            verified_upto=WEIGHTED_CHECK_UPTO))


def cmd_verify(args) -> Outcome:
    p = _parse(args.f_expr, "f")
    q = _parse(args.g_expr, "g")
    n_max = default_n_max(p, q) if args.n_max is None else args.n_max
    if n_max < 1:
        raise UsageError("--n-max must be positive")
    report = verify_closed_form(p, q, n_max)
    inp = {"f": args.f_expr, "g": args.g_expr}
    if report.ok:
        return Outcome(EXIT_OK, [f"ok upto {n_max}"], _record("verify", "ok", inp, None, verified_upto=n_max))
    mm = report.mismatch
    line = f"mismatch at n={mm.n} expected {mm.expected} got {mm.got}"
    rec = _record("verify", "mismatch", inp, None, verified_upto=mm.n - 1,
                  mismatch={"n": mm.n, "expected": str(mm.expected), "got": str(mm.got)})
    return Outcome(EXIT_NEGATIVE, [line], rec)


class _ArgParser(argparse.ArgumentParser):
    # Expressions like "-n^2" must reach the positionals; -h is the only
    # single-dash option, and it is matched before this check.
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-[^-]")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record instead of text")

    parser = _ArgParser(prog="sumsynth", description="Closed forms for sums of polynomials in n and n!.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("faulhaber", parents=[common], help="power-sum polynomial for 1^k + ... + n^k")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_faulhaber)

    p = sub.add_parser("synth", parents=[common], help="closed form of f(1) + ... + f(n) for polynomial f")
    p.add_argument("expr")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("synth-fact", parents=[common], help="closed form in n and n! within degree bounds")
    p.add_argument("expr")
    p.add_argument("--deg-x", type=int, default=None)
    p.add_argument("--deg-y", type=int, default=None)
    p.set_defaults(func=cmd_synth_fact)

    p = sub.add_parser("member", parents=[common], help="is g a running sum of an integer polynomial?")
    p.add_argument("expr")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("weighted", parents=[common], help="weighted sum w_1 f(1) + ... + w_n f(n)")
    p.add_argument("expr")
    p.add_argument("--weights", required=True, help="const:<c> | poly:<expr> | periodic:<c1,c2,...>")
    p.set_defaults(func=cmd_weighted)

    p = sub.add_parser("verify", parents=[common], help="check g(n) = f(1) + ... + f(n) by direct summation")
    p.add_argument("f_expr")
    p.add_argument("g_expr")
    p.add_argument("--n-max", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def _input_of(args):
    if args.command == "verify":
        return {"f": args.f_expr, "g": args.g_expr}
    if args.command == "faulhaber":
        return args.k
    return args.expr


def run_cli(argv: list[str]) -> CliResult:
    parser = build_parser()
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return CliResult(int(exc.code or 0), out.getvalue(), err.getvalue())
    try:
        outcome = args.func(args)
    except UsageError as exc:
        err.write(f"sumsynth {args.command}: error: {exc}\n")
        if args.json:
            rec = _record(args.command, "error", _input_of(args), None, message=str(exc).splitlines()[0])
            out.write(json.dumps(rec) + "\n")
        return CliResult(EXIT_USAGE, out.getvalue(), err.getvalue())
    if args.json:
        out.write(json.dumps(outcome.record) + "\n")
    else:
        out.write("".join(line + "\n" for line in outcome.lines))
    return CliResult(outcome.code, out.getvalue(), err.getvalue())


def main(argv: list[str] | None = None) -> int:
    result = run_cli(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
