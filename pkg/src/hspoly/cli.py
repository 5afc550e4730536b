"""Command-line front end.

Exit codes: 0 success, 1 malformed input or usage, 2 hypothesis violation,
3 numerical failure.  HSPOLY_DPS sets the default working precision.
"""
from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction

import mpmath

from . import __version__
from .bethe import DEFAULT_ROOT_DPS, DEFAULT_TOLERANCE, RootSet, verify_solution_via_bae
from .casoratian import verify_abel
from .corpus import FAMILIES, corpus_build
from .errors import HSPolyError, HypothesisViolation, InputError, NumericalFailure, PoleError, ZeroStepError
from .fdeq import cauchy_iterate
from .gammah import gamma_h, gamma_h_factorial
from .jsonio import (dumps, equation_from_json, equation_to_json, load_file, roots_from_json,
                     validate)
from .norlund import Phi, RegularizationConfig, principal_sum_closed, principal_sum_numeric
from .ratpoly import as_rational, real_roots
from .solver import polynomial_kernel
from .uniqueness import certify

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_NUMERIC = 0, 1, 2, 3


def _default_dps() -> int:
    try:
        return int(os.environ.get("HSPOLY_DPS", "64"))
    except ValueError:
        raise InputError("HSPOLY_DPS must be an integer", field="HSPOLY_DPS") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _decimal(v, digits=20) -> str:
    if isinstance(v, Fraction):
        v = mpmath.mpf(v.numerator) / v.denominator
    return mpmath.nstr(v, digits)


# -- subcommands ------------------------------------------------------------

def cmd_solve(args):
    eq = equation_from_json(load_file(args.input))
    kb = polynomial_kernel(eq, args.degree)
    doc = {"equation": equation_to_json(eq), **kb.to_json()}
    text = [f"dimension {kb.dimension} (degree <= {kb.degree_bound})"]
    text += [f"  {p}" for p in kb.basis]
    return doc, "kernel", "\n".join(text)


def cmd_certify(args):
    eq = equation_from_json(load_file(args.input))
    cert = certify(eq)
    doc = cert.to_json()
    text = f"verdict {doc['verdict']}"
    if cert.witness_root is not None:
        text += f" (witness root {doc['witness']['root']['root']['approx']} of {cert.witness_root.source}, {cert.direction})"
    return doc, "certificate", text


def _pick_x0(eq, points, seed):
    rng = random.Random(seed)
    for _ in range(1000):
        x0 = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        if all(eq.g(x0 + k * eq.h) != 0 for k in range(points + 1)):
            return x0
    raise HypothesisViolation("could not find a lattice on which g does not vanish")


def cmd_casoratian(args):
    eq = equation_from_json(load_file(args.input))
    x0 = args.x0 if args.x0 is not None else _pick_x0(eq, args.points, args.seed)
    y1 = cauchy_iterate(eq, x0, 1, 0, args.points)
    y2 = cauchy_iterate(eq, x0, 0, 1, args.points)
    with mpmath.workdps(args.digits):
        rep = verify_abel(eq, y1, y2, x0, args.points, dps=args.digits)
        doc = rep.to_json()
    doc["x0"] = str(x0)
    text = (f"recurrence exact: {rep.recurrence_exact}\n"
            f"ratio mean: {doc['ratio_mean']['decimal'] if doc['ratio_mean'] else None}\n"
            f"ratio relative stddev: {rep.ratio_rel_stddev}")
    return doc, "casoratian", text


def cmd_bae(args):
    eq = equation_from_json(load_file(args.input))
    roots = roots_from_json(load_file(args.roots))
    with mpmath.workdps(args.digits):
        rs = RootSet(roots, dps=args.digits)
        verdict = verify_solution_via_bae(eq, rs, tolerance=args.tol, dps=args.digits)
        doc = verdict.to_json()
    doc["precision"] = args.digits
    text = f"{'pass' if verdict.passed else 'fail'}: max BAE residual {doc['max_residual']}"
    return doc, "bae", text


_DEMOS = {"constant": "constant", "exp": "exponential", "log": "logarithm"}


def cmd_norlund(args):
    kind = _DEMOS[args.demo]
    phi = {"constant": Phi.constant, "exponential": Phi.exponential, "logarithm": Phi.logarithm}[kind](float(args.a))
    cfg = RegularizationConfig(p=args.p, q=args.q)
    closed = principal_sum_closed(kind, args.x, args.h, args.c, a=args.a)
    res = principal_sum_numeric(phi, args.c, args.x, args.h, cfg, strict=True)
    doc = {
        "phi": phi.to_json(),
        "closed_form": _decimal(closed, 17),
        "numeric": repr(res.value),
        "error": res.error,
        "converged": res.converged,
        "config": cfg.to_json(),
        "diagnostics": res.diagnostics,
    }
    if isinstance(closed, Fraction):
        doc["closed_form_exact"] = str(closed)
    text = (f"closed form: {doc['closed_form']}\nnumeric:     {res.value!r}\n"
            f"error est.:  {res.error:.3g}")
    return doc, "norlund", text


def cmd_gamma_h(args):
    g = gamma_h(args.x, args.h, args.digits)
    doc = {"x": str(args.x), "h": str(args.h), "pole": g.is_pole, "pole_index": g.pole_index,
           "value": None if g.is_pole else _decimal(g.value, args.digits), "exact": None,
           "precision": args.digits}
    n = args.x / args.h - 1
    if not g.is_pole and n.denominator == 1 and n >= 0:
        doc["exact"] = str(gamma_h_factorial(int(n), args.h))
    return doc, "gamma-h", "pole" if g.is_pole else doc["value"]


def cmd_corpus(args):
    names = [args.name] if args.name else list(FAMILIES)
    entries = []
    lines = []
    for name in names:
        e = corpus_build(name)
        top = args.max_degree if e.max_degree is None else min(args.max_degree, e.max_degree)
        rows = []
        for n in range(top + 1):
            eq = e.equation(n)
            kb = polynomial_kernel(eq, max(n, args.max_degree))
            cert = certify(eq)
            bae = "skipped: no solution"
            if kb.dimension:
                rr = real_roots(kb.basis[0])
                if not (rr.all_real and rr.all_simple):
                    bae = "skipped: repeated or complex zeros"
                else:
                    with mpmath.workdps(DEFAULT_ROOT_DPS):
                        bae = verify_solution_via_bae(eq, RootSet(rr.approx(DEFAULT_ROOT_DPS))).to_json()
            rows.append({"n": n, "dimension": kb.dimension, "verdict": cert.verdict.value, "bae": bae})
            ok = bae["passed"] if isinstance(bae, dict) else bae
            lines.append(f"{name:9s} n={n:2d} dim={kb.dimension} verdict={cert.verdict.value:12s} bae={ok}")
        entries.append({**e.to_json(), "degrees": rows})
    return {"entries": entries}, "corpus", "\n".join(lines)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="json")
    p = _Parser(prog="hspoly", description="Polynomial solutions of difference equations.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", parents=[common], help="polynomial kernel up to a degree bound")
    s.add_argument("--input", required=True)
    s.add_argument("--degree", type=int, required=True)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("certify", parents=[common], help="uniqueness certificate")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("casoratian", parents=[common], help="Casoratian recurrence and Abel closed form")
    s.add_argument("--input", required=True)
    s.add_argument("--points", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--x0", type=_rational)
    s.add_argument("--digits", type=int, default=None)
    s.set_defaults(func=cmd_casoratian)

    s = sub.add_parser("bae", parents=[common], help="Bethe-Ansatz verification of given zeros")
    s.add_argument("--input", required=True)
    s.add_argument("--roots", required=True)
    s.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    s.add_argument("--digits", type=int, default=DEFAULT_ROOT_DPS)
    s.set_defaults(func=cmd_bae)

    s = sub.add_parser("norlund", parents=[common], help="principal sum: closed form and regularized numeric")
    s.add_argument("--demo", choices=sorted(_DEMOS), required=True)
    s.add_argument("--h", type=_rational, default=Fraction(1))
    s.add_argument("--x", type=_rational, required=True)
    s.add_argument("--c", type=_rational, default=Fraction(0))
    s.add_argument("--a", type=_rational, default=Fraction(1))
    s.add_argument("--p", type=int, default=1)
    s.add_argument("--q", type=int, default=0)
    s.set_defaults(func=cmd_norlund)

    s = sub.add_parser("gamma-h", parents=[common], help="evaluate Gamma_h")
    s.add_argument("--h", type=_rational, required=True)
    s.add_argument("--x", type=_rational, required=True)
    s.add_argument("--digits", type=int, default=None)
    s.set_defaults(func=cmd_gamma_h)

    s = sub.add_parser("corpus", parents=[common], help="run the classical-family fixtures")
    s.add_argument("--name", choices=FAMILIES)
    s.add_argument("--max-degree", type=int, default=10)
    s.set_defaults(func=cmd_corpus)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "digits", 0) is None:
            args.digits = _default_dps()
        doc, schema, text = args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=stderr)
        return EXIT_INPUT
    except (HypothesisViolation, PoleError, ZeroStepError) as exc:
        print(f"hypothesis violation: {exc}", file=stderr)
        return EXIT_HYPOTHESIS
    except (NumericalFailure, HSPolyError) as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return EXIT_NUMERIC
    # emitted documents must satisfy their own schema; a mismatch is a bug
    try:
        validate(doc, schema)
    except InputError as exc:
        raise RuntimeError(f"output does not match schema {schema!r}: {exc}") from None
    print(dumps(doc) if args.output == "json" else text, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
