"""Command-line front end.

Three commands:

* ``expand <problem-file>`` runs the expansion pipeline on a
  user-defined problem, printing the term table and, when the file
  supplies a contour and N values, the quadrature comparison.
* ``example <name>`` reproduces a built-in worked problem
  (gamma, kepler, center, parabolic, sylvester).
* ``selftest`` runs the invariant suite and sets the exit status.

Exit codes: 0 success, 1 invariant or agreement failure, 2 input
error.  All numbers are printed with 17 significant digits so reruns
are byte identical.
"""

from __future__ import annotations

import argparse
import cmath
import json
import sys
from fractions import Fraction
from typing import Optional

from . import __version__
from . import classic, selftest, waves
from .expansion import alpha_bell, alpha_direct, assemble
from .problemfile import ProblemFileError, parse_problem_file
from .quadrature import integrate, integrate_power_factor

#: an example run counts as agreeing when expansion and oracle share
#: at least this many digits (loose: asymptotic accuracy at small N is
#: legitimately poor, but the stock parameters sit far above this)
MIN_EXAMPLE_DIGITS = 4


def fmt_float(x: float) -> str:
    return f"{float(x):.17g}"


def fmt_complex(z: complex) -> str:
    z = complex(z)
    sign = "+" if z.imag >= 0 or z.imag != z.imag else "-"
    return f"{z.real:.17g}{sign}{abs(z.imag):.17g}i"


def fmt_rational(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def json_complex(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _coefficient_cell(value) -> str:
    if isinstance(value, (int, Fraction)):
        return fmt_rational(value)
    return fmt_complex(value)


def _print_term_table(terms, out) -> None:
    out.write("terms (s, exponent, coefficient):\n")
    for t in terms:
        flag = "  (zero)" if t.is_zero else ""
        out.write(f"  {t.s:3d}  {fmt_complex(t.exponent)}  "
                  f"{fmt_complex(t.coefficient)}{flag}\n")


def _terms_json(terms) -> list:
    return [{"s": t.s,
             "exponent": json_complex(t.exponent),
             "coefficient": json_complex(t.coefficient),
             "zero": t.is_zero} for t in terms]


def _terms_tsv(terms, out) -> None:
    out.write("s\texp_re\texp_im\tcoeff_re\tcoeff_im\n")
    for t in terms:
        out.write(f"{t.s}\t{fmt_float(t.exponent.real)}\t{fmt_float(t.exponent.imag)}"
                  f"\t{fmt_float(t.coefficient.real)}\t{fmt_float(t.coefficient.imag)}\n")


def cmd_expand(args) -> int:
    out = sys.stdout
    try:
        problem = parse_problem_file(args.file)
    except ProblemFileError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return 2
    nf = problem.normal_form
    alphas = alpha_bell(nf, problem.q, problem.a, problem.order)
    cross = alpha_direct(nf, problem.q, problem.a, problem.order)
    scale = max(max(abs(x) for x in alphas.alphas), 1e-300)
    route_dev = max(abs(x - y) for x, y in
                    zip(alphas.alphas, cross.alphas)) / scale
    try:
        expansion = assemble(alphas, nf, problem.branch)
    except ValueError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return 2

    comparisons = []
    status = 0
    rel_tol = args.tol if args.tol is not None else 1e-11
    for n in problem.n_values:
        def f(z, n=n):
            return cmath.exp(n * complex(problem.p_callable(z))) \
                * complex(problem.q_callable(z))
        if problem.a == 1:
            oracle = integrate(f, problem.contour, abs_tol=0.0, rel_tol=rel_tol)
        else:
            oracle = integrate_power_factor(f, complex(problem.a), nf.z0,
                                            problem.contour,
                                            abs_tol=0.0, rel_tol=rel_tol)
        value = expansion.evaluate(n, problem.order)
        digits = classic.agreement_digits(value, oracle.value)
        comparisons.append((n, value, oracle, digits))
        if not oracle.converged:
            status = 1

    if args.format == "json":
        payload = {
            "problem": args.file,
            "mu": nf.mu,
            "p0": json_complex(nf.p0),
            "omega0": nf.omega0,
            "variant": type(problem.branch).__name__,
            "order": problem.order,
            "alpha_route_deviation": route_dev,
            "terms": _terms_json(expansion.terms),
            "validation": [
                {"n": n, "expansion": json_complex(v),
                 "quadrature": json_complex(o.value),
                 "quadrature_error": o.error_estimate,
                 "evaluations": o.evaluations,
                 "converged": o.converged,
                 "agreement_digits": d}
                for n, v, o, d in comparisons],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "tsv":
        _terms_tsv(expansion.terms, out)
    else:
        out.write(f"problem: {args.file}\n")
        out.write(f"saddle: z0 = {fmt_complex(nf.z0)}  mu = {nf.mu}  "
                  f"p0 = {fmt_complex(nf.p0)}  omega0 = {fmt_float(nf.omega0)}\n")
        out.write(f"variant: {type(problem.branch).__name__} {problem.branch}\n")
        out.write(f"alpha cross-route deviation: {route_dev:.3e}\n")
        _print_term_table(expansion.terms, out)
        if all(t.is_zero for t in expansion.terms):
            out.write("warning: every term vanishes "
                      "(entry and exit phases cancel)\n")
        for n, value, oracle, digits in comparisons:
            out.write(f"validation at N = {fmt_float(n)}:\n")
            out.write(f"  expansion  = {fmt_complex(value)}\n")
            out.write(f"  quadrature = {fmt_complex(oracle.value)}  "
                      f"(error {oracle.error_estimate:.3e}, "
                      f"evaluations {oracle.evaluations}, "
                      f"{'converged' if oracle.converged else 'NOT converged'})\n")
            out.write(f"  agreement digits: {digits}\n")
    return status


def _example_report(args):
    name = args.name
    terms = args.terms
    rel_tol = args.tol if args.tol is not None else 1e-11
    if name == "gamma":
        # terms counts the printed Stirling rationals for this example
        return classic.gamma_report(args.n, terms if terms else 3,
                                    rel_tol=min(rel_tol, 1e-12))
    if name == "kepler":
        return classic.kepler_plain(terms if terms else 10, args.n,
                                    rel_tol=rel_tol)
    if name == "center":
        return classic.equation_of_center(args.eps, terms if terms else 13,
                                          args.n, rel_tol=rel_tol)
    if name == "parabolic":
        return classic.parabolic(terms if terms else 8, args.n, rel_tol=rel_tol)
    raise AssertionError(name)


def cmd_example(args) -> int:
    out = sys.stdout
    if args.name == "sylvester":
        return _cmd_example_sylvester(args)
    try:
        report = _example_report(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok = report.agreement_digits >= MIN_EXAMPLE_DIGITS and report.oracle.converged

    if args.format == "json":
        payload = {
            "example": report.name,
            "parameters": report.parameters,
            "coefficients": [_coefficient_cell(c) for c in report.coefficient_table],
            "terms": _terms_json(report.expansion.terms),
            "expansion_value": json_complex(report.expansion_value),
            "quadrature_value": json_complex(report.oracle_value),
            "quadrature_error": report.oracle.error_estimate,
            "evaluations": report.oracle.evaluations,
            "converged": report.oracle.converged,
            "agreement_digits": report.agreement_digits,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "tsv":
        _terms_tsv(report.expansion.terms, out)
    else:
        out.write(f"example: {report.name}\n")
        params = ", ".join(f"{k} = {fmt_float(v) if isinstance(v, float) else v}"
                           for k, v in report.parameters.items())
        out.write(f"parameters: {params}\n")
        out.write("coefficient table:\n")
        for s, c in enumerate(report.coefficient_table):
            out.write(f"  {s:3d}  {_coefficient_cell(c)}\n")
        _print_term_table(report.expansion.terms, out)
        out.write(f"expansion value:  {fmt_complex(report.expansion_value)}\n")
        out.write(f"quadrature value: {fmt_complex(report.oracle_value)}  "
                  f"(error {report.oracle.error_estimate:.3e}, "
                  f"evaluations {report.oracle.evaluations}, "
                  f"{'converged' if report.oracle.converged else 'NOT converged'})\n")
        out.write(f"agreement: {report.agreement_digits} digits\n")
        if not ok:
            out.write("agreement FAILURE\n")
    return 0 if ok else 1


def _cmd_example_sylvester(args) -> int:
    out = sys.stdout
    terms = args.terms if args.terms else 3
    try:
        lam = Fraction(args.lam) if args.lam is not None else Fraction(1)
        n = int(args.n)
        if n != args.n:
            raise ValueError("N must be an integer for wave evaluation")
        expansion = waves.wave_coefficients(lam, t_max=terms - 1)
        values = [(t, expansion.main_term(n, t)) for t in range(1, terms + 1)]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    wc = waves.solve_constants()
    if args.format == "json":
        payload = {
            "example": "sylvester",
            "parameters": {"n": n, "lambda": fmt_rational(lam), "terms": terms},
            "w0": json_complex(wc.w0),
            "z0": json_complex(wc.z0_wave),
            "p0": json_complex(wc.p0_wave),
            "coefficients": [json_complex(c) for c in expansion.coeffs],
            "main_terms": [{"terms": t, "value": v} for t, v in values],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "tsv":
        out.write("terms\tvalue\n")
        for t, v in values:
            out.write(f"{t}\t{fmt_float(v)}\n")
    else:
        out.write("example: sylvester\n")
        out.write(f"parameters: n = {n}, lambda = {fmt_rational(lam)}, "
                  f"terms = {terms}\n")
        out.write(f"w0 = {fmt_complex(wc.w0)}\n")
        out.write(f"z0 = {fmt_complex(wc.z0_wave)}\n")
        out.write(f"p0 = {fmt_complex(wc.p0_wave)}\n")
        out.write("wave coefficients a_t:\n")
        for t, c in enumerate(expansion.coeffs):
            out.write(f"  {t}  {fmt_complex(c)}\n")
        out.write("leading-wave values:\n")
        for t, v in values:
            out.write(f"  {t} term(s): {fmt_float(v)}\n")
    return 0


def cmd_selftest(args) -> int:
    out = sys.stdout
    results = selftest.run_all()
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        payload = {
            "passed": len(results) - len(failed),
            "failed": len(failed),
            "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                       for r in results],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "tsv":
        out.write("name\tok\tdetail\n")
        for r in results:
            out.write(f"{r.name}\t{int(r.ok)}\t{r.detail}\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.detail}\n")
        out.write(f"{len(results) - len(failed)} passed, {len(failed)} failed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="saddlepoint",
        description="Asymptotic expansions of saddle-point integrals, "
                    "validated by adaptive contour quadrature.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand a problem file")
    p_expand.add_argument("file")
    p_expand.add_argument("--format", choices=("text", "json", "tsv"),
                          default="text")
    p_expand.add_argument("--tol", type=float, default=None,
                          help="quadrature relative tolerance")
    p_expand.set_defaults(func=cmd_expand)

    p_example = sub.add_parser("example", help="run a built-in worked problem")
    p_example.add_argument("name", choices=("gamma", "kepler", "center",
                                            "parabolic", "sylvester"))
    p_example.add_argument("--n", type=float, default=50.0)
    p_example.add_argument("--eps", type=float, default=0.4)
    p_example.add_argument("--lambda", dest="lam", default=None,
                           help="wave family parameter (rational, e.g. 1 or 3/2)")
    p_example.add_argument("--terms", type=int, default=None)
    p_example.add_argument("--format", choices=("text", "json", "tsv"),
                           default="text")
    p_example.add_argument("--tol", type=float, default=None,
                           help="quadrature relative tolerance")
    p_example.set_defaults(func=cmd_example)

    p_self = sub.add_parser("selftest", help="run the invariant suite")
    p_self.add_argument("--format", choices=("text", "json", "tsv"),
                        default="text")
    p_self.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
