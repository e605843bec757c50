"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
Results go to standard output (or ``--out``); diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import adler_moser as am
from . import airy, genfun, ohyama
from .errors import IntegrityError
from .report import Report
from .rings import LaurentPoly, RationalFunction
from .scalars import rational_to_str, scalar_to_json
from .serialize import to_jsonable

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITES = ("adler_moser", "ohyama", "genfun", "all")
LAX_POINTS = [(z, l) for z in (Fraction(1), Fraction(1, 2), Fraction(2)) for l in (Fraction(1), Fraction(1, 2), Fraction(2))]

# fixed generic constants for the Adler-Moser suite, so output is reproducible
_AM_CONSTANTS = {i: Fraction((-1) ** i * (2 * i - 1), i + 2) for i in range(2, 40)}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _scalar_cell(c) -> str:
    v = scalar_to_json(c)
    return v if isinstance(v, str) else " ".join(v)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _poly_output(p, fmt: str) -> str:
    if fmt == "json":
        return _json(to_jsonable(p))
    lowest = p.lowest if isinstance(p, LaurentPoly) else 0
    return _csv([(lowest + i, _scalar_cell(c)) for i, c in enumerate(p.coeffs)], ("power", "coefficient"))


def _report_output(tagged, fmt: str) -> str:
    """``tagged`` is a list of (suite, Report)."""
    if fmt == "json":
        return _json(
            [
                {"suite": suite, "identity": c.identity, "index": c.index, "ok": c.ok}
                for suite, rep in tagged
                for c in rep
            ]
        )
    rows = [(suite, c.identity, c.index, str(c.ok).lower()) for suite, rep in tagged for c in rep]
    return _csv(rows, ("suite", "identity", "index", "ok"))


# ---------------------------------------------------------------- commands
def cmd_yv(args):
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    p = am.ko_tau(args.n) if args.route == "determinant" else am.yv_polynomial(args.n)
    return _poly_output(p, args.format), EXIT_OK


def cmd_pii(args):
    sol = am.pii_rational(args.alpha)
    if args.format == "csv":
        rows = [
            ("q", str(sol.q)),
            ("p", str(sol.p)),
            ("tau", str(sol.tau_poly)),
        ]
        return _csv(rows, ("object", "value")), EXIT_OK
    out = {
        "alpha": args.alpha,
        "ell": rational_to_str(sol.ell),
        "q": to_jsonable(sol.q),
        "p": to_jsonable(sol.p),
        "tau": to_jsonable(sol.tau_poly),
    }
    return _json(out), EXIT_OK


def cmd_ohyama(args):
    profile = ohyama.get_profile(args.profile)
    n, obj = args.n, args.object
    if obj == "rho":
        value = ohyama.rho(n, args.route, profile)
    elif obj == "P":
        value = ohyama.algebraic_P(n, args.route)
    elif obj == "V":
        value = ohyama.potential_V(n, "fromP")
    elif obj == "theta":
        value = ohyama.theta(n, profile)
    else:
        value = ohyama.sigma(n, profile)
    if args.format == "csv" and obj in ("rho",):
        return _poly_output(value, "csv"), EXIT_OK
    if args.format == "csv":
        return _csv([(obj, n, str(value))], ("object", "n", "value")), EXIT_OK
    return _json(to_jsonable(value)), EXIT_OK


def _run_suite(suite: str, n_max: int, profile, demo: bool):
    """Run one suite; with ``demo`` inject a single wrong object and name it."""
    injected = None

    if suite == "adler_moser":
        perturb = None
        if demo:
            injected = ("pii", 1)
            z = RationalFunction.gen("z")

            def perturb(identity, index, value):
                return value + z / z if (identity, index) == injected else value

        chain = am.AMChain(_AM_CONSTANTS)
        return am.verify_am_identities(n_max, chain=chain, perturb=perturb), injected

    if suite == "ohyama":
        perturb = None
        if demo:
            injected = ("P3D7", n_max)

            def perturb(identity, index, value):
                return value + 1 if (identity, index) == injected else value

        return ohyama.verify_family(n_max, profile, perturb=perturb), injected

    # generating functions: exact chain checks and the numeric Lax spot check
    order = min(max(n_max, 1), genfun.DEFAULT_ORDER)
    report = Report()
    for delta in (-1, 1):
        series = genfun.expand_generating(delta, order)
        if demo and delta == -1:
            injected = ("series_chain", 1)
            bad = series[1].with_body(series[1].body + LaurentPoly.monomial(2))
            series = series.replace(1, bad)
        sub = genfun.verify_series_chain(series, order)
        for c in sub:
            report.add(c.identity, f"delta={delta},j={c.index}", c.ok)
    if injected:
        injected = ("series_chain", "delta=-1,j=1")
    for zeta, lam in LAX_POINTS:
        report.extend(airy.numeric_lax_check(zeta, lam))
    return report, injected


def cmd_verify(args):
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    suites = ("adler_moser", "ohyama", "genfun") if args.suite == "all" else (args.suite,)
    profile = ohyama.get_profile(args.profile)
    tagged = []
    for suite in suites:
        report, injected = _run_suite(suite, args.n_max, profile, args.then_fail_demo)
        tagged.append((suite, report))
        if injected:
            print(f"injected failure: suite={suite} identity={injected[0]} index={injected[1]}", file=sys.stderr)
        for c in report.failures():
            print(f"FAILED: suite={suite} identity={c.identity} index={c.index}", file=sys.stderr)
    ok = all(rep.ok for _, rep in tagged)
    total = sum(len(rep) for _, rep in tagged)
    print(f"{total} checks, {'all passed' if ok else 'some FAILED'}", file=sys.stderr)
    return _report_output(tagged, args.format), EXIT_OK if ok else EXIT_FAIL


def _parse_points(text: str):
    pts = []
    for item in text.split(";"):
        zeta, lam = item.split(",")
        pts.append((_rational(zeta.strip()), _rational(lam.strip())))
    return pts


def cmd_genfun(args):
    if args.lax:
        points = _parse_points(args.points) if args.points else LAX_POINTS
        rows, worst = [], 0.0
        for zeta, lam in points:
            r = airy.lax_residuals(zeta, lam)
            worst = max(worst, r.max)
            rows.append((str(r.zeta), str(r.lam), f"{r.residual1:.3e}", f"{r.residual2:.3e}"))
        print(f"max residual {worst:.3e} (tolerance {args.tol:g})", file=sys.stderr)
        out = _csv(rows, ("zeta", "lambda", "residual1", "residual2"))
        return out, EXIT_OK if worst < args.tol else EXIT_FAIL
    if args.delta not in (1, -1):
        raise UsageError("--delta must be 1 or -1")
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    series = genfun.expand_generating(args.delta, args.order)
    if args.format == "csv":
        rows = [(j, str(c)) for j, c in enumerate(series.coeffs)]
        return _csv(rows, ("j", "coefficient")), EXIT_OK
    out = {"delta": args.delta, "order": args.order, "coeffs": [to_jsonable(c) for c in series.coeffs]}
    return _json(out), EXIT_OK


def _grid(text: str):
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError("grid must be START:STOP:COUNT or a comma list")
        start, stop, count = _rational(parts[0]), _rational(parts[1]), int(parts[2])
        if count < 1:
            raise UsageError("grid COUNT must be positive")
        if count == 1:
            return [start]
        step = (stop - start) / (count - 1)
        return [start + i * step for i in range(count)]
    return [_rational(t.strip()) for t in text.split(",") if t.strip()]


def _decimal(q: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return format(d, "g") if d else "0"


def sample_rows(expr: str, index: int, points, digits: int = 12):
    """(point, decimal value, exact value) rows; poles are flagged ``pole``."""
    if expr == "P":
        f = ohyama.algebraic_P(index)
    elif expr == "V":
        f = ohyama.potential_V(index)
    elif expr == "q":
        f = am.pii_rational(index).q
    else:
        raise ValueError(f"unknown expression {expr!r}")
    rows = []
    for x in points:
        if f.den(x) == 0:
            rows.append((rational_to_str(x), "pole", "pole"))
            continue
        v = Fraction(f(x))
        rows.append((rational_to_str(x), _decimal(v, digits), rational_to_str(v)))
    return f, rows


def cmd_sample(args):
    if args.digits < 1:
        raise UsageError("--digits must be positive")
    index = args.alpha if args.expr == "q" else args.n
    if index is None:
        raise UsageError("--alpha is required for q, --n for P and V")
    f, rows = sample_rows(args.expr, index, _grid(args.grid), args.digits)
    var = f.var
    poles = sum(1 for r in rows if r[1] == "pole")
    if poles:
        print(f"{poles} grid point(s) at poles of the denominator {f.den}", file=sys.stderr)
    if args.format == "json":
        return _json([{var: p, "value": v, "exact": e} for p, v, e in rows]), EXIT_OK
    return _csv(rows, (var, "value", "exact")), EXIT_OK


# ---------------------------------------------------------------- parser
def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="painleve-tau", description="Exact tau functions for Painleve II and III (D7).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt="json"):
        p.add_argument("--format", choices=("json", "csv"), default=fmt)
        p.add_argument("--out", metavar="PATH", help="write the result to PATH instead of standard output")

    p = sub.add_parser("yv", help="Yablonskii-Vorob'ev polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=("chain", "determinant"), default="chain")
    common(p)
    p.set_defaults(func=cmd_yv)

    p = sub.add_parser("pii", help="rational Painleve II solution q and its Painleve XXXIV partner p")
    p.add_argument("--alpha", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_pii)

    p = sub.add_parser("ohyama", help="Ohyama polynomial rho_n and related objects")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--route", choices=ohyama.ROUTES, default="recurrence")
    p.add_argument("--profile", choices=tuple(ohyama.PROFILES), default="canonical")
    p.add_argument("--object", choices=("rho", "P", "V", "theta", "sigma"), default="rho")
    common(p)
    p.set_defaults(func=cmd_ohyama)

    p = sub.add_parser("verify", help="run the exact verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--profile", choices=tuple(ohyama.PROFILES), default="canonical")
    p.add_argument("--then-fail-demo", action="store_true", help="inject one wrong object to exercise the failure path")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("genfun", help="generating-function expansion or numeric Lax check")
    p.add_argument("--delta", type=int, default=-1)
    p.add_argument("--order", type=int, default=genfun.DEFAULT_ORDER)
    p.add_argument("--lax", action="store_true", help="numeric Lax-pair check, CSV rows")
    p.add_argument("--points", help="'zeta,lambda;zeta,lambda;...' for --lax")
    p.add_argument("--tol", type=float, default=1e-8)
    common(p)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("sample", help="evaluate P_n, V_n (in zeta) or q_alpha (in z) on a grid")
    p.add_argument("--expr", choices=("P", "V", "q"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--grid", required=True, help="START:STOP:COUNT or a comma list of rationals")
    p.add_argument("--digits", type=int, default=12)
    common(p, fmt="csv")
    p.set_defaults(func=cmd_sample)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, airy.AiryRangeError) as exc:
        print(f"painleve-tau: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"painleve-tau: integrity error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
