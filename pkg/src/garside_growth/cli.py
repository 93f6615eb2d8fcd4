"""Command-line front end: ``garside <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.  JSON output
writes every big integer as a decimal string, with a fixed field order, so a
parsed and re-emitted document is byte-identical.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import _fixtures, moebius as mb, oracle, rates, tables, theta
from .polyseries import format_polynomial, invert_series
from .presentations import Family, MonoidSpec, SpecError, parse_spec

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"


def _strs(values):
    return [str(v) for v in values]


def _fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _spec(text: str) -> MonoidSpec:
    try:
        return parse_spec(text)
    except SpecError as e:
        raise UsageError(str(e)) from None


# -- compute commands ---------------------------------------------------------


def cmd_moebius(args, out):
    spec = _spec(args.spec)
    try:
        res = mb.moebius(spec, args.method)
    except SpecError as e:
        raise UsageError(str(e)) from None
    poly = res.polynomial
    if args.json:
        out.write(dump_json({
            "spec": str(spec),
            "method": res.method.value,
            "polynomial": _strs(poly.coeffs),
            "degree": str(poly.degree),
        }))
    else:
        out.write(f"{format_polynomial(poly)}\n")
    return EXIT_OK


def cmd_table(args, out):
    if args.spec.lower() == "ainf":
        table = tables.build_limit_table(args.rows, args.columns or args.rows + 1, args.route)
    else:
        spec = _spec(args.spec)
        try:
            table = tables.build_table(spec, args.rows)
        except SpecError as e:
            raise UsageError(str(e)) from None
    if args.json:
        out.write(dump_json({
            "spec": str(table.spec),
            "columns": str(table.column_count),
            "rows": [_strs(r) for r in table.rows],
        }))
    elif args.csv:
        out.write(table.to_csv())
    else:
        width = max(len(str(x)) for r in table.rows for x in r)
        header = "k\\i " + " ".join(str(i).rjust(width) for i in range(1, table.column_count + 1))
        out.write(header + "\n")
        for k, r in enumerate(table.rows):
            out.write(str(k).rjust(3) + " " + " ".join(str(x).rjust(width) for x in r) + "\n")
    return EXIT_OK


def cmd_theta(args, out):
    series = theta.theta_coefficients(args.terms).coefficients
    values = theta.power_coefficients(args.power, args.terms, series) if args.power > 1 else series
    doc = {"terms": str(args.terms), "power": str(args.power), "coefficients": _strs(values)}
    if args.estimate:
        est = theta.estimate_q_infinity(args.terms, args.digits, series)
        doc["estimate"] = {
            "label": est.label,
            "ratio": est.value,
            "root": est.root,
        }
    if args.json:
        out.write(dump_json(doc))
        return EXIT_OK
    out.write(", ".join(doc["coefficients"]) + "\n")
    if args.estimate:
        e = doc["estimate"]
        out.write(f"{e['label']}: ratio {e['ratio']}, k-th root {e['root']}\n")
    return EXIT_OK


def _rate_doc(est: rates.RateEstimate) -> dict:
    return {
        "spec": str(est.spec),
        "root_lo": _fraction(est.root_lo),
        "root_hi": _fraction(est.root_hi),
        "rho": est.rho,
        "bits": str(est.bits),
    }


def cmd_rate(args, out):
    if args.sequence and args.spec.upper() in ("A", "B", "D"):
        args.spec += "2"  # a bare family letter names the whole sequence
    spec = _spec(args.spec)
    if args.sequence:
        if spec.family not in (Family.A, Family.B, Family.D):
            raise UsageError("--sequence needs a family with unbounded rank (A, B or D)")
        start = 2 if spec.family is Family.D else 1
        if spec.family is Family.A:
            seq = rates.rho_sequence_a(args.sequence, args.bits)
        else:
            seq = rates.rho_sequence(spec.family, args.sequence, args.bits, start)
        if args.json:
            out.write(dump_json([_rate_doc(e) for e in seq]))
        else:
            for e in seq:
                gap = rates.q_gap(e)
                out.write(f"{e.spec}\t{e.rho}\tgap to reference {float(gap):.6g}\n")
        return EXIT_OK
    est = rates.growth_rate(spec, args.bits)
    if args.json:
        out.write(dump_json(_rate_doc(est)))
    else:
        out.write(f"{est.rho}\n")
    return EXIT_OK


def cmd_growth(args, out):
    spec = _spec(args.spec)
    poly = mb.moebius_polynomial(spec)
    alpha = invert_series(poly, args.terms).coefficients(args.terms)
    if args.json:
        out.write(dump_json({
            "spec": str(spec),
            "polynomial": format_polynomial(poly),
            "coefficients": _strs(alpha),
        }))
    else:
        out.write(f"{format_polynomial(poly)}\n")
        out.write(", ".join(_strs(alpha)) + "\n")
    return EXIT_OK


# -- verify -------------------------------------------------------------------


@dataclass
class Report:
    lines: list = field(default_factory=list)
    failures: int = 0

    def check(self, name: str, ok: bool, detail: str = ""):
        self.lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
        if not ok:
            self.failures += 1
        return ok

    def skip(self, name: str, why: str):
        self.lines.append(f"SKIP {name}: {why}")


def _first_divergence(a, b):
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return k, x, y
    if len(a) != len(b):
        return min(len(a), len(b)), "<end>", "<end>"
    return None


def _seq_check(report, name, a, b, la, lb):
    d = _first_divergence(a, b)
    if d is None:
        return report.check(name, True)
    k, x, y = d
    return report.check(name, False, f"first divergence at index {k}: {la} {x} != {lb} {y}")


def _moebius_routes(spec):
    routes = {"ie": mb.moebius_by_inclusion_exclusion(spec).polynomial}
    if spec.family in (Family.A, Family.B, Family.D):
        routes["det"] = mb.moebius_by_determinant(spec).polynomial
        routes["rec"] = mb.moebius_by_recurrence(spec, "within").polynomial
        routes["rec-cross"] = mb.moebius_by_recurrence(spec, "cross").polynomial
    return routes


def verify_moebius(report, spec, fixtures):
    routes = _moebius_routes(spec)
    ref = routes["ie"]
    for name, poly in routes.items():
        if name != "ie":
            report.check(
                f"moebius {spec} ie = {name}", poly == ref,
                "" if poly == ref else f"ie {format_polynomial(ref)} != {name} {format_polynomial(poly)}",
            )
    if str(spec) in fixtures:
        fx = fixtures[str(spec)]
        for name, poly in routes.items():
            report.check(
                f"moebius {spec} {name} = fixture {_fixtures.POLYNOMIALS}", poly == fx,
                "" if poly == fx else f"fixture {format_polynomial(fx)} != {format_polynomial(poly)}",
            )


def verify_counts(report, spec, max_k, budget):
    series = invert_series(mb.moebius_polynomial(spec), max_k).coefficients(max_k)
    table = None
    if spec.family in (Family.A, Family.B, Family.D):
        table = tables.build_table(spec, max_k)
        _seq_check(report, f"alpha {spec} table = series (k <= {max_k})", table.alpha(), series, "table", "series")
    for k in range(max_k + 1):
        try:
            counts = oracle.count_by_first_letter(spec, k, budget)
        except oracle.BudgetExceeded as e:
            report.skip(f"oracle {spec} k >= {k}", str(e))
            break
        total = sum(counts)
        values = [f"oracle {total}"]
        ok = total == series[k]
        if table is not None:
            values.append(f"table {table.alpha()[k]}")
            ok = ok and total == table.alpha()[k]
            row = oracle.partial_sums(spec, counts)
            strata_ok = row == list(table.row(k))
            report.check(
                f"strata {spec} k={k}", strata_ok,
                "" if strata_ok else f"oracle {row} != table {list(table.row(k))}",
            )
        values.append(f"series {series[k]}")
        report.check(f"alpha_{k} {spec}", ok, " = ".join(values))


def verify_reference_tables(report, fixtures_dir):
    for name, rows in _fixtures.reference_tables(fixtures_dir).items():
        spec = parse_spec(name)
        built = [list(r) for r in tables.build_table(spec, len(rows) - 1).rows]
        _seq_check(report, f"table {name} = fixture {_fixtures.TABLES}", built, rows, "computed", "fixture")


def verify_theta(report, fixtures_dir, max_k, budget):
    pinned = _fixtures.theta_terms(fixtures_dir)
    K = len(pinned) - 1
    newton = theta.theta_coefficients(K).coefficients
    rec = theta.theta_coefficients(K, "recursion").coefficients
    _seq_check(report, f"theta newton = fixture {_fixtures.THETA}", newton, pinned, "newton", "fixture")
    _seq_check(report, "theta newton = limit table column 1", newton, rec, "newton", "table")
    root = theta.verify_leading_root(200)
    report.check("theta leading root identity through y^200", root.passed,
                 "" if root.passed else f"first failing index {root.first_failure}")
    limit = tables.build_limit_table(25, 6)
    for t in range(1, 7):
        _seq_check(report, f"theta power {t} = limit column {t} (K=25)",
                   theta.power_coefficients(t, 25, newton), limit.column(t), "power", "table")
    for k in range(min(max_k, 6) + 1):
        try:
            c = oracle.count_theta_term(k, budget)
        except oracle.BudgetExceeded as e:
            report.skip(f"oracle theta k >= {k}", str(e))
            break
        report.check(f"oracle theta L_{k}", c == newton[k], f"oracle {c} = series {newton[k]}"
                     if c == newton[k] else f"oracle {c} != series {newton[k]}")


DEFAULT_ORACLE_SPECS = ("A1", "A2", "A3", "B2", "B3", "D4")


def run_verify(spec_text=None, max_k=6, budget=None, fixtures_dir=None) -> Report:
    report = Report()
    try:
        fixtures = _fixtures.reference_polynomials(fixtures_dir)
    except (OSError, ValueError, KeyError) as e:
        report.check(f"fixture {_fixtures.POLYNOMIALS}", False, f"unreadable: {e}")
        fixtures = {}
    if spec_text is not None:
        spec = parse_spec(spec_text)
        verify_moebius(report, spec, fixtures)
        verify_counts(report, spec, max_k, budget)
        return report
    for name in fixtures:
        verify_moebius(report, parse_spec(name), fixtures)
    for fam in (Family.A, Family.B, Family.D):
        for n in range(2 if fam is Family.D else 1, 9):
            spec = MonoidSpec(fam, n)
            routes = _moebius_routes(spec)
            same = len(set(routes.values())) == 1
            report.check(f"moebius {spec} three-way", same)
            series = invert_series(routes["det"], 40).coefficients(40)
            _seq_check(report, f"alpha {spec} table = series (k <= 40)",
                       tables.alpha_series(spec, 40), series, "table", "series")
    try:
        verify_reference_tables(report, fixtures_dir)
    except (OSError, ValueError, KeyError) as e:
        report.check(f"fixture {_fixtures.TABLES}", False, f"unreadable: {e}")
    for name in DEFAULT_ORACLE_SPECS:
        verify_counts(report, parse_spec(name), max_k, budget)
    try:
        verify_theta(report, fixtures_dir, max_k, budget)
    except (OSError, ValueError, KeyError) as e:
        report.check(f"fixture {_fixtures.THETA}", False, f"unreadable: {e}")
    return report


def cmd_verify(args, out):
    try:
        report = run_verify(args.spec, args.max_k, args.budget, args.fixtures)
    except SpecError as e:
        raise UsageError(str(e)) from None
    for line in report.lines:
        out.write(line + "\n")
    passed = sum(1 for line in report.lines if line.startswith("PASS"))
    out.write(f"{passed} passed, {report.failures} failed\n")
    return EXIT_MISMATCH if report.failures else EXIT_OK


# -- argument parsing ---------------------------------------------------------


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside",
        description="Growth functions, counting tables and growth rates of spherical Artin-Tits monoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moebius", help="Möbius polynomial of a monoid")
    p.add_argument("spec")
    p.add_argument("--method", choices=[m.value for m in mb.Method])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_moebius)

    p = sub.add_parser("table", help="counting table m_{k,i} (or d_{k,i}); SPEC may be Ainf")
    p.add_argument("spec")
    p.add_argument("--rows", type=_nonneg, required=True, help="largest length k")
    p.add_argument("--columns", type=_positive, help="columns shown for Ainf")
    p.add_argument("--route", choices=["recursion", "delegate"], default="recursion")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("theta", help="coefficients L_k of the leading partial theta root")
    p.add_argument("--terms", type=_nonneg, required=True)
    p.add_argument("--power", type=_positive, default=1)
    p.add_argument("--estimate", action="store_true", help="ratio and root estimates at depth K")
    p.add_argument("--digits", type=_nonneg, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("rate", help="exponential growth rate")
    p.add_argument("spec")
    p.add_argument("--bits", type=_positive, default=64)
    p.add_argument("--sequence", type=_positive, metavar="NMAX",
                   help="rates for ranks up to NMAX in the family of SPEC")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("growth", help="Möbius polynomial and alpha_0..alpha_K")
    p.add_argument("spec")
    p.add_argument("--terms", type=_nonneg, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("verify", help="cross-check all routes against each other and the fixtures")
    p.add_argument("spec", nargs="?")
    p.add_argument("--max-k", type=_nonneg, default=6)
    p.add_argument("--budget", type=_positive, help=f"word cap (default ${oracle.BUDGET_ENV} or 10^7)")
    p.add_argument("--fixtures", help="fixture directory (default: the packaged one)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.command == "theta" and args.estimate and args.terms < 2:
        err.write("garside: --estimate needs --terms >= 2\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as e:
        err.write(f"garside: {e}\n")
        return EXIT_USAGE


def main_exit():  # console-script entry point
    sys.exit(main())
