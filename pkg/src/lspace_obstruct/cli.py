"""Command-line interface.

    lspace-obstruct dtable   --m 3 --n 15
    lspace-obstruct torsion  --coeffs -1,1,-1,1,-1,1 --format json
    lspace-obstruct obstruct --m 3 --n 15
    lspace-obstruct scan     --m 4..6 --format csv

Exit status: 0 success, 1 usage error, 2 invalid mathematical input.
"""

import argparse
import sys

from . import report
from .floer_d import d_table
from .knot_poly import (
    InvalidPolynomial,
    SymmetrizedAlexanderPolynomial,
    check_pretzel_parameter,
    pretzel_alexander,
    pretzel_torsion_closed_form,
    torsion_coefficients,
)
from .obstruction import certify_nonfillable_interval, check_slope, lspace_min_slope

EXIT_USAGE = 1
EXIT_MATH = 2


class UsageError(Exception):
    pass


class MathInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_m(text):
    """``"3"`` -> [3]; ``"4..6"`` -> [4, 5, 6]."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
            if hi < lo:
                raise UsageError(f"empty m range {text!r}")
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"--m expects an integer or a range a..b, got {text!r}") from None


def build_parser():
    parser = _Parser(prog="lspace-obstruct", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def knot_args(p, allow_coeffs=True):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--m", help="pretzel parameter for P(-2,3,2m+1), or a..b for scan")
        if allow_coeffs:
            group.add_argument("--coeffs", help="half-coefficients a_0,...,a_g")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("dtable", help="d-invariant table of integer surgery")
    knot_args(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("torsion", help="torsion coefficients t_0..t_g")
    knot_args(p)

    p = sub.add_parser("obstruct", help="negative-definite obstruction at one slope")
    knot_args(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("scan", help="certify non-fillable slope intervals")
    knot_args(p, allow_coeffs=False)
    p.add_argument("--upper", type=int, help="exclusive upper end of the slope scan")
    return parser


def _rewrite_coeffs(argv):
    # "--coeffs -1,1" would be read as an unknown option; glue the value on
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--coeffs":
            out.append("--coeffs=" + next(it, ""))
        else:
            out.append(tok)
    return out


def _knot(args):
    """Resolve --m / --coeffs into (polynomial, m or None, label)."""
    if getattr(args, "coeffs", None) is not None:
        try:
            poly = SymmetrizedAlexanderPolynomial.parse(args.coeffs)
        except InvalidPolynomial as exc:
            raise MathInputError(f"invalid polynomial: {exc}") from None
        return poly, None, f"knot with coefficients {poly.literal()}"
    ms = parse_m(args.m)
    if len(ms) != 1:
        raise UsageError(f"{args.command} takes a single --m, got {args.m!r}")
    m = _pretzel(ms[0])
    return pretzel_alexander(m), m, f"P(-2,3,{2 * m + 1})"


def _pretzel(m):
    try:
        return check_pretzel_parameter(m)
    except ValueError as exc:
        raise MathInputError(str(exc)) from None


def _torsion(poly):
    try:
        return torsion_coefficients(poly)
    except InvalidPolynomial as exc:
        raise MathInputError(f"invalid polynomial: {exc}") from None


def _inputs(args, **extra):
    inputs = {"m": args.m, "coeffs": getattr(args, "coeffs", None)}
    inputs.update(extra)
    return inputs


def _check_n(n):
    if n < 1:
        raise UsageError(f"--n must be a positive integer, got {n}")


def cmd_dtable(args):
    _check_n(args.n)
    poly, _, label = _knot(args)
    payload = report.dtable_to_dict(d_table(_torsion(poly), args.n))
    doc = report.make_document("dtable", _inputs(args, n=args.n), payload)
    return doc, {
        "table": lambda: report.dtable_text(payload, label),
        "csv": lambda: report.dtable_csv(payload),
    }


def cmd_torsion(args):
    poly, m, label = _knot(args)
    torsion = _torsion(poly)
    agrees = None
    if m is not None:
        agrees = all(
            pretzel_torsion_closed_form(m, i) == torsion[i] for i in range(poly.genus + 1)
        )
    payload = report.torsion_to_dict(poly, torsion, agrees)
    doc = report.make_document("torsion", _inputs(args), payload)
    return doc, {
        "table": lambda: report.torsion_text(payload, label),
        "csv": lambda: report.torsion_csv(payload),
    }


def cmd_obstruct(args):
    _check_n(args.n)
    poly, m, label = _knot(args)
    torsion = _torsion(poly)
    lower = lspace_min_slope(m) if m is not None else 2 * poly.genus - 1
    if args.n < lower:
        print(
            f"warning: slope {args.n} < {lower}; the surgery need not be an L-space, "
            "so a failed inequality only rules out negative definite bounding",
            file=sys.stderr,
        )
    payload = report.obstruction_to_dict(check_slope(torsion, args.n))
    doc = report.make_document("obstruct", _inputs(args, n=args.n), payload)
    return doc, {
        "table": lambda: report.obstruction_text(payload, label),
        "csv": lambda: report.obstruction_csv(payload),
    }


def cmd_scan(args):
    payloads = []
    for m in parse_m(args.m):
        _pretzel(m)
        if args.upper is not None and args.upper <= lspace_min_slope(m):
            raise UsageError(f"--upper {args.upper} leaves an empty window for m={m}")
        payloads.append(report.scan_to_dict(certify_nonfillable_interval(m, args.upper)))
    doc = report.make_document("scan", _inputs(args, upper=args.upper), payloads)
    return doc, {
        "table": lambda: report.scan_text(payloads),
        "csv": lambda: report.scan_csv(payloads),
    }


COMMANDS = {
    "dtable": cmd_dtable,
    "torsion": cmd_torsion,
    "obstruct": cmd_obstruct,
    "scan": cmd_scan,
}


def run(argv):
    """Run a command and return its rendered output; raises UsageError / MathInputError."""
    args = build_parser().parse_args(_rewrite_coeffs(argv))
    doc, renderers = COMMANDS[args.command](args)
    if args.format == "json":
        return report.dumps_json(doc)
    return renderers[args.format]()


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        out = run(argv)
    except UsageError as exc:
        print(f"lspace-obstruct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MathInputError as exc:
        print(f"lspace-obstruct: error: {exc}", file=sys.stderr)
        return EXIT_MATH
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
