"""Command-line front end: ``qpring <command> ...``.

Exit status is 0 on success, 1 for a domain error (the error class name
goes to stderr) and 2 for parse or usage errors.  Expressions starting
with ``-`` must follow a ``--`` separator.
"""

import argparse
import json
import sys

from . import jsonio
from .contfrac import expand, format_pcf
from .errors import QPRingError
from .euclid import divide_R
from .ggcd import ggcd, strict_from_env
from .intpoly import integer_roots
from .oracle import int_jacobi
from .parser import ExprSyntaxError, parse_expr, parse_matrix
from .smith import ParamMatrix, equivalent_everywhere, smith_form


class UsageError(Exception):
    pass


def _poly_arg(text):
    q = parse_expr(text)
    if not q.is_polynomial():
        raise UsageError(f"{text!r} must be a polynomial in x")
    return q.as_polynomial()


def _read_matrix(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    try:
        return ParamMatrix(parse_matrix(text))
    except (json.JSONDecodeError, ValueError) as exc:
        if isinstance(exc, ExprSyntaxError):
            raise
        raise UsageError(f"{path}: {exc}") from None


def _emit(args, obj, lines):
    if getattr(args, "json", False):
        print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)


def _block(title, f):
    return [f"{title}:"] + ["  " + ln for ln in f.piecewise_lines()]


def cmd_eval(args):
    print(parse_expr(args.expr)(args.n))


def cmd_period(args):
    f = parse_expr(args.expr).canonical()
    lines = [f"least period: {f.period}", f"canonical: {f}"] + f.piecewise_lines()
    _emit(args, jsonio.quasi_to_json(f), lines)


def _has_zero_values(g):
    return any(not p or integer_roots(p) for p in g.pieces)


def cmd_div(args):
    f, g = parse_expr(args.f), parse_expr(args.g)
    if _has_zero_values(g):
        print("warning: g vanishes at some integers; quo/rem there follow the zero-piece convention",
              file=sys.stderr)
    res = divide_R(f, g)
    lines = _block("quo", res.quo) + _block("rem", res.rem)
    lines.append(f"agrees with integer division for n > {res.threshold_pos}")
    lines += _block(f"quo for n < -{res.threshold_neg}", res.neg_quo)
    lines += _block(f"rem for n < -{res.threshold_neg}", res.neg_rem)
    _emit(args, jsonio.division_to_json(res), lines)


def cmd_gcd(args):
    fs = [parse_expr(e) for e in args.exprs]
    res = ggcd(fs, method=args.method, strict=strict_from_env())
    lines = _block("gcd", res.d)
    if args.bezout:
        if not res.bezout:
            raise UsageError("--bezout needs --method euclid or both")
        for i, u in enumerate(res.bezout, 1):
            lines += _block(f"u_{i}", u)
    _emit(args, jsonio.gcd_to_json(res), lines)


def cmd_cf(args):
    pcf = expand(_poly_arg(args.f), _poly_arg(args.g))
    _emit(args, jsonio.cf_to_json(pcf), format_pcf(pcf))


def cmd_smith(args):
    A = _read_matrix(args.matrix)
    data = smith_form(A, strict=strict_from_env())
    lines = []
    if data.transposed:
        lines.append("(input transposed to have no more rows than columns)")
    for k, D in enumerate(data.det_factors, 1):
        lines += _block(f"D_{k}", D)
    for k, d in enumerate(data.inv_factors, 1):
        lines += _block(f"d_{k}", d)
    _emit(args, jsonio.smith_to_json(data), lines)


def cmd_equiv(args):
    A, B = _read_matrix(args.a), _read_matrix(args.b)
    same = equivalent_everywhere(A, B, strict=strict_from_env())
    _emit(args, {"equivalent": same}, ["true" if same else "false"])


def cmd_jacobi(args):
    a, b = parse_expr(args.a)(args.n), parse_expr(args.b)(args.n)
    print(int_jacobi(a, b))


def build_parser():
    p = argparse.ArgumentParser(prog="qpring", description="Integer-valued quasi-polynomial toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", help="evaluate an expression at an integer")
    s.add_argument("expr")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("period", help="least period and canonical form")
    s.add_argument("expr")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_period)

    s = sub.add_parser("div", help="generalized division f = quo*g + rem")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_div)

    s = sub.add_parser("gcd", help="generalized gcd")
    s.add_argument("exprs", nargs="+")
    s.add_argument("--bezout", action="store_true", help="also print cofactors")
    s.add_argument("--method", choices=("euclid", "pointwise", "both"), default="euclid")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_gcd)

    s = sub.add_parser("cf", help="piecewise continued fraction of f(n)/g(n)")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cf)

    s = sub.add_parser("smith", help="determinantal and invariant factors of a matrix file")
    s.add_argument("matrix")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_smith)

    s = sub.add_parser("equiv", help="equivalence over Z at every integer")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("jacobi", help="Jacobi symbol (a(n)/b(n))")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_jacobi)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ExprSyntaxError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QPRingError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
