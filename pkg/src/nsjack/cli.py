"""Command-line front end: compute objects, emit tables, run verification.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Output is
deterministic byte-for-byte for fixed flags (canonical term ordering).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import kernels
from .cterm import ct_inner, ct_norm_formula
from .hermite_laguerre import HermiteBasis, LaguerreBasis
from .jack import JackBasis
from .poly import SparsePoly
from .suites import run_suite


class UsageError(Exception):
    pass


def parse_fraction(text):
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {text!r}: expected p or p/q") from exc


def parse_composition(text):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad composition {text!r}: expected comma-separated "
                         "integers") from exc
    if any(x < 0 for x in parts):
        raise UsageError("composition parts must be non-negative")
    return parts


def _poly_rows(p):
    return [[",".join(map(str, e)), str(c.numerator), str(c.denominator)]
            for e, c in p.sorted_terms()]


def _emit(payload, fmt, out):
    """Serialize a payload (poly dict, scalar string, or report list)."""
    if fmt == "json":
        text = json.dumps(payload, separators=(",", ":"), sort_keys=False)
    else:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if isinstance(payload, dict) and "terms" in payload:
            writer.writerow(["exponents", "numerator", "denominator"])
            for e, num, den in payload["terms"]:
                writer.writerow([" ".join(map(str, e)), num, den])
        elif isinstance(payload, list):
            keys = sorted({k for r in payload for k in r})
            writer.writerow(keys)
            for r in payload:
                writer.writerow([json.dumps(r.get(k), default=str)
                                 if isinstance(r.get(k), (dict, list))
                                 else r.get(k, "") for k in keys])
        else:
            writer.writerow([payload])
        text = buf.getvalue().rstrip("\n")
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cache_path(kind, n, alpha, a=None):
    root = os.environ.get("NSJACK_CACHE_DIR")
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    tag = f"{kind}_n{n}_alpha{str(alpha).replace('/', 'over')}"
    if a is not None:
        tag += f"_a{str(a).replace('/', 'over')}"
    return os.path.join(root, tag + ".json")


def _with_cache(path, key, compute):
    """Look up a polynomial in an optional JSON cache file."""
    if path is None:
        return compute()
    table = {}
    if os.path.exists(path):
        with open(path) as fh:
            table = json.load(fh)
    if key in table:
        return SparsePoly.from_json_dict(table[key])
    poly = compute()
    table[key] = poly.to_json_dict()
    with open(path, "w") as fh:
        json.dump(table, fh)
    return poly


def _add_common(sub, need_eta=True):
    if need_eta:
        sub.add_argument("--eta", required=True, help="composition, e.g. 2,0,1")
    sub.add_argument("--n", type=int, help="number of variables")
    sub.add_argument("--alpha", default="1", help="coupling, e.g. 2 or 1/2")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", help="write output to a file")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="nsjack",
        description="Exact non-symmetric Jack, Hermite and Laguerre "
                    "polynomials and their identity verification suites.")
    sp = ap.add_subparsers(dest="command", required=True)

    for name in ("jack", "hermite", "laguerre"):
        sub = sp.add_parser(name, help=f"compute a {name} basis polynomial")
        _add_common(sub)
        if name == "laguerre":
            sub.add_argument("--a", default="0", help="type-B parameter")
            sub.add_argument("--x-squared", action="store_true",
                             help="serialize in squared variables")

    sub = sp.add_parser("eval-ones", help="value at the all-ones point")
    _add_common(sub)

    sub = sp.add_parser("norm", help="norm value or norm ratio")
    sub.add_argument("--family", choices=("ct", "hermite", "laguerre"),
                     required=True)
    _add_common(sub)
    sub.add_argument("--k", type=int, default=1,
                     help="integer coupling for the constant-term norm")
    sub.add_argument("--a", default="0", help="type-B parameter")

    sub = sp.add_parser("binomial", help="generalized binomial coefficient")
    _add_common(sub)
    sub.add_argument("--nu", required=True, help="lower composition")

    sub = sp.add_parser("kernel", help="degree-truncated kernel")
    sub.add_argument("--family", choices=("A", "B", "0F0", "1K1", "2K1"),
                     required=True)
    sub.add_argument("--degree", type=int, required=True)
    _add_common(sub, need_eta=False)
    sub.add_argument("--a", default="1/2")
    sub.add_argument("--b", default="4/3")
    sub.add_argument("--c", default="7/2")

    sub = sp.add_parser("verify", help="run a verification suite")
    sub.add_argument("--suite", required=True,
                     choices=("operators", "jack", "hermite", "laguerre",
                              "kernels", "binomials", "ct", "sahi", "numeric",
                              "all"))
    sub.add_argument("--alpha-set", help="comma-separated couplings")
    sub.add_argument("--max-weight", type=int)
    sub.add_argument("--max-n", type=int)
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", help="write report to a file")
    return ap


def _dispatch(args):
    if args.command == "verify":
        kwargs = {}
        if args.alpha_set:
            kwargs["alphas"] = tuple(parse_fraction(x)
                                     for x in args.alpha_set.split(","))
        if args.max_weight is not None:
            kwargs["max_weight"] = args.max_weight
        if args.max_n is not None:
            kwargs["max_n"] = args.max_n
        ok, reports = run_suite(args.suite, **kwargs)
        _emit(reports, args.format, args.out)
        return 0 if ok else 1

    alpha = parse_fraction(args.alpha)
    if args.command == "kernel":
        n = args.n or 2
        jb = JackBasis(n, alpha)
        D = args.degree
        fam = args.family
        if fam == "A":
            K = kernels.kernel_KA(jb, D)
        elif fam == "B":
            K = kernels.kernel_KB(jb, parse_fraction(args.a), D)
        elif fam == "0F0":
            K = kernels.hyper_0F0(jb, D)
        elif fam == "1K1":
            K = kernels.kernel_1K1(jb, parse_fraction(args.a),
                                   parse_fraction(args.c), D)
        else:
            K = kernels.kernel_2K1(jb, parse_fraction(args.a),
                                   parse_fraction(args.b),
                                   parse_fraction(args.c), D)
        _emit(K.to_json_dict(), args.format, args.out)
        return 0

    eta = parse_composition(args.eta)
    n = args.n or len(eta)
    if n != len(eta):
        raise UsageError(f"--n {n} does not match the composition length "
                         f"{len(eta)}")
    jb = JackBasis(n, alpha)

    if args.command == "jack":
        poly = _with_cache(_cache_path("jack", n, alpha), str(eta),
                           lambda: jb.E(eta))
        _emit(poly.to_json_dict(), args.format, args.out)
        return 0
    if args.command == "hermite":
        poly = _with_cache(_cache_path("hermite", n, alpha), str(eta),
                           lambda: HermiteBasis(jb).E(eta))
        _emit(poly.to_json_dict(), args.format, args.out)
        return 0
    if args.command == "laguerre":
        a = parse_fraction(args.a)
        poly = _with_cache(_cache_path("laguerre", n, alpha, a), str(eta),
                           lambda: LaguerreBasis(jb, a).E(eta))
        if args.x_squared:
            poly = poly.scale_exponents(2)
        _emit(poly.to_json_dict(), args.format, args.out)
        return 0
    if args.command == "eval-ones":
        _emit(str(jb.eval_ones(eta)), args.format, args.out)
        return 0
    if args.command == "norm":
        if args.family == "ct":
            k = args.k
            alpha_ct = Fraction(1, k)
            if args.alpha != "1" and alpha != alpha_ct:
                raise UsageError("constant-term norm needs alpha = 1/k")
            jb_ct = JackBasis(n, alpha_ct)
            value = ct_norm_formula(eta, k)
            E = jb_ct.E(eta)
            if ct_inner(E, E, k) != value:
                raise ArithmeticError("norm formula disagrees with the "
                                      "constant term; arithmetic bug")
        elif args.family == "hermite":
            value = HermiteBasis(jb).norm_ratio(eta)
        else:
            value = LaguerreBasis(jb, parse_fraction(args.a)).norm_ratio(eta)
        _emit(str(value), args.format, args.out)
        return 0
    if args.command == "binomial":
        nu = parse_composition(args.nu)
        if len(nu) != n:
            raise UsageError("--nu must have the same length as --eta")
        _emit(str(kernels.binomial_coeff(jb, eta, nu)), args.format, args.out)
        return 0
    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
