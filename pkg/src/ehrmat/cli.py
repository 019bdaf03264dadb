"""Command-line front end.

Commands:
    ehrmat ehrhart <file>                 Ehrhart coefficients + volume
    ehrmat hstar <file>                   h*-vector + unimodality
    ehrmat verify <file> --kmax K         pipeline vs brute-force oracle
    ehrmat genfun <file>                  generating-function terms
    ehrmat scan-uniform --nmax N [--rmax R] [--csv]
                                          conjecture scan via closed forms

Input files are UTF-8 JSON matroid documents; subsets are sorted
1-based integer arrays. Exit codes: 0 ok, 1 conjecture violation or
verification mismatch, 2 validation error, 3 enumeration budget.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import bruteforce, genfun, hstar, specialize
from .matroid import (
    BudgetExceeded, RankFunction, check_matroid_axioms,
    check_polymatroid_axioms,
)
from .vertices import (
    BASES_POLYTOPE, INDEPENDENCE_POLYTOPE, POLYMATROID, PolytopeSpec,
)

EXIT_OK = 0
EXIT_CONJECTURE = 1
EXIT_VALIDATION = 2
EXIT_BUDGET = 3

SCAN_GUARD_NMAX = 100


class ValidationError(Exception):
    pass


def load_document(path):
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return parse_document(doc)


def parse_document(doc):
    """Parse and validate a matroid document into a PolytopeSpec."""
    try:
        family = doc["family"]
        kind = doc["kind"]
        name = doc.get("name", "<unnamed>")
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"missing field: {exc}") from exc
    if family not in (BASES_POLYTOPE, INDEPENDENCE_POLYTOPE, POLYMATROID):
        raise ValidationError(f"unknown family {family!r}")
    try:
        if kind == "uniform":
            f = RankFunction.uniform(int(doc["n"]), int(doc["r"]))
        elif kind == "graphic":
            edges = [tuple(e) for e in doc["edges"]]
            f = RankFunction.graphic(len(edges), edges)
        elif kind == "bases":
            f = RankFunction.from_bases(int(doc["n"]), doc["bases"])
        elif kind == "table":
            table = {frozenset(entry["subset"]): entry["value"]
                     for entry in doc["values"]}
            n = int(doc["n"])
            expected = (1 << n) - 1
            if len([a for a in table if a]) != expected:
                raise ValidationError(
                    "table must list every non-empty subset")
            f = RankFunction.from_table(n, table)
        else:
            raise ValidationError(f"unknown kind {kind!r}")
    except ValidationError:
        raise
    except Exception as exc:
        raise ValidationError(f"malformed document: {exc}") from exc
    if family == POLYMATROID or kind == "table":
        ok, why = check_polymatroid_axioms(f)
    else:
        ok, why = check_matroid_axioms(f)
    if not ok:
        raise ValidationError(f"axiom check failed for {name}: {why}")
    return name, PolytopeSpec(family, f)


def pipeline_ehrhart(spec):
    g = genfun.build_genfun(spec)
    return g, specialize.ehrhart_polynomial(g)


def _frac_str(x):
    return str(Fraction(x))


def cmd_ehrhart(args):
    name, spec = load_document(args.file)
    _, poly = pipeline_ehrhart(spec)
    dim = len(poly) - 1
    out = {
        "name": name,
        "coefficients": [_frac_str(c) for c in poly],
        "volumeNormalized": _frac_str(poly[-1]),
        "dim": dim,
    }
    print(json.dumps(out))
    return EXIT_OK


def cmd_hstar(args):
    name, spec = load_document(args.file)
    _, poly = pipeline_ehrhart(spec)
    dim = len(poly) - 1
    h = hstar.ehrhart_to_hstar(poly, dim)
    out = {
        "name": name,
        "hstar": list(h),
        "unimodal": hstar.is_unimodal(h),
    }
    print(json.dumps(out))
    return EXIT_OK


def cmd_verify(args):
    name, spec = load_document(args.file)
    _, poly = pipeline_ehrhart(spec)
    oracle = bruteforce.ehrhart_by_interpolation(spec)
    match = poly == oracle
    first_diff = None
    if not match:
        for i in range(max(len(poly), len(oracle))):
            a = poly[i] if i < len(poly) else Fraction(0)
            b = oracle[i] if i < len(oracle) else Fraction(0)
            if a != b:
                first_diff = i
                break
    counts = []
    g = genfun.build_genfun(spec)
    for k in range(1, args.kmax + 1):
        pk = specialize.count(genfun.dilate(g, k))
        bk = bruteforce.count_direct(spec, k)
        counts.append({"k": k, "pipeline": pk, "bruteforce": bk,
                       "match": pk == bk})
        match = match and pk == bk
    out = {
        "name": name,
        "match": match,
        "pipeline": [_frac_str(c) for c in poly],
        "bruteforce": [_frac_str(c) for c in oracle],
        "firstDifferingCoefficient": first_diff,
        "counts": counts,
    }
    print(json.dumps(out))
    return EXIT_OK if match else EXIT_CONJECTURE


def cmd_genfun(args):
    name, spec = load_document(args.file)
    g = genfun.build_genfun(spec)
    out = {
        "name": name,
        "n": g.n,
        "dim": g.dim,
        "termCount": len(g.terms),
        "terms": [{
            "sign": t.sign,
            "a": list(t.a),
            "v": list(t.v),
            "b": [list(b) for b in t.bs],
        } for t in g.terms],
    }
    print(json.dumps(out))
    return EXIT_OK


def cmd_scan_uniform(args):
    if args.nmax > SCAN_GUARD_NMAX:
        raise BudgetExceeded(f"scan guard: nmax={args.nmax} exceeds 100")
    rows = []
    violation = False
    for n in range(2, args.nmax + 1):
        for r in range(1, min(args.rmax, n - 1) + 1):
            rep = hstar.uniform_conjecture_report(n, r)
            if not rep["hstarUnimodal"]:
                violation = True
            if rep.get("ehrhartCoeffsPositive") is False:
                violation = True
            rows.append(rep)
    if args.csv:
        print("n,r,hstarUnimodal,ehrhartCoeffsPositive")
        for rep in rows:
            print(f"{rep['n']},{rep['r']},{rep['hstarUnimodal']},"
                  f"{rep.get('ehrhartCoeffsPositive', '')}")
    else:
        print(json.dumps({"rows": rows, "violation": violation}))
    return EXIT_CONJECTURE if violation else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ehrmat",
        description="Exact Ehrhart polynomials and h*-vectors of matroid"
                    " and polymatroid polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ehrhart", help="Ehrhart coefficients and volume")
    p.add_argument("file")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("hstar", help="h*-vector and unimodality verdict")
    p.add_argument("file")
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("verify", help="cross-check against brute force")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("genfun", help="dump generating-function terms")
    p.add_argument("file")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("scan-uniform", help="conjecture scan, closed forms")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--rmax", type=int, default=10**9)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_scan_uniform)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
