"""Command-line interface: ``gxclean <verb> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .decompose import (
    clean_check,
    gx_witness,
    integers_gx_check,
    ring_check,
    strongly_clean_witness,
    unit_plus_root_witness,
    verdict_to_dict,
    witness_to_dict,
)
from .parsing import format_int_poly, parse_int_poly_literal, parse_poly_literal, parse_ring_spec
from .poly import format_poly
from .ring import DEFAULT_CAP
from .verifier import DEFAULT_SPECS, SUITES, build_catalog, hunt_odd_asymmetry, run_suite

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PROPERTY_FAILS = 3

# tool errors, one code per class; usage errors are argparse's 2
ERROR_CODES = [
    (errors.ParseError, 4),
    (errors.SizeCapExceeded, 5),
    (errors.NotIdempotent, 6),
    (errors.NonCentralCoefficient, 7),
    (errors.NonCentralParameter, 7),
    (errors.InvalidConstruction, 8),
    (errors.AxiomFailure, 8),
    (errors.PreconditionFailed, 9),
    (errors.UnknownTheorem, 10),
    (errors.ZeroPolynomial, 11),
    (errors.NotAUnit, 12),
    (errors.NotSurjective, 12),
    (errors.InvalidInputWitness, 13),
]


def exit_code_for(exc: BaseException) -> int:
    for cls, code in ERROR_CODES:
        if isinstance(exc, cls):
            return code
    return EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--out", help="also write the output to this path")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="ring size cap")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled central pairs")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--witnesses", action="store_true", help="emit a certificate per element")

    parser = argparse.ArgumentParser(prog="gxclean", description="Strong g(x)-cleanness of finite rings.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", parents=[common], help="order, units, center and idempotents of a ring")
    p.add_argument("ring")

    p = sub.add_parser("check", parents=[common], help="decide strong g(x)-cleanness of a ring")
    p.add_argument("ring")
    p.add_argument("--poly", help="poly[c0,c1,...]; omit for plain strong cleanness")

    p = sub.add_parser("witness", parents=[common], help="certificate for a single element")
    p.add_argument("ring")
    p.add_argument("element", type=int)
    p.add_argument("--poly", help="poly[c0,c1,...]; omit for an idempotent-plus-unit witness")
    p.add_argument("--root-of-unity", type=int, metavar="K",
                   help="instead find a unit plus a K-th root of 1")

    p = sub.add_parser("suite", parents=[common], help="run theorem suites over a catalog")
    p.add_argument("theorems", nargs="+", help=f"theorem ids or 'all' ({', '.join(SUITES)})")
    p.add_argument("--catalog", nargs="+", metavar="SPEC", help="ring specs (default catalog otherwise)")

    p = sub.add_parser("hunt", parents=[common], help="compare x^(2n+1)-x with x^(2n+1)+x")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--catalog", nargs="+", metavar="SPEC")

    p = sub.add_parser("int-check", parents=[common], help="decide strong g(x)-cleanness of an integer in Z")
    p.add_argument("r", type=int)
    p.add_argument("--poly", required=True)
    return parser


def _emit(args, text):
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=1)


def cmd_info(args):
    R = parse_ring_spec(args.ring, cap=args.cap)
    info = {"ring_spec": R.spec, "order": R.order, "units": len(R.units), "center": len(R.center),
            "idempotents": len(R.idempotents), "characteristic": R.characteristic,
            "commutative": R.is_commutative}
    if args.format == "json":
        _emit(args, _dump(info))
    else:
        _emit(args, "\n".join(f"{k:<16}{v}" for k, v in info.items()))
    return EXIT_OK


def cmd_check(args):
    R = parse_ring_spec(args.ring, cap=args.cap)
    if args.poly:
        p = parse_poly_literal(args.poly, R)
        v = ring_check(R, p, want_witnesses=args.witnesses)
        what = f"strongly ({format_poly(p)})-clean"
    else:
        v = clean_check(R, want_witnesses=args.witnesses)
        what = "strongly clean"
    if args.format == "json":
        _emit(args, _dump(verdict_to_dict(v)))
    else:
        lines = [f"{R.spec}: {'holds' if v.holds else 'fails'}: {what}"]
        if not v.holds:
            lines.append(f"  first failing element: {v.failing_element} ({R.label(v.failing_element)})")
        for r, w in sorted((v.witness_map or {}).items()):
            lines.append(f"  {R.label(r)} = {R.label(w.s)} + {R.label(w.u)}")
        _emit(args, "\n".join(lines))
    return EXIT_OK if v.holds else EXIT_PROPERTY_FAILS


def cmd_witness(args):
    R = parse_ring_spec(args.ring, cap=args.cap)
    if not 0 <= args.element < R.order:
        raise errors.ParseError(f"element {args.element} out of range for ring of order {R.order}")
    if args.root_of_unity:
        w = unit_plus_root_witness(R, args.element, args.root_of_unity)
    elif args.poly:
        w = gx_witness(R, args.element, parse_poly_literal(args.poly, R))
    else:
        w = strongly_clean_witness(R, args.element)
    if w is None:
        _emit(args, _dump({"ring_spec": R.spec, "r": args.element, "witness": None})
              if args.format == "json" else f"no witness for element {args.element}")
        return EXIT_PROPERTY_FAILS
    if args.format == "json":
        _emit(args, _dump(witness_to_dict(w)))
    else:
        _emit(args, f"{R.label(w.r)} = {R.label(w.s)} + {R.label(w.u)}   (s={w.s}, u={w.u}, kind={w.kind})")
    return EXIT_OK


def _catalog(args):
    return build_catalog(args.catalog or DEFAULT_SPECS, cap=args.cap)


def cmd_suite(args):
    ids = list(SUITES) if args.theorems == ["all"] else args.theorems
    for tid in ids:
        if tid not in SUITES:
            raise errors.UnknownTheorem(f"unknown theorem id {tid!r}")
    cat = _catalog(args)
    reports = [run_suite(cat, tid, seed=args.seed, workers=args.workers) for tid in ids]
    if args.format == "json":
        _emit(args, _dump([r.to_dict() for r in reports]))
    else:
        _emit(args, "\n\n".join(r.to_table() for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_PROPERTY_FAILS


def cmd_hunt(args):
    report = hunt_odd_asymmetry(_catalog(args), args.n)
    _emit(args, report.to_json() if args.format == "json" else report.to_table())
    return EXIT_OK


def cmd_int_check(args):
    coeffs = parse_int_poly_literal(args.poly)
    d = integers_gx_check(args.r, coeffs)
    label = format_int_poly(coeffs)
    if args.format == "json":
        _emit(args, _dump({"r": args.r, "poly": coeffs, "holds": d.holds, "s": d.s, "u": d.u}))
    elif d.holds:
        _emit(args, f"{args.r} is strongly ({label})-clean in Z: {args.r} = {d.s} + {d.u}")
    else:
        _emit(args, f"{args.r} is not strongly ({label})-clean in Z")
    return EXIT_OK if d.holds else EXIT_PROPERTY_FAILS


COMMANDS = {"info": cmd_info, "check": cmd_check, "witness": cmd_witness,
            "suite": cmd_suite, "hunt": cmd_hunt, "int-check": cmd_int_check}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except errors.GxCleanError as exc:
        print(f"gxclean: error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


if __name__ == "__main__":
    sys.exit(main())
