"""
Command-line surface: one subcommand per operation, scriptable output.

Exit codes: 0 success / verification PASS, 1 verification FAIL (a report is
printed), 2 usage or input parse error.  JSON output is byte-identical for
identical inputs; randomized modes take --seed with a fixed default.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .dirichlet import ParseError, ValidationError, assemble, evaluate, ingest
from .factors import (
    exterior_square_factor,
    linear_local_factor,
    standard_factor,
    verify_macdonald,
    weight_sum_integral,
)
from .groups import (
    TorusExponentVector,
    UnramifiedCharacter,
    build_wn,
    build_wn_prime,
    modulus_split_check,
    real_part,
)
from .schur import (
    SatakeData,
    enumerate_weights,
    parse_scalars,
    parse_weight,
    random_satake_data,
    schur_laurent,
)
from .series import format_scalar

DEFAULT_SEED = 90287


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))


def _parse_complex(text: str) -> complex:
    return complex(text.strip().replace("i", "j"))


def cmd_schur(args) -> int:
    weight = parse_weight(args.weight)
    z = parse_scalars(args.z)
    value = schur_laurent(weight, z)
    if args.format == "json":
        _emit_json(
            {
                "lambda": list(weight.parts),
                "z": [format_scalar(x) for x in z],
                "value": format_scalar(value),
            }
        )
    else:
        print(format_scalar(value))
    return 0


def cmd_weights(args) -> int:
    weights = enumerate_weights(args.n, args.total)
    if args.format == "json":
        _emit_json(
            {"n": args.n, "total": args.total, "weights": [list(w.parts) for w in weights]}
        )
    else:
        for w in weights:
            print(" ".join(str(p) for p in w.parts))
    return 0


def cmd_perm(args) -> int:
    perm = build_wn(args.n) if args.which == "w" else build_wn_prime(args.n)
    if args.format == "json":
        _emit_json({"n": args.n, "which": args.which, "images": list(perm.images)})
        return 0
    print(perm)
    for row in perm.matrix():
        print(" ".join(str(int(x)) for x in row))
    return 0


def cmd_split_check(args) -> int:
    n, bound = args.n, args.range
    if args.samples:
        rng = random.Random(args.seed)
        vectors = (
            tuple(rng.randint(-bound, bound) for _ in range(n))
            for _ in range(args.samples)
        )
    else:
        def all_vectors(slots: int):
            if slots == 0:
                yield ()
                return
            for rest in all_vectors(slots - 1):
                for e in range(-bound, bound + 1):
                    yield rest + (e,)

        vectors = all_vectors(n)
    for exps in vectors:
        if not modulus_split_check(TorusExponentVector(exps)):
            print(f"FAIL at a = {exps}")
            return 1
    print("PASS")
    return 0


def cmd_verify_identity(args) -> int:
    if args.random:
        rng = random.Random(args.seed)
        failures = 0
        for i in range(args.random):
            data = random_satake_data(rng, args.n)
            report = verify_macdonald(data, args.order, args.exterior_scale)
            tag = "PASS" if report else f"FAIL ({report.describe()})"
            z_str = ",".join(format_scalar(x) for x in data.z)
            print(f"[{i}] z={z_str} u={format_scalar(data.u)}: {tag}")
            failures += 0 if report else 1
        return 1 if failures else 0
    z = parse_scalars(args.z)
    u = Fraction(args.u)
    if args.n is not None and args.n != len(z):
        raise ValueError(f"--n {args.n} does not match {len(z)} Satake parameters")
    report = verify_macdonald(SatakeData(z, u), args.order, args.exterior_scale)
    if report:
        print("PASS")
        return 0
    print(f"FAIL: {report.describe()}")
    return 1


def cmd_local_factor(args) -> int:
    data = SatakeData(parse_scalars(args.z), Fraction(args.u))
    std = standard_factor(data)
    ext = exterior_square_factor(data)
    combined = linear_local_factor(data)
    _emit_json(
        {
            "standard": std.coefficient_strings(),
            "exterior_square": ext.coefficient_strings(),
            "combined": combined.coefficient_strings(),
        }
    )
    return 0


def cmd_unramified_integral(args) -> int:
    data = SatakeData(parse_scalars(args.z), Fraction(args.u))
    series = weight_sum_integral(data, args.order)
    if args.format == "json":
        _emit_json({"order": args.order, "coeffs": [format_scalar(c) for c in series.coeffs]})
    else:
        print(series)
    return 0


def cmd_partial_l(args) -> int:
    table = ingest(args.input)
    series = assemble(table, args.X)
    payload = series.to_jsonable()
    if args.eval is not None:
        s = _parse_complex(args.eval)
        result = evaluate(series, s)
        payload["evaluation"] = {
            "s": [s.real, s.imag],
            "value": [result.value.real, result.value.imag],
            "tail_bound": result.tail_bound,
            "convergence_verified": result.convergence_verified,
        }
    _emit_json(payload)
    return 0


def cmd_real_part(args) -> int:
    chi = UnramifiedCharacter(Fraction(args.u), Fraction(args.q))
    print(repr(real_part(chi)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linperiod",
        description="Exact unramified local factors, interleaving combinatorics, "
        "and partial product L-functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("human", "json"), default="human")

    p = sub.add_parser("schur", help="exact Schur polynomial value")
    p.add_argument("--lambda", dest="weight", required=True, help="weight, e.g. 2,1")
    p.add_argument("--z", required=True, help="Satake parameters, e.g. 1,2")
    add_format(p)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("weights", help="enumerate dominant weights of a given size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--total", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("perm", help="interleaving permutation and its matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=("w", "wprime"), default="w")
    add_format(p)
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("split-check", help="verify the modulus splitting identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--range", type=int, default=3, help="exponent box half-width")
    p.add_argument("--samples", type=int, default=0, help="random vectors instead of exhaustive")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_split_check)

    p = sub.add_parser("verify-identity", help="weight sum vs inverted Euler product")
    p.add_argument("--n", type=int, help="rank (required with --random)")
    p.add_argument("--z", help="Satake parameters, e.g. 1,2,1/2")
    p.add_argument("--u", help="twist value, e.g. 2")
    p.add_argument("--order", type=int, default=8)
    p.add_argument(
        "--exterior-scale",
        type=int,
        choices=(1, 2),
        default=2,
        help="2: exterior-square factor in t^2 (default); 1: literal same-argument variant",
    )
    p.add_argument("--random", type=int, default=0, metavar="COUNT", help="seeded random datasets")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify_identity)

    p = sub.add_parser("local-factor", help="local factor polynomials (JSON)")
    p.add_argument("--z", required=True)
    p.add_argument("--u", default="1")
    p.set_defaults(func=cmd_local_factor)

    p = sub.add_parser("unramified-integral", help="truncated weight-sum series")
    p.add_argument("--z", required=True)
    p.add_argument("--u", default="1")
    p.add_argument("--order", type=int, default=8)
    add_format(p)
    p.set_defaults(func=cmd_unramified_integral)

    p = sub.add_parser("partial-l", help="assemble a partial L-function (JSON)")
    p.add_argument("--input", required=True, help="Satake table file")
    p.add_argument("--X", type=int, required=True, help="coefficient bound")
    p.add_argument("--eval", help="evaluate at s, e.g. 2.0+0.0i")
    p.set_defaults(func=cmd_partial_l)

    p = sub.add_parser("real-part", help="real part of an unramified character")
    p.add_argument("--u", required=True, help="value at a uniformizer")
    p.add_argument("--q", required=True, help="residue size")
    p.set_defaults(func=cmd_real_part)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify-identity":
        if args.random and args.n is None:
            parser.error("--random requires --n")
        if not args.random and (args.z is None or args.u is None):
            parser.error("need --z and --u (or --random with --n)")
    try:
        return args.func(args)
    except (ParseError, ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
