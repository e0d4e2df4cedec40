"""Command-line interface.

Subcommands: ``normalize`` (the three pipelines), ``gb``, ``radical``,
``minprimes`` (debugging helpers on the input ideal), and ``bench`` (the
built-in corpus runner with cross-method agreement checks).

Input files::

    ring: QQ[x,y]          # or Fp(32003)[x,y]
    order: dp              # dp = degrevlex, lp = lex
    ideal:
    x^4 + y^2*(y-1)^3

Exit codes: 0 success, 2 input/syntax error, 3 unsupported dimension
(e.g. surfaces with positive-dimensional singular locus), 4 iteration or
round limit exceeded, 5 zerodivisor detected (input not a domain),
6 cross-method disagreement (bench).
"""

import argparse
import json
import sys
import time

from .affine import AffineAlgebra, FractionalIdeal, fractional_equals
from .corpus import CORPUS, SURFACES, corpus_instance
from .errors import (
    AffnormError,
    InputSyntaxError,
    IterationLimitError,
    UnsupportedDimensionError,
    ZerodivisorError,
)
from .ideals import Ideal, minimal_primes_zero_dim, zero_dim_radical
from .modular import normalize_modular
from .normalizer import normalize_global, normalize_local
from .parsing import parse_input_file

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSUPPORTED_DIMENSION = 3
EXIT_RESOURCE = 4
EXIT_ZERODIVISOR = 5
EXIT_DISAGREEMENT = 6


def _load_algebra(path):
    ctx, gens = parse_input_file(path)
    return AffineAlgebra(ctx, Ideal(ctx, gens))


def _run_method(A, args):
    if args.method == "global":
        return normalize_global(A)
    if args.method == "local":
        return normalize_local(A, threads=args.threads, seed=args.seed)
    return normalize_modular(
        A,
        batch=args.primes,
        verify=not args.no_verify,
        lift_relations=args.lift_relations,
        seed=args.seed,
        threads=args.threads,
    )


def _result_payload(result):
    frac = result.fractional
    payload = {
        "method": result.method,
        "denominator": str(frac.denominator),
        "generators": [str(g) for g in frac.numerator.groebner()],
        "relations": None,
        "primes_used": result.primes_used,
        "verified": bool(result.verified) if result.verified is not None else None,
        "iterations": result.iterations,
    }
    if result.relations is not None:
        payload["relations"] = [
            str(r) for r in result.relations.relation_ideal.groebner()
        ]
    return payload


def _print_text(payload, elapsed):
    print("method:      %s" % payload["method"])
    print("denominator: %s" % payload["denominator"])
    print("generators (%d):" % len(payload["generators"]))
    for g in payload["generators"]:
        print("  %s" % g)
    if payload["relations"] is not None:
        print("relations (%d):" % len(payload["relations"]))
        for r in payload["relations"]:
            print("  %s" % r)
    if payload["primes_used"] is not None:
        print("primes used: %s" % payload["primes_used"])
    if payload["verified"] is not None:
        print("verified:    %s" % payload["verified"])
    print("iterations:  %d" % payload["iterations"])
    print("time:        %.2fs" % elapsed)


def cmd_normalize(args):
    A = _load_algebra(args.file)
    t0 = time.time()
    result = _run_method(A, args)
    elapsed = time.time() - t0
    payload = _result_payload(result)
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        _print_text(payload, elapsed)
    return EXIT_OK


def cmd_gb(args):
    ctx, gens = parse_input_file(args.file)
    for g in Ideal(ctx, gens).groebner():
        print(g)
    return EXIT_OK


def cmd_radical(args):
    ctx, gens = parse_input_file(args.file)
    for g in zero_dim_radical(Ideal(ctx, gens)).groebner():
        print(g)
    return EXIT_OK


def cmd_minprimes(args):
    ctx, gens = parse_input_file(args.file)
    comps = minimal_primes_zero_dim(Ideal(ctx, gens), seed=args.seed)
    for i, comp in enumerate(comps):
        print("component %d:" % (i + 1))
        for g in comp.groebner():
            print("  %s" % g)
    return EXIT_OK


def cmd_bench(args):
    names = args.names or sorted(CORPUS)
    failures = 0
    for name in names:
        ctx, I = corpus_instance(name)
        A = AffineAlgebra(ctx, I)
        print("== %s ==" % name)
        if name in SURFACES:
            try:
                normalize_local(A, threads=args.threads, seed=args.seed)
            except UnsupportedDimensionError as exc:
                print("  unsupported dimension (expected): %s" % exc)
                continue
            print("  ERROR: surface did not raise the dimension error")
            failures += 1
            continue
        results = {}
        for method in args.methods:
            t0 = time.time()
            try:
                if method == "global":
                    res = normalize_global(A)
                elif method == "local":
                    res = normalize_local(A, threads=args.threads, seed=args.seed)
                elif method == "modular":
                    res = normalize_modular(
                        A, verify=True, seed=args.seed, threads=args.threads
                    )
                else:
                    res = normalize_modular(
                        A, verify=False, seed=args.seed, threads=args.threads
                    )
            except IterationLimitError as exc:
                print("  %-9s did not converge: %s" % (method, exc))
                failures += 1
                continue
            elapsed = time.time() - t0
            results[method] = res
            print(
                "  %-9s %7.2fs  d=deg %d, %d generators"
                % (
                    method,
                    elapsed,
                    res.fractional.denominator.total_degree(),
                    len(res.fractional.numerator.groebner()),
                )
            )
        methods = list(results)
        for i in range(1, len(methods)):
            a = results[methods[0]].fractional
            b = results[methods[i]].fractional
            if not fractional_equals(a, b, A):
                print(
                    "  DISAGREEMENT between %s and %s"
                    % (methods[0], methods[i])
                )
                for g in a.numerator.groebner():
                    print("    [%s] %s" % (methods[0], g))
                for g in b.numerator.groebner():
                    print("    [%s] %s" % (methods[i], g))
                failures += 1
    return EXIT_DISAGREEMENT if failures else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="affnorm",
        description="Normalization (integral closure) of affine rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    norm = sub.add_parser("normalize", help="normalize the ideal in FILE")
    norm.add_argument("file")
    norm.add_argument(
        "--method", choices=["global", "local", "modular"], default="global"
    )
    norm.add_argument("--no-verify", action="store_true",
                      help="modular only: skip the exact verification")
    norm.add_argument("--lift-relations", action="store_true",
                      help="modular only: lift the relation bases as well")
    norm.add_argument("--threads", type=int, default=1)
    norm.add_argument("--seed", type=int, default=0)
    norm.add_argument("--primes", type=int, default=10,
                      help="primes per modular round")
    norm.add_argument("--json", action="store_true")
    norm.set_defaults(func=cmd_normalize)

    gb = sub.add_parser("gb", help="reduced Groebner basis of the input ideal")
    gb.add_argument("file")
    gb.set_defaults(func=cmd_gb)

    rad = sub.add_parser("radical", help="zero-dimensional radical")
    rad.add_argument("file")
    rad.set_defaults(func=cmd_radical)

    mp = sub.add_parser("minprimes", help="minimal primes (zero-dimensional)")
    mp.add_argument("file")
    mp.add_argument("--seed", type=int, default=0)
    mp.set_defaults(func=cmd_minprimes)

    bench = sub.add_parser("bench", help="run the built-in corpus")
    bench.add_argument("names", nargs="*")
    bench.add_argument(
        "--methods",
        nargs="+",
        default=["local", "modular-probabilistic"],
        choices=["global", "local", "modular", "modular-probabilistic"],
    )
    bench.add_argument("--threads", type=int, default=1)
    bench.add_argument("--seed", type=int, default=0)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputSyntaxError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedDimensionError as exc:
        print("unsupported dimension: %s" % exc, file=sys.stderr)
        return EXIT_UNSUPPORTED_DIMENSION
    except IterationLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except ZerodivisorError as exc:
        print("zerodivisor detected: %s" % exc, file=sys.stderr)
        return EXIT_ZERODIVISOR
    except AffnormError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
