"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import geometry, means, project
from .embed import psi1, psi1_inv, psi2, psi2_inv
from .errors import (
    AlgebraMismatch,
    ConvergenceFailure,
    FunctionDomainError,
    InvalidSpectrumData,
)
from .io import format_scalar, gen_random_hpd, read_matrix, serialize_matrix
from .matrix import Algebra
from .verify import DEFAULT_SEED, DEFAULT_TRIALS, SUITES, run_verify_suite

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


def _emit_matrix(X) -> None:
    print(serialize_matrix(X))


def cmd_mean(args) -> int:
    f = means.by_name(args.f, args.t)
    A, B = read_matrix(args.A), read_matrix(args.B)
    if args.closed_form:
        result = means.mean_2x2_closed_form(A, B, f)
    else:
        result = means.kubo_ando_mean(A, B, f)
    _emit_matrix(result.value)
    return EXIT_OK


def cmd_dist(args) -> int:
    d = geometry.log_euclidean_distance(read_matrix(args.A), read_matrix(args.B))
    print(format_scalar(d))
    return EXIT_OK


def cmd_bary(args) -> int:
    weights = [float(x) for x in args.weights.split(",")]
    As = [read_matrix(p) for p in args.files]
    _emit_matrix(geometry.log_euclidean_barycenter(As, weights))
    return EXIT_OK


def cmd_embed(args) -> int:
    X = read_matrix(args.file)
    target = Algebra(args.to)
    if X.tag is Algebra.C and target is Algebra.R:
        Y = psi1(X)
    elif X.tag is Algebra.H and target is Algebra.C:
        Y = psi2(X)
    elif X.tag is Algebra.H and target is Algebra.R:
        Y = psi1(psi2(X))
    else:
        raise AlgebraMismatch(f"no embedding from {X.tag.value} to {target.value}")
    _emit_matrix(Y)
    return EXIT_OK


def cmd_extract(args) -> int:
    Y = read_matrix(args.file)
    source = Algebra(args.from_)
    if Y.tag is not source:
        raise AlgebraMismatch(f"--from {source.value} but the document holds a {Y.tag.value} matrix")
    if source is Algebra.R:
        X = psi1_inv(Y, args.tol)
    elif source is Algebra.C:
        X = psi2_inv(Y, args.tol)
    else:
        raise AlgebraMismatch("quaternionic matrices are not the image of an embedding")
    _emit_matrix(X)
    return EXIT_OK


def cmd_project(args) -> int:
    A = read_matrix(args.file)
    if args.structure == "hermitian":
        P = project.hermitian_part(A)
    elif args.structure == "complex":
        P = project.project_to_complex_structure(A)
    else:
        P = project.project_to_quaternionic_structure(A)
    _emit_matrix(P)
    return EXIT_OK


def cmd_gen(args) -> int:
    _emit_matrix(gen_random_hpd(args.algebra, args.n, args.seed))
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_verify_suite(args.suite, args.trials, args.seed)
    for rep in reports:
        print(json.dumps(rep.to_dict()))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kamean", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mean", help="Kubo-Ando mean of two matrices")
    p.add_argument("--f", required=True,
                   choices=["arithmetic", "geometric", "harmonic", "logarithmic", "weighted_geometric"])
    p.add_argument("--t", type=float, default=None, help="weight for weighted_geometric")
    p.add_argument("--closed-form", action="store_true", help="use the 2x2 trace/determinant formula")
    p.add_argument("A")
    p.add_argument("B")
    p.set_defaults(func=cmd_mean)

    p = sub.add_parser("dist", help="Log-Euclidean distance")
    p.add_argument("A")
    p.add_argument("B")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("bary", help="weighted Log-Euclidean barycenter")
    p.add_argument("--weights", required=True, help="comma separated, summing to 1")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_bary)

    p = sub.add_parser("embed", help="apply psi1 (C->R), psi2 (H->C) or both (H->R)")
    p.add_argument("--to", required=True, choices=["R", "C"])
    p.add_argument("file")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="invert psi1 (--from R) or psi2 (--from C)")
    p.add_argument("--from", dest="from_", required=True, choices=["R", "C"])
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("file")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("project", help="nearest structured matrix in Frobenius norm")
    p.add_argument("--structure", required=True, choices=["complex", "quaternionic", "hermitian"])
    p.add_argument("file")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("gen", help="random Hermitian positive definite matrix")
    p.add_argument("--algebra", required=True, choices=["R", "C", "H"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run randomised property suites")
    p.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConvergenceFailure, FunctionDomainError, InvalidSpectrumData) as exc:
        print(f"kamean: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, KeyError, OSError) as exc:
        print(f"kamean: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
