"""Command-line interface.

Exit codes: 0 success (any verdict), 1 parse error, 2 precondition violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .fileio import (
    parse_graph_file,
    parse_ideal_file,
    parse_matrix_file,
    parse_tree_file,
)
from .graded import PreconditionError
from .groebner import krull_dimension
from .lie import conjugate_basis, diagonal_subalgebra_dim, symmetry_lie_algebra
from .models import (
    adjugate_identity_holds,
    gaussian_cofactor_map,
    staged_tree_kernel,
    staged_tree_parametrization,
    verify_gaussian_kernel,
    verify_staged_kernel,
)
from .parser import ParseError, format_polynomial
from .poly import change_variables
from .report import analyze, emit_report

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", 0, 0) from None


def _write_output(data: bytes, out: str | None):
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def _cmd_analyze(args) -> int:
    ideal = parse_ideal_file(_read(args.file))
    report = analyze(
        ideal,
        degree=args.degree,
        compute_dimension=not args.no_dimension,
        nonprime=args.nonprime,
    )
    _write_output(emit_report(report, format=args.format), args.out)
    return EXIT_OK


def _cmd_lie(args) -> int:
    ideal = parse_ideal_file(_read(args.file))
    algebra = symmetry_lie_algebra(ideal)
    print(f"dimension: {algebra.dimension}")
    print(f"degree used: {algebra.degree_used}")
    print(f"graded rank: {algebra.graded_rank}")
    for k, m in enumerate(algebra.basis, start=1):
        print(f"basis[{k}]:")
        print(m)
    return EXIT_OK


def _cmd_dim(args) -> int:
    ideal = parse_ideal_file(_read(args.file))
    print(krull_dimension(ideal))
    return EXIT_OK


def _cmd_conjugate(args) -> int:
    ideal = parse_ideal_file(_read(args.file))
    matrix = parse_matrix_file(_read(args.matrix))
    algebra = symmetry_lie_algebra(ideal)
    conjugated = conjugate_basis(algebra, matrix)
    diagonal = [m for m in conjugated if m.is_diagonal()]
    print(f"dimension: {algebra.dimension}")
    print(f"diagonal matrices in conjugated basis: {len(diagonal)}")
    print(f"diagonal subalgebra dimension: {diagonal_subalgebra_dim(conjugated)}")
    for k, m in enumerate(conjugated, start=1):
        print(f"conjugated[{k}]:")
        print(m)
    return EXIT_OK


def _cmd_change_vars(args) -> int:
    ideal = parse_ideal_file(_read(args.file))
    matrix = parse_matrix_file(_read(args.matrix))
    for g in ideal.generators:
        print(format_polynomial(change_variables(g, matrix)))
    return EXIT_OK


def _cmd_model_staged_tree(args) -> int:
    tree = parse_tree_file(_read(args.file))
    images = staged_tree_parametrization(tree)
    ring = images[0].ring
    print(f"leaves: {len(images)}")
    print(f"parameters: {', '.join(ring.variables)}")
    for r, img in enumerate(images, start=1):
        print(f"x{r} -> {format_polynomial(img)}")
    if args.verify:
        gens = parse_ideal_file(_read(args.verify))
        results = verify_staged_kernel(tree, gens.generators)
        for g, ok in zip(gens.generators, results):
            print(f"in kernel: {str(ok).lower()}  {format_polynomial(g)}")
    if args.kernel:
        kernel = staged_tree_kernel(tree)
        print("kernel generators:")
        if not kernel.generators:
            print("  (zero ideal)")
        for g in kernel.generators:
            print(f"  {format_polynomial(g)}")
    return EXIT_OK


def _cmd_model_gaussian(args) -> int:
    graph = parse_graph_file(_read(args.file))
    cmap = gaussian_cofactor_map(graph)
    print(f"k-variables: {', '.join(cmap.ring.variables)}")
    print(f"det(K) = {format_polynomial(cmap.det)}")
    print(f"adjugate identity: {str(adjugate_identity_holds(cmap)).lower()}")
    for i, j in cmap.pairs:
        print(f"sigma{i}{j} -> {format_polynomial(cmap.adjugate[(i, j)])}")
    if args.verify:
        gens = parse_ideal_file(_read(args.verify))
        results = verify_gaussian_kernel(graph, gens.generators, cmap)
        for g, ok in zip(gens.generators, results):
            print(f"in kernel: {str(ok).lower()}  {format_polynomial(g)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symlie",
        description="Symmetry Lie algebras of homogeneous ideals and the "
                    "non-toric certificate dim(g) < dim(I).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis with verdict")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=None,
                   help="override the stabilizer degree (graded-only if lower)")
    p.add_argument("--no-dimension", action="store_true",
                   help="skip the Krull dimension (verdict SKIPPED)")
    p.add_argument("--nonprime", action="store_true",
                   help="intersect graded stabilizers over all generator degrees")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("lie", help="print the symmetry Lie algebra basis")
    p.add_argument("file")
    p.set_defaults(func=_cmd_lie)

    p = sub.add_parser("dim", help="print the affine-cone Krull dimension")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("conjugate", help="conjugate the algebra basis by a matrix")
    p.add_argument("file")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser("change-vars", help="apply a linear change of variables")
    p.add_argument("file")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=_cmd_change_vars)

    model = sub.add_parser("model", help="statistical model constructions")
    model_sub = model.add_subparsers(dest="model_command", required=True)

    p = model_sub.add_parser("staged-tree", help="staged tree parametrization")
    p.add_argument("file")
    p.add_argument("--verify", default=None,
                   help="ideal file of generators to test for kernel membership")
    p.add_argument("--kernel", action="store_true",
                   help="compute the kernel by elimination (small trees only)")
    p.set_defaults(func=_cmd_model_staged_tree)

    p = model_sub.add_parser("gaussian", help="Gaussian graphical model map")
    p.add_argument("file")
    p.add_argument("--verify", default=None,
                   help="ideal file of generators to test for kernel membership")
    p.set_defaults(func=_cmd_model_gaussian)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
