"""Command-line front end.

Verbs:
  schur    print a Schur Laurent polynomial
  expand   expand a symmetric expression in the Schur basis
  pair     inner product of two symmetric expressions
  mult     multiply two cell elements over a datum file
  check    run the axiom checks on a datum file and print the report
  simples  classify points against a datum file

Output is deterministic: terms are ordered canonically, so identical
inputs give byte-identical output.  `--format records` switches to
key=value lines for machine consumption.  The `check` verb exits 0 even
when checks fail: the report is the product, and a nonzero exit is
reserved for I/O and parse errors.
"""

from __future__ import annotations

import argparse
import sys

from .laurent import BlockShape, ShapeMismatchError
from .symfunc import AsymmetricInputError, schur_block, schur_expand
from .pairing import sf_inner, schur_projection
from .cellalg import cell_mul, layer_idempotent, verify_cell_axioms
from .simples import NoRationalRootsError, classify_point, polynomial_to_point
from .exprparse import (
    ParseError,
    parse_blocks,
    parse_cell_element,
    parse_drinfeld_polynomial,
    parse_point,
    parse_poly,
    parse_weight,
)
from .datum_io import DatumParseError, load_cell_datum


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affcell",
        description="Exact computations in cell-layer algebras over block-symmetric Laurent rings.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("plain", "records"),
        default="plain",
        help="output style: human text or key=value records",
    )
    shaped = argparse.ArgumentParser(add_help=False)
    shaped.add_argument("--m", type=int, help="single-block shape of this size")
    shaped.add_argument("--blocks", help="multi-block shape, e.g. 1:2,2:1")

    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("schur", parents=[common], help="print a Schur Laurent polynomial")
    p.add_argument("--m", type=int, required=True, help="number of variables")
    p.add_argument("--weight", required=True, help="weakly decreasing weight, e.g. 2,0")

    p = sub.add_parser(
        "expand", parents=[common, shaped], help="expand a symmetric expression in the Schur basis"
    )
    p.add_argument("expr", help="symmetric polynomial expression")
    p.add_argument(
        "--bound",
        type=int,
        default=None,
        help="compute by inner-product projection with parts in [-B, B] instead of leading-term subtraction",
    )

    p = sub.add_parser(
        "pair", parents=[common, shaped], help="inner product of two symmetric expressions"
    )
    p.add_argument("left", help="first expression")
    p.add_argument("right", help="second expression (bar applies to this slot)")

    p = sub.add_parser("mult", parents=[common], help="multiply two cell elements")
    p.add_argument("--datum", required=True, help="datum file")
    p.add_argument("left", help="cell element, e.g. '[b0; 1; b1]'")
    p.add_argument("right", help="cell element")

    p = sub.add_parser("check", parents=[common], help="verify the axioms of a datum file")
    p.add_argument("--datum", required=True, help="datum file")
    p.add_argument("--samples", type=int, default=20, help="random samples per check")
    p.add_argument("--seed", type=int, default=0, help="seed for the random samples")

    p = sub.add_parser("simples", parents=[common], help="classify points against a datum")
    p.add_argument("--datum", required=True, help="datum file")
    p.add_argument(
        "--point",
        action="append",
        default=[],
        help="point as per-block comma lists joined by /, rationals via ':', e.g. 1:2,3/2",
    )
    p.add_argument(
        "--poly",
        action="append",
        default=[],
        help="per-block monic coefficients (highest first) joined by /, e.g. 1,-5,6",
    )
    return parser


def _shape_from_args(args) -> BlockShape:
    if getattr(args, "blocks", None):
        if args.m is not None:
            raise ParseError("give either --m or --blocks, not both")
        return parse_blocks(args.blocks)
    if getattr(args, "m", None) is not None:
        if args.m < 1:
            raise ParseError("--m must be positive")
        return BlockShape.single(args.m)
    raise ParseError("a shape is required: --m or --blocks")


def _emit(args, lines: list[str]) -> None:
    for line in lines:
        print(line)


def _run_schur(args) -> int:
    shape = BlockShape.single(args.m)
    poly = schur_block(shape, 1, parse_weight(args.weight))
    _emit(args, [f"schur={poly}" if args.format == "records" else str(poly)])
    return 0


def _run_expand(args) -> int:
    shape = _shape_from_args(args)
    f = parse_poly(args.expr, shape)
    if args.bound is not None:
        expansion = schur_projection(f, bound=args.bound)
    else:
        expansion = schur_expand(f)
    _emit(args, [f"expansion={expansion}" if args.format == "records" else str(expansion)])
    return 0


def _run_pair(args) -> int:
    shape = _shape_from_args(args)
    f = parse_poly(args.left, shape)
    g = parse_poly(args.right, shape)
    value = sf_inner(f, g)
    _emit(args, [f"inner={value}" if args.format == "records" else str(value)])
    return 0


def _run_mult(args) -> int:
    datum = load_cell_datum(args.datum)
    x = parse_cell_element(args.left, datum)
    y = parse_cell_element(args.right, datum)
    product = cell_mul(x, y)
    _emit(args, [f"product={product}" if args.format == "records" else str(product)])
    return 0


def _run_check(args) -> int:
    # lenient load: the point of check is to report on imperfect data
    datum = load_cell_datum(args.datum, validate=False)
    report = verify_cell_axioms(datum, samples=args.samples, seed=args.seed)
    idem = layer_idempotent(datum)
    lines = []
    if args.format == "records":
        for c in report.checks:
            lines.append(f"check.{c.name}={'pass' if c.passed else 'fail'}")
        lines.append(f"layer_idempotent={idem}")
    else:
        lines.extend(str(c) for c in report.checks)
        lines.append(f"layer_idempotent: {idem}")
    _emit(args, lines)
    return 0


def _run_simples(args) -> int:
    datum = load_cell_datum(args.datum)
    points = [parse_point(text) for text in args.point]
    for text in args.poly:
        points.append(polynomial_to_point(parse_drinfeld_polynomial(text)))
    if not points:
        raise ParseError("simples needs at least one --point or --poly")
    lines = []
    for p in points:
        has_simple, rank = classify_point(datum, p)
        flag = "true" if has_simple else "false"
        if args.format == "records":
            lines.append(f"point={p} has_simple={flag} rank={rank}")
        else:
            lines.append(f"{p}: has_simple={flag} rank={rank}")
    _emit(args, lines)
    return 0


_RUNNERS = {
    "schur": _run_schur,
    "expand": _run_expand,
    "pair": _run_pair,
    "mult": _run_mult,
    "check": _run_check,
    "simples": _run_simples,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _RUNNERS[args.verb](args)
    except (
        ParseError,
        DatumParseError,
        AsymmetricInputError,
        ShapeMismatchError,
        NoRationalRootsError,
        OSError,
        KeyError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
