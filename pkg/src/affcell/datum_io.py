"""Line-oriented text format for cell data.

Example file:

    # optional comments
    blocks: 1:2 2:1
    weights:
      rank: 2
      form: 2 1 | 1 2
      lambda: 1 0
      wt: b0 = 0 0
      wt: b1 = 1 -1
    gram:
      b0 b0 = 1
      b0 b1 = q*s[1](1,0)
    unit: b0

Sections are `blocks`, `weights`, `gram`, `unit`.  Form rows are separated
by `|`; form entries may be rationals like 1/2.  Label order is the order
of the `wt:` lines.  Gram entries are sparse (missing pairs are zero) and
their right-hand sides use the polynomial expression grammar, so Schur
atoms like s[1](1,0) are allowed.  Serialisation is canonical: parsing a
file and writing it back normalises it, and the result is a fixed point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .laurent import BlockShape, LaurentPoly, format_coeff
from .cellalg import CellDatum, DatumValidationError, WeightData
from .exprparse import ParseError, parse_blocks, parse_poly


class DatumParseError(ValueError):
    """Datum file syntax error, with the offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


_SECTIONS = ("blocks", "weights", "gram", "unit")


def parse_cell_datum(text: str, validate: bool = True) -> CellDatum:
    """Parse datum text; with ``validate`` the loader invariants are enforced."""
    shape: BlockShape | None = None
    rank: int | None = None
    form: list[list[Fraction]] | None = None
    lam: list[int] | None = None
    wt: dict[str, tuple[int, ...]] = {}
    gram_lines: list[tuple[int, str, str, str]] = []
    unit_label: str | None = None
    section = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        key = head.strip()
        if sep and key in _SECTIONS:
            section = key
            rest = rest.strip()
            if key == "blocks":
                if not rest:
                    raise DatumParseError(lineno, "blocks: needs id:size entries")
                try:
                    shape = parse_blocks(rest)
                except ParseError as exc:
                    raise DatumParseError(lineno, str(exc)) from exc
            elif key == "unit":
                if not rest:
                    raise DatumParseError(lineno, "unit: needs a label")
                unit_label = rest
            elif rest:
                raise DatumParseError(lineno, f"unexpected text after {key}:")
            continue

        if section == "weights":
            if not sep:
                raise DatumParseError(lineno, f"expected key: value, got {line!r}")
            rest = rest.strip()
            if key == "rank":
                rank = _parse_int(lineno, rest)
            elif key == "form":
                form = []
                for row in rest.split("|"):
                    form.append([_parse_frac(lineno, v) for v in row.split()])
            elif key == "lambda":
                lam = [_parse_int(lineno, v) for v in rest.split()]
            elif key == "wt":
                label, eq, vec = rest.partition("=")
                if not eq:
                    raise DatumParseError(lineno, "wt: needs LABEL = integers")
                label = label.strip()
                if not label:
                    raise DatumParseError(lineno, "wt: empty label")
                if label in wt:
                    raise DatumParseError(lineno, f"duplicate weight for {label!r}")
                wt[label] = tuple(_parse_int(lineno, v) for v in vec.split())
            else:
                raise DatumParseError(lineno, f"unknown weights key {key!r}")
        elif section == "gram":
            lhs, eq, rhs = line.partition("=")
            if not eq:
                raise DatumParseError(lineno, "gram entry needs LABEL LABEL = expression")
            pair = lhs.split()
            if len(pair) != 2:
                raise DatumParseError(lineno, f"expected two labels, got {lhs.strip()!r}")
            gram_lines.append((lineno, pair[0], pair[1], rhs.strip()))
        elif section is None:
            raise DatumParseError(lineno, f"content before any section header: {line!r}")
        else:
            raise DatumParseError(lineno, f"unexpected line in {section}: section")

    if shape is None:
        raise DatumParseError(0, "missing blocks: section")
    if rank is None or form is None or lam is None:
        raise DatumParseError(0, "weights: section needs rank, form and lambda")
    if not wt:
        raise DatumParseError(0, "weights: section has no wt: lines")

    try:
        weights = WeightData(rank, form, lam, wt)
    except ValueError as exc:
        raise DatumParseError(0, str(exc)) from exc

    labels = tuple(wt)
    gram: dict[tuple[str, str], LaurentPoly] = {}
    for lineno, b, bp, expr in gram_lines:
        if b not in wt:
            raise DatumParseError(lineno, f"missing weight for label {b!r}")
        if bp not in wt:
            raise DatumParseError(lineno, f"missing weight for label {bp!r}")
        if (b, bp) in gram:
            raise DatumParseError(lineno, f"duplicate gram entry ({b},{bp})")
        try:
            gram[(b, bp)] = parse_poly(expr, shape)
        except ParseError as exc:
            raise DatumParseError(lineno, str(exc)) from exc

    # Well-formed files that fail the loader invariants keep the more
    # specific DatumValidationError; only structural problems (unknown
    # labels, wrong shapes) become parse errors.
    try:
        return CellDatum(shape, labels, weights, gram, unit_label, validate=validate)
    except DatumValidationError:
        raise
    except ValueError as exc:
        raise DatumParseError(0, str(exc)) from exc


def _parse_int(lineno: int, text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise DatumParseError(lineno, f"expected integer, got {text!r}") from exc


def _parse_frac(lineno: int, text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DatumParseError(lineno, f"expected rational, got {text!r}") from exc


def format_cell_datum(d: CellDatum) -> str:
    """Canonical text form; gram entries in label order, zero entries dropped."""
    lines = [f"blocks: {_format_blocks(d.shape)}"]
    lines.append("weights:")
    lines.append(f"  rank: {d.weights.rank}")
    rows = " | ".join(" ".join(format_coeff(v) for v in row) for row in d.weights.form)
    lines.append(f"  form: {rows}")
    lines.append("  lambda: " + " ".join(str(v) for v in d.weights.lam))
    for b in d.labels:
        lines.append(f"  wt: {b} = " + " ".join(str(v) for v in d.weights.wt[b]))
    lines.append("gram:")
    for b in d.labels:
        for bp in d.labels:
            value = d.gram.get((b, bp))
            if value is not None:
                lines.append(f"  {b} {bp} = {value}")
    if d.unit_label is not None:
        lines.append(f"unit: {d.unit_label}")
    return "\n".join(lines) + "\n"


def _format_blocks(shape: BlockShape) -> str:
    return " ".join(f"{bid}:{m}" for bid, m in shape.blocks)


def load_cell_datum(path, validate: bool = True) -> CellDatum:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cell_datum(fh.read(), validate=validate)
