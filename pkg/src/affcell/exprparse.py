"""Parsers for the text forms the formatters emit.

One token stream and recursive-descent core serves polynomial expressions
(`3/4*z1 - z2^-2`, `q^(-1/2)*s[1](1,0)`), cell elements
(`[b0; q*s[1](1,0); b1] + [b1; 1; b0]`), and the small comma/slash forms
used on the command line (block shapes, weights, points, polynomials).

`s[i](a1,...)` atoms are expanded to their Laurent realisation at parse
time, so the grammar needs no separate expansion syntax: any symmetric
expression can be re-expanded after parsing.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .laurent import BlockShape, LaurentPoly
from .symfunc import AsymmetricInputError, schur_block, schur_expand
from .cellalg import CellDatum, CellElement
from .simples import DrinfeldPoint, DrinfeldPolynomial


class ParseError(ValueError):
    """Syntax or semantic error in an input expression."""


_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start()))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start()))
        else:
            tokens.append(("sym", m.group(3), m.start()))
    return tokens


class _Parser:
    def __init__(self, text: str, shape: BlockShape):
        self.text = text
        self.shape = shape
        self.tokens = _tokenize(text)
        self.pos = 0

    # -- token plumbing ------------------------------------------------------

    def peek(self) -> tuple[str, str] | None:
        if self.pos < len(self.tokens):
            kind, text, _ = self.tokens[self.pos]
            return kind, text
        return None

    def next(self) -> tuple[str, str]:
        if self.pos >= len(self.tokens):
            raise ParseError(f"unexpected end of input in {self.text!r}")
        kind, text, _ = self.tokens[self.pos]
        self.pos += 1
        return kind, text

    def expect(self, symbol: str) -> None:
        tok = self.peek()
        if tok != ("sym", symbol) and tok != ("name", symbol):
            where = self.tokens[self.pos][2] if self.pos < len(self.tokens) else len(self.text)
            raise ParseError(f"expected {symbol!r} at position {where} in {self.text!r}")
        self.pos += 1

    def at_symbol(self, *symbols: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "sym" and tok[1] in symbols

    def fail(self, msg: str) -> "ParseError":
        where = self.tokens[self.pos][2] if self.pos < len(self.tokens) else len(self.text)
        return ParseError(f"{msg} at position {where} in {self.text!r}")

    # -- grammar -------------------------------------------------------------

    def parse_int(self) -> int:
        sign = 1
        if self.at_symbol("-"):
            self.next()
            sign = -1
        kind, text = self.next()
        if kind != "int":
            raise self.fail(f"expected integer, got {text!r}")
        return sign * int(text)

    def parse_exponent(self) -> "int | Fraction":
        if self.at_symbol("("):
            self.next()
            num = self.parse_int()
            val: int | Fraction = num
            if self.at_symbol("/"):
                self.next()
                den = self.parse_int()
                val = Fraction(num, den)
            self.expect(")")
            return val
        return self.parse_int()

    def parse_expr(self) -> LaurentPoly:
        if self.at_symbol("-"):
            self.next()
            total = -self.parse_term()
        else:
            if self.at_symbol("+"):
                self.next()
            total = self.parse_term()
        while self.at_symbol("+", "-"):
            _, op = self.next()
            term = self.parse_term()
            total = total + term if op == "+" else total - term
        return total

    def parse_term(self) -> LaurentPoly:
        total = self.parse_factor()
        while self.at_symbol("*"):
            self.next()
            total = total * self.parse_factor()
        return total

    def parse_factor(self) -> LaurentPoly:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        kind, text = tok

        if kind == "name" and text == "q":
            self.next()
            if self.at_symbol("^"):
                self.next()
                exponent = self.parse_exponent()
                try:
                    return LaurentPoly.q_power(self.shape, exponent)
                except ValueError as exc:
                    raise self.fail(str(exc)) from exc
            return LaurentPoly.q_power(self.shape, 1)

        if kind == "name" and (text == "z" or re.fullmatch(r"z\d+", text)):
            self.next()
            if text == "z":
                self.expect("[")
                bid = self.parse_int()
                self.expect("]")
                self.expect("[")
                mu = self.parse_int()
                self.expect("]")
            else:
                if len(self.shape.blocks) != 1:
                    raise self.fail(f"compact variable {text!r} needs a single-block shape")
                bid = self.shape.blocks[0][0]
                mu = int(text[1:])
            exp = 1
            if self.at_symbol("^"):
                self.next()
                e = self.parse_exponent()
                if isinstance(e, Fraction):
                    raise self.fail("variable exponents must be integers")
                exp = e
            try:
                return LaurentPoly.z(self.shape, bid, mu, exp)
            except (KeyError, ValueError) as exc:
                raise self.fail(str(exc)) from exc

        if kind == "name" and text == "s":
            self.next()
            self.expect("[")
            bid = self.parse_int()
            self.expect("]")
            self.expect("(")
            parts = [self.parse_int()]
            while self.at_symbol(","):
                self.next()
                parts.append(self.parse_int())
            self.expect(")")
            try:
                base = schur_block(self.shape, bid, tuple(parts))
            except (KeyError, ValueError) as exc:
                raise self.fail(str(exc)) from exc
            return self._maybe_power(base)

        if kind == "int":
            self.next()
            num = int(text)
            value: int | Fraction = num
            if self.at_symbol("/"):
                self.next()
                k, d = self.next()
                if k != "int":
                    raise self.fail(f"expected denominator, got {d!r}")
                value = Fraction(num, int(d))
            return self._maybe_power(LaurentPoly.const(self.shape, value))

        if kind == "sym" and text == "(":
            self.next()
            inner = self.parse_expr()
            self.expect(")")
            return self._maybe_power(inner)

        raise self.fail(f"unexpected token {text!r}")

    def _maybe_power(self, base: LaurentPoly) -> LaurentPoly:
        if self.at_symbol("^"):
            self.next()
            e = self.parse_exponent()
            if isinstance(e, Fraction) or e < 0:
                raise self.fail("only nonnegative integer powers apply here")
            return base**e
        return base

    def parse_label(self) -> str:
        kind, text = self.next()
        if kind != "name":
            raise self.fail(f"expected label, got {text!r}")
        return text

    def finish(self) -> None:
        if self.pos != len(self.tokens):
            _, text, where = self.tokens[self.pos]
            raise ParseError(f"trailing input {text!r} at position {where} in {self.text!r}")


def parse_poly(text: str, shape: BlockShape) -> LaurentPoly:
    """Parse a polynomial expression over the given shape."""
    p = _Parser(text, shape)
    result = p.parse_expr()
    p.finish()
    return result


def parse_cell_element(text: str, datum: CellDatum) -> CellElement:
    """Parse `[b; expr; b']` terms joined by + or - into a cell element."""
    text = text.strip()
    if text == "0":
        return CellElement.zero(datum)
    p = _Parser(text, datum.shape)
    total = CellElement.zero(datum)
    sign = 1
    if p.at_symbol("-"):
        p.next()
        sign = -1
    while True:
        p.expect("[")
        b = p.parse_label()
        p.expect(";")
        poly = p.parse_expr()
        p.expect(";")
        bp = p.parse_label()
        p.expect("]")
        if b not in datum.labels or bp not in datum.labels:
            raise ParseError(f"unknown label in [{b}; ...; {bp}]")
        try:
            coeff = schur_expand(poly)
        except AsymmetricInputError as exc:
            raise ParseError(f"coefficient of [{b}; ...; {bp}] is not block-symmetric") from exc
        total = total + CellElement.basis(datum, b, sign * coeff if sign < 0 else coeff, bp)
        if p.at_symbol("+", "-"):
            _, op = p.next()
            sign = 1 if op == "+" else -1
            continue
        break
    p.finish()
    return total


# ---------------------------------------------------------------------------
# small comma/slash command-line forms
# ---------------------------------------------------------------------------


def parse_rational(text: str) -> Fraction:
    """A rational in colon form: `3` or `-2:5` for -2/5."""
    text = text.strip()
    if ":" in text:
        num, _, den = text.partition(":")
        try:
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}: {exc}") from exc
    try:
        return Fraction(text)
    except ValueError as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def parse_blocks(text: str) -> BlockShape:
    """Block shape in `id:size` form, comma separated: `1:2,2:1`."""
    entries = []
    for chunk in re.split(r"[,\s]+", text.strip()):
        if not chunk:
            continue
        bid, sep, size = chunk.partition(":")
        if not sep:
            raise ParseError(f"expected id:size, got {chunk!r}")
        try:
            entries.append((int(bid), int(size)))
        except ValueError as exc:
            raise ParseError(f"bad block entry {chunk!r}") from exc
    if not entries:
        raise ParseError("empty block list")
    try:
        return BlockShape(tuple(entries))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_weight(text: str) -> tuple[int, ...]:
    """Comma-separated integer weight: `2,0,-1`."""
    try:
        return tuple(int(p) for p in text.strip().split(","))
    except ValueError as exc:
        raise ParseError(f"bad weight {text!r}") from exc


def parse_point(text: str) -> DrinfeldPoint:
    """Point text: per-block comma lists joined by `/`, rationals via `:`.

    `1:2,3/2` is the point with block values {1/2, 3} and {2}.
    """
    try:
        return DrinfeldPoint(
            [[parse_rational(v) for v in block.split(",")] for block in text.strip().split("/")]
        )
    except ValueError as exc:
        raise ParseError(f"bad point {text!r}: {exc}") from exc


def parse_drinfeld_polynomial(text: str) -> DrinfeldPolynomial:
    """Polynomial text: per-block coefficient lists (highest power first)
    joined by `/`: `1,-5,6` is u^2 - 5u + 6."""
    try:
        return DrinfeldPolynomial(
            [[parse_rational(v) for v in block.split(",")] for block in text.strip().split("/")]
        )
    except ValueError as exc:
        raise ParseError(f"bad polynomial {text!r}: {exc}") from exc
