"""Simple-module classification by specialising the Gram form.

Points of the spectrum of the block ring are given per block by a multiset
of m_i nonzero rationals (the eigenvalue multiset of one loop generator),
or equivalently by the monic degree-m_i polynomial with those roots.
Specialising every Gram value at a point leaves a matrix of Laurent
polynomials in q; the layer contributes a simple module at the point
exactly when the matrix has positive rank over the rational function
field in q.  For any datum with a unit label the (b0, b0) entry is the
constant 1, so the rank is positive at every point: the nondegeneracy
condition cuts out all of the spectrum.

Only rational points are handled; a polynomial with an irreducible factor
over the rationals is rejected with the factor in the error message.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .laurent import BlockShape, LaurentPoly, ShapeMismatchError
from .cellalg import CellDatum


class NoRationalRootsError(ValueError):
    """Raised when a polynomial has an irreducible factor over the rationals."""

    def __init__(self, residual: tuple[Fraction, ...]):
        self.residual = residual
        super().__init__(f"no rational root: residual factor {_format_upoly(residual)}")


class DrinfeldPoint:
    """Per-block multisets of nonzero rationals, stored sorted."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[Iterable]):
        blocks = []
        for block in values:
            vals = tuple(sorted(Fraction(v) for v in block))
            if any(v == 0 for v in vals):
                raise ValueError("point values must be nonzero")
            if not vals:
                raise ValueError("empty block in point")
            blocks.append(vals)
        if not blocks:
            raise ValueError("point has no blocks")
        self.values = tuple(blocks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DrinfeldPoint):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __str__(self) -> str:
        return "/".join(",".join(_format_rat(v) for v in block) for block in self.values)

    def __repr__(self) -> str:
        return f"DrinfeldPoint({self})"


class DrinfeldPolynomial:
    """Per-block monic polynomials with nonzero constant term.

    Coefficients are stored highest power first, so block coefficients
    (1, -5, 6) mean u^2 - 5u + 6.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Iterable]):
        blocks = []
        for block in coeffs:
            row = tuple(Fraction(c) for c in block)
            if len(row) < 2:
                raise ValueError("polynomial must have positive degree")
            if row[0] != 1:
                raise ValueError(f"polynomial {_format_upoly(row)} is not monic")
            if row[-1] == 0:
                raise ValueError(f"polynomial {_format_upoly(row)} has zero constant term")
            blocks.append(row)
        if not blocks:
            raise ValueError("polynomial has no blocks")
        self.coeffs = tuple(blocks)

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) - 1 for row in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DrinfeldPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return " / ".join(_format_upoly(row) for row in self.coeffs)

    def __repr__(self) -> str:
        return f"DrinfeldPolynomial({self})"


def _format_rat(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}:{v.denominator}"


def _format_upoly(coeffs: Sequence[Fraction]) -> str:
    deg = len(coeffs) - 1
    chunks = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        power = deg - k
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            u = "u" if power == 1 else f"u^{power}"
            body = u if mag == 1 else f"{mag}*{u}"
        if not chunks:
            chunks.append(f"-{body}" if c < 0 else body)
        else:
            chunks.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(chunks) if chunks else "0"


# ---------------------------------------------------------------------------
# specialization and rank
# ---------------------------------------------------------------------------


def _point_assignment(shape: BlockShape, p: DrinfeldPoint) -> dict:
    if p.sizes() != tuple(m for _, m in shape.blocks):
        raise ShapeMismatchError(
            f"point block sizes {p.sizes()} do not match shape {shape}"
        )
    zvals = {}
    for (bid, m), block in zip(shape.blocks, p.values):
        for mu, v in enumerate(block, start=1):
            zvals[(bid, mu)] = v
    return zvals


def specialize_gram(d: CellDatum, p: DrinfeldPoint) -> list[list[LaurentPoly]]:
    """Evaluate every Gram value at the point; q stays symbolic.

    Gram values are block-symmetric, so any assignment of the multiset to
    the block variables gives the same result; the sorted order is used.
    Returns the |B| x |B| matrix in label order.
    """
    zvals = _point_assignment(d.shape, p)
    matrix = []
    for b in d.labels:
        row = []
        for bp in d.labels:
            row.append(d.gram_value(b, bp).evaluate(zvals))
        matrix.append(row)
    return matrix


def _rank_in_q(matrix: list[list[LaurentPoly]]) -> int:
    """Rank over the field of rational functions in q, by exact elimination.

    Fraction-free: rows are cross-multiplied by pivots instead of divided,
    which preserves rank because the entries live in a domain.
    """
    rows = [row[:] for row in matrix if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            entry = rows[i][col]
            if entry:
                rows[i] = [pivot * a - entry * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


class Classification(NamedTuple):
    has_simple: bool
    rank: int


def classify_point(d: CellDatum, p: DrinfeldPoint) -> Classification:
    """Rank of the specialised Gram matrix; a simple exists iff it is positive."""
    matrix = specialize_gram(d, p)
    rank = _rank_in_q(matrix)
    return Classification(rank > 0, rank)


# ---------------------------------------------------------------------------
# the point <-> polynomial dictionary
# ---------------------------------------------------------------------------


def point_to_polynomial(p: DrinfeldPoint) -> DrinfeldPolynomial:
    """Monic polynomial with the point's values as roots, per block."""
    blocks = []
    for values in p.values:
        coeffs = [Fraction(1)]
        for a in values:
            # multiply by (u - a), coefficients highest power first
            shifted = coeffs + [Fraction(0)]
            for k, c in enumerate(coeffs):
                shifted[k + 1] -= a * c
            coeffs = shifted
        blocks.append(tuple(coeffs))
    return DrinfeldPolynomial(blocks)


def polynomial_to_point(P: DrinfeldPolynomial) -> DrinfeldPoint:
    """Root multisets of a rationally-split polynomial, per block.

    Raises :class:`NoRationalRootsError` naming the residual factor if some
    block has an irrational or complex root.
    """
    blocks = []
    for coeffs in P.coeffs:
        roots, residual = _rational_roots(list(coeffs))
        if len(residual) > 1:
            raise NoRationalRootsError(tuple(residual))
        blocks.append(roots)
    return DrinfeldPoint(blocks)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    for k in range(1, int(math.isqrt(n)) + 1):
        if n % k == 0:
            out.append(k)
            if k * k != n:
                out.append(n // k)
    return sorted(out)


def _eval_upoly(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + root * out[-1])
    return out


def _rational_roots(coeffs: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Extract rational roots with multiplicity; return (roots, residual factor)."""
    roots: list[Fraction] = []
    while len(coeffs) > 1:
        scale = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * scale) for c in coeffs]
        lead, const = ints[0], ints[-1]
        if const == 0:
            # zero root; cannot occur for valid Drinfeld data but keep exact
            roots.append(Fraction(0))
            coeffs = coeffs[:-1]
            continue
        found = None
        for num in _divisors(const):
            for den in _divisors(lead):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if _eval_upoly(coeffs, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        coeffs = _deflate(coeffs, found)
    # normalize residual to monic for reporting
    if len(coeffs) > 1 and coeffs[0] != 1:
        coeffs = [c / coeffs[0] for c in coeffs]
    return roots, coeffs
