"""Symmetric Laurent polynomials in blocked variables: Schur characters.

A GL(m) weight is a weakly decreasing integer tuple of length m, possibly
with negative entries.  Its Schur Laurent polynomial is the corresponding
irreducible character of GL(m): for nonnegative weights this is the usual
Schur polynomial, and a weight with negative entries is handled by twisting
with a power of the determinant character ``z_1 ... z_m``.

The Schur characters of one block form a basis of the symmetric Laurent
polynomials in that block's variables, and tuples of weights (one per
block) give the working basis of the full block-symmetric ring.  A
:class:`SchurExpansion` is a finite combination of such basis elements with
coefficients that are Laurent polynomials in q alone.

Construction is by the bialternant formula, dividing the shifted alternant
determinant by the Vandermonde factor by factor with exact arithmetic; the
determinant shift makes negative parts uniform.  Expansion in the Schur
basis is by repeated subtraction at the leading monomial, which terminates
because every monomial of a Schur character is lexicographically bounded by
its weight.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .laurent import (
    BlockShape,
    Coeff,
    LaurentPoly,
    Monomial,
    ShapeMismatchError,
    _normalize_coeff,
    as_coeff,
    format_coeff,
    format_poly,
)


class AsymmetricInputError(ValueError):
    """Raised when an operation requires block-symmetric input."""


@dataclass(frozen=True, order=True)
class GLWeight:
    """A weakly decreasing integer tuple, the highest weight of a GL irrep."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.parts, self.parts[1:]):
            if a < b:
                raise ValueError(f"weight {self.parts} is not weakly decreasing")

    @staticmethod
    def coerce(obj: "GLWeight | Sequence[int]") -> "GLWeight":
        if isinstance(obj, GLWeight):
            return obj
        return GLWeight(tuple(int(p) for p in obj))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def is_zero(self) -> bool:
        return all(p == 0 for p in self.parts)

    def is_rectangular(self) -> bool:
        return len(set(self.parts)) <= 1

    def shifted(self, k: int) -> "GLWeight":
        return GLWeight(tuple(p + k for p in self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def dual_weight(w: "GLWeight | Sequence[int]") -> GLWeight:
    """Highest weight of the dual representation: reverse and negate."""
    parts = GLWeight.coerce(w).parts
    return GLWeight(tuple(-p for p in reversed(parts)))


def gl_weights(m: int, lo: int, hi: int) -> Iterator[GLWeight]:
    """All weakly decreasing length-m tuples with entries in [lo, hi]."""
    values = range(hi, lo - 1, -1)
    for combo in itertools.combinations_with_replacement(values, m):
        yield GLWeight(combo)


# ---------------------------------------------------------------------------
# Schur characters via the bialternant
# ---------------------------------------------------------------------------


def schur(m: int, w: "GLWeight | Sequence[int]") -> LaurentPoly:
    """Schur Laurent polynomial of a GL(m) weight, on a single-block shape."""
    return schur_block(BlockShape.single(m), 1, w)


def schur_block(shape: BlockShape, block_id: int, w: "GLWeight | Sequence[int]") -> LaurentPoly:
    """Schur character of ``w`` in the variables of one block of ``shape``."""
    w = GLWeight.coerce(w)
    m = shape.size(block_id)
    if len(w) != m:
        raise ValueError(f"weight {w} has length {len(w)}, block {block_id} has size {m}")
    return _schur_cached(shape, block_id, w)


@functools.cache
def _schur_cached(shape: BlockShape, block_id: int, w: GLWeight) -> LaurentPoly:
    m = shape.size(block_id)
    if m == 0:
        return LaurentPoly.one(shape)
    variables = [(block_id, mu) for mu in range(1, m + 1)]
    k = max(0, -w.parts[-1])
    lam = [p + k for p in w.parts]
    # exponents of the shifted alternant rows: strictly decreasing, >= 0
    alpha = [lam[i] + (m - 1 - i) for i in range(m)]
    numerator: dict[Monomial, Coeff] = {}
    for sigma in itertools.permutations(range(m)):
        sign = _perm_sign(sigma)
        zexp = tuple(
            (variables[j], alpha[sigma[j]]) for j in range(m) if alpha[sigma[j]]
        )
        mono = Monomial(tuple(sorted(zexp)), 0)
        numerator[mono] = numerator.get(mono, 0) + sign
    terms = {mono: c for mono, c in numerator.items() if c}
    # divide by the Vandermonde prod_{i<j} (z_i - z_j), one factor at a time
    for i in range(m):
        for j in range(i + 1, m):
            terms = _divide_binomial(terms, variables[i], variables[j])
    poly = LaurentPoly._raw(shape, terms)
    if k:
        det_inverse = LaurentPoly._raw(
            shape, {Monomial(tuple((v, -k) for v in variables), 0): 1}
        )
        poly = poly * det_inverse
    return poly


def _perm_sign(sigma: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _divide_binomial(terms: dict[Monomial, Coeff], va, vb) -> dict[Monomial, Coeff]:
    """Exact division of a polynomial term dict by (z_va - z_vb)."""
    buckets: dict[int, dict[Monomial, Coeff]] = {}
    for mono, c in terms.items():
        e = dict(mono.zexp).get(va, 0)
        buckets.setdefault(e, {})[mono] = c
    if not buckets:
        return {}
    quotient: dict[Monomial, Coeff] = {}
    for e in range(max(buckets), 0, -1):
        for mono, c in buckets.get(e, {}).items():
            if not c:
                continue
            zd = dict(mono.zexp)
            zd[va] = e - 1
            qmono = Monomial(tuple(sorted((v, x) for v, x in zd.items() if x)), mono.q2)
            quotient[qmono] = quotient.get(qmono, 0) + c
            zd[vb] = zd.get(vb, 0) + 1
            rmono = Monomial(tuple(sorted((v, x) for v, x in zd.items() if x)), mono.q2)
            lower = buckets.setdefault(e - 1, {})
            lower[rmono] = lower.get(rmono, 0) + c
    remainder = {m: c for m, c in buckets.get(0, {}).items() if c}
    if remainder:
        raise ArithmeticError(f"polynomial not divisible by z{va} - z{vb}")
    return {m: _normalize_coeff(c) for m, c in quotient.items() if c}


# ---------------------------------------------------------------------------
# symmetry test and Schur-basis expansion
# ---------------------------------------------------------------------------


def is_symmetric(f: LaurentPoly, block_id: int | None = None) -> bool:
    """True iff ``f`` is invariant under permutations of block variables.

    With ``block_id`` given, only that block is tested; otherwise every
    block of the shape must be symmetric.  Adjacent transpositions generate
    the full symmetric group, so only those are checked.
    """
    blocks = [block_id] if block_id is not None else list(f.shape.block_ids)
    for bid in blocks:
        m = f.shape.size(bid)
        for mu in range(1, m):
            if f.swap_variables((bid, mu), (bid, mu + 1)) != f:
                return False
    return True


def trivial_weights(shape: BlockShape) -> tuple[GLWeight, ...]:
    return tuple(GLWeight((0,) * m) for _, m in shape.blocks)


class SchurExpansion:
    """A finite combination of Schur-basis elements of the block ring.

    Keys are tuples of GL weights, one per block in shape order; values are
    z-free Laurent polynomials in q.  This is the working form of elements
    of the representation ring of a product of general linear groups,
    extended by half-integer powers of q.
    """

    __slots__ = ("shape", "terms")

    def __init__(self, shape: BlockShape, terms: Mapping[tuple[GLWeight, ...], object] = ()):
        object.__setattr__(self, "shape", shape)
        clean: dict[tuple[GLWeight, ...], LaurentPoly] = {}
        for weights, coeff in dict(terms).items():
            weights = tuple(GLWeight.coerce(w) for w in weights)
            if len(weights) != len(shape.blocks):
                raise ValueError(f"{len(weights)} weights for {len(shape.blocks)} blocks")
            for w, (bid, m) in zip(weights, shape.blocks):
                if len(w) != m:
                    raise ValueError(f"weight {w} has wrong length for block {bid} (size {m})")
            if not isinstance(coeff, LaurentPoly):
                coeff = LaurentPoly.const(shape, coeff)
            elif coeff.shape != shape:
                raise ShapeMismatchError("coefficient over a different shape")
            if not coeff.is_z_free():
                raise ValueError(f"coefficient of {weights} contains z variables: {coeff}")
            if coeff:
                clean[weights] = clean.get(weights, LaurentPoly.zero(shape)) + coeff
        object.__setattr__(self, "terms", {w: c for w, c in clean.items() if c})

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, shape: BlockShape) -> "SchurExpansion":
        return cls(shape)

    @classmethod
    def unit(cls, shape: BlockShape) -> "SchurExpansion":
        """The trivial character with coefficient one."""
        return cls(shape, {trivial_weights(shape): 1})

    @classmethod
    def single(cls, shape: BlockShape, weights, coeff=1) -> "SchurExpansion":
        return cls(shape, {tuple(weights): coeff})

    # -- ring structure ------------------------------------------------------

    def _coerce(self, other) -> "SchurExpansion | None":
        if isinstance(other, SchurExpansion):
            if self.shape != other.shape:
                raise ShapeMismatchError(f"shape mismatch: {self.shape} vs {other.shape}")
            return other
        if isinstance(other, (int, Fraction)):
            return SchurExpansion(self.shape, {trivial_weights(self.shape): other})
        if isinstance(other, LaurentPoly) and other.is_z_free():
            return SchurExpansion(self.shape, {trivial_weights(self.shape): other})
        return None

    def __add__(self, other) -> "SchurExpansion":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        result = SchurExpansion.__new__(SchurExpansion)
        object.__setattr__(result, "shape", self.shape)
        object.__setattr__(result, "terms", out)
        return result

    __radd__ = __add__

    def __neg__(self) -> "SchurExpansion":
        result = SchurExpansion.__new__(SchurExpansion)
        object.__setattr__(result, "shape", self.shape)
        object.__setattr__(result, "terms", {w: -c for w, c in self.terms.items()})
        return result

    def __sub__(self, other) -> "SchurExpansion":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "SchurExpansion":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return lr_mul(self, other)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.shape, frozenset(self.terms.items())))

    def q_shift(self, exponent) -> "SchurExpansion":
        """Multiply every coefficient by a power of q."""
        result = SchurExpansion.__new__(SchurExpansion)
        object.__setattr__(result, "shape", self.shape)
        object.__setattr__(
            result, "terms", {w: c.q_shift(exponent) for w, c in self.terms.items()}
        )
        return result

    def dual(self) -> "SchurExpansion":
        """Apply the dual-representation involution: each weight is dualised.

        Coefficients are untouched (q is fixed by duality).  On the Laurent
        realisation this is exactly the bar involution.
        """
        return SchurExpansion(
            self.shape,
            {tuple(dual_weight(w) for w in ws): c for ws, c in self.terms.items()},
        )

    def to_laurent(self) -> LaurentPoly:
        """Multiply out into the ambient Laurent ring."""
        total = LaurentPoly.zero(self.shape)
        for weights, coeff in self.terms.items():
            prod = _schur_product(self.shape, weights)
            total = total + coeff * prod
        return total

    def sorted_terms(self) -> list[tuple[tuple[GLWeight, ...], LaurentPoly]]:
        def key(item):
            weights, _ = item
            return tuple(-p for w in weights for p in w.parts)

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        return format_expansion(self)

    def __repr__(self) -> str:
        return f"SchurExpansion({self.shape}; {format_expansion(self)})"


@functools.cache
def _schur_product(shape: BlockShape, weights: tuple[GLWeight, ...]) -> LaurentPoly:
    """Product over blocks of the Schur characters of a weight tuple."""
    total = LaurentPoly.one(shape)
    for w, (bid, _) in zip(weights, shape.blocks):
        total = total * _schur_cached(shape, bid, w)
    return total


def schur_expand(f: LaurentPoly) -> SchurExpansion:
    """Expand a block-symmetric Laurent polynomial in the Schur basis.

    Repeatedly subtracts the Schur product matching the leading monomial;
    q powers ride along in the coefficients.  Raises
    :class:`AsymmetricInputError` if ``f`` is not symmetric in every block.
    """
    if not is_symmetric(f):
        raise AsymmetricInputError("input is not symmetric in every block")
    shape = f.shape
    variables = shape.variables()
    work: dict[Monomial, Coeff] = dict(f.terms)
    result: dict[tuple[GLWeight, ...], LaurentPoly] = {}
    while work:
        lead = max(tuple(dict(m.zexp).get(v, 0) for v in variables) for m in work)
        weights = []
        pos = 0
        for bid, m in shape.blocks:
            parts = lead[pos : pos + m]
            pos += m
            weights.append(GLWeight(parts))
        weights = tuple(weights)
        # coefficient in q of the leading z-monomial
        coeff_terms: dict[Monomial, Coeff] = {}
        for mono, c in work.items():
            if tuple(dict(mono.zexp).get(v, 0) for v in variables) == lead:
                coeff_terms[Monomial((), mono.q2)] = c
        coeff = LaurentPoly._raw(shape, coeff_terms)
        result[weights] = coeff
        prod = _schur_product(shape, weights)
        for pm, pc in prod.terms.items():
            for cm, cc in coeff_terms.items():
                key = Monomial(pm.zexp, pm.q2 + cm.q2)
                s = work.get(key, 0) - pc * cc
                if s:
                    work[key] = s
                else:
                    work.pop(key, None)
    return SchurExpansion(shape, result)


def lr_mul(e1: SchurExpansion, e2: SchurExpansion) -> SchurExpansion:
    """Product of two Schur expansions (Littlewood-Richardson in each block).

    Computed by multiplying the underlying Laurent polynomials and
    re-expanding, which keeps a single code path for arbitrary coefficient
    polynomials in q.
    """
    if e1.shape != e2.shape:
        raise ShapeMismatchError(f"shape mismatch: {e1.shape} vs {e2.shape}")
    return schur_expand(e1.to_laurent() * e2.to_laurent())


# ---------------------------------------------------------------------------
# text form: `c * s[block](a1,a2,...) * ...` terms joined by +/-
# ---------------------------------------------------------------------------


def format_expansion(e: SchurExpansion) -> str:
    if not e.terms:
        return "0"
    chunks: list[str] = []
    for weights, coeff in e.sorted_terms():
        factors = [
            f"s[{bid}]({','.join(str(p) for p in w.parts)})"
            for w, (bid, _) in zip(weights, e.shape.blocks)
            if not w.is_zero()
        ]
        negative = False
        if len(coeff.terms) == 1:
            ((mono, c),) = coeff.terms.items()
            negative = c < 0
            mag = LaurentPoly._raw(e.shape, {mono: -c if negative else c})
            if mag != 1 or not factors:
                factors.insert(0, format_poly(mag))
        else:
            factors.insert(0, f"({format_poly(coeff)})")
        body = "*".join(factors)
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)
