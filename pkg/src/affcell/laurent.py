"""Sparse Laurent polynomials over exact rationals, in blocked variables.

The variables come in named blocks: block ``i`` of size ``m_i`` carries the
invertible variables ``z[i][1] .. z[i][m_i]``.  On top of the ``z`` variables
there is one distinguished variable ``q`` whose exponents live on the
half-integer grid; internally a ``q`` exponent is stored as an integer count
of half-units, so ``q^(3/2)`` is exponent ``3`` and ``q^2`` is exponent ``4``.

Coefficients are exact rationals (``fractions.Fraction``, normalised to
``int`` whenever the denominator is one).  No floating point is used
anywhere.  A polynomial is a canonical map from monomials to nonzero
coefficients, so equality of polynomials is equality of dicts.

All values are immutable after construction and every operation is a pure
function; instances can be shared freely between threads.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

Coeff = Union[int, Fraction]

#: A z-variable is addressed by (block id, index within the block, 1-based).
Var = tuple[int, int]


class ShapeMismatchError(ValueError):
    """Raised when two polynomials over different shapes are combined."""


@dataclass(frozen=True)
class BlockShape:
    """An ordered family of variable blocks ``(block id, size)``.

    Block ids must be distinct; sizes are nonnegative.  The shape fixes the
    ambient Laurent ring: which ``z`` variables exist and how they are
    ordered for printing and leading-term comparisons.
    """

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        ids = [i for i, _ in self.blocks]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate block ids in {ids}")
        for i, m in self.blocks:
            if not (isinstance(i, int) and isinstance(m, int)):
                raise ValueError("block ids and sizes must be integers")
            if m < 0:
                raise ValueError(f"block {i} has negative size {m}")

    @classmethod
    def single(cls, m: int, block_id: int = 1) -> "BlockShape":
        """Shape with one block of size ``m`` (default id 1)."""
        return cls(((block_id, m),))

    @property
    def block_ids(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.blocks)

    def size(self, block_id: int) -> int:
        for i, m in self.blocks:
            if i == block_id:
                return m
        raise KeyError(f"no block {block_id} in shape {self}")

    @property
    def nvars(self) -> int:
        return sum(m for _, m in self.blocks)

    def variables(self) -> tuple[Var, ...]:
        """All z-variables in canonical order (block id, then index)."""
        return tuple((i, mu) for i, m in self.blocks for mu in range(1, m + 1))

    def __str__(self) -> str:
        return ",".join(f"{i}:{m}" for i, m in self.blocks)


class Monomial(NamedTuple):
    """One monomial: sparse z-exponents plus a q exponent in half-units.

    ``zexp`` is a tuple of ``((block, index), exponent)`` pairs, sorted by
    variable and free of zero exponents, which makes the monomial hashable
    and its equality canonical.
    """

    zexp: tuple[tuple[Var, int], ...]
    q2: int

    def is_z_free(self) -> bool:
        return not self.zexp


ONE_MONO = Monomial((), 0)


def _zexp_mul(a: tuple[tuple[Var, int], ...], b: tuple[tuple[Var, int], ...]):
    """Merge two sorted exponent lists, adding exponents, dropping zeros."""
    if not a:
        return b
    if not b:
        return a
    out = []
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        va, ea = a[ia]
        vb, eb = b[ib]
        if va == vb:
            e = ea + eb
            if e:
                out.append((va, e))
            ia += 1
            ib += 1
        elif va < vb:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return Monomial(_zexp_mul(a.zexp, b.zexp), a.q2 + b.q2)


def _mono_bar(m: Monomial) -> Monomial:
    # z exponents are negated; q is untouched (it belongs to the scalars).
    return Monomial(tuple((v, -e) for v, e in m.zexp), m.q2)


def _normalize_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def as_coeff(value) -> Coeff:
    """Coerce an int, Fraction, or rational string to an exact coefficient."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _normalize_coeff(value)
    if isinstance(value, str):
        return _normalize_coeff(Fraction(value))
    raise TypeError(f"not an exact rational: {value!r}")


class LaurentPoly:
    """A Laurent polynomial over a fixed :class:`BlockShape`.

    Terms are stored canonically: no zero coefficients, integral rationals
    stored as ``int``.  Supports ``+ - * **`` with other polynomials over the
    same shape and with plain rational scalars.
    """

    __slots__ = ("shape", "terms")

    def __init__(self, shape: BlockShape, terms: Mapping[Monomial, Coeff] = ()):
        object.__setattr__(self, "shape", shape)
        clean: dict[Monomial, Coeff] = {}
        for mono, c in dict(terms).items():
            c = _normalize_coeff(c)
            if c:
                clean[mono] = c
        object.__setattr__(self, "terms", clean)

    # -- construction -----------------------------------------------------

    @classmethod
    def _raw(cls, shape: BlockShape, terms: dict[Monomial, Coeff]) -> "LaurentPoly":
        """Wrap an already-canonical term dict without copying."""
        self = object.__new__(cls)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "terms", terms)
        return self

    @classmethod
    def zero(cls, shape: BlockShape) -> "LaurentPoly":
        return cls._raw(shape, {})

    @classmethod
    def const(cls, shape: BlockShape, value) -> "LaurentPoly":
        c = as_coeff(value)
        return cls._raw(shape, {ONE_MONO: c} if c else {})

    @classmethod
    def one(cls, shape: BlockShape) -> "LaurentPoly":
        return cls.const(shape, 1)

    @classmethod
    def z(cls, shape: BlockShape, block_id: int, index: int, exponent: int = 1) -> "LaurentPoly":
        """The variable ``z[block_id][index]`` raised to ``exponent``."""
        m = shape.size(block_id)
        if not 1 <= index <= m:
            raise ValueError(f"index {index} out of range for block {block_id} of size {m}")
        if exponent == 0:
            return cls.one(shape)
        return cls._raw(shape, {Monomial((((block_id, index), exponent),), 0): 1})

    @classmethod
    def q_power(cls, shape: BlockShape, exponent) -> "LaurentPoly":
        """``q`` raised to an integer or half-integer exponent."""
        return cls._raw(shape, {Monomial((), _half_units(exponent)): 1})

    # -- ring structure ----------------------------------------------------

    def _check_shape(self, other: "LaurentPoly") -> None:
        if self.shape != other.shape:
            raise ShapeMismatchError(f"shape mismatch: {self.shape} vs {other.shape}")

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            self._check_shape(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.shape, other)
        return None

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = _normalize_coeff(s)
            else:
                out.pop(mono, None)
        return LaurentPoly._raw(self.shape, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.shape, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, Coeff] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                key = _mono_mul(m1, m2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        for key, c in out.items():
            out[key] = _normalize_coeff(c)
        return LaurentPoly._raw(self.shape, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = LaurentPoly.one(self.shape)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.shape, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.shape, frozenset(self.terms.items())))

    # -- the operations the pairing machinery needs ------------------------

    def bar(self) -> "LaurentPoly":
        """Replace every z variable by its inverse; q is left fixed.

        This is an involutive ring homomorphism; on symmetric polynomials it
        realises duality of GL representations.
        """
        return LaurentPoly._raw(self.shape, {_mono_bar(m): c for m, c in self.terms.items()})

    def constant_term(self) -> "LaurentPoly":
        """The part of the polynomial free of all z variables (q survives)."""
        return LaurentPoly._raw(
            self.shape, {m: c for m, c in self.terms.items() if not m.zexp}
        )

    def is_z_free(self) -> bool:
        return all(not m.zexp for m in self.terms)

    def evaluate(self, zvals: Mapping[Var, object]) -> "LaurentPoly":
        """Substitute exact rational values for the z variables.

        ``zvals`` must assign a nonzero rational to every z variable that
        actually occurs; q stays symbolic, so the result is z-free.
        """
        vals: dict[Var, Fraction] = {}
        for var, v in zvals.items():
            f = Fraction(as_coeff(v))
            if f == 0:
                raise ZeroDivisionError(f"z variable {var} assigned zero (z variables are invertible)")
            vals[var] = f
        out: dict[Monomial, Coeff] = {}
        for mono, c in self.terms.items():
            value = Fraction(c)
            for var, e in mono.zexp:
                if var not in vals:
                    raise KeyError(f"no value assigned to z[{var[0]}][{var[1]}]")
                value *= vals[var] ** e
            if value:
                key = Monomial((), mono.q2)
                s = out.get(key, 0) + value
                if s:
                    out[key] = _normalize_coeff(s)
                else:
                    out.pop(key, None)
        return LaurentPoly._raw(self.shape, out)

    def coefficient(self, mono: Monomial) -> Coeff:
        return self.terms.get(mono, 0)

    def q_shift(self, exponent) -> "LaurentPoly":
        """Multiply by a power of q (integer or half-integer exponent)."""
        d = _half_units(exponent)
        if d == 0:
            return self
        return LaurentPoly._raw(
            self.shape, {Monomial(m.zexp, m.q2 + d): c for m, c in self.terms.items()}
        )

    def swap_variables(self, a: Var, b: Var) -> "LaurentPoly":
        """Exchange two z variables (used for symmetry checks)."""
        out: dict[Monomial, Coeff] = {}
        for mono, c in self.terms.items():
            zd = dict(mono.zexp)
            ea, eb = zd.pop(a, 0), zd.pop(b, 0)
            if ea:
                zd[b] = ea
            if eb:
                zd[a] = eb
            key = Monomial(tuple(sorted(zd.items())), mono.q2)
            out[key] = out.get(key, 0) + c
        return LaurentPoly(self.shape, out)

    # -- ordering and text form --------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in canonical order: leading z-monomial first, then by q.

        Monomials are compared by their dense exponent vector over the
        shape's variable order (descending), ties broken by q exponent
        (ascending).  This order is what the serializer emits and what the
        leading-term expansion in :mod:`affcell.symfunc` consumes.
        """
        variables = self.shape.variables()

        def key(item):
            mono, _ = item
            zd = dict(mono.zexp)
            dense = tuple(-zd.get(v, 0) for v in variables)
            return (dense, mono.q2)

        return sorted(self.terms.items(), key=key)

    def leading_z_vector(self) -> tuple[int, ...]:
        """Dense z-exponent vector of the lexicographically greatest monomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        variables = self.shape.variables()
        best = None
        for mono in self.terms:
            zd = dict(mono.zexp)
            dense = tuple(zd.get(v, 0) for v in variables)
            if best is None or dense > best:
                best = dense
        return best

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.shape}; {format_poly(self)})"


def _half_units(exponent) -> int:
    """Convert an exponent of q to the internal half-unit count."""
    if isinstance(exponent, int):
        return 2 * exponent
    f = Fraction(exponent)
    if f.denominator == 1:
        return 2 * f.numerator
    if f.denominator == 2:
        return f.numerator
    raise ValueError(f"q exponent must lie on the half-integer grid, got {exponent}")


# ---------------------------------------------------------------------------
# text form
#
# Canonical term text is `c * q^e * z[i][mu]^e * ...`, with the coefficient
# omitted when it is +-1 and the factors joined by `*`.  Shapes with a single
# block print their variables compactly as z1, z2, ...; the parser in
# affcell.exprparse accepts both spellings.  Rationals print as p/q and odd
# q exponents as q^(a/2).
# ---------------------------------------------------------------------------


def format_coeff(c: Coeff) -> str:
    c = _normalize_coeff(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def _format_q(q2: int) -> str:
    if q2 == 2:
        return "q"
    if q2 % 2 == 0:
        return f"q^{q2 // 2}"
    return f"q^({q2}/2)"


def _var_name(var: Var, compact: bool) -> str:
    if compact:
        return f"z{var[1]}"
    return f"z[{var[0]}][{var[1]}]"


def format_poly(f: LaurentPoly) -> str:
    """Deterministic text form of a polynomial (see module notes)."""
    if not f.terms:
        return "0"
    compact = len(f.shape.blocks) == 1
    chunks: list[str] = []
    for mono, c in f.sorted_terms():
        factors: list[str] = []
        if mono.q2:
            factors.append(_format_q(mono.q2))
        for var, e in mono.zexp:
            name = _var_name(var, compact)
            factors.append(name if e == 1 else f"{name}^{e}")
        c = _normalize_coeff(c)
        negative = c < 0
        mag = -c if negative else c
        if not factors or mag != 1:
            factors.insert(0, format_coeff(mag))
        body = "*".join(factors)
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)


def dict_poly(shape: BlockShape, entries: Iterable[tuple[Mapping[Var, int], object, object]]) -> LaurentPoly:
    """Build a polynomial from ``(zexp map, q exponent, coefficient)`` rows.

    Convenience for tests and small scripts; exponents of q may be integers
    or half-integer Fractions.
    """
    terms: dict[Monomial, Coeff] = {}
    for zmap, qexp, c in entries:
        mono = Monomial(tuple(sorted((v, e) for v, e in zmap.items() if e)), _half_units(qexp))
        terms[mono] = terms.get(mono, 0) + as_coeff(c)
    return LaurentPoly(shape, terms)


@functools.cache
def _block_variables(shape: BlockShape, block_id: int) -> tuple[Var, ...]:
    m = shape.size(block_id)
    return tuple((block_id, mu) for mu in range(1, m + 1))


# free-function spellings of the core ring operations

def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def bar_involution(f: LaurentPoly) -> LaurentPoly:
    return f.bar()


def constant_term(f: LaurentPoly) -> LaurentPoly:
    return f.constant_term()


def evaluate(f: LaurentPoly, zvals: Mapping[Var, object]) -> LaurentPoly:
    return f.evaluate(zvals)
