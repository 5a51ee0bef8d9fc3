"""Seeded random generators for property tests.

Every generator takes an explicit random.Random so sweeps are
reproducible.  Cell data coming out of random_cell_datum are valid by
construction: Gram values are built from Schur characters (hence
block-symmetric), opposite entries are bar images of each other, entries
are supported on equal-weight label pairs, and the unit label is
normalised.  That is the regime in which the layer multiplication is
provably associative with anti-multiplicative sharp, so the generators
double as witnesses for those properties.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .laurent import BlockShape, LaurentPoly, Monomial
from .symfunc import GLWeight, SchurExpansion
from .cellalg import (
    CellDatum,
    CellElement,
    WeightData,
    _random_element,
    _random_expansion,
    _random_weight,
)
from .simples import DrinfeldPoint


def random_shape(rng: random.Random, max_blocks: int = 2, max_size: int = 2) -> BlockShape:
    k = rng.randint(1, max_blocks)
    return BlockShape(tuple((i, rng.randint(1, max_size)) for i in range(1, k + 1)))


def random_laurent(
    rng: random.Random,
    shape: BlockShape,
    terms: int = 4,
    zbound: int = 2,
    qbound: int = 2,
    cbound: int = 3,
) -> LaurentPoly:
    """Random element of the full Laurent ring; no symmetry."""
    out = LaurentPoly.zero(shape)
    variables = shape.variables()
    for _ in range(terms):
        zexp = tuple(
            (v, e)
            for v in variables
            if (e := rng.randint(-zbound, zbound))
        )
        mono = Monomial(zexp, rng.randint(-qbound, qbound))
        c = rng.choice([x for x in range(-cbound, cbound + 1) if x])
        out = out + LaurentPoly._raw(shape, {mono: c})
    return out


def random_expansion(
    rng: random.Random, shape: BlockShape, terms: int = 2, bound: int = 1
) -> SchurExpansion:
    """Random Schur-basis combination with small q-monomial coefficients."""
    e = SchurExpansion.zero(shape)
    for _ in range(rng.randint(1, terms)):
        weights = tuple(_random_weight(rng, m, bound) for _, m in shape.blocks)
        coeff = LaurentPoly._raw(
            shape,
            {Monomial((), rng.randint(-2, 2)): rng.choice([1, -1, 2, -2])},
        )
        e = e + SchurExpansion(shape, {weights: coeff})
    return e


def random_symmetric(
    rng: random.Random, shape: BlockShape, terms: int = 2, bound: int = 1
) -> LaurentPoly:
    """Random block-symmetric Laurent polynomial, via a random expansion."""
    return random_expansion(rng, shape, terms, bound).to_laurent()


def random_cell_datum(
    rng: random.Random,
    max_blocks: int = 2,
    max_size: int = 2,
    max_labels: int = 3,
    with_unit: bool = True,
) -> CellDatum:
    """A valid cell datum with bar-compatible Gram entries.

    Labels share weight vectors in small classes so that off-diagonal Gram
    entries are allowed to be nonzero; gram(b', b) is set to
    bar(gram(b, b')) and diagonal entries are made bar-invariant.
    """
    shape = random_shape(rng, max_blocks, max_size)
    rank = rng.randint(1, 2)
    form = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        form[i][i] = rng.randint(1, 2)
        for j in range(i + 1, rank):
            form[i][j] = form[j][i] = rng.randint(0, 1)
    lam = [rng.randint(0, 2) for _ in range(rank)]

    nlabels = rng.randint(1, max_labels)
    labels = [f"b{i}" for i in range(nlabels)]
    zero = (0,) * rank
    pool = [zero, tuple(rng.randint(-1, 1) for _ in range(rank))]
    wt = {}
    for i, b in enumerate(labels):
        if with_unit and i == 0:
            wt[b] = zero
        else:
            wt[b] = rng.choice(pool)
    weights = WeightData(rank, form, lam, wt)

    gram: dict[tuple[str, str], LaurentPoly] = {}
    for i, b in enumerate(labels):
        for j in range(i, nlabels):
            bp = labels[j]
            if wt[b] != wt[bp]:
                continue
            if with_unit and b == bp == labels[0]:
                gram[(b, bp)] = LaurentPoly.one(shape)
                continue
            value = random_symmetric(rng, shape, terms=1, bound=1)
            if b == bp:
                diag = value + value.bar()
                if diag:
                    gram[(b, bp)] = diag
            elif value:
                gram[(b, bp)] = value
                gram[(bp, b)] = value.bar()
    unit_label = labels[0] if with_unit else None
    return CellDatum(shape, labels, weights, gram, unit_label)


def random_cell_element(rng: random.Random, d: CellDatum, max_terms: int = 2) -> CellElement:
    return _random_element(rng, d, max_terms)


def random_point(rng: random.Random, shape: BlockShape, bound: int = 5) -> DrinfeldPoint:
    """Random per-block multisets of small nonzero rationals."""
    blocks = []
    for _, m in shape.blocks:
        vals = []
        for _ in range(m):
            num = rng.choice([x for x in range(-bound, bound + 1) if x])
            den = rng.randint(1, 3)
            vals.append(Fraction(num, den))
        blocks.append(vals)
    return DrinfeldPoint(blocks)
