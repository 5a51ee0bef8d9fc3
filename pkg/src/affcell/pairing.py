"""Constant-term inner products on block-symmetric Laurent polynomials.

The inner product on one block of m variables is

    <f, g> = (1/m!) * [ f(z) * g(z^-1) * prod_{mu != nu} (1 - z_mu/z_nu) ]_1

where [.]_1 extracts the constant term in z.  Schur characters are an
orthonormal basis for it.  On a multi-block shape the kernels of all blocks
are multiplied and each block contributes its own 1/m_i! factor; the result
is a Laurent polynomial in q alone (q passes through the constant term).

Constant terms are never computed by expanding f * bar(g) * kernel in
full: the kernel of each block is expanded once and indexed by monomial,
and CT(F * prod_i K_i) = sum over monomials M of F of
coeff_F(M) * prod_i K_i[-M_i], with M_i the block-i part of M.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .laurent import (
    BlockShape,
    Coeff,
    LaurentPoly,
    Monomial,
    ShapeMismatchError,
    Var,
    _normalize_coeff,
)
from .symfunc import (
    AsymmetricInputError,
    GLWeight,
    SchurExpansion,
    gl_weights,
    is_symmetric,
    schur_block,
)


@dataclass(frozen=True)
class PairingContext:
    """Carrier for the shape whose block ring the pairing lives on."""

    shape: BlockShape

    def kernel(self, block_id: int) -> LaurentPoly:
        return _kernel_block(self.shape, block_id)

    def normalization(self) -> Fraction:
        """The product over blocks of 1/m_i!."""
        scale = Fraction(1)
        for _, m in self.shape.blocks:
            scale /= math.factorial(m)
        return scale


def macdonald_kernel(m: int) -> LaurentPoly:
    """The kernel prod_{mu != nu} (1 - z_mu z_nu^-1) on a single block.

    Its constant term is m! (Dyson's identity at equal parameters), which
    is exactly what the 1/m! normalization of the inner product cancels.
    """
    if m < 1:
        raise ValueError(f"block size must be positive, got {m}")
    return _kernel_block(BlockShape.single(m), 1)


@functools.cache
def _kernel_block(shape: BlockShape, block_id: int) -> LaurentPoly:
    m = shape.size(block_id)
    out = LaurentPoly.one(shape)
    for mu in range(1, m + 1):
        for nu in range(1, m + 1):
            if mu == nu:
                continue
            ratio = LaurentPoly.z(shape, block_id, mu, 1) * LaurentPoly.z(shape, block_id, nu, -1)
            out = out * (1 - ratio)
    return out


@functools.cache
def _kernel_index(shape: BlockShape, block_id: int) -> dict[tuple, Coeff]:
    """Kernel coefficients keyed by z-exponent tuple, for constant-term lookups."""
    return {mono.zexp: c for mono, c in _kernel_block(shape, block_id).terms.items()}


def _coefficient_against_kernels(shape: BlockShape, zexp: tuple[tuple[Var, int], ...]):
    """prod_i K_i[-M_i] for the monomial with z-exponents ``zexp``."""
    per_block: dict[int, list[tuple[Var, int]]] = {bid: [] for bid in shape.block_ids}
    for var, e in zexp:
        per_block[var[0]].append((var, -e))
    result: Coeff = 1
    for bid in shape.block_ids:
        k = _kernel_index(shape, bid).get(tuple(per_block[bid]), 0)
        if not k:
            return 0
        result *= k
    return result


def _constant_term_with_kernels(F: LaurentPoly) -> dict[int, Coeff]:
    """q2 -> coefficient map of CT_z(F * prod_i kernel_i)."""
    shape = F.shape
    acc: dict[int, Coeff] = {}
    for mono, c in F.terms.items():
        k = _coefficient_against_kernels(shape, mono.zexp)
        if k:
            acc[mono.q2] = acc.get(mono.q2, 0) + c * k
    return acc


def _scaled_q_poly(shape: BlockShape, acc: dict[int, Coeff], scale: Fraction) -> LaurentPoly:
    terms = {}
    for q2, c in acc.items():
        v = _normalize_coeff(c * scale)
        if v:
            terms[Monomial((), q2)] = v
    return LaurentPoly._raw(shape, terms)


def sf_inner(f: LaurentPoly, g: LaurentPoly, ctx: PairingContext | None = None) -> LaurentPoly:
    """Normalized constant-term inner product of block-symmetric f and g.

    Returns prod_i (1/m_i!) * CT( f * bar(g) * prod_i kernel_i ), a Laurent
    polynomial in q.  Bilinear over powers of q in both slots, since bar
    inverts the block variables but fixes q.
    """
    if f.shape != g.shape:
        raise ShapeMismatchError(f"shape mismatch: {f.shape} vs {g.shape}")
    if ctx is not None and ctx.shape != f.shape:
        raise ShapeMismatchError(f"context shape {ctx.shape} does not match {f.shape}")
    if not is_symmetric(f) or not is_symmetric(g):
        raise AsymmetricInputError("inner product requires block-symmetric input")
    shape = f.shape
    gbar = g.bar()
    acc: dict[int, Coeff] = {}
    for m1, c1 in f.terms.items():
        d1 = dict(m1.zexp)
        for m2, c2 in gbar.terms.items():
            merged = dict(d1)
            for var, e in m2.zexp:
                s = merged.get(var, 0) + e
                if s:
                    merged[var] = s
                else:
                    del merged[var]
            k = _coefficient_against_kernels(shape, tuple(sorted(merged.items())))
            if k:
                q2 = m1.q2 + m2.q2
                acc[q2] = acc.get(q2, 0) + c1 * c2 * k
    return _scaled_q_poly(shape, acc, PairingContext(shape).normalization())


def scalar_pairing(F: LaurentPoly, ctx: PairingContext | None = None) -> LaurentPoly:
    """Collapse a module-pairing value to its scalar.

    ``F`` is an already-computed pairing value; the result is
    [ F * prod_i (1/m_i!) * kernel_i ]_1.  No symmetry is required of F.
    With F = 1 this returns 1 on every shape: the unit vector keeps unit
    norm when the coefficient ring is folded down to scalars.
    """
    if ctx is not None and ctx.shape != F.shape:
        raise ShapeMismatchError(f"context shape {ctx.shape} does not match {F.shape}")
    acc = _constant_term_with_kernels(F)
    return _scaled_q_poly(F.shape, acc, PairingContext(F.shape).normalization())


def schur_projection(
    f: LaurentPoly, ctx: PairingContext | None = None, bound: int | None = None
) -> SchurExpansion:
    """Expand ``f`` in the Schur basis by taking inner products.

    The coefficient of a weight tuple w is sf_inner(f, prod_i s_{w_i}).
    Candidate weights are read off the support of f: every weight appearing
    in the expansion of f has block-i parts within the range of block-i
    exponents occurring in f, so scanning that finite box is exact.  An
    explicit ``bound`` replaces the box with parts in [-bound, bound].
    """
    if not is_symmetric(f):
        raise AsymmetricInputError("projection requires block-symmetric input")
    shape = f.shape
    result: dict[tuple[GLWeight, ...], LaurentPoly] = {}
    if not f:
        return SchurExpansion.zero(shape)
    per_block_candidates: list[list[GLWeight]] = []
    for bid, m in shape.blocks:
        if bound is not None:
            lo, hi = -bound, bound
        else:
            exps = [
                e
                for mono in f.terms
                for (var, e) in mono.zexp
                if var[0] == bid
            ]
            lo, hi = min(exps + [0]), max(exps + [0])
        per_block_candidates.append(list(gl_weights(m, lo, hi)))
    for weights in itertools.product(*per_block_candidates):
        basis = LaurentPoly.one(shape)
        for w, (bid, _) in zip(weights, shape.blocks):
            basis = basis * schur_block(shape, bid, w)
        coeff = sf_inner(f, basis)
        if coeff:
            result[weights] = coeff
    return SchurExpansion(shape, result)
