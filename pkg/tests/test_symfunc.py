"""Schur characters against a Jacobi-Trudi oracle, duality, and the
Schur-basis expansion."""

import itertools
import random
from fractions import Fraction

import pytest

from affcell.laurent import BlockShape, LaurentPoly, dict_poly
from affcell.symfunc import (
    AsymmetricInputError,
    GLWeight,
    SchurExpansion,
    dual_weight,
    gl_weights,
    is_symmetric,
    lr_mul,
    schur,
    schur_block,
    schur_expand,
    trivial_weights,
)
from affcell.sampling import random_symmetric

SHAPE2 = BlockShape.single(2)
MULTI = BlockShape(((1, 2), (2, 1)))


# -- oracle: Schur via the complete-homogeneous determinant -------------------


def h_poly(m, k):
    """Complete homogeneous symmetric polynomial of degree k in m variables."""
    shape = BlockShape.single(m)
    if k < 0:
        return LaurentPoly.zero(shape)
    if k == 0:
        return LaurentPoly.one(shape)
    entries = []
    for combo in itertools.combinations_with_replacement(range(1, m + 1), k):
        zmap = {}
        for mu in combo:
            zmap[(1, mu)] = zmap.get((1, mu), 0) + 1
        entries.append((zmap, 0, 1))
    return dict_poly(shape, entries)


def schur_jt(m, w):
    """Jacobi-Trudi: s_w = det(h_{w_i - i + j}) after a determinant twist."""
    shape = BlockShape.single(m)
    k = max(0, -w[-1])
    lam = [p + k for p in w]
    total = LaurentPoly.zero(shape)
    for sigma in itertools.permutations(range(m)):
        sign = 1
        for i in range(m):
            for j in range(i + 1, m):
                if sigma[i] > sigma[j]:
                    sign = -sign
        prod = LaurentPoly.one(shape)
        for i in range(m):
            prod = prod * h_poly(m, lam[i] - i + sigma[i])
        total = total + sign * prod
    if k:
        det_inv = dict_poly(shape, [({(1, mu): -k for mu in range(1, m + 1)}, 0, 1)])
        total = total * det_inv
    return total


def test_schur_matches_jacobi_trudi():
    for m in (1, 2, 3):
        for w in gl_weights(m, -2, 2):
            assert schur(m, w) == schur_jt(m, tuple(w)), w


def test_schur_examples():
    assert str(schur(2, (2, 0))) == "z1^2 + z1*z2 + z2^2"
    z1 = LaurentPoly.z(SHAPE2, 1, 1, 1)
    z2 = LaurentPoly.z(SHAPE2, 1, 2, 1)
    assert schur(2, (1, 1)) == z1 * z2
    assert schur(2, (0, -1)) == LaurentPoly.z(SHAPE2, 1, 1, -1) + LaurentPoly.z(SHAPE2, 1, 2, -1)
    assert schur(1, (5,)) == LaurentPoly.z(BlockShape.single(1), 1, 1, 5)
    assert schur(3, (0, 0, 0)) == 1


def test_schur_weight_validation():
    with pytest.raises(ValueError):
        schur(2, (0, 1))  # not weakly decreasing
    with pytest.raises(ValueError):
        schur(2, (1, 0, 0))  # wrong length
    with pytest.raises(KeyError):
        schur_block(SHAPE2, 9, (1, 0))


def test_schur_block_on_multi_shape():
    s = schur_block(MULTI, 2, (3,))
    assert s == LaurentPoly.z(MULTI, 2, 1, 3)
    assert is_symmetric(schur_block(MULTI, 1, (2, -1)), 1)


# -- duality -------------------------------------------------------------------


def test_dual_weight():
    assert dual_weight(GLWeight((1, 0))) == GLWeight((0, -1))
    assert dual_weight(GLWeight((3, 1, -2))) == GLWeight((2, -1, -3))
    for w in gl_weights(3, -2, 2):
        assert dual_weight(dual_weight(w)) == w


def test_bar_duality():
    for m in (1, 2, 3):
        for w in gl_weights(m, -2, 2):
            assert schur(m, w).bar() == schur(m, dual_weight(w))


# -- weight enumeration ---------------------------------------------------------


def test_gl_weights_enumeration():
    ws = list(gl_weights(2, -1, 1))
    assert len(ws) == 6
    assert ws[0] == GLWeight((1, 1))
    assert all(tuple(w)[0] >= tuple(w)[1] for w in ws)
    assert len(set(ws)) == len(ws)
    assert len(list(gl_weights(3, -2, 2))) == 35


# -- symmetry test ---------------------------------------------------------------


def test_is_symmetric():
    z11 = LaurentPoly.z(MULTI, 1, 1, 1)
    z12 = LaurentPoly.z(MULTI, 1, 2, 1)
    z21 = LaurentPoly.z(MULTI, 2, 1, 1)
    f = (z11 + z12) * z21
    assert is_symmetric(f)
    assert is_symmetric(f, 1)
    g = z11 * z21
    assert not is_symmetric(g)
    assert not is_symmetric(g, 1)
    assert is_symmetric(g, 2)  # single variable blocks are always symmetric


# -- Schur expansion --------------------------------------------------------------


def test_schur_expand_pieri():
    e = schur_expand(schur(2, (1, 0)) * schur(2, (1, 0)))
    assert e == SchurExpansion(SHAPE2, {(GLWeight((2, 0)),): 1, (GLWeight((1, 1)),): 1})
    assert str(e) == "s[1](2,0) + s[1](1,1)"


def test_schur_expand_roundtrip():
    rng = random.Random(41)
    for _ in range(30):
        shape = rng.choice([BlockShape.single(1), SHAPE2, MULTI])
        f = random_symmetric(rng, shape, terms=3, bound=2)
        e = schur_expand(f)
        assert e.to_laurent() == f
        for coeff in e.terms.values():
            assert coeff.is_z_free()


def test_schur_expand_keeps_q():
    q = LaurentPoly.q_power(SHAPE2, Fraction(1, 2))
    f = q * schur(2, (1, 0)) + 3 * schur(2, (1, 1))
    e = schur_expand(f)
    assert e.terms[(GLWeight((1, 0)),)] == q
    assert e.terms[(GLWeight((1, 1)),)] == LaurentPoly.const(SHAPE2, 3)


def test_schur_expand_rejects_asymmetric():
    with pytest.raises(AsymmetricInputError):
        schur_expand(LaurentPoly.z(SHAPE2, 1, 1, 1))


def test_orthonormal_basis_of_expansion():
    # expanding a Schur character returns exactly itself
    for w in gl_weights(2, -1, 2):
        e = schur_expand(schur(2, w))
        assert e == SchurExpansion(SHAPE2, {(w,): 1})


def test_littlewood_richardson_nonnegative():
    for u in gl_weights(2, 0, 2):
        for v in gl_weights(2, 0, 2):
            e = schur_expand(schur(2, u) * schur(2, v))
            for coeff in e.terms.values():
                value = coeff.constant_term()
                assert coeff == value  # q-free
                c = value.coefficient(next(iter(value.terms))) if value.terms else 0
                assert isinstance(c, int) and c > 0


# -- SchurExpansion algebra ---------------------------------------------------------


def test_expansion_ring_ops():
    rng = random.Random(43)
    for _ in range(15):
        f = random_symmetric(rng, MULTI, terms=2, bound=1)
        g = random_symmetric(rng, MULTI, terms=2, bound=1)
        ef, eg = schur_expand(f), schur_expand(g)
        assert (ef + eg).to_laurent() == f + g
        assert (ef - eg).to_laurent() == f - g
        assert lr_mul(ef, eg).to_laurent() == f * g
        assert (ef * eg) == lr_mul(ef, eg)
        assert ef.q_shift(Fraction(1, 2)).to_laurent() == f.q_shift(Fraction(1, 2))


def test_expansion_dual_is_bar():
    rng = random.Random(47)
    for _ in range(15):
        f = random_symmetric(rng, MULTI, terms=2, bound=1)
        assert schur_expand(f).dual().to_laurent() == f.bar()


def test_expansion_scalars_and_unit():
    one = SchurExpansion.unit(MULTI)
    assert one.to_laurent() == 1
    assert trivial_weights(MULTI) == (GLWeight((0, 0)), GLWeight((0,)))
    e = SchurExpansion.single(MULTI, (GLWeight((1, 0)), GLWeight((2,))), 3)
    assert (one * e) == e
    assert 2 * e == e + e
    assert e - e == SchurExpansion.zero(MULTI)
    assert not (e - e)


def test_expansion_validation():
    with pytest.raises(ValueError):
        SchurExpansion(SHAPE2, {(GLWeight((1,)),): 1})  # wrong weight length
    with pytest.raises(ValueError):
        SchurExpansion(SHAPE2, {(GLWeight((1, 0)), GLWeight((1, 0))): 1})  # too many blocks
    with pytest.raises(ValueError):
        # coefficient must be z-free
        SchurExpansion(SHAPE2, {(GLWeight((1, 0)),): LaurentPoly.z(SHAPE2, 1, 1, 1)})


def test_format_expansion_examples():
    q = LaurentPoly.q_power(SHAPE2, 1)
    w10 = (GLWeight((1, 0)),)
    w11 = (GLWeight((1, 1)),)
    assert str(SchurExpansion.zero(SHAPE2)) == "0"
    assert str(SchurExpansion.unit(SHAPE2)) == "1"
    assert str(SchurExpansion(SHAPE2, {w10: -2})) == "-2*s[1](1,0)"
    assert str(SchurExpansion(SHAPE2, {w11: q + 1})) == "(1 + q)*s[1](1,1)"
    e = SchurExpansion(SHAPE2, {w10: q.q_shift(Fraction(-1, 2)), w11: -1})
    assert str(e) == "-s[1](1,1) + q^(1/2)*s[1](1,0)"
