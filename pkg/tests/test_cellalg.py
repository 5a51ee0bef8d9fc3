"""Cell layer algebra: the q exponent, multiplication, sharp, the module
pairing, axiom verification, and idempotency recognition."""

import random
from fractions import Fraction

import pytest

from affcell.laurent import BlockShape, LaurentPoly
from affcell.symfunc import GLWeight, SchurExpansion, schur_block
from affcell.pairing import scalar_pairing
from affcell.cellalg import (
    CellDatum,
    CellElement,
    DatumMismatchError,
    DatumValidationError,
    ModuleVector,
    WeightData,
    cell_mul,
    layer_idempotent,
    module_pairing,
    q_exponent,
    sharp,
    verify_cell_axioms,
)
from affcell.sampling import random_cell_datum, random_cell_element, random_laurent

SHAPE1 = BlockShape.single(1)
SHAPE2 = BlockShape.single(2)


def unit_datum(shape=SHAPE2):
    wd = WeightData(1, [[1]], [1], {"b0": (0,)})
    return CellDatum(shape, ["b0"], wd, {("b0", "b0"): 1}, unit_label="b0")


def two_label_datum(diagonal=2):
    wd = WeightData(1, [[1]], [2], {"b0": (0,), "b1": (1,)})
    return CellDatum(
        SHAPE2,
        ["b0", "b1"],
        wd,
        {("b0", "b0"): 1, ("b1", "b1"): diagonal},
        unit_label="b0",
    )


# -- weight data and the q exponent ------------------------------------------


def test_weight_data_validation():
    with pytest.raises(ValueError):
        WeightData(2, [[1, 2], [3, 4]], [0, 0], {"b": (0, 0)})  # asymmetric form
    with pytest.raises(ValueError):
        WeightData(2, [[1, 0]], [0, 0], {"b": (0, 0)})  # wrong form shape
    with pytest.raises(ValueError):
        WeightData(1, [[1]], [0, 0], {"b": (0,)})  # lambda length
    with pytest.raises(ValueError):
        WeightData(1, [[1]], [0], {"b": (0, 0)})  # weight length
    with pytest.raises(ValueError):
        WeightData(0, [], [], {})


def test_q_exponent_examples():
    wd = WeightData(1, [[1]], [2], {"b": (1,), "b0": (0,), "c": (-4,)})
    assert q_exponent("b", wd) == 5  # n = 5/2 in half-units
    assert q_exponent("b0", wd) == 0
    assert q_exponent("c", wd) == 0  # wt = -2*lambda is orthogonal to the shift
    with pytest.raises(KeyError):
        q_exponent("missing", wd)


def test_q_exponent_rational_form():
    wd = WeightData(1, [[Fraction(1, 2)]], [0], {"b": (2,), "c": (1,)})
    assert q_exponent("b", wd) == 2
    with pytest.raises(ValueError):
        q_exponent("c", wd)  # (1)*(1/2)*(1) = 1/2 is not a half-integer count


# -- datum validation -----------------------------------------------------------


def test_datum_validation_errors():
    wd = WeightData(1, [[1]], [1], {"a": (0,), "b": (1,)})
    z1 = LaurentPoly.z(SHAPE2, 1, 1, 1)
    z2 = LaurentPoly.z(SHAPE2, 1, 2, 1)
    with pytest.raises(DatumValidationError):
        CellDatum(SHAPE2, ["a"], wd, {("a", "a"): z1 - z2})  # not block-symmetric
    with pytest.raises(DatumValidationError):
        CellDatum(SHAPE2, ["a", "b"], wd, {("a", "b"): 1})  # support condition
    with pytest.raises(DatumValidationError):
        CellDatum(SHAPE2, ["a"], wd, {("a", "a"): 2}, unit_label="a")  # gram != 1
    wd_bad_n = WeightData(1, [[1]], [1], {"a": (2,)})
    with pytest.raises(DatumValidationError):
        CellDatum(SHAPE2, ["a"], wd_bad_n, {("a", "a"): 1}, unit_label="a")  # n(a) != 0
    with pytest.raises(DatumValidationError):
        CellDatum(SHAPE2, ["a", "c"], wd, {})  # c has no weight
    with pytest.raises(DatumValidationError):
        CellDatum(SHAPE2, ["a"], wd, {("a", "x"): 1})  # unknown label in gram


def test_datum_lenient_mode_keeps_bad_data():
    wd = WeightData(1, [[1]], [1], {"a": (0,)})
    z1 = LaurentPoly.z(SHAPE2, 1, 1, 1)
    z2 = LaurentPoly.z(SHAPE2, 1, 2, 1)
    d = CellDatum(SHAPE2, ["a"], wd, {("a", "a"): z1 - z2}, validate=False)
    assert d.gram_value("a", "a") == z1 - z2
    report = verify_cell_axioms(d, samples=3)
    assert not report.all_passed


def test_datum_drops_zero_gram_entries():
    wd = WeightData(1, [[1]], [1], {"a": (0,)})
    d = CellDatum(SHAPE2, ["a"], wd, {("a", "a"): 0})
    assert d.gram == {}
    assert not d.gram_value("a", "a")


# -- multiplication ----------------------------------------------------------------


def test_unit_is_idempotent():
    d = unit_datum()
    e = CellElement.unit(d)
    assert e * e == e
    assert sharp(e) == e
    assert e * CellElement.zero(d) == CellElement.zero(d)


def test_hand_product():
    # (b0, 1, b1) (b1, 1, b0) = q^{n(b1)} gram(b1, b1) (b0, 1, b0)
    d = two_label_datum(diagonal=2)
    x = CellElement.basis(d, "b0", 1, "b1")
    y = CellElement.basis(d, "b1", 1, "b0")
    got = x * y
    base = CellElement.basis(d, "b0", 2, "b0")
    assert got == base.q_shift(Fraction(5, 2))
    # the other composition hits gram(b0, b0) = 1 and n(b0) = 0
    assert y * x == CellElement.basis(d, "b1", 1, "b1")


def test_unit_absorbs():
    rng = random.Random(79)
    for _ in range(10):
        d = random_cell_datum(rng)
        e = CellElement.unit(d)
        x = random_cell_element(rng, d)
        # e x e lands in the span of (b0, ., b0)
        squeezed = e * x * e
        assert all(key == (d.unit_label, d.unit_label) for key in squeezed.terms)


def test_associativity_random():
    rng = random.Random(83)
    for _ in range(12):
        d = random_cell_datum(rng)
        x = random_cell_element(rng, d)
        y = random_cell_element(rng, d)
        z = random_cell_element(rng, d)
        assert (x * y) * z == x * (y * z)


def test_bilinearity():
    rng = random.Random(89)
    d = random_cell_datum(rng)
    x = random_cell_element(rng, d)
    y = random_cell_element(rng, d)
    z = random_cell_element(rng, d)
    assert (x + y) * z == x * z + y * z
    assert x * (y + z) == x * y + x * z
    assert (2 * x) * y == 2 * (x * y)


def test_datum_mismatch():
    d1 = unit_datum()
    d2 = two_label_datum()
    x = CellElement.unit(d1)
    y = CellElement.unit(d2)
    with pytest.raises(DatumMismatchError):
        x * y
    with pytest.raises(DatumMismatchError):
        x + y


# -- sharp ----------------------------------------------------------------------------


def test_sharp_examples():
    d = two_label_datum()
    s10 = SchurExpansion.single(SHAPE2, (GLWeight((1, 0)),))
    x = CellElement.basis(d, "b0", s10, "b1")
    flipped = sharp(x)
    s_dual = SchurExpansion.single(SHAPE2, (GLWeight((0, -1)),))
    assert flipped == CellElement.basis(d, "b1", s_dual, "b0")
    assert sharp(flipped) == x


def test_sharp_involution_random():
    rng = random.Random(97)
    for _ in range(15):
        d = random_cell_datum(rng)
        x = random_cell_element(rng, d)
        assert sharp(sharp(x)) == x


def test_sharp_antimultiplicative_on_valid_data():
    rng = random.Random(101)
    for _ in range(12):
        d = random_cell_datum(rng)
        x = random_cell_element(rng, d)
        y = random_cell_element(rng, d)
        assert sharp(x * y) == sharp(y) * sharp(x)


# -- module pairing -------------------------------------------------------------------


def test_module_pairing_recovers_gram():
    rng = random.Random(103)
    d = random_cell_datum(rng)
    for b in d.labels:
        for bp in d.labels:
            x = ModuleVector.unit_vector(d, b)
            y = ModuleVector.unit_vector(d, bp)
            assert module_pairing(x, y) == d.gram_value(b, bp)


def test_module_pairing_sesquilinear():
    rng = random.Random(107)
    for _ in range(10):
        d = random_cell_datum(rng)
        b = rng.choice(d.labels)
        bp = rng.choice(d.labels)
        x = ModuleVector.unit_vector(d, b)
        y = ModuleVector.unit_vector(d, bp)
        f = random_laurent(rng, d.shape, terms=2)
        g = random_laurent(rng, d.shape, terms=2)
        assert module_pairing(f * x, y) == f * module_pairing(x, y)
        assert module_pairing(x, g * y) == g.bar() * module_pairing(x, y)


def test_scalar_collapse_of_unit_pairing():
    # ((u, u)) = 1 collapses to (u, u) = 1 for any block sizes
    for shape in [SHAPE1, SHAPE2, BlockShape(((1, 2), (2, 3)))]:
        d = unit_datum(shape)
        u = ModuleVector.unit_vector(d, "b0")
        assert scalar_pairing(module_pairing(u, u)) == 1


# -- verification and idempotency --------------------------------------------------------


def test_verify_all_pass_on_valid_data():
    rng = random.Random(109)
    for _ in range(5):
        d = random_cell_datum(rng)
        report = verify_cell_axioms(d, samples=6, seed=5)
        assert report.all_passed, str(report)


def test_verify_flags_sigma_violation():
    s10 = schur_block(SHAPE2, 1, (1, 0))
    wd = WeightData(1, [[1]], [2], {"a": (0,), "b": (0,)})
    d = CellDatum(
        SHAPE2,
        ["a", "b"],
        wd,
        {("a", "a"): 1, ("a", "b"): s10, ("b", "a"): s10},
        unit_label="a",
        validate=False,
    )
    flags = {c.name: c.passed for c in verify_cell_axioms(d, samples=8).checks}
    assert flags["block_symmetric"]
    assert not flags["sigma_symmetry"]
    assert not flags["sharp_antimultiplicative"]
    assert flags["unit_conditions"]


def test_verify_flags_support_violation():
    wd = WeightData(1, [[1]], [1], {"a": (0,), "b": (1,)})
    d = CellDatum(SHAPE2, ["a", "b"], wd, {("a", "b"): 1}, validate=False)
    flags = {c.name: c.passed for c in verify_cell_axioms(d, samples=4).checks}
    assert not flags["support_condition"]


def test_verify_flags_broken_unit():
    wd = WeightData(1, [[1]], [1], {"a": (0,)})
    d = CellDatum(SHAPE2, ["a"], wd, {("a", "a"): 2}, unit_label="a", validate=False)
    flags = {c.name: c.passed for c in verify_cell_axioms(d, samples=2).checks}
    assert not flags["unit_conditions"]


def test_verify_reports_are_deterministic():
    rng = random.Random(113)
    d = random_cell_datum(rng)
    r1 = verify_cell_axioms(d, samples=6, seed=3)
    r2 = verify_cell_axioms(d, samples=6, seed=3)
    assert str(r1) == str(r2)


def test_layer_idempotent():
    assert layer_idempotent(unit_datum()) == "yes"
    q = LaurentPoly.q_power(SHAPE2, 1)
    s11 = schur_block(SHAPE2, 1, (1, 1))
    wd = WeightData(1, [[1]], [1], {"c": (1,)})
    det_layer = CellDatum(SHAPE2, ["c"], wd, {("c", "c"): q * s11})
    assert layer_idempotent(det_layer) == "yes"
    s10 = schur_block(SHAPE2, 1, (1, 0))
    plain = CellDatum(SHAPE2, ["c"], wd, {("c", "c"): s10})
    assert layer_idempotent(plain) == "inconclusive"
    empty = CellDatum(SHAPE2, ["c"], wd, {})
    assert layer_idempotent(empty) == "inconclusive"
    doubled = CellDatum(SHAPE2, ["c"], wd, {("c", "c"): 2 * q * s11})
    assert layer_idempotent(doubled) == "inconclusive"


# -- element plumbing ------------------------------------------------------------------


def test_cell_element_text():
    d = two_label_datum()
    x = CellElement.basis(d, "b0", 1, "b1") + CellElement.basis(d, "b1", 2, "b0")
    assert str(x) == "[b0; 1; b1] + [b1; 2; b0]"
    assert str(CellElement.zero(d)) == "0"


def test_cell_element_scalars():
    d = two_label_datum()
    x = CellElement.basis(d, "b0", 1, "b1")
    q = LaurentPoly.q_power(SHAPE2, Fraction(1, 2))
    assert (q * x).terms[("b0", "b1")] == SchurExpansion.unit(SHAPE2).q_shift(Fraction(1, 2))
    assert x - x == CellElement.zero(d)
    assert -x + x == CellElement.zero(d)
