"""
Cell layers: basis labels, a Gram form, and a sandwich product
==============================================================

A cell datum packs a finite label set, a weight for each label, and a
Gram form with values in the symmetric Laurent ring.  Elements are
sandwiches (b; s; b') and multiply through the Gram form:

    (b1; s1; b1') (b2; s2; b2') = q^n(b1') * (b1; s1*s2*gram(b2,b1'); b2')

where n(b) is a half-integer computed from the weight data.  The datum
files under data/ are the readable serialisation of all of that.
"""

from pathlib import Path

from affcell import (
    CellElement,
    cell_mul,
    format_cell_datum,
    layer_idempotent,
    load_cell_datum,
    sharp,
    verify_cell_axioms,
)

DATA = Path(__file__).resolve().parent.parent / "data"

d = load_cell_datum(DATA / "two_labels_m1.datum")
print("labels:", d.labels)
print("unit label:", d.unit_label)
print()
print(format_cell_datum(d))

# Basis sandwiches multiply through the Gram form.
x = CellElement.basis(d, "b0", 1, "b1")
y = CellElement.basis(d, "b1", 1, "b0")
print("x =", x)
print("y =", y)
print("x*y =", cell_mul(x, y))
print("y*x =", cell_mul(y, x))

# sharp swaps the outer labels and dualises the middle coordinate; on
# valid data it is an anti-involution.
print("sharp(x*y) =", sharp(cell_mul(x, y)))
print("sharp(y)*sharp(x) =", cell_mul(sharp(y), sharp(x)))

# The declared unit is idempotent and self-dual.
e = CellElement.unit(d)
print("e*e == e:", cell_mul(e, e) == e)
print("sharp(e) == e:", sharp(e) == e)
print("layer idempotent:", layer_idempotent(d))
print()

# The axiom verifier reports per-property results instead of raising, so
# it also runs on deliberately broken files.
broken = load_cell_datum(DATA / "sigma_violation.datum", validate=False)
report = verify_cell_axioms(broken, samples=5)
for check in report.checks:
    print(check)
print("all passed:", report.all_passed)
