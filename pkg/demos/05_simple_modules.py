"""
Specialising the Gram form at a point
=====================================

A point assigns one nonzero rational to each block variable (up to
reordering inside a block).  Equivalently a point is a tuple of monic
polynomials with nonzero rational roots, one per block.  Specialising
the Gram form at the point leaves a matrix over q-polynomials, and its
rank decides whether a simple module sits at that point.
"""

from fractions import Fraction
from pathlib import Path

from affcell import (
    DrinfeldPoint,
    DrinfeldPolynomial,
    classify_point,
    load_cell_datum,
    point_to_polynomial,
    polynomial_to_point,
    specialize_gram,
)

DATA = Path(__file__).resolve().parent.parent / "data"

# Both encodings of a point, and the exact dictionary between them.
p = DrinfeldPoint([[2, Fraction(1, 2)]])
poly = point_to_polynomial(p)
print("point", p, "corresponds to", poly)
print("and back:", polynomial_to_point(poly))

# Root extraction is exact: it only accepts polynomials whose roots are
# all rational, and reports the stubborn factor otherwise.
try:
    polynomial_to_point(DrinfeldPolynomial([[1, 0, 1]]))  # u^2 + 1
except Exception as exc:
    print("u^2 + 1 has no rational roots:", exc)

# Specialise a Gram form and classify.
d = load_cell_datum(DATA / "two_labels_m1.datum")
point = DrinfeldPoint([[3]])
matrix = specialize_gram(d, point)
for row in matrix:
    print([str(v) for v in row])
result = classify_point(d, point)
print("has_simple:", result.has_simple, "rank:", result.rank)

# The unit label pins gram(b0, b0) = 1, so the rank never drops to zero:
# unit-labelled data have a simple module at every point.
for value in (1, -1, Fraction(5, 3)):
    r = classify_point(d, DrinfeldPoint([[value]]))
    print(f"at {value}: has_simple={r.has_simple} rank={r.rank}")
