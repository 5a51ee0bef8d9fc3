"""
Blocked Laurent polynomials with exact coefficients
===================================================

The base ring of the whole package: Laurent polynomials in groups of
variables z[i][mu] (one group per block) and an extra parameter q that is
allowed half-integer exponents.  All coefficients are exact rationals.
"""

from fractions import Fraction

from affcell import BlockShape, LaurentPoly

# A shape lists the blocks and how many variables each one carries.
# Here block 1 has two variables z[1][1], z[1][2] and block 2 has one.
shape = BlockShape(((1, 2), (2, 1)))
print("shape:", shape)
print("variables:", shape.variables())

# Variables come from the z constructor; q powers may be half-integers.
z11 = LaurentPoly.z(shape, 1, 1, 1)
z12 = LaurentPoly.z(shape, 1, 2, 1)
z21 = LaurentPoly.z(shape, 2, 1, 1)
q = LaurentPoly.q_power(shape, Fraction(1, 2))

# Arithmetic is the usual ring arithmetic; ints and Fractions coerce.
f = (z11 + z12) * z21 - 3 * q
print("f =", f)
print("f^2 =", f * f)

# The bar involution inverts every z variable and fixes q.  It is the
# algebraic stand-in for taking the dual of a representation.
print("bar(f) =", f.bar())
print("bar(bar(f)) == f:", f.bar().bar() == f)

# The constant term keeps only the z-free part (q survives).
g = 5 * q + z11 * z11 - 2
print("constant term of", g, "is", g.constant_term())

# Evaluation substitutes nonzero rationals for the z variables.
values = {(1, 1): Fraction(1, 2), (1, 2): 2, (2, 1): -1}
print("f at", values, "=", f.evaluate(values))
