"""
Schur characters and the Schur basis
====================================

Schur polynomials for weakly decreasing integer weights, including
negative parts (a twist by a power of the inverse determinant).  They
form a basis of the symmetric part of the Laurent ring, and any
block-symmetric polynomial expands over them with q-monomial
coefficients.
"""

from affcell import (
    LaurentPoly,
    bar_involution,
    dual_weight,
    gl_weights,
    is_symmetric,
    schur,
    schur_expand,
)

# Weight (2, 0) in two variables: all monomials of degree 2.
print("s(2,0) =", schur(2, (2, 0)))
print("s(1,1) =", schur(2, (1, 1)))

# Negative parts are fine: (0, -1) is the dual of (1, 0).
print("s(0,-1) =", schur(2, (0, -1)))

# Duality: bar of a Schur polynomial is the Schur polynomial of the
# reversed, negated weight.
w = (2, 1, 0)
print("dual of", w, "is", dual_weight(w))
print("bar(s(2,1,0)) == s(0,-1,-2):", bar_involution(schur(3, w)) == schur(3, dual_weight(w)))

# Every symmetric polynomial expands in the Schur basis.  The expansion
# is computed by repeatedly subtracting the Schur polynomial of the
# leading weight, and it terminates because leading weights strictly
# decrease.
p2 = schur(2, (1, 0)) ** 2
print("is_symmetric(p2):", is_symmetric(p2))
print("s(1,0)^2 =", schur_expand(p2))

# Products of Schur polynomials expand with nonnegative integer
# coefficients; a quick scan over small weights confirms it.
count = 0
for u in gl_weights(2, -1, 1):
    for v in gl_weights(2, -1, 1):
        for coeff in schur_expand(schur(2, u) * schur(2, v)).terms.values():
            ((mono, value),) = coeff.sorted_terms()
            assert mono.q2 == 0 and isinstance(value, int) and value > 0
            count += 1
print("checked", count, "product coefficients: all nonnegative integers")

# q passes through untouched: coefficients of an expansion are
# q-monomial combinations.
mixed = LaurentPoly.q_power(schur(2, (1, 1)).shape, 1) * schur(2, (1, 1)) + schur(2, (1, 0))
print("mixed expansion:", schur_expand(mixed))
