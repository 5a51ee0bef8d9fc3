"""
Constant-term inner products
============================

The symmetric part of the Laurent ring carries an inner product defined
by a constant term against a kernel: <f, g> is the z-free part of
f * bar(g) * kernel, scaled by 1/m! per block.  Schur characters are an
orthonormal basis for it, which turns expansion into projection.
"""

import math

from affcell import (
    BlockShape,
    LaurentPoly,
    constant_term,
    macdonald_kernel,
    schur,
    schur_projection,
    scalar_pairing,
    sf_inner,
)

# The kernel is the product of (1 - z_mu/z_nu) over ordered pairs of
# distinct variables in each block.  Its constant term is m! -- a classic
# identity, and the reason for the 1/m! normalisation.
for m in (1, 2, 3, 4):
    value = constant_term(macdonald_kernel(m))
    print(f"constant term of the m={m} kernel: {value} (m! = {math.factorial(m)})")

# Orthonormality of Schur characters.
s20 = schur(2, (2, 0))
s11 = schur(2, (1, 1))
print("<s(2,0), s(2,0)> =", sf_inner(s20, s20))
print("<s(2,0), s(1,1)> =", sf_inner(s20, s11))

# The q parameter rides along: bar fixes q, so scaling either slot by a
# q power scales the inner product the same way.
q = LaurentPoly.q_power(s20.shape, 1)
print("<q*s(2,0), s(2,0)> =", sf_inner(q * s20, s20))

# Projection: compute all inner products against candidate Schur
# characters and reassemble.  For symmetric input this recovers the
# Schur expansion exactly.
f = s20 * s11
print("projection of s(2,0)*s(1,1):", schur_projection(f))

# scalar_pairing collapses a polynomial to its pairing against 1; on the
# unit it returns exactly 1 for any shape.
print("scalar collapse of 1:", scalar_pairing(LaurentPoly.one(BlockShape(((1, 2), (2, 3))))))
