"""
When x^2 is a constant
======================

Exponents become coefficients by repeated addition of 1.  Over the integers
mod 2 the factor 2 in the derivative of x^2 vanishes, so x^2 has zero
derivative even though it is not a constant polynomial.
"""

from cdiffcat import modp, parse_polymap
from cdiffcat.faa import lift
from cdiffcat.polycat import diff, is_d_constant, is_k_linear

Z2 = modp(2)
sq = parse_polymap("1->1:[x0^2]", Z2)

print("D[x^2] =", diff(sq))
print("differential constant:", is_d_constant(sq))
print(lift(sq, 3))

###############################################################################
# Over the integers the same polynomial is nothing special.

print(is_d_constant(parse_polymap("1->1:[x0^2]")))

###############################################################################
# Frobenius makes x^2 additive mod 2, so it passes the k-linearity test while
# failing D-linearity.  The two notions of "linear" part ways here.

print("k-linear:", is_k_linear(sq))
