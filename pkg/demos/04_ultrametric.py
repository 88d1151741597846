"""
Measuring how far apart two towers are
======================================

Two sequences are 2^-n apart when n is the first order at which they
disagree.  Stored towers are finite, so full agreement is reported as
agreement up to the truncation rather than as distance zero.
"""

from cdiffcat import parse_polymap
from cdiffcat.faa import FaaSeq, decompose, faa_add, faa_diff, homogeneous_embed, lift, partial_sums
from cdiffcat.ultrametric import cauchy_stabilization, distance

P = parse_polymap
f = FaaSeq(1, 1, [P("1->1:[x0]"), P("2->1:[x1]"), P("3->1:[0]")])
g = FaaSeq(1, 1, [P("1->1:[x0]"), P("2->1:[2*x1]"), P("3->1:[0]")])
print(distance(f, g), distance(f, f))

###############################################################################
# Perturbing only the first-order term of a lift moves it by 1/2.  One
# derivative later the disagreement is already at order zero.

h = lift(P("1->1:[x0^2]"), 3)
k = faa_add(h, homogeneous_embed(P("2->1:[3*x1]"), 1, 3))
print(distance(h, k), "->", distance(faa_diff(h), faa_diff(k)))

###############################################################################
# A tower is the limit of the partial sums of its homogeneous parts.  Each
# prefix of terms freezes after finitely many summands.

parts = decompose(lift(P("1->1:[x0^3 + x0]"), 3))
sums = partial_sums(parts)
print([cauchy_stabilization(sums, m) for m in range(4)])
