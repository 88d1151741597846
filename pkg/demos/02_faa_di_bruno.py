"""
The higher-order chain rule as composition
==========================================

A Faà di Bruno sequence stores the tower of derivatives (f, ∂f, ∂²f, ...).
Composing two towers uses a sum over set partitions, and the result is
exactly the tower of the composite map.  Nothing here is numeric: every
coefficient is an exact integer.
"""

from cdiffcat import parse_polymap
from cdiffcat.faa import faa_compose, faa_diff, lift
from cdiffcat.partitions import bell, enumerate_partitions
from cdiffcat.polycat import compose, diff

f = parse_polymap("1->1:[x0 + x0^2]")
g = parse_polymap("1->1:[x0^3]")

lhs = faa_compose(lift(g, 4), lift(f, 4))
rhs = lift(compose(g, f), 4)
print(lhs)
print("tower of the composite matches:", lhs == rhs)

###############################################################################
# The n-th term of the composite sums over every partition of {1..n}.  Their
# number is the Bell number, which is why the fourth term has 15 pieces.

for p in enumerate_partitions(4):
    print(p, end="  ")
print()
print([bell(n) for n in range(9)])

###############################################################################
# Differentiating a tower shifts it down by one and spends one unit of
# truncation.  It agrees with lifting the ordinary total derivative.

print(faa_diff(lift(f, 4)) == lift(diff(f), 3))
