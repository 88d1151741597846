"""
Total versus partial derivatives of x^2
=======================================

The total derivative differentiates every variable it sees, so iterating it
never stops producing terms.  The slot-0 partial derivative only looks at the
point, and on a polynomial it eventually runs out of things to differentiate.
"""

from cdiffcat import parse_polymap
from cdiffcat.derivative import partial_n, total_n

p = parse_polymap("1->1:[x0^2]")

# Variables are positional.  Read x0..x7 as x, y, z, w, a, b, c, d.
for n in range(4):
    print(f"D^{n}  = {total_n(p, n)}")

print()
for n in range(4):
    print(f"∂^{n}  = {partial_n(p, n)}")

###############################################################################
# The arities double for D^n (1, 2, 4, 8) but grow by one for ∂^n.  The cubic
# keeps one more nonzero partial before it too hits zero.

q = parse_polymap("1->1:[x0^3]")
print()
print([str(partial_n(q, n)) for n in range(5)])
