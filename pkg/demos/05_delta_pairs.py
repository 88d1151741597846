"""
Pairs with a linear shadow
==========================

A Δ-map carries an arbitrary polynomial together with a linear one.  Its
derivative ignores the polynomial entirely and keeps only the linear part.
"""

from cdiffcat import parse_polymap
from cdiffcat.delta import DeltaMap, DeltaValidationError, delta_diff, delta_diff_lin, delta_lift

P = parse_polymap
h = DeltaMap(P("1->1:[x0^3 + 1]"), P("1->1:[5*x0]"))
print(delta_diff(h))

# the componentwise alternative keeps the cubic around
print(delta_diff_lin(h))

###############################################################################
# Linear maps embed as (L, L).  A nonlinear map is rejected.

print(delta_lift(P("2->1:[x0 + 2*x1]")))
try:
    delta_lift(P("1->1:[x0^2]"))
except DeltaValidationError as exc:
    print("rejected:", exc)
