"""
Catching a broken derivative
============================

The harness samples seeded polynomial maps and checks each differential
axiom exactly.  Feeding it a deliberately wrong derivative shows which laws
notice and hands back a sample that reproduces the failure.
"""

from cdiffcat import axiomcheck as A

cfg = A.SampleConfig(samples_per_law=50)
print(A.reports_table(A.check_cd("polycat", cfg)))

###############################################################################
# Here the derivative forgets the direction factor, so D[x^2] becomes 2x.

mutant = A.MUTATIONS["drop_chain_factor"]
reports = A.check_cd("polycat", cfg, mutant)
print(A.reports_table(reports))

bad = next(r for r in reports if not r.passed)
sample = bad.counterexample["sample"]
print("replay with the mutant:", A.replay(bad.law_id, "polycat", cfg, sample, mutant))
print("replay with the real D:", A.replay(bad.law_id, "polycat", cfg, sample))
