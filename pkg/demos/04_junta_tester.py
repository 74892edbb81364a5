"""
Testing variables of a black-box function
=========================================

End to end: build g from two lookups of f, try the constant-term shortcut,
then search. Junta variables are never flagged; relevant ones are found with
a number of oracle calls that grows like sqrt(2**n).
"""

from qjunta import generators as gen
from qjunta.boolfn import parse_anf, to_truth_table
from qjunta.harness import fit_loglog_exponent, run_sweep
from qjunta.tester import TestConfig, test_all_variables

f = to_truth_table(parse_anf("x0x1x2 ^ x3 ^ x1x4", 6))
for r in test_all_variables(f, TestConfig(seed=1, diagnostics=True)):
    print(f"x{r.variable}: {r.verdict.value:8s} shortcut={r.shortcut_hit!s:5s} "
          f"g-queries={r.g_queries:3d} influence={r.influence:.3f}")

###############################################################################
# Majority on three inputs: every variable matters.
print([r.verdict.value for r in test_all_variables(gen.majority(3))])

###############################################################################
# Cost of a Junta verdict across register widths.
rows = run_sweep(range(4, 11), ["junta"], trials=100, seed=0)
for r in rows:
    print(f"n={r.n:2d}  mean g-queries={r.mean_g_queries:7.2f}")
slope = fit_loglog_exponent([1 << r.n for r in rows], [r.mean_g_queries for r in rows])
print(f"fitted exponent vs N: {slope:.3f}")
