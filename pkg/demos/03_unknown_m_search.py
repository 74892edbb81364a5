"""
Searching without knowing the number of solutions
=================================================

The randomized schedule draws the iteration count ``s`` from a window that
grows by 8/7 per failed round, up to sqrt(N). Here we watch one run and then
look at the average cost as the number of solutions varies.
"""

import math

import numpy as np

from qjunta.boolfn import TruthTable
from qjunta.search import search_unknown_m

n = 8
N = 1 << n
bits = np.zeros(N, np.uint8)
bits[[17, 200]] = 1
g = TruthTable(n, bits)

out = search_unknown_m(g, np.random.default_rng(3))
for rec in out.trace:
    print(f"round {rec.round:2d}  m={rec.m:6.3f}  s={rec.s:2d}  t={rec.outcome:3d}  g(t)={rec.g_value}")
print(out.status.value, "after", out.queries.g_oracle_calls, "oracle iterations")

###############################################################################
# Mean cost against sqrt(N/M).
rng = np.random.default_rng(0)
for M in (1, 4, 16, 64, 128):
    bits = np.zeros(N, np.uint8)
    bits[rng.choice(N, M, replace=False)] = 1
    g = TruthTable(n, bits)
    calls = [search_unknown_m(g, np.random.default_rng(k)).queries.g_oracle_calls for k in range(500)]
    print(f"M={M:3d}  mean iterations={np.mean(calls):6.2f}  sqrt(N/M)={math.sqrt(N / M):6.2f}")
