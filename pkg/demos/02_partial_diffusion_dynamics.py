"""
Partial diffusion: simulator versus closed form
===============================================

The oracle flips an ancilla instead of a phase, and the partial diffusion
operator inverts about the mean only on the ancilla-0 half of the register.
The amplitudes then fall into three groups, whose evolution follows a short
recurrence and a closed-form success probability.
"""

import numpy as np

from qjunta import analytic as an
from qjunta import statevec as sv

n, M = 6, 3
N = 1 << n
params = an.SearchParams(N, M)
q_star = an.iteration_count(params)
print(f"N={N}  M={M}  theta={params.theta:.4f}  q*={q_star}")

mask = np.arange(N) < M
state = sv.uniform_superposition(n)
print(" q      a          b          c        P_s(sim)   P_s(formula)")
for t in an.trajectory(params, 2 * q_star):
    if t.q:
        sv.apply_oracle(state, mask, inplace=True)
        sv.apply_partial_diffusion(state, inplace=True)
    groups = sv.group_amplitudes(state, mask, t.q)
    p_sim = sv.exact_distribution(state)[mask].sum()
    print(f"{t.q:2d}  {groups.a:+.6f}  {groups.b:+.6f}  {groups.c:+.6f}"
          f"  {p_sim:.6f}   {an.success_probability(params, t.q):.6f}")
    assert abs(groups.a - t.a) < 1e-10 and abs(groups.c - t.c) < 1e-10

###############################################################################
# Unlike the phase-flip Grover step, the success probability at q* stays high
# even when most inputs are solutions.
for ratio in (1 / 64, 1 / 4, 1 / 2, 3 / 4, 63 / 64, 1):
    p = an.SearchParams(N, round(ratio * N))
    q = an.iteration_count(p)
    print(f"M/N={ratio:.3f}  q*={q}  P_s={an.success_probability(p, q):.4f}")
