"""Framework-free invariant checks behind ``qjunta validate``."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import analytic as an
from . import statevec as sv
from .boolfn import (
    TruthTable,
    derive_g,
    from_truth_table,
    is_junta_ground_truth,
    to_truth_table,
)
from .tester import build_g_oracle

AMPLITUDE_TOL = 1e-10
PROBABILITY_TOL = 1e-9


@dataclass
class Check:
    name: str
    worst: float
    tolerance: float
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and self.worst <= self.tolerance


def _match_mask(N: int, M: int) -> np.ndarray:
    return np.arange(N) < M


def simulate_grid(n_min: int = 2, n_max: int = 8):
    """Yield ``(n, M, q, triple, desired_mass)`` from the state-vector
    simulator for q = 0..2q* at each grid point."""
    for n, M in an.grid_points(n_min, n_max):
        N = 1 << n
        mask = _match_mask(N, M)
        q_max = 2 * an.iteration_count(an.SearchParams(N, M))
        state = sv.uniform_superposition(n)
        for q in range(q_max + 1):
            if q:
                sv.apply_oracle(state, mask, inplace=True)
                sv.apply_partial_diffusion(state, inplace=True)
            triple = sv.group_amplitudes(state, mask, q)
            mass = float(sv.exact_distribution(state)[mask].sum())
            yield n, M, q, triple, mass


def _triple_gap(N, M, x: sv.AmplitudeTriple, y) -> float:
    gap = max(abs(x.b - y.b), abs(x.c - y.c))
    if M < N:
        gap = max(gap, abs(x.a - y.a))
    return gap


def check_recurrence(n_min=2, n_max=8) -> tuple[Check, Check]:
    amp = Check("recurrence vs simulator (amplitudes)", 0.0, AMPLITUDE_TOL)
    prob = Check("success probability vs simulator (q*)", 0.0, PROBABILITY_TOL)
    traj = {}
    for n, M, q, triple, mass in simulate_grid(n_min, n_max):
        N = 1 << n
        p = an.SearchParams(N, M)
        if q == 0:
            traj = an.trajectory(p, 2 * an.iteration_count(p))
        gap = _triple_gap(N, M, triple, traj[q])
        amp.worst = max(amp.worst, gap)
        if gap > AMPLITUDE_TOL:
            amp.violations.append(f"n={n} M={M} q={q}: deviation {gap:.3e}")
        if q == an.iteration_count(p):
            d = abs(mass - an.success_probability(p, q))
            prob.worst = max(prob.worst, d)
            if d > PROBABILITY_TOL:
                prob.violations.append(f"n={n} M={M} q={q}: deviation {d:.3e}")
    return amp, prob


def check_golden(path=None, n_min=2, n_max=8) -> Check:
    """Compare golden rows with both the simulator and the closed forms."""
    path = path or an.default_golden_path()
    check = Check(f"golden file {path}", 0.0, AMPLITUDE_TOL)
    rows = an.read_golden(path)
    index = {(r.n, r.M, r.q): (line, r) for line, r in enumerate(rows, start=2)}
    for n, M, q, triple, mass in simulate_grid(n_min, n_max):
        key = (n, M, q)
        if key not in index:
            check.violations.append(f"missing row n={n} M={M} q={q}")
            continue
        line, row = index[key]
        N = 1 << n
        p = an.SearchParams(N, M)
        golden = sv.AmplitudeTriple(row.a, row.b, row.c, q)
        gap = _triple_gap(N, M, triple, golden)
        pgap = max(abs(mass - row.P_s), abs(an.success_probability(p, q) - row.P_s))
        check.worst = max(check.worst, gap)
        if gap > AMPLITUDE_TOL or pgap > PROBABILITY_TOL:
            check.violations.append(
                f"row {line} (n={n} M={M} q={q}): amplitude deviation {gap:.3e}, "
                f"probability deviation {pgap:.3e}"
            )
    return check


def check_iteration_bound(n_min=2, n_max=8) -> Check:
    check = Check("iteration count bound", 0.0, 0.0)
    for n, M in an.grid_points(n_min, n_max):
        p = an.SearchParams.for_width(n, M)
        excess = an.iteration_count(p) - (an.iteration_bound(p) + 1)
        if excess > 0:
            check.violations.append(f"n={n} M={M}: q* exceeds bound by {excess:.3f}")
    return check


def coverage_flags(n_min=2, n_max=8) -> list[str]:
    """Grid points where P_s(q*) < 1/2. Informational only."""
    flags = []
    for n, M in an.grid_points(n_min, n_max):
        p = an.SearchParams.for_width(n, M)
        ps = an.success_probability(p, an.iteration_count(p))
        if ps < 0.5:
            flags.append(f"n={n} M={M}: P_s(q*)={ps:.6f}")
    return flags


def check_unitarity(n_max: int = sv.MATRIX_ARITY_CAP) -> tuple[Check, Check]:
    uni = Check("partial diffusion unitarity", 0.0, AMPLITUDE_TOL)
    inv = Check("oracle involution", 0.0, 0.0)
    rng = np.random.default_rng(0)
    for n in range(1, n_max + 1):
        y = sv.partial_diffusion_matrix(n)
        dev = float(np.max(np.abs(y @ y.conj().T - np.eye(y.shape[0]))))
        uni.worst = max(uni.worst, dev)
        if dev >= AMPLITUDE_TOL:
            uni.violations.append(f"n={n}: |YY^+ - I|_max = {dev:.3e}")
        g = rng.integers(0, 2, 1 << n)
        amps = rng.normal(size=2 << n) + 1j * rng.normal(size=2 << n)
        s = sv.QuantumState(n, amps / np.linalg.norm(amps))
        twice = sv.apply_oracle(sv.apply_oracle(s, g), g)
        if not np.array_equal(twice.amplitudes, s.amplitudes):
            inv.violations.append(f"n={n}: oracle applied twice is not the identity")
    return uni, inv


def check_boolean_functions() -> Check:
    """Exhaustive n = 3: ANF and table routes to g agree, and g == 0 iff junta."""
    check = Check("g construction (exhaustive n=3)", 0.0, 0.0)
    for value in range(256):
        t = TruthTable.from_int(3, value)
        f = from_truth_table(t)
        if to_truth_table(f) != t or to_truth_table(f, "naive") != t:
            check.violations.append(f"table {value:#04x}: transform round trip failed")
        for i in range(3):
            g_anf = derive_g(f, i)
            if to_truth_table(g_anf) != build_g_oracle(t, i):
                check.violations.append(f"table {value:#04x} x{i}: g paths disagree")
            if g_anf.is_zero != is_junta_ground_truth(t, i):
                check.violations.append(f"table {value:#04x} x{i}: junta mismatch")
    return check


def run_all(n_max: int = 8, golden=None) -> list[Check]:
    amp, prob = check_recurrence(2, n_max)
    uni, inv = check_unitarity(min(n_max, sv.MATRIX_ARITY_CAP))
    return [
        check_boolean_functions(),
        amp,
        prob,
        check_golden(golden, 2, n_max),
        check_iteration_bound(2, n_max),
        uni,
        inv,
    ]


def eq6_table(n_min=2, n_max=8) -> list[tuple[int, int, int, float]]:
    """Rows ``(n, M, q*, P_s(q*))`` over the grid."""
    out = []
    for n, M in an.grid_points(n_min, n_max):
        p = an.SearchParams.for_width(n, M)
        q = an.iteration_count(p)
        out.append((n, M, q, an.success_probability(p, q)))
    return out
