"""Amplitude-amplification search drivers over a table-defined oracle.

Two drivers share the same simulated round: prepare the uniform state, apply
``s`` oracle + partial-diffusion iterations, measure the input register.

* :func:`search_known_m` runs ``floor(pi / (2 theta))`` iterations once.
* :func:`search_unknown_m` runs the randomized schedule for an unknown match
  count: ``m`` starts at 1 and grows by ``lambda = 8/7`` up to ``sqrt(N)``;
  each round draws ``s`` uniformly from ``[0, min(ceil(m), floor(sqrt N)) - 1]``.

RNG consumption order per round is fixed: one ``rng.integers`` call for ``s``
(unknown-M driver only), then one ``rng.random`` call for the measurement.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import statevec as sv
from .analytic import SearchParams, iteration_count
from .boolfn import TruthTable

GROWTH = 8.0 / 7.0


class Status(enum.Enum):
    FOUND = "Found"
    NOT_FOUND = "NotFound"


@dataclass
class QueryCounter:
    """Oracle usage.

    ``g_oracle_calls`` counts applications of the constructed oracle inside
    the quantum rounds; each one costs two base-oracle calls.
    ``classical_checks`` counts plain evaluations of ``g`` used to verify
    measured outcomes.
    """

    g_oracle_calls: int = 0
    rounds: int = 0
    classical_checks: int = 0

    @property
    def base_oracle_calls(self) -> int:
        return 2 * self.g_oracle_calls


@dataclass(frozen=True)
class TraceRecord:
    round: int
    m: float
    s: int
    outcome: int
    g_value: int
    cumulative_iterations: int

    def as_dict(self, n: int) -> dict:
        width = max(1, (n + 3) // 4)
        return {
            "round": self.round,
            "m": self.m,
            "s": self.s,
            "outcome": f"0x{self.outcome:0{width}x}",
            "g": self.g_value,
            "cumulative_iterations": self.cumulative_iterations,
        }


@dataclass
class SearchOutcome:
    status: Status
    witness: int | None
    queries: QueryCounter
    trace: list[TraceRecord] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


@dataclass(frozen=True)
class SearchBudget:
    """Termination policy for the unknown-M loop.

    The loop has no natural stopping rule when ``g`` has no solutions. Once
    ``m`` has reached its ``sqrt(N)`` cap, the search stops after the
    post-cap rounds have spent ``ceil(cutoff_multiplier * sqrt(N))``
    iterations, or after ``post_cap_rounds`` rounds (default: the same
    number), whichever comes first. The warm-up rounds needed for ``m`` to
    reach the cap, ``ceil(log_{8/7} sqrt(N))``, are always run.
    """

    cutoff_multiplier: float = 3.0
    post_cap_rounds: int | None = None

    def __post_init__(self):
        if not self.cutoff_multiplier > 0:
            raise ValueError("cutoff_multiplier must be positive")
        if self.post_cap_rounds is not None and self.post_cap_rounds < 1:
            raise ValueError("post_cap_rounds must be at least 1")

    def iteration_allowance(self, N: int) -> int:
        return math.ceil(self.cutoff_multiplier * math.sqrt(N))

    def round_allowance(self, N: int) -> int:
        if self.post_cap_rounds is not None:
            return self.post_cap_rounds
        return self.iteration_allowance(N)

    @staticmethod
    def warmup_rounds(N: int) -> int:
        root = math.sqrt(N)
        return math.ceil(math.log(root) / math.log(GROWTH)) if root > 1 else 0


def _mask(g: TruthTable) -> np.ndarray:
    return g.bits.astype(bool)


def amplified_state(n: int, mask: np.ndarray, iterations: int) -> sv.QuantumState:
    state = sv.uniform_superposition(n)
    for _ in range(iterations):
        sv.apply_oracle(state, mask, inplace=True)
        sv.apply_partial_diffusion(state, inplace=True)
    return state


def _round(n, mask, s, rng) -> int:
    return sv.measure_input(amplified_state(n, mask, s), rng)


def search_known_m(g: TruthTable, M: int, rng: np.random.Generator) -> SearchOutcome:
    """One shot of ``q*`` iterations for a caller-supplied match count ``M``."""
    N = g.size
    if not 1 <= M <= N:
        raise ValueError(f"M={M} outside [1, {N}]")
    q = iteration_count(SearchParams(N, M))
    mask = _mask(g)
    t = _round(g.arity, mask, q, rng)
    value = g[t]
    queries = QueryCounter(g_oracle_calls=q, rounds=1, classical_checks=1)
    trace = [TraceRecord(1, float(q + 1), q, t, value, q)]
    if value:
        return SearchOutcome(Status.FOUND, t, queries, trace)
    return SearchOutcome(Status.NOT_FOUND, None, queries, trace)


def search_unknown_m(
    g: TruthTable,
    rng: np.random.Generator,
    budget: SearchBudget | None = None,
) -> SearchOutcome:
    """Randomized search that does not need the number of matches."""
    budget = budget or SearchBudget()
    N = g.size
    n = g.arity
    root = math.sqrt(N)
    s_cap = max(1, math.isqrt(N))
    iter_allow = budget.iteration_allowance(N)
    round_allow = budget.round_allowance(N)
    mask = _mask(g)

    queries = QueryCounter()
    trace: list[TraceRecord] = []
    m = 1.0
    post_iters = post_rounds = 0
    while True:
        at_cap = m >= root
        s_max = min(math.ceil(m), s_cap) - 1
        s = int(rng.integers(0, s_max + 1))
        t = _round(n, mask, s, rng)
        value = g[t]
        queries.g_oracle_calls += s
        queries.rounds += 1
        queries.classical_checks += 1
        trace.append(
            TraceRecord(queries.rounds, m, s, t, value, queries.g_oracle_calls)
        )
        if value:
            return SearchOutcome(Status.FOUND, t, queries, trace)
        if at_cap:
            post_iters += s
            post_rounds += 1
            if post_iters >= iter_allow or post_rounds >= round_allow:
                return SearchOutcome(Status.NOT_FOUND, None, queries, trace)
        m = min(GROWTH * m, root)
