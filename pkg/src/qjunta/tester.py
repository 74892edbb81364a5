"""Quantum test of whether one variable of a black-box function is junta.

For variable ``x_i`` the tester builds ``g(x) = f(x) ^ f(x ^ e_i)``, which is
identically zero exactly when ``x_i`` is irrelevant. It first evaluates
``g`` at the all-zeros input (the constant-term shortcut) and otherwise
searches for a solution of ``g`` with :func:`~qjunta.search.search_unknown_m`.
A solution proves ``x_i`` relevant; an exhausted budget yields ``Junta``.

``f`` is only ever consulted through table lookups.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .boolfn import CapacityError, TruthTable, _check_var, flip_variable_bits, influence
from .search import SearchBudget, TraceRecord, search_unknown_m
from .statevec import SIM_ARITY_CAP

JUNTA_NOTE = "at confidence implied by budget"


class Verdict(enum.Enum):
    JUNTA = "Junta"
    NOT_JUNTA = "NotJunta"


@dataclass(frozen=True)
class TestConfig:
    """Budget constants and seeding for :func:`test_variable`.

    The RNG stream for variable ``i`` is seeded from ``(seed, i)``.
    """

    __test__ = False

    cutoff_multiplier: float = 3.0
    post_cap_rounds: int | None = None
    seed: int = 0
    trials: int = 1
    diagnostics: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(self.cutoff_multiplier, self.post_cap_rounds)

    def rng_for(self, variable: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, variable])


@dataclass
class TestReport:
    __test__ = False

    variable: int
    arity: int
    verdict: Verdict
    witness: int | None
    shortcut_hit: bool
    g_queries: int
    rounds: int
    classical_queries: int
    seed: int
    trace: list[TraceRecord] = field(default_factory=list)
    influence: float | None = None

    @property
    def f_queries(self) -> int:
        return 2 * self.g_queries

    @property
    def witness_hex(self) -> str | None:
        if self.witness is None:
            return None
        return f"0x{self.witness:0{max(1, (self.arity + 3) // 4)}x}"

    @property
    def note(self) -> str:
        return JUNTA_NOTE if self.verdict is Verdict.JUNTA else ""

    def to_dict(self, with_trace: bool = False) -> dict:
        out = {
            "variable": self.variable,
            "verdict": self.verdict.value,
            "witness_hex": self.witness_hex,
            "shortcut_hit": self.shortcut_hit,
            "g_queries": self.g_queries,
            "f_queries": self.f_queries,
            "rounds": self.rounds,
            "seed": self.seed,
        }
        if self.influence is not None:
            out["influence"] = self.influence
        if with_trace:
            out["trace"] = [r.as_dict(self.arity) for r in self.trace]
        return out

    def to_json(self, with_trace: bool = False) -> str:
        return json.dumps(self.to_dict(with_trace), sort_keys=False)


REPORT_CSV_COLUMNS = (
    "variable", "verdict", "witness_hex", "shortcut_hit",
    "g_queries", "f_queries", "rounds", "seed",
)


def reports_to_csv(reports, extra: dict | None = None) -> str:
    """CSV with one row per report; ``extra`` columns are prepended."""
    extra = extra or {}
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(extra) + list(REPORT_CSV_COLUMNS))
    for r in reports:
        d = r.to_dict()
        writer.writerow(
            list(extra.values())
            + ["" if d[k] is None else d[k] for k in REPORT_CSV_COLUMNS]
        )
    return buf.getvalue()


def build_g_oracle(f: TruthTable, i: int) -> TruthTable:
    """Table of ``g(x) = f(x) ^ f(x ^ e_i)``: two lookups of ``f`` per entry."""
    _check_var(f.arity, i)
    return TruthTable(f.arity, f.bits ^ flip_variable_bits(f.bits, f.arity, i))


def test_variable(f: TruthTable, i: int, config: TestConfig | None = None) -> TestReport:
    """Run the junta test for variable ``x_i`` of ``f``."""
    config = config or TestConfig()
    _check_var(f.arity, i)
    if f.arity > SIM_ARITY_CAP:
        raise CapacityError(f"arity {f.arity} exceeds the simulation cap of {SIM_ARITY_CAP}")
    g = build_g_oracle(f, i)
    diag = influence(f, i) if config.diagnostics else None

    if g[0]:
        return TestReport(
            variable=i, arity=f.arity, verdict=Verdict.NOT_JUNTA, witness=0,
            shortcut_hit=True, g_queries=1, rounds=0, classical_queries=0,
            seed=config.seed, influence=diag,
        )

    outcome = search_unknown_m(g, config.rng_for(i), config.budget)
    if outcome.found:
        if g[outcome.witness] != 1:
            raise RuntimeError("search returned a witness that g rejects")
        verdict = Verdict.NOT_JUNTA
    else:
        verdict = Verdict.JUNTA
    return TestReport(
        variable=i,
        arity=f.arity,
        verdict=verdict,
        witness=outcome.witness,
        shortcut_hit=False,
        g_queries=1 + outcome.queries.g_oracle_calls,
        rounds=outcome.queries.rounds,
        classical_queries=outcome.queries.classical_checks,
        seed=config.seed,
        trace=outcome.trace,
        influence=diag,
    )


def test_all_variables(f: TruthTable, config: TestConfig | None = None) -> list[TestReport]:
    config = config or TestConfig()
    return [test_variable(f, i, config) for i in range(f.arity)]


test_variable.__test__ = False
test_all_variables.__test__ = False
