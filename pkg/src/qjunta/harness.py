"""Repeated trials and scaling sweeps.

Seeding rule: trial ``k`` of a run with base seed ``s`` uses seed ``s + k``.
Within a trial the tester seeds variable ``i`` from ``(s + k, i)`` and sweep
fixtures are drawn from ``(s + k, n)``. Results are always ordered by
``(variable, trial)`` no matter how many workers run them.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from statistics import fmean

import numpy as np

from . import generators as gen
from .boolfn import TruthTable, is_junta_ground_truth, to_truth_table
from .tester import TestConfig, TestReport, Verdict, test_variable


def trial_seed(seed: int, trial: int) -> int:
    return seed + trial


def _one(args) -> TestReport:
    f, i, config = args
    return test_variable(f, i, config)


def _map(fn, jobs, workers: int):
    if workers <= 1 or len(jobs) < 2:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def run_trials(
    f: TruthTable,
    variables,
    trials: int,
    seed: int,
    cutoff_multiplier: float = 3.0,
    post_cap_rounds: int | None = None,
    workers: int = 1,
) -> list[TestReport]:
    jobs = [
        (f, i, TestConfig(cutoff_multiplier, post_cap_rounds, seed=trial_seed(seed, k)))
        for i in variables
        for k in range(trials)
    ]
    return _map(_one, jobs, workers)


SWEEP_COLUMNS = ("n", "fixture", "verdict_rate", "mean_g_queries", "mean_f_queries", "seed")
SWEEP_FIXTURES = ("junta", "single-term", "random", "affine")


def sweep_fixture(fixture: str, n: int, rng: np.random.Generator, variable: int = 0) -> TruthTable:
    """Fixture for testing ``x_variable``; every family except ``junta`` makes
    that variable relevant.
    """
    if fixture == "junta":
        return gen.random_junta(n, variable, rng)
    if fixture == "single-term":
        return to_truth_table(gen.single_term(n, n))
    if fixture == "random":
        return to_truth_table(gen.random_multi_term(n, rng, include=variable))
    if fixture == "affine":
        return to_truth_table(gen.random_affine(n, rng, include=variable))
    raise ValueError(f"unknown sweep fixture {fixture!r}; choose from {', '.join(SWEEP_FIXTURES)}")


def _sweep_job(args):
    fixture, n, seed, cutoff, post_cap = args
    f = sweep_fixture(fixture, n, np.random.default_rng([seed, n]))
    report = test_variable(f, 0, TestConfig(cutoff, post_cap, seed=seed))
    correct = (report.verdict is Verdict.JUNTA) == is_junta_ground_truth(f, 0)
    return correct, report.g_queries, report.f_queries


@dataclass(frozen=True)
class SweepRow:
    n: int
    fixture: str
    verdict_rate: float
    mean_g_queries: float
    mean_f_queries: float
    seed: int


def run_sweep(
    n_values,
    fixtures,
    trials: int,
    seed: int,
    cutoff_multiplier: float = 3.0,
    post_cap_rounds: int | None = None,
    workers: int = 1,
) -> list[SweepRow]:
    """``verdict_rate`` is the fraction of trials whose verdict matches the
    brute-force ground truth (the detection rate for relevant variables).
    """
    rows = []
    for n in n_values:
        for fixture in fixtures:
            jobs = [
                (fixture, n, trial_seed(seed, k), cutoff_multiplier, post_cap_rounds)
                for k in range(trials)
            ]
            results = _map(_sweep_job, jobs, workers)
            rows.append(
                SweepRow(
                    n=n,
                    fixture=fixture,
                    verdict_rate=fmean(r[0] for r in results),
                    mean_g_queries=fmean(r[1] for r in results),
                    mean_f_queries=fmean(r[2] for r in results),
                    seed=seed,
                )
            )
    return rows


def sweep_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for r in rows:
        writer.writerow(
            [r.n, r.fixture, f"{r.verdict_rate:.6f}", f"{r.mean_g_queries:.6f}",
             f"{r.mean_f_queries:.6f}", r.seed]
        )
    return buf.getvalue()


def fit_loglog_exponent(N_values, queries) -> float:
    """Least-squares slope of ``log(queries)`` against ``log(N)``."""
    slope, _ = np.polyfit(np.log(np.asarray(N_values, float)), np.log(np.asarray(queries, float)), 1)
    return float(slope)
