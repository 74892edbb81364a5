import math

import numpy as np
import pytest

from qjunta import analytic as an
from qjunta.search import (
    GROWTH,
    SearchBudget,
    Status,
    search_known_m,
    search_unknown_m,
)

from conftest import binomial_3sigma, table


def solutions(n, xs):
    bits = np.zeros(1 << n, np.uint8)
    bits[list(xs)] = 1
    return table(n, bits)


class TestKnownM:
    def test_all_solutions(self):
        g = table(3, [1] * 8)
        for seed in range(50):
            out = search_known_m(g, 8, np.random.default_rng(seed))
            assert out.found
            assert out.queries.g_oracle_calls == 1

    def test_single_solution_rate(self):
        g = solutions(4, [11])
        p = an.success_probability(an.SearchParams(16, 1), 4)
        trials = 10_000
        hits = sum(search_known_m(g, 1, np.random.default_rng(s)).found for s in range(trials))
        assert abs(hits / trials - p) <= binomial_3sigma(p, trials) + 1.0 / trials

    def test_no_solutions(self):
        g = table(3, [0] * 8)
        for seed in range(50):
            out = search_known_m(g, 1, np.random.default_rng(seed))
            assert out.status is Status.NOT_FOUND and out.witness is None

    def test_query_accounting(self):
        out = search_known_m(solutions(6, [5]), 1, np.random.default_rng(0))
        q = an.iteration_count(an.SearchParams(64, 1))
        assert out.queries.g_oracle_calls == q
        assert out.queries.base_oracle_calls == 2 * q
        assert out.queries.classical_checks == 1

    def test_m_range(self):
        with pytest.raises(ValueError):
            search_known_m(table(2, [0, 0, 0, 1]), 0, np.random.default_rng(0))


class TestUnknownM:
    def test_half_solutions_first_two_rounds(self):
        # round 1: s = 0 finds with 1/2; round 2: s in {0, 1} finds with 3/4
        g = solutions(4, range(8))
        trials = 10_000
        outs = [search_unknown_m(g, np.random.default_rng(s)) for s in range(trials)]
        assert all(o.found for o in outs)
        two = sum(o.queries.rounds <= 2 for o in outs) / trials
        assert abs(two - 0.875) <= binomial_3sigma(0.875, trials)
        four = sum(o.queries.rounds <= 4 for o in outs) / trials
        assert four >= 0.99
        assert abs(four - (1 - 0.5 * 0.25**3)) <= binomial_3sigma(0.9921875, trials)

    def test_no_solutions_exhausts_budget(self):
        g = table(4, [0] * 16)
        budget = SearchBudget()
        warm = SearchBudget.warmup_rounds(16)
        assert warm == 11
        for seed in range(200):
            out = search_unknown_m(g, np.random.default_rng(seed), budget)
            assert out.status is Status.NOT_FOUND
            post = [r for r in out.trace if r.m >= 4.0]
            assert len(out.trace) - len(post) == warm
            assert sum(r.s for r in post) <= budget.iteration_allowance(16) + 3
            assert len(post) <= budget.round_allowance(16)

    def test_single_solution_mean_queries(self):
        g = solutions(8, [77])
        calls = [
            search_unknown_m(g, np.random.default_rng(s)).queries.g_oracle_calls
            for s in range(10_000)
        ]
        assert np.mean(calls) <= 4 * math.sqrt(256)

    def test_soundness_and_trace_conformance(self):
        rng = np.random.default_rng(99)
        for trial in range(300):
            n = int(rng.integers(1, 8))
            N = 1 << n
            g = table(n, (rng.random(N) < rng.random() * 0.3).astype(np.uint8))
            out = search_unknown_m(g, np.random.default_rng(trial))
            if out.found:
                assert g[out.witness] == 1
            assert out.queries.g_oracle_calls == sum(r.s for r in out.trace)
            assert out.queries.base_oracle_calls == 2 * out.queries.g_oracle_calls
            assert out.queries.rounds == len(out.trace)
            cumulative = 0
            for r in out.trace:
                cumulative += r.s
                assert r.cumulative_iterations == cumulative
                assert r.m <= math.sqrt(N)
                assert 0 <= r.s <= min(math.ceil(r.m), math.isqrt(N)) - 1
                assert r.g_value == g[r.outcome]

    def test_m_growth(self):
        out = search_unknown_m(table(6, [0] * 64), np.random.default_rng(1))
        ms = [r.m for r in out.trace]
        assert ms[0] == 1.0
        for a, b in zip(ms, ms[1:]):
            assert b == pytest.approx(min(GROWTH * a, 8.0))

    def test_deterministic(self):
        g = solutions(7, [3, 90])
        a = search_unknown_m(g, np.random.default_rng(12))
        b = search_unknown_m(g, np.random.default_rng(12))
        assert a == b

    def test_single_qubit_register_terminates(self):
        out = search_unknown_m(table(1, [0, 0]), np.random.default_rng(0))
        assert not out.found
        assert all(r.s == 0 for r in out.trace)

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            SearchBudget(cutoff_multiplier=0)
        with pytest.raises(ValueError):
            SearchBudget(post_cap_rounds=0)

    def test_larger_budget_spends_more(self):
        g = table(6, [0] * 64)
        small = search_unknown_m(g, np.random.default_rng(3), SearchBudget(1.0))
        large = search_unknown_m(g, np.random.default_rng(3), SearchBudget(6.0))
        assert large.queries.g_oracle_calls > small.queries.g_oracle_calls
