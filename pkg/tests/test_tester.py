import itertools
import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qjunta import generators as gen
from qjunta.boolfn import (
    AnfFunction,
    ArityError,
    TruthTable,
    derive_g,
    from_truth_table,
    influence,
    parse_anf,
    to_truth_table,
)
from qjunta.tester import (
    TestConfig,
    Verdict,
    build_g_oracle,
    reports_to_csv,
    test_all_variables,
    test_variable,
)


def tt(text, n=None):
    return to_truth_table(parse_anf(text, n))


def general3(b):
    """b0 ^ b1 x2 ^ b2 x1 ^ b3 x1x2 ^ b4 x0 ^ b5 x0x2 ^ b6 x0x1 ^ b7 x0x1x2."""
    masks = [0b000, 0b100, 0b010, 0b110, 0b001, 0b101, 0b011, 0b111]
    return AnfFunction.from_terms(3, [m for m, c in zip(masks, b) if c])


class TestBuildG:
    def test_xor_of_two_variables(self):
        g = build_g_oracle(tt("x0 ^ x1"), 0)
        assert g.bits.tolist() == [1, 1, 1, 1]

    def test_absent_variable(self):
        assert build_g_oracle(tt("x1x2"), 0).ones == 0

    @pytest.mark.parametrize("low", list(itertools.product((0, 1), repeat=4)))
    def test_three_variable_specialization(self, low):
        f = general3(low + (1, 1, 0, 0))
        assert build_g_oracle(to_truth_table(f), 0) == tt("1 ^ x2", 3)

    @given(st.integers(0, 2**64 - 1), st.integers(0, 5))
    def test_symmetric_in_tested_variable(self, value, i):
        g = build_g_oracle(TruthTable.from_int(6, value), i)
        for x in range(64):
            assert g[x] == g[x ^ (1 << i)]

    def test_matches_anf_route_random_n8(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            t = gen.random_table(8, rng)
            i = int(rng.integers(0, 8))
            assert build_g_oracle(t, i) == to_truth_table(derive_g(from_truth_table(t), i))

    def test_index_range(self):
        with pytest.raises(ArityError):
            build_g_oracle(tt("x0x1"), 2)


class TestVariable:
    def test_linear_shortcut(self):
        r = test_variable(tt("x0 ^ x1x2"), 0, TestConfig(seed=1))
        assert r.verdict is Verdict.NOT_JUNTA
        assert r.shortcut_hit and r.g_queries == 1 and r.f_queries == 2
        assert r.rounds == 0

    def test_absent_variable_is_junta(self):
        r = test_variable(tt("x1x2"), 0, TestConfig(seed=2))
        assert r.verdict is Verdict.JUNTA
        assert r.witness is None and not r.shortcut_hit
        assert all(rec.g_value == 0 for rec in r.trace)
        assert r.note == "at confidence implied by budget"

    def test_product_found_with_witness(self):
        f = tt("x0x1")
        trials = 10_000
        hits = 0
        for seed in range(trials):
            r = test_variable(f, 0, TestConfig(seed=seed))
            if r.verdict is Verdict.NOT_JUNTA:
                hits += 1
                assert r.witness >> 1 & 1
        assert hits / trials >= 2 / 3

    def test_query_count_includes_shortcut(self):
        r = test_variable(tt("x0x1x2x3"), 0, TestConfig(seed=5))
        assert r.g_queries == 1 + sum(rec.s for rec in r.trace)

    def test_diagnostics(self):
        r = test_variable(tt("x0x1"), 0, TestConfig(diagnostics=True))
        assert r.influence == 0.5
        assert test_variable(tt("x0x1"), 0).influence is None

    def test_deterministic(self):
        f = tt("x0x1x2 ^ x3x4")
        a = test_variable(f, 3, TestConfig(seed=17))
        b = test_variable(f, 3, TestConfig(seed=17))
        assert a == b


class TestAllVariables:
    def test_single_variable(self):
        reports = test_all_variables(tt("x0", 2))
        assert [r.verdict for r in reports] == [Verdict.NOT_JUNTA, Verdict.JUNTA]

    def test_zero_function(self):
        reports = test_all_variables(TruthTable(3, np.zeros(8, np.uint8)))
        assert all(r.verdict is Verdict.JUNTA for r in reports)

    def test_majority(self):
        maj = gen.majority(3)
        assert [influence(maj, i) for i in range(3)] == [0.5] * 3
        reports = test_all_variables(maj, TestConfig(seed=4))
        assert all(r.verdict is Verdict.NOT_JUNTA for r in reports)

    def test_variables_use_independent_streams(self):
        f = TruthTable(4, np.zeros(16, np.uint8))
        reports = test_all_variables(f, TestConfig(seed=0))
        assert len({tuple(rec.s for rec in r.trace) for r in reports}) > 1


class TestProperties:
    def test_one_sided_exhaustive_n3(self):
        for value in range(256):
            t = TruthTable.from_int(3, value)
            for i in range(3):
                if influence(t, i) == 0:
                    r = test_variable(t, i, TestConfig(seed=value))
                    assert r.verdict is Verdict.JUNTA

    def test_affine_fast_path(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            n = int(rng.integers(1, 9))
            i = int(rng.integers(0, n))
            f = to_truth_table(gen.random_affine(n, rng, include=i))
            assert build_g_oracle(f, i).ones == 1 << n
            r = test_variable(f, i)
            assert r.shortcut_hit and r.g_queries == 1


class TestSerialization:
    def test_json_round_trip(self):
        r = test_variable(tt("x0x1x2"), 1, TestConfig(seed=3))
        d = json.loads(r.to_json())
        assert list(d) == [
            "variable", "verdict", "witness_hex", "shortcut_hit",
            "g_queries", "f_queries", "rounds", "seed",
        ]
        assert d["verdict"] == r.verdict.value
        assert d["f_queries"] == 2 * d["g_queries"]
        if r.witness is not None:
            assert int(d["witness_hex"], 16) == r.witness

    def test_trace_schema(self):
        r = test_variable(tt("x0x1x2x3x4"), 0, TestConfig(seed=3))
        trace = json.loads(r.to_json(with_trace=True))["trace"]
        assert set(trace[0]) == {"round", "m", "s", "outcome", "g", "cumulative_iterations"}
        assert trace[0]["outcome"].startswith("0x")

    def test_csv(self):
        reports = test_all_variables(tt("x0", 2))
        lines = reports_to_csv(reports).splitlines()
        assert lines[0] == "variable,verdict,witness_hex,shortcut_hit,g_queries,f_queries,rounds,seed"
        assert lines[1].startswith("0,NotJunta,0x0,True,1,2,0,")
