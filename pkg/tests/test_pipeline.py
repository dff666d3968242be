import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from parmatch import (
    EMPTY,
    ByteText,
    ChunkPlan,
    default_plan_sweep,
    naive_match,
    sm_empty,
    to_sm,
    to_sm_par,
    verify_equivalence,
)

from support import bt, byte_texts, dense_cases


class TestChunkPlan:
    @pytest.mark.parametrize("branch,size", [(0, 1), (1, 0), (-2, 3), (3, -1)])
    def test_rejects_nonpositive(self, branch, size):
        with pytest.raises(ValueError):
            ChunkPlan(branch, size)

    def test_sweep_contains_boundary_splitter(self):
        plans = default_plan_sweep(target_length=5)
        assert ChunkPlan(2, 4) in plans
        assert len(plans) == 10


class TestToSmPar:
    def test_spec_vector(self):
        result = to_sm_par(ChunkPlan(2, 3), bt("abababa"), bt("aba"))
        assert result == to_sm(bt("abababa"), bt("aba"))
        assert result.indices == (0, 2, 4)

    def test_boundary_split_vector(self):
        # chunk boundary at offset 4 splits the occurrence at index 5
        result = to_sm_par(ChunkPlan(2, 4), bt("ababcabcab"), bt("abcab"))
        assert result.indices == (2, 5)

    def test_empty_input(self):
        assert to_sm_par(ChunkPlan(3, 5), EMPTY, bt("aba")) == sm_empty(bt("aba"))

    def test_degenerate_plan_is_sequential(self):
        text, target = bt("aabbaabb"), bt("ab")
        assert to_sm_par(ChunkPlan(1, 1), text, target) == to_sm(text, target)

    @given(dense_cases(max_input=48), st.integers(1, 5), st.integers(1, 9))
    @settings(deadline=None)
    def test_equals_sequential_for_any_plan(self, case, branch, size):
        text, target = case
        plan = ChunkPlan(branch, size)
        assert to_sm_par(plan, text, target) == to_sm(text, target)

    def test_deterministic_across_runs(self):
        rng = random.Random(3)
        text = ByteText(bytes(rng.choice(b"ab") for _ in range(400)))
        target = bt("abab")
        plan = ChunkPlan(2, 3)
        results = {to_sm_par(plan, text, target).indices for _ in range(10)}
        assert len(results) == 1


class TestBoundaryAdversarial:
    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    def test_periodic_input_chunks_shorter_than_target(self, size):
        # every occurrence straddles at least one chunk seam
        text = bt("ab" * 64)
        target = bt("ababa")
        assert size < len(target)
        result = to_sm_par(ChunkPlan(2, size), text, target)
        assert list(result.indices) == naive_match(text, target)

    def test_single_byte_chunks_dense_matches(self):
        text = bt("a" * 50)
        target = bt("aaa")
        result = to_sm_par(ChunkPlan(3, 1), text, target)
        assert list(result.indices) == list(range(48))


class TestVerifyEquivalence:
    def test_spec_instance(self):
        report = verify_equivalence(bt("abababa"), bt("aba"), [ChunkPlan(2, 3)])
        assert report.ok
        entry = report.entries[0]
        assert entry.equal and entry.first_divergence is None
        assert entry.sequential_ms >= 0 and entry.parallel_ms >= 0

    def test_fully_degenerate_plan(self):
        report = verify_equivalence(bt("abcabc"), bt("abc"), [ChunkPlan(1, 1)])
        assert report.ok

    def test_default_sweep_on_random_text(self):
        rng = random.Random(5)
        text = ByteText(bytes(rng.choice(b"abcd") for _ in range(2048)))
        report = verify_equivalence(text, bt("abc"))
        assert report.ok
        assert len(report.entries) == 10

    def test_text_table_shape(self):
        report = verify_equivalence(bt("abababa"), bt("aba"), [ChunkPlan(2, 3)])
        lines = report.to_text().splitlines()
        assert "branch" in lines[0] and "speedup" in lines[0]
        assert len(lines) == 2

    def test_json_shape(self):
        report = verify_equivalence(bt("abababa"), bt("aba"), [ChunkPlan(2, 3)])
        payload = json.loads(report.to_json())
        assert payload[0]["plan"] == {"branch": 2, "chunk_size": 3}
        assert payload[0]["equal"] is True
        assert payload[0]["first_divergence"] is None
