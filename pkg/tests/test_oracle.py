import io
import json
import random

import pytest

from balpack.core import (
    BalancedPacking,
    Labeling,
    PreconditionViolated,
    discrepancy,
    verify,
)
from balpack.oracle import (
    Indivisible,
    OracleResult,
    SearchBudget,
    existence_reference,
    interval_labeling,
    max_balanced_packing,
    structured_random,
)


def test_tiny_ground_set_exhaustive():
    # Any two 3-subsets of a 4-set share a pair, so one block is the max.
    r = max_balanced_packing(2, 3, 4)
    assert isinstance(r, OracleResult)
    assert (r.size, r.exact) == (1, True)
    assert len(r.witness.blocks) == 1


def test_seven_points():
    r = max_balanced_packing(2, 3, 7)
    assert (r.size, r.exact) == (6, True)
    assert verify(r.witness).passed


def test_eight_points_meets_counting_bound():
    r = max_balanced_packing(2, 3, 8)
    assert (r.size, r.exact) == (8, True)
    assert r.size == 8 * 8 // 8
    assert verify(r.witness).passed


def test_nine_points():
    r = max_balanced_packing(2, 3, 9)
    assert (r.size, r.exact) == (10, True)
    assert verify(r.witness).passed


def test_witness_survives_relabeling():
    r = max_balanced_packing(2, 3, 7)
    rng = random.Random(7)
    perm = list(range(7))
    rng.shuffle(perm)
    blocks = tuple(sorted(tuple(sorted(perm[x] for x in b)) for b in r.witness.blocks))
    signs = [0] * 7
    for x, s in enumerate(r.witness.labeling.signs):
        signs[perm[x]] = s
    moved = BalancedPacking(7, 2, 3, Labeling(tuple(signs)), blocks)
    assert verify(moved).passed
    assert len(moved.blocks) == r.size


def test_budget_exhaustion_is_reported_not_raised():
    r = max_balanced_packing(2, 3, 9, budget=SearchBudget(max_nodes=50))
    assert not r.exact
    assert r.nodes >= 50
    # The incumbent is still a genuine packing, just maybe not maximum.
    assert verify(r.witness).passed
    assert r.size <= 10


def test_budget_validation():
    with pytest.raises(PreconditionViolated):
        SearchBudget(max_nodes=0)
    with pytest.raises(PreconditionViolated):
        SearchBudget(time_cap=-1.0)
    with pytest.raises(PreconditionViolated):
        max_balanced_packing(0, 3, 6)


def test_search_log_is_json_lines():
    sink = io.StringIO()
    r = max_balanced_packing(2, 3, 6, log=sink)
    assert r.exact
    lines = [ln for ln in sink.getvalue().splitlines() if ln]
    assert lines
    for ln in lines:
        rec = json.loads(ln)
        assert {"nodes", "incumbent", "bound"} <= rec.keys()


def test_determinism():
    a = max_balanced_packing(2, 3, 8)
    b = max_balanced_packing(2, 3, 8)
    assert a.witness.blocks == b.witness.blocks
    assert a.nodes == b.nodes


def test_interval_labeling_shape():
    lab = interval_labeling(12, 3)
    assert lab.signs == (1,) * 8 + (-1,) * 4
    with pytest.raises(Indivisible):
        interval_labeling(10, 3)


def test_structured_random_structure_and_rule():
    blocks, lab = structured_random(20, 4, 2, 500, rng_seed=3)
    width = 5
    for b in blocks:
        assert len(b) == 4
        for i, x in enumerate(b):
            assert i * width <= x < (i + 1) * width
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            assert len(set(blocks[i]) & set(blocks[j])) <= 2


def test_structured_random_discrepancy_even_k():
    blocks, lab = structured_random(20, 4, 2, 200, rng_seed=5)
    assert blocks
    assert {discrepancy(b, lab) for b in blocks} == {0}


def test_structured_random_discrepancy_odd_k():
    blocks, lab = structured_random(25, 5, 2, 200, rng_seed=5)
    assert blocks
    assert {discrepancy(b, lab) for b in blocks} == {1}


def test_structured_random_deterministic():
    a, _ = structured_random(100, 5, 2, 1000, rng_seed=1)
    b, _ = structured_random(100, 5, 2, 1000, rng_seed=1)
    c, _ = structured_random(100, 5, 2, 1000, rng_seed=2)
    assert a == b
    assert a != c


def test_structured_random_errors_and_edges():
    with pytest.raises(Indivisible):
        structured_random(10, 3, 2, 10, rng_seed=0)
    blocks, _ = structured_random(20, 4, 2, 0, rng_seed=0)
    assert blocks == ()


def test_existence_reference_value():
    assert existence_reference(100, 5, 2) == 64
