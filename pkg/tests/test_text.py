import random

import pytest

from rcomp import MalformedRlbwt, Rlbwt, Run, invert_rlbwt, run_length_encode, sentinelize
from rcomp.oracle import bwt_naive
from rcomp.text import symbols_to_bytes

from conftest import show, sym


def test_sentinelize_shifts_and_terminates():
    assert sentinelize(b"") == [0]
    assert sentinelize(bytes([1, 2])) == [2, 3, 0]
    out = sentinelize(b"aabbabbabba")
    assert len(out) == 12 and out[-1] == 0 and 0 not in out[:-1]


def test_sentinelize_handles_nul_and_high_bytes():
    assert sentinelize(b"\x00\xff") == [1, 256, 0]
    assert symbols_to_bytes(sentinelize(b"\x00\xff")) == b"\x00\xff"


def test_run_length_encode_known_columns():
    runs = run_length_encode(sym("ab$bbabbbaaa")).pairs()
    a, b = sym("ab")
    assert runs == [(a, 1), (b, 1), (0, 1), (b, 2), (a, 1), (b, 3), (a, 3)]
    assert run_length_encode(sym("abbb$bbbaaa")).pairs() == [(a, 1), (b, 3), (0, 1), (b, 3), (a, 3)]
    assert run_length_encode(sym("aaaa")).pairs() == [(a, 4)]


def test_run_length_encode_rejects_empty():
    with pytest.raises(ValueError):
        run_length_encode([])


def test_invert_known_and_empty():
    a, b = sym("ab")
    rl = Rlbwt.from_pairs([(a, 1), (b, 1), (0, 1), (b, 2), (a, 1), (b, 3), (a, 3)])
    assert invert_rlbwt(rl) == b"aabbabbabba"
    assert invert_rlbwt(Rlbwt.from_pairs([(0, 1)])) == b""


@pytest.mark.parametrize("pairs", [
    [],
    [(5, 2)],
    [(0, 2)],
    [(0, 1), (0, 1)],
    [(5, 1), (5, 1), (0, 1)],
    [(300, 1), (0, 1)],
])
def test_invert_rejects_broken_invariants(pairs):
    with pytest.raises(MalformedRlbwt):
        invert_rlbwt(Rlbwt.from_pairs(pairs))


def test_invert_rejects_non_bwt_cycle():
    # Valid-looking runs whose LF walk closes before visiting every row.
    with pytest.raises(MalformedRlbwt):
        invert_rlbwt(Rlbwt.from_pairs([(0, 1), (2, 1), (3, 1)]))


def test_run_requires_positive_length():
    with pytest.raises(MalformedRlbwt):
        Run(3, 0)


def test_oracle_pipeline_round_trip():
    rng = random.Random(4)
    for _ in range(200):
        data = bytes(rng.randrange(rng.choice([1, 3, 256])) for _ in range(rng.randrange(0, 200)))
        rl = run_length_encode(bwt_naive(sentinelize(data)))
        assert invert_rlbwt(rl) == data
        assert all(x.symbol != y.symbol for x, y in zip(rl.runs, rl.runs[1:]))
        assert rl.total_len == len(data) + 1


def test_show_helper_matches():
    assert show(sym("ab$")) == "ab$"
