import pytest

from rcomp import MalformedFile, Rlbwt, RlbwtFile, parse, rcomp_build, serialize
from rcomp.fileformat import FLAG_GROUPED, MAGIC


def sample():
    rlbwt, stats = rcomp_build(b"aabbabbabba")
    return RlbwtFile(rlbwt, stats.n, 16, FLAG_GROUPED)


def test_round_trip():
    doc = sample()
    blob = serialize(doc)
    assert blob.startswith(MAGIC)
    back = parse(blob)
    assert back == doc and back.grouped


def test_large_values_use_varints():
    doc = RlbwtFile(Rlbwt.from_pairs([(2, 100000), (0, 1)]), 100000, 300)
    assert parse(serialize(doc)) == doc


@pytest.mark.parametrize("mutate", [
    lambda b: b[:3],
    lambda b: b"XXXX" + b[4:],
    lambda b: b[:4] + b"\x09" + b[5:],
    lambda b: b[:-1],
    lambda b: b + b"\x00",
    lambda b: b[:8] + b"\x05" + b[9:],
])
def test_malformed_rejected(mutate):
    with pytest.raises(MalformedFile):
        parse(mutate(serialize(sample())))


def test_invalid_runs_rejected():
    two_sentinels = RlbwtFile(Rlbwt.from_pairs([(0, 1), (2, 1), (0, 1)]), 2)
    with pytest.raises(MalformedFile):
        parse(serialize(two_sentinels))
    adjacent_equal = serialize(RlbwtFile(Rlbwt.from_pairs([(2, 1), (3, 1), (0, 1)]), 2))
    # rewrite the second symbol to equal the first
    idx = adjacent_equal.index(bytes([3, 1, 0, 1]))
    broken = adjacent_equal[:idx] + bytes([2]) + adjacent_equal[idx + 1:]
    with pytest.raises(MalformedFile):
        parse(broken)


def test_huge_run_count_rejected():
    blob = MAGIC + bytes([1, 0, 16, 0]) + bytes([5]) + bytes([0xFF, 0xFF, 0x7F])
    with pytest.raises(MalformedFile):
        parse(blob)
