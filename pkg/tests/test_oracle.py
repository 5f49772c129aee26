import random

import pytest

from rcomp import bwt_naive, extend_bwt_naive, lf_naive, sentinelize, suffix_order

from conftest import show, sym


def test_bwt_of_reference_texts():
    assert show(bwt_naive(sentinelize(b"aabbabbabba"))) == "ab$bbabbbaaa"
    assert show(bwt_naive(sentinelize(b"abbabbabba"))) == "abbb$bbbaaa"
    assert bwt_naive([0]) == [0]


def test_bwt_requires_single_trailing_sentinel():
    with pytest.raises(ValueError):
        bwt_naive([2, 3])
    with pytest.raises(ValueError):
        bwt_naive([2, 0, 3, 0])


def test_lf_values():
    lf = lf_naive(sym("ab$bbabbbaaa"))
    assert lf[7 - 1] == 10
    assert lf[6 - 1] == 3


def test_lf_on_unary_text_is_cyclic_shift():
    bwt = bwt_naive(sentinelize(b"aaaaa"))
    assert show(bwt) == "aaaaa$"
    assert lf_naive(bwt) == [2, 3, 4, 5, 6, 1]


def test_extend_examples():
    out, rep, ins = extend_bwt_naive(sym("abbb$bbbaaa"), sym("a")[0])
    assert (rep, ins) == (5, 3)
    assert show(out) == "ab$bbabbbaaa"
    out, rep, ins = extend_bwt_naive([0], sym("a")[0])
    assert (show(out), rep, ins) == ("a$", 1, 2)


def test_extend_rejects_sentinel():
    with pytest.raises(ValueError):
        extend_bwt_naive([0], 0)


def test_suffix_order_matches_slice_sort():
    rng = random.Random(9)
    for _ in range(300):
        text = sentinelize(bytes(rng.randrange(3) for _ in range(rng.randrange(40))))
        assert suffix_order(text) == sorted(range(len(text)), key=lambda i: text[i:])


def test_extend_chain_matches_direct_bwt():
    rng = random.Random(10)
    for _ in range(60):
        data = bytes(rng.randrange(4) for _ in range(rng.randrange(1, 60)))
        bwt = [0]
        for i in range(len(data) - 1, -1, -1):
            bwt = extend_bwt_naive(bwt, data[i] + 1)[0]
            assert bwt == bwt_naive(sentinelize(data[i:]))


def test_lf_is_fixed_point_free_bijection():
    rng = random.Random(11)
    for _ in range(100):
        data = bytes(rng.randrange(3) for _ in range(rng.randrange(1, 50)))
        lf = lf_naive(bwt_naive(sentinelize(data)))
        assert sorted(lf) == list(range(1, len(lf) + 1))
        assert all(x != i for i, x in enumerate(lf, start=1))
