"""Brute-force reference implementations.

Everything here is deliberately simple and independent of the engine; it
exists so tests can compare against a ground truth.
"""

from __future__ import annotations

from typing import Sequence

from .text import SENTINEL


def suffix_order(text: Sequence[int]) -> list[int]:
    """Start positions (0-based) of the suffixes of ``text`` in sorted order.

    ``text`` must end with the unique sentinel, which makes suffix order and
    rotation order agree, so prefix doubling over rotations is exact.
    """
    n = len(text)
    rank = list(text)
    order = list(range(n))
    width = 1
    while True:
        key = [(rank[i], rank[(i + width) % n]) for i in range(n)]
        order.sort(key=key.__getitem__)
        new_rank = [0] * n
        for prev, cur in zip(order, order[1:]):
            new_rank[cur] = new_rank[prev] + (key[cur] != key[prev])
        rank = new_rank
        if rank[order[-1]] == n - 1 or width >= n:
            return order
        width *= 2


def bwt_naive(text: Sequence[int]) -> list[int]:
    if not text or text[-1] != SENTINEL or SENTINEL in text[:-1]:
        raise ValueError("text must contain exactly one trailing sentinel")
    return [text[i - 1] for i in suffix_order(text)]


def lf_naive(bwt: Sequence[int]) -> list[int]:
    """LF as a 1-based map: ``result[i-1] = LF(i)``."""
    counts: dict[int, int] = {}
    for sym in bwt:
        counts[sym] = counts.get(sym, 0) + 1
    smaller: dict[int, int] = {}
    acc = 0
    for sym in sorted(counts):
        smaller[sym] = acc
        acc += counts[sym]
    seen: dict[int, int] = {}
    out = []
    for sym in bwt:
        seen[sym] = seen.get(sym, 0) + 1
        out.append(smaller[sym] + seen[sym])
    return out


def extend_bwt_naive(bwt: Sequence[int], c: int) -> tuple[list[int], int, int]:
    """Left-extend the text behind ``bwt`` by ``c``.

    Returns ``(new_bwt, rep, ins)`` with 1-based ``rep`` (old sentinel row)
    and ``ins`` (row of the sentinel in the new BWT).
    """
    if c == SENTINEL:
        raise ValueError("cannot extend by the sentinel")
    rep = bwt.index(SENTINEL) + 1
    occ_less = sum(1 for s in bwt if s < c)
    rank = sum(1 for s in bwt[:rep] if s == c)
    ins = occ_less + rank + 1
    out = list(bwt)
    out[rep - 1] = c
    out.insert(ins - 1, SENTINEL)
    return out, rep, ins
