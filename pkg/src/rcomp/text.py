"""Alphabet handling, run-length encoding and RLBWT decoding.

Internally every byte ``b`` becomes the symbol ``b + 1`` so that ``0`` is
free to serve as the sentinel, which sorts before everything else.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

from .errors import MalformedRlbwt

SENTINEL = 0
MAX_SYMBOL = 256


def sentinelize(data: bytes) -> list[int]:
    """Shift ``data`` into symbol space and append the sentinel."""
    symbols = [b + 1 for b in data]
    symbols.append(SENTINEL)
    return symbols


def symbols_to_bytes(symbols: Iterable[int]) -> bytes:
    """Inverse of the shift applied by :func:`sentinelize` (sentinel dropped)."""
    return bytes(s - 1 for s in symbols if s != SENTINEL)


@dataclass(frozen=True, slots=True)
class Run:
    symbol: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise MalformedRlbwt(f"run length must be positive, got {self.length}")


@dataclass(frozen=True, slots=True)
class Rlbwt:
    """Maximal runs of a BWT over the internal symbol alphabet."""

    runs: tuple[Run, ...]

    @property
    def total_len(self) -> int:
        return sum(run.length for run in self.runs)

    @property
    def r(self) -> int:
        return len(self.runs)

    def pairs(self) -> list[tuple[int, int]]:
        return [(run.symbol, run.length) for run in self.runs]

    def expand(self) -> list[int]:
        out: list[int] = []
        for run in self.runs:
            out.extend([run.symbol] * run.length)
        return out

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Rlbwt":
        return cls(tuple(Run(s, n) for s, n in pairs))

    def check(self) -> None:
        """Raise :class:`MalformedRlbwt` unless the invariants hold."""
        if not self.runs:
            raise MalformedRlbwt("empty run sequence")
        sentinel_runs = [run for run in self.runs if run.symbol == SENTINEL]
        if len(sentinel_runs) != 1 or sentinel_runs[0].length != 1:
            raise MalformedRlbwt("exactly one sentinel run of length 1 is required")
        for run in self.runs:
            if not 0 <= run.symbol <= MAX_SYMBOL:
                raise MalformedRlbwt(f"symbol {run.symbol} out of range")
        for left, right in zip(self.runs, self.runs[1:]):
            if left.symbol == right.symbol:
                raise MalformedRlbwt("adjacent runs share a symbol")


def run_length_encode(symbols: Sequence[int]) -> Rlbwt:
    if not symbols:
        raise ValueError("cannot run-length encode an empty sequence")
    return Rlbwt(tuple(Run(sym, sum(1 for _ in grp)) for sym, grp in groupby(symbols)))


def invert_rlbwt(rlbwt: Rlbwt) -> bytes:
    """Decode an RLBWT back into the original bytes by LF stepping.

    Rows are 0-based here. For each symbol we keep the starting rows of its
    runs and the number of occurrences before each run, so one LF step is a
    binary search over run starts plus a dictionary lookup.
    """
    rlbwt.check()
    runs = rlbwt.runs
    starts: list[int] = []
    row = 0
    for run in runs:
        starts.append(row)
        row += run.length
    n_total = row

    counts: dict[int, int] = {}
    before: list[int] = []  # occurrences of run.symbol preceding this run
    for run in runs:
        before.append(counts.get(run.symbol, 0))
        counts[run.symbol] = counts.get(run.symbol, 0) + run.length
    c_table: dict[int, int] = {}
    acc = 0
    for sym in sorted(counts):
        c_table[sym] = acc
        acc += counts[sym]

    sentinel_row = next(starts[i] for i, run in enumerate(runs) if run.symbol == SENTINEL)
    # Row 0 of F is the sentinel suffix; its L character is the last text char.
    out = bytearray()
    row = 0
    for _ in range(n_total - 1):
        idx = bisect_right(starts, row) - 1
        sym = runs[idx].symbol
        if sym == SENTINEL:
            raise MalformedRlbwt("LF walk reached the sentinel too early")
        out.append(sym - 1)
        row = c_table[sym] + before[idx] + (row - starts[idx])
    if row != sentinel_row:
        raise MalformedRlbwt("LF walk did not close its cycle at the sentinel")
    out.reverse()
    return bytes(out)
