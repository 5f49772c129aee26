"""Online builder: prepend characters right to left, then read off the runs."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .balance import balance
from .errors import CorruptState
from .graph import MIN_ALPHA, LfIntervalGraph
from .grouped import DEFAULT_GROUP_SIZE
from .text import SENTINEL, Rlbwt, run_length_encode
from .update import INITIAL_OUTCOME, UpdateOutcome, dispatch
from .oracle import extend_bwt_naive


@dataclass(frozen=True)
class BuildStats:
    """Counters of one build.

    ``n`` is the number of input bytes; the text with its sentinel has
    ``n + 1`` symbols, so exactly ``n`` prepend steps run.
    """

    n: int
    r: int
    k: int
    k_slow: int
    k_fast: int
    k_split: int
    alpha: int

    def violations(self) -> list[str]:
        out = []
        if self.k > self.r + self.k_split:
            out.append(f"k={self.k} exceeds r + k_split = {self.r + self.k_split}")
        denominator = -(-self.alpha // 2) - 7
        if self.k_split * denominator > 2 * self.r:
            out.append(f"k_split={self.k_split} exceeds 2r/{denominator}")
        if self.k_slow + self.k_fast != self.n:
            out.append(f"k_slow + k_fast = {self.k_slow + self.k_fast} but {self.n} steps ran")
        if self.k_slow > self.r:
            out.append(f"k_slow={self.k_slow} exceeds r={self.r}")
        return out

    def as_dict(self) -> dict:
        return asdict(self)


class RcompBuilder:
    """Stateful right-to-left builder.

    With ``validate_steps`` the graph is checked after every update and
    after every balancing pass, against an oracle BWT chain kept alongside.
    This is quadratic and meant for tests.
    """

    def __init__(self, alpha: int = MIN_ALPHA, backend: str = "plain",
                 group_size: int = DEFAULT_GROUP_SIZE, validate_steps: bool = False) -> None:
        self.graph = LfIntervalGraph(alpha, backend, group_size)
        self.prev_outcome: UpdateOutcome = INITIAL_OUTCOME
        self.n = 0
        self.k_slow = 0
        self.k_fast = 0
        self.k_split = 0
        self.validate_steps = validate_steps
        self._shadow: Optional[list[int]] = [SENTINEL] if validate_steps else None

    @property
    def alpha(self) -> int:
        return self.graph.alpha

    def prepend(self, c: int) -> UpdateOutcome:
        outcome = dispatch(self.graph, c, self.prev_outcome)
        if outcome.used_fast:
            self.k_fast += 1
        else:
            self.k_slow += 1
        if self._shadow is not None:
            self._shadow = extend_bwt_naive(self._shadow, c)[0]
            self._check("update")
        self.k_split += balance(self.graph)
        if self._shadow is not None:
            self._check("balanced")
        self.prev_outcome = outcome
        self.n += 1
        return outcome

    def extend(self, data: bytes) -> None:
        """Prepend ``data`` so that the text becomes ``data + previous``."""
        for byte in reversed(data):
            self.prepend(byte + 1)

    def _check(self, phase: str) -> None:
        report = self.graph.validate(self._shadow, phase=phase)
        if not report.ok:
            raise CorruptState(f"validation failed after {phase}: {report.problems[:5]}")

    def finish(self) -> tuple[Rlbwt, BuildStats]:
        """Merge equal-character neighbours into maximal runs."""
        pieces = self.graph.u_labels()
        merged: list[list[int]] = []
        for char, length in pieces:
            if merged and merged[-1][0] == char:
                merged[-1][1] += length
            else:
                merged.append([char, length])
        rlbwt = Rlbwt.from_pairs(map(tuple, merged))
        stats = BuildStats(
            n=self.n,
            r=rlbwt.r,
            k=len(pieces),
            k_slow=self.k_slow,
            k_fast=self.k_fast,
            k_split=self.k_split,
            alpha=self.alpha,
        )
        problems = stats.violations()
        if problems:
            raise CorruptState("; ".join(problems))
        return rlbwt, stats


def builder_new(alpha: int = MIN_ALPHA, **options) -> RcompBuilder:
    return RcompBuilder(alpha, **options)


def rcomp_build(data: bytes, alpha: int = MIN_ALPHA, backend: str = "plain",
                group_size: int = DEFAULT_GROUP_SIZE, validate_steps: bool = False) -> tuple[Rlbwt, BuildStats]:
    builder = RcompBuilder(alpha, backend, group_size, validate_steps)
    builder.extend(bytes(data))
    return builder.finish()


def reference_rlbwt(data: bytes) -> Rlbwt:
    """Oracle result for comparison: suffix sort, then run-length encode."""
    from .oracle import bwt_naive
    from .text import sentinelize

    return run_length_encode(bwt_naive(sentinelize(data)))
