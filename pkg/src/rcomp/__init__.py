"""Online construction of the run-length Burrows-Wheeler transform.

The text is read right to left while a graph over a divided BWT is kept
balanced, so working state stays proportional to the number of runs.
"""

from .balance import SplitPlan, balance, select_split_offset, split_heavy
from .builder import BuildStats, RcompBuilder, builder_new, rcomp_build, reference_rlbwt
from .errors import (
    CorruptState,
    InvalidAlpha,
    MalformedFile,
    MalformedRlbwt,
    NotHeavy,
    NotMember,
    RcompError,
    SentinelInput,
)
from .estimator import RlbwtTransformer
from .fileformat import RlbwtFile, parse, serialize
from .graph import LfIntervalGraph, TreeCondition, ValidationReport
from .oracle import bwt_naive, extend_bwt_naive, lf_naive, suffix_order
from .text import SENTINEL, Rlbwt, Run, invert_rlbwt, run_length_encode, sentinelize
from .update import UpdateOutcome, dispatch, fast_update, satisfies_tree_condition, slow_update

__version__ = "0.1.0"

__all__ = [
    "BuildStats", "CorruptState", "InvalidAlpha", "LfIntervalGraph", "MalformedFile",
    "MalformedRlbwt", "NotHeavy", "NotMember", "RcompBuilder", "RcompError", "Rlbwt",
    "RlbwtFile", "RlbwtTransformer", "Run", "SENTINEL", "SentinelInput", "SplitPlan",
    "TreeCondition", "UpdateOutcome", "ValidationReport", "balance", "builder_new",
    "bwt_naive", "dispatch", "extend_bwt_naive", "fast_update", "invert_rlbwt", "lf_naive",
    "parse", "rcomp_build", "reference_rlbwt", "run_length_encode", "satisfies_tree_condition",
    "select_split_offset", "sentinelize", "serialize", "slow_update", "split_heavy",
    "suffix_order",
]
