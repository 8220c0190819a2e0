"""Independent ground-truth deciders: grammar recognition, saturation, walk enumeration, balanced walks."""

from realizability.oracle.balanced import BalanceMode, balanced_lengths, balanced_walk_dp
from realizability.oracle.grammar import LabelString, derive_strings, is_realizable_string
from realizability.oracle.saturation import saturate_gap, saturate_gap_all, saturate_pairs, saturate_realizable
from realizability.oracle.walks import WalkBound, enumerate_walk_check, gap_pair_check

__all__ = [
    "BalanceMode",
    "LabelString",
    "WalkBound",
    "balanced_lengths",
    "balanced_walk_dp",
    "derive_strings",
    "enumerate_walk_check",
    "gap_pair_check",
    "is_realizable_string",
    "saturate_gap",
    "saturate_gap_all",
    "saturate_pairs",
    "saturate_realizable",
]
