"""Dyson's rank, the full rank of 2-marked Durfee symbols, and their
generating functions over Z[w]/(w^t - 1)."""

from .durfee import (
    DurfeeSymbol,
    InvalidSymbolError,
    MarkedDurfeeSymbol2,
    conjugate_2marked,
    enumerate_2marked,
    full_rank,
    full_rank_counts_enumeration,
    validate_2marked,
)
from .genfun import FSeriesRequest, R2, R2_double_sum, R2_lambert, f_class, f_diff, f_series
from .identities import InequalityScan, VerificationReport, run_all, run_check, scan_inequality
from .partitions import (
    G_series,
    Partition,
    Provenance,
    RankTable,
    enumerate_partitions,
    g_class,
    g_diff,
    g_series,
    rank,
    rank_counts_enumeration,
    rank_counts_genfun,
    rank_genfun_durfee,
)
from .ring import GroupRingElement
from .series import TruncatedSeries

__all__ = [
    "DurfeeSymbol",
    "FSeriesRequest",
    "G_series",
    "GroupRingElement",
    "InequalityScan",
    "InvalidSymbolError",
    "MarkedDurfeeSymbol2",
    "Partition",
    "Provenance",
    "R2",
    "R2_double_sum",
    "R2_lambert",
    "RankTable",
    "TruncatedSeries",
    "VerificationReport",
    "conjugate_2marked",
    "enumerate_2marked",
    "enumerate_partitions",
    "f_class",
    "f_diff",
    "f_series",
    "full_rank",
    "full_rank_counts_enumeration",
    "g_class",
    "g_diff",
    "g_series",
    "rank",
    "rank_counts_enumeration",
    "rank_counts_genfun",
    "rank_genfun_durfee",
    "run_all",
    "run_check",
    "scan_inequality",
    "validate_2marked",
]
