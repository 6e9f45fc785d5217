"""Maximum hook length of d-distinct simultaneous core partitions.

Closed forms live in :mod:`corehook.maxhook`; :mod:`corehook.oracle` is an
independent brute-force check of them.
"""

from .core_poset import CoreParams, bottom_edge, gap_poset, principal_ideal
from .errors import DegenerateParametersError, InfiniteFamilyError
from .maxhook import (
    MaxHookResult,
    best_interval_ideal,
    max_hook_coprime,
    max_hook_general,
    witness_core,
)
from .oracle import count_core_ideals, enumerate_d_distinct_cores, oracle_max_hook
from .partitions import beta_set, hook_length_grid, max_hook, partition_from_beta

__all__ = [
    "CoreParams",
    "DegenerateParametersError",
    "InfiniteFamilyError",
    "MaxHookResult",
    "best_interval_ideal",
    "beta_set",
    "bottom_edge",
    "count_core_ideals",
    "enumerate_d_distinct_cores",
    "gap_poset",
    "hook_length_grid",
    "max_hook",
    "max_hook_coprime",
    "max_hook_general",
    "oracle_max_hook",
    "partition_from_beta",
    "principal_ideal",
    "witness_core",
]
