"""Integer partitions, hook lengths, beta-sets and core predicates.

Partitions are plain tuples of positive ints in weakly decreasing order and
beta-sets are frozensets of positive ints. The empty partition ``()`` maps to
the empty beta-set; beta-sets never contain 0.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

Partition = tuple[int, ...]
BetaSet = frozenset[int]
HookGrid = tuple[tuple[int, ...], ...]


def check_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple.

    Raises ValueError if a part is < 1 or the sequence increases somewhere.
    """
    parts = tuple(int(p) for p in parts)
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError(f"part {p} at index {i} is not positive")
        if i and parts[i - 1] < p:
            raise ValueError(f"parts are not weakly decreasing: {parts}")
    return parts


def conjugate(parts: Sequence[int]) -> Partition:
    parts = check_partition(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def hook_length_grid(parts: Sequence[int]) -> HookGrid:
    """Hook length of every cell of the Young diagram, row by row.

    >>> hook_length_grid((3, 1))
    ((4, 2, 1), (1,))
    """
    parts = check_partition(parts)
    cols = conjugate(parts)
    return tuple(
        tuple((row_len - j - 1) + (cols[j] - i - 1) + 1 for j in range(row_len))
        for i, row_len in enumerate(parts)
    )


def beta_set(parts: Sequence[int]) -> BetaSet:
    """First-column hook lengths ``{parts[i] + n - 1 - i}``."""
    parts = check_partition(parts)
    n = len(parts)
    return frozenset(p + n - 1 - i for i, p in enumerate(parts))


def check_beta_set(elements: Iterable[int]) -> BetaSet:
    elements = [int(x) for x in elements]
    if len(set(elements)) != len(elements):
        raise ValueError(f"beta-set has repeated elements: {sorted(elements)}")
    if any(x < 1 for x in elements):
        raise ValueError(f"beta-set elements must be positive: {sorted(elements)}")
    return frozenset(elements)


def partition_from_beta(elements: Iterable[int]) -> Partition:
    """Inverse of :func:`beta_set`.

    >>> partition_from_beta({11, 8, 4, 1})
    (8, 6, 3, 1)
    """
    xs = sorted(check_beta_set(elements), reverse=True)
    n = len(xs)
    return tuple(x - (n - 1 - i) for i, x in enumerate(xs))


def max_hook(parts: Sequence[int]) -> Optional[int]:
    """Largest hook length, ``parts[0] + n - 1``; None for the empty partition."""
    parts = check_partition(parts)
    if not parts:
        return None
    return parts[0] + len(parts) - 1


def beta_is_s_core(beta: Iterable[int], s: int) -> bool:
    """Beta-set criterion: every ``x >= s`` has ``x - s`` in the set (and ``x != s``)."""
    beta = frozenset(beta)
    return all(x - s in beta for x in beta if x >= s)


def is_s_core(parts: Sequence[int], s: int) -> bool:
    if s < 1:
        raise ValueError("s must be positive")
    return beta_is_s_core(beta_set(parts), s)


def is_st_core(parts: Sequence[int], s: int, t: int) -> bool:
    return is_s_core(parts, s) and is_s_core(parts, t)


def is_d_distinct(parts: Sequence[int], d: int) -> bool:
    """Consecutive parts differ by at least ``d`` (the last part is unconstrained)."""
    parts = check_partition(parts)
    if d < 0:
        raise ValueError("d must be nonnegative")
    return all(a - b >= d for a, b in zip(parts, parts[1:]))


def min_pairwise_gap(values: Iterable[int]) -> Optional[int]:
    """Smallest difference between two distinct sorted values; None if fewer than two."""
    xs = sorted(set(values))
    if len(xs) < 2:
        return None
    return min(b - a for a, b in zip(xs, xs[1:]))


def beta_is_d_distinct(beta: Iterable[int], d: int) -> bool:
    """All pairs of distinct elements differ by more than ``d``."""
    gap = min_pairwise_gap(beta)
    return gap is None or gap > d
