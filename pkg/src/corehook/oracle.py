"""Brute-force ground truth for the closed forms.

Nothing here imports :mod:`corehook.maxhook` or :mod:`corehook.core_poset`;
the only shared code is the beta-set predicates in :mod:`corehook.partitions`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InfiniteFamilyError
from .partitions import BetaSet, beta_is_d_distinct


@dataclass(frozen=True)
class OracleReport:
    s: int
    t: int
    d: int
    H_true: Optional[int]
    witnesses: list[BetaSet] = field(default_factory=list)
    scanned_up_to: int = 0
    finite: bool = True


def _check_finite(s: int, t: int, d: int) -> None:
    # d = 0 is only finite for coprime pairs
    if math.gcd(s, t) > max(d, 1):
        raise InfiniteFamilyError(s, t, d)


def is_valid_core_beta(beta: Iterable[int], s: int, t: int) -> bool:
    """Every ``x >= u`` (``u`` in ``{s, t}``) has ``x - u`` positive and in the set."""
    beta = frozenset(beta)
    return all(x - u > 0 and x - u in beta for x in beta for u in (s, t) if x >= u)


def _representable(x: int, s: int, t: int) -> bool:
    while x >= 0:
        if x % t == 0:
            return True
        x -= s
    return False


def _down_set_if_distinct(x: int, s: int, t: int, d: int) -> Optional[frozenset[int]]:
    """Positive down-set of ``x``, or None as soon as two members are within ``d``."""
    seen: set[int] = set()
    stack = [x]
    while stack:
        y = stack.pop()
        if y in seen:
            continue
        if any(y + j in seen or y - j in seen for j in range(1, d + 1)):
            return None
        seen.add(y)
        stack.extend(z for z in (y - s, y - t) if z > 0)
    return frozenset(seen)


def oracle_max_hook(s: int, t: int, d: int) -> OracleReport:
    """Scan ``x`` down from ``s*t``; the first down-set that is a d-distinct core wins.

    A d-distinct core with largest beta-element ``x`` contains the whole
    positive down-set of ``x``, so that down-set passing is both necessary and
    sufficient for ``x`` to be attained.
    """
    if not 1 <= s < t:
        raise ValueError(f"need 1 <= s < t, got s={s}, t={t}")
    _check_finite(s, t, d)
    cap = s * t
    for x in range(cap, 0, -1):
        if _representable(x, s, t):
            continue
        beta = _down_set_if_distinct(x, s, t, d)
        if beta is None or not is_valid_core_beta(beta, s, t):
            continue
        assert beta_is_d_distinct(beta, d)
        # sanity: the maximum should sit well below the scan cap
        assert 10 * x <= 9 * cap, f"maximum {x} lies in the top tenth of [1, {cap}]"
        return OracleReport(s, t, d, x, [beta], cap)
    return OracleReport(s, t, d, None, [], cap)


def enumerate_d_distinct_cores(s: int, t: int, d: int) -> list[BetaSet]:
    """Every d-distinct (s, t)-core beta-set, the empty one included.

    Sets grow by appending a new largest element whose lower covers are
    already present, so each set is produced exactly once. Output is sorted
    by the descending element lists.
    """
    if not 1 <= s < t:
        raise ValueError(f"need 1 <= s < t, got s={s}, t={t}")
    _check_finite(s, t, d)
    candidates = [x for x in range(1, s * t + 1) if not _representable(x, s, t)]
    found: list[BetaSet] = []

    def extend(current: frozenset[int], top: int, start: int) -> None:
        found.append(current)
        for idx in range(start, len(candidates)):
            y = candidates[idx]
            if current and y - top <= d:
                continue
            if all(y < u or y - u in current for u in (s, t)):
                extend(current | {y}, y, idx + 1)

    extend(frozenset(), 0, 0)
    return sorted(found, key=lambda b: sorted(b, reverse=True))


def count_core_ideals(s: int, t: int) -> int:
    """Number of (s, t)-cores, counted by enumerating order ideals of the gaps."""
    if math.gcd(s, t) != 1:
        raise ValueError(f"s={s} and t={t} are not coprime")
    if s > t:
        s, t = t, s
    return len(enumerate_d_distinct_cores(s, t, 0))


def anderson_count(s: int, t: int) -> int:
    return math.comb(s + t, s) // (s + t)
