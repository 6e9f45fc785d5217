"""The gap poset of the numerical semigroup <s, s+k> and its bottom edge.

For coprime ``s`` and ``k`` the positive integers not of the form
``a*s + b*(s+k)`` form a finite poset whose order ideals are exactly the
beta-sets of (s, s+k)-cores. The bottom edge ``E`` (gaps below ``s+k``) is
totally ordered by the covers ``x -> x+s`` and ``x -> x-k``; everything the
maximum-hook formula needs can be read off that chain.

Conventions: ``a % b`` lands in ``[0, b)``, ``[n]`` is ``{1, ..., n}`` and
``[0]`` is empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .errors import DegenerateParametersError

MAX_GENERATOR = 10**6


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class CoreParams:
    """A coprime pair ``(s, t) = (s, s + k)`` with ``s >= 2`` and ``k >= 1``."""

    s: int
    k: int

    def __post_init__(self):
        if self.s < 2:
            raise DegenerateParametersError(f"s must be at least 2, got {self.s}")
        if self.k < 1:
            raise DegenerateParametersError(f"k = t - s must be positive, got {self.k}")
        if self.t > MAX_GENERATOR:
            raise ValueError(f"generators above {MAX_GENERATOR} are not supported")
        if math.gcd(self.s, self.k) != 1:
            raise ValueError(f"s={self.s} and k={self.k} are not coprime")

    @classmethod
    def from_st(cls, s: int, t: int) -> CoreParams:
        return cls(s, t - s)

    @property
    def t(self) -> int:
        return self.s + self.k

    @property
    def s_bar(self) -> int:
        return self.s % self.k

    @property
    def M(self) -> int:
        """Frobenius number, the largest gap."""
        return self.s * self.t - self.s - self.t


def is_representable(x: int, s: int, t: int) -> bool:
    """True iff ``x = a*s + b*t`` for some ``a, b >= 0`` (so 0 is representable)."""
    if x < 0:
        return False
    return any((x - a * s) % t == 0 for a in range(x // s + 1))


@dataclass(frozen=True)
class GapPoset:
    params: CoreParams
    elements: tuple[int, ...]

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(x, y)`` with ``y = x - s`` or ``y = x - t``, both gaps."""
        s, t = self.params.s, self.params.t
        return [(x, x - u) for x in self.elements for u in (s, t) if x - u in self]


def gap_poset(params: CoreParams) -> GapPoset:
    """Sieve the gaps of ``<s, t>`` out of ``[1, M]``."""
    s, t, M = params.s, params.t, params.M
    representable = bytearray(M + 1)
    representable[0] = 1
    for x in range(1, M + 1):
        if (x >= s and representable[x - s]) or (x >= t and representable[x - t]):
            representable[x] = 1
    return GapPoset(params, tuple(x for x in range(1, M + 1) if not representable[x]))


def principal_ideal(x: int, params: CoreParams) -> frozenset[int]:
    """The down-set ``<x> = {x - a*s - b*t > 0}`` of a gap ``x``."""
    s, t = params.s, params.t
    if x <= 0 or is_representable(x, s, t):
        raise ValueError(f"{x} is not a gap of <{s}, {t}>")
    return frozenset(
        y
        for a in range(x // s + 1)
        for y in range(x - a * s, 0, -t)
    )


@dataclass(frozen=True)
class BottomEdge:
    params: CoreParams
    ordered: tuple[int, ...]

    @cached_property
    def position(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.ordered)}

    def __contains__(self, x) -> bool:
        return x in self.position

    def __len__(self) -> int:
        return len(self.ordered)

    def sort(self, xs) -> tuple[int, ...]:
        """Elements of ``xs`` (all in E) listed in the edge order."""
        return tuple(sorted(xs, key=self.position.__getitem__))

    def is_interval(self, xs) -> bool:
        idx = sorted(self.position[x] for x in xs)
        return not idx or idx[-1] - idx[0] == len(idx) - 1


def bottom_edge(params: CoreParams) -> BottomEdge:
    """Walk the bottom edge from its unique least element up to ``k``.

    The successor of ``x`` is ``x + s`` when ``x < k`` and ``x - k`` when
    ``x > k``. The walk must visit every element of E exactly once; anything
    else means the order is not a chain and raises AssertionError.
    """
    s, k, t = params.s, params.k, params.t
    members = {x for x in range(1, t) if not is_representable(x, s, t)}
    starts = [x for x in members if x - s not in members and x + k not in members]
    assert len(starts) == 1, f"bottom edge has {len(starts)} least elements: {starts}"
    chain = [starts[0]]
    while chain[-1] != k:
        x = chain[-1]
        nxt = x + s if x < k else x - k
        assert nxt in members, f"successor {nxt} of {x} left the bottom edge"
        chain.append(nxt)
        assert len(chain) <= len(members), "bottom edge walk revisits an element"
    assert len(chain) == len(members) and set(chain) == members, (
        f"bottom edge walk covers {len(chain)} of {len(members)} elements"
    )
    return BottomEdge(params, tuple(chain))


def h_of(x: int, params: CoreParams) -> int:
    """``floor(x/s) + 1``, the number of bottom-edge elements below ``x``."""
    return x // params.s + 1


def g_of(x: int, params: CoreParams) -> int:
    """``x mod s``, the first bottom-edge element below ``x`` in edge order."""
    return x - (h_of(x, params) - 1) * params.s


@dataclass(frozen=True)
class Ledge:
    residue: int
    members: frozenset[int] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.members)


def ledge(i: int, params: CoreParams) -> Ledge:
    k = params.k
    if not 0 <= i < k:
        raise ValueError(f"residue {i} outside [0, {k - 1}]")
    s, t = params.s, params.t
    return Ledge(
        i,
        frozenset(x for x in range(1, t) if x % k == i and not is_representable(x, s, t)),
    )


def ledge_length_formula(i: int, params: CoreParams) -> int:
    """Closed-form ledge size; the first matching branch wins."""
    s, k = params.s, params.k
    if not 0 <= i < k:
        raise ValueError(f"residue {i} outside [0, {k - 1}]")
    s_bar = params.s_bar
    q = (s - 1) // k
    special = (ceil_div(k, s) * s) % k
    if i > 0 and i % s == 0:
        return 0
    if i == s_bar:
        return q
    if i == special and k > s:
        return 1
    if i == 0 and k > 1:
        return q + 1
    if s_bar < i and i % s != 0:
        return q + 1
    if 0 < i < s_bar and i != special:
        return q + 2
    raise AssertionError(f"no ledge-length branch matches i={i}, s={s}, k={k}")


def wrap_interval(
    a: int, b: int, k: int, closed_left: bool = False, closed_right: bool = False
) -> frozenset[int]:
    """Residues between ``a`` and ``b`` modulo ``k``, wrapping past ``k - 1``.

    >>> sorted(wrap_interval(3, 0, 5))
    [4]
    """
    if k < 1:
        raise ValueError("modulus must be positive")
    lo, hi = a % k, b % k
    left = range(lo if closed_left else lo + 1, k)
    right = range(0, hi + 1 if closed_right else hi)
    if lo <= hi:
        return frozenset(set(left) & set(right))
    return frozenset(left) | frozenset(right)


def s_tilde(params: CoreParams, d: int) -> int:
    """``min((l * s_bar^-1) mod k)`` over ``0 < |l| <= d``; defined for ``1 <= d < k``."""
    k = params.k
    if k == 1:
        raise ValueError("s_tilde is undefined for k = 1")
    if not 1 <= d < k:
        raise ValueError(f"s_tilde needs 1 <= d < k, got d={d}, k={k}")
    inv = pow(params.s_bar, -1, k)
    return min((ell * inv) % k for ell in range(-d, d + 1) if ell != 0)


def stilde_interval(i: int, params: CoreParams, d: int) -> tuple[int, ...]:
    """The residues ``(i, i + s_bar, ..., i + s_bar*(s_tilde - 1))`` mod k."""
    k, s_bar = params.k, params.s_bar
    return tuple((i + s_bar * j) % k for j in range(s_tilde(params, d)))


def stilde_interval_overlap(i: int, params: CoreParams, d: int) -> int:
    """Count of ``I_i`` landing in ``{1, ..., s_bar - 1}``, by enumeration."""
    interval = stilde_interval(i, params, d)
    if 0 in interval and params.s_bar in interval:
        raise ValueError(f"interval starting at {i} contains both 0 and s_bar")
    return sum(1 for r in interval if 1 <= r <= params.s_bar - 1)


def stilde_interval_overlap_formula(i: int, params: CoreParams, d: int) -> int:
    """Closed form for :func:`stilde_interval_overlap`."""
    k, s_bar = params.k, params.s_bar
    prod = s_bar * s_tilde(params, d)
    if i % k in wrap_interval(s_bar - prod, s_bar, k):
        return ceil_div(prod, k)
    assert i % k in wrap_interval(s_bar, s_bar - prod, k, True, True)
    return ceil_div(prod, k) - 1


def max_stilde_overlap_formula(params: CoreParams, d: int) -> int:
    prod = params.s_bar * s_tilde(params, d)
    return ceil_div(prod - 1, params.k)
