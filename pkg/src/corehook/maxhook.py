"""Maximum hook length of d-distinct (s,t)-cores, and a witness attaining it.

The coprime value comes from a closed form in ``s``, ``k = t - s``, ``d``,
``s_bar = s mod k`` and ``s_tilde``. Pairs with ``b = gcd(s, t) >= 2`` are
reduced to the coprime pair ``(s/b, t/b)`` with ``d // b`` and scaled back.

The witness is always the inclusion-minimal core with the maximal hook: its
beta-set is the down-set ``{H - a*s - b*t > 0}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core_poset import (
    BottomEdge,
    CoreParams,
    bottom_edge,
    ceil_div,
    is_representable,
    ledge,
    principal_ideal,
    s_tilde,
)
from .errors import DegenerateParametersError, InfiniteFamilyError
from .partitions import (
    BetaSet,
    Partition,
    beta_is_d_distinct,
    is_d_distinct,
    is_st_core,
    max_hook,
    partition_from_beta,
)

# coprime branches
K1_OR_KS_LE_D = "K1_OR_KS_LE_D"
K_LE_D_LT_S = "K_LE_D_LT_S"
B_MINUS_2 = "B_MINUS_2"
B_MINUS_S_MINUS_1 = "B_MINUS_S_MINUS_1"
B_PLUS_K_MINUS_SS_MINUS_1 = "B_PLUS_K_MINUS_SS_MINUS_1"
B_MINUS_1 = "B_MINUS_1"

# gcd >= 2 branches
SCALED_K1_D_LT_S = "SCALED_K1_D_LT_S"
SCALED_K1_D_GE_S = "SCALED_K1_D_GE_S"
SCALED_PLUS_2 = "SCALED_PLUS_2"
SCALED_PLUS_1 = "SCALED_PLUS_1"
SCALED_DIVISIBLE = "SCALED_DIVISIBLE"

COPRIME_TAGS = (
    K1_OR_KS_LE_D,
    K_LE_D_LT_S,
    B_MINUS_2,
    B_MINUS_S_MINUS_1,
    B_PLUS_K_MINUS_SS_MINUS_1,
    B_MINUS_1,
)
SCALED_TAGS = (SCALED_K1_D_LT_S, SCALED_K1_D_GE_S, SCALED_PLUS_2, SCALED_PLUS_1, SCALED_DIVISIBLE)


@dataclass(frozen=True)
class MaxHookResult:
    s: int
    t: int
    d: int
    H: int
    case_tag: str
    witness_beta: BetaSet
    witness: Partition
    B: Optional[int] = None
    s_bar: Optional[int] = None
    s_tilde: Optional[int] = None
    # the coprime sub-result a scaled answer was derived from
    reduced: Optional[MaxHookResult] = None


def downset(x: int, s: int, t: int) -> frozenset[int]:
    """``{x - a*s - b*t > 0}`` for arbitrary (possibly non-coprime) generators."""
    return frozenset(y for a in range(x // s + 1) for y in range(x - a * s, 0, -t))


def _coprime_formula(params: CoreParams, d: int):
    s, k = params.s, params.k
    if k == 1 or (k <= d and s <= d):
        return s - 1, K1_OR_KS_LE_D, None, None, None
    if 1 < k <= d < s:
        return s + k - 1, K_LE_D_LT_S, None, None, None
    # from here on d < k
    s_bar = params.s_bar
    st = s_tilde(params, d)
    prod = s_bar * st
    r = prod % k
    B = (s - 1) // k * (k + s * st) + s * (ceil_div(prod - 1, k) + st - 1) + s_bar
    if r == 1:
        H, tag = B - 2, B_MINUS_2
    elif r <= d:
        H, tag = B - s - 1, B_MINUS_S_MINUS_1
    elif r < k - 1:
        # reduced product; the raw one breaks H = g + (h-1)s once s_bar*s_tilde >= k
        H, tag = B + k - r - 1, B_PLUS_K_MINUS_SS_MINUS_1
    else:
        H, tag = B - 1, B_MINUS_1
    return H, tag, B, s_bar, st


def _check_d(d: int) -> None:
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")


def max_hook_coprime(params: CoreParams, d: int) -> MaxHookResult:
    """Closed-form maximum hook length of a d-distinct (s, s+k)-core."""
    _check_d(d)
    H, tag, B, s_bar, st = _coprime_formula(params, d)
    beta = principal_ideal(H, params)
    return MaxHookResult(
        s=params.s,
        t=params.t,
        d=d,
        H=H,
        case_tag=tag,
        witness_beta=beta,
        witness=partition_from_beta(beta),
        B=B,
        s_bar=s_bar,
        s_tilde=st,
    )


def max_hook_general(s_in: int, t_in: int, d_in: int) -> MaxHookResult:
    """Maximum hook length of a d_in-distinct (s_in, t_in)-core, any gcd.

    Raises InfiniteFamilyError when ``gcd(s_in, t_in) > d_in`` and
    DegenerateParametersError unless ``2 <= s_in < t_in``.

    When ``s_in`` divides ``t_in`` the reduced pair has ``s = 1`` and no
    coprime formula applies; every core is then a single residue below
    ``s_in``, so the answer is ``s_in - 1``.
    """
    _check_d(d_in)
    if s_in < 2 or t_in <= s_in:
        raise DegenerateParametersError(f"need 2 <= s < t, got s={s_in}, t={t_in}")
    b = math.gcd(s_in, t_in)
    if b > d_in:
        raise InfiniteFamilyError(s_in, t_in, d_in)
    if b == 1:
        return max_hook_coprime(CoreParams.from_st(s_in, t_in), d_in)

    d = d_in // b
    assert d >= 1
    if b == s_in:
        H, tag, reduced = s_in - 1, SCALED_DIVISIBLE, None
    else:
        params = CoreParams(s_in // b, (t_in - s_in) // b)
        reduced = max_hook_coprime(params, d)
        s, k = params.s, params.k
        if k == 1:
            plus_two = d < s
            tag = SCALED_K1_D_LT_S if plus_two else SCALED_K1_D_GE_S
        else:
            r = None if d >= k else (reduced.s_bar * reduced.s_tilde) % k
            plus_two = r is not None and (r == 1 or d < r == k - 1)
            tag = SCALED_PLUS_2 if plus_two else SCALED_PLUS_1
        H = b * (reduced.H + (2 if plus_two else 1)) - 1
    beta = downset(H, s_in, t_in)
    return MaxHookResult(
        s=s_in,
        t=t_in,
        d=d_in,
        H=H,
        case_tag=tag,
        witness_beta=beta,
        witness=partition_from_beta(beta),
        reduced=reduced,
    )


@dataclass(frozen=True)
class IntervalIdeal:
    """A run of the bottom edge, listed in edge order, that is an order ideal."""

    edge: BottomEdge
    run: tuple[int, ...]

    @property
    def first(self) -> int:
        return self.run[0]

    def __len__(self) -> int:
        return len(self.run)

    def generator(self) -> int:
        """The unique gap whose down-set meets the edge in exactly this run."""
        return self.run[0] + (len(self.run) - 1) * self.edge.params.s


def _ledge_in_order(i: int, params: CoreParams, edge: BottomEdge) -> list[int]:
    return list(edge.sort(ledge(i % params.k, params).members))


def _primed(members: list[int], s: int) -> list[int]:
    # drop the ledge's element above s (its only non-minimal one)
    return [x for x in members if x < s]


def best_interval_ideal(params: CoreParams, d: int) -> IntervalIdeal:
    """Build the best d-distinct interval ideal ledge by ledge (needs ``d < k``).

    ``s_tilde`` consecutive ledges, each ``s_bar`` residues after the last,
    plus at most one extra element at each end. The result is checked
    against the down-set of the closed-form maximum.
    """
    _check_d(d)
    s, k = params.s, params.k
    if d >= k:
        raise ValueError(f"best_interval_ideal needs d < k, got d={d}, k={k}")
    edge = bottom_edge(params)
    s_bar = params.s_bar
    st = s_tilde(params, d)
    r = (s_bar * st) % k

    if r == 1:
        start = s_bar - 2
    elif r <= d or r == k - 1:
        start = s_bar - 1
    else:
        start = s_bar - s_bar * st - 1
    ledges = [_ledge_in_order(start + j * s_bar, params, edge) for j in range(st)]

    head: list[int] = []
    tail: list[int] = []
    if d < r < k - 1:
        head = _ledge_in_order(start - s_bar, params, edge)[-1:]
    else:
        ledges[0] = _primed(ledges[0], s)
    if r == 1 or d < r:
        tail = _ledge_in_order(start + st * s_bar, params, edge)[:1]
    members = set(head).union(*ledges, tail)

    assert edge.is_interval(members), f"{sorted(members)} is not a run of the bottom edge"
    ideal = IntervalIdeal(edge, edge.sort(members))
    H = max_hook_coprime(params, d).H
    expected = principal_ideal(H, params) & set(edge.ordered)
    assert members == expected, (
        f"ledge construction {ideal.run} disagrees with <{H}> on the edge {edge.sort(expected)}"
    )
    assert ideal.generator() == H
    return ideal


@dataclass(frozen=True)
class GeneralizedIdeal:
    base: int
    scale: int
    members: frozenset[int]


def generalized_ideal(x: int, s: int, t: int, b: int = 1) -> GeneralizedIdeal:
    """``{x - a1*b*s - a2*b*t >= 0}``; unlike a down-set of gaps, 0 may appear."""
    if x < 0:
        raise ValueError("base must be nonnegative")
    bs, bt = b * s, b * t
    members = frozenset(y for a in range(x // bs + 1) for y in range(x - a * bs, -1, -bt))
    return GeneralizedIdeal(x, b, members)


def witness_core(s_in: int, t_in: int, d_in: int) -> tuple[BetaSet, Partition]:
    """A d_in-distinct (s_in, t_in)-core whose largest hook is the maximum.

    Raises AssertionError if the down-set of the formula's value is not such a
    core, which would mean the formula is wrong for these parameters.
    """
    result = max_hook_general(s_in, t_in, d_in)
    H = result.H
    assert not is_representable(H, s_in, t_in), f"{H} is representable by {s_in}, {t_in}"
    beta = downset(H, s_in, t_in)
    parts = partition_from_beta(beta)
    assert is_st_core(parts, s_in, t_in), f"{parts} is not a ({s_in},{t_in})-core"
    assert is_d_distinct(parts, d_in) and beta_is_d_distinct(beta, d_in)
    assert max_hook(parts) == H
    return beta, parts
