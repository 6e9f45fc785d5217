import math

import pytest

from corehook.errors import InfiniteFamilyError
from corehook.oracle import (
    anderson_count,
    count_core_ideals,
    enumerate_d_distinct_cores,
    is_valid_core_beta,
    oracle_max_hook,
)
from corehook.partitions import beta_is_d_distinct, beta_set, is_st_core, partition_from_beta


def test_valid_core_beta_examples():
    assert is_valid_core_beta({11, 8, 4, 1}, 7, 10)
    assert not is_valid_core_beta({7}, 7, 10)
    assert is_valid_core_beta({5, 1}, 4, 6)
    assert is_valid_core_beta(set(), 3, 5)


@pytest.mark.parametrize("s, t, d, H", [(7, 10, 1, 19), (8, 13, 2, 25), (4, 6, 2, 5), (2, 3, 1, 1)])
def test_oracle_examples(s, t, d, H):
    report = oracle_max_hook(s, t, d)
    assert report.H_true == H
    assert report.scanned_up_to == s * t
    (witness,) = report.witnesses
    assert max(witness) == H
    assert is_valid_core_beta(witness, s, t) and beta_is_d_distinct(witness, d)


def test_oracle_refuses_infinite_family():
    with pytest.raises(InfiniteFamilyError):
        oracle_max_hook(4, 6, 1)
    with pytest.raises(InfiniteFamilyError):
        enumerate_d_distinct_cores(6, 9, 2)
    with pytest.raises(InfiniteFamilyError):
        enumerate_d_distinct_cores(4, 6, 0)


def test_enumeration_examples():
    assert enumerate_d_distinct_cores(2, 3, 1) == [frozenset(), frozenset({1})]
    # gaps of <3, 4> are {1, 2, 5}; {1, 2, 5} is the only other ideal with 5 and has gaps of 1
    assert enumerate_d_distinct_cores(3, 4, 3) == [frozenset(), frozenset({1}), frozenset({2})]
    assert enumerate_d_distinct_cores(4, 6, 2) == [
        frozenset(), frozenset({1}), frozenset({2}), frozenset({3}), frozenset({5, 1})
    ]
    assert len(enumerate_d_distinct_cores(7, 10, 0)) == 1144


def test_enumeration_is_sorted_and_deterministic():
    a = enumerate_d_distinct_cores(5, 8, 1)
    assert a == enumerate_d_distinct_cores(5, 8, 1)
    keys = [sorted(b, reverse=True) for b in a]
    assert keys == sorted(keys) and len(set(map(tuple, keys))) == len(keys)


def _triples(max_st):
    for t in range(3, max_st):
        for s in range(2, t):
            if s * t > max_st:
                continue
            for d in range(1, 7):
                if math.gcd(s, t) <= d:
                    yield s, t, d


@pytest.mark.parametrize("s, t, d", list(_triples(200)))
def test_scan_agrees_with_enumeration(s, t, d):
    cores = enumerate_d_distinct_cores(s, t, d)
    for beta in cores:
        assert is_valid_core_beta(beta, s, t) and beta_is_d_distinct(beta, d)
        assert is_st_core(partition_from_beta(beta), s, t)
        assert beta_set(partition_from_beta(beta)) == beta
    best = max((max(b) for b in cores if b), default=None)
    assert oracle_max_hook(s, t, d).H_true == best


@pytest.mark.parametrize("s, t", [(2, 3), (3, 5), (3, 4), (4, 5), (5, 7), (7, 10), (5, 6), (4, 9)])
def test_anderson_count(s, t):
    assert count_core_ideals(s, t) == math.comb(s + t, s) // (s + t) == anderson_count(s, t)


def test_count_rejects_non_coprime():
    with pytest.raises(ValueError):
        count_core_ideals(4, 6)
