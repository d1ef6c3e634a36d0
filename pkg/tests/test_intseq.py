from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, strategies as st

from harmonious.errors import CertificationError, InvalidArgument, UnsupportedLength
from harmonious.intseq import (
    MatchedIntPair,
    build_k,
    build_matched,
    cyclic_sums,
    sigma,
    verify_harmonious_int,
    verify_matched_int,
)

K9 = [10, -10, -3, 4, 2, 0, -2, -4, 3]
K9_PRIME = [10, -4, 2, -3, -10, 4, -2, 3]

supported = st.integers(2, 249).map(lambda i: 2 * i + 1).filter(lambda n: n % 12 != 3)


def test_golden_n9():
    assert build_k(9) == K9
    pair = build_matched(9)
    assert list(pair.k_prime) == K9_PRIME


def test_small_families():
    assert build_k(5) == [2, -2, -1, 0, 1]
    assert list(build_matched(5).k_prime) == [2, -1, -2, 1]
    assert build_k(7) == [4, -4, 2, 1, 0, -1, -2]
    assert verify_matched_int(build_matched(13))


def test_sigma_examples():
    assert [sigma(9, j) for j in (1, 2, 5, 8)] == [0, 7, 1, 8]
    assert [sigma(5, j) for j in range(1, 5)] == [0, 2, 1, 4]
    with pytest.raises(InvalidArgument):
        sigma(9, 9)
    with pytest.raises(InvalidArgument):
        sigma(9, 0)


@pytest.mark.parametrize("n", [1, 3, 4, 15, 27, 10])
def test_unsupported_lengths(n):
    with pytest.raises(UnsupportedLength):
        build_k(n)


def test_verify_harmonious_int():
    assert verify_harmonious_int(K9, 9)
    assert verify_harmonious_int(list(range(9)), 9)
    assert not verify_harmonious_int([0, 0, 1], 3)


def test_verify_matched_int_rejects_reversed():
    assert verify_matched_int(MatchedIntPair(9, tuple(K9), tuple(K9_PRIME)))
    assert not verify_matched_int(MatchedIntPair(9, tuple(K9), tuple(reversed(K9_PRIME))))


@given(supported)
def test_mirror_cancellation(n):
    k = build_k(n)
    assert k[0] + k[1] == 0
    assert all(k[i] + k[n + 1 - i] == 0 for i in range(2, n))
    assert sum(k) == 0


@given(supported.filter(lambda n: n % 36 != 33))
def test_matched_properties(n):
    pair = build_matched(n)
    k, kp = list(pair.k), list(pair.k_prime)
    zero = k.index(0)
    image = [sigma(n, j) for j in range(1, n)]
    assert sorted(image) == sorted(set(range(n)) - {zero})
    assert all(k[i] != 0 for i in image)
    assert Counter(cyclic_sums(k)) == Counter(cyclic_sums(kp)) + Counter([0])


def test_twelve_k_minus_three_family_fails_when_three_divides_k():
    # every entry is congruent to k, -k or 0 mod 3, so 3 | k collapses residues
    n = 33
    k = build_k(n)
    assert all(v % 3 == 0 for v in k)
    assert not verify_harmonious_int(k, n)
    with pytest.raises(CertificationError):
        build_matched(n)
