"""Harmonious integer sequences and their harmonious matchings.

A length-``n`` integer sequence ``k`` is harmonious when its entries and its
cyclic consecutive sums are each pairwise distinct mod ``n``.  It is matched
with ``k'`` (length ``n-1``) when ``k'`` rearranges the nonzero entries of
``k``, shares its first and last entries, and the consecutive sums of ``k``
are exactly ``{0}`` together with the cyclic consecutive sums of ``k'``.

Entries are kept as unreduced integers; reduction happens in the verifiers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import CertificationError, InvalidArgument, UnsupportedLength


@dataclass(frozen=True)
class MatchedIntPair:
    n: int
    k: tuple[int, ...]
    k_prime: tuple[int, ...]


def _check_length(n: int) -> None:
    if not isinstance(n, int) or n < 5 or n % 2 == 0 or n % 12 == 3:
        raise UnsupportedLength(
            f"matched integer sequences are only built for odd n >= 5 with n mod 12 != 3, got {n!r}"
        )


def _family_6k_plus_1(n: int) -> list[int]:
    k = (n - 1) // 6
    out = [4 * k]
    for i in range(1, n):
        low = i <= 3 * k
        if i % 3 == 0:
            v = 4 * i // 3 - 2 * k - 1 if low else 4 * i // 3 - 8 * k - 2
        elif i % 3 == 1:
            v = 4 * (i - 1) // 3 - 4 * k
        else:
            v = 4 * (i + 1) // 3 - 2 if low else 4 * (i + 1) // 3 - 6 * k - 3
        out.append(v)
    return out


def _family_6k_minus_1(n: int) -> list[int]:
    k = (n + 1) // 6
    out = [4 * k - 2]
    for i in range(1, n):
        if i == 3 * k:
            out.append(0)
            continue
        low = i < 3 * k
        if i % 3 == 0:
            v = 8 * i // 3 - 2 * k - 1 if low else 8 * i // 3 - 14 * k + 1
        elif i % 3 == 1:
            v = 8 * (i - 1) // 3 - 4 * k + 2 if low else 8 * (i - 1) // 3 - 10 * k + 3
        else:
            v = 8 * (i + 1) // 3 - 6 * k - 3 if low else 8 * (i + 1) // 3 - 12 * k - 2
        out.append(v)
    return out


def _family_12k_minus_3(n: int) -> list[int]:
    k = (n + 3) // 12
    out = [16 * k - 6]
    for i in range(1, n):
        if i == 6 * k - 1:
            out.append(0)
            continue
        low = i <= 6 * k - 2
        if i % 3 == 0:
            v = 4 * i - 8 * k if low else 4 * i + 6 - 32 * k
        elif i % 3 == 1:
            v = 4 * i + 2 - 16 * k if low else 4 * i + 8 - 40 * k
        else:
            v = 4 * i + 1 - 12 * k if low else 4 * i + 7 - 36 * k
        out.append(v)
    return out


def build_k(n: int) -> list[int]:
    """The closed-form harmonious integer sequence of length ``n``."""
    _check_length(n)
    r = n % 12
    if r in (1, 7):
        return _family_6k_plus_1(n)
    if r in (5, 11):
        return _family_6k_minus_1(n)
    return _family_12k_minus_3(n)


def sigma(n: int, j: int) -> int:
    """Position in ``build_k(n)`` of the ``j``-th term (1-based) of the matched sequence."""
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise InvalidArgument(f"sigma needs an odd n >= 3, got {n!r}")
    if not isinstance(j, int) or not 1 <= j <= n - 1:
        raise InvalidArgument(f"sigma argument must lie in 1..{n - 1}, got {j!r}")
    quarter = (n + 1) // 4
    three_quarters = 3 * (n + 1) // 4
    half = (n + 1) // 2
    if j == 1:
        return 0
    if j <= quarter:
        return n + 2 - 2 * j
    if j < half:
        return n + 1 - 2 * j
    if j < three_quarters:
        return 2 * j - n
    return 2 * j - n + 1


def build_matched(n: int) -> MatchedIntPair:
    k = build_k(n)
    k_prime = [k[sigma(n, j)] for j in range(1, n)]
    pair = MatchedIntPair(n, tuple(k), tuple(k_prime))
    if not verify_matched_int(pair):
        raise CertificationError(f"closed-form matched pair failed verification for n={n}")
    return pair


def cyclic_sums(seq: Sequence[int]) -> list[int]:
    return [seq[i] + seq[(i + 1) % len(seq)] for i in range(len(seq))]


def verify_harmonious_int(k: Sequence[int], n: int) -> bool:
    if n < 1 or len(k) != n:
        return False
    if len({v % n for v in k}) != n:
        return False
    return len({s % n for s in cyclic_sums(k)}) == n


def verify_matched_int(pair: MatchedIntPair) -> bool:
    n, k, kp = pair.n, list(pair.k), list(pair.k_prime)
    if len(k) != n or len(kp) != n - 1 or n < 2:
        return False
    if not verify_harmonious_int(k, n):
        return False
    if k.count(0) != 1:
        return False
    if Counter(kp) != Counter(v for v in k if v != 0):
        return False
    if k[0] != kp[0] or k[-1] != kp[-1]:
        return False
    if sum(k) != 0:
        return False
    return set(cyclic_sums(k)) == {0} | set(cyclic_sums(kp))


def format_ints(seq: Sequence[int]) -> str:
    return ",".join(str(v) for v in seq)
