"""Predicates certifying harmonious, R-harmonious and matched group sequences.

Every ``check_*`` function returns ``None`` when the sequence passes and a
short diagnostic naming the first violated condition otherwise; the ``is_*``
wrappers turn that into a boolean.  Products are always taken left to right
and never assume commutativity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidArgument
from .groups import FiniteGroup


@dataclass(frozen=True)
class GroupSequence:
    group: FiniteGroup
    items: tuple[int, ...]

    def __post_init__(self) -> None:
        for a in self.items:
            if not 0 <= a < self.group.order:
                raise InvalidArgument(f"element index {a} out of range")

    def names(self) -> list[str]:
        return [self.group.names[a] for a in self.items]


@dataclass(frozen=True)
class MatchedGroupPair:
    """A harmonious sequence and an R-harmonious sequence in the same group."""

    group: FiniteGroup
    h_seq: tuple[int, ...]
    r_seq: tuple[int, ...]


def consecutive_products(G: FiniteGroup, seq: Sequence[int]) -> list[int]:
    """``seq[i]·seq[i+1]`` for every i, wrapping ``seq[-1]·seq[0]`` at the end."""
    if len(seq) == 0:
        raise InvalidArgument("consecutive products of an empty sequence")
    T = G.table
    n = len(seq)
    return [T[seq[i]][seq[(i + 1) % n]] for i in range(n)]


def _first_repeat(G: FiniteGroup, items: Sequence[int], allowed: set[int] | None) -> tuple[int, int] | None:
    # returns (position, element) of the first duplicate or disallowed entry
    seen = bytearray(G.order)
    for pos, a in enumerate(items):
        if not 0 <= a < G.order or seen[a] or (allowed is not None and a not in allowed):
            return pos, a
        seen[a] = 1
    return None


def _check_perm(G: FiniteGroup, seq: Sequence[int], include_identity: bool) -> str | None:
    n = G.order if include_identity else G.order - 1
    if len(seq) != n:
        return f"wrong length: expected {n}, got {len(seq)}"
    if n == 0:
        return None
    allowed = None if include_identity else set(range(1, G.order))
    bad = _first_repeat(G, seq, allowed)
    if bad is not None:
        pos, a = bad
        label = G.names[a] if 0 <= a < G.order else f"#{a}"
        if not include_identity and a == 0:
            return f"identity at position {pos}"
        return f"element repeated at position {pos}: {label}"
    prods = consecutive_products(G, seq)
    bad = _first_repeat(G, prods, allowed)
    if bad is not None:
        pos, a = bad
        if not include_identity and a == 0:
            return f"consecutive product is the identity at position {pos}"
        return f"consecutive product repeated at position {pos}: {G.names[a]}"
    return None


def check_harmonious(G: FiniteGroup, seq: Sequence[int]) -> str | None:
    return _check_perm(G, seq, include_identity=True)


def check_r_harmonious(G: FiniteGroup, seq: Sequence[int]) -> str | None:
    if G.order < 2:
        return "trivial group has no non-identity elements"
    return _check_perm(G, seq, include_identity=False)


def check_symmetric_harmonious(G: FiniteGroup, seq: Sequence[int]) -> str | None:
    reason = check_harmonious(G, seq)
    if reason:
        return reason
    if seq[0] != 0:
        return "first term is not the identity"
    m = len(seq)
    for i in range(1, m):
        if G.table[seq[i]][seq[m - i]] != 0:
            return f"terms at positions {i} and {m - i} are not mutually inverse"
    return None


def check_matched_pair(G: FiniteGroup, h_seq: Sequence[int], r_seq: Sequence[int]) -> str | None:
    reason = check_harmonious(G, h_seq)
    if reason:
        return f"harmonious sequence: {reason}"
    reason = check_r_harmonious(G, r_seq)
    if reason:
        return f"R-harmonious sequence: {reason}"
    if h_seq[0] != r_seq[0]:
        return "first terms differ"
    if h_seq[-1] != r_seq[-1]:
        return "last terms differ"
    if G.product(h_seq) != 0:
        return "product of the harmonious sequence is not the identity"
    if G.product(r_seq) != 0:
        return "product of the R-harmonious sequence is not the identity"
    return None


def is_harmonious(G: FiniteGroup, seq: Sequence[int]) -> bool:
    return check_harmonious(G, seq) is None


def is_r_harmonious(G: FiniteGroup, seq: Sequence[int]) -> bool:
    return check_r_harmonious(G, seq) is None


def is_symmetric_harmonious(G: FiniteGroup, seq: Sequence[int]) -> bool:
    return check_symmetric_harmonious(G, seq) is None


def is_matched_pair(G: FiniteGroup, h_seq: Sequence[int], r_seq: Sequence[int]) -> bool:
    return check_matched_pair(G, h_seq, r_seq) is None
