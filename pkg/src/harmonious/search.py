"""Backtracking oracle for harmonious-type sequences in small groups.

The search places elements left to right, tracking used elements and used
consecutive products in byte masks, and visits children in ascending index
order so that witnesses are reproducible.  A node is one accepted placement.
``NotExists`` is reported only after the pruned tree has been exhausted
without crossing the node budget.

Rotations preserve the cyclic predicates, so harmonious searches start with
the identity and R-harmonious searches start with element 1.  No other
symmetry is factored out.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CertificationError, InvalidArgument
from .groups import FiniteGroup
from .verify import (
    check_harmonious,
    check_matched_pair,
    check_r_harmonious,
    check_symmetric_harmonious,
)

DEFAULT_BUDGET = 10_000_000
MAX_CERTIFIED_ORDER = 16


class Status(enum.Enum):
    FOUND = "Found"
    NOT_EXISTS = "NotExists"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    nodes_explored: int
    budget: int
    sequence: tuple[int, ...] | None = None
    sequence_r: tuple[int, ...] | None = None

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def to_json(self, G: FiniteGroup) -> dict:
        out: dict = {
            "status": self.status.value,
            "nodes_explored": self.nodes_explored,
            "budget": self.budget,
        }
        if self.sequence is not None:
            out["sequence"] = [G.names[a] for a in self.sequence]
        if self.sequence_r is not None:
            out["sequence_r"] = [G.names[a] for a in self.sequence_r]
        return out


class _OutOfBudget(Exception):
    pass


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int):
        self.nodes = 0
        self.budget = budget

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget


def _cyclic_paths(
    G: FiniteGroup,
    length: int,
    prefix: Sequence[int],
    counter: _Counter,
    *,
    with_identity: bool,
    last: int | None = None,
    unit_product: bool = False,
) -> Iterator[list[int]]:
    """Yield every sequence of ``length`` distinct elements starting with ``prefix``
    whose cyclic consecutive products are distinct (and avoid the identity when
    ``with_identity`` is false)."""
    T, inv_ = G.table, G.inverse
    used = bytearray(G.order)
    used_prod = bytearray(G.order)
    if not with_identity:
        used[0] = 1
        used_prod[0] = 1
    seq: list[int] = []
    prefix_prod = 0
    for i, a in enumerate(prefix):
        if used[a]:
            return
        if i:
            p = T[seq[-1]][a]
            if used_prod[p]:
                return
            used_prod[p] = 1
        used[a] = 1
        seq.append(a)
        prefix_prod = T[prefix_prod][a]
    if not seq:
        raise InvalidArgument("search needs a non-empty prefix")
    first = seq[0]
    if last is not None and len(seq) < length and used[last]:
        return
    candidates = range(G.order)

    def extend(prod_so_far: int) -> Iterator[list[int]]:
        pos = len(seq)
        if pos == length:
            wrap = T[seq[-1]][first]
            if used_prod[wrap]:
                return
            if unit_product and prod_so_far != 0:
                return
            yield list(seq)
            return
        prev = seq[-1]
        if pos == length - 2 and unit_product and last is not None:
            # prod·c·last = 1 forces c
            choices: Sequence[int] = (T[inv_[prod_so_far]][inv_[last]],)
        elif pos == length - 1 and (unit_product or last is not None):
            if unit_product:
                choices = (inv_[prod_so_far],)
                if last is not None and choices[0] != last:
                    return
            else:
                choices = (last,)  # type: ignore[assignment]
        else:
            choices = candidates
        row = T[prev]
        for c in choices:
            if used[c] or (last is not None and c == last and pos != length - 1):
                continue
            p = row[c]
            if used_prod[p]:
                continue
            counter.tick()
            used[c] = 1
            used_prod[p] = 1
            seq.append(c)
            yield from extend(T[prod_so_far][c])
            seq.pop()
            used_prod[p] = 0
            used[c] = 0

    if len(seq) > length:
        return
    yield from extend(prefix_prod)


def _run_first(gen: Iterator[list[int]]) -> list[int] | None:
    for sol in gen:
        return sol
    return None


def _certify(reason: str | None, what: str) -> None:
    if reason is not None:
        raise CertificationError(f"search produced an invalid {what}: {reason}")


def _search_path(
    G: FiniteGroup, budget: int, *, with_identity: bool, prefix: Sequence[int]
) -> SearchOutcome:
    length = G.order if with_identity else G.order - 1
    counter = _Counter(budget)
    try:
        sol = _run_first(_cyclic_paths(G, length, prefix, counter, with_identity=with_identity))
    except _OutOfBudget:
        return SearchOutcome(Status.BUDGET_EXCEEDED, counter.nodes, budget)
    if sol is None:
        return SearchOutcome(Status.NOT_EXISTS, counter.nodes, budget)
    check = check_harmonious if with_identity else check_r_harmonious
    _certify(check(G, sol), "sequence")
    return SearchOutcome(Status.FOUND, counter.nodes, budget, tuple(sol))


def _branch_job(args: tuple) -> SearchOutcome:
    G, budget, with_identity, prefix = args
    return _search_path(G, budget, with_identity=with_identity, prefix=prefix)


def _parallel(G: FiniteGroup, budget: int, with_identity: bool, first: int, workers: int) -> SearchOutcome:
    seconds = [c for c in range(G.order) if c != first and (with_identity or c != 0)]
    jobs = [(G, budget, with_identity, (first, c)) for c in seconds]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_branch_job, jobs))
    total = sum(r.nodes_explored for r in results)
    for r in results:
        if r.found:
            return SearchOutcome(Status.FOUND, total, budget, r.sequence)
    if total > budget or any(r.status is Status.BUDGET_EXCEEDED for r in results):
        return SearchOutcome(Status.BUDGET_EXCEEDED, total, budget)
    return SearchOutcome(Status.NOT_EXISTS, total, budget)


def search_r_harmonious(G: FiniteGroup, budget: int = DEFAULT_BUDGET, *, workers: int = 1) -> SearchOutcome:
    if G.order < 2:
        raise InvalidArgument("R-harmonious search needs a group of order at least 2")
    if workers > 1 and G.order > 2:
        return _parallel(G, budget, False, 1, workers)
    return _search_path(G, budget, with_identity=False, prefix=(1,))


def search_harmonious(G: FiniteGroup, budget: int = DEFAULT_BUDGET, *, workers: int = 1) -> SearchOutcome:
    if workers > 1 and G.order > 2:
        return _parallel(G, budget, True, 0, workers)
    return _search_path(G, budget, with_identity=True, prefix=(0,))


def search_symmetric_harmonious(G: FiniteGroup, budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Place ``h_i`` and ``h_{m-i} = h_i^{-1}`` together; the middle product is forced to 1."""
    m = G.order
    if m % 2 == 0:
        raise InvalidArgument("symmetric harmonious sequences need odd order")
    T, inv_ = G.table, G.inverse
    half = (m - 1) // 2
    used = bytearray(m)
    used_prod = bytearray(m)
    used[0] = used_prod[0] = 1
    chosen = [0]
    counter = _Counter(budget)

    def place() -> bool:
        if len(chosen) == half + 1:
            return True
        row = T[chosen[-1]]
        for c in range(1, m):
            if used[c]:
                continue
            p = row[c]
            if used_prod[p]:
                continue
            counter.tick()
            ci, pi = inv_[c], inv_[p]
            used[c] = used[ci] = used_prod[p] = used_prod[pi] = 1
            chosen.append(c)
            if place():
                return True
            chosen.pop()
            used[c] = used[ci] = used_prod[p] = used_prod[pi] = 0
        return False

    try:
        ok = place()
    except _OutOfBudget:
        return SearchOutcome(Status.BUDGET_EXCEEDED, counter.nodes, budget)
    if not ok:
        return SearchOutcome(Status.NOT_EXISTS, counter.nodes, budget)
    seq = chosen + [inv_[a] for a in reversed(chosen[1:])]
    _certify(check_symmetric_harmonious(G, seq), "symmetric harmonious sequence")
    return SearchOutcome(Status.FOUND, counter.nodes, budget, tuple(seq))


def search_matched(G: FiniteGroup, budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Walk R-harmonious sequences with full product 1 in index order; for each,
    look for a harmonious sequence with the same endpoints and full product 1.

    Harmonious searches are memoized per endpoint pair, so the combined search
    is exhaustive over pairs without repeating work.
    """
    n = G.order
    if n < 2:
        raise InvalidArgument("matched search needs a group of order at least 2")
    counter = _Counter(budget)
    companion: dict[tuple[int, int], list[int] | None] = {}
    try:
        for a in range(1, n):
            for r in _cyclic_paths(G, n - 1, (a,), counter, with_identity=False, unit_product=True):
                b = r[-1]
                if (a, b) not in companion:
                    companion[a, b] = _run_first(
                        _cyclic_paths(G, n, (a,), counter, with_identity=True, last=b, unit_product=True)
                    )
                h = companion[a, b]
                if h is None:
                    continue
                _certify(check_matched_pair(G, h, r), "matched pair")
                return SearchOutcome(Status.FOUND, counter.nodes, budget, tuple(h), tuple(r))
    except _OutOfBudget:
        return SearchOutcome(Status.BUDGET_EXCEEDED, counter.nodes, budget)
    return SearchOutcome(Status.NOT_EXISTS, counter.nodes, budget)
