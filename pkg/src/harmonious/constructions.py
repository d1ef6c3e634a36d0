"""Explicit constructions of matched pairs and R-harmonious sequences.

Both extension constructions lay the sequence out as a grid with one column
per element of a transversal.  Row 0 is the top-level sequence (powers of a
coset generator ``x`` for cyclic extensions, a matched pair of the complement
for split extensions) and row ``p >= 1`` holds ``σ_{r-1}^{-1} h_p σ_r`` where
``σ`` is the running product of row 0 and ``h`` a symmetric harmonious
sequence of the odd-order normal subgroup.  Every result is re-verified
before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import (
    BudgetExceeded,
    CertificationError,
    Impossible,
    InvalidArgument,
    NotConstructed,
    UnsupportedLength,
    UnsupportedQuotient,
)
from .golden import dihedral_golden_pair, z3_z7_golden_sequence
from .groups import (
    Dihedral,
    DirectProduct,
    FiniteGroup,
    HallPaige,
    Semidirect,
    Subgroup,
    abelianization,
    find_cyclic_quotient,
    generated_subgroup,
    hall_paige_check,
    is_elementary,
    is_normal,
    make_dihedral,
    quotient,
    subgroup_as_group,
)
from .intseq import build_matched
from .search import DEFAULT_BUDGET, Status, search_matched, search_r_harmonious, search_symmetric_harmonious
from .verify import MatchedGroupPair, check_matched_pair, check_r_harmonious, check_symmetric_harmonious



@dataclass
class StrategyReport:
    strategy: str
    witnesses: dict[str, Any] = field(default_factory=dict)
    certified: bool = True
    rejected: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "strategy": self.strategy,
            "witnesses": self.witnesses,
            "certified": self.certified,
        }
        if self.rejected:
            out["rejected"] = self.rejected
        return out


def _certified_pair(G: FiniteGroup, h_seq: Sequence[int], r_seq: Sequence[int], what: str) -> MatchedGroupPair:
    reason = check_matched_pair(G, h_seq, r_seq)
    if reason is not None:
        raise CertificationError(f"{what} produced an invalid matched pair: {reason}")
    return MatchedGroupPair(G, tuple(h_seq), tuple(r_seq))


# ---------------------------------------------------------------------------
# symmetric harmonious sequences


def symmetric_harmonious(H: FiniteGroup, budget: int = DEFAULT_BUDGET) -> list[int]:
    """A harmonious sequence h with h_0 = 1 and h_i·h_{m-i} = 1.

    Cyclic groups use the powers of a generator in order; other odd groups
    fall back to the mirror-constrained search.
    """
    m = H.order
    if m % 2 == 0:
        raise InvalidArgument("symmetric harmonious sequences exist only in odd-order groups")
    gen = next((g for g in range(m) if H.orders[g] == m), None)
    if gen is not None:
        seq = [0]
        for _ in range(m - 1):
            seq.append(H.table[seq[-1]][gen])
    else:
        outcome = search_symmetric_harmonious(H, budget)
        if outcome.status is Status.BUDGET_EXCEEDED:
            raise BudgetExceeded(f"symmetric harmonious search exceeded {budget} nodes")
        if outcome.sequence is None:
            raise CertificationError("odd-order group without a symmetric harmonious sequence")
        seq = list(outcome.sequence)
    reason = check_symmetric_harmonious(H, seq)
    if reason is not None:
        raise CertificationError(f"symmetric harmonious sequence failed verification: {reason}")
    return seq


def _embedded_symmetric(H: Subgroup, budget: int) -> list[int]:
    Hg, emb = subgroup_as_group(H)
    return [emb[a] for a in symmetric_harmonious(Hg, budget)]


def _grid_rows(G: FiniteGroup, h: Sequence[int], sigma: Sequence[int]) -> list[int]:
    # row p, column r: σ_{r-1}^{-1} h_p σ_r with σ_{-1} = 1
    T, inv_ = G.table, G.inverse
    rows = []
    for hp in h[1:]:
        prev = 0
        for s in sigma:
            rows.append(T[T[inv_[prev]][hp]][s])
            prev = s
    return rows


# ---------------------------------------------------------------------------
# cyclic extensions


@dataclass(frozen=True)
class ExtensionContext:
    G: FiniteGroup
    H: Subgroup
    x: int
    n: int
    sigma_prefix: tuple[int, ...]


def _check_odd_normal(G: FiniteGroup, H: Subgroup) -> None:
    if H.parent is not G:
        raise InvalidArgument("subgroup belongs to a different group")
    if len(H) % 2 == 0:
        raise InvalidArgument("the normal subgroup must have odd order")
    if not is_normal(G, H):
        raise InvalidArgument("subgroup is not normal")


def extension_context(G: FiniteGroup, H: Subgroup, x: int | None = None) -> ExtensionContext:
    _check_odd_normal(G, H)
    n = G.order // len(H)
    if n < 5 or n % 2 == 0 or n % 12 == 3:
        raise UnsupportedQuotient(f"quotient order {n} must be odd, at least 5 and not 3 mod 12")
    Q, proj = quotient(G, H)
    if x is None:
        x = next((g for g in range(G.order) if Q.orders[proj.image[g]] == n), None)
        if x is None:
            raise UnsupportedQuotient(f"G/H of order {n} is not cyclic")
    elif Q.orders[proj.image[x]] != n:
        raise InvalidArgument(f"coset of {G.names[x]} does not generate G/H")
    k = build_matched(n).k
    sigma, total = [], 0
    for v in k:
        total += v
        sigma.append(G.power(x, total))
    return ExtensionContext(G, H, x, n, tuple(sigma))


def mext(G: FiniteGroup, H: Subgroup, x: int | None = None, budget: int = DEFAULT_BUDGET) -> MatchedGroupPair:
    """Matched pair of G built from a normal odd-order H with G/H cyclic of order n."""
    try:
        ctx = extension_context(G, H, x)
    except UnsupportedLength as exc:
        raise UnsupportedQuotient(str(exc)) from exc
    pair = build_matched(ctx.n)
    x = ctx.x
    h = _embedded_symmetric(H, budget)
    rows = _grid_rows(G, h, ctx.sigma_prefix)
    h_seq = [G.power(x, v) for v in pair.k] + rows
    r_seq = [G.power(x, v) for v in pair.k_prime] + rows
    return _certified_pair(G, h_seq, r_seq, "cyclic extension")


# ---------------------------------------------------------------------------
# split extensions


def brh(
    G: FiniteGroup,
    K: Subgroup,
    H: Subgroup,
    k_pair: MatchedGroupPair,
    budget: int = DEFAULT_BUDGET,
) -> MatchedGroupPair:
    """Matched pair of G = HK from a matched pair of the complement K.

    ``k_pair`` must be given in G's indices with every entry in K.
    """
    _check_odd_normal(G, H)
    if K.parent is not G:
        raise InvalidArgument("complement belongs to a different group")
    if len(K) * len(H) != G.order or set(K.members) & set(H.members) != {0}:
        raise InvalidArgument("K is not a complement of H")
    if any(a not in K for a in (*k_pair.h_seq, *k_pair.r_seq)):
        raise InvalidArgument("the complement's pair has entries outside K")
    Kg, emb = subgroup_as_group(K)
    local = {g: i for i, g in enumerate(emb)}
    reason = check_matched_pair(Kg, [local[a] for a in k_pair.h_seq], [local[a] for a in k_pair.r_seq])
    if reason is not None:
        raise InvalidArgument(f"the complement's pair is not matched: {reason}")
    T = G.table
    sigma, acc = [], 0
    for u in k_pair.h_seq:
        acc = T[acc][u]
        sigma.append(acc)
    h = _embedded_symmetric(H, budget)
    rows = _grid_rows(G, h, sigma)
    return _certified_pair(G, list(k_pair.h_seq) + rows, list(k_pair.r_seq) + rows, "split extension")


@dataclass(frozen=True)
class SplitDecomposition:
    K: Subgroup
    H: Subgroup
    K_group: FiniteGroup
    embedding: tuple[int, ...]
    description: str


def split_decompositions(G: FiniteGroup) -> list[SplitDecomposition]:
    """Complement/odd-normal-subgroup splittings readable from how G was built."""
    meta = G.meta
    out = []
    if isinstance(meta, Semidirect) and meta.H.order % 2 == 1 and meta.H.order > 1:
        nh = meta.H.order
        emb = tuple(k * nh for k in range(meta.K.order))
        out.append(
            SplitDecomposition(Subgroup(G, emb), Subgroup(G, tuple(range(nh))), meta.K, emb, "K ⋉ H")
        )
    elif isinstance(meta, DirectProduct):
        A, B = meta.first, meta.second
        nb = B.order
        if nb % 2 == 1 and nb > 1:
            emb = tuple(a * nb for a in range(A.order))
            out.append(SplitDecomposition(Subgroup(G, emb), Subgroup(G, tuple(range(nb))), A, emb, "A × B, B odd"))
        if A.order % 2 == 1 and A.order > 1:
            emb = tuple(range(nb))
            H = Subgroup(G, tuple(a * nb for a in range(A.order)))
            out.append(SplitDecomposition(Subgroup(G, emb), H, B, emb, "A × B, A odd"))
    elif isinstance(meta, Dihedral):
        N = meta.order // 2
        for m in range(3, N + 1, 2):
            n = N // m
            if N % m or n < 2 or math.gcd(m, n) != 1:
                continue
            # D_{2N} = D_{2n} ⋉ Z_m with Z_m = ⟨r^n⟩ and D_{2n} = ⟨r^m, s⟩
            H = generated_subgroup(G, [n])
            Kd = make_dihedral(2 * n)
            emb = tuple(((i * m) % N) + j * N for j in range(2) for i in range(n))
            K = Subgroup(G, tuple(sorted(emb)))
            out.append(SplitDecomposition(K, H, Kd, emb, f"D{2 * N} = D{2 * n} ⋉ Z{m}"))
    return sorted(out, key=lambda d: len(d.K))


# ---------------------------------------------------------------------------
# drivers


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _main1(G: FiniteGroup, budget: int) -> tuple[MatchedGroupPair, StrategyReport]:
    A, _ = abelianization(G)
    if A.order == 1:
        raise NotConstructed("abelianization is trivial")
    if is_elementary(A, 3):
        raise NotConstructed(f"abelianization (order {A.order}) is an elementary 3-group")
    exponent = max(A.orders)
    candidates = [p for p in _prime_factors(A.order) if p > 3]
    if exponent % 9 == 0:
        candidates.append(9)
    for m in candidates:
        found = find_cyclic_quotient(G, m)
        if found is None:
            continue
        H, _ = found
        pair = mext(G, H, budget=budget)
        ctx = extension_context(G, H)
        return pair, StrategyReport(
            "main1",
            {
                "m": m,
                "H_order": len(H),
                "H": [G.names[a] for a in H.members],
                "x": G.names[ctx.x],
                "abelianization_order": A.order,
            },
        )
    raise NotConstructed(f"no cyclic quotient of order > 3 found for abelianization of order {A.order}")


def matched_pair(G: FiniteGroup, budget: int = DEFAULT_BUDGET) -> tuple[MatchedGroupPair, StrategyReport]:
    """First applicable of: published pair, cyclic extension, split extension, search."""
    if hall_paige_check(G) is HallPaige.CYCLIC:
        raise Impossible("Sylow 2-subgroup is cyclic and nontrivial (Hall–Paige condition fails)")
    rejected: dict[str, str] = {}

    golden = dihedral_golden_pair(G)
    if golden is not None:
        h_seq, r_seq, gens = golden
        # the published data is input, not our construction: a failure here
        # is reported and skipped rather than raised
        reason = check_matched_pair(G, h_seq, r_seq)
        if reason is None:
            names = {k: G.names[v] for k, v in gens.items()}
            pair = MatchedGroupPair(G, tuple(h_seq), tuple(r_seq))
            return pair, StrategyReport("golden", {"pattern": f"D{G.order}", **names})
        rejected["golden"] = f"published D{G.order} pair fails verification: {reason}"
    else:
        rejected["golden"] = "no published pair for this group"

    if G.order % 2 == 1:
        try:
            pair, report = _main1(G, budget)
            report.rejected = rejected
            return pair, report
        except (NotConstructed, UnsupportedQuotient, BudgetExceeded) as exc:
            rejected["main1"] = str(exc)
    else:
        rejected["main1"] = "group order is even"

    decomps = split_decompositions(G)
    for d in decomps:
        try:
            sub_pair, sub_report = matched_pair(d.K_group, budget)
        except (Impossible, NotConstructed) as exc:
            rejected[f"main2[{d.description}, |K|={len(d.K)}]"] = f"complement not matched: {exc}"
            continue
        embedded = MatchedGroupPair(
            G,
            tuple(d.embedding[a] for a in sub_pair.h_seq),
            tuple(d.embedding[a] for a in sub_pair.r_seq),
        )
        try:
            pair = brh(G, d.K, d.H, embedded, budget)
        except BudgetExceeded as exc:
            rejected[f"main2[{d.description}]"] = str(exc)
            continue
        return pair, StrategyReport(
            "main2",
            {
                "decomposition": d.description,
                "K_order": len(d.K),
                "H_order": len(d.H),
                "K": sub_report.to_json(),
            },
            rejected=rejected,
        )
    if not decomps:
        rejected["main2"] = "no split decomposition with odd normal subgroup is known"

    if G.order < 2:
        raise NotConstructed("trivial group", rejected)
    outcome = search_matched(G, budget)
    if outcome.status is Status.FOUND:
        assert outcome.sequence is not None and outcome.sequence_r is not None
        pair = _certified_pair(G, outcome.sequence, outcome.sequence_r, "search")
        return pair, StrategyReport("search", {"nodes_explored": outcome.nodes_explored}, rejected=rejected)
    if outcome.status is Status.NOT_EXISTS:
        raise Impossible(f"exhaustive search: no matched pair exists ({outcome.nodes_explored} nodes)")
    rejected["search"] = f"budget of {budget} nodes exceeded"
    raise NotConstructed("no strategy produced a matched pair", rejected)


def r_harmonious(G: FiniteGroup, budget: int = DEFAULT_BUDGET) -> tuple[list[int], StrategyReport]:
    if hall_paige_check(G) is HallPaige.CYCLIC:
        raise Impossible("Sylow 2-subgroup is cyclic and nontrivial (Hall–Paige condition fails)")
    if G.order < 2:
        raise Impossible("the trivial group has no non-identity elements")
    rejected: dict[str, str] = {}
    try:
        pair, report = matched_pair(G, budget)
        return list(pair.r_seq), report
    except (Impossible, NotConstructed) as exc:
        rejected["matched"] = str(exc)

    golden = z3_z7_golden_sequence(G)
    if golden is not None:
        seq, gens = golden
        reason = check_r_harmonious(G, seq)
        if reason is not None:
            raise CertificationError(f"published Z3 ⋉ Z7 sequence failed verification: {reason}")
        names = {k: G.names[v] for k, v in gens.items()}
        return seq, StrategyReport("golden", {"pattern": "Z3⋉Z7", **names}, rejected=rejected)

    outcome = search_r_harmonious(G, budget)
    if outcome.status is Status.FOUND:
        assert outcome.sequence is not None
        reason = check_r_harmonious(G, outcome.sequence)
        if reason is not None:
            raise CertificationError(f"search returned an invalid sequence: {reason}")
        return list(outcome.sequence), StrategyReport(
            "search", {"nodes_explored": outcome.nodes_explored}, rejected=rejected
        )
    if outcome.status is Status.NOT_EXISTS:
        raise Impossible(f"exhaustive search: no R-harmonious sequence exists ({outcome.nodes_explored} nodes)")
    rejected["search"] = f"budget of {budget} nodes exceeded"
    raise NotConstructed("no strategy produced an R-harmonious sequence", rejected)
