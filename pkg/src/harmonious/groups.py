"""Finite groups stored as dense Cayley tables.

Elements are the indices ``0..n-1`` and the identity is always ``0``.  Every
higher layer speaks indices; element names are for display and parsing only.

Semidirect products ``K ⋉ H`` use pairs ``(h, k)`` standing for the product
``h·k`` with index ``k*|H| + h`` and multiplication::

    (h1, k1)·(h2, k2) = (h1·φ(k1)(h2), k1·k2)

so ``H`` (indices ``0..|H|-1``) is the normal subgroup, the copy of ``K``
(indices ``k*|H|``) is a complement, and conjugation by ``k`` acts on ``H``
as ``φ(k)``.  Direct products ``A × B`` use index ``a*|B| + b``.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import InvalidAction, InvalidArgument, InvalidTable

MAX_ORDER = 4096


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    order: int


@dataclass(frozen=True)
class DirectProduct:
    first: "FiniteGroup"
    second: "FiniteGroup"


@dataclass(frozen=True)
class Semidirect:
    K: "FiniteGroup"
    H: "FiniteGroup"
    action: "Action"


@dataclass(frozen=True)
class RawTable:
    source: str = ""


FactorMeta = Union[Cyclic, Dihedral, DirectProduct, Semidirect, RawTable]


class FiniteGroup:
    """An immutable finite group given by its multiplication table."""

    identity = 0

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        names: Sequence[str],
        meta: FactorMeta | None = None,
        *,
        symbolic: bool = False,
        validate: bool = False,
    ) -> None:
        self.table: tuple[tuple[int, ...], ...] = tuple(tuple(int(v) for v in row) for row in table)
        self.names: tuple[str, ...] = tuple(names)
        self.order = len(self.table)
        self.meta: FactorMeta = meta if meta is not None else RawTable()
        # symbolic names ("x^2y") concatenate in products; others use tuples
        self.symbolic = symbolic
        if validate:
            check_table(self.table, self.names)
        self._index = {name: i for i, name in enumerate(self.names)}
        inverse = [0] * self.order
        for a, row in enumerate(self.table):
            inverse[a] = row.index(0)
        self.inverse: tuple[int, ...] = tuple(inverse)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, meta={type(self.meta).__name__})"

    def __len__(self) -> int:
        return self.order

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inverse[a], -e
        e %= self.orders[a]
        result = 0
        row = self.table
        for _ in range(e):
            result = row[result][a]
        return result

    def product(self, items: Iterable[int]) -> int:
        acc = 0
        for a in items:
            acc = self.table[acc][a]
        return acc

    @cached_property
    def orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.order):
            t, x = 1, a
            while x != 0:
                x = self.table[x][a]
                t += 1
            out.append(t)
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        arr = self.as_array()
        return bool(np.array_equal(arr, arr.T))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def index(self, token: str) -> int:
        """Resolve an element name or an ``#i`` index literal."""
        if token in self._index:
            return self._index[token]
        if token.startswith("#") and token[1:].isdigit():
            i = int(token[1:])
            if i < self.order:
                return i
        raise KeyError(token)

    def name(self, a: int) -> str:
        return self.names[a]


def _check_index(G: FiniteGroup, a: int) -> None:
    if not (isinstance(a, (int, np.integer)) and 0 <= a < G.order):
        raise InvalidArgument(f"element index {a!r} out of range for group of order {G.order}")


def mul(G: FiniteGroup, a: int, b: int) -> int:
    _check_index(G, a)
    _check_index(G, b)
    return G.table[a][b]


def inv(G: FiniteGroup, a: int) -> int:
    _check_index(G, a)
    return G.inverse[a]


def element_order(G: FiniteGroup, a: int) -> int:
    _check_index(G, a)
    return G.orders[a]


# ---------------------------------------------------------------------------
# table validation


def _light_generators(T: np.ndarray) -> list[int]:
    """Elements whose product-closure is the whole table."""
    n = len(T)
    closed = np.zeros(n, dtype=bool)
    closed[0] = True
    gens: list[int] = []
    while not closed.all():
        g = int(np.flatnonzero(~closed)[0])
        gens.append(g)
        closed[g] = True
        while True:
            idx = np.flatnonzero(closed)
            new = np.zeros(n, dtype=bool)
            new[T[np.ix_(idx, idx)].ravel()] = True
            if (new & ~closed).any():
                closed |= new
            else:
                break
    return gens


def check_table(table: Sequence[Sequence[int]], names: Sequence[str], *, full: bool = False) -> None:
    """Raise InvalidTable unless ``table`` is a group table with identity 0.

    Associativity uses Light's test over a generating set, which is exact
    for loops; ``full=True`` checks every triple instead.
    """
    n = len(table)
    if n < 1:
        raise InvalidTable("empty table")
    if n > MAX_ORDER:
        raise InvalidTable(f"order {n} exceeds supported maximum {MAX_ORDER}")
    if len(names) != n:
        raise InvalidTable(f"expected {n} names, got {len(names)}")
    if len(set(names)) != n:
        raise InvalidTable("element names are not pairwise distinct")
    if any(len(row) != n for row in table):
        raise InvalidTable("table is not square")
    T = np.asarray(table, dtype=np.int32)
    if T.min() < 0 or T.max() >= n:
        raise InvalidTable("table entry out of range")
    ar = np.arange(n)
    if not (np.array_equal(T[0], ar) and np.array_equal(T[:, 0], ar)):
        raise InvalidTable("index 0 is not a two-sided identity")
    sorted_rows = np.sort(T, axis=1)
    sorted_cols = np.sort(T, axis=0)
    if not (np.all(sorted_rows == ar) and np.all(sorted_cols == ar[:, None])):
        raise InvalidTable("table is not a Latin square")
    if full:
        if not np.array_equal(T[T], T[:, T]):
            raise InvalidTable("multiplication is not associative")
        return
    for g in _light_generators(T):
        # (x·g)·y == x·(g·y) for all x, y
        if not np.array_equal(T[T[:, g], :], T[:, T[g, :]]):
            raise InvalidTable("multiplication is not associative")


def validate_group(G: FiniteGroup, *, full: bool = True) -> None:
    check_table(G.table, G.names, full=full)


# ---------------------------------------------------------------------------
# constructors


def _power_name(symbol: str, e: int) -> str:
    if e == 0:
        return "1"
    if e == 1:
        return symbol
    return f"{symbol}^{e}"


def _concat(a: str, b: str) -> str:
    if a == "1":
        return b
    if b == "1":
        return a
    return a + b


def make_cyclic(n: int, symbol: str | None = None) -> FiniteGroup:
    """Cyclic group Z_n; element i is i (or ``symbol^i`` when a symbol is given)."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"cyclic order must be a positive integer, got {n!r}")
    if n > MAX_ORDER:
        raise InvalidArgument(f"order {n} exceeds supported maximum {MAX_ORDER}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    if symbol is None:
        names = [str(i) for i in range(n)]
    else:
        names = [_power_name(symbol, i) for i in range(n)]
    return FiniteGroup(table, names, Cyclic(n), symbolic=symbol is not None)


def make_dihedral(order: int) -> FiniteGroup:
    """Dihedral group ⟨r, s | r^n = s^2 = (sr)^2 = 1⟩ of the given order 2n.

    ``r^i s^j`` has index ``j*n + i``.
    """
    if not isinstance(order, int) or order < 4 or order % 2:
        raise InvalidArgument(f"dihedral order must be even and at least 4, got {order!r}")
    if order > MAX_ORDER:
        raise InvalidArgument(f"order {order} exceeds supported maximum {MAX_ORDER}")
    n = order // 2
    table = []
    for x in range(order):
        b, a = divmod(x, n)
        row = []
        for y in range(order):
            d, c = divmod(y, n)
            row.append(((b + d) % 2) * n + (a + (c if b == 0 else -c)) % n)
        table.append(row)
    names = [_power_name("r", i) for i in range(n)]
    names += [_concat(_power_name("r", i), "s") for i in range(n)]
    return FiniteGroup(table, names, Dihedral(order), symbolic=True)


def _pair_names(A: FiniteGroup, B: FiniteGroup) -> list[str]:
    if A.symbolic and B.symbolic:
        return [_concat(a, b) for a in A.names for b in B.names]
    flatten = isinstance(A.meta, DirectProduct) and not A.symbolic
    out = []
    for a in A.names:
        for b in B.names:
            out.append(f"{a[:-1]},{b})" if flatten else f"({a},{b})")
    return out


def make_direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    nb = B.order
    if A.order * nb > MAX_ORDER:
        raise InvalidArgument(f"order {A.order * nb} exceeds supported maximum {MAX_ORDER}")
    TA, TB = A.as_array(), B.as_array()
    table = (TA[:, None, :, None] * nb + TB[None, :, None, :]).reshape(A.order * nb, A.order * nb)
    return FiniteGroup(
        table.tolist(), _pair_names(A, B), DirectProduct(A, B), symbolic=A.symbolic and B.symbolic
    )


@dataclass(frozen=True)
class Action:
    """For each element of K, the permutation of H's indices it induces."""

    perms: tuple[tuple[int, ...], ...]

    @classmethod
    def trivial(cls, K: FiniteGroup, H: FiniteGroup) -> "Action":
        ident = tuple(range(H.order))
        return cls(tuple(ident for _ in range(K.order)))

    def validate(self, K: FiniteGroup, H: FiniteGroup) -> None:
        if len(self.perms) != K.order:
            raise InvalidAction(f"need {K.order} permutations, got {len(self.perms)}")
        ident = tuple(range(H.order))
        for k, p in enumerate(self.perms):
            if len(p) != H.order or sorted(p) != list(ident):
                raise InvalidAction(f"image of K-element {K.names[k]} is not a permutation of H")
        if self.perms[0] != ident:
            raise InvalidAction("identity of K does not act trivially")
        TH = H.as_array()
        for k, p in enumerate(self.perms):
            P = np.asarray(p)
            if not np.array_equal(P[TH], TH[np.ix_(P, P)]):
                raise InvalidAction(f"K-element {K.names[k]} does not act by an automorphism")
        for k1, k2 in itertools.product(range(K.order), repeat=2):
            p1, p2 = self.perms[k1], self.perms[k2]
            composed = tuple(p1[p2[h]] for h in range(H.order))
            if self.perms[K.table[k1][k2]] != composed:
                raise InvalidAction(
                    f"action is not a homomorphism at ({K.names[k1]}, {K.names[k2]})"
                )


def multiplier_action(
    K: FiniteGroup, H: FiniteGroup, generators: Sequence[int], multipliers: Sequence[int]
) -> Action:
    """Action of K on a cyclic H where ``generators[i]`` acts as ``h ↦ h*multipliers[i]``.

    ``H`` must use the cyclic index convention (index i is the i-th power of
    the generator).  Consistency is checked along every Cayley-graph edge.
    """
    if not isinstance(H.meta, Cyclic):
        raise InvalidAction("multiplier actions need a cyclic H")
    if len(generators) != len(multipliers):
        raise InvalidAction("one multiplier is needed per generator")
    m = H.order
    for mu in multipliers:
        if math.gcd(mu, m) != 1:
            raise InvalidAction(f"multiplier {mu} is not a unit mod {m}")
    unit: list[int | None] = [None] * K.order
    unit[0] = 1 % m
    queue = [0]
    for k in queue:
        for g, mu in zip(generators, multipliers):
            nk = K.table[k][g]
            val = (unit[k] * mu) % m  # type: ignore[operator]
            if unit[nk] is None:
                unit[nk] = val
                queue.append(nk)
            elif unit[nk] != val:
                raise InvalidAction("multipliers do not define a homomorphism K → Aut(H)")
    if any(u is None for u in unit):
        raise InvalidAction("generators do not generate K")
    return Action(tuple(tuple((h * u) % m for h in range(m)) for u in unit))  # type: ignore[operator]


def make_semidirect(K: FiniteGroup, H: FiniteGroup, action: Action) -> FiniteGroup:
    """K ⋉ H with H normal; see the module docstring for the convention."""
    action.validate(K, H)
    nh, nk = H.order, K.order
    if nh * nk > MAX_ORDER:
        raise InvalidArgument(f"order {nh * nk} exceeds supported maximum {MAX_ORDER}")
    TH, TK = H.as_array(), K.as_array()
    P = np.asarray(action.perms, dtype=np.int64)
    # index (k, h) -> k*nh + h
    k_idx = np.repeat(np.arange(nk), nh)
    h_idx = np.tile(np.arange(nh), nk)
    h_part = TH[h_idx[:, None], P[k_idx[:, None], h_idx[None, :]]]
    k_part = TK[k_idx[:, None], k_idx[None, :]]
    table = k_part * nh + h_part
    if H.symbolic and K.symbolic:
        names = [_concat(h, k) for k in K.names for h in H.names]
    else:
        names = [f"({h},{k})" for k in K.names for h in H.names]
    return FiniteGroup(
        table.tolist(), names, Semidirect(K, H, action), symbolic=H.symbolic and K.symbolic
    )


def load_table(path: str | Path) -> FiniteGroup:
    """Read a Cayley-table file: order, names, then ``n`` rows of indices."""
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        n = int(lines[0].strip())
    except (IndexError, ValueError) as exc:
        raise InvalidTable(f"{path}: first line must be the group order") from exc
    if len(lines) != n + 2:
        raise InvalidTable(f"{path}: expected {n + 2} non-empty lines, found {len(lines)}")
    names = lines[1].split()
    try:
        table = [[int(tok) for tok in ln.split()] for ln in lines[2:]]
    except ValueError as exc:
        raise InvalidTable(f"{path}: non-integer table entry") from exc
    check_table(table, names)
    return FiniteGroup(table, names, RawTable(str(path)))


def dump_table(G: FiniteGroup) -> str:
    rows = [" ".join(str(v) for v in row) for row in G.table]
    return "\n".join([str(G.order), " ".join(G.names), *rows]) + "\n"


# ---------------------------------------------------------------------------
# subgroups and quotients


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a: object) -> bool:
        return a in self._set

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)


def generated_subgroup(G: FiniteGroup, seeds: Iterable[int]) -> Subgroup:
    seeds = sorted(set(seeds))
    for s in seeds:
        _check_index(G, s)
    seen = {0}
    frontier = [0]
    T = G.table
    while frontier:
        nxt = []
        for a in frontier:
            for s in seeds:
                b = T[a][s]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return Subgroup(G, tuple(sorted(seen)))


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    T, inv_ = G.table, G.inverse
    comms = {T[T[a][b]][T[inv_[a]][inv_[b]]] for a in range(G.order) for b in range(a + 1, G.order)}
    return generated_subgroup(G, comms)


def is_normal(G: FiniteGroup, N: Subgroup) -> bool:
    T, inv_ = G.table, G.inverse
    members = N._set
    for g in range(G.order):
        gi = inv_[g]
        for x in N.members:
            if T[T[g][x]][gi] not in members:
                return False
    return True


def normalizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    T, inv_ = G.table, G.inverse
    members = S._set
    out = [g for g in range(G.order) if all(T[T[g][x]][inv_[g]] in members for x in S.members)]
    return Subgroup(G, tuple(out))


@dataclass(frozen=True)
class QuotientMap:
    source: FiniteGroup
    target: FiniteGroup
    image: tuple[int, ...]

    def fiber(self, t: int) -> list[int]:
        return [g for g, v in enumerate(self.image) if v == t]


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, QuotientMap]:
    if not is_normal(G, N):
        raise InvalidArgument("quotient requires a normal subgroup")
    image = [-1] * G.order
    reps: list[int] = []
    for g in range(G.order):
        if image[g] < 0:
            c = len(reps)
            reps.append(g)
            for x in N.members:
                image[G.table[g][x]] = c
    table = [[image[G.table[a][b]] for b in reps] for a in reps]
    names = [G.names[r] if len(N) == 1 else f"[{G.names[r]}]" for r in reps]
    Q = FiniteGroup(table, names, RawTable("quotient"))
    return Q, QuotientMap(G, Q, tuple(image))


def subgroup_as_group(S: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Reindex a subgroup as a standalone group; returns it with the embedding."""
    members = S.members
    pos = {g: i for i, g in enumerate(members)}
    T = S.parent.table
    table = [[pos[T[a][b]] for b in members] for a in members]
    names = [S.parent.names[g] for g in members]
    return FiniteGroup(table, names, RawTable("subgroup")), tuple(members)


# ---------------------------------------------------------------------------
# abelian structure


def abelian_basis(A: FiniteGroup) -> list[tuple[int, int]]:
    """Elements (with orders) whose cyclic subgroups form an internal direct product equal to A.

    Take an element ``g`` of maximal order, decompose ``A/⟨g⟩`` recursively and
    lift each quotient generator ``y0`` of order ``d`` to ``y0·g^(-t/d)`` where
    ``y0^d = g^t``; maximality of ``ord(g)`` makes ``d | t``.
    """
    if not A.is_abelian:
        raise InvalidArgument("abelian_basis requires an abelian group")
    if A.order == 1:
        return []
    orders = A.orders
    g = max(range(A.order), key=lambda a: (orders[a], -a))
    e = orders[g]
    cyc = generated_subgroup(A, [g])
    log = {}
    x = 0
    for t in range(e):
        log[x] = t
        x = A.table[x][g]
    Q, qmap = quotient(A, cyc)
    basis = [(g, e)]
    for qb, d in abelian_basis(Q):
        y0 = qmap.fiber(qb)[0]
        t = log[A.power(y0, d)]
        assert t % d == 0
        basis.append((A.table[y0][A.power(g, -(t // d))], d))
    return basis


def basis_coordinates(A: FiniteGroup, basis: Sequence[tuple[int, int]]) -> dict[int, tuple[int, ...]]:
    """Map each element of A to its exponent vector over ``basis``."""
    coords: dict[int, tuple[int, ...]] = {}
    for exps in itertools.product(*(range(o) for _, o in basis)):
        a = 0
        for (b, _), e in zip(basis, exps):
            a = A.table[a][A.power(b, e)]
        if a in coords:
            raise InvalidArgument("basis does not give a direct decomposition")
        coords[a] = exps
    if len(coords) != A.order:
        raise InvalidArgument("basis does not span the group")
    return coords


def abelianization(G: FiniteGroup) -> tuple[FiniteGroup, QuotientMap]:
    return quotient(G, commutator_subgroup(G))


def find_cyclic_quotient(G: FiniteGroup, m: int) -> tuple[Subgroup, QuotientMap] | None:
    """A normal H with G/H ≅ Z_m, pulled back from the abelianization, or None."""
    if m < 1:
        raise InvalidArgument(f"quotient order must be positive, got {m}")
    A, proj = abelianization(G)
    basis = abelian_basis(A)
    choices = [(o, b, j) for j, (b, o) in enumerate(basis) if o % m == 0]
    if not choices:
        return None
    _, _, j = min(choices)
    coords = basis_coordinates(A, basis)
    Z = make_cyclic(m)
    image = tuple(coords[proj.image[g]][j] % m for g in range(G.order))
    H = Subgroup(G, tuple(g for g in range(G.order) if image[g] == 0))
    return H, QuotientMap(G, Z, image)


def is_elementary(G: FiniteGroup, p: int) -> bool:
    return all(o in (1, p) for o in G.orders)


class HallPaige(enum.Enum):
    TRIVIAL = "Trivial2Sylow"
    NONCYCLIC = "NonCyclic2Sylow"
    CYCLIC = "Cyclic2Sylow"

    @property
    def satisfied(self) -> bool:
        return self is not HallPaige.CYCLIC


def sylow_two_subgroup(G: FiniteGroup) -> Subgroup:
    """Grow a 2-subgroup inside its normalizer until it reaches the full 2-part."""
    target = G.order & -G.order
    P = Subgroup(G, (0,))
    while len(P) < target:
        N = normalizer(G, P)
        for g in N.members:
            if g not in P and G.table[g][g] in P:
                P = generated_subgroup(G, [*P.members, g])
                break
        else:  # pragma: no cover - excluded by Sylow theory
            raise AssertionError("no element of order 2 in N(P)/P")
    return P


def hall_paige_check(G: FiniteGroup) -> HallPaige:
    P = sylow_two_subgroup(G)
    if len(P) == 1:
        return HallPaige.TRIVIAL
    if any(G.orders[g] == len(P) for g in P.members):
        return HallPaige.CYCLIC
    return HallPaige.NONCYCLIC
