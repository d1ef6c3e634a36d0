"""Published sequences, located in any group that satisfies their presentation.

Words such as ``r^3s`` or ``x^4y^2`` are evaluated as products of powers of
generators, so the transcriptions work for constructor-built groups and for
Cayley tables loaded from disk alike.
"""

from __future__ import annotations

import re
from typing import Mapping

from .groups import FiniteGroup, generated_subgroup

D12_HARMONIOUS = "r 1 r^3 s r^5 rs r^2 r^4 r^4s r^2s r^3s r^5s"
D12_R_HARMONIOUS = "r r^2 r^3 s r^4 r^3s r^2s r^4s r^5 rs r^5s"

D16_HARMONIOUS = "r^2 r r^6 s r^3s r^7 r^3 r^5 r^4s r^6s r^5s rs r^4 r^7s 1 r^2s"
D16_R_HARMONIOUS = "r^2 r^5 r^6s r^4 r^3s rs s r^5s r^7s r^3 r r^4s r^6 r^7 r^2s"

# ⟨x, y | x^7 = y^3 = 1, y x y^-1 = x^2⟩
Z3_Z7_R_HARMONIOUS = (
    "x^4,y^2,x^4y,x^5y,x^5,x^6y,y,x^6,x^3y,x^4y^2,x^6y^2,xy,x,x^2y^2,xy^2,x^2,x^3,x^5y^2,x^2y,x^3y^2"
)
Z3_Z7_PRODUCTS = (
    "x^4y^2,x^2,y^2,xy,x^4y,x^6y^2,x^5y,x^2y,x^4,y,x^3,x^3y,x^3y^2,x^6y,x^2y^2,x^5,xy^2,x^6,x,x^5y^2"
)

Z9_HARMONIOUS = (1, -1, -3, 4, 2, 0, -2, -4, 3)
Z9_R_HARMONIOUS = (1, -4, 2, -3, -1, 4, -2, 3)

_FACTOR = re.compile(r"([a-z])(?:\^(-?\d+))?")


def evaluate_word(G: FiniteGroup, word: str, gens: Mapping[str, int]) -> int:
    if word == "1":
        return 0
    acc, pos = 0, 0
    for m in _FACTOR.finditer(word):
        if m.start() != pos:
            raise ValueError(f"cannot parse word {word!r}")
        pos = m.end()
        acc = G.table[acc][G.power(gens[m.group(1)], int(m.group(2) or 1))]
    if pos != len(word):
        raise ValueError(f"cannot parse word {word!r}")
    return acc


def evaluate_words(G: FiniteGroup, text: str, gens: Mapping[str, int]) -> list[int]:
    return [evaluate_word(G, w, gens) for w in re.split(r"[\s,]+", text.strip())]


def find_dihedral_generators(G: FiniteGroup) -> dict[str, int] | None:
    """Lowest-index r of order |G|/2 and involution s ∉ ⟨r⟩ with s·r·s = r^-1."""
    if G.order < 4 or G.order % 2:
        return None
    n = G.order // 2
    T, orders = G.table, G.orders
    for r in range(G.order):
        if orders[r] != n:
            continue
        cyc = generated_subgroup(G, [r])
        for s in range(G.order):
            if orders[s] == 2 and s not in cyc and T[T[s][r]][s] == G.inverse[r]:
                return {"r": r, "s": s}
    return None


def find_z3_z7_generators(G: FiniteGroup) -> dict[str, int] | None:
    """x of order 7 and y of order 3 with y·x·y^-1 = x^2 in a group of order 21."""
    if G.order != 21:
        return None
    T, orders = G.table, G.orders
    for x in range(21):
        if orders[x] != 7:
            continue
        for y in range(21):
            if orders[y] == 3 and T[T[y][x]][G.inverse[y]] == T[x][x]:
                return {"x": x, "y": y}
    return None


def dihedral_golden_pair(G: FiniteGroup) -> tuple[list[int], list[int], dict[str, int]] | None:
    if G.order not in (12, 16):
        return None
    gens = find_dihedral_generators(G)
    if gens is None:
        return None
    h_text, r_text = (
        (D12_HARMONIOUS, D12_R_HARMONIOUS) if G.order == 12 else (D16_HARMONIOUS, D16_R_HARMONIOUS)
    )
    return evaluate_words(G, h_text, gens), evaluate_words(G, r_text, gens), gens


def z3_z7_golden_sequence(G: FiniteGroup) -> tuple[list[int], dict[str, int]] | None:
    gens = find_z3_z7_generators(G)
    if gens is None:
        return None
    return evaluate_words(G, Z3_Z7_R_HARMONIOUS, gens), gens
