"""Small groups used for fuzzing and concordance checks."""

from __future__ import annotations

from .groups import (
    Action,
    FiniteGroup,
    RawTable,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_semidirect,
    multiplier_action,
)


def quaternion_group() -> FiniteGroup:
    """Q8 as a raw Cayley table, with elements ±1, ±i, ±j, ±k."""
    units = ["1", "i", "j", "k"]
    # unit products: (a, b) -> (sign, unit)
    rule = {
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    elems = [(1, u) for u in units] + [(-1, u) for u in units]
    names = [u if s > 0 else "-" + u for s, u in elems]

    def times(x, y):
        (s1, u1), (s2, u2) = x, y
        if u1 == "1":
            return s1 * s2, u2
        if u2 == "1":
            return s1 * s2, u1
        if u1 == u2:
            return -s1 * s2, "1"
        s, u = rule[u1, u2]
        return s * s1 * s2, u

    table = [[elems.index(times(x, y)) for y in elems] for x in elems]
    return FiniteGroup(table, names, RawTable("Q8"))


def alternating_a4() -> FiniteGroup:
    """Z3 acting on Z2xZ2 by cycling its three involutions."""
    K, H = make_cyclic(3), make_direct_product(make_cyclic(2), make_cyclic(2))
    p = (0, 2, 3, 1)
    p2 = tuple(p[p[i]] for i in range(4))
    return make_semidirect(K, H, Action(((0, 1, 2, 3), p, p2)))


def dicyclic_12() -> FiniteGroup:
    K, H = make_cyclic(4, "y"), make_cyclic(3, "x")
    return make_semidirect(K, H, multiplier_action(K, H, [1], [2]))


def small_groups(max_order: int = 16) -> list[tuple[str, FiniteGroup]]:
    """Cyclic, dihedral and assorted small groups of order 2..max_order."""
    out: list[tuple[str, FiniteGroup]] = []
    for n in range(2, max_order + 1):
        out.append((f"Z{n}", make_cyclic(n)))
        if n >= 6 and n % 2 == 0:
            out.append((f"D{n}", make_dihedral(n)))
    z = make_cyclic
    extra = [
        ("Z2xZ2", lambda: make_direct_product(z(2), z(2))),
        ("Z2xZ4", lambda: make_direct_product(z(2), z(4))),
        ("Z2xZ2xZ2", lambda: make_direct_product(make_direct_product(z(2), z(2)), z(2))),
        ("Q8", quaternion_group),
        ("Z3xZ3", lambda: make_direct_product(z(3), z(3))),
        ("Z2xZ6", lambda: make_direct_product(z(2), z(6))),
        ("A4", alternating_a4),
        ("Dic12", dicyclic_12),
        ("Z2xZ8", lambda: make_direct_product(z(2), z(8))),
        ("Z4xZ4", lambda: make_direct_product(z(4), z(4))),
        ("Z2xD8", lambda: make_direct_product(z(2), make_dihedral(8))),
    ]
    # D8 is listed with the dihedral family above; D4 would be Z2xZ2
    order = {"Z2xZ2": 4, "Z2xZ4": 8, "Z2xZ2xZ2": 8, "Q8": 8, "Z3xZ3": 9, "Z2xZ6": 12, "A4": 12,
             "Dic12": 12, "Z2xZ8": 16, "Z4xZ4": 16, "Z2xD8": 16}
    out += [(name, make()) for name, make in extra if order[name] <= max_order]
    out.sort(key=lambda item: item[1].order)
    return out
