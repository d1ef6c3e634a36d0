from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from harmonious.catalogue import alternating_a4, dicyclic_12, quaternion_group, small_groups
from harmonious.errors import InvalidAction, InvalidArgument, InvalidTable
from harmonious.groups import (
    Action,
    HallPaige,
    Subgroup,
    abelian_basis,
    abelianization,
    commutator_subgroup,
    dump_table,
    element_order,
    find_cyclic_quotient,
    generated_subgroup,
    hall_paige_check,
    inv,
    is_normal,
    load_table,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_semidirect,
    mul,
    multiplier_action,
    quotient,
    sylow_two_subgroup,
    validate_group,
)
from harmonious.groupspec import group_from_spec


def test_cyclic_basics():
    Z = make_cyclic(9)
    assert Z.names[0] == "0"
    assert mul(Z, 4, 7) == 2
    assert inv(Z, 3) == 6
    assert element_order(Z, 3) == 3
    assert element_order(Z, 1) == 9
    with pytest.raises(InvalidArgument):
        mul(Z, 0, 9)


def test_dihedral_relations():
    D = make_dihedral(12)
    r, s = D.index("r"), D.index("s")
    assert D.orders[r] == 6 and D.orders[s] == 2
    assert D.mul(D.mul(s, r), s) == D.inv(r)
    assert D.index("r^2s") == D.mul(D.power(r, 2), s)
    assert not D.is_abelian


def test_index_accepts_hash_form():
    D = make_dihedral(8)
    assert D.index("#5") == 5
    with pytest.raises(KeyError):
        D.index("t")


def test_catalogue_tables_are_groups():
    for name, G in small_groups(16):
        validate_group(G, full=True)


@pytest.mark.parametrize(
    "spec", ["Z2xZ2xZ3", "D6xZ5", "SD(Z3;Z7;2)", "SD(Z3xZ3;Z9;4,1)", "SD(Z4;Z5;2)", "D60"]
)
def test_constructor_outputs_validate(spec):
    G, _ = group_from_spec(spec)
    validate_group(G, full=G.order <= 256)


def test_semidirect_relation_z3_z7():
    G, _ = group_from_spec("SD(Z3;Z7;2)")
    x, y = G.index("x"), G.index("y")
    assert G.orders[x] == 7 and G.orders[y] == 3
    assert G.mul(G.mul(y, x), G.inv(y)) == G.mul(x, x)
    # H is normal and occupies the first |H| indices
    assert is_normal(G, Subgroup(G, tuple(range(7))))


def test_semidirect_relations_order_81():
    G, _ = group_from_spec("SD(Z3xZ3;Z9;4,1)")
    a, x, y = G.index("a"), G.index("x"), G.index("y")
    assert G.orders[a] == 9 and G.orders[x] == 3 and G.orders[y] == 3
    assert G.mul(G.mul(x, a), G.inv(x)) == G.power(a, 4)
    assert G.mul(G.mul(y, a), G.inv(y)) == a
    assert G.mul(x, y) == G.mul(y, x)


def test_commutator_subgroups():
    G, _ = group_from_spec("SD(Z3;Z7;2)")
    assert set(commutator_subgroup(G).members) == set(range(7))
    G, _ = group_from_spec("SD(Z3xZ3;Z9;4,1)")
    a3 = G.power(G.index("a"), 3)
    assert set(commutator_subgroup(G).members) == set(generated_subgroup(G, [a3]).members)
    A, _ = abelianization(G)
    assert A.order == 27


def test_invalid_action_rejected():
    K, H = make_cyclic(3), make_cyclic(7)
    with pytest.raises(InvalidAction):
        multiplier_action(K, H, [1], [3])
    with pytest.raises(InvalidAction):
        make_semidirect(K, H, Action(((0, 1, 2, 3, 4, 5, 6),) * 2))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([name for name, _ in small_groups(16)]), st.integers(0, 2**32))
def test_quotient_respects_multiplication(name, seed):
    G = dict(small_groups(16))[name]
    rng = random.Random(seed)
    N = commutator_subgroup(G)
    Q, proj = quotient(G, N)
    for _ in range(20):
        a, b = rng.randrange(G.order), rng.randrange(G.order)
        assert proj.image[G.mul(a, b)] == Q.mul(proj.image[a], proj.image[b])
    assert Q.order * len(N) == G.order


def test_quotient_requires_normal_subgroup():
    D = make_dihedral(6)
    with pytest.raises(InvalidArgument):
        quotient(D, generated_subgroup(D, [D.index("s")]))


@pytest.mark.parametrize("spec", ["Z12", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ9", "Z4xZ6xZ5", "Z2xZ2xZ2xZ3xZ3"])
def test_abelian_basis_is_direct_sum(spec):
    A, _ = group_from_spec(spec)
    basis = abelian_basis(A)
    assert all(A.orders[g] == o for g, o in basis)
    seen = set()
    for exps in _mixed_radix([o for _, o in basis]):
        acc = 0
        for (g, _), e in zip(basis, exps):
            acc = A.mul(acc, A.power(g, e))
        seen.add(acc)
    assert len(seen) == A.order


def _mixed_radix(radices):
    out = [()]
    for r in radices:
        out = [t + (e,) for t in out for e in range(r)]
    return out


@pytest.mark.parametrize(
    "spec,m,h_order",
    [("Z9", 9, 1), ("SD(Z5;Z11;3)", 5, 11), ("Z15", 5, 3), ("Z3xZ9", 9, 3)],
)
def test_find_cyclic_quotient(spec, m, h_order):
    G, _ = group_from_spec(spec)
    H, proj = find_cyclic_quotient(G, m)
    assert len(H) == h_order
    assert G.order // len(H) == m
    assert proj.target.order == m
    assert max(proj.target.orders) == m


def test_find_cyclic_quotient_none():
    G, _ = group_from_spec("SD(Z3;Z7;2)")
    assert find_cyclic_quotient(G, 5) is None
    assert find_cyclic_quotient(make_cyclic(9), 5) is None


@pytest.mark.parametrize(
    "G,expected",
    [
        (make_cyclic(7), HallPaige.TRIVIAL),
        (make_direct_product(make_cyclic(2), make_cyclic(2)), HallPaige.NONCYCLIC),
        (make_dihedral(6), HallPaige.CYCLIC),
        (make_cyclic(12), HallPaige.CYCLIC),
        (make_dihedral(8), HallPaige.NONCYCLIC),
        (quaternion_group(), HallPaige.NONCYCLIC),
        (alternating_a4(), HallPaige.NONCYCLIC),
        (dicyclic_12(), HallPaige.CYCLIC),
    ],
)
def test_hall_paige(G, expected):
    assert hall_paige_check(G) is expected


def test_sylow_two_order():
    for _, G in small_groups(16):
        P = sylow_two_subgroup(G)
        assert len(P) == G.order & -G.order
        assert is_normal(G, P) or G.order % len(P) == 0


def test_table_round_trip(tmp_path):
    G = quaternion_group()
    path = tmp_path / "q8.txt"
    path.write_text(dump_table(G), encoding="utf-8")
    H = load_table(path)
    assert H.table == G.table and H.names == G.names
    H2, canonical = group_from_spec(f"Table({path})")
    assert H2.order == 8 and canonical == f"Table({path})"


def test_table_rejects_non_group(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3\na b c\n0 1 2\n1 1 0\n2 0 1\n", encoding="utf-8")
    with pytest.raises(InvalidTable):
        load_table(path)
    path.write_text("2\na b\n1 0\n0 1\n", encoding="utf-8")
    with pytest.raises(InvalidTable):
        load_table(path)
