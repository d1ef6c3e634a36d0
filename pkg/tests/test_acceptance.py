"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL: <detail>`` line (shown
even under output capture) and then asserts.  Run directly with
``python3 tests/test_acceptance.py`` for just the summary lines.
"""

from __future__ import annotations

import contextlib
import io
import random
import sys
import time

import pytest

from harmonious.catalogue import small_groups
from harmonious.cli import main
from harmonious.constructions import matched_pair, mext, r_harmonious, symmetric_harmonious
from harmonious.errors import CertificationError, Impossible, NotConstructed, UnsupportedQuotient
from harmonious.golden import (
    D12_HARMONIOUS,
    D12_R_HARMONIOUS,
    D16_HARMONIOUS,
    D16_R_HARMONIOUS,
    Z3_Z7_PRODUCTS,
    Z3_Z7_R_HARMONIOUS,
    Z9_HARMONIOUS,
    Z9_R_HARMONIOUS,
)
from harmonious.groups import HallPaige, Subgroup, find_cyclic_quotient, hall_paige_check, make_cyclic, make_dihedral
from harmonious.groupspec import group_from_spec
from harmonious.intseq import build_k, build_matched, sigma, verify_matched_int
from harmonious.search import Status, search_harmonious, search_r_harmonious
from harmonious.verify import (
    check_matched_pair,
    consecutive_products,
    is_matched_pair,
    is_r_harmonious,
    is_symmetric_harmonious,
)


def report(number: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {detail}", flush=True)


def _names(G, text):
    return [G.index(w) for w in text.replace(",", " ").split()]


def criterion_1() -> tuple[bool, str]:
    expected = "k: 10,-10,-3,4,2,0,-2,-4,3\nk': 10,-4,2,-3,-10,4,-2,3\nverified: true\n"
    buf = io.StringIO()
    start = time.perf_counter()
    with contextlib.redirect_stdout(buf):
        code = main(["intseq", "--n", "9"])
    elapsed = time.perf_counter() - start
    ok = code == 0 and buf.getvalue() == expected and elapsed < 0.1
    return ok, f"intseq --n 9 byte-exact={buf.getvalue() == expected}, exit {code}, {elapsed:.4f}s"


def criterion_2() -> tuple[bool, str]:
    start = time.perf_counter()
    failures = []
    count = 0
    for n in range(5, 500, 2):
        if n % 12 == 3:
            continue
        count += 1
        k = build_k(n)
        mirror = k[0] + k[1] == 0 and all(k[i] + k[n + 1 - i] == 0 for i in range(2, n))
        image = sorted(sigma(n, j) for j in range(1, n))
        bijection = k.count(0) == 1 and image == sorted(set(range(n)) - {k.index(0)})
        try:
            verified = verify_matched_int(build_matched(n))
        except CertificationError:
            verified = False
        if not (mirror and bijection and verified):
            failures.append(n)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1.0
    detail = f"{count - len(failures)}/{count} lengths pass in {elapsed:.3f}s"
    if failures:
        detail += f"; failing n = {failures}"
    return ok, detail


def criterion_3() -> tuple[bool, str]:
    parts = []
    ok = True
    for order, h_text, r_text in ((12, D12_HARMONIOUS, D12_R_HARMONIOUS), (16, D16_HARMONIOUS, D16_R_HARMONIOUS)):
        G = make_dihedral(order)
        reason = check_matched_pair(G, _names(G, h_text), _names(G, r_text))
        ok &= reason is None
        parts.append(f"D{order} matched={reason is None}" + (f" ({reason})" if reason else ""))
    G, _ = group_from_spec("SD(Z3;Z7;2)")
    seq = _names(G, Z3_Z7_R_HARMONIOUS)
    r_ok = is_r_harmonious(G, seq)
    prod_ok = consecutive_products(G, seq) == _names(G, Z3_Z7_PRODUCTS)
    ok &= r_ok and prod_ok
    parts.append(f"Z3xZ7 r-harmonious={r_ok} products-match={prod_ok}")
    return ok, "; ".join(parts)


def criterion_4() -> tuple[bool, str]:
    Z = make_cyclic(9)
    pair = mext(Z, Subgroup(Z, (0,)))
    h_ok = list(pair.h_seq) == [v % 9 for v in Z9_HARMONIOUS]
    r_ok = list(pair.r_seq) == [v % 9 for v in Z9_R_HARMONIOUS]
    return h_ok and r_ok, f"h={list(pair.h_seq)} r={list(pair.r_seq)}"


def criterion_5() -> tuple[bool, str]:
    parts = []
    ok = True
    for name, G, fn in (
        ("Z3 r-harmonious", make_cyclic(3), search_r_harmonious),
        ("D8 r-harmonious", make_dihedral(8), search_r_harmonious),
        ("Z2xZ2 harmonious", group_from_spec("Z2xZ2")[0], search_harmonious),
    ):
        start = time.perf_counter()
        out = fn(G, 10**7)
        elapsed = time.perf_counter() - start
        good = out.status is Status.NOT_EXISTS and elapsed < 10
        ok &= good
        parts.append(f"{name}: {out.status.value} ({out.nodes_explored} nodes, {elapsed:.3f}s)")
    return ok, "; ".join(parts)


def criterion_6() -> tuple[bool, str]:
    parts = []
    ok = True
    for spec, m, h_order in (("SD(Z5;Z11;3)", 5, 11), ("Z9", 9, 1)):
        G, _ = group_from_spec(spec)
        start = time.perf_counter()
        pair, rep = matched_pair(G)
        elapsed = time.perf_counter() - start
        good = (
            rep.strategy == "main1"
            and rep.witnesses.get("m") == m
            and rep.witnesses.get("H_order") == h_order
            and is_matched_pair(G, pair.h_seq, pair.r_seq)
            and elapsed < 5
        )
        ok &= good
        parts.append(f"{spec}: {rep.strategy} m={rep.witnesses.get('m')} |H|={rep.witnesses.get('H_order')} {elapsed:.3f}s")
    return ok, "; ".join(parts)


def criterion_7() -> tuple[bool, str]:
    parts = []
    ok = True
    for spec in ("D12xZ5", "SD(Z3xZ3;Z9;4,1)"):
        G, _ = group_from_spec(spec)
        start = time.perf_counter()
        pair, rep = matched_pair(G)
        elapsed = time.perf_counter() - start
        good = rep.strategy == "main2" and is_matched_pair(G, pair.h_seq, pair.r_seq) and elapsed < 30
        ok &= good
        parts.append(f"{spec} (order {G.order}): {rep.strategy} {elapsed:.3f}s")
    return ok, "; ".join(parts)


def criterion_8() -> tuple[bool, str]:
    mismatches = []
    checked = 0
    for name, G in small_groups(12):
        out = search_r_harmonious(G)
        if out.status is Status.BUDGET_EXCEEDED:
            mismatches.append(f"{name}: budget exceeded")
            continue
        if out.found and not is_r_harmonious(G, out.sequence):
            mismatches.append(f"{name}: uncertified witness")
        if hall_paige_check(G) is HallPaige.CYCLIC or G.order == 3:
            expected = Status.NOT_EXISTS
        elif G.order % 2 == 1 or G.is_abelian:
            expected = Status.FOUND
        else:
            continue
        checked += 1
        if out.status is not expected:
            mismatches.append(f"{name}: got {out.status.value}")
    return not mismatches, f"{checked} predicted verdicts checked" + (f"; mismatches {mismatches}" if mismatches else "")


def criterion_9(seed: int = 20240601) -> tuple[bool, str]:
    rng = random.Random(seed)
    extra = [
        "D16", "Z2xD8", "Z4xZ4", "SD(Z3;Z7;2)", "SD(Z5;Z11;3)", "Z3xZ5", "Z5xZ5",
        "Z25", "Z27", "D12xZ5", "D12xZ7", "SD(Z4;Z5;2)", "Z7xZ7", "Z35",
    ]
    groups = small_groups(12) + [(spec, group_from_spec(spec)[0]) for spec in extra]
    failures = []
    outputs = 0
    for spec, G in groups:
        for op in ("matched", "r", "mext", "symmetric"):
            try:
                if op == "matched":
                    pair, _ = matched_pair(G)
                    good = is_matched_pair(G, pair.h_seq, pair.r_seq)
                elif op == "r":
                    seq, _ = r_harmonious(G)
                    good = is_r_harmonious(G, seq)
                elif op == "mext":
                    m = rng.choice([5, 7, 9, 11, 13])
                    found = find_cyclic_quotient(G, m) if G.order % 2 else None
                    if found is None:
                        continue
                    pair = mext(G, found[0])
                    good = is_matched_pair(G, pair.h_seq, pair.r_seq)
                else:
                    if G.order % 2 == 0:
                        continue
                    good = is_symmetric_harmonious(G, symmetric_harmonious(G))
            except (Impossible, NotConstructed, UnsupportedQuotient):
                continue
            except CertificationError as exc:
                failures.append(f"{spec}/{op}: {exc}")
                continue
            outputs += 1
            if not good:
                failures.append(f"{spec}/{op}")
    return not failures, f"{outputs} constructed outputs over {len(groups)} groups certified" + (
        f"; failures {failures}" if failures else ""
    )


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_acceptance(number, capsys):
    ok, detail = CRITERIA[number - 1]()
    with capsys.disabled():
        print()
        report(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for i, crit in enumerate(CRITERIA, 1):
        ok, detail = crit()
        report(i, ok, detail)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
