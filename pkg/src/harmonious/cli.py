"""Command-line front end.

Exit codes: 0 success or predicate true, 1 predicate false (or search found
nothing), 2 impossible or unsupported, 3 not constructed (including exceeded
search budgets), 4 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .constructions import matched_pair, r_harmonious
from .errors import HarmoniousError, Impossible, NotConstructed, UnsupportedLength
from .groups import FiniteGroup, hall_paige_check
from .groupspec import group_from_spec
from .intseq import MatchedIntPair, build_k, format_ints, sigma, verify_matched_int
from .search import (
    DEFAULT_BUDGET,
    Status,
    search_harmonious,
    search_matched,
    search_r_harmonious,
    search_symmetric_harmonious,
)
from .verify import (
    check_harmonious,
    check_matched_pair,
    check_r_harmonious,
    check_symmetric_harmonious,
    consecutive_products,
)

EXIT_OK, EXIT_FALSE, EXIT_IMPOSSIBLE, EXIT_NOT_CONSTRUCTED, EXIT_INPUT = range(5)

SEQUENCE_KINDS = ("harmonious", "r-harmonious", "symmetric", "matched")


class InputError(Exception):
    pass


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit_json(obj: object) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def _load_group(text: str) -> tuple[FiniteGroup, str]:
    try:
        return group_from_spec(text)
    except (HarmoniousError, OSError) as exc:
        raise InputError(f"bad group spec {text!r}: {exc}") from exc


def _names(G: FiniteGroup, seq: Sequence[int]) -> list[str]:
    return [G.names[a] for a in seq]


# ---------------------------------------------------------------------------
# sequence files


def _parse_line(G: FiniteGroup, line: str, lineno: int) -> list[int]:
    tokens = line.split()
    if tokens and tokens[0].endswith(":"):
        tokens = tokens[1:]
    out = []
    for tok in tokens:
        try:
            out.append(G.index(tok))
        except KeyError:
            raise InputError(f"line {lineno}: unknown element {tok!r}") from None
    return out


def read_sequences(G: FiniteGroup, text: str, kind: str) -> list[list[int]]:
    """Sequences from a construct certificate (JSON) or from text, one per line.

    Text lines starting with ``# `` are comments; a leading ``label:`` token is
    ignored.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        names = [data["sequence"]]
        if "sequence_r" in data:
            names = [data["sequence"], data["sequence_r"]] if kind == "matched" else [data["sequence_r"]]
        seqs = []
        for i, row in enumerate(names, 1):
            seqs.append(_parse_line(G, " ".join(row), i))
        return seqs
    seqs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("# ") or line.strip() == "#":
            continue
        seqs.append(_parse_line(G, line, lineno))
    return seqs


def format_text_sequences(G: FiniteGroup, seqs: Sequence[Sequence[int]]) -> list[str]:
    return [" ".join(_names(G, s)) for s in seqs]


# ---------------------------------------------------------------------------
# commands


def cmd_construct(args: argparse.Namespace) -> int:
    G, canonical = _load_group(args.group)
    fmt = args.format or "text"
    try:
        if args.kind == "matched":
            pair, report = matched_pair(G, args.budget)
            seqs = [list(pair.h_seq), list(pair.r_seq)]
        else:
            seq, report = r_harmonious(G, args.budget)
            seqs = [seq]
    except Impossible as exc:
        if fmt == "json":
            _emit_json({"group": canonical, "order": G.order, "kind": args.kind, "status": "impossible", "reason": str(exc)})
        _err(f"impossible: {exc}")
        return EXIT_IMPOSSIBLE
    except NotConstructed as exc:
        if fmt == "json":
            _emit_json(
                {"group": canonical, "order": G.order, "kind": args.kind, "status": "not-constructed",
                 "reason": str(exc), "rejected": exc.reasons}
            )
        _err(f"not constructed: {exc}")
        for name, why in exc.reasons.items():
            _err(f"  {name}: {why}")
        return EXIT_NOT_CONSTRUCTED
    products = consecutive_products(G, seqs[0])
    if fmt == "json":
        out = {
            "group": canonical,
            "order": G.order,
            "kind": args.kind,
            "sequence": _names(G, seqs[0]),
        }
        if len(seqs) > 1:
            out["sequence_r"] = _names(G, seqs[1])
        out["products"] = _names(G, products)
        out["strategy"] = report.to_json()
        out["certified"] = report.certified
        _emit_json(out)
    else:
        print(f"# group {canonical}, order {G.order}, kind {args.kind}")
        print(f"# strategy: {report.strategy} {json.dumps(report.witnesses, ensure_ascii=False)}")
        labels = ["g:", "g':"] if len(seqs) > 1 else ["g:"]
        for label, line in zip(labels, format_text_sequences(G, seqs)):
            print(f"{label} {line}")
        print(f"# certified: {'true' if report.certified else 'false'}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    G, canonical = _load_group(args.group)
    try:
        text = Path(args.file).read_text(encoding="utf-8") if args.file != "-" else sys.stdin.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    try:
        seqs = read_sequences(G, text, args.kind)
    except (json.JSONDecodeError, KeyError) as exc:
        raise InputError(f"malformed certificate: {exc}") from exc
    if not seqs:
        raise InputError("no sequence found in input")
    if args.kind == "matched":
        if len(seqs) != 2:
            raise InputError(f"matched verification needs exactly two sequences, got {len(seqs)}")
        reasons = [check_matched_pair(G, seqs[0], seqs[1])]
    else:
        check = {
            "harmonious": check_harmonious,
            "r-harmonious": check_r_harmonious,
            "symmetric": check_symmetric_harmonious,
        }[args.kind]
        reasons = [check(G, s) for s in seqs]
    failed = next((r for r in reasons if r is not None), None)
    if (args.format or "text") == "json":
        _emit_json({"group": canonical, "kind": args.kind, "valid": failed is None, "reason": failed})
    elif failed is None:
        print(f"ok: {args.kind} in {canonical}")
    if failed is not None:
        _err(f"not {args.kind}: {failed}")
        return EXIT_FALSE
    return EXIT_OK


def cmd_intseq(args: argparse.Namespace) -> int:
    n = args.n
    try:
        k = build_k(n)
    except UnsupportedLength as exc:
        _err(f"unsupported: {exc}")
        return EXIT_IMPOSSIBLE
    k_prime = [k[sigma(n, j)] for j in range(1, n)]
    ok = verify_matched_int(MatchedIntPair(n, tuple(k), tuple(k_prime)))
    if (args.format or "text") == "json":
        _emit_json({"n": n, "k": k, "k_prime": k_prime, "verified": ok})
    else:
        print(f"k: {format_ints(k)}")
        print(f"k': {format_ints(k_prime)}")
        print(f"verified: {'true' if ok else 'false'}")
    if not ok:
        _err(f"closed-form sequences for n={n} fail the matching conditions")
        return EXIT_FALSE
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    G, canonical = _load_group(args.group)
    try:
        if args.kind == "harmonious":
            outcome = search_harmonious(G, args.budget, workers=args.workers)
        elif args.kind == "r-harmonious":
            outcome = search_r_harmonious(G, args.budget, workers=args.workers)
        elif args.kind == "symmetric":
            outcome = search_symmetric_harmonious(G, args.budget)
        else:
            outcome = search_matched(G, args.budget)
    except HarmoniousError as exc:
        _err(f"unsupported: {exc}")
        return EXIT_IMPOSSIBLE
    if (args.format or "json") == "json":
        _emit_json({"group": canonical, "order": G.order, "kind": args.kind, **outcome.to_json(G)})
    else:
        print(f"{outcome.status.value} ({outcome.nodes_explored} nodes, budget {outcome.budget})")
        if outcome.sequence is not None:
            print(" ".join(_names(G, outcome.sequence)))
        if outcome.sequence_r is not None:
            print(" ".join(_names(G, outcome.sequence_r)))
    return {Status.FOUND: EXIT_OK, Status.NOT_EXISTS: EXIT_FALSE}.get(outcome.status, EXIT_NOT_CONSTRUCTED)


def cmd_hall_paige(args: argparse.Namespace) -> int:
    G, canonical = _load_group(args.group)
    verdict = hall_paige_check(G)
    if (args.format or "text") == "json":
        _emit_json({"group": canonical, "order": G.order, "sylow2": verdict.value, "satisfied": verdict.satisfied})
    else:
        print(verdict.value)
    return EXIT_OK if verdict.satisfied else EXIT_IMPOSSIBLE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="search node cap")
    common.add_argument(
        "--seed-order", choices=("canonical",), default=argparse.SUPPRESS, help="reserved"
    )

    parser = argparse.ArgumentParser(
        prog="harmonious",
        description="Construct, verify and search harmonious sequences in finite groups.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a certified matched pair or R-harmonious sequence")
    p.add_argument("--group", required=True)
    p.add_argument("--kind", choices=("matched", "r-harmonious"), default="matched")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check sequences read from a file")
    p.add_argument("--group", required=True)
    p.add_argument("--kind", choices=SEQUENCE_KINDS, required=True)
    p.add_argument("file", help="sequence file, construct certificate, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("intseq", parents=[common], help="closed-form matched integer sequences")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_intseq)

    p = sub.add_parser("search", parents=[common], help="exhaustive backtracking search")
    p.add_argument("--group", required=True)
    p.add_argument("--kind", choices=SEQUENCE_KINDS, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("hall-paige", parents=[common], help="classify the Sylow 2-subgroup")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_hall_paige)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.format = getattr(args, "format", None)
    args.budget = getattr(args, "budget", DEFAULT_BUDGET)
    try:
        return args.func(args)
    except InputError as exc:
        _err(f"input error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
