"""Parser for textual group descriptions.

Grammar (whitespace is ignored outside ``Table(...)``)::

    spec := atom { "x" atom }
    atom := "Z" INT | "D" INT | "SD(" spec ";" spec ";" INT {"," INT} ")" | "Table(" PATH ")"

``D`` takes the group order.  In ``SD(K;H;m1,...,mt)`` the group H must be
cyclic and K a product of t cyclic groups whose i-th generator acts on H by
multiplication by ``mi``.  Elements of an SD group get power-word names:
``x^ay^b`` when K is cyclic (x generates H), ``a^i x^j y^k`` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvalidAction, InvalidArgument
from .groups import (
    FiniteGroup,
    load_table,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_semidirect,
    multiplier_action,
)


class SpecError(InvalidArgument):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class CyclicSpec:
    n: int


@dataclass(frozen=True)
class DihedralSpec:
    order: int


@dataclass(frozen=True)
class ProductSpec:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class SemidirectSpec:
    K: "GroupSpec"
    H: "GroupSpec"
    multipliers: tuple[int, ...]


@dataclass(frozen=True)
class TableSpec:
    path: str


GroupSpec = Union[CyclicSpec, DihedralSpec, ProductSpec, SemidirectSpec, TableSpec]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, literal: str) -> bool:
        self.skip()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str) -> None:
        if not self.peek(literal):
            raise SpecError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> tuple[int, int]:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise SpecError("expected an integer", start)
        return int(self.text[start : self.pos]), start

    def spec(self) -> GroupSpec:
        node = self.atom()
        while self.peek("x"):
            self.pos += 1
            node = ProductSpec(node, self.atom())
        return node

    def atom(self) -> GroupSpec:
        self.skip()
        start = self.pos
        if self.peek("SD("):
            self.pos += 3
            K = self.spec()
            self.expect(";")
            H = self.spec()
            self.expect(";")
            mults = [self.integer()[0]]
            while self.peek(","):
                self.pos += 1
                mults.append(self.integer()[0])
            self.expect(")")
            node = SemidirectSpec(K, H, tuple(mults))
            _check_semidirect(node, start)
            return node
        if self.peek("Table("):
            self.pos += 6
            end = self.text.find(")", self.pos)
            if end < 0:
                raise SpecError("unterminated Table(", start)
            path = self.text[self.pos : end].strip()
            self.pos = end + 1
            if not path:
                raise SpecError("empty table path", start)
            return TableSpec(path)
        if self.peek("Z"):
            self.pos += 1
            n, at = self.integer()
            if n < 1:
                raise SpecError("cyclic order must be at least 1", at)
            return CyclicSpec(n)
        if self.peek("D"):
            self.pos += 1
            n, at = self.integer()
            if n < 4 or n % 2:
                raise SpecError(f"dihedral order must be even and at least 4, got {n}", at)
            return DihedralSpec(n)
        raise SpecError("expected Z, D, SD( or Table(", self.pos)


def _cyclic_factors(node: GroupSpec) -> list[int] | None:
    if isinstance(node, CyclicSpec):
        return [node.n]
    if isinstance(node, ProductSpec):
        left, right = _cyclic_factors(node.left), _cyclic_factors(node.right)
        if left is not None and right is not None:
            return left + right
    return None


def _check_semidirect(node: SemidirectSpec, at: int) -> None:
    if not isinstance(node.H, CyclicSpec):
        raise SpecError("SD needs a cyclic normal factor", at)
    factors = _cyclic_factors(node.K)
    if factors is None:
        raise SpecError("SD needs K to be a product of cyclic groups", at)
    if len(factors) != len(node.multipliers):
        raise SpecError(f"SD needs {len(factors)} multipliers, got {len(node.multipliers)}", at)
    m = node.H.n
    for order, mu in zip(factors, node.multipliers):
        if pow(mu, order, m) != 1 % m:
            raise SpecError(f"multiplier {mu} does not satisfy {mu}^{order} = 1 mod {m}", at)


def parse_group_spec(text: str) -> GroupSpec:
    p = _Parser(text)
    node = p.spec()
    p.skip()
    if p.pos != len(text):
        raise SpecError("unexpected trailing input", p.pos)
    return node


def format_group_spec(node: GroupSpec) -> str:
    if isinstance(node, CyclicSpec):
        return f"Z{node.n}"
    if isinstance(node, DihedralSpec):
        return f"D{node.order}"
    if isinstance(node, ProductSpec):
        return f"{format_group_spec(node.left)}x{format_group_spec(node.right)}"
    if isinstance(node, SemidirectSpec):
        mults = ",".join(str(m) for m in node.multipliers)
        return f"SD({format_group_spec(node.K)};{format_group_spec(node.H)};{mults})"
    return f"Table({node.path})"


_K_SYMBOLS = "xyzuvw"


def build_group(node: GroupSpec) -> FiniteGroup:
    if isinstance(node, CyclicSpec):
        return make_cyclic(node.n)
    if isinstance(node, DihedralSpec):
        return make_dihedral(node.order)
    if isinstance(node, ProductSpec):
        return make_direct_product(build_group(node.left), build_group(node.right))
    if isinstance(node, TableSpec):
        return load_table(node.path)
    factors = _cyclic_factors(node.K)
    assert factors is not None and isinstance(node.H, CyclicSpec)
    if len(factors) == 1:
        k_symbols, h_symbol = ["y"], "x"
    else:
        if len(factors) > len(_K_SYMBOLS):
            raise SpecError("too many cyclic factors in K", 0)
        k_symbols, h_symbol = list(_K_SYMBOLS[: len(factors)]), "a"
    K = make_cyclic(factors[0], k_symbols[0])
    for n, sym in zip(factors[1:], k_symbols[1:]):
        K = make_direct_product(K, make_cyclic(n, sym))
    # generator i has mixed-radix index prod(factors[i+1:])
    gens = []
    for i in range(len(factors)):
        idx = 1
        for n in factors[i + 1 :]:
            idx *= n
        gens.append(idx if factors[i] > 1 else 0)
    H = make_cyclic(node.H.n, h_symbol)
    try:
        action = multiplier_action(K, H, gens, node.multipliers)
    except InvalidAction as exc:
        raise SpecError(str(exc), 0) from exc
    return make_semidirect(K, H, action)


def group_from_spec(text: str) -> tuple[FiniteGroup, str]:
    """Build the group and return it with its canonical spec string."""
    node = parse_group_spec(text)
    return build_group(node), format_group_spec(node)
