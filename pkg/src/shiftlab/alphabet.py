"""Alphabets: plain finite symbol sets and finite Z/m-modules.

Symbols are indexed by integers everywhere inside the engine.  For a module
alphabet of rank k over Z/m the index of a vector is its big-endian mixed
radix value, so symbol order is deterministic and vector<->index conversion
is cheap.  Blocks are tuples of symbol indices aligned with the canonical
order of their window.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import caps, modlin
from .errors import ShiftLabError
from .modlin import LinMap, Submodule
from .universe import FiniteWindow


@dataclass(frozen=True)
class SetAlphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise ShiftLabError("alphabet must have at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise ShiftLabError("alphabet symbols must be distinct")

    @property
    def size(self) -> int:
        return len(self.symbols)

    def symbol_name(self, index: int) -> str:
        return self.symbols[index]

    def symbol_index(self, name: str) -> int:
        try:
            return self.symbols.index(name)
        except ValueError as exc:
            raise ShiftLabError(f"unknown symbol {name!r}") from exc


@dataclass(frozen=True)
class ModuleAlphabet:
    """(Z/modulus)^rank with componentwise operations."""

    modulus: int
    rank: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ShiftLabError("modulus must be >= 2")
        if not 1 <= self.rank <= 16:
            raise ShiftLabError("rank must be between 1 and 16")
        if self.modulus > 1 << 16:
            raise ShiftLabError("modulus must be <= 2^16")

    @property
    def size(self) -> int:
        return self.modulus ** self.rank

    def vector(self, index: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.rank):
            index, d = divmod(index, self.modulus)
            digits.append(d)
        return tuple(reversed(digits))

    def index(self, vector: Sequence[int]) -> int:
        value = 0
        for d in vector:
            value = value * self.modulus + (d % self.modulus)
        return value

    @property
    def zero_index(self) -> int:
        return 0

    def add(self, i: int, j: int) -> int:
        a, b = self.vector(i), self.vector(j)
        return self.index(tuple((x + y) % self.modulus for x, y in zip(a, b)))

    def neg(self, i: int) -> int:
        return self.index(tuple((-x) % self.modulus for x in self.vector(i)))

    def symbol_name(self, index: int) -> str:
        return "".join(str(d) for d in self.vector(index)) if self.modulus <= 10 else (
            ":".join(str(d) for d in self.vector(index))
        )

    def symbol_index(self, name: str) -> int:
        parts = name.split(":") if ":" in name else list(name)
        if len(parts) != self.rank:
            raise ShiftLabError(f"symbol {name!r} does not have rank {self.rank}")
        return self.index(tuple(int(p) for p in parts))


Alphabet = Union[SetAlphabet, ModuleAlphabet]


def is_module(alphabet: Alphabet) -> bool:
    return isinstance(alphabet, ModuleAlphabet)


@dataclass(frozen=True)
class Block:
    """A finite pattern: one symbol index per window position."""

    window: FiniteWindow
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.window):
            raise ShiftLabError("block values must cover the window exactly")

    def value_at(self, g) -> int:
        return self.values[self.window.index(g)]


def value_tuples(alphabet: Alphabet, width: int) -> Iterable[tuple[int, ...]]:
    caps.guard(alphabet.size ** width, "block enumeration")
    return itertools.product(range(alphabet.size), repeat=width)


def enumerate_blocks(alphabet: Alphabet, window: FiniteWindow) -> list[Block]:
    """All blocks on the window, in canonical (lexicographic index) order."""
    return [Block(window, values) for values in value_tuples(alphabet, len(window))]


def block_vector(alphabet: ModuleAlphabet, values: Sequence[int]) -> tuple[int, ...]:
    """Concatenated coefficient vector of a block over a module alphabet."""
    out: list[int] = []
    for v in values:
        out.extend(alphabet.vector(v))
    return tuple(out)


def vector_block(alphabet: ModuleAlphabet, vec: Sequence[int]) -> tuple[int, ...]:
    k = alphabet.rank
    if len(vec) % k:
        raise ShiftLabError("vector length is not a multiple of the alphabet rank")
    return tuple(alphabet.index(vec[i : i + k]) for i in range(0, len(vec), k))


def blocks_to_submodule(
    alphabet: ModuleAlphabet, blocks: Iterable[Sequence[int]], width: int
) -> Submodule | None:
    """Reconstruct the block set as a submodule, or None when it is not one."""
    vectors = [block_vector(alphabet, b) for b in blocks]
    sub = modlin.span(alphabet.modulus, alphabet.rank * width, vectors)
    if sub.size() != len(vectors):
        return None
    return sub


def submodule_blocks(alphabet: ModuleAlphabet, sub: Submodule) -> frozenset[tuple[int, ...]]:
    if sub.ambient % alphabet.rank:
        raise ShiftLabError("submodule ambient rank is not a block length multiple")
    return frozenset(vector_block(alphabet, v) for v in modlin.elements(sub))


def diagonal(alphabet: ModuleAlphabet, n: int) -> Submodule:
    """Tuples with equal components, as a submodule of A^n."""
    if n < 2:
        raise ShiftLabError("diagonal needs n >= 2")
    k = alphabet.rank
    gens = []
    for j in range(k):
        e = [0] * k
        e[j] = 1
        gens.append(tuple(e) * n)
    return modlin.span(alphabet.modulus, k * n, gens)


@dataclass(frozen=True)
class DirectSum:
    """A (+) B with the coordinate projections.

    For module alphabets this is the module direct sum; for set alphabets the
    cartesian product with paired symbol names.
    """

    alphabet: Alphabet
    left: Alphabet
    right: Alphabet

    def split(self, index: int) -> tuple[int, int]:
        if is_module(self.alphabet):
            vec = self.alphabet.vector(index)
            return (
                self.left.index(vec[: self.left.rank]),
                self.right.index(vec[self.left.rank :]),
            )
        return divmod(index, self.right.size)

    def join(self, left_index: int, right_index: int) -> int:
        if is_module(self.alphabet):
            vec = self.left.vector(left_index) + self.right.vector(right_index)
            return self.alphabet.index(vec)
        return left_index * self.right.size + right_index

    def project_left(self) -> LinMap:
        return _slot_projection(self, 0)

    def project_right(self) -> LinMap:
        return _slot_projection(self, 1)


def _slot_projection(ds: DirectSum, slot: int) -> LinMap:
    if not is_module(ds.alphabet):
        raise ShiftLabError("linear projections exist for module alphabets only")
    ka, kb = ds.left.rank, ds.right.rank
    total = ka + kb
    offset, rank = (0, ka) if slot == 0 else (ka, kb)
    rows = tuple(
        tuple(1 if j == offset + i else 0 for j in range(total)) for i in range(rank)
    )
    return LinMap(ds.alphabet.modulus, total, rank, rows)


def direct_sum(a: Alphabet, b: Alphabet) -> DirectSum:
    if is_module(a) and is_module(b):
        if a.modulus != b.modulus:
            raise ShiftLabError("direct sum needs matching moduli")
        return DirectSum(ModuleAlphabet(a.modulus, a.rank + b.rank), a, b)
    if is_module(a) or is_module(b):
        raise ShiftLabError("cannot mix set and module alphabets in a direct sum")
    names = tuple(f"{x}|{y}" for x in a.symbols for y in b.symbols)
    return DirectSum(SetAlphabet(names), a, b)


def all_submodules(modulus: int, ambient: int, limit: int = 200_000) -> list[Submodule]:
    """Every submodule of (Z/modulus)^ambient, by closure from single vectors.

    Breadth-first over the lattice: repeatedly adjoin one vector to a known
    submodule and renormalize.  Exponential in ambient; intended for the
    small ambients the axiom test suite uses.
    """
    vectors = list(itertools.product(range(modulus), repeat=ambient))
    zero = modlin.zero_submodule(modulus, ambient)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for sub in frontier:
            for v in vectors:
                if any(v) and not modlin.member(sub, v):
                    grown = modlin.span(modulus, ambient, list(sub.rows) + [v])
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
                        if len(seen) > limit:
                            raise ShiftLabError("submodule lattice larger than limit")
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s.rows), s.rows))
