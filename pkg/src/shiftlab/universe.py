"""Monoid universes, finite windows, window products, and exhaustions.

Three universes are supported, each with a decidable word problem and a
canonical element encoding: the integers Z and the nonnegative integers N
(elements are ints, the product is addition, the identity is 0), and the
free monoid on r generators (elements are tuples of generator indices, the
product is concatenation, the identity is the empty tuple).  Windows are
immutable value types with a deterministic total order on their elements,
so block indexing is reproducible across runs.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ShiftLabError, UniverseMismatchError, UnsupportedUniverseError

KIND_Z = "Z"
KIND_N = "N"
KIND_FREE = "free"


@dataclass(frozen=True)
class Universe:
    kind: str
    rank: int = 0

    def __post_init__(self):
        if self.kind not in (KIND_Z, KIND_N, KIND_FREE):
            raise ShiftLabError(f"unknown universe kind {self.kind!r}")
        if self.kind == KIND_FREE and self.rank < 1:
            raise ShiftLabError("free monoid rank must be >= 1")
        if self.kind != KIND_FREE and self.rank != 0:
            raise ShiftLabError(f"universe {self.kind} takes no rank")

    @property
    def is_line(self) -> bool:
        """True when elements are integers (Z or N)."""
        return self.kind in (KIND_Z, KIND_N)

    @property
    def onesided(self) -> bool:
        return self.kind == KIND_N

    def identity(self):
        return () if self.kind == KIND_FREE else 0

    def multiply(self, g, h):
        """The monoid product g*h (addition on Z/N, concatenation on free)."""
        if self.kind == KIND_FREE:
            return g + h
        return g + h

    def contains(self, g) -> bool:
        if self.kind == KIND_Z:
            return isinstance(g, int)
        if self.kind == KIND_N:
            return isinstance(g, int) and g >= 0
        return isinstance(g, tuple) and all(
            isinstance(c, int) and 0 <= c < self.rank for c in g
        )

    def sort_key(self, g):
        if self.kind == KIND_FREE:
            return (len(g), g)
        return g

    def generator_names(self) -> tuple[str, ...]:
        if self.kind != KIND_FREE:
            raise UnsupportedUniverseError("only free monoids have generators")
        if self.rank > 26:
            return tuple(f"g{i}" for i in range(self.rank))
        return tuple(string.ascii_lowercase[: self.rank])

    def element_str(self, g) -> str:
        if self.kind == KIND_FREE:
            if not g:
                return "e"
            names = self.generator_names()
            return ".".join(names[c] for c in g)
        return str(g)

    def parse_element(self, text: str):
        text = text.strip()
        if self.kind == KIND_FREE:
            if text in ("e", ""):
                return ()
            names = {name: i for i, name in enumerate(self.generator_names())}
            try:
                return tuple(names[part] for part in text.split("."))
            except KeyError as exc:
                raise ShiftLabError(f"unknown generator in {text!r}") from exc
        value = int(text)
        if self.kind == KIND_N and value < 0:
            raise ShiftLabError(f"element {value} is negative but the universe is N")
        return value

    def ball(self, radius: int) -> tuple:
        """Canonical radius ball: [-r, r] on Z, [0, r] on N, words of length <= r."""
        if radius < 0:
            raise ShiftLabError("radius must be >= 0")
        if self.kind == KIND_Z:
            return tuple(range(-radius, radius + 1))
        if self.kind == KIND_N:
            return tuple(range(radius + 1))
        words = [()]
        frontier = [()]
        for _ in range(radius):
            frontier = [w + (c,) for w in frontier for c in range(self.rank)]
            words.extend(frontier)
        return tuple(sorted(words, key=self.sort_key))


UNIVERSE_Z = Universe(KIND_Z)
UNIVERSE_N = Universe(KIND_N)


def free_universe(rank: int) -> Universe:
    return Universe(KIND_FREE, rank)


@dataclass(frozen=True)
class FiniteWindow:
    universe: Universe
    elements: tuple = field(default=())

    def __post_init__(self):
        canon = tuple(sorted(set(self.elements), key=self.universe.sort_key))
        for g in canon:
            if not self.universe.contains(g):
                raise ShiftLabError(
                    f"element {g!r} does not belong to universe {self.universe.kind}"
                )
        object.__setattr__(self, "elements", canon)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def index(self, g) -> int:
        return self.elements.index(g)

    def is_interval(self) -> bool:
        if not self.universe.is_line or not self.elements:
            return False
        lo, hi = self.elements[0], self.elements[-1]
        return len(self.elements) == hi - lo + 1

    def span(self) -> int:
        """Width of the interval hull (line universes only)."""
        if not self.universe.is_line:
            raise UnsupportedUniverseError("span is defined for Z/N windows only")
        if not self.elements:
            return 0
        return self.elements[-1] - self.elements[0] + 1

    def hull(self) -> "FiniteWindow":
        """Interval hull (line universes only)."""
        if not self.universe.is_line:
            raise UnsupportedUniverseError("hull is defined for Z/N windows only")
        if not self.elements:
            return self
        lo, hi = self.elements[0], self.elements[-1]
        return FiniteWindow(self.universe, tuple(range(lo, hi + 1)))

    def translate(self, t: int) -> "FiniteWindow":
        if not self.universe.is_line:
            raise UnsupportedUniverseError("translate is defined for Z/N windows only")
        return FiniteWindow(self.universe, tuple(g + t for g in self.elements))

    def union(self, other: "FiniteWindow") -> "FiniteWindow":
        _same_universe(self, other)
        return FiniteWindow(self.universe, self.elements + other.elements)

    def __str__(self):
        if self.universe.is_line and self.is_interval() and len(self) > 1:
            return f"{self.elements[0]}..{self.elements[-1]}"
        inner = ",".join(self.universe.element_str(g) for g in self.elements)
        return "{" + inner + "}"


def window(universe: Universe, elements: Iterable) -> FiniteWindow:
    return FiniteWindow(universe, tuple(elements))


def interval(universe: Universe, lo: int, hi: int) -> FiniteWindow:
    if not universe.is_line:
        raise UnsupportedUniverseError("interval windows require Z or N")
    return FiniteWindow(universe, tuple(range(lo, hi + 1)))


def _same_universe(e: FiniteWindow, f: FiniteWindow) -> None:
    if e.universe != f.universe:
        raise UniverseMismatchError(
            f"windows over {e.universe.kind} and {f.universe.kind} cannot be combined"
        )


def window_product(e: FiniteWindow, f: FiniteWindow) -> FiniteWindow:
    """The product window {xy : x in E, y in F}; the sumset on Z and N."""
    _same_universe(e, f)
    u = e.universe
    return FiniteWindow(u, tuple(u.multiply(x, y) for x in e for y in f))


@dataclass(frozen=True)
class Exhaustion:
    """Increasing window sequence E_0 <= E_1 <= ... whose union covers the universe.

    The base radius is chosen by the caller so that E_0 already contains a
    given window (typically a memory set); see :func:`covering`.
    """

    universe: Universe
    base_radius: int = 0

    def __post_init__(self):
        if self.base_radius < 0:
            raise ShiftLabError("base radius must be >= 0")

    def window(self, n: int) -> FiniteWindow:
        if n < 0:
            raise ShiftLabError("exhaustion index must be >= 0")
        return FiniteWindow(self.universe, self.universe.ball(n + self.base_radius))


def covering(win: FiniteWindow) -> Exhaustion:
    """The exhaustion with the least base radius whose E_0 contains `win`."""
    u = win.universe
    if u.kind == KIND_Z:
        radius = max((abs(g) for g in win), default=0)
    elif u.kind == KIND_N:
        radius = max(win.elements, default=0)
    else:
        radius = max((len(g) for g in win), default=0)
    return Exhaustion(u, radius)
