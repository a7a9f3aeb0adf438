"""Exact linear algebra over Z/m: Howell-form submodules and linear maps.

Submodules of (Z/m)^k are stored as the row space of a matrix in Howell
normal form.  Howell form (rather than Hermite) is the canonical row-space
form when m has zero divisors; for prime m it degenerates to reduced row
echelon form.  Canonicality means two submodules are equal iff their
stored matrices are identical, which is what the chain-stabilization
machinery needs for its equality tests.

Maps act on column vectors: ``apply(f, v) == matrix @ v``.  Row spaces and
column maps therefore meet through transposes in a few places; the helpers
keep that bookkeeping in one spot.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator, Sequence

from . import caps


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with s*a + t*b == g == gcd(a, b), computed over the integers."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _unit_for(a: int, m: int) -> int:
    """A unit u mod m with u*a == gcd(a, m) mod m (the minimal representative)."""
    a %= m
    if a == 0:
        return 1
    g = gcd(a, m)
    b = a // g
    step = m // g
    # b is invertible mod m/g; lift the inverse to a unit mod m.
    _, inv, _ = _xgcd(b, step)
    inv %= step
    for t in range(g):
        candidate = inv + t * step
        if gcd(candidate % m, m) == 1:
            return candidate % m
    raise AssertionError("no unit lift found")  # unreachable for valid m


def _howell_with_transform(
    rows: Sequence[Sequence[int]], m: int, width: int
) -> tuple[list[list[int]], list[list[int]]]:
    """Howell form of the row space plus the kernel of the row-combination map.

    Returns (howell_rows, kernel_rows) where kernel_rows generate
    {c : c @ rows == 0 mod m}.
    """
    work = [[int(x) % m for x in row] for row in rows]
    n0 = len(work)
    trans = [[1 if i == j else 0 for j in range(n0)] for i in range(n0)]
    r = 0
    for c in range(width):
        j = r
        while j < len(work) and work[j][c] % m == 0:
            j += 1
        if j == len(work):
            continue
        if j > r:
            work[r], work[j] = work[j], work[r]
            trans[r], trans[j] = trans[j], trans[r]
        u = _unit_for(work[r][c], m)
        if u != 1:
            work[r] = [(u * x) % m for x in work[r]]
            trans[r] = [(u * x) % m for x in trans[r]]
        for i in range(r + 1, len(work)):
            if work[i][c] % m:
                a, b = work[r][c], work[i][c]
                g, s, t = _xgcd(a, b)
                u2, v2 = -(b // g), a // g
                new_r = [(s * x + t * y) % m for x, y in zip(work[r], work[i])]
                new_i = [(u2 * x + v2 * y) % m for x, y in zip(work[r], work[i])]
                work[r], work[i] = new_r, new_i
                new_r = [(s * x + t * y) % m for x, y in zip(trans[r], trans[i])]
                new_i = [(u2 * x + v2 * y) % m for x, y in zip(trans[r], trans[i])]
                trans[r], trans[i] = new_r, new_i
        b = work[r][c]
        for i in range(r):
            if work[i][c] >= b:
                q = work[i][c] // b
                work[i] = [(x - q * y) % m for x, y in zip(work[i], work[r])]
                trans[i] = [(x - q * y) % m for x, y in zip(trans[i], trans[r])]
        ann = m // gcd(b, m)
        if ann % m != 0:
            work.append([(ann * x) % m for x in work[r]])
            trans.append([(ann * x) % m for x in trans[r]])
        r += 1
    howell_rows = [row for row in work if any(row)]
    # Transform rows stay coefficient vectors over the n0 original rows even
    # for appended annihilator rows, so zero work rows give kernel generators.
    kernel_rows = [t for row, t in zip(work, trans) if not any(row)]
    return howell_rows, kernel_rows


@dataclass(frozen=True)
class Submodule:
    """Row space of a Howell-form matrix inside (Z/m)^ambient."""

    modulus: int
    ambient: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")

    @property
    def is_zero(self) -> bool:
        return not self.rows

    def size(self) -> int:
        """Number of elements, from the pivot entries of the Howell form."""
        total = 1
        for row in self.rows:
            pivot = next(x for x in row if x)
            total *= self.modulus // gcd(pivot, self.modulus)
        return total

    def __str__(self):
        if not self.rows:
            return f"<0> in (Z/{self.modulus})^{self.ambient}"
        body = ";".join(",".join(str(x) for x in row) for row in self.rows)
        return f"<{body}> in (Z/{self.modulus})^{self.ambient}"


def span(modulus: int, ambient: int, vectors: Iterable[Sequence[int]]) -> Submodule:
    """The submodule generated by `vectors`, in canonical Howell form."""
    rows = [list(v) for v in vectors]
    for row in rows:
        if len(row) != ambient:
            raise ValueError(f"vector of length {len(row)} in ambient rank {ambient}")
    howell_rows, _ = _howell_with_transform(rows, modulus, ambient)
    return Submodule(modulus, ambient, tuple(tuple(r) for r in howell_rows))


def zero_submodule(modulus: int, ambient: int) -> Submodule:
    return Submodule(modulus, ambient, ())


def full_submodule(modulus: int, ambient: int) -> Submodule:
    rows = tuple(
        tuple(1 if i == j else 0 for j in range(ambient)) for i in range(ambient)
    )
    return Submodule(modulus, ambient, rows)


def _pivot_col(row: Sequence[int]) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    raise ValueError("zero row has no pivot")


def _reduce_against(v: Sequence[int], sub: Submodule) -> tuple[list[int], list[int]]:
    """Top-down reduction of v against the Howell rows; returns (residual, coeffs)."""
    m = sub.modulus
    v = [int(x) % m for x in v]
    coeffs = [0] * len(sub.rows)
    for i, row in enumerate(sub.rows):
        p = _pivot_col(row)
        if v[p] % row[p] == 0:
            q = v[p] // row[p]
            if q:
                v = [(x - q * y) % m for x, y in zip(v, row)]
                coeffs[i] = q % m
    return v, coeffs


def member(sub: Submodule, v: Sequence[int]) -> bool:
    if len(v) != sub.ambient:
        raise ValueError("vector rank does not match ambient rank")
    residual, _ = _reduce_against(v, sub)
    return not any(residual)


def coordinates(sub: Submodule, v: Sequence[int]) -> list[int] | None:
    """Coefficients over the Howell rows expressing v, or None when v is outside."""
    residual, coeffs = _reduce_against(v, sub)
    return None if any(residual) else coeffs


def is_subset(inner: Submodule, outer: Submodule) -> bool:
    return all(member(outer, row) for row in inner.rows)


def elements(sub: Submodule) -> Iterator[tuple[int, ...]]:
    """All elements (deduplicated); guarded by the global block cap."""
    m = sub.modulus
    caps.guard(m ** len(sub.rows), "submodule element enumeration")
    seen = set()
    for coeffs in itertools.product(range(m), repeat=len(sub.rows)):
        v = [0] * sub.ambient
        for c, row in zip(coeffs, sub.rows):
            if c:
                v = [(x + c * y) % m for x, y in zip(v, row)]
        t = tuple(v)
        if t not in seen:
            seen.add(t)
            yield t


@dataclass(frozen=True)
class LinMap:
    """Linear map (Z/m)^src -> (Z/m)^dst given by a dst x src matrix on columns."""

    modulus: int
    src: int
    dst: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != self.dst or any(len(r) != self.src for r in self.matrix):
            raise ValueError("matrix shape does not match declared ranks")
        object.__setattr__(
            self,
            "matrix",
            tuple(tuple(x % self.modulus for x in row) for row in self.matrix),
        )


def linmap(modulus: int, matrix: Sequence[Sequence[int]], src: int | None = None) -> LinMap:
    rows = [list(r) for r in matrix]
    dst = len(rows)
    if src is None:
        if not rows:
            raise ValueError("cannot infer source rank from an empty matrix")
        src = len(rows[0])
    return LinMap(modulus, src, dst, tuple(tuple(r) for r in rows))


def apply_map(f: LinMap, v: Sequence[int]) -> tuple[int, ...]:
    if len(v) != f.src:
        raise ValueError("vector rank does not match map source rank")
    m = f.modulus
    return tuple(sum(a * b for a, b in zip(row, v)) % m for row in f.matrix)


def apply_to_rows(f: LinMap, rows: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    return [apply_map(f, row) for row in rows]


def compose_maps(outer: LinMap, inner: LinMap) -> LinMap:
    if inner.dst != outer.src or inner.modulus != outer.modulus:
        raise ValueError("maps are not composable")
    m = outer.modulus
    matrix = tuple(
        tuple(
            sum(outer.matrix[i][k] * inner.matrix[k][j] for k in range(inner.dst)) % m
            for j in range(inner.src)
        )
        for i in range(outer.dst)
    )
    return LinMap(m, inner.src, outer.dst, matrix)


def image(f: LinMap) -> Submodule:
    """The column space of f, i.e. {f(v)}, as a submodule of the target."""
    cols = [[f.matrix[i][j] for i in range(f.dst)] for j in range(f.src)]
    return span(f.modulus, f.dst, cols)


def kernel(f: LinMap) -> Submodule:
    """{v : f(v) == 0}, from the transform rows of the Howell computation."""
    transposed = [[f.matrix[i][j] for i in range(f.dst)] for j in range(f.src)]
    _, kernel_rows = _howell_with_transform(transposed, f.modulus, f.dst)
    return span(f.modulus, f.src, kernel_rows)


def graph_map(f: LinMap) -> Submodule:
    """The graph {(v, f(v))} as a submodule of (Z/m)^(src+dst)."""
    gens = []
    for j in range(f.src):
        e = [0] * f.src
        e[j] = 1
        gens.append(tuple(e) + apply_map(f, e))
    return span(f.modulus, f.src + f.dst, gens)


def preimage(f: LinMap, target: Submodule) -> Submodule:
    """{v : f(v) in target}."""
    if target.ambient != f.dst or target.modulus != f.modulus:
        raise ValueError("target does not live in the map's codomain")
    m = f.modulus
    t = len(target.rows)
    # Kernel of (v, c) |-> f(v) - c @ target_rows, projected onto v.
    combined = tuple(
        tuple(f.matrix[i]) + tuple((-target.rows[j][i]) % m for j in range(t))
        for i in range(f.dst)
    )
    big = LinMap(m, f.src + t, f.dst, combined)
    ker = kernel(big)
    return project(ker, range(f.src))


def project(sub: Submodule, coords: Iterable[int]) -> Submodule:
    coords = list(coords)
    for c in coords:
        if not 0 <= c < sub.ambient:
            raise ValueError(f"coordinate {c} outside ambient rank {sub.ambient}")
    rows = [[row[c] for c in coords] for row in sub.rows]
    return span(sub.modulus, len(coords), rows)


def intersect(a: Submodule, b: Submodule) -> Submodule:
    if (a.modulus, a.ambient) != (b.modulus, b.ambient):
        raise ValueError("submodules live in different ambient modules")
    if not a.rows:
        return a
    # x in a is c @ a.rows; keep the coefficient vectors whose image lies in b.
    inclusion = LinMap(
        a.modulus,
        len(a.rows),
        a.ambient,
        tuple(tuple(a.rows[i][j] for i in range(len(a.rows))) for j in range(a.ambient)),
    )
    coeffs = preimage(inclusion, b)
    vectors = [apply_map(inclusion, row) for row in coeffs.rows]
    return span(a.modulus, a.ambient, vectors)


def module_sum(a: Submodule, b: Submodule) -> Submodule:
    if (a.modulus, a.ambient) != (b.modulus, b.ambient):
        raise ValueError("submodules live in different ambient modules")
    return span(a.modulus, a.ambient, list(a.rows) + list(b.rows))


def solve_columns(
    x_rows: Sequence[Sequence[int]],
    y_rows: Sequence[Sequence[int]],
    modulus: int,
    width_x: int,
    width_y: int,
) -> list[list[int]] | None:
    """Solve X @ W = Y for W over Z/m, where X is s x width_x and Y is s x width_y.

    Returns W as a width_x x width_y row list, or None when no solution
    exists.  Used to express a left-inverse rule as a matrix once its graph
    is known to be functional.
    """
    s = len(x_rows)
    r, c = width_x, width_y
    if len(y_rows) != s:
        raise ValueError("X and Y must have the same number of rows")
    if s == 0:
        return [[0] * c for _ in range(r)]
    # Row-vector view: w @ X^T = y^T per column of Y.  Augment X^T with an
    # identity so every Howell row carries the combination that produced it.
    xt = [[x_rows[i][j] for i in range(s)] for j in range(r)]
    augmented = [list(row) + [1 if i == j else 0 for j in range(r)] for i, row in enumerate(xt)]
    aug_rows, _ = _howell_with_transform(augmented, modulus, s + r)
    reduced = Submodule(
        modulus,
        s,
        tuple(tuple(row[:s]) for row in aug_rows if any(row[:s])),
    )
    carriers = [tuple(row[s:]) for row in aug_rows if any(row[:s])]
    w_cols = []
    for j in range(c):
        target = [y_rows[i][j] for i in range(s)]
        coeffs = coordinates(reduced, target)
        if coeffs is None:
            return None
        w = [0] * r
        for coef, carrier in zip(coeffs, carriers):
            if coef:
                w = [(a + coef * b) % modulus for a, b in zip(w, carrier)]
        w_cols.append(w)
    return [[w_cols[j][i] for j in range(c)] for i in range(r)]


@dataclass(frozen=True)
class ChainResult:
    value: Submodule
    index: int
    stabilized: bool


def chain_stabilize(
    chain: Iterable[Submodule],
    cap: int = 64,
    confirm: int = 1,
) -> ChainResult:
    """First stabilized value of a weakly decreasing submodule chain.

    Returns the first S_r equal to its next `confirm` successors, together
    with r.  Consecutive equality is not a sound global stopping rule in
    general; call sites that need soundness cross-check against the exact
    graph computation, and this helper exists to mirror and test the chain
    mechanism itself.  When the cap is hit the last value is returned with
    ``stabilized=False``.
    """
    it = iter(chain)
    previous = None
    streak = 0
    index = -1
    last = None
    for step in range(cap + 1):
        try:
            current = next(it)
        except StopIteration:
            break
        if previous is not None and not is_subset(current, previous):
            raise ValueError("chain is not weakly decreasing")
        if previous is not None and current == previous:
            streak += 1
            if streak >= confirm:
                return ChainResult(previous, index, True)
        else:
            streak = 0
            index = step
        previous = current
        last = current
    if last is None:
        raise ValueError("empty chain")
    return ChainResult(last, index, False)


def parse_matrix(text: str) -> list[list[int]]:
    """Rows separated by semicolons, entries by commas: ``1,1;0,1``."""
    rows = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        rows.append([int(x) for x in part.split(",")])
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError(f"ragged matrix {text!r}")
    return rows


def render_matrix(rows: Iterable[Sequence[int]]) -> str:
    return ";".join(",".join(str(x) for x in row) for row in rows)
