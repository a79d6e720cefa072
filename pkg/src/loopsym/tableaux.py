"""Partitions, semistandard tableaux, loop Schur functions and Jacobi-Trudi."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .generators import loop_h
from .linalg import poly_det
from .poly import Poly, Ring


class Partition(tuple):
    """Weakly decreasing tuple of positive parts (trailing zeros trimmed)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def length(self) -> int:
        return len(self)

    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """lambda_i (1-based), 0 past the end."""
        return self[i - 1] if i <= len(self) else 0

    def padded(self, m: int) -> tuple[int, ...]:
        if len(self) > m:
            raise ValueError(f"{tuple(self)} has more than {m} parts")
        return tuple(self) + (0,) * (m - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))

    def __repr__(self):
        return f"Partition({tuple(self)})"


def partitions_of(total: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total

    def rec(rest, cap, parts):
        if rest == 0:
            yield Partition(parts)
            return
        if max_parts is not None and len(parts) >= max_parts:
            return
        for p in range(min(rest, cap), 0, -1):
            yield from rec(rest - p, p, parts + [p])

    yield from rec(total, max_part, [])


def partitions_up_to(max_size: int, max_parts: int | None = None) -> list[Partition]:
    out = []
    for s in range(max_size + 1):
        out.extend(partitions_of(s, max_parts))
    return out


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("row lengths do not match the shape")

    def is_semistandard(self) -> bool:
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                return False
        return True

    def reading_word(self) -> tuple[int, ...]:
        return tuple(k for r in self.rows for k in r)

    def content(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for k in self.reading_word():
            out[k] = out.get(k, 0) + 1
        return out

    def boxes(self) -> Iterator[tuple[int, int, int]]:
        """(row i, column j, entry) with 1-based coordinates."""
        for i, r in enumerate(self.rows, start=1):
            for j, k in enumerate(r, start=1):
                yield i, j, k


def enumerate_ssyt(shape: Sequence[int], m: int) -> Iterator[Tableau]:
    """Stream every semistandard tableau of ``shape`` with entries in 1..m,
    in lexicographic order of the row reading word."""
    shape = Partition(shape)
    if len(shape) > m:
        return
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    col_len = shape.conjugate()
    grid = [[0] * length for length in shape]

    def fill(pos):
        if pos == len(cells):
            yield Tableau(shape, tuple(tuple(r) for r in grid))
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # leave room for the strictly increasing entries below in this column
        hi = m - (col_len[j] - 1 - i)
        for v in range(lo, hi + 1):
            grid[i][j] = v
            yield from fill(pos + 1)
        grid[i][j] = 0

    yield from fill(0)


def colored_weight(ring: Ring, T: Tableau, r: int) -> Poly:
    """Product over boxes (i, j) holding k of x_k^(r + i - j)."""
    exps: dict = {}
    for i, j, k in T.boxes():
        v = ring.varid(k, r + i - j)
        exps[v] = exps.get(v, 0) + 1
    return ring.monomial(exps)


def loop_schur(ring: Ring, shape: Sequence[int], r: int, m: int | None = None) -> Poly:
    """s_shape^(r)(x_1, ..., x_m) as a sum of colored tableau weights."""
    m = ring.m if m is None else m
    terms: dict[int, int] = {}
    for T in enumerate_ssyt(shape, m):
        (k, _), = colored_weight(ring, T, r).raw_terms.items()
        terms[k] = terms.get(k, 0) + 1
    return Poly(ring, terms)


def jacobi_trudi_matrix(ring: Ring, shape: Sequence[int], r: int) -> list[list[Poly]]:
    lam = Partition(shape)
    ell = len(lam)
    return [[loop_h(ring, lam[i - 1] - i + j, r - lam[i - 1] + i)
             for j in range(1, ell + 1)] for i in range(1, ell + 1)]


def jacobi_trudi(ring: Ring, shape: Sequence[int], r: int) -> Poly:
    """det(h_{lambda_i - i + j}^(r - lambda_i + i)) over all m flows."""
    return poly_det(jacobi_trudi_matrix(ring, shape, r), ring)
