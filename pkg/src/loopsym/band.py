"""Finite windows of infinite n-periodic upper-unitriangular matrices.

Whirls, curls, the c-transform and exact products/inverses.  Because every
matrix here is upper triangular, the top-left K x K window of a product or
inverse only depends on the top-left K x K windows of the factors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .poly import AmbientMismatchError, Poly, Ring

# Flip to False to skip the periodicity check after every operation.
CHECK_PERIODICITY = True


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class BandMatrix:
    window: tuple[tuple[Poly, ...], ...]
    period: int

    @property
    def size(self) -> int:
        return len(self.window)

    @property
    def ring(self) -> Ring:
        return self.window[0][0].ring

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        """1-based entry (i, j)."""
        i, j = ij
        return self.window[i - 1][j - 1]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.window[i - 1]

    def restrict(self, k: int) -> "BandMatrix":
        if not 1 <= k <= self.size:
            raise ShapeError(f"cannot restrict a {self.size}-window to {k}")
        return BandMatrix(tuple(row[:k] for row in self.window[:k]), self.period)

    def is_unitriangular(self) -> bool:
        for i, row in enumerate(self.window):
            for j, entry in enumerate(row):
                if j < i and not entry.is_zero():
                    return False
                if j == i and entry != 1:
                    return False
        return True

    def is_periodic(self) -> bool:
        n, K = self.period, self.size
        return all(self.window[i][j] == self.window[i + n][j + n]
                   for i in range(K - n) for j in range(K - n))

    def __mul__(self, other: "BandMatrix") -> "BandMatrix":
        return band_mul(self, other)

    def dump(self) -> str:
        cells = [[str(p) for p in row] for row in self.window]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)

    def to_json(self) -> str:
        return json.dumps({"period": self.period,
                           "rows": [[p.to_json_obj() for p in row] for row in self.window]})


def _checked(A: BandMatrix) -> BandMatrix:
    if CHECK_PERIODICITY and not A.is_periodic():
        raise AssertionError("n-periodicity violated")
    return A


def identity(ring: Ring, K: int, period: int) -> BandMatrix:
    if K < 1:
        raise ShapeError(f"window size must be >= 1, got {K}")
    zero, one = ring.zero(), ring.one()
    return BandMatrix(tuple(tuple(one if i == j else zero for j in range(K)) for i in range(K)), period)


def whirl(atoms: Sequence[Poly], K: int) -> BandMatrix:
    """Window of M(a_1, ..., a_n): ones on the diagonal, a_{(i-1 mod n)+1} at (i, i+1)."""
    if K < 1:
        raise ShapeError(f"window size must be >= 1, got {K}")
    if not atoms:
        raise ValueError("a whirl needs at least one parameter")
    ring = atoms[0].ring
    n = len(atoms)
    zero, one = ring.zero(), ring.one()
    rows = []
    for i in range(K):
        row = [zero] * K
        row[i] = one
        if i + 1 < K:
            row[i + 1] = atoms[i % n]
        rows.append(tuple(row))
    return BandMatrix(tuple(rows), n)


def c_transform(A: BandMatrix) -> BandMatrix:
    return _checked(BandMatrix(
        tuple(tuple(-p if (i + j) % 2 else p for j, p in enumerate(row))
              for i, row in enumerate(A.window)),
        A.period))


def band_mul(A: BandMatrix, B: BandMatrix) -> BandMatrix:
    if A.size != B.size:
        raise ShapeError(f"window sizes differ: {A.size} vs {B.size}")
    if A.period != B.period:
        raise ShapeError(f"periods differ: {A.period} vs {B.period}")
    if A.ring != B.ring:
        raise AmbientMismatchError(f"{A.ring} vs {B.ring}")
    K = A.size
    zero = A.ring.zero()
    rows = []
    for i in range(K):
        row = []
        for j in range(K):
            acc = zero
            # upper triangular: only i <= k <= j contributes
            for k in range(i, j + 1):
                a, b = A.window[i][k], B.window[k][j]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            row.append(acc)
        rows.append(tuple(row))
    return _checked(BandMatrix(tuple(rows), A.period))


def unitriangular_inverse(A: BandMatrix) -> BandMatrix:
    """Exact inverse by back-substitution: X[i][j] = -sum_{i<k<=j} A[i][k] X[k][j]."""
    if not A.is_unitriangular():
        raise ShapeError("inverse needs an upper-unitriangular window")
    K = A.size
    ring = A.ring
    X = [[ring.zero()] * K for _ in range(K)]
    for j in range(K):
        X[j][j] = ring.one()
        for i in range(j - 1, -1, -1):
            acc = ring.zero()
            for k in range(i + 1, j + 1):
                a = A.window[i][k]
                if not a.is_zero() and not X[k][j].is_zero():
                    acc = acc + a * X[k][j]
            X[i][j] = -acc
    return _checked(BandMatrix(tuple(tuple(r) for r in X), A.period))


def curl(atoms: Sequence[Poly], K: int) -> BandMatrix:
    """Window of N(a_1, ..., a_n) = M(a_1, ..., a_n)^{-c}."""
    return c_transform(unitriangular_inverse(whirl(atoms, K)))


def product(mats: Sequence[BandMatrix], ring: Ring | None = None, K: int | None = None,
            period: int | None = None) -> BandMatrix:
    """Ordered product; the empty product is the identity window."""
    if not mats:
        if ring is None or K is None or period is None:
            raise ValueError("empty product needs ring, K and period")
        return identity(ring, K, period)
    out = mats[0]
    for M in mats[1:]:
        out = band_mul(out, M)
    return out


def flow_atoms(ring: Ring, flow: int) -> list[Poly]:
    return [ring.var(flow, c) for c in range(1, ring.n + 1)]


def window_for(ring: Ring, k_max: int) -> int:
    return k_max + ring.n + 1


def whirl_product(ring: Ring, K: int) -> BandMatrix:
    """A = M(x_1) M(x_2) ... M(x_m); A[i, i+k] = e_k^(i)."""
    return product([whirl(flow_atoms(ring, f), K) for f in range(1, ring.m + 1)])


def curl_product(ring: Ring, K: int) -> BandMatrix:
    """B = N(x_m) ... N(x_1); B[i, i+k] = h_k^(i)."""
    return product([curl(flow_atoms(ring, f), K) for f in range(ring.m, 0, -1)])


def loop_e_from_matrix(ring: Ring, k: int, r: int, K: int | None = None) -> Poly:
    K = K or window_for(ring, k)
    row = (r - 1) % ring.n + 1
    return whirl_product(ring, K)[row, row + k]


def loop_h_from_matrix(ring: Ring, k: int, r: int, K: int | None = None) -> Poly:
    K = K or window_for(ring, k)
    row = (r - 1) % ring.n + 1
    return curl_product(ring, K)[row, row + k]
