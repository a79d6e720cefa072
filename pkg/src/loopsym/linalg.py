"""Determinants of polynomial and rational-function matrices."""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .poly import Poly, RatFn, Ring

LEIBNIZ_MAX = 6


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows: Sequence[Sequence[Poly]], ring: Ring) -> Poly:
    size = len(rows)
    total = ring.zero()
    for perm in permutations(range(size)):
        term = None
        for i, j in enumerate(perm):
            entry = rows[i][j]
            if entry.is_zero():
                term = None
                break
            term = entry if term is None else term * entry
        else:
            if term is None:
                term = ring.one()
            total = total + (term if permutation_sign(perm) > 0 else -term)
    return total


def bareiss_det(rows: Sequence[Sequence[Poly]], ring: Ring) -> Poly:
    """Fraction-free elimination; every division below is exact."""
    a = [list(r) for r in rows]
    size = len(a)
    if size == 0:
        return ring.one()
    sign = 1
    prev = ring.one()
    for k in range(size - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, size):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev)
        prev = a[k][k]
    return a[-1][-1] if sign > 0 else -a[-1][-1]


def poly_det(rows: Sequence[Sequence[Poly]], ring: Ring) -> Poly:
    if len(rows) == 0:
        return ring.one()
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if len(rows) <= LEIBNIZ_MAX:
        return leibniz_det(rows, ring)
    return bareiss_det(rows, ring)


def ratfn_det(rows: Sequence[Sequence[RatFn]], ring: Ring) -> RatFn:
    """Clear each row by the product of its distinct denominators, take the
    polynomial determinant, then divide the tracked scalar back out."""
    scale = ring.one()
    cleared = []
    for row in rows:
        dens = []
        for q in row:
            if q.den not in dens:
                dens.append(q.den)
        row_scale = ring.one()
        for d in dens:
            row_scale = row_scale * d
        scale = scale * row_scale
        new_row = []
        for q in row:
            others = ring.one()
            for d in dens:
                if d != q.den:
                    others = others * d
            new_row.append(q.num * others)
        cleared.append(new_row)
    return RatFn(poly_det(cleared, ring), scale)
