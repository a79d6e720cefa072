"""Loop elementary, homogeneous and power-sum functions, pi_i and kappa.

All functions take the ambient :class:`Ring` first.  Colors are 1-based
integers and are reduced mod n.  ``flows`` is a strictly increasing sequence
of flow indices; ``None`` means all of 1..m.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .poly import Poly, Ring


def flow_set(ring: Ring, flows: Sequence[int] | None) -> tuple[int, ...]:
    if flows is None:
        return tuple(range(1, ring.m + 1))
    flows = tuple(flows)
    for a, b in zip(flows, flows[1:]):
        if a >= b:
            raise ValueError(f"flows must be strictly increasing, got {flows}")
    for f in flows:
        if not 1 <= f <= ring.m:
            raise ValueError(f"flow {f} outside 1..{ring.m}")
    return flows


def colored_product(ring: Ring, seq: Sequence[int], start_color: int) -> Poly:
    """x_{seq[0]}^(c) x_{seq[1]}^(c+1) ... with c = start_color.

    Both loop_e and loop_h go through here: e feeds the increasing sequence,
    h feeds the weakly decreasing one, so the largest flow of an h-term
    carries the starting color.
    """
    exps: dict = {}
    for t, flow in enumerate(seq):
        v = ring.varid(flow, start_color + t)
        exps[v] = exps.get(v, 0) + 1
    return ring.monomial(exps)


def _sum_monomials(ring: Ring, monos) -> Poly:
    terms: dict[int, int] = {}
    for p in monos:
        (k, c), = p.raw_terms.items()
        terms[k] = terms.get(k, 0) + c
    return Poly(ring, terms)


def loop_e(ring: Ring, k: int, r: int, flows: Sequence[int] | None = None) -> Poly:
    """e_k^(r): sum over i_1 < ... < i_k of x_{i_1}^(r) x_{i_2}^(r+1) ... x_{i_k}^(r+k-1)."""
    if k < 0:
        return ring.zero()
    flows = flow_set(ring, flows)
    return _sum_monomials(ring, (colored_product(ring, seq, r) for seq in combinations(flows, k)))


def loop_h(ring: Ring, k: int, r: int, flows: Sequence[int] | None = None) -> Poly:
    """h_k^(r): sum over i_k >= ... >= i_1 of x_{i_k}^(r) x_{i_{k-1}}^(r+1) ... x_{i_1}^(r+k-1).

    Negative k gives 0, matching the determinant conventions downstream.
    """
    if k < 0:
        return ring.zero()
    flows = flow_set(ring, flows)
    return _sum_monomials(
        ring,
        (colored_product(ring, seq[::-1], r) for seq in combinations_with_replacement(flows, k)),
    )


def pi(ring: Ring, i: int) -> Poly:
    if not 1 <= i <= ring.m:
        raise ValueError(f"flow {i} outside 1..{ring.m}")
    return colored_product(ring, [i] * ring.n, 1)


def power_sum(ring: Ring, k: int) -> Poly:
    """p_k = sum_i pi_i^k, homogeneous of degree k*n."""
    if k < 1:
        raise ValueError(f"power sum index must be >= 1, got {k}")
    return _sum_monomials(ring, (pi(ring, i) ** k for i in range(1, ring.m + 1)))


def kappa(ring: Ring, r: int, x: int, y: int) -> Poly:
    """kappa^(r)(x, y) written out as its telescoping sum.

    The t-th term is y^(r+1)...y^(r+t) x^(r+t+1)...x^(r+n-1), t = 0..n-1.
    This deliberately does not call loop_h so the two can check each other.
    """
    if x == y:
        raise ValueError("kappa needs two distinct flows")
    n = ring.n
    monos = []
    for t in range(n):
        exps: dict = {}
        for c in range(r + 1, r + n):
            v = ring.varid(y if c <= r + t else x, c)
            exps[v] = exps.get(v, 0) + 1
        monos.append(ring.monomial(exps))
    return _sum_monomials(ring, monos)
