"""Brute-force ordinary symmetric polynomials for the one-color reduction.

Polynomials are plain dicts {exponent tuple: int}.  Nothing here touches the
library, so it can serve as an independent reference.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations, product


def padd(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pmul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k)
    return out


def mono(m, idxs):
    exps = [0] * m
    for i in idxs:
        exps[i] += 1
    return tuple(exps)


def elementary(m, k):
    if k < 0:
        return {}
    out = {}
    for c in combinations(range(m), k):
        out = padd(out, {mono(m, c): 1})
    return out


def complete(m, k):
    if k < 0:
        return {}
    out = {}
    for c in combinations_with_replacement(range(m), k):
        out = padd(out, {mono(m, c): 1})
    return out


def _semistandard(rows):
    for r in rows:
        if any(a > b for a, b in zip(r, r[1:])):
            return False
    for up, low in zip(rows, rows[1:]):
        if any(low[j] <= up[j] for j in range(len(low))):
            return False
    return True


def schur(m, shape):
    """Sum of x^content over every filling of the diagram, kept if semistandard."""
    shape = [p for p in shape if p]
    cells = sum(shape)
    out = {}
    for fill in product(range(m), repeat=cells):
        rows, pos = [], 0
        for p in shape:
            rows.append(fill[pos:pos + p])
            pos += p
        if _semistandard(rows):
            out = padd(out, {mono(m, fill): 1})
    return out


def _sign(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def alternant(m, alpha):
    """det(x_j^{alpha_i}) by the Leibniz formula."""
    out = {}
    for perm in permutations(range(m)):
        exps = [0] * m
        for i, j in enumerate(perm):
            exps[j] = alpha[i]
        out = padd(out, {tuple(exps): _sign(perm)})
    return out


def from_library(p):
    """Library Poly over one color -> dict keyed by flow exponents."""
    m = p.ring.m
    out = {}
    for exps, c in p.terms():
        key = [0] * m
        for v, e in exps.items():
            key[v.flow - 1] += e
        out[tuple(key)] = out.get(tuple(key), 0) + int(c)
    return {k: c for k, c in out.items() if c}
