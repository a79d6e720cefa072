"""Rational functions kept as products of polynomial factors.

A :class:`Factored` value is ``coeff * prod(f ** e)`` with integer (possibly
negative) exponents.  Factors are primitive integer polynomials whose
graded-lex leading coefficient is positive, so equal factors hash equal and
exponents simply add under multiplication.

No gcd is ever computed.  When a sum has to be expanded into a new
polynomial, the result is trial-divided by the factors seen so far in the
same ring (exact division, see :meth:`Poly.divexact`).  That is enough to
cancel the kappa ratios that telescope through the birational action.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .poly import NotDivisibleError, Poly, RatFn, Ring, _normalize_coeff


class _Registry:
    def __init__(self, ring: Ring):
        self.ring = ring
        self.entries: list[tuple[Poly, int, list[int], int]] = []
        self.known: set[Poly] = set()

    def add(self, f: Poly):
        if f in self.known:
            return
        self.known.add(f)
        self.entries.append((f, f.degree(), _max_exps(f), len(f)))
        self.entries.sort(key=lambda e: (-e[1], -e[3]))


_registries: dict[Ring, _Registry] = {}


def registry(ring: Ring) -> _Registry:
    reg = _registries.get(ring)
    if reg is None:
        reg = _registries[ring] = _Registry(ring)
    return reg


def _max_exps(p: Poly) -> list[int]:
    ring = p.ring
    out = [0] * ring.nvars
    for k in p.raw_terms:
        for i, e in enumerate(ring.unpack(k)):
            if e > out[i]:
                out[i] = e
    return out


def _min_key(p: Poly) -> int:
    """Packed key of the largest monomial dividing every term."""
    ring = p.ring
    mins = None
    for k in p.raw_terms:
        exps = ring.unpack(k)
        mins = exps if mins is None else [min(a, b) for a, b in zip(mins, exps)]
    key = 0
    for i, e in enumerate(mins):
        key += (e << ring.degree_shift) + (e << ring.shift(i))
    return key


def _var_factor(ring: Ring, idx: int) -> Poly:
    return ring.monomial({ring.varid_at(idx): 1})


class Factored:
    __slots__ = ("ring", "coeff", "factors")

    def __init__(self, ring: Ring, coeff=1, factors: Mapping[Poly, int] | None = None):
        self.ring = ring
        self.coeff = _normalize_coeff(coeff)
        self.factors = {f: e for f, e in (factors or {}).items() if e} if self.coeff else {}

    # -- construction -------------------------------------------------------
    @classmethod
    def from_poly(cls, p: Poly, register: bool = True) -> "Factored":
        ring = p.ring
        if p.is_zero():
            return cls(ring, 0)
        c = p.content()
        if p.raw_terms[p.gradlex_lead()] < 0:
            c = -c
        q = p.scale(1 / c) if c != 1 else p
        factors: dict[Poly, int] = {}
        mk = _min_key(q)
        if mk:
            for i, e in enumerate(ring.unpack(mk)):
                if e:
                    factors[_var_factor(ring, i)] = e
            q = Poly(ring, {k - mk: v for k, v in q.raw_terms.items()}, _trusted=True)
        if not q.is_constant():
            q = _trial_divide(q, factors)
        if not q.is_constant():
            factors[q] = factors.get(q, 0) + 1
            if register:
                registry(ring).add(q)
        return cls(ring, c, factors)

    @classmethod
    def const(cls, ring: Ring, c) -> "Factored":
        return cls(ring, c)

    # -- arithmetic ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other):
        if not isinstance(other, Factored):
            return Factored(self.ring, self.coeff * other, self.factors)
        if self.is_zero() or other.is_zero():
            return Factored(self.ring, 0)
        out = dict(self.factors)
        for f, e in other.factors.items():
            out[f] = out.get(f, 0) + e
        return Factored(self.ring, self.coeff * other.coeff, out)

    __rmul__ = __mul__

    def __neg__(self):
        return Factored(self.ring, -self.coeff, self.factors)

    def inverse(self) -> "Factored":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return Factored(self.ring, Fraction(1) / Fraction(self.coeff),
                        {f: -e for f, e in self.factors.items()})

    def __truediv__(self, other: "Factored") -> "Factored":
        return self * other.inverse()

    def __pow__(self, k: int) -> "Factored":
        if k < 0:
            return self.inverse() ** (-k)
        return Factored(self.ring, self.coeff ** k, {f: e * k for f, e in self.factors.items()})

    # -- expansion ----------------------------------------------------------
    def numerator(self) -> Poly:
        return _expand(self.ring, Fraction(self.coeff).numerator,
                       {f: e for f, e in self.factors.items() if e > 0})

    def denominator(self) -> Poly:
        return _expand(self.ring, Fraction(self.coeff).denominator,
                       {f: -e for f, e in self.factors.items() if e < 0})

    def to_ratfn(self) -> RatFn:
        return RatFn(self.numerator(), self.denominator())

    def to_poly(self) -> Poly:
        return self.to_ratfn().to_poly()

    def __eq__(self, other):
        if not isinstance(other, Factored):
            return NotImplemented
        return factored_eq(self, other)

    __hash__ = None

    def __repr__(self):
        return f"Factored({self.to_ratfn()})"


_pow_cache: dict = {}


def _fpow(f: Poly, e: int) -> Poly:
    if e == 1:
        return f
    key = (f, e)
    out = _pow_cache.get(key)
    if out is None:
        if len(_pow_cache) > 20000:
            _pow_cache.clear()
        out = _pow_cache[key] = f ** e
    return out


def _expand(ring: Ring, c, exps: Mapping[Poly, int]) -> Poly:
    # multiply small factors first so intermediate products stay small
    items = sorted(exps.items(), key=lambda fe: len(fe[0]))
    out = ring.const(c)
    for f, e in items:
        out = out * _fpow(f, e)
    return out


def _trial_divide(q: Poly, factors: dict[Poly, int]) -> Poly:
    ring = q.ring
    deg = q.degree()
    qmax = _max_exps(q)
    for f, fdeg, fmax, _ in list(registry(ring).entries):
        if fdeg > deg:
            continue
        if any(a > b for a, b in zip(fmax, qmax)):
            continue
        while True:
            try:
                quotient = q.divexact(f)
            except NotDivisibleError:
                break
            factors[f] = factors.get(f, 0) + 1
            q = quotient
            deg -= fdeg
            qmax = _max_exps(q)
            if q.is_constant() or fdeg > deg or any(a > b for a, b in zip(fmax, qmax)):
                break
        if q.is_constant():
            break
    # quotients of primitive, positive-lead polynomials stay that way
    return q


def fac_sum(terms: Iterable[tuple[Poly | None, Factored]], register: bool = True) -> Factored:
    """Sum of ``mult * F`` over the given pairs (``mult=None`` means 1).

    Factors common to every term are kept factored (with their smallest
    exponent, which may be negative); the rest is expanded and re-factored.
    """
    terms = [(mult, F) for mult, F in terms if not F.is_zero() and (mult is None or not mult.is_zero())]
    if not terms:
        return None
    ring = terms[0][1].ring
    if len(terms) == 1 and terms[0][0] is None:
        return terms[0][1]
    keys = set()
    for _, F in terms:
        keys.update(F.factors)
    common = {f: min(F.factors.get(f, 0) for _, F in terms) for f in keys}
    total = ring.zero()
    for mult, F in terms:
        rest = {f: e - common[f] for f, e in F.factors.items() if e - common[f]}
        for f in keys:
            if f not in F.factors and common[f] < 0:
                rest[f] = -common[f]
        piece = _expand(ring, F.coeff, rest)
        if mult is not None:
            piece = piece * mult
        total = total + piece
    return Factored(ring, 1, common) * Factored.from_poly(total, register=register)


def factored_sum(terms: Sequence[tuple[Poly | None, Factored]], ring: Ring, register: bool = True) -> Factored:
    out = fac_sum(terms, register=register)
    return Factored(ring, 0) if out is None else out


def factored_eq(a: Factored, b: Factored) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    q = a / b
    if not q.factors:
        return q.coeff == 1
    return q.numerator() == q.denominator()


def factored_det(rows: Sequence[Sequence[Factored]], ring: Ring) -> Factored:
    """Determinant of a square matrix of Factored entries.

    Each column is divided by the factors common to all of its entries
    (which clears its denominators), the remaining polynomial determinant is
    taken by :func:`linalg.poly_det`, and the column factors are put back.
    """
    from .linalg import poly_det

    size = len(rows)
    if size == 0:
        return Factored(ring, 1)
    scale = Factored(ring, 1)
    poly_rows = [[None] * size for _ in range(size)]
    for j in range(size):
        col = [rows[i][j] for i in range(size)]
        nonzero = [F for F in col if not F.is_zero()]
        if not nonzero:
            return Factored(ring, 0)
        keys = set()
        for F in nonzero:
            keys.update(F.factors)
        common = {f: min(F.factors.get(f, 0) for F in nonzero) for f in keys}
        scale = scale * Factored(ring, 1, common)
        for i, F in enumerate(col):
            if F.is_zero():
                poly_rows[i][j] = ring.zero()
                continue
            rest = {f: e - common[f] for f, e in F.factors.items() if e - common[f]}
            for f in keys:
                if f not in F.factors and common[f] < 0:
                    rest[f] = -common[f]
            poly_rows[i][j] = _expand(ring, F.coeff, rest)
    d = poly_det(poly_rows, ring)
    if d.is_zero():
        return Factored(ring, 0)
    return scale * Factored.from_poly(d, register=False)


def evaluate_factored(F: Factored, values: Sequence):
    """Exact value at a point given as a per-variable-index list."""
    if F.is_zero():
        return 0
    out = Fraction(F.coeff)
    for f, e in F.factors.items():
        v = f.evaluate_vector(values)
        if v == 0:
            if e < 0:
                raise ZeroDivisionError("a denominator factor vanishes at this point")
            return 0
        out *= Fraction(v) ** e
    return _normalize_coeff(out)
