"""Exact sparse polynomials and rational functions in the variables x_i^(j).

A :class:`Ring` fixes the ambient universe: ``m`` flows (the subscript i)
and ``n`` colors (the superscript j, taken mod n).  Colors are stored
0-based and printed 1-based, so the printed color ``j`` lives in slot
``(j - 1) % n``.

Monomials are packed into a single Python int: one 16-bit exponent field per
variable (variable 0 most significant) under a top field holding the total
degree.  Multiplying monomials is integer addition, and comparing packed keys
as integers is the graded-lex monomial order.
"""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1


class AmbientMismatchError(ValueError):
    """Operands live in different (m, n) variable universes."""


class UnboundVariableError(KeyError):
    """An evaluation point does not assign a variable that occurs."""


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def parse_rational(text: str):
    if "." in text or "e" in text.lower():
        raise ValueError(f"coefficient {text!r} is not a decimal-free rational")
    return _normalize_coeff(Fraction(text))


def format_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True, order=True)
class VarId:
    """The variable x_flow^(color+1); ``color`` is the stored 0-based value."""

    flow: int
    color: int

    def label(self) -> str:
        return f"x_{self.flow}^({self.color + 1})"

    def key(self) -> str:
        return f"x:{self.flow}:{self.color + 1}"


@dataclass(frozen=True)
class Ring:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"need m >= 1 and n >= 1, got m={self.m}, n={self.n}")

    @property
    def nvars(self) -> int:
        return self.m * self.n

    def varid(self, flow: int, color: int) -> VarId:
        """VarId for x_flow^(color) with a printed (1-based, any integer) color."""
        if not 1 <= flow <= self.m:
            raise ValueError(f"flow {flow} outside 1..{self.m}")
        return VarId(flow, (color - 1) % self.n)

    def index(self, v: VarId) -> int:
        if not (1 <= v.flow <= self.m and 0 <= v.color < self.n):
            raise ValueError(f"{v} is not a variable of {self}")
        return (v.flow - 1) * self.n + v.color

    def varid_at(self, idx: int) -> VarId:
        flow, color = divmod(idx, self.n)
        return VarId(flow + 1, color)

    def shift(self, idx: int) -> int:
        return FIELD_BITS * (self.nvars - 1 - idx)

    @property
    def degree_shift(self) -> int:
        return FIELD_BITS * self.nvars

    def var(self, flow: int, color: int) -> "Poly":
        idx = self.index(self.varid(flow, color))
        return Poly(self, {(1 << self.degree_shift) + (1 << self.shift(idx)): 1})

    def const(self, c) -> "Poly":
        c = _normalize_coeff(c)
        return Poly(self, {0: c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {0: 1})

    def monomial(self, exps: Mapping[VarId, int], coeff=1) -> "Poly":
        key = 0
        for v, e in exps.items():
            if e < 0:
                raise ValueError("negative exponent")
            if e > FIELD_MASK:
                raise OverflowError(f"exponent {e} exceeds {FIELD_MASK}")
            key += (e << self.degree_shift) + (e << self.shift(self.index(v)))
        return Poly(self, {key: coeff} if coeff else {})

    def unpack(self, key: int) -> list[int]:
        out = []
        for idx in range(self.nvars):
            out.append((key >> self.shift(idx)) & FIELD_MASK)
        return out

    def all_vars(self) -> list[VarId]:
        return [self.varid_at(i) for i in range(self.nvars)]


def _degree(ring: Ring, key: int) -> int:
    return key >> ring.degree_shift


class Poly:
    """Immutable sparse polynomial with exact rational coefficients.

    ``terms`` maps packed monomial keys to nonzero coefficients (``int`` or
    ``Fraction``).  Equal polynomials have equal term maps.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[int, object] | None = None, _trusted=False):
        self.ring = ring
        if _trusted:
            self._terms = terms
        else:
            self._terms = {k: _normalize_coeff(c) for k, c in (terms or {}).items() if c != 0}
        self._hash = None

    # -- basic access -------------------------------------------------------
    @property
    def raw_terms(self) -> Mapping[int, object]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_term(self):
        return self._terms.get(0, 0)

    def exps_of(self, key: int) -> dict[VarId, int]:
        ring = self.ring
        return {ring.varid_at(i): e for i, e in enumerate(ring.unpack(key)) if e}

    def sort_key(self, key: int):
        """Canonical order: sorted (flow, color, exponent) triples, then total degree."""
        exps = self.exps_of(key)
        triples = tuple((v.flow, v.color, e) for v, e in sorted(exps.items()))
        return (triples, sum(exps.values()))

    def terms(self) -> Iterator[tuple[dict[VarId, int], object]]:
        """(exponent map, coefficient) pairs in canonical order."""
        for key in sorted(self._terms, key=self.sort_key):
            yield self.exps_of(key), self._terms[key]

    def leading_coeff(self):
        """Coefficient of the last term in canonical order."""
        if not self._terms:
            return 0
        return self._terms[max(self._terms, key=self.sort_key)]

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(_degree(self.ring, k) for k in self._terms)

    def is_homogeneous(self) -> bool:
        return len({_degree(self.ring, k) for k in self._terms}) <= 1

    def variables(self) -> set[VarId]:
        used = 0
        for k in self._terms:
            used |= k
        out = set()
        for idx in range(self.ring.nvars):
            if (used >> self.ring.shift(idx)) & FIELD_MASK:
                out.add(self.ring.varid_at(idx))
        return out

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise AmbientMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = _normalize_coeff(s)
            else:
                out.pop(k, None)
        return Poly(self.ring, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {k: -c for k, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, c) -> "Poly":
        c = _normalize_coeff(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {k: _normalize_coeff(v * c) for k, v in self._terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if cb == 1:
                return Poly(self.ring, {ka + kb: ca for ka, ca in a.items()}, _trusted=True)
        out: dict[int, object] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        if self.degree() * e > FIELD_MASK:
            raise OverflowError(f"degree {self.degree() * e} exceeds {FIELD_MASK}")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == self.ring.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- content / division -------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational c with self / c having coprime integer coefficients."""
        return _content(self._terms.values())

    def gradlex_lead(self) -> int:
        return max(self._terms)

    def divexact(self, other: "Poly") -> "Poly":
        """Exact quotient; raises NotDivisibleError if other does not divide self."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant():
            return self.scale(Fraction(1) / Fraction(other.constant_term()))
        ring = self.ring
        lk = max(other._terms)
        lc = other._terms[lk]
        tail = [(k, c) for k, c in other._terms.items() if k != lk]
        rem = dict(self._terms)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quot: dict[int, object] = {}
        while heap:
            k = -heapq.heappop(heap)
            c = rem.pop(k, 0)
            if not c:
                continue
            diff = k - lk
            if diff < 0 or not _fields_nonneg(ring, diff):
                raise NotDivisibleError("remainder is nonzero")
            if isinstance(c, int) and isinstance(lc, int) and c % lc == 0:
                q = c // lc
            else:
                q = _normalize_coeff(Fraction(c) / lc)
            quot[diff] = q
            for ko, co in tail:
                kk = ko + diff
                old = rem.get(kk)
                s = (old or 0) - q * co
                if s:
                    if old is None:
                        heapq.heappush(heap, -kk)
                    rem[kk] = s
                else:
                    rem.pop(kk, None)
        return Poly(ring, quot)

    # -- evaluation / substitution -----------------------------------------
    def evaluate(self, point: Mapping[VarId, object]):
        """Exact value at ``point``; every occurring variable must be assigned."""
        ring = self.ring
        values = []
        for idx in range(ring.nvars):
            v = ring.varid_at(idx)
            values.append(point.get(v))
        for v in self.variables():
            if point.get(v) is None:
                raise UnboundVariableError(v.label())
        return self.evaluate_vector(values)

    def evaluate_vector(self, values: list) -> object:
        ring = self.ring
        total = 0
        for key, c in self._terms.items():
            term = c
            for idx, e in enumerate(ring.unpack(key)):
                if e:
                    term = term * values[idx] ** e
            total += term
        return _normalize_coeff(Fraction(total)) if not isinstance(total, int) else total

    # -- printing / serialization -------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.terms():
            factors = []
            for v, e in sorted(exps.items()):
                factors.append(v.label() if e == 1 else f"({v.label()})^{e}")
            mono = "*".join(factors)
            c = Fraction(c)
            if not mono:
                body, sign = format_rational(abs(c)), c < 0
            elif abs(c) == 1:
                body, sign = mono, c < 0
            else:
                body, sign = f"{format_rational(abs(c))}*{mono}", c < 0
            pieces.append(("- " if sign else "+ ") + body)
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"Poly({self})"

    def to_json_obj(self) -> dict:
        terms = []
        for exps, c in self.terms():
            terms.append({"coeff": format_rational(c),
                          "exps": {v.key(): e for v, e in sorted(exps.items())}})
        return {"m": self.ring.m, "n": self.ring.n, "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=False)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Poly":
        ring = Ring(int(obj["m"]), int(obj["n"]))
        result: dict[int, object] = {}
        for term in obj["terms"]:
            exps = {}
            for name, e in term["exps"].items():
                tag, flow, color = name.split(":")
                if tag != "x":
                    raise ValueError(f"bad variable key {name!r}")
                color = int(color)
                if not 1 <= color <= ring.n:
                    raise ValueError(f"color {color} outside 1..{ring.n}")
                exps[ring.varid(int(flow), color)] = int(e)
            key = ring.monomial(exps).raw_terms
            (k, _), = key.items()
            result[k] = result.get(k, 0) + parse_rational(str(term["coeff"]))
        return cls(ring, result)

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        return cls.from_json_obj(json.loads(text))


def _fields_nonneg(ring: Ring, diff: int) -> bool:
    # A borrow across fields shows up as a field value above the largest exponent.
    return all(f <= FIELD_MASK // 2 for f in ring.unpack(diff))


def _content(coeffs: Iterable) -> Fraction:
    num_gcd = 0
    den_lcm = 1
    for c in coeffs:
        c = Fraction(c)
        num_gcd = math.gcd(num_gcd, c.numerator)
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    if num_gcd == 0:
        return Fraction(1)
    return Fraction(num_gcd, den_lcm)


def _as_poly(ring: Ring, x) -> Poly:
    if isinstance(x, Poly):
        if x.ring != ring:
            raise AmbientMismatchError(f"{ring} vs {x.ring}")
        return x
    return ring.const(x)


class RatFn:
    """Quotient num/den of two polynomials, never reduced to lowest terms.

    Normalized so the coefficients of num and den are jointly coprime
    integers and the leading coefficient of den is positive.  Equality is
    decided by cross-multiplication, so RatFn values are unhashable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if isinstance(num, RatFn):
            if den is not None:
                raise TypeError("RatFn(RatFn, den) is ambiguous; divide instead")
            self.num, self.den = num.num, num.den
            return
        if den is None:
            if not isinstance(num, Poly):
                raise TypeError("RatFn needs a Poly when no denominator is given")
            den = num.ring.one()
        ring = num.ring if isinstance(num, Poly) else den.ring
        num, den = _as_poly(ring, num), _as_poly(ring, den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            c = _content(list(num.raw_terms.values()) + list(den.raw_terms.values()))
            if den.leading_coeff() < 0:
                c = -c
            if c != 1:
                inv = 1 / c
                num, den = num.scale(inv), den.scale(inv)
        self.num = num
        self.den = den

    @property
    def ring(self) -> Ring:
        return self.num.ring

    def _coerce(self, other) -> "RatFn":
        if isinstance(other, RatFn):
            if other.ring != self.ring:
                raise AmbientMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (Poly, int, Rational)):
            return RatFn(_as_poly(self.ring, other))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFn(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFn(self.num ** e, self.den ** e)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ratfn_eq(self, other)

    __hash__ = None

    def to_poly(self) -> Poly:
        """The polynomial equal to this function; raises NotDivisibleError otherwise."""
        return self.num.divexact(self.den)

    def evaluate(self, point: Mapping[VarId, object]):
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return _normalize_coeff(Fraction(self.num.evaluate(point)) / d)

    def evaluate_vector(self, values: list):
        d = self.den.evaluate_vector(values)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return _normalize_coeff(Fraction(self.num.evaluate_vector(values)) / d)

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFn({self})"

    def to_json_obj(self) -> dict:
        return {"num": self.num.to_json_obj(), "den": self.den.to_json_obj()}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "RatFn":
        if "num" not in obj:
            return cls(Poly.from_json_obj(obj))
        return cls(Poly.from_json_obj(obj["num"]), Poly.from_json_obj(obj["den"]))


def ratfn_eq(a: RatFn, b: RatFn) -> bool:
    if a.ring != b.ring:
        raise AmbientMismatchError(f"{a.ring} vs {b.ring}")
    if a.den == b.den:
        return a.num == b.num
    return a.num * b.den == b.num * a.den


def poly_eval(p: Poly, point: Mapping[VarId, object]):
    return p.evaluate(point)
