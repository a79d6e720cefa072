"""The birational S_m action on Q(x_i^(j)).

A :class:`SubstitutionMap` stores one image per variable.  Words compose as
functions: ``compose(ring, (a, b))`` is s_a o s_b, so the map sends f to
s_a(s_b(f)).  Composite maps are flattened once into a variable table.

Images are held as :class:`~loopsym.factored.Factored` products, so the
kappa ratios produced by each generator cancel by exponent arithmetic
instead of piling up in an expanded numerator and denominator.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .factored import Factored, evaluate_factored, fac_sum, factored_eq
from .generators import kappa
from .poly import AmbientMismatchError, Poly, RatFn, Ring, VarId


class SubstitutionMap:
    """Variable table of a Q-algebra endomorphism (identity where unset)."""

    __slots__ = ("ring", "images", "word", "_factor_cache")

    def __init__(self, ring: Ring, images: Sequence[Factored | None], word: tuple[int, ...] = ()):
        if len(images) != ring.nvars:
            raise ValueError("one image slot per variable is required")
        self.ring = ring
        self.images = tuple(images)
        self.word = tuple(word)
        self._factor_cache: dict[Poly, Factored] = {}

    def image_factored(self, v: VarId) -> Factored:
        img = self.images[self.ring.index(v)]
        if img is None:
            return Factored.from_poly(self.ring.monomial({v: 1}))
        return img

    def image(self, v: VarId) -> RatFn:
        return self.image_factored(v).to_ratfn()

    def is_identity(self) -> bool:
        ring = self.ring
        return all(img is None or factored_eq(img, Factored.from_poly(ring.monomial({ring.varid_at(i): 1})))
                   for i, img in enumerate(self.images))

    def __call__(self, expr) -> RatFn:
        return apply(self, expr)

    def __repr__(self):
        return f"SubstitutionMap(m={self.ring.m}, n={self.ring.n}, word={self.word})"

    # -- substitution -------------------------------------------------------
    def _monomial_image(self, key: int, coeff) -> Factored:
        ring = self.ring
        out = Factored(ring, coeff)
        for idx, e in enumerate(ring.unpack(key)):
            if not e:
                continue
            img = self.images[idx]
            if img is None:
                img = Factored(ring, 1, {ring.monomial({ring.varid_at(idx): 1}): 1})
            out = out * (img ** e)
        return out

    def push_poly(self, p: Poly) -> Factored:
        """p(images) as a Factored value."""
        if p.ring != self.ring:
            raise AmbientMismatchError(f"{p.ring} vs {self.ring}")
        if p.is_zero():
            return Factored(self.ring, 0)
        if len(p) == 1:
            (key, c), = p.raw_terms.items()
            return self._monomial_image(key, c)
        return fac_sum((None, self._monomial_image(k, c)) for k, c in p.raw_terms.items())

    def push_factor(self, f: Poly) -> Factored:
        out = self._factor_cache.get(f)
        if out is None:
            out = self._factor_cache[f] = self.push_poly(f)
        return out

    def push_factored(self, F: Factored) -> Factored:
        if F.ring != self.ring:
            raise AmbientMismatchError(f"{F.ring} vs {self.ring}")
        out = Factored(self.ring, F.coeff)
        for f, e in F.factors.items():
            out = out * (self.push_factor(f) ** e)
        return out

    def point_image(self, values: Sequence) -> list:
        """The point phi(pt) with (map f)(pt) = f(phi(pt))."""
        return [v if img is None else evaluate_factored(img, values)
                for v, img in zip(values, self.images)]


def identity_map(ring: Ring) -> SubstitutionMap:
    return SubstitutionMap(ring, (None,) * ring.nvars)


_si_cache: dict = {}


def build_si(ring: Ring, i: int) -> SubstitutionMap:
    """s_i: x_i^(j) -> x_{i+1}^(j+1) k^(j+1)/k^(j), x_{i+1}^(j) -> x_i^(j-1) k^(j-1)/k^(j)."""
    if not 1 <= i <= ring.m - 1:
        raise ValueError(f"generator index {i} outside 1..{ring.m - 1}")
    key = (ring, i)
    if key in _si_cache:
        return _si_cache[key]
    kap = {j: Factored.from_poly(kappa(ring, j, i, i + 1)) for j in range(1, ring.n + 1)}

    def k(j):
        return kap[(j - 1) % ring.n + 1]

    def x(flow, color):
        return Factored.from_poly(ring.var(flow, color))

    images: list = [None] * ring.nvars
    for j in range(1, ring.n + 1):
        images[ring.index(ring.varid(i, j))] = x(i + 1, j + 1) * k(j + 1) / k(j)
        images[ring.index(ring.varid(i + 1, j))] = x(i, j - 1) * k(j - 1) / k(j)
    smap = _si_cache[key] = SubstitutionMap(ring, images, (i,))
    return smap


def _as_factored(ring: Ring, expr):
    """Returns (numerator, denominator) as polynomials or Factored values."""
    if isinstance(expr, RatFn):
        if expr.ring != ring:
            raise AmbientMismatchError(f"{expr.ring} vs {ring}")
        return expr.num, expr.den
    if isinstance(expr, Poly):
        if expr.ring != ring:
            raise AmbientMismatchError(f"{expr.ring} vs {ring}")
        return expr, None
    if isinstance(expr, Factored):
        return expr, None
    return ring.const(expr), None


def apply_factored(smap: SubstitutionMap, expr) -> Factored:
    """Homomorphic image of a Poly, RatFn, Factored or constant, kept factored."""
    num, den = _as_factored(smap.ring, expr)
    push = smap.push_factored if isinstance(num, Factored) else smap.push_poly
    out = push(num)
    if den is not None and not den == 1:
        out = out / smap.push_poly(den)
    return out


def apply(smap: SubstitutionMap, expr) -> RatFn:
    """Homomorphic image of a Poly, RatFn or constant under ``smap``."""
    return apply_factored(smap, expr).to_ratfn()


def _check_word(ring: Ring, word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(word)
    for i in word:
        if not 1 <= i <= ring.m - 1:
            raise ValueError(f"generator index {i} outside 1..{ring.m - 1}")
    return word


_compose_cache: dict = {}


def compose(ring: Ring, word: Sequence[int]) -> SubstitutionMap:
    """Flattened table of s_{w_1} o s_{w_2} o ... o s_{w_k}."""
    word = _check_word(ring, word)
    key = (ring, word)
    if key in _compose_cache:
        return _compose_cache[key]
    if not word:
        result = identity_map(ring)
    elif len(word) == 1:
        result = build_si(ring, word[0])
    else:
        inner = compose(ring, word[1:])
        outer = build_si(ring, word[0])
        images = []
        for idx, img in enumerate(inner.images):
            images.append(outer.images[idx] if img is None else outer.push_factored(img))
        result = SubstitutionMap(ring, images, word)
    _compose_cache[key] = result
    return result


def transposition_word(a: int, b: int) -> tuple[int, ...]:
    """Reduced word s_a s_{a+1} ... s_{b-1} ... s_{a+1} s_a for t_{a,b}."""
    if a == b:
        return ()
    a, b = min(a, b), max(a, b)
    up = list(range(a, b))
    return tuple(up + up[-2::-1])


def transposition(ring: Ring, a: int, b: int) -> SubstitutionMap:
    for x in (a, b):
        if not 1 <= x <= ring.m:
            raise ValueError(f"transposition index {x} outside 1..{ring.m}")
    return compose(ring, transposition_word(a, b))


def permutation_of_word(m: int, word: Sequence[int]) -> tuple[int, ...]:
    """(sigma(1), ..., sigma(m)) for sigma = s_{w_1} s_{w_2} ... s_{w_k}."""
    perm = list(range(1, m + 1))
    for i in reversed(tuple(word)):
        perm = [i + 1 if p == i else i if p == i + 1 else p for p in perm]
    return tuple(perm)


def maps_equal(f: SubstitutionMap, g: SubstitutionMap) -> bool:
    if f.ring != g.ring:
        raise AmbientMismatchError(f"{f.ring} vs {g.ring}")
    return all(factored_eq(f.image_factored(v), g.image_factored(v)) for v in f.ring.all_vars())


def first_difference(f: SubstitutionMap, g: SubstitutionMap) -> VarId | None:
    for v in f.ring.all_vars():
        if not factored_eq(f.image_factored(v), g.image_factored(v)):
            return v
    return None


def fixes(smap: SubstitutionMap, expr) -> bool:
    img = apply_factored(smap, expr)
    num, den = _as_factored(smap.ring, expr)
    if isinstance(num, Factored):
        return factored_eq(img, num)
    return img.numerator() * (den if den is not None else 1) == num * img.denominator()


# -- numeric evaluation ------------------------------------------------------

def act_on_point(ring: Ring, word: Sequence[int], values: Sequence) -> list:
    """phi with (s_{w_1} ... s_{w_k} f)(pt) = f(phi(pt)).

    The generator point maps are applied in word order, so no symbolic
    composition is built.
    """
    word = _check_word(ring, word)
    pt = list(values)
    for i in word:
        pt = build_si(ring, i).point_image(pt)
    return pt


def random_point(ring: Ring, rng: random.Random, bound: int = 50) -> list[Fraction]:
    """Nonzero random rationals p/q with |p| <= bound, 1 <= q <= bound."""
    out = []
    for _ in range(ring.nvars):
        p = 0
        while p == 0:
            p = rng.randint(-bound, bound)
        out.append(Fraction(p, rng.randint(1, bound)))
    return out


def words_agree_randomly(ring: Ring, w1: Sequence[int], w2: Sequence[int], trials: int = 20,
                         seed: int = 0) -> tuple[bool, int]:
    """Compare two words at ``trials`` random points, resampling whenever a
    kappa denominator vanishes along the way.  Returns (agree, points_used)."""
    rng = random.Random(seed)
    used = 0
    while used < trials:
        pt = random_point(ring, rng)
        try:
            a = act_on_point(ring, w1, pt)
            b = act_on_point(ring, w2, pt)
        except ZeroDivisionError:
            continue
        used += 1
        if a != b:
            return False, used
    return True, used
