"""Batteries of identity checks used by ``loopsym verify`` and ``loopsym sweep``."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator

from .action import (apply_factored, build_si, compose, first_difference, fixes, transposition,
                     words_agree_randomly)
from .alternants import (CheckResult, border_strips_geometric, border_strips_rearrangement,
                         plus_staircase, verify_hma, verify_mn, verify_roa)
from .factored import Factored, factored_eq
from .generators import kappa, loop_e, loop_h, pi, power_sum
from .poly import Ring
from .tableaux import jacobi_trudi, loop_schur, partitions_up_to

DEFAULT_SEED = 20240601


def jacobi_trudi_checks(m: int, n: int, max_size: int) -> Iterator[CheckResult]:
    ring = Ring(m, n)
    for lam in partitions_up_to(max_size, m):
        for r in range(1, n + 1):
            ok = jacobi_trudi(ring, lam, r) == loop_schur(ring, lam, r)
            yield CheckResult(ok, "jacobi-trudi", {"m": m, "n": n, "shape": list(lam), "r": r})


def roa_checks(m: int, n: int, max_weight: int) -> Iterator[CheckResult]:
    ring = Ring(m, n)
    for lam in partitions_up_to(max_weight, m):
        for r in range(1, n + 1):
            yield verify_roa(ring, lam, r)


def hma_checks(m: int, n: int, max_weight: int) -> Iterator[CheckResult]:
    ring = Ring(m, n)
    for lam in partitions_up_to(max_weight, m):
        for r in range(1, n + 1):
            yield verify_hma(ring, plus_staircase(lam, m), r)


MN_SHAPES = ((), (1,), (2,), (1, 1))


def mn_checks(n_values: Iterable[int], k: int = 1, shapes=MN_SHAPES) -> Iterator[CheckResult]:
    for n in n_values:
        for lam in shapes:
            base = len(lam) + k * n
            for m in (base, base + 1):
                ring = Ring(m, n)
                for r in range(1, n + 1):
                    yield verify_mn(ring, lam, k, r)


def involution_checks(m: int, n: int) -> Iterator[CheckResult]:
    ring = Ring(m, n)
    for i in range(1, m):
        smap = compose(ring, (i, i))
        bad = next((v for v in ring.all_vars() if not factored_eq(
            smap.image_factored(v), Factored.from_poly(ring.monomial({v: 1})))), None)
        yield CheckResult(bad is None, "involution", {"m": m, "n": n, "i": i},
                          None if bad is None else {"variable": bad.label()})


def commutation_checks(m: int, n: int) -> Iterator[CheckResult]:
    ring = Ring(m, n)
    for i in range(1, m):
        for j in range(i + 2, m):
            bad = first_difference(compose(ring, (i, j)), compose(ring, (j, i)))
            yield CheckResult(bad is None, "commutation", {"m": m, "n": n, "i": i, "j": j},
                              None if bad is None else {"variable": bad.label()})


def braid_checks(m: int, n: int, random_points: int | None = None,
                 seed: int = DEFAULT_SEED) -> Iterator[CheckResult]:
    """Symbolic by default; with ``random_points`` the two words are compared
    at that many random rational points (evidence, not proof)."""
    ring = Ring(m, n)
    for i in range(1, m - 1):
        w1, w2 = (i, i + 1, i), (i + 1, i, i + 1)
        params = {"m": m, "n": n, "i": i}
        if random_points is None:
            bad = first_difference(compose(ring, w1), compose(ring, w2))
            yield CheckResult(bad is None, "braid", params,
                              None if bad is None else {"variable": bad.label()})
        else:
            ok, used = words_agree_randomly(ring, w1, w2, random_points, seed + i)
            params.update({"points": used, "seed": seed + i})
            yield CheckResult(ok, "braid-random", params,
                              note="randomized evidence at rational points, not a symbolic proof")


FAMILIES = ("e", "h", "p", "schur")


def _family_members(ring: Ring, family: str, max_k: int):
    n = ring.n
    if family == "e":
        for k in range(max_k + 1):
            for r in range(1, n + 1):
                yield {"k": k, "r": r}, loop_e(ring, k, r)
    elif family == "h":
        for k in range(max_k + 1):
            for r in range(1, n + 1):
                yield {"k": k, "r": r}, loop_h(ring, k, r)
    elif family == "p":
        for k in range(1, max_k + 1):
            yield {"k": k}, power_sum(ring, k)
    elif family == "schur":
        for lam in partitions_up_to(max_k, ring.m):
            for r in range(1, n + 1):
                yield {"shape": list(lam), "r": r}, loop_schur(ring, lam, r)
    else:
        raise ValueError(f"unknown family {family!r}")


def invariance_checks(m: int, n: int, family: str, max_k: int = 4) -> Iterator[CheckResult]:
    ring = Ring(m, n)
    for i in range(1, m):
        si = build_si(ring, i)
        for extra, g in _family_members(ring, family, max_k):
            params = {"m": m, "n": n, "family": family, "i": i, **extra}
            yield CheckResult(fixes(si, g), "invariance", params)


def kappa_fixed_checks(m: int, n: int) -> Iterator[CheckResult]:
    ring = Ring(m, n)
    for i in range(1, m):
        si = build_si(ring, i)
        for r in range(1, n + 1):
            yield CheckResult(fixes(si, kappa(ring, r, i, i + 1)), "kappa-fixed",
                              {"m": m, "n": n, "i": i, "r": r})


def pi_permutation_checks(m: int, n: int) -> Iterator[CheckResult]:
    ring = Ring(m, n)
    for a in range(1, m + 1):
        for b in range(a, m + 1):
            t = transposition(ring, a, b)
            for c in range(1, m + 1):
                target = b if c == a else a if c == b else c
                img = apply_factored(t, pi(ring, c))
                ok = factored_eq(img, Factored.from_poly(pi(ring, target)))
                yield CheckResult(ok, "pi-permutation", {"m": m, "n": n, "a": a, "b": b, "c": c})


def border_strip_checks(max_size: int, max_strip: int) -> Iterator[CheckResult]:
    for lam in partitions_up_to(max_size):
        for size in range(1, max_strip + 1):
            geo = border_strips_geometric(lam, size)
            arr = border_strips_rearrangement(lam, size)
            yield CheckResult(geo == arr, "border-strips", {"shape": list(lam), "size": size})


def _run_group(job):
    fn, args = job
    return list(fn(*args))


def sweep_jobs(max_weight: int, max_m: int, max_n: int, seed: int = DEFAULT_SEED) -> list[tuple[str, Callable, tuple]]:
    """The full battery in a fixed (parameter-lexicographic) order."""
    jobs = []
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            jobs.append((f"jacobi-trudi m={m} n={n}", jacobi_trudi_checks, (m, n, max_weight)))
            jobs.append((f"hma m={m} n={n}", hma_checks, (m, n, max_weight)))
            jobs.append((f"roa m={m} n={n}", roa_checks, (m, n, max_weight)))
            if m >= 2:
                jobs.append((f"involution m={m} n={n}", involution_checks, (m, n)))
                jobs.append((f"commutation m={m} n={n}", commutation_checks, (m, n)))
                jobs.append((f"kappa-fixed m={m} n={n}", kappa_fixed_checks, (m, n)))
                jobs.append((f"pi-permutation m={m} n={n}", pi_permutation_checks, (m, n)))
                for fam in FAMILIES:
                    jobs.append((f"invariance[{fam}] m={m} n={n}", invariance_checks,
                                 (m, n, fam, max_weight)))
            if m >= 3:
                jobs.append((f"braid m={m} n={n}", braid_checks, (m, n)))
    jobs.append(("braid-random m=4 n=4", braid_checks, (4, 4, 20, seed)))
    jobs.append((f"mn k=1 n<={min(max_n, 2)}", mn_checks, (tuple(range(1, min(max_n, 2) + 1)),)))
    jobs.append((f"border-strips |lambda|<={max_weight + 2}", border_strip_checks,
                 (max_weight + 2, max_weight + 2)))
    return jobs


def run_sweep(max_weight: int, max_m: int, max_n: int, seed: int = DEFAULT_SEED,
              workers: int | None = None) -> list[tuple[str, list[CheckResult]]]:
    jobs = sweep_jobs(max_weight, max_m, max_n, seed)
    if workers is None:
        workers = int(os.environ.get("LOOPSYM_THREADS", "1") or 1)
    payload = [(fn, args) for _, fn, args in jobs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_group, payload))
    else:
        results = [_run_group(job) for job in payload]
    return [(name, res) for (name, _, _), res in zip(jobs, results)]
