"""Command-line front end: ``loopsym {expand,apply,verify,sweep} ...``.

Exit codes: 0 verified (or plain output), 1 counterexample found (a JSON
witness goes to stdout), 2 bad parameters or an unmet precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checks
from .action import apply, compose
from .alternants import (HypothesisNotMetError, alternant_det, alternant_matrix, plus_staircase,
                         verify_hma, verify_mn, verify_roa)
from .generators import kappa, loop_e, loop_h, power_sum
from .poly import Poly, RatFn, Ring
from .tableaux import Partition, jacobi_trudi, loop_schur


class UsageError(ValueError):
    pass


def parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise UsageError(f"malformed {what} {text!r}: expected comma-separated integers") from None
    return values


def parse_shape(text: str) -> Partition:
    parts = parse_ints(text, "shape")
    try:
        return Partition(parts)
    except ValueError as exc:
        raise UsageError(f"malformed shape {text!r}: {exc}") from None


def _ring(args) -> Ring:
    if args.m < 1 or args.n < 1:
        raise UsageError("need --m >= 1 and --n >= 1")
    return Ring(args.m, args.n)


def _emit_value(value, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(value.to_json_obj()) + "\n")
    else:
        out.write(str(value) + "\n")


def _emit_check(result, fmt: str, out) -> int:
    if fmt == "json" or not result.ok:
        out.write(result.to_json() + "\n")
    else:
        out.write(f"verified {result.check} {json.dumps(result.params)}\n")
    return 0 if result.ok else 1


# -- expand ------------------------------------------------------------------

def cmd_expand(args, out) -> int:
    ring = _ring(args)
    fam = args.family
    flows = parse_ints(args.flows, "flows") if args.flows else None
    if fam in ("e", "h", "p") and args.k is None:
        raise UsageError(f"expand {fam} needs --k")
    if fam == "e":
        value = loop_e(ring, args.k, args.r, flows)
    elif fam == "h":
        value = loop_h(ring, args.k, args.r, flows)
    elif fam == "p":
        value = power_sum(ring, args.k)
    elif fam == "kappa":
        x, y = flows if flows else (1, 2)
        value = kappa(ring, args.r, x, y)
    elif fam == "schur":
        if args.shape is None:
            raise UsageError("expand schur needs --shape")
        shape = parse_shape(args.shape)
        value = jacobi_trudi(ring, shape, args.r) if args.via == "jt" else loop_schur(ring, shape, args.r)
    elif fam == "alternant":
        if args.alpha is None:
            raise UsageError("expand alternant needs --alpha")
        alpha = parse_ints(args.alpha, "alpha")
        if len(alpha) != ring.m or any(a < 0 for a in alpha):
            raise UsageError(f"--alpha needs {ring.m} nonnegative entries")
        value = alternant_det(alternant_matrix(ring, alpha, args.r))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {fam}")
    _emit_value(value, args.format, out)
    return 0


# -- apply -------------------------------------------------------------------

def cmd_apply(args, out) -> int:
    try:
        obj = json.loads(args.expr)
        expr = RatFn.from_json_obj(obj) if "num" in obj else Poly.from_json_obj(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed --expr: {exc}") from None
    word = parse_ints(args.word, "word") if args.word else ()
    ring = expr.ring
    for i in word:
        if not 1 <= i <= ring.m - 1:
            raise UsageError(f"word letter {i} outside 1..{ring.m - 1}")
    _emit_value(apply(compose(ring, word), expr), args.format, out)
    return 0


# -- verify ------------------------------------------------------------------

def _emit_many(results, fmt: str, out) -> int:
    code = 0
    for res in results:
        code = max(code, _emit_check(res, fmt, out))
    return code


def cmd_verify(args, out) -> int:
    target = args.target
    if target == "roa":
        ring = _ring(args)
        shape = parse_shape(args.shape or "0")
        if len(shape) > ring.m:
            raise UsageError(f"shape has more than m={ring.m} parts")
        return _emit_check(verify_roa(ring, shape, args.r), args.format, out)
    if target == "hma":
        ring = _ring(args)
        if args.alpha:
            alpha = parse_ints(args.alpha, "alpha")
        else:
            shape = parse_shape(args.shape or "0")
            if len(shape) > ring.m:
                raise UsageError(f"shape has more than m={ring.m} parts")
            alpha = plus_staircase(shape, ring.m)
        if len(alpha) != ring.m:
            raise UsageError(f"alpha needs {ring.m} entries")
        return _emit_check(verify_hma(ring, alpha, args.r), args.format, out)
    if target == "mn":
        ring = _ring(args)
        shape = parse_shape(args.shape or "0")
        if args.k is None or args.k < 1:
            raise UsageError("verify mn needs --k >= 1")
        try:
            res = verify_mn(ring, shape, args.k, args.r, force=args.force)
        except HypothesisNotMetError as exc:
            raise UsageError(str(exc)) from None
        return _emit_check(res, args.format, out)
    if target == "jacobi-trudi":
        _ring(args)
        return _emit_many(checks.jacobi_trudi_checks(args.m, args.n, args.max_size), args.format, out)
    if target == "braid":
        _ring(args)
        if args.m < 3:
            raise UsageError("braid relation needs m >= 3")
        points = None if args.random is None else args.random
        return _emit_many(checks.braid_checks(args.m, args.n, points, args.seed), args.format, out)
    if target == "relations":
        _ring(args)
        results = list(checks.involution_checks(args.m, args.n))
        results += list(checks.commutation_checks(args.m, args.n))
        if args.m >= 3:
            results += list(checks.braid_checks(args.m, args.n, args.random, args.seed))
        return _emit_many(results, args.format, out)
    if target == "invariance":
        _ring(args)
        if args.m < 2:
            raise UsageError("invariance needs m >= 2")
        max_k = 4 if args.k is None else args.k
        return _emit_many(checks.invariance_checks(args.m, args.n, args.family, max_k), args.format, out)
    raise UsageError(f"unknown verify target {target}")  # pragma: no cover


# -- sweep -------------------------------------------------------------------

def cmd_sweep(args, out) -> int:
    if args.max_m < 1 or args.max_n < 1 or args.max_weight < 0:
        raise UsageError("sweep bounds must be positive")
    groups = checks.run_sweep(args.max_weight, args.max_m, args.max_n, args.seed)
    failures = 0
    if args.format == "json":
        payload = []
        for name, results in groups:
            bad = [json.loads(r.to_json()) for r in results if not r.ok]
            failures += len(bad)
            payload.append({"group": name, "checks": len(results), "failures": bad})
        out.write(json.dumps({"groups": payload, "total_failures": failures}) + "\n")
    else:
        width = max(len(name) for name, _ in groups)
        for name, results in groups:
            bad = sum(1 for r in results if not r.ok)
            failures += bad
            status = "PASS" if bad == 0 else "FAIL"
            out.write(f"{name.ljust(width)}  {len(results):5d} checks  {bad:3d} failed  {status}\n")
            for r in results:
                if not r.ok:
                    out.write("  " + r.to_json() + "\n")
        total = sum(len(r) for _, r in groups)
        out.write(f"total: {total} checks, {failures} failed\n")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="loopsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, m_default=2, n_default=2):
        p.add_argument("--m", type=int, default=m_default, help="number of flows")
        p.add_argument("--n", type=int, default=n_default, help="number of colors")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("expand", help="expand a loop symmetric function or alternant")
    p.add_argument("family", choices=("e", "h", "p", "kappa", "schur", "alternant"))
    common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int, default=1, help="color (1-based, taken mod n)")
    p.add_argument("--flows", help="comma-separated increasing flows (kappa: the pair x,y)")
    p.add_argument("--shape")
    p.add_argument("--alpha")
    p.add_argument("--via", choices=("tableaux", "jt"), default="tableaux")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("apply", help="apply s_{w1} o ... o s_{wk} to a JSON Poly or RatFn")
    p.add_argument("--word", default="")
    p.add_argument("--expr", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="check one identity family")
    p.add_argument("target", choices=("roa", "hma", "mn", "jacobi-trudi", "braid", "relations",
                                      "invariance"))
    common(p)
    p.add_argument("--shape")
    p.add_argument("--alpha")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--k", type=int)
    p.add_argument("--force", action="store_true", help="run mn below its hypothesis")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--family", choices=checks.FAMILIES, default="e")
    p.add_argument("--symbolic", action="store_true", help="braid: symbolic check (default)")
    p.add_argument("--random", type=int, help="braid: number of random rational points")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run every identity check up to the given bounds")
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
