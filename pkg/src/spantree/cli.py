"""
spantree command line.

Usage:
    spantree w --a 0.5 --b 0.5 [--c 0] [--method closed|oracle1d|oracle2d] [--tol T]
    spantree ti2 --z 1
    spantree entropy --lattice square|triangular
    spantree ising --K1 1 --K2 1 --K3 1
    spantree green --a A --b B --c C [--mode derived|printed|oracle]
    spantree verify [--seed 42] [--trials 20] [--tol 1e-7] [--report PATH]
    spantree constants

Every command prints a single JSON object on stdout.  Computations emit
{quantity, inputs, value, method, abs_err_est}; ``verify`` emits
{reports, errata, summary}.  Exit codes: 0 success, 1 verification
failure, 2 bad input.  ``--human`` adds a one-line summary on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Optional

from . import __version__
from .closedform import w_closed
from .green import green_oracle_values, green_printed, green_values
from .identities import run_suite
from .lattice import IsingCouplings, entropy_square, entropy_triangular, ising_critical_free_energy
from .quadrature import w_oracle_2d, w_oracle_semi
from .specfun import catalan, ti2
from .types import ConvergenceError, DomainError, Weights


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(obj: Any) -> str:
    # floats go through repr, which is the shortest string that round-trips
    return json.dumps(obj, indent=2, allow_nan=False)


def result(quantity: str, inputs: dict, value: Any, method: str, abs_err_est: Optional[float] = None) -> dict:
    return {
        "quantity": quantity,
        "inputs": inputs,
        "value": value,
        "method": method,
        "abs_err_est": abs_err_est,
    }


def _weights(args) -> Weights:
    a, b, c = args.a, args.b, args.c
    if args.strict:
        if c is None:
            raise DomainError("--strict requires --c")
        if abs(a + b + c - 1.0) > 1e-14:
            raise DomainError(f"--strict: weights sum to {a + b + c!r}, not 1")
    return Weights(a, b, c)


def _winputs(w: Weights) -> dict:
    return {"a": w.a, "b": w.b, "c": w.c}


def cmd_w(args) -> tuple[dict, str]:
    w = _weights(args)
    if args.method == "closed":
        out = result("W", _winputs(w), w_closed(w), "closed")
    elif args.method == "oracle1d":
        r = w_oracle_semi(w, args.tol)
        out = result("W", _winputs(w), r.value, "oracle1d", r.abs_err_est)
    else:
        r = w_oracle_2d(w, args.tol)
        out = result("W", _winputs(w), r.value, "oracle2d", r.abs_err_est)
    return out, f"W({w.a:.6g}, {w.b:.6g}) = {out['value']:.12g} [{args.method}]"


def cmd_ti2(args) -> tuple[dict, str]:
    v = ti2(args.z)
    return result("Ti2", {"z": float(args.z)}, v, "closed"), f"Ti2({args.z:g}) = {v:.15g}"


def cmd_entropy(args) -> tuple[dict, str]:
    v = entropy_square() if args.lattice == "square" else entropy_triangular()
    return (
        result("spanning_tree_entropy", {"lattice": args.lattice}, v, "closed"),
        f"{args.lattice} lattice tree entropy per site = {v:.12g}",
    )


def cmd_ising(args) -> tuple[dict, str]:
    k = IsingCouplings(args.K1, args.K2, args.K3)
    r = ising_critical_free_energy(k)
    inputs = {"K1": k.K1, "K2": k.K2, "K3": k.K3}
    line = (
        f"F_I = {r.value:.12g} (ln2 {r.ln2_term:.6g} + ln-sigma {r.sigma_term:.6g} "
        f"+ W-term {r.w_term:.6g})"
    )
    return result("ising_critical_free_energy", inputs, r.value, "closed"), line


def cmd_green(args) -> tuple[dict, str]:
    w = _weights(args)
    if args.mode == "oracle":
        g, err = green_oracle_values(w, args.tol)
        out = result("green_values", _winputs(w), g.as_dict(), "oracle1d", err)
    else:
        g = green_values(w)
        value = g.as_dict()
        method = "derived"
        if args.mode == "printed":
            value["printed"] = {f"variant_{v}": green_printed(v, w) for v in (1, 2, 3, 4)}
            method = "printed"
        out = result("green_values", _winputs(w), value, method)
    return out, f"I_a={g.I_a:.10g} I_b={g.I_b:.10g} I_c={g.I_c:.10g} [{args.mode}]"


def cmd_constants(args) -> tuple[dict, str]:
    value = {
        "catalan": catalan(),
        "entropy_square": entropy_square(),
        "entropy_triangular": entropy_triangular(),
        "W_square": w_closed(Weights(0.5, 0.5, 0.0)),
        "W_triangular": w_closed(Weights(1.0, 1.0, 1.0)),
    }
    return result("constants", {}, value, "closed"), f"G = {value['catalan']:.16g}"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spantree", description="Lattice spanning-tree entropy function W(a, b).")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--human", action="store_true", help="one-line summary on stderr")

    def weight_args(sp):
        sp.add_argument("--a", type=float, required=True)
        sp.add_argument("--b", type=float, required=True)
        sp.add_argument("--c", type=float, default=None, help="default 1 - a - b; triples are normalized")
        sp.add_argument("--strict", action="store_true", help="require a + b + c = 1 instead of normalizing")

    sp = sub.add_parser("w", help="evaluate W(a, b)")
    weight_args(sp)
    sp.add_argument("--method", choices=("closed", "oracle1d", "oracle2d"), default="closed")
    sp.add_argument("--tol", type=float, default=1e-9)
    common(sp)
    sp.set_defaults(func=cmd_w)

    sp = sub.add_parser("ti2", help="inverse tangent integral")
    sp.add_argument("--z", type=float, required=True)
    common(sp)
    sp.set_defaults(func=cmd_ti2)

    sp = sub.add_parser("entropy", help="spanning-tree entropy per site")
    sp.add_argument("--lattice", choices=("square", "triangular"), required=True)
    common(sp)
    sp.set_defaults(func=cmd_entropy)

    sp = sub.add_parser("ising", help="triangular Ising critical free energy")
    for name in ("--K1", "--K2", "--K3"):
        sp.add_argument(name, type=float, required=True)
    common(sp)
    sp.set_defaults(func=cmd_ising)

    sp = sub.add_parser("green", help="Green-function limits I_a, I_b, I_c")
    weight_args(sp)
    sp.add_argument("--mode", choices=("derived", "printed", "oracle"), default="derived")
    sp.add_argument("--tol", type=float, default=1e-10)
    common(sp)
    sp.set_defaults(func=cmd_green)

    sp = sub.add_parser("verify", help="run the identity verification suite")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--tol", type=float, default=1e-7)
    sp.add_argument("--report", default=None, help="also write the JSON report to this path")
    common(sp)
    sp.set_defaults(func=None)

    sp = sub.add_parser("constants", help="named constants")
    common(sp)
    sp.set_defaults(func=cmd_constants)
    return p


def _error(message: str, kind: str) -> int:
    print(dumps({"error": kind, "message": message}))
    return 2


def _verify(args) -> int:
    if args.trials < 1:
        return _error("--trials must be >= 1", "usage")
    if not (args.tol > 0 and math.isfinite(args.tol)):
        return _error("--tol must be positive", "usage")
    suite = run_suite(args.seed, args.trials, args.tol)
    text = dumps(suite.to_json())
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    if args.human:
        s = suite.summary()
        print(
            f"verify: {s['passed']} passed, {s['failed']} failed, {len(suite.errata)} errata",
            file=sys.stderr,
        )
    return 0 if suite.ok else 1


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _error(str(exc), "usage")
    if args.command == "verify":
        return _verify(args)
    try:
        out, line = args.func(args)
        text = dumps(out)
    except DomainError as exc:
        return _error(str(exc), "domain")
    except ConvergenceError as exc:
        return _error(str(exc), "convergence")
    except ValueError as exc:
        return _error(str(exc), "domain")
    print(text)
    if args.human:
        print(line, file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
