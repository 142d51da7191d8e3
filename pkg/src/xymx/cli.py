"""Command-line front end.

Exit codes: 0 when the requested result is fully established, 1 on usage
errors, 2 when something stays unresolved (or a verification fails).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import serialize
from .classify import ClassifyConfig, EulerFamily, classify, classify_s2, k_bound
from .hasse import (
    CANDIDATE_FAILURE,
    DEFAULT_EXP_CAP,
    DEFAULT_GLOBAL_BOUND,
    DEFAULT_PRIME_CAP,
    GLOBALLY_SOLVABLE,
    hasse_scan,
)
from .pell import PellFamily, fundamental_unit, generate, representatives
from .thue import DEFAULT_N_MAX, DEFAULT_SEARCH_BOUND, UNRESOLVED, decide, key_targets
from .verify import PowerSolution, expand, verify_power_solution

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCOMPLETE = 2

DIGIT_LIMIT = 20


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _pretty(sol: PowerSolution) -> str:
    lit = expand(sol, DIGIT_LIMIT)
    if lit is None:
        return str(sol)
    return f"({lit[0]}, {lit[1]})"


# --------------------------------------------------------------------------
# solve

def cmd_solve(args) -> int:
    if args.m < 2:
        raise UsageError("solve needs m >= 2; use `xymx euler` for x^y = y^x (m = 1)")
    cfg = ClassifyConfig(
        k_max=args.k_max,
        sieve_n_max=args.sieve_n_max,
        search_bound=args.search_bound,
        families_count=args.families_count,
        workers=args.workers,
    )
    result = classify(args.m, cfg)
    m = args.m
    lines = [f"Positive rational solutions of x^y = y^({m}x)", ""]
    lo, hi = result.k_range
    bound = k_bound(m)
    note = "" if hi >= bound else f" (truncated; the exponent bound is {bound})"
    lines.append(f"Thue exponents examined: {lo}..{hi}{note}")
    lines.append("S_0: (1, 1)")
    lines.append(f"S_1: x = ({m} + {m}/n)^n, y = ({m} + {m}/n)^(n+1), n >= 1")
    lines.append(f"     x = ({m} - {m}/n)^(-n), y = ({m} - {m}/n)^(1-n), n >= 2")
    if result.s2:
        lines.append(f"S_2: infinite, {len(result.s2)} Pell famil{'y' if len(result.s2) == 1 else 'ies'}")
        for fam in result.s2:
            rep, unit = fam.family.rep, fam.family.unit
            lines.append(
                f"  u^2 - {m} v^2 = {rep.N}: (u, v) = ({rep.x0}, {rep.y0}) * ({unit.u1} + {unit.v1} sqrt({m}))^j"
            )
            for e in fam.elements:
                lines.append(f"    ({e.u}, {e.v}) -> {_pretty(e.solution)}")
    else:
        lines.append(f"S_2: empty ({result.s2_verdict})")
    lines.append("Sporadic solutions (k >= 3):")
    for sol in result.sporadics:
        lines.append(f"  {_pretty(sol)}  [k = {abs(sol.e_y - sol.e_x)}]")
    if not result.sporadics:
        lines.append("  none")
    if result.survivors:
        lines.append("Equations surviving the residue sieve:")
        for k, ts in result.survivors:
            lines.append(f"  k = {k}: " + ", ".join(f"{t:+d}" for t in ts))
    for r in result.rejected:
        lines.append(f"Rejected ({r.u}, {r.v}) for k = {r.k}, c = {r.c}: {r.reason}")
    if result.unresolved:
        lines.append(f"Unresolved (no coprime solutions with v <= {cfg.search_bound}; completeness not proven):")
        for eq in result.unresolved:
            lines.append(f"  {eq}")
    _emit(args, serialize.solution_set_to_dict(result), lines)
    return EXIT_OK if result.complete else EXIT_INCOMPLETE


# --------------------------------------------------------------------------
# euler

def cmd_euler(args) -> int:
    plus, minus = EulerFamily(1, "plus"), EulerFamily(1, "minus")
    rows = []
    lines = ["Rational solutions of x^y = y^x besides x = y:",
             "x_n = (1 + 1/n)^n, y_n = (1 + 1/n)^(n+1), n != 0, -1", ""]
    for n in range(-args.count - 1, args.count + 1):
        if n in (0, -1):
            continue
        sol = plus.element(n) if n > 0 else minus.element(-n)
        rows.append({"n": str(n), "solution": serialize.solution_to_dict(sol)})
        line = f"n = {n:>3}: {_pretty(sol)}"
        if n < 0:
            line += f"   = (y_{-n - 1}, x_{-n - 1})"
        lines.append(line)
    _emit(args, {"m": "1", "elements": rows}, lines)
    return EXIT_OK


# --------------------------------------------------------------------------
# table

def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        a, b = int(lo), int(hi) if sep else int(lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text}") from None
    if a < 2 or b < a:
        raise argparse.ArgumentTypeError(f"range must satisfy 2 <= A <= B, got {text}")
    return a, b


def cmd_table(args) -> int:
    lo, hi = args.s2
    rows, lines = [], [f"S_2(m) for {lo} <= m <= {hi}:"]
    infinite = []
    for m in range(lo, hi + 1):
        fams, verdict = classify_s2(m, 1)
        status = "infinite" if fams else "empty"
        reason = verdict if not fams else f"{len(fams)} Pell class(es)"
        if fams:
            infinite.append(m)
        rows.append({"m": str(m), "status": status, "reason": verdict})
        lines.append(f"  m = {m:>3}: {status:8s} {reason}")
    lines.append("infinite for m in {" + ", ".join(map(str, infinite)) + "}")
    _emit(args, {"range": [str(lo), str(hi)], "rows": rows, "infinite": [str(m) for m in infinite]}, lines)
    return EXIT_OK


# --------------------------------------------------------------------------
# pell

def cmd_pell(args) -> int:
    unit = fundamental_unit(args.D)
    reps = representatives(args.D, args.N)
    lines = [f"x^2 - {args.D} y^2 = {args.N}", f"fundamental unit: ({unit.u1}, {unit.v1})"]
    fams = []
    for rep in reps:
        sols = generate(PellFamily(rep, unit), args.count)
        fams.append({"rep": serialize.rep_to_dict(rep), "solutions": [[str(x), str(y)] for x, y in sols]})
        lines.append(f"class of ({rep.x0}, {rep.y0}): " + ", ".join(f"({x}, {y})" for x, y in sols))
    if not reps:
        lines.append("no integer solutions")
    _emit(args, {"unit": serialize.unit_to_dict(unit), "families": fams}, lines)
    return EXIT_OK


# --------------------------------------------------------------------------
# thue

def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text}") from None


def cmd_thue(args) -> int:
    if args.k < 3 or args.m < 2:
        raise UsageError("thue needs k >= 3 and m >= 2")
    targets = args.targets if args.targets else key_targets(args.m, args.k)
    if args.both_signs:
        targets = sorted({s * t for t in targets for s in (1, -1)})
    if 0 in targets:
        raise UsageError("targets must be nonzero")
    out = decide(args.k, args.m, targets, n_max=args.sieve_n_max, search_bound=args.search_bound)
    lines = [f"x^{args.k} - {args.m} y^{args.k} = c for c in {list(out.targets)}: {out.kind}"]
    for w in out.witnesses:
        lines.append(f"  mod {w.modulus}: excludes {sorted(w.eliminated_targets)}")
    for u, v, c in out.solutions:
        lines.append(f"  solution ({u}, {v}) for c = {c}")
    if out.survivors:
        lines.append(f"  survivors: {list(out.survivors)}; complete: {out.complete}")
    _emit(args, serialize.outcome_to_dict(out), lines)
    return EXIT_INCOMPLETE if out.kind == UNRESOLVED or not out.complete else EXIT_OK


# --------------------------------------------------------------------------
# verify

def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 4/5, got {text}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("base must be positive")
    return value


def cmd_verify(args) -> int:
    sol = PowerSolution(args.base, args.ex, args.ey)
    if args.ex == 0 and not sol.is_trivial:
        raise UsageError("--ex must be nonzero")
    ok = verify_power_solution(sol, args.m)
    lines = [f"{sol} solves x^y = y^({args.m}x): {str(ok).lower()}"]
    _emit(args, {"solution": serialize.solution_to_dict(sol), "m": str(args.m), "verified": ok}, lines)
    return EXIT_OK if ok else EXIT_INCOMPLETE


# --------------------------------------------------------------------------
# hasse

def cmd_hasse(args) -> int:
    v = hasse_scan(args.k, args.m, args.c, args.prime_cap, args.local_bound, args.global_bound)
    lines = [f"x^{args.k} - {args.m} y^{args.k} = {args.c}: {v.kind}"]
    if v.kind == GLOBALLY_SOLVABLE:
        lines.append(f"  witness {v.witness}")
    elif v.kind == CANDIDATE_FAILURE:
        lines.append(
            f"  primitive solutions mod every p^e <= {v.exp_cap} (p <= {v.prime_cap}); "
            f"none with |y| <= {v.global_bound}"
        )
    else:
        lines.append(f"  no primitive solution mod {v.report.p}^{v.report.e}")
    _emit(args, serialize.verdict_to_dict(v), lines)
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="xymx", description="Positive rational solutions of x^y = y^(m x).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = with_json(sub.add_parser("solve", help="classify all solutions for one m"))
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--k-max", type=_positive, default=None, help="largest Thue exponent (default: the proven bound)")
    p.add_argument("--sieve-n-max", type=_positive, default=DEFAULT_N_MAX)
    p.add_argument("--search-bound", type=_positive, default=DEFAULT_SEARCH_BOUND)
    p.add_argument("--families-count", type=_positive, default=5)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_solve)

    p = with_json(sub.add_parser("euler", help="list the m = 1 families"))
    p.add_argument("--count", type=_positive, default=5)
    p.set_defaults(func=cmd_euler)

    p = with_json(sub.add_parser("table", help="emptiness table for k = 2"))
    p.add_argument("--s2", type=_range, required=True, metavar="A:B")
    p.set_defaults(func=cmd_table)

    p = with_json(sub.add_parser("pell", help="solve x^2 - D y^2 = N"))
    p.add_argument("-D", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--count", type=_positive, default=5)
    p.set_defaults(func=cmd_pell)

    p = with_json(sub.add_parser("thue", help="decide x^k - m y^k = c"))
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--targets", type=_int_list, default=None)
    p.add_argument("--both-signs", action="store_true")
    p.add_argument("--sieve-n-max", type=_positive, default=DEFAULT_N_MAX)
    p.add_argument("--search-bound", type=_positive, default=DEFAULT_SEARCH_BOUND)
    p.set_defaults(func=cmd_thue)

    p = with_json(sub.add_parser("verify", help="check x = base^ex, y = base^ey exactly"))
    p.add_argument("--base", type=_fraction, required=True)
    p.add_argument("--ex", type=int, required=True)
    p.add_argument("--ey", type=int, required=True)
    p.add_argument("-m", type=_positive, required=True)
    p.set_defaults(func=cmd_verify)

    p = with_json(sub.add_parser("hasse", help="look for local-global failures"))
    p.add_argument("-k", type=_positive, required=True)
    p.add_argument("-m", type=_positive, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--prime-cap", type=_positive, default=DEFAULT_PRIME_CAP)
    p.add_argument("--local-bound", type=_positive, default=DEFAULT_EXP_CAP, help="largest prime power scanned")
    p.add_argument("--global-bound", type=_positive, default=DEFAULT_GLOBAL_BOUND)
    p.set_defaults(func=cmd_hasse)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"xymx {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
