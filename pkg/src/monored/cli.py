"""Command-line front end.

Exit codes: 0 success, 1 domain error (ideal outside the frame class, cap
reached, ...), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .closure import closure, closure_3gen
from .equigen import (
    ExponentSet,
    bounds,
    k_fold,
    members_of,
    multiplicity,
    r_equigen,
    redone_characterize,
    sunshine_classify,
    to_ideal,
)
from .monomial import ExponentOverflow, IdealError, MonomialIdeal, ParseError, parse_ideal
from .powers import monotonicity_probe, power_profile
from .reduction import (
    CapExceeded,
    FramedIdeal,
    classify,
    minimal_monomial_reduction,
    reduction_number,
)
from .survey import (
    m_table,
    n_table,
    ourlimits_check,
    r_set,
    r_set_table,
    specialnight_check,
)


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _ideal(text: str) -> MonomialIdeal:
    try:
        return parse_ideal(text)
    except (ParseError, ExponentOverflow) as exc:
        raise UsageError(str(exc)) from exc


def _exponent_set(text: str) -> ExponentSet:
    try:
        return ExponentSet.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _framed(args) -> FramedIdeal:
    """The framed ideal named by the positional literal or by --set."""
    if args.set is not None:
        if args.ideal is not None:
            raise UsageError("give either an ideal literal or --set, not both")
        A = _exponent_set(args.set)
        return to_ideal(A, A.g, A.g)
    if args.ideal is None:
        raise UsageError("an ideal literal or --set is required")
    I = _ideal(args.ideal)
    a, b = I.pure_x, I.pure_y
    if a is None or b is None:
        raise IdealError(f"{I} lacks a pure power of x or y")
    return FramedIdeal(I, a, b)


def cmd_classify(args, out):
    I = _ideal(args.ideal)
    cl = classify(I)
    if args.json:
        rec = {"a": cl.a, "b": cl.b, "generators": I.pairs(),
               "in_I_ab": cl.in_I_ab, "in_I1_ab": cl.in_I1_ab}
        print(_dump(rec), file=out)
        return
    print(f"I = {I}", file=out)
    print(f"frame (a,b) = ({cl.a},{cl.b})", file=out)
    print(f"in I_(a,b): {'yes' if cl.in_I_ab else 'no'}", file=out)
    print(f"quasi-equigenerated (in I1_(a,b)): {'yes' if cl.in_I1_ab else 'no'}", file=out)


def cmd_reduce(args, out):
    I = _ideal(args.ideal)
    J = minimal_monomial_reduction(I)
    if args.json:
        print(_dump({"generators": I.pairs(), "J": J.pairs()}), file=out)
        return
    print(f"I = {I}", file=out)
    print(f"J = {J}", file=out)


def cmd_rnum(args, out):
    F = _framed(args)
    rep = reduction_number(F, args.cap)
    if args.json:
        print(_dump(rep.record()), file=out)
        return
    print(f"I = {F.ideal}", file=out)
    print(f"J = {rep.J}", file=out)
    print(f"r = {rep.r}", file=out)
    if rep.bounds is not None:
        mult, size = rep.bounds
        print(f"bounds: r < {mult} (multiplicity), r <= {size} (multiplicity - |A| + 2)", file=out)


def cmd_closure(args, out):
    F = _framed(args)
    L, trace = closure(F)
    three = len(F.ideal) == 3
    if three:
        p = F.ideal.gens[1]
        L3, trace3 = closure_3gen(F.a, F.b, p)
        if L3 != L:
            raise AssertionError(f"closure algorithms disagree: {L} vs {L3}")
    if args.json:
        rec = {"a": F.a, "b": F.b, "generators": F.ideal.pairs(),
               "L": L.ideal.pairs(), "added": [list(m) for m in trace.added]}
        if three:
            rec["k"] = trace3.k
            rec["steps"] = [[s.i, s.r, s.s, s.c, s.d, s.r + s.s] for s in trace3.steps]
        print(_dump(rec), file=out)
        return
    print(f"I = {F.ideal}", file=out)
    print(f"L = {L.ideal}", file=out)
    added = ", ".join(str(m) for m in trace.added) or "(none)"
    print(f"added: {added}", file=out)
    if three and args.trace:
        print(f"k = {trace3.k}", file=out)
        print(f"{'i':>3} {'r_i':>4} {'s_i':>4} {'c_i':>4} {'d_i':>4} {'r_i+s_i':>8}", file=out)
        for s in trace3.steps:
            print(f"{s.i:>3} {s.r:>4} {s.s:>4} {s.c:>4} {s.d:>4} {s.r + s.s:>8}", file=out)


def cmd_powers(args, out):
    F = _framed(args)
    prof = power_profile(F, args.kmax, args.cap)
    hits = monotonicity_probe(F, args.kmax, prof)
    bnds = prof.hoa_bounds()
    if args.json:
        rec = {"a": F.a, "b": F.b, "generators": F.ideal.pairs(), **prof.record(),
               "conjecture": {"status": "CONJECTURE", "statement": "r(I^(k+1)) <= r(I^k)",
                              "counterexamples": hits}}
        print(_dump(rec), file=out)
        return
    print(f"I = {F.ideal}", file=out)
    print(f"{'k':>3} {'r(I^k)':>7} {'bound':>6}", file=out)
    for k, (r, bd) in enumerate(zip(prof.rs, bnds), 1):
        print(f"{k:>3} {r:>7} {bd:>6}", file=out)
    ci = prof.c_index if prof.c_index is not None else f"none within {args.kmax}"
    print(f"c_index = {ci}", file=out)
    verdict = "no counterexample" if not hits else "COUNTEREXAMPLE at k = " + ", ".join(map(str, hits))
    print(f"CONJECTURE r(I^(k+1)) <= r(I^k): {verdict}", file=out)


def cmd_sumset(args, out):
    if args.set is None:
        raise UsageError("sumset needs --set g:members")
    A = _exponent_set(args.set)
    r = r_equigen(A, args.cap)
    mult, size = bounds(A)
    folds = {str(k): members_of(k_fold(A.mask, k)) for k in range(1, args.kmax + 1)}
    if args.json:
        rec = {"set": A.record(), "gcd": A.gcd, "r": r, "multiplicity": multiplicity(A),
               "multiplicity_bound": mult, "size_bound": size,
               "redone": redone_characterize(A), "sunshine": sunshine_classify(A),
               "k_fold": folds}
        print(_dump(rec), file=out)
        return
    print(f"A = {A} on [0,{A.g}], gcd(A) = {A.gcd}", file=out)
    for k, ms in folds.items():
        print(f"{k}A = {{{','.join(map(str, ms))}}}", file=out)
    print(f"r = {r}", file=out)
    print(f"multiplicity = {mult}, bound multiplicity - |A| + 2 = {size}", file=out)
    print(f"full progression (r = 1 test): {'yes' if redone_characterize(A) else 'no'}", file=out)
    print(f"maximal (r = g-1 test): {'yes' if sunshine_classify(A) else 'no'}", file=out)


def cmd_survey(args, out):
    kind, params = args.kind, args.params
    need = {"m": 1, "n": 1, "rset": 2, "ourlimits": 1, "specialnight": 1}[kind]
    if len(params) != need:
        raise UsageError(f"survey {kind} takes {need} integer argument(s)")
    if kind == "rset":
        a, b = params
        if args.csv:
            print(r_set_table(a, b).to_csv(), end="", file=out)
        elif args.json:
            print(_dump({"set": sorted(r_set(a, b))}), file=out)
        else:
            print(f"R_({a},{b}) = {{{','.join(map(str, sorted(r_set(a, b))))}}}", file=out)
        return
    if kind in ("m", "n"):
        table = (m_table if kind == "m" else n_table)(params[0])
        if args.csv:
            print(table.to_csv(), end="", file=out)
        elif args.json:
            print(table.to_json(), file=out)
        else:
            print(f"{kind}_{params[0]}: total {table.total}", file=out)
            for param, j, count, total, num, den in table.rows():
                print(f"  r = {j:>3}: {count:>7}  ({num}/{den})", file=out)
            for key, val in table.extra.items():
                print(f"  {key} = {val}", file=out)
        return
    if kind == "ourlimits":
        res = ourlimits_check(params[0])
        rec = {"p": res.p, "size": res.size, "gap": res.gap, "bound": res.bound, "holds": res.holds}
        if args.json:
            print(_dump(rec), file=out)
        else:
            print(f"|R_({res.p},{res.p})| = {res.size}, gap = {res.gap} >= {res.bound}: "
                  f"{'holds' if res.holds else 'FAILS'}", file=out)
        return
    cov = specialnight_check(params[0], args.bmax)
    if args.json:
        print(_dump({"a": cov.a, "bmax": cov.bmax, "covered": sorted(cov.covered),
                     "complete": cov.complete}), file=out)
    else:
        print(f"union of R_({cov.a},b), {cov.a} <= b <= {cov.bmax} = "
              f"{{{','.join(map(str, sorted(cov.covered)))}}}: "
              f"{'complete' if cov.complete else 'incomplete'}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monored",
        description="Reductions and reduction numbers of monomial ideals in K[x,y].",
        epilog="Ideal literals: 'x^4 + y^8 + x^3*y^3' or '[(4,0),(0,8),(3,3)]'.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, cap=False, kmax=None, ideal=True, set_opt=False):
        p.add_argument("--json", action="store_true", help="emit one JSON record")
        if ideal:
            p.add_argument("ideal", nargs="?" if set_opt else None, help="ideal literal")
        if set_opt:
            p.add_argument("--set", metavar="g:members",
                           help="quasi-equigenerated ideal I_A in the frame (g,g)")
        if cap:
            p.add_argument("--cap", type=int, default=None,
                           help="iteration cap (default max(2*max(a,b), 64))")
        if kmax is not None:
            p.add_argument("--kmax", type=int, default=kmax, help=f"largest power (default {kmax})")

    common(sub.add_parser("classify", help="frame and class membership"))
    common(sub.add_parser("reduce", help="minimal monomial reduction"))
    common(sub.add_parser("rnum", help="reduction number"), cap=True, set_opt=True)
    p = sub.add_parser("closure", help="smallest reduction-number-1 ideal containing I")
    common(p, set_opt=True)
    p.add_argument("--trace", action="store_true", help="print the residue table (3 generators)")
    common(sub.add_parser("powers", help="reduction numbers of I^k"), cap=True, kmax=8, set_opt=True)
    p = sub.add_parser("sumset", help="sumset data of an exponent set")
    common(p, cap=True, kmax=3, ideal=False)
    p.add_argument("--set", metavar="g:members", required=True)
    p = sub.add_parser("survey", help="enumeration surveys")
    p.add_argument("kind", choices=["m", "n", "rset", "ourlimits", "specialnight"])
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--bmax", type=int, default=None, help="largest b for specialnight (default 2a)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true", help="one row per bucket")
    return parser


COMMANDS = {
    "classify": cmd_classify,
    "reduce": cmd_reduce,
    "rnum": cmd_rnum,
    "closure": cmd_closure,
    "powers": cmd_powers,
    "sumset": cmd_sumset,
    "survey": cmd_survey,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for flag in ("cap", "kmax", "bmax"):
        val = getattr(args, flag, None)
        if val is not None and val < 1:
            print(f"monored: --{flag} must be positive", file=err)
            return 2
    try:
        COMMANDS[args.verb](args, out)
    except UsageError as exc:
        print(f"monored: {exc}", file=err)
        return 2
    except CapExceeded as exc:
        print(f"monored: cap reached: {exc}", file=err)
        return 1
    except (IdealError, ValueError, ExponentOverflow) as exc:
        print(f"monored: {exc}", file=err)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
