"""Smallest monomial ideal of reduction number 1 containing a given ideal."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .monomial import Monomial, MonomialIdeal, contains, ideal_sum, intersection, product
from .reduction import FramedIdeal, NotInFrame, in_D


@dataclass(frozen=True)
class Step:
    i: int
    r: int
    s: int
    c: int
    d: int

    @property
    def p(self) -> Monomial:
        return Monomial(self.c, self.d)


@dataclass(frozen=True)
class ClosureTrace:
    added: tuple[Monomial, ...] = ()
    k: int | None = None
    steps: tuple[Step, ...] = field(default=())


def violations(F: FramedIdeal) -> list[tuple[Monomial, Monomial, Monomial]]:
    """Generator pairs whose product is not in J*I, with the missing witness.

    For u_p u_q = x^c y^d not divisible by x^a y^b, exactly one of c >= a,
    d >= b holds, and the product lies in J*I iff x^(c-a) y^d (resp.
    x^c y^(d-b)) lies in I.
    """
    if F.is_J:
        raise NotInFrame("I = J has reduction number 0; no violations are defined")
    a, b, I = F.a, F.b, F.ideal
    inner = I.gens[1:-1]
    out = []
    for i, p in enumerate(inner):
        for q in inner[i:]:
            c, d = p.c + q.c, p.d + q.d
            if c >= a and d >= b:
                continue
            if c >= a:
                w = Monomial(c - a, d)
            else:
                assert d >= b, "product of two generators fell below the frame"
                w = Monomial(c, d - b)
            if not contains(I, w):
                out.append((p, q, w))
    return out


def closure(F: FramedIdeal, one_at_a_time: bool = False) -> tuple[FramedIdeal, ClosureTrace]:
    """Adjoin forced witnesses until no violation remains.

    Every witness must lie in any reduction-number-1 ideal containing I, so
    the fixpoint is the smallest such ideal.
    """
    if F.is_J:
        return F, ClosureTrace()
    added: list[Monomial] = []
    cur = F
    while True:
        viol = violations(cur)
        if not viol:
            break
        new = []
        for _, _, w in viol:
            if w not in new:
                new.append(w)
        if one_at_a_time:
            new = new[:1]
        added.extend(new)
        cur = FramedIdeal(ideal_sum(cur.ideal, MonomialIdeal(new)), F.a, F.b)
    return cur, ClosureTrace(added=tuple(added))


def closure_3gen(a: int, b: int, p: tuple[int, int]) -> tuple[FramedIdeal, ClosureTrace]:
    """Closure of (x^a, y^b, x^c y^d) from the residues of i*c mod a, i*d mod b."""
    if not in_D(a, b, p):
        raise NotInFrame(f"{tuple(p)} is not in D_({a},{b})")
    c, d = p
    steps = []
    i = 1
    while True:
        r, ci = divmod(i * c, a)
        s, di = divmod(i * d, b)
        steps.append(Step(i, r, s, ci, di))
        if r + s >= i:
            break
        i += 1
    k = i
    pts = [st.p for st in steps[:-1]]
    L = FramedIdeal(MonomialIdeal([(a, 0), (0, b), *pts]), a, b)
    return L, ClosureTrace(added=tuple(pts[1:]), k=k, steps=tuple(steps))


def _has_r_one(L: MonomialIdeal, J: MonomialIdeal) -> bool:
    return product(L, L) == product(J, L)


def _staircases(a: int, b: int, ceiling: list[int]):
    """Monomial ideals containing (x^a, y^b) with inner generators in H+.

    ``ceiling[c]`` is the largest allowed height at column c (the ideal must
    contain everything at or above it).  Heights are non-increasing in c;
    height b means "no point of the ideal below y^b in this column".
    """
    lo = [max(0, -(-(a * b - b * c) // a)) for c in range(a)]
    heights = [0] * a

    def rec(c: int, prev: int):
        if c == a:
            yield list(heights)
            return
        for h in range(lo[c], min(prev, ceiling[c]) + 1):
            heights[c] = h
            yield from rec(c + 1, h)

    yield from rec(0, b)


GRID_LIMIT = 40


def minimal_one_oracle(F: FramedIdeal) -> FramedIdeal:
    """Intersect every reduction-number-1 ideal of the frame containing I.

    Brute force over all staircases in [0,a) x [0,b) ∩ H+; meant only for
    small frames.
    """
    a, b, I = F.a, F.b, F.ideal
    grid = sum(1 for c in range(a) for d in range(b) if b * c + a * d >= a * b)
    if grid > GRID_LIMIT:
        raise ValueError(f"grid of {grid} points exceeds the oracle limit {GRID_LIMIT}")
    if F.is_J:
        return F
    J = F.J
    ceiling = []
    for c in range(a):
        h = b
        for g in I.gens:
            if g.c <= c:
                h = min(h, g.d)
        ceiling.append(h)
    found = []
    for hs in _staircases(a, b, ceiling):
        gens = [(a, 0), (0, b)] + [(c, h) for c, h in enumerate(hs) if h < b]
        L = MonomialIdeal(gens)
        if _has_r_one(L, J):
            found.append(L)
    if not found:
        raise AssertionError(f"no reduction-number-1 ideal contains {I}")
    return FramedIdeal(reduce(intersection, found), a, b)
