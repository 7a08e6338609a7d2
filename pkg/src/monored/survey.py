"""Exhaustive counting surveys over small frames."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .equigen import all_sets, masiproves_formula, r_equigen, ExponentSet
from .reduction import D_points, three_gen_reduction_number

M_TABLE_LIMIT = 22


def totient(n: int) -> int:
    """Euler's phi by trial-division factorization."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def num_divisors(n: int) -> int:
    return sum(1 for d in range(1, n + 1) if n % d == 0)


@dataclass(frozen=True)
class SurveyTable:
    name: str
    parameter: tuple[int, ...]
    buckets: dict[int, int]
    total: int
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if sum(self.buckets.values()) != self.total:
            raise AssertionError("bucket counts do not add up to the total")

    def ratio(self, j: int) -> Fraction:
        return Fraction(self.buckets.get(j, 0), self.total)

    def rows(self) -> list[tuple]:
        param = ",".join(map(str, self.parameter))
        out = []
        for j in sorted(self.buckets):
            q = self.ratio(j)
            out.append((param, j, self.buckets[j], self.total, q.numerator, q.denominator))
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["parameter", "j", "count", "total", "ratio_num", "ratio_den"])
        w.writerows(self.rows())
        return buf.getvalue()

    def record(self) -> dict:
        return {
            "name": self.name,
            "parameter": list(self.parameter),
            "buckets": {str(j): n for j, n in sorted(self.buckets.items())},
            "total": self.total,
            "ratios": {
                str(j): [self.ratio(j).numerator, self.ratio(j).denominator]
                for j in sorted(self.buckets)
            },
            **self.extra,
        }

    def to_json(self) -> str:
        return json.dumps(self.record(), separators=(",", ":"))


def m_table(a: int) -> SurveyTable:
    """Reduction numbers of all 2^(a-1) ideals I_A in the frame (a, a)."""
    if a < 2:
        raise ValueError("m_table needs a >= 2")
    if a > M_TABLE_LIMIT:
        raise ValueError(f"a = {a} is beyond the exhaustive limit {M_TABLE_LIMIT}")
    counts = Counter(r_equigen(A) for A in all_sets(a))
    return SurveyTable("m", (a,), dict(counts), sum(counts.values()))


def n_table(a: int, verify: bool = False) -> SurveyTable:
    """Reduction numbers of the a-1 three-generated ideals I_{0,e,a}.

    With ``verify`` each formula value is recomputed by sumset iteration.
    """
    if a < 2:
        raise ValueError("n_table needs a >= 2")
    counts: Counter = Counter()
    for e in range(1, a):
        r = masiproves_formula(a, e)
        if verify and r != r_equigen(ExponentSet.of(a, [0, e, a])):
            raise AssertionError(f"formula disagrees with sumsets at a={a}, e={e}")
        counts[r] += 1
    top = counts.get(a - 1, 0)
    phi = totient(a)
    return SurveyTable(
        "n", (a,), dict(counts), a - 1,
        {"max_bucket": top, "totient": phi, "matches_totient": top == phi},
    )


def r_set(a: int, b: int) -> frozenset[int]:
    """Reduction numbers of (x^a, y^b, u_p) over p in D_{a,b}."""
    if a < 2 or b < 2:
        raise ValueError("r_set needs a, b >= 2")
    return frozenset(three_gen_reduction_number(a, b, p) for p in D_points(a, b))


def r_set_table(a: int, b: int) -> SurveyTable:
    counts = Counter(three_gen_reduction_number(a, b, p) for p in D_points(a, b))
    return SurveyTable("rset", (a, b), dict(counts), sum(counts.values()))


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class OurLimits:
    p: int
    size: int
    gap: int
    bound: int
    holds: bool


def ourlimits_check(p: int) -> OurLimits:
    """gap = (p-1) - |R_(p,p)| against the lower bound (p-1)/2 - 1."""
    if p <= 2 or not _is_prime(p):
        raise ValueError("ourlimits_check needs an odd prime")
    size = len(r_set(p, p))
    gap = (p - 1) - size
    bound = (p - 1) // 2 - 1
    return OurLimits(p, size, gap, bound, gap >= bound)


@dataclass(frozen=True)
class Coverage:
    a: int
    bmax: int
    covered: frozenset[int]
    complete: bool


def specialnight_check(a: int, bmax: int | None = None) -> Coverage:
    """Union of R_(a,b) over a <= b <= bmax (default 2a) versus [1, a-1]."""
    if a < 2:
        raise ValueError("specialnight_check needs a >= 2")
    if bmax is None:
        bmax = 2 * a
    if bmax < a:
        raise ValueError("bmax must be >= a")
    covered: set[int] = set()
    for b in range(a, bmax + 1):
        covered |= r_set(a, b)
    return Coverage(a, bmax, frozenset(covered), covered == set(range(1, a)))
