"""Minimal monomial reductions and reduction numbers.

An ideal with pure powers x^a and y^b has (x^a, y^b) as its minimal
monomial reduction exactly when every generator x^c y^d satisfies
``b*c + a*d >= a*b``.  All such comparisons are done on integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .monomial import (
    IdealError,
    Monomial,
    MonomialIdeal,
    checked,
    format_monomial,
    ideal_sum,
    minimalize,
    product,
)


class NotInFrame(IdealError):
    """The ideal is not in the class with reduction (x^a, y^b)."""


class CapExceeded(RuntimeError):
    """An iterative search hit its cap without terminating."""


def default_cap(a: int, b: int) -> int:
    return max(2 * max(a, b), 64)


@dataclass(frozen=True)
class NuValue:
    """(b*c + a*d) / (a*b), kept unreduced."""

    num: int
    den: int

    def _cross(self, other) -> tuple[int, int]:
        if isinstance(other, NuValue):
            return self.num * other.den, other.num * self.den
        q = Fraction(other)
        return self.num * q.denominator, q.numerator * self.den

    def __eq__(self, other) -> bool:
        lhs, rhs = self._cross(other)
        return lhs == rhs

    def __hash__(self) -> int:
        return hash(Fraction(self.num, self.den))

    def __lt__(self, other) -> bool:
        lhs, rhs = self._cross(other)
        return lhs < rhs

    def __le__(self, other) -> bool:
        lhs, rhs = self._cross(other)
        return lhs <= rhs

    def __gt__(self, other) -> bool:
        lhs, rhs = self._cross(other)
        return lhs > rhs

    def __ge__(self, other) -> bool:
        lhs, rhs = self._cross(other)
        return lhs >= rhs

    def __add__(self, other: "NuValue") -> "NuValue":
        if self.den == other.den:
            return NuValue(self.num + other.num, self.den)
        return NuValue(self.num * other.den + other.num * self.den, self.den * other.den)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def nu(a: int, b: int, m: tuple[int, int]) -> NuValue:
    if a < 1 or b < 1:
        raise ValueError("frame exponents must be positive")
    c, d = m
    return NuValue(checked(b * c + a * d), checked(a * b))


@dataclass(frozen=True)
class FramedIdeal:
    """An ideal certified to have (x^a, y^b) as minimal monomial reduction."""

    ideal: MonomialIdeal
    a: int
    b: int

    def __post_init__(self):
        I, a, b = self.ideal, self.a, self.b
        if I.pure_x != a or I.pure_y != b:
            raise NotInFrame(f"{I} does not have x^{a} and y^{b} as generators")
        ab = a * b
        for c, d in I.gens:
            if b * c + a * d < ab:
                raise NotInFrame(
                    f"{format_monomial((c, d))} lies below the line through ({a},0) and (0,{b})"
                )

    @classmethod
    def of(cls, I: MonomialIdeal) -> "FramedIdeal":
        a, b = _frame(I)
        return cls(I, a, b)

    @property
    def J(self) -> MonomialIdeal:
        return MonomialIdeal._trusted((Monomial(0, self.b), Monomial(self.a, 0)))

    @property
    def is_J(self) -> bool:
        return len(self.ideal) == 2

    @property
    def quasi_equigenerated(self) -> bool:
        ab = self.a * self.b
        return all(self.b * c + self.a * d == ab for c, d in self.ideal.gens)

    def __str__(self) -> str:
        return str(self.ideal)


@dataclass(frozen=True)
class ReductionReport:
    J: MonomialIdeal
    r: int
    witness_k: int
    bounds: Optional[tuple[int, int]] = None
    ideal: Optional[MonomialIdeal] = field(default=None, compare=False)

    def record(self) -> dict:
        a, b = self.J.pure_x, self.J.pure_y
        rec = {
            "a": a,
            "b": b,
            "generators": self.ideal.pairs() if self.ideal is not None else None,
            "J": self.J.pairs(),
            "r": self.r,
            "witness_k": self.witness_k,
        }
        if self.bounds is not None:
            rec["multiplicity_bound"], rec["size_bound"] = self.bounds
        return rec


def _frame(I: MonomialIdeal) -> tuple[int, int]:
    a, b = I.pure_x, I.pure_y
    if a is None or b is None:
        raise IdealError(f"{I} has height < 2: it needs pure powers of x and y")
    return a, b


def minimal_monomial_reduction(I: MonomialIdeal) -> MonomialIdeal:
    """Generators sitting at vertices of the lower convex hull of G(I).

    Points in the relative interior of a hull edge are dropped.
    """
    _frame(I)
    hull: list[Monomial] = []
    for p in I.gens:
        while len(hull) >= 2:
            o, q = hull[-2], hull[-1]
            # keep q only for a strict left turn o -> q -> p
            cross = (q.c - o.c) * (p.d - o.d) - (q.d - o.d) * (p.c - o.c)
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return MonomialIdeal._trusted(tuple(hull))


@dataclass(frozen=True)
class Classification:
    a: int
    b: int
    in_I_ab: bool
    in_I1_ab: bool


def classify(I: MonomialIdeal) -> Classification:
    a, b = _frame(I)
    ab = a * b
    vals = [b * c + a * d for c, d in I.gens]
    return Classification(a, b, all(v >= ab for v in vals), all(v == ab for v in vals))


def reduction_number_wrt(I: MonomialIdeal, J: MonomialIdeal, cap: int) -> int:
    """Least k >= 0 with I^(k+1) = J I^k, searching k < cap."""
    Ik = MonomialIdeal._trusted((Monomial(0, 0),))
    for k in range(cap):
        nxt = product(Ik, I)
        if nxt == product(J, Ik):
            return k
        Ik = nxt
    raise CapExceeded(f"no k < {cap} with I^(k+1) = J I^k for I = {I}")


def reduction_number(F: FramedIdeal, cap: int | None = None) -> ReductionReport:
    if cap is None:
        cap = default_cap(F.a, F.b)
    r = reduction_number_wrt(F.ideal, F.J, cap)
    bounds = None
    if F.quasi_equigenerated:
        from .equigen import bounds as _bounds, from_ideal

        bounds = _bounds(from_ideal(F))
    return ReductionReport(F.J, r, r, bounds, F.ideal)


def in_D(a: int, b: int, p: tuple[int, int]) -> bool:
    c, d = p
    return 0 < c < a and 0 < d < b and b * c + a * d >= a * b


def D_points(a: int, b: int) -> list[Monomial]:
    """Lattice points of D_{a,b}: 0<c<a, 0<d<b, bc+ad >= ab."""
    out = []
    for c in range(1, a):
        lo = max(1, -(-(a * b - b * c) // a))
        out.extend(Monomial(c, d) for d in range(lo, b))
    return out


def three_gen_ideal(a: int, b: int, p: tuple[int, int]) -> FramedIdeal:
    return FramedIdeal(MonomialIdeal([(a, 0), (0, b), p]), a, b)


def three_gen_reduction_number(a: int, b: int, p: tuple[int, int]) -> int:
    """r(x^a, y^b, x^c y^d) = (least k with (x^c y^d)^k in J^k) - 1."""
    if not in_D(a, b, p):
        raise NotInFrame(f"{tuple(p)} is not in D_({a},{b})")
    c, d = p
    k = 1
    while True:
        kc, kd = k * c, k * d
        # kc >= i*a and kd >= (k-i)*b for some i in [0, k]
        i = min(k, kc // a)
        if kd >= (k - i) * b:
            return k - 1
        k += 1


def equigenerated_part(F: FramedIdeal) -> FramedIdeal:
    ab = F.a * F.b
    gens = [g for g in F.ideal.gens if F.b * g.c + F.a * g.d == ab]
    return FramedIdeal(MonomialIdeal._trusted(tuple(gens)), F.a, F.b)


def strict_part(a: int, b: int, r) -> MonomialIdeal:
    """Minimal generators of the ideal of monomials u with nu(u) > r."""
    q = Fraction(r)
    if q < 1:
        raise ValueError("threshold r must be >= 1")
    p, s = q.numerator, q.denominator
    gens = []
    c = 0
    while True:
        # least d >= 0 with s*(b*c + a*d) > p*a*b
        rhs = p * a * b - s * b * c
        d = rhs // (s * a) + 1 if rhs >= 0 else 0
        gens.append((c, d))
        if d == 0:
            break
        c += 1
    return minimalize(gens)


def onion_ideal(a: int, b: int, A, r) -> FramedIdeal:
    """I_A + (u : nu(u) > r) in the frame (a, b)."""
    from .equigen import to_ideal

    IA = to_ideal(A, a, b)
    return FramedIdeal(ideal_sum(IA.ideal, strict_part(a, b, r)), a, b)
