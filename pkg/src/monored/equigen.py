"""Sumset calculus for quasi-equigenerated ideals.

With g = gcd(a, b), the ideal I_A attached to A ⊆ [0, g] (0, g ∈ A) is
generated by x^(i*a/g) y^(b - i*b/g) for i in A.  Products of such ideals
are sumsets: I_A I_B = I_(A+B), so reduction numbers reduce to bit
arithmetic.  Sets are Python ints used as bitsets (bit i <=> i ∈ A).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable

from .monomial import Monomial, MonomialIdeal, ParseError, format_monomial
from .reduction import CapExceeded, FramedIdeal, NotInFrame


def bits(members: Iterable[int]) -> int:
    mask = 0
    for i in members:
        if i < 0:
            raise ValueError("sumset elements must be nonnegative")
        mask |= 1 << i
    return mask


def members_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class ExponentSet:
    g: int
    mask: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("g must be positive")
        if self.mask >> (self.g + 1):
            raise ValueError(f"members must lie in [0, {self.g}]")
        if not (self.mask & 1 and self.mask >> self.g & 1):
            raise ValueError(f"0 and {self.g} must both be members")

    @classmethod
    def of(cls, g: int, members: Iterable[int]) -> "ExponentSet":
        return cls(g, bits(members))

    @classmethod
    def parse(cls, text: str) -> "ExponentSet":
        """Parse ``g:m1,m2,...``; 0 and g are added if omitted."""
        try:
            g_text, _, rest = text.partition(":")
            g = int(g_text)
            ms = [int(t) for t in rest.split(",") if t.strip()]
        except ValueError as exc:
            raise ParseError(f"bad exponent set {text!r}; expected g:m1,m2,...") from exc
        if g < 1 or any(m < 0 or m > g for m in ms):
            raise ParseError(f"members of {text!r} must lie in [0, {g}] with g >= 1")
        return cls.of(g, [0, g, *ms])

    @property
    def members(self) -> list[int]:
        return members_of(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    @property
    def gcd(self) -> int:
        return reduce(gcd, self.members)

    def scaled_down(self) -> "ExponentSet":
        """A/t on [0, g/t] with t = gcd(A)."""
        t = self.gcd
        return ExponentSet.of(self.g // t, [m // t for m in self.members])

    def record(self) -> dict:
        return {"g": self.g, "members": self.members}

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def sumset(A: int, B: int) -> int:
    """A + B for bitset-encoded sets."""
    if A.bit_length() > B.bit_length():
        A, B = B, A
    out = 0
    i = 0
    while A:
        if A & 1:
            out |= B << i
        A >>= 1
        i += 1
    return out


def k_fold(A: int, k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for _ in range(k):
        out = sumset(out, A)
    return out


def to_ideal(A: ExponentSet, a: int, b: int) -> FramedIdeal:
    g = A.g
    if gcd(a, b) != g:
        raise NotInFrame(f"gcd({a},{b}) = {gcd(a, b)} but the set lives on [0,{g}]")
    sa, sb = a // g, b // g
    gens = tuple(Monomial(i * sa, b - i * sb) for i in A.members)
    return FramedIdeal(MonomialIdeal._trusted(gens), a, b)


def from_ideal(F: FramedIdeal) -> ExponentSet:
    g = gcd(F.a, F.b)
    sa, sb = F.a // g, F.b // g
    idx = []
    for c, d in F.ideal.gens:
        i, rem = divmod(c, sa)
        if rem or d != F.b - i * sb:
            raise NotInFrame(f"{format_monomial((c, d))} is off the segment from ({F.a},0) to (0,{F.b})")
        idx.append(i)
    return ExponentSet.of(g, idx)


def r_equigen(A: ExponentSet, cap: int | None = None) -> int:
    """Least k >= 0 with (k+1)A = {0, g} + kA.

    Without ``cap`` the search stops at g^2, far above any proven bound, and
    reaching it is treated as a broken invariant.
    """
    g, mask = A.g, A.mask
    limit = max(g * g, 1) if cap is None else cap
    kA = 1
    for k in range(limit + 1):
        nxt = sumset(kA, mask)
        if nxt == kA | (kA << g):
            return k
        kA = nxt
    if cap is not None:
        raise CapExceeded(f"no k <= {cap} with (k+1)A = {{0,g}} + kA for {A}")
    raise AssertionError(f"r_equigen exceeded g^2 = {limit} for {A}; theory violated")


def redone_characterize(A: ExponentSet) -> bool:
    """A is the full progression {0, d, ..., g} with d = gcd(A) != g."""
    d = A.gcd
    if d == A.g:
        return False
    return A.members == list(range(0, A.g + 1, d))


def masiproves_formula(g: int, e: int) -> int:
    if not 1 <= e <= g - 1:
        raise ValueError(f"e must lie in [1, {g - 1}]")
    return g // gcd(e, g) - 1


def somayeh_family(g: int, j: int) -> ExponentSet:
    """[0, 1] ∪ [j+1, g], whose reduction number is j."""
    if not 1 <= j <= g - 1:
        raise ValueError(f"j must lie in [1, {g - 1}]")
    return ExponentSet.of(g, [0, 1, *range(j + 1, g + 1)])


def sunshine_classify(A: ExponentSet) -> bool:
    ms = A.members
    if len(ms) == 2:
        return A.g == 1
    return len(ms) == 3 and gcd(ms[1], A.g) == 1


def multiplicity(A: ExponentSet) -> int:
    return A.g // A.gcd


def bounds(A: ExponentSet) -> tuple[int, int]:
    """(strict bound g/gcd(A), bound g/gcd(A) - |A| + 2)."""
    e = multiplicity(A)
    return e, e - len(A) + 2


def all_sets(g: int):
    """Every A ⊆ [0, g] with 0, g ∈ A."""
    if g == 1:
        yield ExponentSet(1, 0b11)
        return
    ends = 1 | (1 << g)
    for inner in range(1 << (g - 1)):
        yield ExponentSet(g, ends | (inner << 1))
