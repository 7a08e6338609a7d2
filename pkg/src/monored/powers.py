"""Reduction numbers of powers I^k.

I^k has minimal monomial reduction (x^(ka), y^(kb)), so r(I^k) is always
measured in the frame (ka, kb).  Quasi-equigenerated ideals are handled in
sumset space: I_A^k = I_(kA) on [0, kg].
"""

from __future__ import annotations

from dataclasses import dataclass
from .equigen import ExponentSet, from_ideal, r_equigen, sumset
from .monomial import Monomial, MonomialIdeal, product
from .reduction import FramedIdeal, default_cap, reduction_number_wrt


@dataclass(frozen=True)
class PowerProfile:
    rs: tuple[int, ...]
    c_index: int | None

    def hoa_bounds(self) -> list[int]:
        """ceil((r(I) - 1)/k) + 1 for k = 1..len(rs)."""
        r1 = self.rs[0]
        return [-(-(r1 - 1) // k) + 1 for k in range(1, len(self.rs) + 1)]

    def record(self) -> dict:
        return {"rs": list(self.rs), "hoa_bounds": self.hoa_bounds(), "c_index": self.c_index}


def hoa_bound(r1: int, k: int) -> int:
    return -(-(r1 - 1) // k) + 1


def _set_profile(A: ExponentSet, kmax: int, cap: int | None = None) -> list[int]:
    rs = []
    kA = 1
    for k in range(1, kmax + 1):
        kA = sumset(kA, A.mask)
        rs.append(r_equigen(ExponentSet(k * A.g, kA), cap))
    return rs


def _ideal_profile(F: FramedIdeal, kmax: int, cap: int | None) -> list[int]:
    rs = []
    Ik = MonomialIdeal._trusted((Monomial(0, 0),))
    for k in range(1, kmax + 1):
        Ik = product(Ik, F.ideal)
        Jk = MonomialIdeal._trusted((Monomial(0, k * F.b), Monomial(k * F.a, 0)))
        rs.append(reduction_number_wrt(Ik, Jk, cap if cap else default_cap(k * F.a, k * F.b)))
    return rs


def power_profile(F: FramedIdeal | ExponentSet, kmax: int, cap: int | None = None) -> PowerProfile:
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    if isinstance(F, ExponentSet):
        rs = _set_profile(F, kmax, cap)
    elif F.quasi_equigenerated:
        rs = _set_profile(from_ideal(F), kmax, cap)
    else:
        rs = _ideal_profile(F, kmax, cap)
    c_index = next((k for k, r in enumerate(rs, 1) if r == 1), None)
    return PowerProfile(tuple(rs), c_index)


@dataclass(frozen=True)
class RelatedCheck:
    eventually_one: bool
    c_index: int | None
    profile: PowerProfile
    consistent: bool


def related_check(A: ExponentSet, kmax: int = 0) -> RelatedCheck:
    """Test whether r(I_A^k) = 1 for large k, for gcd(A) = 1.

    Predicted: eventually one iff {0, 1, g-1, g} ⊆ A, and then r(I^k) = 1 for
    every k >= g - 2; once a power has reduction number 1 all later ones do.
    ``consistent`` records whether the computed profile (up to
    max(g - 2, kmax, 2) powers) agrees with all three statements.
    """
    if A.gcd != 1:
        raise ValueError(f"gcd({A}) = {A.gcd}; the criterion needs gcd 1")
    g = A.g
    predicted = all(A.mask >> i & 1 for i in (0, 1, g - 1, g))
    prof = power_profile(A, max(g - 2, kmax, 2))
    rs = prof.rs
    ok = (prof.c_index is not None) == predicted
    if predicted:
        ok &= all(r == 1 for r in rs[max(g - 2, 1) - 1:])
    if prof.c_index is not None:
        ok &= all(r == 1 for r in rs[prof.c_index - 1:])
    return RelatedCheck(predicted, prof.c_index, prof, ok)


def masoomeh_family(g: int, j: int) -> ExponentSet:
    """[0, g-j-1] ∪ [g-1, g]; its powers first reach reduction number 1 at k = j."""
    if not 1 <= j <= g - 2:
        raise ValueError(f"j must lie in [1, {g - 2}]")
    return ExponentSet.of(g, [*range(0, g - j), g - 1, g])


def limit_value(F: FramedIdeal) -> int:
    """1 if x y^(a-1) and x^(a-1) y both lie in I, else 2.

    This is the eventual value of r(I^k) (k >= a - 2) when the
    quasi-equigenerated part I_A of I has gcd(A) = 1.  For gcd(A) > 1 the
    powers settle at 1 (or 0 for k = 1 when I = J) instead.
    """
    if F.a != F.b:
        raise ValueError("limit_value needs a square frame a = b")
    if F.a < 2:
        raise ValueError("limit_value needs a >= 2")
    a, I = F.a, F.ideal
    return 1 if (1, a - 1) in I and (a - 1, 1) in I else 2


def monotonicity_probe(
    F: FramedIdeal | ExponentSet, kmax: int, profile: PowerProfile | None = None
) -> list[int]:
    """All k < kmax with r(I^(k+1)) > r(I^k).  Conjectured empty; never asserted."""
    rs = (profile or power_profile(F, kmax)).rs[:kmax]
    return [k for k in range(1, kmax) if rs[k] > rs[k - 1]]
