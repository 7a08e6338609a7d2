"""Staircase arithmetic for monomials and monomial ideals in K[x, y].

A monomial x^c y^d is stored as its exponent pair ``(c, d)``.  A monomial
ideal is stored as its minimal generating set, sorted by ``c`` ascending
(hence ``d`` strictly descending): the staircase.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple

U64_MAX = 2**64 - 1


class IdealError(ValueError):
    """Raised for malformed or out-of-domain monomial ideals."""


class ParseError(ValueError):
    """Malformed ideal or set literal."""


class ExponentOverflow(OverflowError):
    """An exponent left the unsigned 64-bit range."""


def checked(value: int) -> int:
    if value < 0 or value > U64_MAX:
        raise ExponentOverflow(f"exponent {value} outside [0, 2^64)")
    return value


class Monomial(NamedTuple):
    """Exponent pair (c, d) of x^c y^d."""

    c: int
    d: int

    @classmethod
    def of(cls, c: int, d: int) -> "Monomial":
        return cls(checked(int(c)), checked(int(d)))

    def divides(self, other: "Monomial") -> bool:
        return self.c <= other.c and self.d <= other.d

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(checked(self.c + other.c), checked(self.d + other.d))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.c, other.c), max(self.d, other.d))

    def __str__(self) -> str:
        return format_monomial(self)


def format_monomial(m: tuple[int, int]) -> str:
    c, d = m
    parts = []
    if c:
        parts.append("x" if c == 1 else f"x^{c}")
    if d:
        parts.append("y" if d == 1 else f"y^{d}")
    return "*".join(parts) if parts else "1"


def _staircase(ms: Iterable[tuple[int, int]]) -> tuple[Monomial, ...]:
    out: list[Monomial] = []
    best_d = None
    for c, d in sorted(ms):
        # sorted by c, then d: a point survives iff its d beats every earlier one
        if best_d is None or d < best_d:
            out.append(Monomial(c, d))
            best_d = d
    return tuple(out)


class MonomialIdeal:
    """A monomial ideal in two variables, held as its canonical staircase.

    Instances are immutable.  Equality and hashing are structural on the
    generator sequence, which is unique for each ideal.
    """

    __slots__ = ("gens",)

    def __init__(self, gens: Iterable[tuple[int, int]]):
        ms = [Monomial.of(c, d) for c, d in gens]
        if not ms:
            raise IdealError("a monomial ideal needs at least one generator")
        object.__setattr__(self, "gens", _staircase(ms))

    @classmethod
    def _trusted(cls, gens: tuple[Monomial, ...]) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "gens", gens)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __reduce__(self):
        return (MonomialIdeal, (tuple(self.gens),))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __repr__(self) -> str:
        return f"MonomialIdeal({[tuple(g) for g in self.gens]})"

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in reversed(self.gens)) + ")"

    def __contains__(self, m: tuple[int, int]) -> bool:
        return contains(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersection(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Ideal containment: self ⊆ other."""
        return all(contains(other, g) for g in self.gens)

    @property
    def pure_x(self) -> int | None:
        """Exponent a of the pure power x^a in G(I), if any."""
        last = self.gens[-1]
        return last.c if last.d == 0 else None

    @property
    def pure_y(self) -> int | None:
        first = self.gens[0]
        return first.d if first.c == 0 else None

    def literal(self) -> str:
        """Render in the monomial syntax accepted by :func:`parse_ideal`."""
        return " + ".join(format_monomial(g) for g in reversed(self.gens))

    def pairs(self) -> list[list[int]]:
        return [[g.c, g.d] for g in self.gens]


UNIT = MonomialIdeal([(0, 0)])


def minimalize(ms: Iterable[tuple[int, int]]) -> MonomialIdeal:
    """Divisibility-minimal elements of ``ms`` in canonical order."""
    return MonomialIdeal(ms)


def contains(I: MonomialIdeal, m: tuple[int, int]) -> bool:
    c, d = m
    for g in I.gens:
        if g.c > c:
            return False
        if g.d <= d:
            return True
    return False


def ideal_sum(I: MonomialIdeal, L: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._trusted(_staircase(I.gens + L.gens))


def product(I: MonomialIdeal, L: MonomialIdeal) -> MonomialIdeal:
    sums = [
        (checked(p.c + q.c), checked(p.d + q.d)) for p in I.gens for q in L.gens
    ]
    return MonomialIdeal._trusted(_staircase(sums))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k by repeated squaring; ``k == 0`` gives the unit ideal."""
    if k < 0:
        raise ValueError("power exponent must be nonnegative")
    result = UNIT
    base = I
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def bracket_power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """I^[t]: every generator raised to the t-th power."""
    if t < 1:
        raise ValueError("bracket power needs t >= 1")
    return MonomialIdeal._trusted(
        tuple(Monomial(checked(g.c * t), checked(g.d * t)) for g in I.gens)
    )


def intersection(I: MonomialIdeal, L: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._trusted(
        _staircase((max(p.c, q.c), max(p.d, q.d)) for p in I.gens for q in L.gens)
    )


_PAIR = re.compile(r"[\(\[]\s*(\d+)\s*,\s*(\d+)\s*[\)\]]")
_TERM = re.compile(r"^(?:(x|y)(?:\^(\d+))?)(?:\*?(x|y)(?:\^(\d+))?)?$")


def parse_monomial(text: str) -> Monomial:
    s = text.replace(" ", "")
    if s == "1":
        return Monomial(0, 0)
    m = _TERM.match(s)
    if not m or (m.group(3) and m.group(3) == m.group(1)):
        raise ParseError(f"cannot parse monomial {text!r}")
    exps = {"x": 0, "y": 0}
    exps[m.group(1)] = int(m.group(2) or 1)
    if m.group(3):
        exps[m.group(3)] = int(m.group(4) or 1)
    return Monomial.of(exps["x"], exps["y"])


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse an ideal literal.

    Accepts ``x^7 + x^6*y^2 + y^10`` (commas also separate terms, ``*`` and
    exponent 1 optional, surrounding parentheses ignored) or exponent pairs
    ``[(7,0),(6,2),(0,10)]``; pairs may also be written ``[7,0]``.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty ideal literal")
    if "x" not in s and "y" not in s and _PAIR.search(s):
        body = _PAIR.sub("", s)
        if body.strip("[]() ,\t\n"):
            raise ParseError(f"cannot parse ideal {text!r}")
        return MonomialIdeal((int(c), int(d)) for c, d in _PAIR.findall(s))
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    terms = re.split(r"[+,]", s)
    if any(not t.strip() for t in terms):
        raise ParseError(f"empty term in ideal {text!r}")
    return MonomialIdeal(parse_monomial(t) for t in terms)
