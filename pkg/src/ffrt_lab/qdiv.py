"""Q-divisors on P^1 and their section rings.

A divisor ``D = sum (s_i/r_i) P_i`` determines the graded ring
``R = sum_m H^0(P^1, O(floor(mD))) t^m``; on P^1 the graded pieces have
dimension ``max(0, deg floor(mD) + 1)``.  Everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional

from .errors import InvalidDivisor


@dataclass(frozen=True)
class PointLabel:
    """A closed point of P^1: either ``inf`` or an exact rational coordinate."""

    kind: str
    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind == "infinity":
            if self.value is not None:
                raise ValueError("the point at infinity carries no coordinate")
        elif self.kind == "affine":
            if self.value is None:
                raise ValueError("affine point needs a coordinate")
            object.__setattr__(self, "value", Fraction(self.value))
        else:
            raise ValueError(f"unknown point kind {self.kind!r}")

    @classmethod
    def infinity(cls) -> "PointLabel":
        return cls("infinity")

    @classmethod
    def affine(cls, value) -> "PointLabel":
        return cls("affine", Fraction(value))

    @property
    def is_infinity(self) -> bool:
        return self.kind == "infinity"

    def __str__(self):
        if self.is_infinity:
            return "inf"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


INF = PointLabel.infinity()


@dataclass(frozen=True)
class Term:
    point: PointLabel
    s: int
    r: int

    @property
    def coefficient(self) -> Fraction:
        return Fraction(self.s, self.r)


@dataclass(frozen=True)
class NotCoprime:
    term: Term

    def __str__(self):
        return f"NotCoprime: {self.term.s}/{self.term.r} at {self.term.point}"


@dataclass(frozen=True)
class DuplicatePoint:
    label: PointLabel

    def __str__(self):
        return f"DuplicatePoint: {self.label}"


@dataclass(frozen=True)
class NotAmple:
    deg: Fraction

    def __str__(self):
        return f"NotAmple: degree {self.deg} <= 0"


class RationalDivisor:
    """``sum (s_i/r_i) P_i`` with the terms kept in input order.

    Construction does not validate; call :func:`validate`.  Zero
    coefficients are dropped and ``r`` must be positive.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable):
        kept = []
        for t in terms:
            if not isinstance(t, Term):
                t = Term(*t)
            if t.r <= 0:
                raise ValueError(f"denominator must be positive, got {t.r}")
            if t.s != 0:
                kept.append(t)
        self.terms = tuple(kept)

    @classmethod
    def from_fractions(cls, pairs) -> "RationalDivisor":
        """Build from ``(point, coefficient)`` pairs, reducing each fraction."""
        terms = []
        for point, coeff in pairs:
            c = Fraction(coeff)
            terms.append(Term(point, c.numerator, c.denominator))
        return cls(terms)

    @property
    def points(self):
        return tuple(t.point for t in self.terms)

    @property
    def weights(self):
        """Denominators ``r_i > 1``: the orbifold weights of the divisor."""
        return tuple(t.r for t in self.terms if t.r > 1)

    def __eq__(self, other):
        if not isinstance(other, RationalDivisor):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"RationalDivisor({render(self)!r})"


@dataclass(frozen=True)
class IntegerDivisor:
    terms: tuple  # of (PointLabel, int)

    @property
    def coefficients(self):
        return tuple(c for _, c in self.terms)

    @property
    def degree(self) -> int:
        return sum(self.coefficients)


def render(D: RationalDivisor) -> str:
    """Inverse of the divisor parser: ``"1/2*[inf] - 1/3*[0]"``."""
    if not D.terms:
        return "0"
    out = []
    for k, t in enumerate(D.terms):
        mag = abs(t.s)
        coeff = str(mag) if t.r == 1 else f"{mag}/{t.r}"
        body = f"{coeff}*[{t.point}]"
        if k == 0:
            out.append(("-" if t.s < 0 else "") + body)
        else:
            out.append(("- " if t.s < 0 else "+ ") + body)
    return " ".join(out)


def validate(D: RationalDivisor) -> list:
    """Return every violation found; an empty list means ``D`` is usable."""
    errors = []
    seen = set()
    for t in D.terms:
        if gcd(t.s, t.r) != 1:
            errors.append(NotCoprime(t))
        if t.point in seen:
            errors.append(DuplicatePoint(t.point))
        seen.add(t.point)
    deg = degree(D)
    if deg <= 0:
        errors.append(NotAmple(deg))
    return errors


def check(D: RationalDivisor) -> None:
    errors = validate(D)
    if errors:
        raise InvalidDivisor(errors)


def degree(D: RationalDivisor) -> Fraction:
    return sum((t.coefficient for t in D.terms), Fraction(0))


def floor_multiple(D: RationalDivisor, m: int) -> IntegerDivisor:
    # Python's // floors toward -inf, which is what floor(mD) needs.
    return IntegerDivisor(tuple((t.point, (m * t.s) // t.r) for t in D.terms))


def period(D: RationalDivisor) -> int:
    """lcm of the denominators."""
    return lcm(1, *(t.r for t in D.terms))


def hilbert_dim(D: RationalDivisor, m: int) -> int:
    """``dim R_m = h^0(P^1, O(floor(mD)))``."""
    check(D)
    if m < 0:
        raise ValueError("m must be non-negative")
    return max(0, floor_multiple(D, m).degree + 1)


def hilbert_series_window(D: RationalDivisor, N: int) -> list:
    check(D)
    if N < 0:
        raise ValueError("N must be non-negative")
    return [max(0, floor_multiple(D, m).degree + 1) for m in range(N + 1)]
