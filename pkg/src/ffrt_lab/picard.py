"""Picard group of a weighted projective line.

For weights ``r_1, ..., r_n`` at points ``P_1, ..., P_n`` of P^1 the
Picard group is ``Gamma = (Z a_1 + ... + Z a_n + Z c) / <r_i a_i - c>``
where ``a_i = [O(Q_i)]`` is the stacky point over ``P_i`` and ``c`` is
the pull-back of a point of P^1.  Elements are kept in the normal form
``sum l_i a_i + d c`` with ``0 <= l_i < r_i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .errors import LengthMismatch, WeightsMismatch
from .qdiv import INF, PointLabel, RationalDivisor


def _default_points(n: int):
    pts = [INF] + [PointLabel.affine(k) for k in range(n - 1)]
    return tuple(pts[:n])


@dataclass(frozen=True)
class Weights:
    r: tuple
    points: tuple = None

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        if any(x < 2 for x in r):
            raise ValueError(f"weights must be >= 2, got {r}")
        points = self.points
        if points is None:
            points = _default_points(len(r))
        points = tuple(points)
        if len(points) != len(r):
            raise LengthMismatch("one point label per weight")
        if len(set(points)) != len(points):
            raise ValueError("weight points must be distinct")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "points", points)

    @property
    def n(self) -> int:
        return len(self.r)

    @property
    def lcm(self) -> int:
        return lcm(1, *self.r)

    def __str__(self):
        return "(" + ",".join(map(str, self.r)) + ")"


def weights_of(D: RationalDivisor) -> Weights:
    """Orbifold weights of ``D``: the denominators > 1 with their points."""
    terms = [t for t in D.terms if t.r > 1]
    return Weights(tuple(t.r for t in terms), tuple(t.point for t in terms))


@dataclass(frozen=True)
class PicElement:
    weights: Weights
    l: tuple
    d: int

    def __add__(self, other):
        return pic_add(self, other)

    def __neg__(self):
        return pic_scale(-1, self)

    def __sub__(self, other):
        return pic_add(self, pic_scale(-1, other))

    def __rmul__(self, k):
        return pic_scale(k, self)

    @property
    def degree(self) -> Fraction:
        return deg_pic(self)

    def __str__(self):
        return "(" + ",".join(map(str, self.l)) + f";{self.d})"


def normalize(raw_l: Sequence[int], raw_d: int, W: Weights) -> PicElement:
    if len(raw_l) != W.n:
        raise LengthMismatch(f"expected {W.n} coefficients, got {len(raw_l)}")
    d = raw_d
    l = []
    for li, ri in zip(raw_l, W.r):
        q, rem = divmod(li, ri)
        l.append(rem)
        d += q
    return PicElement(W, tuple(l), d)


def zero(W: Weights) -> PicElement:
    return PicElement(W, (0,) * W.n, 0)


def a(W: Weights, i: int) -> PicElement:
    """The class ``a_i`` of the stacky point ``Q_i`` (0-based index)."""
    l = [0] * W.n
    l[i] = 1
    return normalize(l, 0, W)


def c(W: Weights) -> PicElement:
    return PicElement(W, (0,) * W.n, 1)


def pic_add(g: PicElement, h: PicElement) -> PicElement:
    if g.weights != h.weights:
        raise WeightsMismatch(f"{g.weights} vs {h.weights}")
    return normalize([x + y for x, y in zip(g.l, h.l)], g.d + h.d, g.weights)


def pic_scale(k: int, g: PicElement) -> PicElement:
    return normalize([k * x for x in g.l], k * g.d, g.weights)


def deg_pic(g: PicElement) -> Fraction:
    return g.d + sum((Fraction(li, ri) for li, ri in zip(g.l, g.weights.r)), Fraction(0))


def canonical_class(W: Weights) -> PicElement:
    """``omega = pi^* omega_{P^1} + sum (r_i - 1) Q_i``."""
    return normalize([ri - 1 for ri in W.r], -2, W)


def delta(W: Weights) -> Fraction:
    return W.n - 2 - sum((Fraction(1, ri) for ri in W.r), Fraction(0))


def torsion_order(g: PicElement):
    """Order of ``g`` in Gamma, ``math.inf`` when its degree is nonzero."""
    if deg_pic(g) != 0:
        return math.inf
    z = zero(g.weights)
    for m in range(1, g.weights.lcm + 1):
        if pic_scale(m, g) == z:
            return m
    raise AssertionError("degree-zero class not killed by lcm of weights")


def pushforward_degree(raw_l: Sequence[int], raw_d: int, W: Weights) -> int:
    """Degree of ``pi_* O(sum l_i Q_i + d c)`` on P^1; ``l`` need not be reduced."""
    if len(raw_l) != W.n:
        raise LengthMismatch(f"expected {W.n} coefficients, got {len(raw_l)}")
    return raw_d + sum(li // ri for li, ri in zip(raw_l, W.r))


def pushforward_to_P1(g: PicElement) -> int:
    return pushforward_degree(g.l, g.d, g.weights)


def h0_orb(g: PicElement) -> int:
    return max(0, pushforward_to_P1(g) + 1)


def line_bundle_of(D: RationalDivisor, W: Optional[Weights] = None) -> PicElement:
    """``L = O(pi^* D)``: ``pi^*((s/r) P) = s Q`` and integral terms land in ``c``."""
    if W is None:
        W = weights_of(D)
    index = {pt: k for k, pt in enumerate(W.points)}
    l = [0] * W.n
    d = 0
    for t in D.terms:
        if t.r == 1:
            d += t.s
        else:
            k = index[t.point]
            if W.r[k] != t.r:
                raise WeightsMismatch(f"weight at {t.point} is {W.r[k]}, divisor has {t.r}")
            l[k] = t.s
    return normalize(l, d, W)
