"""Frobenius push-forwards of line bundles on P^1 and on weighted projective lines.

On P^1, ``F^e_* O(a)`` splits as ``sum_j O(floor((a - j)/q))`` for
``j = 0..q-1``.  On a weighted projective line the push-forward of a line
bundle is described by its type: rank ``q``, the degree of
``pi_* F^e_* O(gamma) = F^e_* pi_* O(gamma)``, and the flag dimensions at
each stacky point.  A flag dimension is read off from how much the degree
of ``pi_*`` drops after twisting by ``-j Q_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from . import picard, rootlattice
from .errors import (
    CharacteristicDividesWeight,
    InconsistentProfile,
    WindowTooSmall,
    ZeroRank,
)
from .picard import PicElement, Weights
from .rootlattice import LatticeVector


@dataclass(frozen=True)
class SplittingType:
    """Multiset of degrees of a direct sum of line bundles on P^1 (kept sorted, largest first)."""

    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted((int(b) for b in self.degrees), reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def h0(self, k: int = 0) -> int:
        """``h^0`` of the bundle twisted by ``O(k)``."""
        return sum(max(0, b + k + 1) for b in self.degrees)

    def multiplicities(self) -> dict:
        out = {}
        for b in self.degrees:
            out[b] = out.get(b, 0) + 1
        return out


def _q(p: int, e: int) -> int:
    if e < 1:
        raise ValueError("e must be >= 1; the identity functor is handled by callers")
    if p < 2:
        raise ValueError(f"p must be a prime, got {p}")
    return p**e


def frob_split_P1(a: int, p: int, e: int) -> SplittingType:
    q = _q(p, e)
    return SplittingType(tuple((a - j) // q for j in range(q)))


def splitting_from_h0_profile(profile: Mapping[int, int], rank: Optional[int] = None) -> SplittingType:
    """Recover a splitting type from ``k -> h^0(E(k))`` on a window of consecutive ``k``.

    The second difference of ``h^0`` at ``k`` counts summands of degree
    ``-1 - k``.  The window must start where ``h^0`` vanishes and end where
    it already grows with slope equal to the rank.
    """
    if not profile:
        raise WindowTooSmall("empty profile")
    k0, k1 = min(profile), max(profile)
    if sorted(profile) != list(range(k0, k1 + 1)):
        raise WindowTooSmall("profile window must be a run of consecutive twists")
    if k1 - k0 < 1:
        raise WindowTooSmall("need at least two twists")
    h = dict(profile)
    if h[k0] != 0:
        raise WindowTooSmall(f"h0 is {h[k0]} at the left end k={k0}, expected 0")
    h[k0 - 1] = 0
    degrees = []
    for k in range(k0, k1):
        d2 = h[k + 1] - 2 * h[k] + h[k - 1]
        if d2 < 0:
            raise InconsistentProfile(f"negative second difference at k={k}")
        degrees.extend([-1 - k] * d2)
    slope = h[k1] - h[k1 - 1]
    if slope != len(degrees):
        raise InconsistentProfile(f"final slope {slope} does not match {len(degrees)} detected summands")
    if rank is not None and rank != len(degrees):
        raise InconsistentProfile(f"declared rank {rank}, profile has {len(degrees)} summands")
    if rank is None and not degrees and any(h.values()):
        raise InconsistentProfile("nonzero profile with no summands")
    st = SplittingType(tuple(degrees))
    for k, v in profile.items():
        if st.h0(k) != v:
            raise InconsistentProfile(f"profile value {v} at k={k} not reproduced")
    return st


def projection_profile(a: int, p: int, e: int, window: Optional[range] = None) -> dict:
    """``k -> h^0(F^e_* O(a) (k)) = h^0(O(a + q k))`` by the projection formula."""
    q = _q(p, e)
    if window is None:
        lo = -((a + 1) // q) - 1  # h0(O(a + q lo)) = 0
        window = range(lo, lo + abs(a) + 4)
    return {k: max(0, a + q * k + 1) for k in window}


def _coprime(W: Weights, p: int) -> None:
    bad = [r for r in W.r if r % p == 0]
    if bad:
        raise CharacteristicDividesWeight(f"p={p} divides weight(s) {bad}")


def frob_twist(g: PicElement, h: PicElement, p: int, e: int) -> PicElement:
    """``F^e_* O(g) (x) O(h) = F^e_* O(g + q h)``."""
    q = _q(p, e)
    return picard.pic_add(g, picard.pic_scale(q, h))


def _pushforward_total_degree(g: PicElement, p: int, e: int) -> int:
    return frob_split_P1(picard.pushforward_to_P1(g), p, e).degree


def type_of_pushforward(g: PicElement, p: int, e: int) -> LatticeVector:
    """Type ``(rank, flags, degree)`` of ``F^e_* O(g)`` on the weighted projective line."""
    W = g.weights
    _coprime(W, p)
    q = _q(p, e)
    base = _pushforward_total_degree(g, p, e)
    flags = []
    for i, r in enumerate(W.r):
        ai = picard.a(W, i)
        arm = []
        for j in range(1, r):
            twisted = frob_twist(g, picard.pic_scale(-j, ai), p, e)
            # deg pi_* drops by the codimension of the j-th flag step
            arm.append(q - (base - _pushforward_total_degree(twisted, p, e)))
        flags.append(arm)
    return LatticeVector.from_parts(W, q, flags, base)


def type_of_line_bundle(g: PicElement) -> LatticeVector:
    """Type of ``O(g)`` itself: one flag step at level ``l_i`` on each arm."""
    W = g.weights
    flags = [[1 if j <= li else 0 for j in range(1, r)] for li, r in zip(g.l, W.r)]
    return LatticeVector.from_parts(W, 1, flags, g.d)


def local_monomial_flags(W: Weights, p: int, e: int) -> list:
    """Flag dimensions of ``F^e_* O`` from the local model at each stacky point.

    At a point of weight ``w`` with local coordinate ``x`` (``x^w = t``),
    the push-forward of ``x^{q j} k[x]`` keeps ``q - ceil(q j / w)`` of the
    monomials ``t^0, ..., t^{q-1}`` spanning the fibre.
    """
    _coprime(W, p)
    q = _q(p, e)
    return [[sum(1 for k in range(q) if w * k >= q * j) for j in range(1, w)] for w in W.r]


def c1_pushforward(c1_deg, rank: int, p: int, e: int, W: Weights) -> Fraction:
    """Degree of ``c_1(F^e_* E)``, iterating ``c_1(F_* E) = (p-1)/2 rk(E) K + c_1(E)``."""
    if e < 0:
        raise ValueError("e must be >= 0")
    k = picard.delta(W)
    c1 = Fraction(c1_deg)
    for _ in range(e):
        c1 = Fraction(p - 1, 2) * rank * k + c1
        rank *= p
    return c1


def c1_pushforward_closed(c1_deg, rank: int, p: int, e: int, W: Weights) -> Fraction:
    return rank * Fraction(p**e - 1, 2) * picard.delta(W) + Fraction(c1_deg)


def orb_degree(t: LatticeVector, W: Optional[Weights] = None) -> Fraction:
    """Orbifold degree ``dhat + sum_ij c_ij / r_i`` of a sheaf of type ``t``."""
    arms = t.arms if W is None else tuple(W.r)
    total = Fraction(t.dhat or 0)
    for r, f in zip(arms, t.flags):
        total += Fraction(sum(f), r)
    return total


def slope(t: LatticeVector, W: Optional[Weights] = None) -> Fraction:
    if t.rho == 0:
        raise ZeroRank("slope of a rank-zero type")
    return orb_degree(t, W) / t.rho


def canonical_filtration_slopes(mu_W, p: int, W: Weights) -> list:
    """Slopes of ``F_l / F_{l+1}``, ``l = 0..p-1``, in the canonical filtration of ``F^* F_* W``.

    Each quotient is the previous one tensored with the cotangent sheaf,
    so the slopes form an arithmetic progression with step ``delta``.
    """
    _coprime(W, p)
    d = picard.delta(W)
    mu = Fraction(mu_W)
    return [mu + ell * d for ell in range(p)]


INDECOMPOSABLE = "Indecomposable"
DECOMPOSES = "Decomposes"
DELEGATED_DELTA0 = "DelegatedDelta0"
UNKNOWN = "Unknown"


@dataclass
class FrobeniusVerdict:
    kind: str
    citation: str = ""
    certificate: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def _bundle_shape(v: tuple, arms: tuple) -> bool:
    # rho >= every flag entry and flags decrease to >= 0: a sum of rank-one types
    rho = v[0]
    start = 1
    for r in arms:
        prev = rho
        for x in v[start : start + r - 1]:
            if x < 0 or x > prev:
                return False
            prev = x
        start += r - 1
    return rho >= 0


def root_decomposition(t: LatticeVector) -> list:
    """Write ``t`` as a sum of positive roots of rank >= 1 (finite-type stars only).

    Greedy over the roots ordered largest first; a root is taken only if
    the remainder still decomposes into rank-one types, which always
    exist, so the search never backtracks.  The ``delta`` coefficient is
    shared out in proportion to rank, earlier summands rounding up.
    Returns ``[(root_with_dhat, multiplicity), ...]``.
    """
    arms = t.arms
    if not _bundle_shape(t.coords, arms):
        raise ValueError(f"{t} is not the type of a vector bundle")
    roots = [v.coords for v in rootlattice.enumerate_positive_roots(arms) if v.rho >= 1]
    roots.sort(key=lambda c: (c[0], sum(c), c), reverse=True)
    rem = t.coords
    pieces = []
    for root in roots:
        while True:
            cand = tuple(x - y for x, y in zip(rem, root))
            if not _bundle_shape(cand, arms):
                break
            pieces.append(root)
            rem = cand
        if not any(rem):
            break
    if any(rem):
        raise AssertionError(f"greedy decomposition left {rem}")
    total_rank = t.rho
    dhat = t.dhat or 0
    shares = [dhat * c[0] // total_rank for c in pieces]
    leftover = dhat - sum(shares)
    for k in range(leftover):
        shares[k % len(shares)] += 1
    counted = {}
    order = []
    for c, m in zip(pieces, shares):
        key = (c, m)
        if key not in counted:
            counted[key] = 0
            order.append(key)
        counted[key] += 1
    return [(LatticeVector(arms, c, m), counted[(c, m)]) for c, m in order]


def indecomposability_verdict(W: Weights, p: int, e: int) -> FrobeniusVerdict:
    _coprime(W, p)
    q = _q(p, e)
    d = picard.delta(W)
    if d > 0:
        return FrobeniusVerdict(
            INDECOMPOSABLE,
            citation="stability-delta-positive",
            notes=[f"delta={d} > 0: F^e_* O is stable, hence indecomposable"],
        )
    if d == 0:
        return FrobeniusVerdict(
            DELEGATED_DELTA0,
            citation="delta-zero-elliptic-cover",
            notes=["delta=0: summands are determined by the elliptic cover census"],
        )
    t = type_of_pushforward(picard.zero(W), p, e)
    cert = root_decomposition(t)
    bound = rootlattice.rmax(W)
    notes = [f"rank {q} exceeds rmax={bound}" if q > bound else f"rank {q} <= rmax={bound}"]
    return FrobeniusVerdict(DECOMPOSES, citation="crawley-boevey-positive-roots", certificate=cert, notes=notes)
