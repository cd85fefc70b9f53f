"""Elliptic covers of the delta = 0 weighted projective lines.

The four weight lists with ``delta = 0`` are ``(2,3,6), (2,4,4), (3,3,3)``
and ``(2,2,2,2)``.  Each is the quotient of an elliptic curve by a cyclic
group ``mu_m`` with ``m = lcm`` of the weights, and the summands of
``F^e_* O`` are governed by whether that curve is ordinary.  We use
Weierstrass models: the ``j = 0`` curve ``y^2 = x^3 + 1`` for ``(2,3,6)`` and
``(3,3,3)``, ``y^2 = x^3 - x`` for ``(2,4,4)``, and the Legendre curve
``y^2 = x(x-1)(x-lambda)`` for ``(2,2,2,2)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from . import picard
from .errors import (
    BadLambda,
    CharacteristicDividesWeight,
    FieldTooLarge,
    NonIntegralOrbitCount,
    NotDeltaZero,
)
from .gf import GF, poly_pow
from .picard import PicElement, Weights

DELTA0_WEIGHTS = ((2, 3, 6), (2, 4, 4), (3, 3, 3), (2, 2, 2, 2))

# automorphism tags: generator of the mu_m action fixing the origin
NEGATION = "negation"        # (x, y) -> (x, -y),            m = 2
ORDER3 = "omega-twist"       # (x, y) -> (omega x, y),       m = 3
ORDER4 = "i-twist"           # (x, y) -> (-x, i y),          m = 4
ORDER6 = "omega-negation"    # (x, y) -> (omega x, -y),      m = 6

_TAG_ORDER = {NEGATION: 2, ORDER3: 3, ORDER4: 4, ORDER6: 6}

ORDINARY = "ordinary"
SUPERSINGULAR = "supersingular"


def default_max_field() -> int:
    return int(os.environ.get("FFRT_LAB_MAX_FIELD", 10**6))


def cubic_discriminant(f, p: int) -> int:
    """Discriminant of monic ``x^3 + a x^2 + b x + c`` given as ``(c, b, a, 1)``, mod ``p``."""
    c, b, a, lead = f
    assert lead == 1
    disc = a * a * b * b - 4 * b**3 - 4 * a**3 * c - 27 * c * c + 18 * a * b * c
    return disc % p


@dataclass(frozen=True)
class WeierstrassCurve:
    """``y^2 = f(x)`` over ``F_p`` with ``f`` monic cubic, coefficients low first."""

    p: int
    f: tuple
    automorphism: str
    label: str = ""

    def __post_init__(self):
        if self.p == 2:
            raise ValueError("y^2 = f(x) models need p odd")
        f = tuple(x % self.p for x in self.f)
        if len(f) != 4 or f[3] != 1:
            raise ValueError("f must be a monic cubic")
        object.__setattr__(self, "f", f)
        if cubic_discriminant(f, self.p) == 0:
            raise ValueError(f"y^2 = {self.f_str()} is singular over F_{self.p}")
        if self.automorphism not in _TAG_ORDER:
            raise ValueError(f"unknown automorphism tag {self.automorphism!r}")

    @property
    def m(self) -> int:
        return _TAG_ORDER[self.automorphism]

    def f_str(self) -> str:
        terms = []
        for k in (3, 2, 1, 0):
            c = self.f[k]
            if not c:
                continue
            mon = {3: "x^3", 2: "x^2", 1: "x", 0: ""}[k]
            if c == 1 and mon:
                terms.append(mon)
            elif c == self.p - 1 and mon:
                terms.append("-" + mon)
            else:
                terms.append(f"{c}{mon}")
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self):
        return f"y^2 = {self.f_str()} over F_{self.p}"


def _check_delta0(W) -> tuple:
    r = tuple(sorted(getattr(W, "r", W)))
    if r not in DELTA0_WEIGHTS:
        raise NotDeltaZero(f"weights {r} do not have delta = 0")
    return r


def cover_model(W, p: int, lam: Optional[int] = None) -> WeierstrassCurve:
    r = _check_delta0(W)
    m = max(r)
    if m % p == 0 or any(x % p == 0 for x in r):
        raise CharacteristicDividesWeight(f"p={p} divides a weight of {r}")
    if r == (2, 3, 6):
        return WeierstrassCurve(p, (1, 0, 0, 1), ORDER6, "j=0")
    if r == (3, 3, 3):
        return WeierstrassCurve(p, (1, 0, 0, 1), ORDER3, "j=0")
    if r == (2, 4, 4):
        return WeierstrassCurve(p, (0, -1, 0, 1), ORDER4, "j=1728")
    if lam is None:
        raise BadLambda("weights (2,2,2,2) need the Legendre parameter lambda")
    lam %= p
    if lam in (0, 1):
        raise BadLambda(f"lambda = {lam} mod {p} degenerates the Legendre curve")
    # x (x - 1)(x - lam) = x^3 - (1 + lam) x^2 + lam x
    return WeierstrassCurve(p, (0, lam, -(1 + lam), 1), NEGATION, f"legendre({lam})")


def legendre_symbol(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def point_count(E: WeierstrassCurve, k: int = 1, max_field: Optional[int] = None) -> int:
    """``#E(F_{p^k})`` by enumeration, point at infinity included."""
    if max_field is None:
        max_field = default_max_field()
    size = E.p**k
    if size > max_field:
        raise FieldTooLarge(f"F_{E.p}^{k} has {size} elements > {max_field}")
    p = E.p
    if k == 1:
        total = 1
        for x in range(p):
            fx = (((x + E.f[2]) * x + E.f[1]) * x + E.f[0]) % p
            total += 1 + legendre_symbol(fx, p)
        return total
    F = GF(p, k)
    squares = {}
    for y in F.elements():
        s = F.mul(y, y)
        squares[s] = squares.get(s, 0) + 1
    return 1 + sum(squares.get(F.eval_poly(E.f, x), 0) for x in F.elements())


def trace_of_frobenius(E: WeierstrassCurve) -> int:
    return E.p + 1 - point_count(E, 1)


def hasse_invariant(E: WeierstrassCurve) -> int:
    """Coefficient of ``x^{p-1}`` in ``f(x)^{(p-1)/2}`` mod ``p``."""
    p = E.p
    g = poly_pow(list(E.f), (p - 1) // 2, p)
    return g[p - 1] if len(g) > p - 1 else 0


@dataclass(frozen=True)
class Ordinarity:
    ordinary: bool
    hasse: int
    trace: int

    @property
    def mode(self) -> str:
        return ORDINARY if self.ordinary else SUPERSINGULAR


def is_ordinary(E: WeierstrassCurve) -> Ordinarity:
    """Ordinary iff the Hasse invariant is nonzero; checked against ``p | a_p``."""
    h = hasse_invariant(E)
    a_p = trace_of_frobenius(E)
    by_trace = a_p % E.p != 0
    if (h != 0) != by_trace:
        raise AssertionError(f"Hasse invariant {h} disagrees with trace {a_p} for {E}")
    return Ordinarity(h != 0, h, a_p)


def torsion_count(E: WeierstrassCurve, q: int) -> int:
    """Number of ``q``-torsion points for ``q`` a power of ``p``."""
    if q == 1:
        return 1
    return q if is_ordinary(E).ordinary else 1


def _unit_of_order(m: int, q: int) -> int:
    for z in range(2, q):
        if pow(z, m, q) == 1 and all(pow(z, k, q) != 1 for k in range(1, m)):
            return z
    if m == 1:
        return 1
    raise NonIntegralOrbitCount(f"no unit of order {m} modulo {q}")


@dataclass
class OrbitData:
    q: int
    m: int
    r: int
    orbits: list  # each a sorted list of indices i of the torsion points P_{i/q}

    def orbit_of(self, i: int) -> int:
        for k, orb in enumerate(self.orbits):
            if i in orb:
                return k
        raise KeyError(i)

    def hom_dim(self, i: int, j: int) -> int:
        """``dim Hom(phi_* L_i, phi_* L_j)``: 1 when ``L_i, L_j`` share a ``mu_m``-orbit."""
        return 1 if self.orbit_of(i) == self.orbit_of(j) else 0

    def hom_table(self) -> list:
        reps = [orb[0] for orb in self.orbits]
        return [[self.hom_dim(i, j) for j in reps] for i in reps]


def orbit_count(q: int, m: int, E: Optional[WeierstrassCurve] = None) -> OrbitData:
    """``mu_m``-orbits on the nonzero ``q``-torsion of an ordinary curve.

    The etale ``q``-torsion is cyclic of order ``q`` and ``mu_m`` acts through
    a unit of order ``m`` modulo ``q``; the nonzero points fall into
    ``r = (q - 1)/m`` orbits.
    """
    if E is not None and not is_ordinary(E).ordinary:
        raise ValueError("orbit count needs an ordinary curve")
    if (q - 1) % m:
        raise NonIntegralOrbitCount(f"(q-1)/m = {q - 1}/{m} is not an integer")
    z = _unit_of_order(m, q) if q > 2 else 1
    seen = set()
    orbits = []
    for i in range(1, q):
        if i in seen:
            continue
        orb = sorted({(i * pow(z, k, q)) % q for k in range(m)})
        seen.update(orb)
        orbits.append(orb)
    return OrbitData(q, m, len(orbits), orbits)


@dataclass
class Delta0Census:
    weights: tuple
    p: int
    e: int
    mode: str
    summands: list = field(default_factory=list)  # (rank, multiplicity, label)
    det_class: Optional[PicElement] = None
    ordinarity: Optional[Ordinarity] = None

    @property
    def total_rank(self) -> int:
        return sum(rk * mult for rk, mult, _ in self.summands)

    @property
    def indecomposable_count(self) -> int:
        return sum(mult for _, mult, _ in self.summands)


def gq_ledger(q: int, W: Weights):
    """Rank and determinant of ``G_q``, built by ``0 -> O -> G_r -> G_{r-1} (x) omega^{-1} -> 0``."""
    _check_delta0(W)
    omega = picard.canonical_class(W)
    det = picard.zero(W)
    for rank in range(2, q + 1):
        det = det + picard.pic_scale(-(rank - 1), omega)
    return q, det


def summand_census_delta0(W: Weights, p: int, e: int = 1, lam: Optional[int] = None, i: int = 0) -> Delta0Census:
    """Indecomposable summands of ``F^e_*(omega^i)``, ``q = p^e``."""
    r = _check_delta0(W)
    E = cover_model(W, p, lam)
    q = p**e
    m = max(r)
    ordy = is_ordinary(E)
    if ordy.ordinary:
        orb = orbit_count(q, m)
        summands = [(1, 1, f"omega^{i % m}")]
        summands += [(m, 1, f"phi_*L_{orbit[0]}") for orbit in orb.orbits]
        omega = picard.canonical_class(W)
        det = None
        if (q - 1) % 2 == 0:
            det = picard.pic_add(picard.pic_scale((q - 1) // 2, omega), picard.pic_scale(i, omega))
        return Delta0Census(r, p, e, ORDINARY, summands, det, ordy)
    if i % m:
        raise ValueError("the supersingular census is stated for F^e_* O (i = 0)")
    rank, det = gq_ledger(q, W)
    return Delta0Census(r, p, e, SUPERSINGULAR, [(rank, 1, f"G_{q}")], det, ordy)


def binom_det_check(q: int, m: int) -> bool:
    """``c_1(F^e_* O) = (q-1)/2 K`` agrees with ``det G_q = -q(q-1)/2 K`` in ``Z/m``."""
    return ((q - 1) // 2 + comb(q, 2)) % m == 0
