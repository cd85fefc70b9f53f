"""Verdicts on finite F-representation type for ``R(P^1, D)``.

The sign of ``delta`` decides almost everything when ``p`` is prime to the
weights: ``delta < 0`` gives FFRT through the finiteness of the root
system, ``delta >= 0`` rules it out.  When every weight equals ``p`` the
orbifold is a Frobenius sandwich and FFRT holds again.  Mixed cases are
left ``UNKNOWN``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Union

from . import elliptic, frobcalc, picard, qdiv
from .errors import (
    BadLambda,
    CharacteristicDividesWeight,
    IndexOutOfRange,
    NotDeltaZero,
    NotPrime,
    ZeroPolynomial,
)
from .picard import Weights
from .qdiv import RationalDivisor

FFRT = "FFRT"
NOT_FFRT = "NOT_FFRT"
UNKNOWN = "UNKNOWN"

LOG_TERMINAL = "log_terminal"
LOG_CANONICAL_NOT_LT = "log_canonical_not_lt"
NOT_LOG_CANONICAL = "not_log_canonical"

# report keys for the statements a verdict rests on
CITATIONS = {
    "finite-type-delta-negative": "delta < 0: finitely many indecomposable types up to twist, so R has FFRT",
    "main-theorem-delta-nonnegative": "delta >= 0 and p prime to all weights: R does not have FFRT",
    "frobenius-sandwich": "all weights equal p: the orbifold is a Frobenius sandwich and R has FFRT",
    "genus-positive": "base curve of genus >= 1: R(C, D) does not have FFRT",
    "crawley-boevey-positive-roots": "indecomposable sheaves exist exactly for positive root types (Crawley-Boevey)",
    "stability-delta-positive": "delta > 0: Frobenius push-forwards of stable bundles are stable",
    "delta-zero-elliptic-cover": "delta = 0: F-split iff the mu_m elliptic cover is ordinary",
    "fedder": "Fedder's criterion: k[x,y,z]/(f) is F-pure iff f^(p-1) is outside (x^p, y^p, z^p)",
    "ffrt-gffrt": "R has FFRT iff (orbifold, L) has GFFRT",
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass
class Verdict:
    status: str
    citation: str = ""
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.status != UNKNOWN and not self.citation:
            raise ValueError("a decided verdict needs a citation")


def singularity_class(W: Weights) -> str:
    d = picard.delta(W)
    if d < 0:
        return LOG_TERMINAL
    if d == 0:
        return LOG_CANONICAL_NOT_LT
    return NOT_LOG_CANONICAL


def ffrt_verdict(W: Weights, p: int, genus: int = 0) -> Verdict:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if genus < 0:
        raise ValueError("genus must be non-negative")
    if genus >= 1:
        return Verdict(NOT_FFRT, "genus-positive", [f"genus {genus} base curve"])
    d = picard.delta(W)
    if all(r % p for r in W.r):
        if d < 0:
            return Verdict(FFRT, "finite-type-delta-negative", [f"delta = {d}"])
        return Verdict(NOT_FFRT, "main-theorem-delta-nonnegative", [f"delta = {d}"])
    if all(r == p for r in W.r):
        return Verdict(FFRT, "frobenius-sandwich", [f"all weights equal {p}"])
    return Verdict(
        UNKNOWN,
        notes=[
            f"p={p} divides some weight of {W} but not every weight equals p; "
            "the theorems implemented here do not decide this case "
            "(for weights (2,3,7) FFRT at p = 2, 3, 7 is an external result from the sandwich literature)"
        ],
    )


# --- Fedder ---------------------------------------------------------------

Polynomial = Mapping[tuple, int]  # exponent tuple -> integer coefficient


def parse_polynomial(text: str, variables=("x", "y", "z")) -> dict:
    """Integer polynomial from a string such as ``"x^3 + y^3 + z^3"``."""
    import sympy
    from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

    syms = sympy.symbols(variables)
    local = dict(zip(variables, syms))
    expr = parse_expr(text, local_dict=local, transformations=standard_transformations + (convert_xor,))
    poly = sympy.Poly(expr, *syms)
    out = {}
    for mon, coeff in poly.terms():
        if not coeff.is_integer:
            raise ValueError(f"non-integer coefficient {coeff} in {text!r}")
        out[tuple(int(k) for k in mon)] = int(coeff)
    return out


def _truncated_mul(f, g, p):
    out = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            mon = tuple(a + b for a, b in zip(m1, m2))
            if any(x >= p for x in mon):
                continue  # already in the Frobenius power of the maximal ideal
            out[mon] = (out.get(mon, 0) + c1 * c2) % p
    return {k: v for k, v in out.items() if v}


def fedder_is_fpure(f: Union[str, Polynomial], p: int) -> bool:
    """``f^{p-1}`` has a monomial with every exponent ``<= p-1`` over ``F_p``."""
    if isinstance(f, str):
        f = parse_polynomial(f)
    f = {tuple(m): c % p for m, c in f.items() if c % p}
    if not f:
        raise ZeroPolynomial("f vanishes over F_p")
    acc = {tuple(0 for _ in next(iter(f))): 1}
    base = f
    n = p - 1
    while n:
        if n & 1:
            acc = _truncated_mul(acc, base, p)
        n >>= 1
        if n:
            base = _truncated_mul(base, base, p)
    return bool(acc)


def fsplit_delta0(W: Weights, p: int, lam: Optional[int] = None) -> bool:
    r = tuple(sorted(W.r))
    if r not in elliptic.DELTA0_WEIGHTS:
        raise NotDeltaZero(f"weights {r} do not have delta = 0")
    E = elliptic.cover_model(r, p, lam)
    m = max(r)
    return (p - 1) % m == 0 and elliptic.is_ordinary(E).ordinary


def legendre_lambda(W: Weights, p: int) -> int:
    """Cross-ratio of the four weight points sent to ``inf, 0, 1, lambda``, reduced mod ``p``."""
    if W.n != 4:
        raise BadLambda("lambda is defined for four points")

    def hom(pt):
        if pt.is_infinity:
            return (Fraction(1), Fraction(0))
        return (pt.value, Fraction(1))

    def det(u, v):
        return u[0] * v[1] - v[0] * u[1]

    z1, z2, z3, z4 = (hom(pt) for pt in W.points)
    num = det(z4, z2) * det(z3, z1)
    den = det(z4, z1) * det(z3, z2)
    lam = num / den
    n, d = lam.numerator, lam.denominator
    if d % p == 0:
        raise BadLambda(f"lambda = {lam} has denominator divisible by {p}")
    value = n * pow(d, -1, p) % p
    if value in (0, 1):
        raise BadLambda(f"lambda = {lam} is {value} mod {p}: the points collide")
    return value


# --- graded pieces of R^{1/q} ---------------------------------------------

def graded_piece_dims(D: RationalDivisor, p: int, e: int, i: int, N: int) -> list:
    """Dimensions of the ``i/q mod Z`` graded piece of ``R^{1/q}``: ``m -> dim R_{qm+i}``."""
    q = p**e
    if not 0 <= i < q:
        raise IndexOutOfRange(f"i={i} outside [0, {q - 1}]")
    qdiv.check(D)
    return [qdiv.hilbert_dim(D, q * m + i) for m in range(N + 1)]


# --- full analysis ----------------------------------------------------------

@dataclass
class FrobeniusSummary:
    e: int
    type: object
    slope: Fraction
    splitting_P1: frobcalc.SplittingType


@dataclass
class AnalysisReport:
    divisor: Optional[RationalDivisor]
    weights: Weights
    p: int
    e_max: int
    delta: Fraction
    singularity: str
    fpure: str
    verdict: Verdict
    frobenius: list = field(default_factory=list)
    genus: int = 0
    notes: list = field(default_factory=list)

    @property
    def citations(self) -> list:
        keys = []
        if self.verdict.citation:
            keys.append(self.verdict.citation)
        if self.verdict.status != UNKNOWN:
            keys.append("ffrt-gffrt")
        if self.fpure != "undetermined" and self.delta == 0:
            keys.append("delta-zero-elliptic-cover")
        return keys


def _fpure(W: Weights, p: int, lam: Optional[int], notes: list) -> str:
    if picard.delta(W) != 0:
        return "undetermined"
    try:
        if W.n == 4 and lam is None:
            lam = legendre_lambda(W, p)
        return "yes" if fsplit_delta0(W, p, lam) else "no"
    except (CharacteristicDividesWeight, BadLambda, ValueError) as exc:
        notes.append(f"F-purity undetermined: {exc}")
        return "undetermined"


def analyze(
    D: Optional[RationalDivisor],
    p: int,
    e_max: int = 2,
    weights: Optional[Weights] = None,
    genus: int = 0,
    lam: Optional[int] = None,
) -> AnalysisReport:
    """Collect delta, singularity class, F-purity, the verdict and Frobenius data."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if D is not None:
        qdiv.check(D)
        W = picard.weights_of(D)
    elif weights is not None:
        W = weights
    else:
        raise ValueError("need a divisor or a weight list")
    d = picard.delta(W)
    verdict = ffrt_verdict(W, p, genus)
    notes = []
    if genus >= 1:
        return AnalysisReport(D, W, p, e_max, d, singularity_class(W), "undetermined", verdict, [], genus, notes)
    fpure = _fpure(W, p, lam, notes)
    frob = []
    if all(r % p for r in W.r):
        for e in range(1, e_max + 1):
            t = frobcalc.type_of_pushforward(picard.zero(W), p, e)
            frob.append(FrobeniusSummary(e, t, frobcalc.slope(t), frobcalc.frob_split_P1(0, p, e)))
    else:
        notes.append("p divides a weight: Frobenius types are not computed")
    return AnalysisReport(D, W, p, e_max, d, singularity_class(W), fpure, verdict, frob, genus, notes)
