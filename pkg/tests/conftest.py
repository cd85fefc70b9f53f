import sys
from fractions import Fraction

import pytest

from ffrt_lab.qdiv import INF, PointLabel, RationalDivisor, Term


def P(v):
    return INF if v == "inf" else PointLabel.affine(v)


def divisor(*triples):
    """``divisor(("inf", 1, 2), (0, -1, 3))`` -> 1/2 [inf] - 1/3 [0]."""
    return RationalDivisor([Term(P(pt), s, r) for pt, s, r in triples])


def series_quotient(num_exps, den_exps, N):
    """Coefficients up to t^N of prod(1 - t^a) / prod(1 - t^b) by direct convolution."""
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for a in num_exps:
        for k in range(N, a - 1, -1):
            coeffs[k] -= coeffs[k - a]
    for b in den_exps:
        for k in range(b, N + 1):
            coeffs[k] += coeffs[k - b]
    return coeffs


@pytest.fixture
def d237():
    return divisor(("inf", 1, 2), (0, -1, 3), (1, -1, 7))


@pytest.fixture
def example333():
    return divisor(("inf", 1, 3), (0, 1, 3), (1, -1, 3))


def divisor_corpus():
    """Twenty valid divisors used by several suites."""
    out = [
        divisor(("inf", 1, 2), (0, -1, 3), (1, -1, 7)),
        divisor(("inf", 1, 3), (0, 1, 3), (1, -1, 3)),
        divisor(("inf", 1, 1)),
        divisor(("inf", 1, 2), (0, 1, 3)),
        divisor(("inf", 2, 1), (0, -1, 2), (1, -1, 2), (2, -1, 2), (3, 1, 2)),
        divisor(("inf", 1, 2), (0, 1, 4), (1, -1, 4)),
        divisor(("inf", 1, 2), (0, 1, 3), (1, -1, 6)),
        divisor(("inf", 5, 7)),
        divisor(("inf", 3, 5), (0, -2, 5)),
        divisor(("inf", 1, 2), (0, 1, 3), (1, 1, 5)),
        divisor(("inf", 1, 2), (0, 2, 3), (1, -3, 4)),
        divisor((Fraction(1, 2), 7, 3), (0, -1, 2)),
        divisor(("inf", -1, 2), (0, 1, 1), (1, 1, 9)),
        divisor(("inf", 1, 2), (0, 1, 2), (1, 1, 2), (5, -1, 2)),
        divisor(("inf", 4, 3), (0, -5, 6), (1, 1, 5)),
        divisor((-1, 1, 11)),
        divisor(("inf", 1, 7), (0, 1, 7), (1, -1, 7)),
        divisor(("inf", 3, 2), (0, -2, 3), (1, -4, 5), (2, 1, 7)),
        divisor(("inf", 1, 8), (0, 3, 8)),
        divisor(("inf", 2, 3), (0, -1, 4), (1, -1, 5), (2, -1, 6), (3, 1, 1)),
    ]
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
