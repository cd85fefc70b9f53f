import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ffrt_lab import frobcalc as fc, picard, rootlattice as rl
from ffrt_lab.errors import (
    CharacteristicDividesWeight,
    InconsistentProfile,
    WindowTooSmall,
    ZeroRank,
)
from ffrt_lab.picard import Weights
from ffrt_lab.rootlattice import LatticeVector


def brute_h0(degrees, k):
    return sum(max(0, b + k + 1) for b in degrees)


@pytest.mark.parametrize(
    "a, p, e, expected",
    [(0, 2, 1, (0, -1)), (1, 3, 1, (0, 0, -1)), (-1, 3, 1, (-1, -1, -1)), (5, 2, 2, (1, 1, 0, 0))],
)
def test_frob_split_examples(a, p, e, expected):
    assert fc.frob_split_P1(a, p, e).degrees == expected


@pytest.mark.parametrize("p, e", [(2, 1), (3, 2), (5, 1), (7, 1)])
def test_frob_split_of_q_minus_one_is_trivial(p, e):
    q = p**e
    assert fc.frob_split_P1(q - 1, p, e).degrees == (0,) * q


def test_frob_split_rejects_e0():
    with pytest.raises(ValueError):
        fc.frob_split_P1(0, 2, 0)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("e", [1, 2])
def test_projection_oracle_exhaustive(p, e):
    q = p**e
    for a in range(-30, 31):
        t = fc.frob_split_P1(a, p, e)
        assert t.rank == q
        if a >= -1:
            assert brute_h0(t.degrees, 0) == max(0, a + 1)
        # h0 of every twist matches h0(O(a + qk))
        for k in range(-3, 4):
            assert t.h0(k) == max(0, a + q * k + 1)
        prof = fc.projection_profile(a, p, e)
        assert fc.splitting_from_h0_profile(prof) == t


def test_profile_roundtrip_and_errors():
    st_ = fc.SplittingType((0, -1))
    prof = {k: st_.h0(k) for k in range(-2, 4)}
    assert fc.splitting_from_h0_profile(prof) == st_
    with pytest.raises(InconsistentProfile):
        fc.splitting_from_h0_profile({k: 0 for k in range(-5, 6)}, rank=1)
    with pytest.raises(InconsistentProfile):
        fc.splitting_from_h0_profile({0: 0, 1: 3, 2: 4})
    with pytest.raises(WindowTooSmall):
        fc.splitting_from_h0_profile({0: 1, 1: 3})
    with pytest.raises(WindowTooSmall):
        fc.splitting_from_h0_profile({})
    with pytest.raises(WindowTooSmall):
        fc.splitting_from_h0_profile({0: 0, 2: 1})


def test_splitting_type_multiset_semantics():
    assert fc.SplittingType((-1, 0, 2)) == fc.SplittingType((2, -1, 0))
    assert fc.SplittingType((1, 1, 0)).multiplicities() == {1: 2, 0: 1}


def test_frob_twist_examples():
    W = Weights((2, 3))
    g = picard.zero(W)
    assert fc.frob_twist(g, picard.zero(W), 5, 1) == g
    t1 = fc.frob_twist(g, -picard.a(W, 0), 5, 1)
    assert (t1.l, t1.d) == ((1, 0), -3)
    t2 = fc.frob_twist(g, -picard.a(W, 1), 5, 1)
    assert (t2.l, t2.d) == ((0, 1), -2)


def test_type_example_and_local_model():
    W = Weights((2, 3))
    t = fc.type_of_pushforward(picard.zero(W), 5, 1)
    assert t == LatticeVector.from_parts(W, 5, [[2], [3, 1]], -4)
    assert [list(f) for f in t.flags] == fc.local_monomial_flags(W, 5, 1)
    assert fc.orb_degree(t) == Fraction(-5, 3) == fc.c1_pushforward(0, 1, 5, 1, W)


def test_type_no_stacky_points():
    W = Weights(())
    for p, e in [(2, 1), (3, 2), (7, 1)]:
        t = fc.type_of_pushforward(picard.zero(W), p, e)
        assert t.rho == p**e
        assert t.dhat == fc.frob_split_P1(0, p, e).degree


def test_type_of_line_bundle_degree():
    W = Weights((2, 3, 7))
    rng = random.Random(4)
    for _ in range(200):
        g = picard.normalize([rng.randint(-9, 9) for _ in W.r], rng.randint(-9, 9), W)
        assert fc.orb_degree(fc.type_of_line_bundle(g)) == picard.deg_pic(g)


def test_characteristic_divides_weight():
    with pytest.raises(CharacteristicDividesWeight):
        fc.type_of_pushforward(picard.zero(Weights((2, 3))), 3, 1)


def _random_case(rng):
    while True:
        p = rng.choice([2, 3, 5, 7, 11, 13])
        r = tuple(rng.randint(2, 9) for _ in range(rng.randint(0, 4)))
        if all(x % p for x in r):
            break
    W = Weights(r)
    g = picard.normalize([rng.randint(-20, 20) for _ in r], rng.randint(-5, 5), W)
    return W, g, p, rng.randint(1, 2)


def test_type_c1_consistency_random():
    rng = random.Random(2024)
    for _ in range(200):
        W, g, p, e = _random_case(rng)
        t = fc.type_of_pushforward(g, p, e)
        assert fc.orb_degree(t, W) == fc.c1_pushforward(picard.deg_pic(g), 1, p, e, W)


def test_flags_monotone_and_local_model_random():
    rng = random.Random(7)
    for _ in range(200):
        W, g, p, e = _random_case(rng)
        q = p**e
        t = fc.type_of_pushforward(g, p, e)
        assert t.rho == q
        for f in t.flags:
            seq = [q] + list(f) + [0]
            assert all(x >= y for x, y in zip(seq, seq[1:]))
            assert sum(x - y for x, y in zip(seq, seq[1:])) == q
        t0 = fc.type_of_pushforward(picard.zero(W), p, e)
        assert [list(f) for f in t0.flags] == fc.local_monomial_flags(W, p, e)


def test_slope_closed_form_random():
    rng = random.Random(11)
    for _ in range(200):
        W, _, p, e = _random_case(rng)
        q = p**e
        t = fc.type_of_pushforward(picard.zero(W), p, e)
        assert fc.slope(t, W) == Fraction(q - 1) * picard.delta(W) / (2 * q)


def test_slope_zero_rank():
    with pytest.raises(ZeroRank):
        fc.slope(rl.null_vector((2, 3)).with_hat(0) - rl.null_vector((2, 3)).with_hat(0))


def test_c1_examples():
    W = Weights((2, 3))
    assert fc.c1_pushforward(0, 1, 5, 1, W) == Fraction(-5, 3)
    assert fc.c1_pushforward(0, 1, 2, 1, W) == Fraction(1, 2) * picard.deg_pic(picard.canonical_class(W))
    assert fc.c1_pushforward(Fraction(3, 7), 4, 5, 0, W) == Fraction(3, 7)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_c1_iterated_equals_closed(p):
    for r in [(), (2, 3), (2, 3, 7), (3, 4, 5, 5)]:
        W = Weights(r)
        for e in range(0, 7):
            for rank in (1, 2, 5):
                for c in (Fraction(0), Fraction(-3, 4), Fraction(5)):
                    assert fc.c1_pushforward(c, rank, p, e, W) == fc.c1_pushforward_closed(c, rank, p, e, W)


def test_canonical_filtration_slopes():
    W = Weights((2, 3, 7))
    assert fc.canonical_filtration_slopes(0, 5, W) == [Fraction(k, 42) for k in range(5)]
    W0 = Weights((3, 3, 3))
    assert fc.canonical_filtration_slopes(Fraction(1, 3), 5, W0) == [Fraction(1, 3)] * 5


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(2, 9), max_size=4),
    st.sampled_from([2, 3, 5, 7, 11]),
    st.fractions(min_value=-5, max_value=5, max_denominator=20),
)
def test_canonical_filtration_mean(r, p, mu):
    W = Weights(tuple(r))
    if any(x % p == 0 for x in r):
        return
    s = fc.canonical_filtration_slopes(mu, p, W)
    assert len(s) == p
    assert sum(s) / p == mu + Fraction(p - 1, 2) * picard.delta(W)


def test_computed_types_in_hat_cone():
    rng = random.Random(99)
    for _ in range(200):
        W, g, p, e = _random_case(rng)
        t = fc.type_of_pushforward(g, p, e)
        assert rl.hat_cone_witness(t) == tuple(0 for _ in W.r)


def test_verdict_delta_positive():
    v = fc.indecomposability_verdict(Weights((2, 3, 7)), 5, 2)
    assert v.kind == fc.INDECOMPOSABLE
    assert v.citation == "stability-delta-positive"


def test_verdict_delta_zero():
    v = fc.indecomposability_verdict(Weights((3, 3, 3)), 7, 1)
    assert v.kind == fc.DELEGATED_DELTA0


def test_verdict_e8_certificate():
    W = Weights((2, 3, 5))
    v = fc.indecomposability_verdict(W, 7, 1)
    assert v.kind == fc.DECOMPOSES
    roots = {r.coords for r in rl.enumerate_positive_roots(W)}
    t = fc.type_of_pushforward(picard.zero(W), 7, 1)
    total = [0] * len(t.coords)
    dhat = 0
    for piece, mult in v.certificate:
        assert piece.coords in roots and mult >= 1
        total = [x + mult * y for x, y in zip(total, piece.coords)]
        dhat += mult * piece.dhat
    assert tuple(total) == t.coords and dhat == t.dhat
    assert fc.indecomposability_verdict(W, 7, 1).certificate == v.certificate


@pytest.mark.parametrize("r", [(2, 2), (2, 3, 3), (2, 3, 4), (2, 2, 5), (4,), ()])
@pytest.mark.parametrize("p", [7, 11])
def test_verdict_certificates_finite_types(r, p):
    W = Weights(r)
    v = fc.indecomposability_verdict(W, p, 1)
    assert v.kind == fc.DECOMPOSES
    t = fc.type_of_pushforward(picard.zero(W), p, 1)
    assert sum(m * piece.rho for piece, m in v.certificate) == t.rho
    assert sum(m * piece.dhat for piece, m in v.certificate) == t.dhat
