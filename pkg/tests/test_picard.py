import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import divisor_corpus
from ffrt_lab import picard, qdiv, rootlattice
from ffrt_lab.errors import LengthMismatch, WeightsMismatch
from ffrt_lab.picard import Weights, normalize


W23 = Weights((2, 3))
W237 = Weights((2, 3, 7))


def test_normalize_examples():
    g = normalize([-5, 0], 0, W23)
    assert (g.l, g.d) == ((1, 0), -3)
    g = normalize([1, 2, 7], 0, W237)
    assert (g.l, g.d) == ((1, 2, 0), 1)
    assert normalize([0, 0], 4, W23) == picard.PicElement(W23, (0, 0), 4)


def test_normalize_idempotent_and_length_check():
    g = normalize([13, -8], 5, W23)
    assert normalize(g.l, g.d, W23) == g
    with pytest.raises(LengthMismatch):
        normalize([1], 0, W23)


def test_group_law_examples():
    a1, a2, c = picard.a(W23, 0), picard.a(W23, 1), picard.c(W23)
    z = picard.zero(W23)
    assert a1 + z == a1
    assert a1 + a1 == c
    assert picard.pic_scale(3, a2) == c
    assert picard.pic_add(a1, picard.pic_scale(-1, a1)) == z


def test_weights_mismatch():
    with pytest.raises(WeightsMismatch):
        picard.pic_add(picard.zero(W23), picard.zero(W237))


def test_degrees():
    assert picard.deg_pic(picard.zero(W23)) == 0
    assert picard.deg_pic(picard.c(W23)) == 1
    assert picard.deg_pic(picard.canonical_class(W237)) == Fraction(1, 42)


def test_canonical_class_and_delta():
    K = picard.canonical_class(W237)
    assert (K.l, K.d) == ((1, 2, 6), -2)
    assert picard.delta(W237) == Fraction(1, 42)
    assert picard.delta(Weights((2, 3, 6))) == 0
    assert picard.delta(Weights((2, 3, 5))) == Fraction(-1, 30)
    assert picard.delta(Weights(())) == -2


@pytest.mark.parametrize("r", [(2, 3, 6), (2, 4, 4), (3, 3, 3), (2, 2, 2, 2)])
def test_delta_zero_canonical_torsion(r):
    W = Weights(r)
    assert picard.delta(W) == 0
    assert picard.torsion_order(picard.canonical_class(W)) == math.lcm(*r)


def test_torsion_infinite_for_nonzero_degree():
    assert picard.torsion_order(picard.c(W23)) == math.inf
    assert picard.torsion_order(picard.canonical_class(W237)) == math.inf


def test_pushforward_examples():
    assert picard.pushforward_to_P1(normalize([1, 2], 7, W23)) == 7
    assert picard.pushforward_degree([-5, 0], 0, W23) == -3
    # pi^* D for D = 1/2(inf) - 1/3(0) - 1/7(1)
    assert picard.pushforward_degree([1, -1, -1], 0, W237) == -2


def test_h0_orb_examples():
    assert picard.h0_orb(picard.zero(W23)) == 1
    assert picard.h0_orb(picard.c(W23)) == 2
    for r in [(2, 3, 5), (2, 2, 7), (3, 4)]:
        assert picard.h0_orb(picard.canonical_class(Weights(r))) == 0


def test_deg_homomorphism_random():
    rng = random.Random(7)
    for _ in range(10_000):
        n = rng.randint(0, 5)
        W = Weights(tuple(rng.randint(2, 12) for _ in range(n)))
        g = normalize([rng.randint(-50, 50) for _ in range(n)], rng.randint(-9, 9), W)
        h = normalize([rng.randint(-50, 50) for _ in range(n)], rng.randint(-9, 9), W)
        assert picard.deg_pic(g + h) == picard.deg_pic(g) + picard.deg_pic(h)


@given(st.lists(st.integers(2, 12), max_size=5))
@settings(max_examples=300, deadline=None)
def test_delta_sign_matches_finite_type(r):
    W = Weights(tuple(r))
    assert (picard.delta(W) < 0) == rootlattice.is_finite_type(W)


@pytest.mark.parametrize("D", divisor_corpus(), ids=qdiv.render)
def test_section_ring_dimensions_match_orbifold(D):
    L = picard.line_bundle_of(D)
    for m in range(0, 201):
        assert picard.h0_orb(picard.pic_scale(m, L)) == qdiv.hilbert_dim(D, m)


def test_line_bundle_of_degree(d237):
    L = picard.line_bundle_of(d237)
    assert picard.deg_pic(L) == qdiv.degree(d237)
    assert picard.weights_of(d237).r == (2, 3, 7)
