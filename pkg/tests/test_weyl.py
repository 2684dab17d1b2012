from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from d4flat.weyl import (
    FUNDAMENTAL_WEIGHTS,
    ZERO,
    GroupAlgebraElement,
    Invariant,
    change_basis,
    dominant,
    inner,
    orbit,
    orbit_size,
    orbit_sum,
    reflect,
    weight,
    weyl_group,
)

W1, W2, W3, W4 = FUNDAMENTAL_WEIGHTS


def closure_orbit(w):
    """Orbit by breadth-first closure under the four simple reflections."""
    seen, frontier = {w}, [w]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(4):
                u = reflect(v, i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return seen


def test_inner_products():
    theta = weight(1, 1, 0, 0)
    assert inner(theta, theta) == 2
    assert inner(W1, W1) == 1
    assert inner(ZERO, W3) == 0


def test_group_order():
    assert len(weyl_group()) == 192


def test_small_orbits():
    assert orbit(ZERO) == (ZERO,)
    assert set(orbit(W1)) == {weight(*v) for v in product((-1, 0, 1), repeat=4) if sum(map(abs, v)) == 1}
    assert set(orbit(W2)) == {
        weight(*v) for v in product((-1, 0, 1), repeat=4) if sum(map(abs, v)) == 2
    }


@pytest.mark.parametrize("w", FUNDAMENTAL_WEIGHTS)
def test_fundamental_orbit_sizes(w):
    assert len(orbit(w)) == orbit_size(w) == len(closure_orbit(w))
    assert [orbit_size(v) for v in FUNDAMENTAL_WEIGHTS] == [8, 24, 8, 8]


def test_orbit_sums():
    assert orbit_sum(ZERO) == GroupAlgebraElement({ZERO: 1})
    s1 = orbit_sum(W1)
    assert len(s1.terms) == 8 and set(s1.terms.values()) == {1}
    halves = [weight(*(F(s, 2) for s in signs)) for signs in product((1, -1), repeat=4)]
    even = {w for w in halves if sum(w) % 4 == 0}
    assert set(orbit_sum(W4).terms) == even


def test_laplacian_on_orbit_sums():
    assert Invariant.one().laplacian() == Invariant()
    assert Invariant.orbit_sum(W1).laplacian() == Invariant.orbit_sum(W1)
    assert Invariant.orbit_sum(W2).laplacian() == Invariant.orbit_sum(W2, 2)


def test_square_of_first_orbit_sum():
    s1 = Invariant.orbit_sum(W1)
    want = Invariant.orbit_sum((4, 0, 0, 0)) + Invariant.orbit_sum(W2, 2) + Invariant.one() * 8
    assert s1 * s1 == want
    assert (orbit_sum(W1) * orbit_sum(W1)).to_invariant() == want


dominant_weights = st.tuples(*(st.integers(0, 2),) * 4).map(
    lambda n: tuple(sum(k * om[j] for k, om in zip(n, FUNDAMENTAL_WEIGHTS)) for j in range(4))
)


@settings(max_examples=30, deadline=None)
@given(dominant_weights, dominant_weights)
def test_orbit_product_matches_convolution(a, b):
    fast = Invariant.orbit_sum(a) * Invariant.orbit_sum(b)
    slow = orbit_sum(a) * orbit_sum(b)
    assert fast.to_group_algebra() == slow


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(dominant_weights, st.integers(-3, 3), max_size=4))
def test_change_basis_round_trip(terms):
    x = Invariant(terms)
    poly = change_basis(x, "orbit->monomial")
    assert change_basis(poly, "monomial->orbit") == x


def test_change_basis_identity_cases():
    assert change_basis(Invariant.orbit_sum(W2), "orbit->monomial") != {}
    assert change_basis({(0, 1, 0, 0): 1}, "monomial->orbit") == Invariant.orbit_sum(W2)
    assert change_basis(Invariant.one(), "orbit->monomial") == {(0, 0, 0, 0): 1}
    with pytest.raises(ValueError):
        change_basis(Invariant.one(), "sideways")


@settings(max_examples=50, deadline=None)
@given(st.tuples(*(st.integers(-4, 4),) * 4), st.booleans())
def test_dominant_representative_lies_in_orbit(v, half):
    w = tuple(2 * x + (1 if half else 0) for x in v)
    assert dominant(w) in orbit(w)
    assert orbit(dominant(w)) == orbit(w)


def test_invariance_detection():
    assert orbit_sum(W3).is_invariant()
    assert not GroupAlgebraElement({W1: 1}).is_invariant()
