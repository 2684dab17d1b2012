from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import agree, brute_eta_power, series
from d4flat.qseries import (
    OffGridError,
    PuiseuxSeries,
    TruncationError,
    eisenstein,
    eta_log_derivative,
    eta_power,
    named_series,
    serre_derivative,
    theta,
    xi,
)


def test_geometric_series_inverse():
    geometric = PuiseuxSeries({n: 1 for n in range(10)}, 10)
    one_minus_q = PuiseuxSeries({0: 1, 1: -1})
    assert one_minus_q * geometric == PuiseuxSeries({0: 1}, 10)
    assert one_minus_q.inverse(10) == geometric


def test_eta24_over_eta24_is_one():
    d = eta_power(24, 5)
    assert d / d == PuiseuxSeries.constant(1).truncate(4)


def test_eta4_leading_terms():
    assert eta_power(4, F(2) + F(4, 24)) == PuiseuxSeries({F(4, 24): 1, F(28, 24): -4, F(52, 24): 2}, F(52, 24))


@pytest.mark.parametrize("n", [1, 2, 4, -4, 8, -24])
def test_eta_power_matches_convolution(n):
    coeffs = brute_eta_power(n, 7)
    want = PuiseuxSeries({F(n, 24) + k: c for k, c in enumerate(coeffs)}, F(n, 24) + 7)
    assert eta_power(n, F(n, 24) + 7) == want


def test_derive_monomial_and_constant():
    assert PuiseuxSeries.monomial(F(1, 24)).derive() == PuiseuxSeries.monomial(F(1, 24), F(1, 24))
    assert PuiseuxSeries.constant(1).derive().is_zero()


def test_ramanujan_e2():
    e2, e4 = eisenstein(2, 7), eisenstein(4, 7)
    assert e2.derive().first_difference((e2 * e2 - e4).scale(F(1, 12)), 6) is None


def test_named_series_examples():
    assert named_series("E4", 2) == PuiseuxSeries({0: 1, 1: 240}, 2)
    assert named_series("E2", 4) == PuiseuxSeries({0: 1, 1: -24, 2: -72, 3: -96}, 4)
    assert named_series("theta3", 3) == PuiseuxSeries({0: 1, F(1, 2): 2, 2: 2}, 3)
    with pytest.raises(ValueError):
        named_series("E3", 2)


def test_eisenstein_divisor_sums():
    sigma3 = [sum(d**3 for d in range(1, n + 1) if n % d == 0) for n in range(1, 6)]
    assert eisenstein(4, 6) == PuiseuxSeries({0: 1, **{n: 240 * s for n, s in enumerate(sigma3, 1)}}, 6)


def test_xi_examples():
    assert xi(2, 2) == PuiseuxSeries({0: F(1, 4), 1: 2}, 2)
    x3 = xi(3, 1)
    assert x3.coefficient(0) == 0 and x3.coefficient(F(1, 2)) == 2


def test_xi_sum_is_quarter_e2():
    total = xi(2, 6) + xi(3, 6) + xi(4, 6)
    assert total == eisenstein(2, 6).scale(F(1, 4))
    assert total == eta_log_derivative(6).scale(6)


def test_serre_derivatives():
    assert serre_derivative(PuiseuxSeries.constant(1), 0).is_zero()
    e4, e6 = eisenstein(4, 7), eisenstein(6, 7)
    assert serre_derivative(e4, 4).first_difference(e6.scale(F(-1, 3)), 6) is None
    assert serre_derivative(e6, 6).first_difference((e4 * e4).scale(F(-1, 2)), 6) is None


def test_theta_jacobi_identity():
    t2, t3, t4 = theta(2, 6), theta(3, 6), theta(4, 6)
    assert t3**4 == t2**4 + t4**4


def test_truncation_propagates_through_products():
    a = PuiseuxSeries({F(1, 2): 1}, 3)
    b = PuiseuxSeries({0: 1, 1: 1}, 2)
    assert (a * b).trunc == F(5, 2)


def test_first_difference_reports_and_refuses():
    a = PuiseuxSeries({0: 1, 1: 2}, 3)
    b = PuiseuxSeries({0: 1, 1: 3}, 3)
    assert a.first_difference(b, 2) == (F(1), F(2), F(3))
    with pytest.raises(TruncationError):
        a.first_difference(b, 4)


def test_off_grid_exponent_rejected():
    with pytest.raises(OffGridError):
        PuiseuxSeries({F(1, 5): 1})


def test_json_round_trip():
    s = eta_power(4, 3)
    assert PuiseuxSeries.from_json(s.to_json()) == s


@settings(max_examples=60, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert agree((a * b) * c, a * (b * c))
    assert agree(a * (b + c), a * b + a * c)
    assert a - a == PuiseuxSeries.zero(a.trunc)


@settings(max_examples=60, deadline=None)
@given(series(), series())
def test_derivation_laws(a, b):
    assert (a + b).derive() == a.derive() + b.derive()
    assert agree((a * b).derive(), a.derive() * b + a * b.derive())


@settings(max_examples=40, deadline=None)
@given(series(), st.integers(6, 9))
def test_inverse_is_two_sided(a, unit):
    x = a + PuiseuxSeries.constant(unit)  # coefficients are at most 5, so q^0 stays nonzero
    x = x.truncate(2)
    assert x * x.inverse() == PuiseuxSeries.constant(1).truncate(2)
