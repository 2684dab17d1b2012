from fractions import Fraction as F

import pytest

from d4flat.modforms import (
    a_matrix_checks,
    char_identity_checks,
    duality_check,
    duality_expected,
    halphen_checks,
    kz_branch_checks,
    kz_character_checks,
    kz_exponent,
    kz_solve,
    normalized_characters,
    wronskian,
)
from d4flat.qseries import PuiseuxSeries, eta_power, xi

KS = [F(n, 2) for n in range(1, 8)]


def all_pass(checks):
    failing = [c.line() for c in checks if not c.passed]
    assert not failing, failing


def test_kz_weight_two_solutions():
    assert kz_solve(2, 1, 2) == PuiseuxSeries({0: 1, 1: 24}, 2)
    assert kz_solve(2, 2, F(5, 2)) == PuiseuxSeries({F(1, 2): 1, F(3, 2): 4}, F(5, 2))


@pytest.mark.parametrize("k", KS)
def test_kz_first_coefficients(k):
    a1 = 12 * k * (k + 1) / (5 - k)
    b1 = 4 * (k + 1) * (2 * k - 1) / (k + 7)
    alpha = kz_exponent(k)
    assert kz_solve(k, 1, 2).coefficient(1) == a1
    assert kz_solve(k, 2, alpha + 2).coefficient(alpha + 1) == b1


def test_kz_weight_two_matches_characters():
    x0, x1 = normalized_characters(5)
    assert kz_solve(2, 1, 5) == x0
    assert kz_solve(2, 2, 5).scale(8) == x1


@pytest.mark.parametrize("k", KS)
def test_kz_residuals(k):
    all_pass(kz_branch_checks(k, 6))


def test_characters_solve_kz():
    all_pass(kz_character_checks(8))


@pytest.mark.parametrize("k, alpha, power", [(2, F(1, 2), 12), (3, F(2, 3), 16), (1, F(1, 3), 8)])
def test_wronskian_examples(k, alpha, power):
    assert wronskian(k, 5) == eta_power(power, 5).scale(alpha)


def test_duality_examples():
    assert duality_expected(2) == [[48, 0], [0, F(1, 4)]]
    assert duality_expected(3) == [[36, 0], [0, F(2, 9)]]
    for k in KS:
        assert duality_expected(k) == duality_expected(4 - k)


@pytest.mark.parametrize("k", KS)
def test_duality_constant(k):
    all_pass(duality_check(k, 6))


@pytest.mark.parametrize("order", [6, 12])
def test_halphen(order):
    all_pass(halphen_checks(order))


def test_halphen_perturbation_detected():
    x2, x3, x4 = xi(2, 7) + PuiseuxSeries.monomial(1), xi(3, 7), xi(4, 7)
    residual = x2.derive() - (x2 * x3 + x2 * x4 - x3 * x4)
    assert residual.first_difference(PuiseuxSeries.zero(), 6) is not None


def test_character_identities():
    all_pass(char_identity_checks(8))


def test_character_identity_examples():
    from d4flat.qseries import eisenstein, eta_log_derivative

    x0, x1 = normalized_characters(6)
    assert eisenstein(4, 6) == x0 * x0 + (x1 * x1).scale(3)
    assert x1 == xi(3, 6).scale(2) - xi(4, 6).scale(2)
    rhs = (x1 * eta_log_derivative(7)).scale(4) + (x0 * x1).scale(F(1, 3))
    assert normalized_characters(7)[1].derive().first_difference(rhs, 6) is None


def test_connection_matrices():
    all_pass(a_matrix_checks(6))
