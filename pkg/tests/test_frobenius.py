from fractions import Fraction as F

import pytest

from d4flat import frobenius as fr
from d4flat.frobenius import BPolynomial
from d4flat.modforms import normalized_characters
from d4flat.polynomial import Poly
from d4flat.qseries import PuiseuxSeries, eta_power

ORDER = 4


def all_pass(report):
    failing = [c.line() for c in report.checks if not c.passed]
    assert report.passed, failing


def test_potential_coefficients():
    f0, f1, f2 = fr.potential_coefficients(ORDER)
    assert f0.first_difference(PuiseuxSeries({F(1, 2): 1}), F(3, 2)) is None
    assert f0.valuation == F(1, 2) and f1.valuation == 0
    # the constant terms of E2 and X0 cancel in f2
    assert f2.valuation == 1 and f2.coefficient(1) == 3
    x0, _ = normalized_characters(ORDER)
    assert f2 - f1.scale(3) == x0.scale(F(1, 8))


def test_potential_shape():
    p = fr.potential(ORDER)
    assert p.coefficient((0, 2, 0, 0, 0, 1)) == F(1, 4)
    assert p.coefficient((1, 0, 0, 0, 0, 2)) == F(1, 2)
    assert p.coefficient((0, 1, 1, 1, 1, 0)) == fr.potential_coefficients(ORDER)[0]


def test_flat_coordinate_indices():
    b = fr.flat_coordinates(2)
    assert [b[i].index for i in range(5)] == [1, 1, 1, 1, 2]
    assert all(b[i].weight == 0 for i in range(5))


def test_pair_examples_of_the_potential():
    f0, f1, f2 = fr.potential_coefficients(ORDER)
    bm1, b0, b1, b2, b3, b4 = (BPolynomial.var(i) for i in fr.INDICES)
    assert fr.potential_rhs(-1, 4, ORDER) == b4
    want00 = b4 * 2 + b0 * b0 * f1.scale(12) + (b1 * b1 + b2 * b2 + b3 * b3) * f2.scale(F(4, 3))
    assert fr.potential_rhs(0, 0, ORDER) == want00
    want01 = b2 * b3 * f0.scale(4) + b0 * b1 * f2.scale(F(8, 3))
    assert fr.potential_rhs(0, 1, ORDER) == want01


def test_tau_pairing_with_b4():
    b4 = fr.flat_coordinates(ORDER)[4]
    assert fr.lhs_pairing(-1, 4, ORDER) == b4


def test_potential_identity_all_pairs():
    report = fr.potential_identity_check(ORDER)
    assert len(report.checks) == 20
    all_pass(report)


def test_u4_equals_b4():
    assert fr.u4_check(ORDER).passed


def test_s4_from_direct_pairing():
    assert fr.s4_routes_check(ORDER).passed


def test_expansion_recovers_b4_squared():
    b4 = fr.flat_coordinates(ORDER + 2)[4]
    expansion = fr.expand_in_flat_coordinates((b4 * b4).truncate(ORDER + 2), ORDER)
    want = BPolynomial.var(4) * BPolynomial.var(4)
    assert (expansion - want).first_nonzero(ORDER) is None


def test_j0_matrix():
    mat = fr.j0_matrix(ORDER)
    assert mat == [[F(x) for x in row] for row in fr.J0_EXPECTED]
    assert mat[1][1] == 2 and mat[0][5] == 1 and mat[1][2] == 0


def test_j1_examples():
    E4, E6, s0, s1, s2, s3, s4 = fr.generator_symbols()
    table = fr.j1_table(ORDER)
    assert table[(2, 2)] == E4 * 0 + 12
    assert table[(3, 3)] == E4 * 0 + 4
    assert table[(0, 1)] == E6 * 6


def test_j1_table_full():
    all_pass(fr.j1_table_check(ORDER))


def test_wdvv():
    all_pass(fr.wdvv_check(3))


def test_wdvv_detects_perturbation():
    p = fr.potential(5)
    bump = BPolynomial({(0, 1, 1, 1, 1, 0): PuiseuxSeries({F(1, 2): F(1, 100)}, 5)})
    report = fr.wdvv_check(3, p + bump)
    assert not report.passed
    assert report.first_failure is not None


def _xy():
    names = ("s0", "s1")
    return names, Poly.variable(names, 0), Poly.variable(names, 1)


def test_integrate_examples():
    names, s0, s1 = _xy()
    assert fr.poly_integrate([s0 * 2, Poly(names)]) == s0 * s0
    assert fr.poly_integrate([s1, s0]) == s0 * s1
    with pytest.raises(ValueError, match="not closed"):
        fr.poly_integrate([s1, -s0])


def test_integrate_with_weights_and_series():
    names, s0, s1 = _xy()
    c = eta_power(4, 3)
    target = s0 * s0 * s1 * c
    form = [target.diff(0), target.diff(1)]
    assert fr.poly_integrate(form, weights=[1, 2]) == target
