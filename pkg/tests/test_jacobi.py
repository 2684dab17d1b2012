from fractions import Fraction as F
from itertools import product

import pytest

from d4flat.jacobi import (
    TAU,
    GradingError,
    JacobiElement,
    bracket,
    character,
    eta_times,
    express_in_generators,
    generator,
    generator_symbols,
    intersection_direct,
    intersection_form,
    jacobi_derivative,
    theta_coset,
)
from d4flat.qseries import PuiseuxSeries, eta_power
from d4flat.weyl import GroupAlgebraElement, Invariant

ORDER = 4


def lattice_points(coset, max_norm2):
    """Brute-force enumeration of the coset vectors (in doubled coordinates) with |v|^2 < max_norm2."""
    r = 2 * int(max_norm2**0.5) + 2
    half = coset in (3, 4)
    out = []
    for v in product(range(-r, r + 1), repeat=4):
        if any((x % 2 == 1) != half for x in v):
            continue
        if sum(x * x for x in v) >= 4 * max_norm2:
            continue
        # omega_3 = (1,1,1,-1)/2 has odd coordinate sum, omega_4 = (1,1,1,1)/2 even
        odd_sum = (sum(v) // 2) % 2 == 1
        if odd_sum != (coset in (1, 3)):
            continue
        out.append(v)
    return out


@pytest.mark.parametrize("coset", [0, 1, 3, 4])
def test_theta_coset_matches_lattice_enumeration(coset):
    order = 2
    th = theta_coset(coset, order)
    levels = {}
    for v in lattice_points(coset, 2 * order):
        e = F(sum(x * x for x in v), 8)
        levels.setdefault(e, {})[v] = 1
    got = {F(e, 24): Invariant(inner).to_group_algebra() for e, inner in th.raw_items()}
    want = {e: GroupAlgebraElement(t) for e, t in levels.items() if e < order}
    assert got == want


def test_character_q_parts():
    x0 = eta_times(4, character(0, 4)).q_part()
    assert x0.first_difference(PuiseuxSeries({0: 1, 1: 24, 2: 24}), 3) is None
    x1 = eta_times(4, character(1, 4)).q_part()
    assert x1.first_difference(PuiseuxSeries({F(1, 2): 8}), F(3, 2)) is None


def test_character_valuation_and_spinor_symmetry():
    assert character(0, 2).valuation == F(-4, 24)
    q1, q3, q4 = (character(i, 4).q_part() for i in (1, 3, 4))
    assert q1 == q3 == q4


def test_q_part_of_scalars_and_orbit_sums():
    s = eta_power(4, 3)
    assert JacobiElement.scalar(s).q_part() == s
    el = JacobiElement(0, 1, {0: Invariant.orbit_sum((2, 0, 0, 0))}, trunc=1)
    assert el.q_part().coefficient(0) == 8


def test_characters_are_annihilated():
    for i in (0, 1, 3, 4):
        d = jacobi_derivative(character(i, ORDER + 1))
        assert d.first_difference(d.scale(0), ORDER) is None


def test_derivative_of_constant_is_zero():
    assert jacobi_derivative(JacobiElement.one()).is_zero()


def test_derivative_of_s1():
    d = jacobi_derivative(generator(1, ORDER))
    assert d.first_difference(generator(0, ORDER).scale(F(-1, 3)), ORDER) is None


def test_bracket_with_one_vanishes():
    f = generator(2, 2)
    assert bracket(f, JacobiElement.one()).is_zero()


def test_bracket_examples_in_generators():
    E4, E6, s0, s1, s2, s3, s4 = generator_symbols()
    g2, g3 = generator(2, ORDER), generator(3, ORDER)
    assert express_in_generators(bracket(g3, g3)) == s4 * 4 - s1 * s2 * F(1, 9)
    assert express_in_generators(bracket(g2, g2)) == s4 * 12 + s1 * s2 * F(1, 3)
    g1 = generator(1, ORDER)
    assert express_in_generators(bracket(g1, g3)) == (s0 * 2 + E4 * s2) * s3 * F(-1, 6)


def test_express_identity_case():
    _, _, _, _, _, _, s4 = generator_symbols()
    g4 = generator(4, 3)
    assert express_in_generators(g4 * g4) == s4 * s4


def test_generator_gradings():
    assert generator(4, 2).grading() == (-6, 2)
    assert [generator(i, 2).grading() for i in range(4)] == [(0, 1), (-2, 1), (-4, 1), (-4, 1)]


def test_mismatched_grading_rejected():
    with pytest.raises(GradingError):
        generator(0, 2) + generator(1, 2)


def test_tau_pairing_is_euler_count():
    chi = character(0, 3)
    b0 = eta_times(-2, chi)
    assert intersection_form(TAU, chi, 0, 1) == b0.scale(chi.index)


def test_pairing_grading():
    chi = character(4, 3)
    out = intersection_form(chi, chi, 1, 1)
    assert out.grading() == (0, 2)


def test_bracket_route_matches_direct_pairing():
    chi0, chi1 = character(0, 4), character(1, 4)
    via_bracket = intersection_form(chi0, chi1, 1, 1)
    direct = intersection_direct(eta_times(-2, chi0), eta_times(-2, chi1))
    assert via_bracket.first_difference(direct, 2) is None
