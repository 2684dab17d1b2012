"""Named verification suites shared by the command line and the test-suite."""

from __future__ import annotations

from fractions import Fraction

from . import frobenius, modforms
from .jacobi import (
    COSETS,
    bracket,
    bracket_relations,
    character,
    express_in_generators,
    generator,
    jacobi_derivative,
)
from .qseries import theta
from .report import Check, VerificationReport, compare
from .weyl import Invariant, monomial_to_orbit

KZ_WEIGHTS = tuple(Fraction(n, 2) for n in range(1, 8))


def _poly_check(name, got, want, order) -> Check:
    ok = got == want
    return Check(name, Fraction(order), ok, None if ok else {"got": repr(got), "expected": repr(want)})


def kz_suite(order) -> VerificationReport:
    order = Fraction(order)
    report = VerificationReport("kz", order)
    report.extend(modforms.kz_character_checks(order))
    x0, x1 = modforms.normalized_characters(order)
    report.checks.append(compare("k=2 branch 1 is X0", modforms.kz_solve(2, 1, order), x0, order))
    report.checks.append(compare("k=2 branch 2 is X1/8", modforms.kz_solve(2, 2, order), x1.scale(Fraction(1, 8)), order))
    for k in KZ_WEIGHTS:
        report.extend(modforms.kz_branch_checks(k, order))
        report.checks.append(modforms.wronskian_check(k, order))
        report.extend(modforms.duality_check(k, order))
    return report


def halphen_suite(order) -> VerificationReport:
    return VerificationReport("halphen", Fraction(order)).extend(modforms.halphen_checks(order)[:3])


def theta_oracles(order) -> list[Check]:
    """Normalized characters against sums of fourth powers of theta constants."""
    order = Fraction(order)
    x0, x1 = modforms.normalized_characters(order)
    t2, t3, t4 = theta(2, order), theta(3, order), theta(4, order)
    return [
        compare("X0 = (theta3^4 + theta4^4)/2", x0, (t3**4 + t4**4).scale(Fraction(1, 2)), order),
        compare("X1 = theta2^4 / 2", x1, (t2**4).scale(Fraction(1, 2)), order),
    ]


def char_identities_suite(order) -> VerificationReport:
    order = Fraction(order)
    report = VerificationReport("char-identities", order)
    report.extend(theta_oracles(order))
    report.extend(modforms.char_identity_checks(order))
    report.extend(modforms.halphen_checks(order)[3:])
    return report


def a_matrices_suite(order) -> VerificationReport:
    return VerificationReport("a-matrices", Fraction(order)).extend(modforms.a_matrix_checks(order))


def bracket_table_suite(order) -> VerificationReport:
    order = Fraction(order)
    report = VerificationReport("bracket-table", order)
    gens = {i: generator(i, order) for i in range(5)}
    for name, ((kind, i, j), poly) in bracket_relations().items():
        value = bracket(gens[i], gens[j]) if kind == "bracket" else jacobi_derivative(gens[i])
        report.checks.append(_poly_check(name, express_in_generators(value), poly, order))
    return report


def expected_initial_terms() -> dict[int, Invariant]:
    """Initial terms written as polynomials in S(omega_1), ..., S(omega_4)."""
    s1, s2, s3, s4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    one = (0, 0, 0, 0)

    def mono(*factors):
        return tuple(map(sum, zip(one, *factors)))

    quadratic = {
        mono(s1, s1): 2, mono(s3, s3): 2, mono(s4, s4): 2,
        mono(s1, s3): 1, mono(s1, s4): 1, mono(s3, s4): 1,
        s1: 24, s3: 24, s4: 24, s2: -36, one: -288,
    }
    return {
        0: monomial_to_orbit({s1: 1, s3: 1, s4: 1, one: 48}),
        1: monomial_to_orbit({s1: 1, s3: 1, s4: 1, one: -24}),
        2: monomial_to_orbit({s1: -2, s3: 1, s4: 1}),
        3: monomial_to_orbit({s3: 1, s4: -1}),
        4: monomial_to_orbit({k: Fraction(-v, 36) for k, v in quadratic.items()}),
    }


def weyl_invariance_check(name, element) -> Check:
    for e, inner in element.raw_items():
        full = Invariant(inner).to_group_algebra()
        if not full.is_invariant():
            return Check(name, element.trunc, False, {"exponent": str(Fraction(e, 24))})
    return Check(name, element.trunc, True)


def generators_suite(order) -> VerificationReport:
    order = Fraction(order)
    report = VerificationReport("generators", order)
    expected = expected_initial_terms()
    for i in range(5):
        got = generator(i, order).initial_term()
        ok = got == expected[i]
        report.checks.append(
            Check(f"initial term of s{i}", order, ok, None if ok else {"got": repr(got), "expected": repr(expected[i])})
        )
    for i in COSETS:
        chi = character(i, order + 1)
        d = jacobi_derivative(chi)
        report.checks.append(compare(f"D(chi{i}) = 0", d, d.scale(0).truncate(order), order))
    for i in range(5):
        report.checks.append(weyl_invariance_check(f"Weyl invariance of s{i}", generator(i, order)))
    return report


def j1_suite(order) -> VerificationReport:
    return frobenius.j1_table_check(order)


def j0_suite(order) -> VerificationReport:
    return frobenius.j0_matrix_check(order)


def potential_suite(order) -> VerificationReport:
    order = Fraction(order)
    report = frobenius.potential_identity_check(order)
    report.checks.append(frobenius.u4_check(order))
    report.checks.append(frobenius.s4_routes_check(order))
    return report


def wdvv_suite(order) -> VerificationReport:
    return frobenius.wdvv_check(order)


SUITES = {
    "kz": kz_suite,
    "halphen": halphen_suite,
    "char-identities": char_identities_suite,
    "a-matrices": a_matrices_suite,
    "bracket-table": bracket_table_suite,
    "generators": generators_suite,
    "j1": j1_suite,
    "j0": j0_suite,
    "potential": potential_suite,
    "wdvv": wdvv_suite,
}


def run_suite(name: str, order) -> list[VerificationReport]:
    if name == "all":
        return [build(order) for build in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](order)]
