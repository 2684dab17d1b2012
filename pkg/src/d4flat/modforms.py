"""Scalar quasi-modular identities: Kaneko-Zagier solutions, Halphen system,
character identities and the connection matrices built from them."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .jacobi import character
from .qseries import (
    GRID,
    PuiseuxSeries,
    eisenstein,
    eta_log_derivative,
    eta_power,
    order_to_grid,
    serre_derivative,
    xi,
)
from .report import Check, compare


def _k(k) -> Fraction:
    k = Fraction(k)
    if (2 * k).denominator != 1:
        raise ValueError(f"weight {k} is not a multiple of 1/2")
    return k


def kz_exponent(k) -> Fraction:
    """The non-trivial indicial root (k + 1) / 6."""
    return (_k(k) + 1) / 6


@lru_cache(maxsize=None)
def _kz_solve(k: Fraction, branch: int, order_24: int) -> PuiseuxSeries:
    alpha = (k + 1) / 6
    s = Fraction(0) if branch == 1 else alpha
    if (s * GRID).denominator != 1:
        raise ValueError(f"exponent {s} is off the 1/24 grid")
    order = Fraction(order_24, GRID)
    n_max = order - s  # coefficients c_n with n + s < order
    count = max(0, -((-n_max.numerator) // n_max.denominator))
    e2 = eisenstein(2, count + 1)
    p = eisenstein(2, count + 1) ** 2 - eisenstein(4, count + 1)
    e2c = [e2.coefficient(j) for j in range(count + 1)]
    pc = [p.coefficient(j) for j in range(count + 1)]
    c = [Fraction(1)]
    for n in range(1, count):
        denom = (n + s) * (n + s - alpha)
        if not denom:
            raise ValueError(f"indicial resonance at n = {n} for k = {k}")
        acc = Fraction(0)
        for j in range(1, n + 1):
            acc += ((k + 1) / 6 * e2c[j] * (n - j + s) - k * (k + 1) / 144 * pc[j]) * c[n - j]
        c.append(acc / denom)
    return PuiseuxSeries({n + s: v for n, v in enumerate(c)}, order)


def kz_solve(k, branch: int, order) -> PuiseuxSeries:
    """Normalized solutions of the Kaneko-Zagier equation.

    Branch 1 is ``1 + a1 q + ...`` and branch 2 is ``q^alpha (1 + b1 q + ...)``
    with ``alpha = (k + 1)/6``; they solve
    ``f'' - ((k+1)/6) E2 f' + (k(k+1)/144)(E2^2 - E4) f = 0``.
    """
    k = _k(k)
    if not 0 < k < 4:
        raise ValueError("weight must lie strictly between 0 and 4")
    if branch not in (1, 2):
        raise ValueError("branch is 1 or 2")
    return _kz_solve(k, branch, order_to_grid(order))


def kz_residual(f: PuiseuxSeries, k) -> PuiseuxSeries:
    """Serre derivative pair applied to f minus the E4 term; zero for solutions."""
    k = _k(k)
    lhs = serre_derivative(serre_derivative(f, k), k + 2)
    e4 = eisenstein(4, f.trunc - f.valuation)
    return lhs - (e4 * f).scale(k * (k + 2) / 144)


def wronskian(k, order) -> PuiseuxSeries:
    f1, f2 = kz_solve(k, 1, order + 1), kz_solve(k, 2, order + 1)
    out = f1 * serre_derivative(f2, k) - f2 * serre_derivative(f1, k)
    return out.truncate(order)


def wronskian_check(k, order) -> Check:
    k = _k(k)
    alpha = kz_exponent(k)
    expected = eta_power(int(24 * alpha), order).scale(alpha)
    return compare(f"wronskian k={k}", wronskian(k, order), expected, order)


def _kz_frame(k, order):
    """The 2x2 matrix [[-2k f1, -2k f2], [d_k f1, d_k f2]]."""
    f1, f2 = kz_solve(k, 1, order), kz_solve(k, 2, order)
    return [
        [f1.scale(-2 * k), f2.scale(-2 * k)],
        [serre_derivative(f1, k), serre_derivative(f2, k)],
    ]


def _mat_mul(a, b):
    return [
        [sum((a[i][m] * b[m][j] for m in range(len(b))), PuiseuxSeries.zero()) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def _transpose(a):
    return [list(r) for r in zip(*a)]


def eisenstein_pairing(order):
    """eta^-24 diag(-1/24, 1) [[E4^2, E6], [E6, E4]] diag(-1/24, 1)."""
    work = order + 2
    e4, e6 = eisenstein(4, work), eisenstein(6, work)
    inv_delta = eta_power(-24, work)
    c = Fraction(-1, 24)
    return [
        [(e4 * e4 * inv_delta).scale(c * c), (e6 * inv_delta).scale(c)],
        [(e6 * inv_delta).scale(c), e4 * inv_delta],
    ]


def duality_matrix(k, order):
    """F(k)^T (pairing) F(4 - k); constant for solutions of the two equations."""
    k = _k(k)
    work = order + 2
    left = _transpose(_kz_frame(k, work))
    right = _kz_frame(4 - k, work)
    out = _mat_mul(_mat_mul(left, eisenstein_pairing(order)), right)
    return [[x.truncate(order) for x in row] for row in out]


def duality_expected(k):
    k = _k(k)
    return [[Fraction(12) * k * (4 - k), Fraction(0)], [Fraction(0), (k + 1) * (5 - k) / 36]]


def duality_check(k, order) -> list[Check]:
    got = duality_matrix(k, order)
    want = duality_expected(k)
    return [
        compare(f"duality k={_k(k)} entry ({i},{j})", got[i][j], PuiseuxSeries.constant(want[i][j]), order)
        for i in range(2)
        for j in range(2)
    ]


# -- Halphen system ---------------------------------------------------------


def halphen_checks(order) -> list[Check]:
    work = Fraction(order) + 1
    x2, x3, x4 = xi(2, work), xi(3, work), xi(4, work)
    checks = [
        compare("halphen xi2'", x2.derive(), x2 * x3 + x2 * x4 - x3 * x4, order),
        compare("halphen xi3'", x3.derive(), x2 * x3 - x2 * x4 + x3 * x4, order),
        compare("halphen xi4'", x4.derive(), -(x2 * x3) + x2 * x4 + x3 * x4, order),
    ]
    h1 = x2 + x3 + x4
    h2 = x2 * x3 + x2 * x4 + x3 * x4
    h3 = x2 * x3 * x4
    e4, e6 = eisenstein(4, work), eisenstein(6, work)
    checks.append(compare("symmetric h2 - h1^2/3", h2 - (h1 * h1).scale(Fraction(1, 3)), e4.scale(Fraction(-1, 48)), order))
    cubic = h3 - (h1 * h2).scale(Fraction(1, 3)) + (h1 * h1 * h1).scale(Fraction(2, 27))
    checks.append(compare("symmetric cubic", cubic, e6.scale(Fraction(1, 864)), order))
    return checks


# -- character identities -------------------------------------------------


def normalized_characters(order):
    """X0 = eta^4 chi0 and X1 = eta^4 chi1 restricted to the zero lattice point."""
    work = Fraction(order) + 1
    c0 = character(0, work).q_part()
    c1 = character(1, work).q_part()
    e4 = eta_power(4, work + 1)
    return (e4 * c0).truncate(order), (e4 * c1).truncate(order)


def char_identity_checks(order) -> list[Check]:
    work = Fraction(order) + 1
    x0, x1 = normalized_characters(work)
    e2, e4, e6 = (eisenstein(k, work) for k in (2, 4, 6))
    h = eta_log_derivative(work)
    x2, x3, x4 = xi(2, work), xi(3, work), xi(4, work)
    third = Fraction(1, 3)
    return [
        compare("E2 = 24 eta'/eta", e2, h.scale(24), order),
        compare("E4 = X0^2 + 3 X1^2", e4, x0 * x0 + (x1 * x1).scale(3), order),
        compare("E6 = X0^3 - 9 X0 X1^2", e6, x0 * x0 * x0 - (x0 * x1 * x1).scale(9), order),
        compare(
            "X0'",
            x0.derive(),
            (x0 * h).scale(4) - (x0 * x0).scale(Fraction(1, 6)) + (x1 * x1).scale(Fraction(1, 2)),
            order,
        ),
        compare("X1'", x1.derive(), (x1 * h).scale(4) + (x0 * x1).scale(third), order),
        compare(
            "(eta'/eta)'",
            h.derive(),
            (h * h).scale(2) - (x0 * x0 + (x1 * x1).scale(3)).scale(Fraction(1, 288)),
            order,
        ),
        compare("X0 = 4 xi2 - 2 xi3 - 2 xi4", x0, x2.scale(4) - x3.scale(2) - x4.scale(2), order),
        compare("X1 = 2 xi3 - 2 xi4", x1, x3.scale(2) - x4.scale(2), order),
        compare("eta'/eta = (xi2 + xi3 + xi4)/6", h, (x2 + x3 + x4).scale(Fraction(1, 6)), order),
    ]


def kz_character_checks(order) -> list[Check]:
    """The normalized characters solve the weight-2 Kaneko-Zagier equation."""
    x0, x1 = normalized_characters(Fraction(order) + 1)
    zero = PuiseuxSeries.zero()
    return [
        compare("KZ residual X0", kz_residual(x0, 2), zero, order),
        compare("KZ residual X1", kz_residual(x1, 2), zero, order),
    ]


def kz_branch_checks(k, order) -> list[Check]:
    zero = PuiseuxSeries.zero()
    return [
        compare(f"KZ residual k={_k(k)} branch {b}", kz_residual(kz_solve(k, b, Fraction(order) + 1), k), zero, order)
        for b in (1, 2)
    ]


# -- connection matrices ------------------------------------------------------


def a_matrices(order):
    """A0 = diag(eta^-2, 6 eta^-2), A1 = character matrix, A2 = A0 A1."""
    work = Fraction(order) + 1
    c0 = character(0, work + 1).q_part()
    c1 = character(1, work + 1).q_part()
    em4 = eta_power(-4, work + 1)
    em2 = eta_power(-2, work + 1)
    a0 = [[em2, PuiseuxSeries.zero()], [PuiseuxSeries.zero(), em2.scale(6)]]
    a1 = [[c0, c1], [em4 * c0.derive(), em4 * c1.derive()]]
    a2 = _mat_mul(a0, a1)
    return a0, a1, a2


def a_matrix_checks(order) -> list[Check]:
    a0, a1, a2 = a_matrices(order)
    work = Fraction(order) + 1
    det = a1[0][0] * a1[1][1] - a1[0][1] * a1[1][0]
    h = eta_log_derivative(work + 1)
    eta4 = eta_power(4, work + 1)
    e4t = eisenstein(4, work + 2) * eta_power(-8, work + 2)
    e6t = eisenstein(6, work + 2) * eta_power(-12, work + 2)
    gamma = [[h.scale(2), eta4.scale(Fraction(-1, 6))], [(eta4 * e4t).scale(Fraction(-1, 3)), h.scale(2)]]
    ga = _mat_mul(gamma, a2)
    checks = [compare("det A1 = 4", det, PuiseuxSeries.constant(4), order)]
    for i in range(2):
        for j in range(2):
            checks.append(
                compare(f"flatness of A2 entry ({i},{j})", a2[i][j].derive() + ga[i][j], PuiseuxSeries.zero(), order)
            )
    g = [[(eta4 * e4t * e4t).scale(6), (eta4 * e6t).scale(6)], [(eta4 * e6t).scale(6), (eta4 * e4t).scale(6)]]
    gram = _mat_mul(_mat_mul(_transpose(a2), g), a2)
    want = [[6**3 * 48, 0], [0, 6**3 * 16]]
    for i in range(2):
        for j in range(2):
            checks.append(
                compare(f"A2 congruence entry ({i},{j})", gram[i][j], PuiseuxSeries.constant(want[i][j]), order)
            )
    return checks
