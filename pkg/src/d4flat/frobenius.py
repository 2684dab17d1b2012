"""Flat coordinates, the intersection and flat metrics, and the prepotential.

Index conventions: coordinates are numbered -1, 0, 1, 2, 3, 4.  Coordinate -1
is pi i tau; 0..3 are the normalized characters eta^-2 chi for the cosets
Lambda_0, Lambda_1, Lambda_3, Lambda_4; coordinate 4 is the index-two
function ``b4``.  Polynomials in these coordinates have q-series
coefficients; differentiating in coordinate -1 also acts on coefficients as
``2 q d/dq`` because q = exp(2 pi i tau).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian

from .jacobi import (
    GENERATOR_WEIGHTS,
    JacobiElement,
    TAU,
    bracket,
    character,
    eta_times,
    express_in_generators,
    generator,
    generator_symbols,
    intersection_form,
)
from .linalg import mat_inverse, mat_mul, solve_columns, transpose
from .modforms import normalized_characters
from .polynomial import Poly
from .qseries import (
    GRID,
    PuiseuxSeries,
    TruncationError,
    eisenstein,
    eta_log_derivative,
    eta_power,
    order_to_grid,
)
from .report import Check, VerificationReport, compare, compare_poly

INDICES = (-1, 0, 1, 2, 3, 4)
B_NAMES = ("b_-1", "b0", "b1", "b2", "b3", "b4")
S_NAMES = ("t_-1", "t0", "t1", "t2", "t3", "t4")
COSET_OF = {0: 0, 1: 1, 2: 3, 3: 4}
DEGREES = {-1: Fraction(0), 0: Fraction(1, 2), 1: Fraction(1, 2), 2: Fraction(1, 2), 3: Fraction(1, 2), 4: Fraction(1)}
FLAT_INDEX = {-1: 0, 0: 1, 1: 1, 2: 1, 3: 1, 4: 2}
J0_EXPECTED = [
    [0, 0, 0, 0, 0, 1],
    [0, 2, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 0],
    [0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, 2, 0],
    [1, 0, 0, 0, 0, 0],
]
_MARGIN = 2


def _pos(i: int) -> int:
    return i + 1


class BPolynomial(Poly):
    """Polynomial in b_-1, ..., b4 with q-series coefficients."""

    def __init__(self, terms=None):
        super().__init__(B_NAMES, terms)

    @classmethod
    def _raw(cls, names, terms):
        obj = object.__new__(cls)
        obj.names = B_NAMES
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, names, c):
        return cls({(0,) * 6: c})

    @classmethod
    def var(cls, i: int) -> "BPolynomial":
        e = [0] * 6
        e[_pos(i)] = 1
        return cls({tuple(e): 1})

    def to_json(self) -> list[dict]:
        keys = ("c_minus1", "c0", "c1", "c2", "c3", "c4")
        out = []
        for e, c in sorted(self.terms.items()):
            series = c if isinstance(c, PuiseuxSeries) else PuiseuxSeries.constant(c)
            out.append({**dict(zip(keys, e)), "coeff_series": series.to_json()})
        return out


# -- flat coordinates -------------------------------------------------------


@lru_cache(maxsize=None)
def _flat(order_24: int) -> dict[int, JacobiElement]:
    order = Fraction(order_24, GRID)
    work = order + _MARGIN
    chars = {i: character(COSET_OF[i], work) for i in range(4)}
    out = {i: eta_times(-2, chars[i]) for i in range(4)}
    total = None
    for i in range(4):
        term = intersection_form(chars[i], chars[i], 1, 1)
        total = term if total is None else total + term
    squares = out[0] * out[0] + out[1] * out[1] + out[2] * out[2] + out[3] * out[3]
    h = eta_log_derivative(squares.relative_precision())
    out[4] = total.scale(Fraction(1, 8)) + squares.times_series(h).scale(Fraction(3, 2))
    for i, b in out.items():
        if b.trunc24 < order_24:
            raise TruncationError(f"flat coordinate {i} known only below q^{b.trunc}")
    return {i: b.truncate(order) for i, b in out.items()}


def flat_coordinates(order) -> dict[int, JacobiElement]:
    """The functions b0..b4 (coordinate -1, pi i tau, is not a lattice element)."""
    return dict(_flat(order_to_grid(order)))


def lhs_pairing(i: int, j: int, order) -> JacobiElement:
    """I*(db_i, db_j) for i, j in -1..4, computed from characters and brackets."""
    order = Fraction(order)
    work = order + _MARGIN
    if i == -1 and j == -1:
        return JacobiElement(0, 0, trunc=None)
    if i == -1 or j == -1:
        other = j if i == -1 else i
        b = flat_coordinates(work)[other]
        return intersection_form(TAU, b).scale(Fraction(1, 2)).truncate(order)

    def operand(k):
        if k == 4:
            return flat_coordinates(work)[4], 0
        return character(COSET_OF[k], work), 1

    (f, kf), (g, kg) = operand(i), operand(j)
    out = intersection_form(f, g, kf, kg)
    if out.trunc24 < order_to_grid(order):
        raise TruncationError(f"pairing ({i},{j}) known only below q^{out.trunc}")
    return out.truncate(order)


# -- potential ----------------------------------------------------------------


def potential_coefficients(order):
    """f0 = X1/8, f1 = -(E2 + X0)/48, f2 = -(E2 - X0)/16."""
    x0, x1 = normalized_characters(order)
    e2 = eisenstein(2, order)
    f0 = x1.scale(Fraction(1, 8))
    f1 = (e2 + x0).scale(Fraction(-1, 48))
    f2 = (e2 - x0).scale(Fraction(-1, 16))
    return f0, f1, f2


def potential(order) -> BPolynomial:
    f0, f1, f2 = potential_coefficients(order)
    bm1, b0, b1, b2, b3, b4 = (BPolynomial.var(i) for i in INDICES)
    bs = (b0, b1, b2, b3)
    quartic = sum((b**4 for b in bs), BPolynomial())
    cross = sum((bs[i] ** 2 * bs[j] ** 2 for i in range(4) for j in range(i + 1, 4)), BPolynomial())
    squares = sum((b**2 for b in bs), BPolynomial())
    return (
        bm1 * b4 * b4 * Fraction(1, 2)
        + b4 * squares * Fraction(1, 4)
        + b0 * b1 * b2 * b3 * f0
        + quartic * f1.scale(Fraction(1, 4))
        + cross * f2.scale(Fraction(1, 6))
    )


def d_coordinate(p: Poly, i: int) -> Poly:
    """Partial derivative in flat coordinate i; coordinate -1 also differentiates coefficients."""
    out = p.diff(_pos(i))
    if i == -1:
        out = out + p.map_coefficients(
            lambda c: c.derive().scale(2) if isinstance(c, PuiseuxSeries) else Fraction(0)
        )
    return out


def raised_derivative(p: Poly, i: int) -> Poly:
    """The vector field dual to db_i under the constant flat metric."""
    if i == -1:
        return d_coordinate(p, 4)
    if i == 4:
        return d_coordinate(p, -1)
    return d_coordinate(p, i) * 2


def potential_rhs(i: int, j: int, order) -> BPolynomial:
    f = potential(order)
    return raised_derivative(raised_derivative(f, j), i) * (DEGREES[i] + DEGREES[j])


def potential_identity_check(order) -> VerificationReport:
    """I*(db_i, db_j) = (d_i + d_j) d^i d^j F for all 20 pairs, with b's substituted."""
    order = Fraction(order)
    work = order + _MARGIN
    report = VerificationReport("potential", order)
    b = flat_coordinates(work)
    values = [None] + [b[i] for i in range(5)]
    for i, j in _pairs():
        rhs_poly = potential_rhs(i, j, work)
        lhs = lhs_pairing(i, j, order)
        if 0 in rhs_poly.variables_used():
            report.checks.append(Check(f"pair ({i},{j})", order, False, {"reason": "tau survives"}))
            continue
        rhs = rhs_poly.evaluate(values, JacobiElement.one())
        if rhs.is_zero() and rhs.index != lhs.index:
            rhs = JacobiElement(lhs.weight, lhs.index, trunc=None)
        report.checks.append(compare(f"pair ({i},{j})", lhs, rhs, order))
    return report


def _pairs():
    return [(i, j) for i in INDICES for j in INDICES if i <= j and (i, j) != (-1, -1)]


# -- expansion in the flat coordinates ----------------------------------------


@lru_cache(maxsize=None)
def _aux_basis(order_24: int):
    """b0..b3 together with t4 = eta^12 s4, whose initial terms are independent."""
    order = Fraction(order_24, GRID)
    b = flat_coordinates(order)
    t4 = s_tilde(order)[4]
    return (b[0], b[1], b[2], b[3], t4), (1, 1, 1, 1, 2)


def _monomials(indices, total):
    out = []

    def rec(pos, left, acc):
        if pos == len(indices):
            if left == 0:
                out.append(tuple(acc))
            return
        for k in range(left // indices[pos] + 1):
            rec(pos + 1, left - k * indices[pos], acc + [k])

    rec(0, total, [])
    return out


def triangular_expand(f: JacobiElement, basis, indices, order) -> dict[tuple, PuiseuxSeries]:
    """Coefficient series c_M with f = sum c_M basis^M below q^order.

    Solved one q-power at a time: the lowest surviving power of the remainder
    is matched against the leading lattice coefficients of the monomials.
    """
    order = Fraction(order)
    t = order_to_grid(order)
    monos = _monomials(indices, f.index)
    values = {}
    for m in monos:
        v = JacobiElement.one()
        for x, k in zip(basis, m):
            for _ in range(k):
                v = v * x
        values[m] = v
    leads = []
    for m in monos:
        v = values[m]
        if v.is_zero():
            raise TruncationError("basis monomial vanishes to its precision")
        leads.append((v.val24(), dict(v.raw_items()[0][1])))
    columns = [lead for _, lead in leads]
    coeffs: dict[tuple, dict[int, Fraction]] = {m: {} for m in monos}
    rem = f.with_weight(0) if f.weight2 else f
    rem = rem.truncate(order)
    while True:
        items = [(e, inner) for e, inner in rem.raw_items() if e < t]
        if not items:
            break
        e, inner = items[0]
        x = solve_columns(columns, inner)
        for m, (v, _), xm in zip(monos, leads, x):
            if xm:
                shift = e - v
                coeffs[m][shift] = coeffs[m].get(shift, 0) + xm
                rem = rem - values[m].times_series(PuiseuxSeries.monomial(Fraction(shift, GRID), xm))
        if rem.trunc24 is not None and rem.trunc24 < t:
            raise TruncationError(f"remainder known only below q^{rem.trunc}")
    out = {}
    for m, (v, _) in zip(monos, leads):
        series = PuiseuxSeries({Fraction(k, GRID): c for k, c in coeffs[m].items()}, Fraction(t - v, GRID))
        out[m] = series
    return out


@lru_cache(maxsize=None)
def _b4_correction(order_24: int) -> BPolynomial:
    """Q with b4 = t4 + Q(b0, ..., b3), coefficients known below q^order."""
    order = Fraction(order_24, GRID)
    basis, indices = _aux_basis(order_to_grid(order + _MARGIN))
    b4 = flat_coordinates(order + _MARGIN)[4]
    coeffs = triangular_expand(b4 - basis[4], basis, indices, order)
    q = BPolynomial()
    for m, c in coeffs.items():
        if m[4]:
            if not c.is_zero():
                raise ArithmeticError("b4 - t4 depends on t4")
            continue
        q = q + BPolynomial({(0,) + m[:4] + (0,): c})
    return q


def expand_in_flat_coordinates(f: JacobiElement, order) -> BPolynomial:
    """Write a weight-zero element as a polynomial in b0..b4 with series coefficients.

    ``f`` must be known a couple of q-powers beyond ``order``.
    """
    order = Fraction(order)
    work = order + _MARGIN
    basis, indices = _aux_basis(order_to_grid(work + _MARGIN))
    coeffs = triangular_expand(f, basis, indices, work)
    q = _b4_correction(order_to_grid(work))
    substitution = [BPolynomial.var(i) for i in range(4)] + [BPolynomial.var(4) - q]
    out = BPolynomial()
    for m, c in coeffs.items():
        term = BPolynomial.constant(B_NAMES, c)
        for x, k in zip(substitution, m):
            for _ in range(k):
                term = term * x
        out = out + term
    return out.truncate(order)


def j0_matrix(order):
    """The 6x6 matrix of d/db4 I*(db_i, db_j) as exact constants.

    Raises ArithmeticError if an entry is not a constant.
    """
    order = Fraction(order)
    mat = [[None] * 6 for _ in range(6)]
    for i, j in _pairs() + [(-1, -1)]:
        if (i, j) == (-1, -1):
            val = Fraction(0)
        else:
            expansion = expand_in_flat_coordinates(lhs_pairing(i, j, order + _MARGIN + 1), order)
            val = _constant_of(d_coordinate(expansion, 4), order, (i, j))
        mat[_pos(i)][_pos(j)] = mat[_pos(j)][_pos(i)] = val
    return mat


def _constant_of(p: Poly, order, label):
    const = (0,) * p.nvars
    for e, c in p.terms.items():
        if isinstance(c, PuiseuxSeries):
            if c.trunc24 is not None and c.trunc24 < order_to_grid(order):
                raise TruncationError(f"entry {label} known only below q^{c.trunc}")
            nonconst = [k for k, v in c.raw_items() if k != 0 and k < order_to_grid(order)]
            if nonconst or (e != const and c.truncate(order).raw_items()):
                raise ArithmeticError(f"entry {label} is not constant")
        elif e != const and c:
            raise ArithmeticError(f"entry {label} is not constant")
    c = p.terms.get(const, Fraction(0))
    if isinstance(c, PuiseuxSeries):
        return c.truncate(order).coefficient(0) if order > 0 else Fraction(0)
    return Fraction(c)


def j0_matrix_check(order) -> VerificationReport:
    order = Fraction(order)
    report = VerificationReport("j0", order)
    try:
        mat = j0_matrix(order)
    except ArithmeticError as exc:
        report.checks.append(Check("flat metric is constant", order, False, {"reason": str(exc)}))
        return report
    for a, i in enumerate(INDICES):
        for b, j in enumerate(INDICES):
            if a <= b:
                report.checks.append(compare(f"J0 entry ({i},{j})", mat[a][b], Fraction(J0_EXPECTED[a][b]), order))
    return report


# -- the s-frame, u4 and the J1 table ---------------------------------------------


@lru_cache(maxsize=None)
def _s_tilde(order_24: int) -> dict[int, JacobiElement]:
    order = Fraction(order_24, GRID)
    out = {}
    for i in range(5):
        g = generator(i, order + 1).with_weight(0)
        out[i] = eta_times(-2 * GENERATOR_WEIGHTS[i], g).truncate(order)
    return out


def s_tilde(order) -> dict[int, JacobiElement]:
    """Untwisted generators eta^(-2k) s_i, as weight-zero elements."""
    return dict(_s_tilde(order_to_grid(order)))


def _modular_tilde(order):
    """E4~ = eta^-8 E4 and E6~ = eta^-12 E6."""
    e4t = eisenstein(4, order + 1) * eta_power(-8, order + 1)
    e6t = eisenstein(6, order + 1) * eta_power(-12, order + 1)
    return e4t.truncate(order), e6t.truncate(order)


def _svar(i: int) -> Poly:
    return Poly.variable(S_NAMES, _pos(i))


def u4_polynomial(order) -> Poly:
    """u4 as a polynomial in t0..t4 (the untwisted generators) with series coefficients."""
    order = Fraction(order)
    e4t, e6t = _modular_tilde(order)
    e2 = eisenstein(2, order + 1)
    em4e2 = (eta_power(-4, order + 1) * e2).truncate(order)
    t0, t1, t2, t3, t4 = (_svar(i) for i in range(5))
    a = t0 * t0 * e6t - t0 * t1 * (e4t * e4t).scale(2) + t1 * t1 * (e4t * e6t)
    b = t0 * t0 * e4t - t0 * t1 * e6t.scale(2) + t1 * t1 * (e4t * e4t)
    denom = Fraction(1, 2**9 * 3**5)
    inner = b * denom + t2 * t2 * Fraction(1, 2**4 * 3**2) + t3 * t3 * Fraction(1, 2**4 * 3)
    return t4 + a * (-denom) + inner * em4e2


def u4_from_s(order) -> JacobiElement:
    order = Fraction(order)
    work = order + _MARGIN
    t = s_tilde(work)
    values = [None] + [t[i] for i in range(5)]
    return u4_polynomial(work).evaluate(values, JacobiElement.one()).truncate(order)


def u4_check(order) -> Check:
    order = Fraction(order)
    return compare("u4 = b4", u4_from_s(order), flat_coordinates(order)[4], order)


def s4_routes_check(order) -> Check:
    """t4 from the bracket route against 1/24 eta^-16 [3 I*(dt3, dt3) + I*(dt2, dt2)]."""
    from .jacobi import intersection_direct

    order = Fraction(order)
    work = order + _MARGIN
    t = s_tilde(work)
    combo = intersection_direct(t[3], t[3]).scale(3) + intersection_direct(t[2], t[2])
    s4 = eta_times(-16, combo).scale(Fraction(1, 24))
    t4 = eta_times(12, s4)
    return compare("t4 via direct pairing", t4, s_tilde(order)[4], order)


def j1_expected() -> dict[tuple[int, int], object]:
    """d/ds4 of the pairings of the twisted generators, as generator polynomials."""
    E4, E6, s0, s1, s2, s3, s4 = generator_symbols()
    zero = E4 * 0
    table = {(i, j): zero for i in range(5) for j in range(i, 5)}
    table.update(
        {
            (0, 0): E4 * E4 * 6,
            (0, 1): E6 * 6,
            (0, 4): E4 * s1 * Fraction(-5, 6),
            (1, 1): E4 * 6,
            (1, 4): s0 * Fraction(-1, 2),
            (2, 2): zero + 12,
            (3, 3): zero + 4,
            (4, 4): (s1 * s1 * Fraction(2, 3) + E4 * s2 * s2 * Fraction(1, 12) + E4 * s3 * s3 * Fraction(1, 4))
            * Fraction(1, 36),
        }
    )
    return table


def j1_table(order) -> dict[tuple[int, int], object]:
    """Bracket expansions differentiated in s4, keyed by (i, j) with i <= j."""
    g = {i: generator(i, order) for i in range(5)}
    out = {}
    for i in range(5):
        for j in range(i, 5):
            out[(i, j)] = express_in_generators(bracket(g[i], g[j])).derivative("s4")
    return out


def _to_s_poly(p, order) -> Poly:
    """Replace E4, E6 by eta^-8 E4, eta^-12 E6 and s_i by t_i, then multiply by eta^4."""
    e4t, e6t = _modular_tilde(order)
    eta4 = eta_power(4, order + 1)
    out = Poly(S_NAMES)
    for e, c in p.terms.items():
        coeff = PuiseuxSeries.constant(c)
        for _ in range(e[0]):
            coeff = coeff * e4t
        for _ in range(e[1]):
            coeff = coeff * e6t
        out = out + Poly(S_NAMES, {(0,) + tuple(e[2:]): (coeff * eta4).truncate(order)})
    return out


def _j1_series_matrix(table, order):
    mat = [[Poly(S_NAMES) for _ in range(6)] for _ in range(6)]
    mat[0][5] = mat[5][0] = Poly.constant(S_NAMES, 1)
    for (i, j), p in table.items():
        mat[_pos(i)][_pos(j)] = mat[_pos(j)][_pos(i)] = _to_s_poly(p, order)
    return mat


def v_frame(order):
    """Components of v_-1..v_4 on the basis dt_-1 (= d(pi i tau)), dt_0, ..., dt_4."""
    order = Fraction(order)
    e2_12 = eisenstein(2, order).scale(Fraction(1, 12))
    eta4 = eta_power(4, order + 1).truncate(order)
    e4t, _ = _modular_tilde(order)
    t = [_svar(i) for i in range(5)]
    corrections = {
        0: t[0] * e2_12 - t[1] * (e4t * eta4).scale(Fraction(1, 3)),
        1: t[1] * e2_12 - t[0] * eta4.scale(Fraction(1, 6)),
        2: t[2] * e2_12,
        3: t[3] * e2_12,
    }
    zero = Poly(S_NAMES)
    frame = [[Poly.constant(S_NAMES, 1)] + [zero] * 5]
    for i in range(4):
        row = [zero] * 6
        row[0] = corrections[i] * (-2)
        row[_pos(i)] = Poly.constant(S_NAMES, 1)
        frame.append(row)
    u4 = u4_polynomial(order)
    row = [u4.map_coefficients(lambda c: c.derive().scale(2) if isinstance(c, PuiseuxSeries) else Fraction(0))]
    row += [u4.diff(_pos(i)) for i in range(5)]
    frame.append(row)
    return frame


def v_frame_gram(order, table=None):
    order = Fraction(order)
    table = table if table is not None else j1_table(order + _MARGIN)
    g = _j1_series_matrix(table, order + _MARGIN)
    v = v_frame(order + _MARGIN)
    gram = [[None] * 6 for _ in range(6)]
    for a in range(6):
        gv = [sum((g[i][j] * v[a][i] for i in range(6)), Poly(S_NAMES)) for j in range(6)]
        for b in range(a, 6):
            gram[a][b] = gram[b][a] = sum((gv[j] * v[b][j] for j in range(6)), Poly(S_NAMES))
    return gram


def v_frame_expected(order):
    order = Fraction(order)
    e4t, e6t = _modular_tilde(order + 1)
    eta4 = eta_power(4, order + 2)
    c = lambda s: Poly.constant(S_NAMES, s.truncate(order + 1))  # noqa: E731
    want = [[Poly(S_NAMES) for _ in range(6)] for _ in range(6)]
    want[0][5] = want[5][0] = Poly.constant(S_NAMES, 1)
    want[1][1] = c((eta4 * e4t * e4t).scale(6))
    want[1][2] = want[2][1] = c((eta4 * e6t).scale(6))
    want[2][2] = c((eta4 * e4t).scale(6))
    want[3][3] = c(eta4.scale(12))
    want[4][4] = c(eta4.scale(4))
    return want


M_MATRIX = [
    [1, 0, 0, 0, 0, 0],
    [0, 72, 0, 0, 0, 0],
    [0, 0, 24, -2, 0, 0],
    [0, 0, 24, 1, 1, 0],
    [0, 0, 24, 1, -1, 0],
    [0, 0, 0, 0, 0, 1],
]
X_PAIRING = [
    [0, 0, 0, 0, 0, 1],
    [0, 6**3 * 48, 0, 0, 0, 0],
    [0, 0, 6**3 * 16, 0, 0, 0],
    [0, 0, 0, 12, 0, 0],
    [0, 0, 0, 0, 4, 0],
    [1, 0, 0, 0, 0, 0],
]


def m_matrix_check() -> Check:
    """M^-T (x-frame pairing) M^-1 equals the constant flat metric."""
    m = [[Fraction(x) for x in row] for row in M_MATRIX]
    minv = mat_inverse(m)
    got = mat_mul(mat_mul(transpose(minv), [[Fraction(x) for x in r] for r in X_PAIRING]), minv)
    ok = got == [[Fraction(x) for x in r] for r in J0_EXPECTED]
    return Check("M transforms the x pairing into the flat metric", Fraction(0), ok, None if ok else {"got": str(got)})


def j1_table_check(order) -> VerificationReport:
    order = Fraction(order)
    report = VerificationReport("j1", order)
    table = j1_table(order)
    expected = j1_expected()
    for key in sorted(table):
        ok = table[key] == expected[key]
        failure = None if ok else {"got": repr(table[key]), "expected": repr(expected[key])}
        report.checks.append(Check(f"J1 entry {key}", order, ok, failure))
    t = s_tilde(order)
    for j in range(5):
        # the tau pairing is a multiple of t_j; only t4 contributes after d/dt4
        pair = intersection_form(TAU, t[j]).scale(Fraction(1, 2))
        ratio = Fraction(pair.index, 2)
        if pair != t[j].scale(ratio):
            report.checks.append(Check(f"J1 entry (-1, {j})", order, False, {"reason": "pairing is not a multiple of t"}))
            continue
        got = ratio if j == 4 else Fraction(0)
        report.checks.append(compare(f"J1 entry (-1, {j})", got, Fraction(1 if j == 4 else 0), order))
    gram = v_frame_gram(order, None)
    want = v_frame_expected(order)
    for a in range(6):
        for b in range(a, 6):
            report.checks.append(
                compare_poly(f"v-frame Gram ({INDICES[a]},{INDICES[b]})", gram[a][b], want[a][b], order)
            )
    report.checks.append(m_matrix_check())
    return report


# -- WDVV -----------------------------------------------------------------------


def structure_constants(f: Poly, order):
    """c[i][j][k] = sum_l F_ijl eta^{lk} with the constant flat metric as eta^{lk}."""
    third = {}
    first = {i: d_coordinate(f, i) for i in INDICES}
    second = {}
    for i in INDICES:
        for j in INDICES:
            key = tuple(sorted((i, j)))
            if key not in second:
                second[key] = d_coordinate(first[key[0]], key[1])
    for i, j, l in cartesian(INDICES, repeat=3):
        key = tuple(sorted((i, j, l)))
        if key not in third:
            third[key] = d_coordinate(second[key[:2]], key[2]).truncate(order)
    inv = {(INDICES[a], INDICES[b]): Fraction(J0_EXPECTED[a][b]) for a in range(6) for b in range(6)}
    c = {}
    for i, j, k in cartesian(INDICES, repeat=3):
        total = Poly(f.names)
        for l in INDICES:
            if inv[(l, k)]:
                total = total + third[tuple(sorted((i, j, l)))] * inv[(l, k)]
        c[(i, j, k)] = total
    return c


def wdvv_check(order, f: Poly | None = None) -> VerificationReport:
    """Associativity of the product defined by the third derivatives of the potential."""
    order = Fraction(order)
    report = VerificationReport("wdvv", order)
    f = f if f is not None else potential(order + _MARGIN)
    c = structure_constants(f, order + 1)
    for i, j, k, n in cartesian(INDICES, repeat=4):
        if i > k:
            continue
        left = sum((c[(i, j, m)] * c[(m, k, n)] for m in INDICES), Poly(f.names))
        right = sum((c[(j, k, m)] * c[(m, i, n)] for m in INDICES), Poly(f.names))
        check = compare_poly(f"associativity ({i},{j},{k};{n})", left, right, order)
        if not check.passed:
            report.checks.append(check)
            return report
    report.checks.append(Check("associativity, all index quadruples", order, True))
    for j in INDICES:
        for k in INDICES:
            want = Poly.constant(f.names, 1 if j == k else 0)
            report.checks.append(compare_poly(f"unit c(4,{j},{k})", c[(4, j, k)], want, order))
    return report


# -- integration of closed forms ------------------------------------------------


def _vanishes(c) -> bool:
    return c.is_zero() if isinstance(c, PuiseuxSeries) else c == 0


def poly_integrate(form, weights=None) -> Poly:
    """Potential P with dP = sum_i form[i] dx_i, for a closed polynomial one-form.

    Uses the weighted Euler operator: on a piece of weighted degree D,
    P = sum_i w_i x_i g_i / D.
    """
    form = list(form)
    if not form:
        raise ValueError("empty form")
    names = form[0].names
    n = len(names)
    if len(form) != n:
        raise ValueError("one component per variable is required")
    weights = [Fraction(w) for w in (weights or [1] * n)]
    for i in range(n):
        for j in range(i + 1, n):
            diff = form[i].diff(j) - form[j].diff(i)
            if not all(_vanishes(c) for c in diff.terms.values()):
                raise ValueError("form is not closed")
    terms: dict[tuple, object] = {}
    for i, g in enumerate(form):
        for e, c in g.terms.items():
            f = list(e)
            f[i] += 1
            f = tuple(f)
            deg = sum(w * k for w, k in zip(weights, f))
            if deg == 0:
                raise ValueError("form has a component of degree zero")
            piece = c.scale(weights[i] / deg) if isinstance(c, PuiseuxSeries) else c * weights[i] / deg
            terms[f] = terms[f] + piece if f in terms else piece
    return Poly(names, terms)
