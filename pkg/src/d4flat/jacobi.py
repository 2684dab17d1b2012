"""Weyl-invariant Jacobi-type elements built from affine D4 characters.

A :class:`JacobiElement` is a bigraded object ``omega^(-2k) e^(m Lambda_0) f``
where ``k`` is the weight, ``m`` the index, and the body ``f`` is a truncated
q-series whose coefficients are Weyl-invariant elements of Q[P].  The body is
stored sparsely as ``{q-exponent in 24ths: {dominant weight: coefficient}}``.
Elements of weight zero double as ordinary functions on the orbit space.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from typing import Mapping

from .linalg import solve_columns
from .polynomial import Poly
from .qseries import (
    GRID,
    PuiseuxSeries,
    TruncationError,
    _min_trunc,
    eisenstein,
    eta_power,
    order_to_grid,
)
from .weyl import (
    ZERO,
    Invariant,
    norm2_quarter,
    orbit_size,
    product_table,
)

RANK = 4


class GradingError(ValueError):
    """Operands live in different (weight, index) components."""


def _frac_half(weight2: int) -> Fraction:
    return Fraction(weight2, 2)


class JacobiElement:
    __slots__ = ("weight2", "index", "_c", "_t")

    def __init__(self, weight=0, index=0, terms: Mapping | None = None, trunc=None):
        w2 = Fraction(weight) * 2
        if w2.denominator != 1:
            raise ValueError("weight must be a multiple of 1/2")
        self.weight2 = int(w2)
        self.index = int(index)
        self._t = None if trunc is None else order_to_grid(trunc)
        self._c = {}
        for e, coeff in (terms or {}).items():
            k = order_to_grid(e)
            if Fraction(e) * GRID != k:
                raise ValueError(f"exponent {e} is off the 1/24 grid")
            inv = coeff if isinstance(coeff, Invariant) else Invariant(coeff)
            if inv.terms and (self._t is None or k < self._t):
                self._c[k] = dict(inv.terms)

    @classmethod
    def _make(cls, weight2: int, index: int, c: dict, t) -> "JacobiElement":
        obj = object.__new__(cls)
        obj.weight2 = weight2
        obj.index = index
        obj._c = c
        obj._t = t
        return obj

    @classmethod
    def _clean(cls, weight2, index, c, t) -> "JacobiElement":
        out = {}
        for e, inner in c.items():
            if t is not None and e >= t:
                continue
            inner = {w: v for w, v in inner.items() if v}
            if inner:
                out[e] = inner
        return cls._make(weight2, index, out, t)

    @classmethod
    def scalar(cls, series: PuiseuxSeries, weight=0) -> "JacobiElement":
        """An index-zero, lattice-constant element with the given q-series as body."""
        w2 = int(Fraction(weight) * 2)
        return cls._make(w2, 0, {k: {ZERO: v} for k, v in series.raw_items()}, series.trunc24)

    @classmethod
    def one(cls) -> "JacobiElement":
        return cls._make(0, 0, {0: {ZERO: Fraction(1)}}, None)

    # -- inspection ------------------------------------------------------
    @property
    def weight(self) -> Fraction:
        return _frac_half(self.weight2)

    @property
    def trunc(self) -> Fraction | None:
        return None if self._t is None else Fraction(self._t, GRID)

    @property
    def trunc24(self):
        return self._t

    def val24(self):
        return min(self._c) if self._c else self._t

    @property
    def valuation(self) -> Fraction | None:
        v = self.val24()
        return None if v is None else Fraction(v, GRID)

    def relative_precision(self) -> Fraction:
        if self._t is None:
            raise TruncationError("exact element has unbounded precision")
        return Fraction(self._t - self.val24(), GRID)

    def is_zero(self) -> bool:
        return not self._c

    def exponents(self) -> list[Fraction]:
        return [Fraction(k, GRID) for k in sorted(self._c)]

    def coefficient(self, exponent) -> Invariant:
        k = order_to_grid(exponent)
        if self._t is not None and k >= self._t:
            raise TruncationError(f"q^{exponent} is beyond the truncation")
        return Invariant(self._c.get(k, {}))

    def raw_items(self):
        return sorted(self._c.items())

    def grading(self) -> tuple[Fraction, int]:
        return self.weight, self.index

    # -- arithmetic ------------------------------------------------------
    def _check_grading(self, other):
        if (self.weight2, self.index) != (other.weight2, other.index):
            raise GradingError(
                f"cannot add weight {self.weight} index {self.index} "
                f"to weight {other.weight} index {other.index}"
            )

    def __add__(self, other):
        if not isinstance(other, JacobiElement):
            return NotImplemented
        self._check_grading(other)
        t = _min_trunc(self._t, other._t)
        c = {e: dict(inner) for e, inner in self._c.items()}
        for e, inner in other._c.items():
            target = c.setdefault(e, {})
            for w, v in inner.items():
                target[w] = target.get(w, 0) + v
        return JacobiElement._clean(self.weight2, self.index, c, t)

    def __neg__(self):
        return JacobiElement._make(
            self.weight2,
            self.index,
            {e: {w: -v for w, v in inner.items()} for e, inner in self._c.items()},
            self._t,
        )

    def __sub__(self, other):
        if not isinstance(other, JacobiElement):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "JacobiElement":
        factor = Fraction(factor)
        if not factor:
            return JacobiElement._make(self.weight2, self.index, {}, self._t)
        return JacobiElement._make(
            self.weight2,
            self.index,
            {e: {w: v * factor for w, v in inner.items()} for e, inner in self._c.items()},
            self._t,
        )

    def _product_trunc(self, va, ta, vb, tb):
        return _min_trunc(None if ta is None else ta + vb, None if tb is None else tb + va)

    def times_series(self, s: PuiseuxSeries) -> "JacobiElement":
        """Multiply the body by a q-series, leaving the grading unchanged."""
        if (s.is_zero() and s.is_exact) or (not self._c and self._t is None):
            return JacobiElement._make(self.weight2, self.index, {}, None)
        t = self._product_trunc(self.val24(), self._t, s.val24(), s.trunc24)
        c: dict[int, dict] = {}
        s_items = s.raw_items()
        for e, inner in self._c.items():
            for k, v in s_items:
                n = e + k
                if t is not None and n >= t:
                    break
                target = c.setdefault(n, {})
                for w, x in inner.items():
                    target[w] = target.get(w, 0) + x * v
        return JacobiElement._clean(self.weight2, self.index, c, t)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, PuiseuxSeries):
            return self.times_series(other)
        if not isinstance(other, JacobiElement):
            return NotImplemented
        w2, idx = self.weight2 + other.weight2, self.index + other.index
        if (not self._c and self._t is None) or (not other._c and other._t is None):
            return JacobiElement._make(w2, idx, {}, None)
        t = self._product_trunc(self.val24(), self._t, other.val24(), other._t)
        c: dict[int, dict] = {}
        b_items = sorted(other._c.items())
        for ea, a_inner in self._c.items():
            a_list = list(a_inner.items())
            for eb, b_inner in b_items:
                e = ea + eb
                if t is not None and e >= t:
                    break
                target = c.setdefault(e, {})
                for lam, ca in a_list:
                    for mu, cb in b_inner.items():
                        cab = ca * cb
                        for nu, k in product_table(lam, mu):
                            target[nu] = target.get(nu, 0) + cab * k
        return JacobiElement._clean(w2, idx, c, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, PuiseuxSeries):
            return self.times_series(other)
        return NotImplemented

    def __pow__(self, n: int):
        result = JacobiElement.one()
        for _ in range(n):
            result = result * self
        return result

    def truncate(self, order) -> "JacobiElement":
        t = _min_trunc(self._t, order_to_grid(order))
        return JacobiElement._clean(self.weight2, self.index, self._c, t)

    def with_weight(self, weight) -> "JacobiElement":
        """Same body, relabelled weight (multiplication by a power of omega)."""
        w2 = Fraction(weight) * 2
        return JacobiElement._make(int(w2), self.index, self._c, self._t)

    # -- operators -------------------------------------------------------
    def q_derive(self) -> "JacobiElement":
        """q d/dq on the body at fixed lattice variables."""
        return JacobiElement._make(
            self.weight2,
            self.index,
            {
                e: {w: v * Fraction(e, GRID) for w, v in inner.items()}
                for e, inner in self._c.items()
                if e
            },
            self._t,
        )

    def laplacian(self) -> "JacobiElement":
        """e^lambda -> |lambda|^2 e^lambda on every coefficient."""
        c = {}
        for e, inner in self._c.items():
            c[e] = {w: v * Fraction(norm2_quarter(w), 4) for w, v in inner.items()}
        return JacobiElement._clean(self.weight2, self.index, c, self._t)

    def q_part(self) -> PuiseuxSeries:
        """Restriction to the zero lattice point: every S(lambda) becomes |W lambda|."""
        c = {}
        for e, inner in self._c.items():
            total = sum((v * orbit_size(w) for w, v in inner.items()), Fraction(0))
            if total:
                c[e] = total
        return PuiseuxSeries._clean(c, self._t)

    def initial_term(self) -> Invariant:
        """The q^0 coefficient; requires the element to have no negative q-powers."""
        if self._c and min(self._c) < 0:
            raise ValueError(f"element has a negative q-power q^{self.valuation}")
        if self._t is not None and self._t <= 0:
            raise TruncationError("q^0 coefficient is beyond the truncation")
        return Invariant(self._c.get(0, {}))

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, JacobiElement):
            return NotImplemented
        return (
            self.weight2 == other.weight2
            and self.index == other.index
            and self._t == other._t
            and self._c == other._c
        )

    def __hash__(self):
        return hash((self.weight2, self.index, self._t, tuple(sorted(self._c))))

    def first_difference(self, other: "JacobiElement", order):
        """First (exponent, weight, got, expected) below ``order`` where self and other differ."""
        self._check_grading(other)
        t = order_to_grid(order)
        for s in (self, other):
            if s._t is not None and s._t < t:
                raise TruncationError(
                    f"element known only below q^{s.trunc}, needed below q^{Fraction(t, GRID)}"
                )
        for e in sorted(k for k in set(self._c) | set(other._c) if k < t):
            a, b = self._c.get(e, {}), other._c.get(e, {})
            for w in sorted(set(a) | set(b)):
                if a.get(w, 0) != b.get(w, 0):
                    return Fraction(e, GRID), w, Fraction(a.get(w, 0)), Fraction(b.get(w, 0))
        return None

    # -- presentation ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "weight_times_2": self.weight2,
            "index": self.index,
            "terms": [
                {
                    "q_num": Fraction(e, GRID).numerator,
                    "q_den": Fraction(e, GRID).denominator,
                    "lattice": Invariant(inner).to_json(),
                }
                for e, inner in sorted(self._c.items())
            ],
            "trunc": None if self._t is None else str(self.trunc),
        }

    def __repr__(self):
        parts = [f"q^{Fraction(e, GRID)}*({Invariant(inner)!r})" for e, inner in sorted(self._c.items())]
        body = " + ".join(parts) if parts else "0"
        tail = "" if self._t is None else f" + O(q^{self.trunc})"
        return f"JacobiElement(weight={self.weight}, index={self.index}: {body}{tail})"


# -- scalar building blocks ---------------------------------------------


def _series_to_relative(builder, element: JacobiElement):
    """Build a scalar series precise enough to multiply ``element`` without losing order."""
    return builder(element.relative_precision())


def eta_times(n: int, element: JacobiElement) -> JacobiElement:
    """eta^n times the body of ``element`` at full available precision."""
    rel = element.relative_precision()
    return element.times_series(eta_power(n, rel + Fraction(n, GRID)))


def eta_omega(n: int, order) -> JacobiElement:
    """(eta/omega)^n: weight n/2, index 0, body eta^n."""
    return JacobiElement.scalar(eta_power(n, order), Fraction(n, 2))


def eisenstein_element(k: int, order) -> JacobiElement:
    """E_k viewed as a weight-k, index-0 element."""
    return JacobiElement.scalar(eisenstein(k, order), k)


# -- characters -----------------------------------------------------------

COSETS = (0, 1, 3, 4)
_SPINOR = {0: (0, 0), 1: (0, 1), 3: (1, 1), 4: (1, 0)}


def coset_dominant_vectors(i: int, bound_24: int):
    """Dominant weights gamma of coset Lambda_i with |gamma|^2 / 2 below bound_24 / 24."""
    if i not in _SPINOR:
        raise ValueError(f"unknown coset label {i}; use one of {COSETS}")
    parity, sum_class = _SPINOR[i]
    out = []
    x1 = parity
    while 3 * x1 * x1 < bound_24:
        for x2 in range(parity, x1 + 1, 2):
            for x3 in range(parity, x2 + 1, 2):
                for x4 in range(-x3, x3 + 1, 2):
                    n = x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4
                    if 3 * n < bound_24 and ((x1 + x2 + x3 + x4) // 2) % 2 == sum_class:
                        out.append(((x1, x2, x3, x4), 3 * n))
        x1 += 2
    return out


@lru_cache(maxsize=None)
def _theta_coset(i: int, order_24: int) -> JacobiElement:
    c: dict[int, dict] = {}
    for w, e in coset_dominant_vectors(i, order_24):
        c.setdefault(e, {})[w] = Fraction(1)
    return JacobiElement._make(0, 1, c, order_24)


def theta_coset(i: int, order) -> JacobiElement:
    """Index-one lattice theta function sum over gamma in Lambda_i of q^(|gamma|^2/2) e^gamma."""
    return _theta_coset(i, order_to_grid(order))


@lru_cache(maxsize=None)
def _character(i: int, order_24: int) -> JacobiElement:
    th = _theta_coset(i, order_24 + 4)
    return th.times_series(eta_power(-4, Fraction(order_24 + 4 - th.val24() - 4, GRID))).truncate(
        Fraction(order_24, GRID)
    )


def character(i: int, order) -> JacobiElement:
    """Level-one affine D4 character: eta^-4 times the coset theta function."""
    if i not in _SPINOR:
        raise ValueError(f"unknown coset label {i}; use one of {COSETS}")
    return _character(i, order_to_grid(order))


# -- differential operators ---------------------------------------------


def jacobi_derivative(f: JacobiElement) -> JacobiElement:
    """Raise the weight by two: omega^-4 [2m q d/dq - Laplacian + (E2/12) m (4 - 2k)]."""
    m = f.index
    out = f.q_derive().scale(2 * m) - f.laplacian()
    coeff = Fraction(m) * (RANK - f.weight2) / 12
    if coeff and not f.is_zero():
        out = out + f.times_series(eisenstein(2, f.relative_precision())).scale(coeff)
    return out.with_weight(f.weight + 2)


def bracket(f: JacobiElement, g: JacobiElement) -> JacobiElement:
    """Bilinear bracket (1/2)[D(fg) - D(f) g - D(g) f] for the derivative D above."""
    return (
        jacobi_derivative(f * g) - jacobi_derivative(f) * g - jacobi_derivative(g) * f
    ).scale(Fraction(1, 2))


def delta_q(f: JacobiElement) -> JacobiElement:
    """Serre-type derivative on index-zero, lattice-constant elements of weight k."""
    if f.index != 0 or any(set(inner) - {ZERO} for inner in f._c.values()):
        raise ValueError("delta_q acts on lattice-constant index-zero elements")
    s = f.q_part()
    out = s.derive()
    if f.weight2 and not s.is_zero():
        out = out - (eisenstein(2, f.relative_precision()) * s).scale(f.weight / 12)
    return JacobiElement.scalar(out, f.weight + 2)


def lattice_pairing(f: JacobiElement, g: JacobiElement) -> JacobiElement:
    """(1/2)[Lap(fg) - f Lap(g) - g Lap(f)], the bilinear part of the Laplacian."""
    return ((f * g).laplacian() - f * g.laplacian() - g * f.laplacian()).scale(Fraction(1, 2))


# -- generators -----------------------------------------------------------

GENERATOR_WEIGHTS = {0: 0, 1: -2, 2: -4, 3: -4, 4: -6}
GENERATOR_INDICES = {0: 1, 1: 1, 2: 1, 3: 1, 4: 2}
_MARGIN = 1


def _q_scalar(f: JacobiElement) -> JacobiElement:
    return JacobiElement.scalar(f.q_part(), 0)


@lru_cache(maxsize=None)
def _generator(idx: int, order_24: int) -> JacobiElement:
    order = Fraction(order_24, GRID)
    work = order + _MARGIN
    if idx in (0, 1):
        chi0 = character(0, work)
        others = character(1, work) + character(3, work) + character(4, work)
        chi0_q, others_q = _q_scalar(chi0), _q_scalar(others)
        if idx == 0:
            det = others * delta_q(chi0_q) - chi0 * delta_q(others_q)
            out = (eta_omega(-4, work) * det).scale(-6)
        else:
            det = others * chi0_q - chi0 * others_q
            out = eta_omega(-4, work) * det
    elif idx == 2:
        body = character(3, work) + character(4, work) - character(1, work).scale(2)
        out = eta_omega(-8, work) * body
    elif idx == 3:
        out = eta_omega(-8, work) * (character(3, work) - character(4, work))
    elif idx == 4:
        s2, s3 = _generator(2, order_24), _generator(3, order_24)
        out = (bracket(s3, s3).scale(3) + bracket(s2, s2)).scale(Fraction(1, 24))
    else:
        raise ValueError(f"generator index must be 0..4, got {idx}")
    if out.trunc24 is None or out.trunc24 < order_24:
        raise TruncationError(f"generator {idx} computed only below q^{out.trunc}")
    return out.truncate(order)


def generator(idx: int, order) -> JacobiElement:
    """The Jacobi generators s_0 .. s_4 (weights 0, -2, -4, -4, -6; indices 1, 1, 1, 1, 2)."""
    if idx not in GENERATOR_WEIGHTS:
        raise ValueError(f"generator index must be 0..4, got {idx}")
    return _generator(idx, order_to_grid(order))


def initial_term(f: JacobiElement) -> Invariant:
    return f.initial_term()


# -- generator polynomials ----------------------------------------------

GENERATOR_NAMES = ("E4", "E6", "s0", "s1", "s2", "s3", "s4")
_VAR_WEIGHTS = (4, 6, 0, -2, -4, -4, -6)
_VAR_INDICES = (0, 0, 1, 1, 1, 1, 2)


class GeneratorPolynomial(Poly):
    """Polynomial in E4, E6, s0, ..., s4 with rational coefficients."""

    def __init__(self, terms=None):
        super().__init__(GENERATOR_NAMES, terms)

    @classmethod
    def _raw(cls, names, terms):
        obj = object.__new__(cls)
        obj.names = GENERATOR_NAMES
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, names, c):
        return cls({(0,) * 7: c})

    def gradings(self) -> set[tuple[int, int]]:
        return {
            (
                sum(w * k for w, k in zip(_VAR_WEIGHTS, e)),
                sum(m * k for m, k in zip(_VAR_INDICES, e)),
            )
            for e in self.terms
        }

    def evaluate_at(self, order) -> JacobiElement:
        grades = self.gradings()
        if len(grades) > 1:
            raise GradingError("polynomial is not homogeneous")
        weight, index = grades.pop() if grades else (0, 0)
        total = JacobiElement(weight, index, trunc=order)
        for e, c in sorted(self.terms.items()):
            total = total + monomial_value(e, order).scale(c)
        return total

    def derivative(self, name: str) -> "GeneratorPolynomial":
        return self.diff(GENERATOR_NAMES.index(name))

    def to_json(self) -> list[dict]:
        keys = ("a", "b", "c0", "c1", "c2", "c3", "c4")
        return [
            {**dict(zip(keys, e)), "coeff": str(c)} for e, c in sorted(self.terms.items())
        ]


def generator_symbols() -> tuple[GeneratorPolynomial, ...]:
    """E4, E6, s0, s1, s2, s3, s4 as polynomial variables."""
    out = []
    for i in range(7):
        e = [0] * 7
        e[i] = 1
        out.append(GeneratorPolynomial({tuple(e): 1}))
    return tuple(out)


def _element_for_var(i: int, order) -> JacobiElement:
    if i == 0:
        return eisenstein_element(4, order)
    if i == 1:
        return eisenstein_element(6, order)
    return generator(i - 2, order)


@lru_cache(maxsize=None)
def _monomial_value(e: tuple, order_24: int) -> JacobiElement:
    order = Fraction(order_24, GRID)
    if sum(e) == 0:
        return JacobiElement.one().truncate(order)
    i = max(j for j, k in enumerate(e) if k)
    rest = list(e)
    rest[i] -= 1
    rest = tuple(rest)
    if sum(rest) == 0:
        return _element_for_var(i, order)
    return (_monomial_value(rest, order_24) * _element_for_var(i, order)).truncate(order)


def monomial_value(e, order) -> JacobiElement:
    return _monomial_value(tuple(e), order_to_grid(order))


def monomials_of_grading(weight, index: int) -> list[tuple[int, ...]]:
    """All exponent vectors (a, b, c0..c4) of the given weight and index."""
    weight = Fraction(weight)
    if weight.denominator != 1:
        return []
    weight = int(weight)
    out = []
    for c4 in range(index // 2 + 1):
        rest = index - 2 * c4
        for c0, c1, c2 in cartesian(range(rest + 1), repeat=3):
            c3 = rest - c0 - c1 - c2
            if c3 < 0:
                continue
            remaining = weight - (-2 * c1 - 4 * c2 - 4 * c3 - 6 * c4)
            if remaining < 0 or remaining % 2:
                continue
            for b in range(remaining // 6 + 1):
                left = remaining - 6 * b
                if left % 4 == 0:
                    out.append((left // 4, b, c0, c1, c2, c3, c4))
    return sorted(out)


def express_in_generators(f: JacobiElement) -> GeneratorPolynomial:
    """Exact rational polynomial P in E4, E6, s0..s4 with P = f to the precision of f."""
    if f.trunc is None:
        raise TruncationError("need a truncated element")
    order = f.trunc
    monos = monomials_of_grading(f.weight, f.index)
    if not monos:
        if f.is_zero():
            return GeneratorPolynomial()
        raise ValueError(f"no generator monomials have weight {f.weight} and index {f.index}")

    def as_vector(x: JacobiElement):
        return {(e, w): v for e, inner in x.raw_items() for w, v in inner.items()}

    columns = [as_vector(monomial_value(m, order)) for m in monos]
    coeffs = solve_columns(columns, as_vector(f))
    return GeneratorPolynomial({m: c for m, c in zip(monos, coeffs) if c})


# -- intersection form -----------------------------------------------------


class _TwoPiITau:
    """Marker for the coordinate 2 pi i tau in intersection-form calls."""

    def __repr__(self):
        return "TAU"


TAU = _TwoPiITau()


def intersection_form(f, g, k_f=0, k_g=0) -> JacobiElement:
    """I*(d(eta^(-2k_f) f), d(eta^(-2k_g) g)) for weight-zero elements f, g.

    Either argument may be :data:`TAU`, standing for 2 pi i tau, whose pairing
    with a function of index m is m times that function.
    """
    if f is TAU and g is TAU:
        return JacobiElement(0, 0, trunc=None)
    if f is TAU or g is TAU:
        other, k = (g, k_g) if f is TAU else (f, k_f)
        return eta_times(-2 * int(k), other).scale(other.index)
    for x in (f, g):
        if x.weight2 != 0:
            raise GradingError("intersection form takes weight-zero (omega-free) inputs")
    k_f, k_g = Fraction(k_f), Fraction(k_g)
    br = bracket(f.with_weight(k_f), g.with_weight(k_g))
    total = k_f + k_g + 2
    twist = -2 * total
    if twist.denominator != 1:
        raise GradingError("twists must add up to an integer")
    out = eta_times(int(twist) + 4, br)
    return out.with_weight(0)


def intersection_direct(f: JacobiElement, g: JacobiElement) -> JacobiElement:
    """I*(df, dg) from the second-order operator 2 q d/dq d/dLambda_0 - Laplacian.

    Equals m_g f' g + m_f f g' minus the lattice pairing, for f of index m_f and g of index m_g.
    """
    return (
        (f.q_derive() * g).scale(g.index)
        + (f * g.q_derive()).scale(f.index)
        - lattice_pairing(f, g)
    )


def bracket_relations() -> dict[str, tuple[tuple, GeneratorPolynomial]]:
    """Closed forms of the brackets and derivatives of the generators.

    Keys name the relation; values are ``((kind, i, j), polynomial)`` where kind
    is ``"bracket"`` for I(s_i, s_j) and ``"derivative"`` for D(s_i) (j unused).
    """
    E4, E6, s0, s1, s2, s3, s4 = generator_symbols()
    q = Fraction
    quad = s2 * s2 + s3 * s3 * 3
    split = s2 * (s2 + s3 * 3) * (s3 * 3 - s2)
    table = {
        "I(s0,s3)": (("bracket", 0, 3), (E4 * s1 * 3 + E6 * s2) * s3 * q(-1, 6)),
        "I(s1,s3)": (("bracket", 1, 3), (s0 * 2 + E4 * s2) * s3 * q(-1, 6)),
        "I(s2,s3)": (("bracket", 2, 3), s1 * s3 * q(-1, 3)),
        "I(s3,s3)": (("bracket", 3, 3), s4 * 4 - s1 * s2 * q(1, 9)),
        "I(s2,s2)": (("bracket", 2, 2), s4 * 12 + s1 * s2 * q(1, 3)),
        "I(s1,s2)": (("bracket", 1, 2), s0 * s2 * q(-1, 3) - E4 * s3 * s3 * q(1, 4) + E4 * s2 * s2 * q(1, 12)),
        "I(s0,s2)": (("bracket", 0, 2), E6 * s3 * s3 * q(-1, 4) - (E4 * s1 * 6 - E6 * s2) * s2 * q(1, 12)),
        "I(s1,s1)": (("bracket", 1, 1), E4 * s4 * 6 - s0 * s1 * q(1, 6) - E6 * quad * q(1, 24)),
        "I(s0,s1)": (("bracket", 0, 1), E6 * s4 * 6 - E4 * s1 * s1 * q(1, 3) - E4 * E4 * quad * q(1, 24)),
        "I(s0,s0)": (
            ("bracket", 0, 0),
            E4 * E4 * s4 * 6 - E6 * s1 * s1 * q(1, 3) - E4 * s0 * s1 * q(1, 6) - E4 * E6 * quad * q(1, 24),
        ),
        "I(s3,s4)": (("bracket", 3, 4), s3 * (s1 * s1 * 8 + s0 * s2 * 8 + E4 * quad) * q(1, 432)),
        "I(s2,s4)": (
            ("bracket", 2, 4),
            s0 * s3 * s3 * q(1, 36) + s1 * s1 * s2 * q(1, 54) - s0 * s2 * s2 * q(1, 108) + E4 * s2 * quad * q(1, 432),
        ),
        "I(s1,s4)": (
            ("bracket", 1, 4),
            s0 * s4 * q(-1, 2) + E4 * s1 * quad * q(1, 144) + E6 * split * q(1, 864),
        ),
        "I(s0,s4)": (
            ("bracket", 0, 4),
            E4 * s1 * s4 * q(-5, 6) + E6 * s1 * quad * q(1, 144) + E4 * E4 * split * q(1, 864),
        ),
        "I(s4,s4)": (
            ("bracket", 4, 4),
            s4 * (s1 * s1 * 8 + E4 * quad) * q(1, 432)
            - s0 * s1 * quad * q(5, 7776)
            - E6 * s2**4 * q(1, 31104)
            - E4 * s1 * split * q(1, 5184)
            - E6 * s3 * s3 * (s2 * s2 * 2 + s3 * s3 * 3) * q(1, 10368),
        ),
        "D(s1)": (("derivative", 1, None), s0 * q(-1, 3)),
        "D(s0)": (("derivative", 0, None), E4 * s1 * q(-2, 3)),
    }
    return table
