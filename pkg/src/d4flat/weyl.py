"""The D4 weight lattice, its Weyl group and the group algebra Q[P].

Weights are tuples of four integers holding *twice* the orthonormal
coordinates, so ``(1, 1, 1, -1)`` is the spinor weight (1/2, 1/2, 1/2, -1/2).
Either all four entries are even (integral weights) or all are odd.

Two element types live here.  :class:`GroupAlgebraElement` is an arbitrary
finite combination of exponentials ``e^lambda``.  :class:`Invariant` stores a
Weyl-invariant element in the orbit-sum basis ``S(lambda)`` indexed by
dominant weights, which is far smaller and is what the Jacobi layer uses.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, Mapping, Sequence

Weight = tuple[int, int, int, int]

SIMPLE_ROOTS: tuple[Weight, ...] = ((2, -2, 0, 0), (0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 2, 2))
FUNDAMENTAL_WEIGHTS: tuple[Weight, ...] = ((2, 0, 0, 0), (2, 2, 0, 0), (1, 1, 1, -1), (1, 1, 1, 1))
RHO: Weight = (6, 4, 2, 0)
ZERO: Weight = (0, 0, 0, 0)


def weight(*coords) -> Weight:
    """Build a weight from its four orthonormal coordinates (rationals in Z/2)."""
    if len(coords) == 1 and not isinstance(coords[0], (int, Fraction, str)):
        coords = tuple(coords[0])
    if len(coords) != 4:
        raise ValueError("a D4 weight has four coordinates")
    doubled = []
    for x in coords:
        d = Fraction(x) * 2
        if d.denominator != 1:
            raise ValueError(f"coordinate {x} is not in Z/2")
        doubled.append(int(d))
    if len({d % 2 for d in doubled}) != 1:
        raise ValueError("coordinates must be all integers or all half-integers")
    return tuple(doubled)


def coordinates(w: Weight) -> tuple[Fraction, ...]:
    return tuple(Fraction(x, 2) for x in w)


def inner(a: Weight, b: Weight) -> Fraction:
    return Fraction(a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3], 4)


def norm2_quarter(w: Weight) -> int:
    """Four times the squared length |w|^2, an integer."""
    return w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3]


def add(a: Weight, b: Weight) -> Weight:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def is_dominant(w: Weight) -> bool:
    return w[0] >= w[1] >= w[2] >= abs(w[3])


def dominant(w: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of ``w``."""
    a = sorted((abs(x) for x in w), reverse=True)
    negatives = sum(1 for x in w if x < 0)
    if negatives % 2 and a[3]:
        a[3] = -a[3]
    return tuple(a)


@lru_cache(maxsize=None)
def orbit_size(w: Weight) -> int:
    w = dominant(w)
    mags = [abs(x) for x in w]
    perms = factorial(4)
    for m in set(mags):
        perms //= factorial(mags.count(m))
    nonzero = sum(1 for m in mags if m)
    signs = 2**nonzero if nonzero < 4 else 8
    return perms * signs


@lru_cache(maxsize=None)
def weyl_group() -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """All 192 elements as (permutation, signs) with an even number of sign flips."""
    elements = []
    for perm in permutations(range(4)):
        for signs in product((1, -1), repeat=4):
            if signs.count(-1) % 2 == 0:
                elements.append((perm, signs))
    return tuple(elements)


def act(g, w: Weight) -> Weight:
    """Apply the signed permutation ``g = (perm, signs)``: coordinate i goes to slot perm[i]."""
    perm, signs = g
    out = [0, 0, 0, 0]
    for i in range(4):
        out[perm[i]] = signs[i] * w[i]
    return tuple(out)


def reflect(w: Weight, i: int) -> Weight:
    """Simple reflection s_i (i = 0..3) in the i-th simple root."""
    alpha = SIMPLE_ROOTS[i]
    pairing = (w[0] * alpha[0] + w[1] * alpha[1] + w[2] * alpha[2] + w[3] * alpha[3]) // 4
    return tuple(w[j] - pairing * alpha[j] for j in range(4))


@lru_cache(maxsize=None)
def orbit(w: Weight) -> tuple[Weight, ...]:
    """Sorted list of the distinct weights in the Weyl orbit of ``w``."""
    return tuple(sorted({act(g, w) for g in weyl_group()}))


def fundamental_coordinates(w: Weight) -> tuple[int, int, int, int]:
    """Coefficients n_i with w = sum n_i omega_i (the pairings with simple coroots)."""
    return tuple(
        (w[0] * a[0] + w[1] * a[1] + w[2] * a[2] + w[3] * a[3]) // 4 for a in SIMPLE_ROOTS
    )


def from_fundamental(n: Sequence[int]) -> Weight:
    out = [0, 0, 0, 0]
    for ni, om in zip(n, FUNDAMENTAL_WEIGHTS):
        for j in range(4):
            out[j] += ni * om[j]
    return tuple(out)


def simple_root_coordinates(w: Weight) -> tuple[Fraction, ...]:
    return tuple(inner(w, om) for om in FUNDAMENTAL_WEIGHTS)


def dominates(high: Weight, low: Weight) -> bool:
    """True when high - low is a non-negative integer combination of simple roots."""
    diff = tuple(h - l for h, l in zip(high, low))
    coeffs = simple_root_coordinates(diff)
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


def _height_key(w: Weight):
    return (sum(a * b for a, b in zip(w, RHO)), w)


@lru_cache(maxsize=None)
def product_table(lam: Weight, mu: Weight) -> tuple[tuple[Weight, int], ...]:
    """Structure constants S(lam) S(mu) = sum c_nu S(nu) for dominant lam, mu.

    Uses S(lam) S(mu) = sum over alpha in W.lam of |W.mu| / |W.(alpha+mu)| S(dom(alpha+mu)).
    """
    if orbit_size(lam) > orbit_size(mu):
        return product_table(mu, lam)
    size_mu = orbit_size(mu)
    acc: dict[Weight, Fraction] = {}
    for alpha in orbit(lam):
        nu = dominant(add(alpha, mu))
        acc[nu] = acc.get(nu, 0) + Fraction(size_mu, orbit_size(nu))
    out = []
    for nu, c in sorted(acc.items()):
        if c.denominator != 1:
            raise ArithmeticError("non-integral orbit-sum structure constant")
        out.append((nu, int(c)))
    return tuple(out)


class GroupAlgebraElement:
    """Finite combination sum c_lambda e^lambda with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, Fraction] = {}
        for w, c in items:
            w = tuple(w)
            if len(w) != 4 or len({x % 2 for x in w}) != 1:
                raise ValueError(f"{w} is not a weight in doubled coordinates")
            acc[w] = acc.get(w, 0) + Fraction(c)
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def exp(cls, w: Weight, coeff=1) -> "GroupAlgebraElement":
        return cls({w: coeff})

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return GroupAlgebraElement(acc)

    def __neg__(self):
        return GroupAlgebraElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupAlgebraElement({w: c * other for w, c in self.terms.items()})
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        acc: dict[Weight, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                w = add(a, b)
                acc[w] = acc.get(w, 0) + ca * cb
        return GroupAlgebraElement(acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Invariant):
            other = other.to_group_algebra()
        return isinstance(other, GroupAlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def act(self, g) -> "GroupAlgebraElement":
        return GroupAlgebraElement({act(g, w): c for w, c in self.terms.items()})

    def reflect(self, i: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement({reflect(w, i): c for w, c in self.terms.items()})

    def is_invariant(self) -> bool:
        return all(self.reflect(i) == self for i in range(4))

    def laplacian(self) -> "GroupAlgebraElement":
        """e^lambda -> |lambda|^2 e^lambda."""
        return GroupAlgebraElement(
            {w: c * Fraction(norm2_quarter(w), 4) for w, c in self.terms.items()}
        )

    def evaluate_at_zero(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def to_invariant(self) -> "Invariant":
        if not self.is_invariant():
            raise ValueError("element is not Weyl-invariant")
        return Invariant({w: c for w, c in self.terms.items() if is_dominant(w)})

    def to_json(self) -> list[dict]:
        return [
            {"coords": [str(x) for x in coordinates(w)], "coeff": str(c)}
            for w, c in sorted(self.terms.items(), key=lambda t: coordinates(t[0]))
        ]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*e^({','.join(str(x) for x in coordinates(w))})"
            for w, c in sorted(self.terms.items())
        )


class Invariant:
    """Weyl-invariant element of Q[P] in the orbit-sum basis {S(lambda) : lambda dominant}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, Fraction] = {}
        for w, c in items:
            w = tuple(w)
            if not is_dominant(w):
                raise ValueError(f"{w} is not dominant")
            acc[w] = acc.get(w, 0) + Fraction(c)
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def orbit_sum(cls, w: Weight, coeff=1) -> "Invariant":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "Invariant":
        return cls({ZERO: 1})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Invariant({ZERO: other})
        if not isinstance(other, Invariant):
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return Invariant(acc)

    __radd__ = __add__

    def __neg__(self):
        return Invariant({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Invariant({w: c * other for w, c in self.terms.items()})
        if not isinstance(other, Invariant):
            return NotImplemented
        acc: dict[Weight, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                cab = ca * cb
                for nu, k in product_table(a, b):
                    acc[nu] = acc.get(nu, 0) + cab * k
        return Invariant(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Invariant.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Invariant({ZERO: other})
        if isinstance(other, GroupAlgebraElement):
            return self.to_group_algebra() == other
        return isinstance(other, Invariant) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def laplacian(self) -> "Invariant":
        return Invariant({w: c * Fraction(norm2_quarter(w), 4) for w, c in self.terms.items()})

    def evaluate_at_zero(self) -> Fraction:
        return sum((c * orbit_size(w) for w, c in self.terms.items()), Fraction(0))

    def to_group_algebra(self) -> GroupAlgebraElement:
        acc: dict[Weight, Fraction] = {}
        for w, c in self.terms.items():
            for v in orbit(w):
                acc[v] = c
        return GroupAlgebraElement(acc)

    def to_json(self) -> list[dict]:
        return self.to_group_algebra().to_json()

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*S({','.join(str(x) for x in coordinates(w))})"
            for w, c in sorted(self.terms.items(), key=_height_key)
        )


def orbit_sum(w) -> GroupAlgebraElement:
    """S(lambda) expanded in exponentials; ``w`` is a dominant weight in doubled coordinates."""
    w = tuple(w)
    if not is_dominant(w):
        raise ValueError(f"{w} is not dominant")
    return Invariant.orbit_sum(w).to_group_algebra()


@lru_cache(maxsize=None)
def _fundamental_monomial(n: tuple[int, int, int, int]) -> Invariant:
    result = Invariant.one()
    for i, k in enumerate(n):
        base = Invariant.orbit_sum(FUNDAMENTAL_WEIGHTS[i])
        for _ in range(k):
            result = result * base
    return result


def monomial_to_orbit(poly: Mapping[tuple[int, int, int, int], object]) -> Invariant:
    """Expand a polynomial in S(omega_1), ..., S(omega_4) into orbit sums."""
    result = Invariant()
    for n, c in poly.items():
        result = result + _fundamental_monomial(tuple(n)) * Fraction(c)
    return result


def orbit_to_monomial(x) -> dict[tuple[int, int, int, int], Fraction]:
    """Write an invariant element as a polynomial in the fundamental orbit sums.

    The leading orbit sum of prod S(omega_i)^n_i is S(sum n_i omega_i) with
    coefficient one, so peeling off the highest weight terminates.
    """
    if isinstance(x, GroupAlgebraElement):
        x = x.to_invariant()
    remainder = dict(x.terms)
    poly: dict[tuple[int, int, int, int], Fraction] = {}
    while remainder:
        top = max(remainder, key=_height_key)
        c = remainder[top]
        n = fundamental_coordinates(top)
        poly[n] = poly.get(n, 0) + c
        for w, k in _fundamental_monomial(n).terms.items():
            remainder[w] = remainder.get(w, 0) - c * k
            if not remainder[w]:
                del remainder[w]
    return {n: c for n, c in sorted(poly.items()) if c}


def change_basis(x, direction: str):
    """Convert between orbit-sum form and fundamental-character polynomial form.

    ``direction`` is ``"orbit->monomial"`` or ``"monomial->orbit"``.
    """
    if direction == "orbit->monomial":
        return orbit_to_monomial(x)
    if direction == "monomial->orbit":
        return monomial_to_orbit(x)
    raise ValueError(f"unknown direction {direction!r}")
