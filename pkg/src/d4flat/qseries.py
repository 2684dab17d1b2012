"""Truncated Puiseux series in ``q`` with exact rational coefficients.

Every exponent lies on the grid ``(1/24)Z``.  Internally an exponent is the
integer count of 24ths, so ``q^(1/2)`` is stored under the key ``12``.  A
series carries a truncation bound: coefficients at exponents ``>= trunc`` are
unknown.  ``trunc=None`` marks an exact (finite) series such as a constant.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Mapping

GRID = 24


class TruncationError(ValueError):
    """Raised when a computation would need more precision than is available."""


class OffGridError(ValueError):
    """Raised when an exponent is not a multiple of 1/24."""


def to_grid(exponent) -> int:
    """Exponent (int, Fraction or string) as an integer count of 24ths."""
    f = Fraction(exponent) * GRID
    if f.denominator != 1:
        raise OffGridError(f"exponent {exponent} is not on the 1/24 grid")
    return int(f)


def order_to_grid(order) -> int:
    """Round a truncation order up to the grid (exponents are on the grid anyway)."""
    f = Fraction(order) * GRID
    return -((-f.numerator) // f.denominator)


def _min_trunc(*values):
    finite = [v for v in values if v is not None]
    return min(finite) if finite else None


class PuiseuxSeries:
    __slots__ = ("_c", "_t")

    def __init__(self, coeffs: Mapping | Iterable = (), trunc=None):
        t = None if trunc is None else order_to_grid(trunc)
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, Fraction] = {}
        for e, v in items:
            k = to_grid(e)
            c[k] = c.get(k, 0) + Fraction(v)
        self._c = {k: v for k, v in c.items() if v and (t is None or k < t)}
        self._t = t

    @classmethod
    def _make(cls, c: dict, t) -> "PuiseuxSeries":
        obj = object.__new__(cls)
        obj._c = c
        obj._t = t
        return obj

    @classmethod
    def _clean(cls, c: dict, t) -> "PuiseuxSeries":
        return cls._make({k: v for k, v in c.items() if v and (t is None or k < t)}, t)

    @classmethod
    def constant(cls, value=1) -> "PuiseuxSeries":
        value = Fraction(value)
        return cls._make({0: value} if value else {}, None)

    @classmethod
    def monomial(cls, exponent, coeff=1) -> "PuiseuxSeries":
        coeff = Fraction(coeff)
        return cls._make({to_grid(exponent): coeff} if coeff else {}, None)

    @classmethod
    def zero(cls, trunc=None) -> "PuiseuxSeries":
        return cls._make({}, None if trunc is None else order_to_grid(trunc))

    # -- inspection -----------------------------------------------------
    @property
    def trunc(self) -> Fraction | None:
        return None if self._t is None else Fraction(self._t, GRID)

    @property
    def trunc24(self):
        return self._t

    @property
    def is_exact(self) -> bool:
        return self._t is None

    def is_zero(self) -> bool:
        return not self._c

    def val24(self):
        """Valuation in 24ths; an empty truncated series reports its bound."""
        if self._c:
            return min(self._c)
        return self._t

    @property
    def valuation(self) -> Fraction | None:
        v = self.val24()
        return None if v is None else Fraction(v, GRID)

    def coefficient(self, exponent) -> Fraction:
        k = to_grid(exponent)
        if self._t is not None and k >= self._t:
            raise TruncationError(f"coefficient of q^{exponent} is beyond the truncation")
        return self._c.get(k, Fraction(0))

    def items(self) -> list[tuple[Fraction, Fraction]]:
        return [(Fraction(k, GRID), v) for k, v in sorted(self._c.items())]

    def raw_items(self):
        return sorted(self._c.items())

    def leading(self) -> tuple[Fraction, Fraction]:
        if not self._c:
            raise ValueError("zero series has no leading term")
        k = min(self._c)
        return Fraction(k, GRID), self._c[k]

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, PuiseuxSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PuiseuxSeries.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = _min_trunc(self._t, other._t)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return PuiseuxSeries._clean(c, t)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries._make({k: -v for k, v in self._c.items()}, self._t)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor) -> "PuiseuxSeries":
        factor = Fraction(factor)
        if not factor:
            return PuiseuxSeries._make({}, self._t if self._t is None else self._t)
        return PuiseuxSeries._make({k: v * factor for k, v in self._c.items()}, self._t)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        if (not self._c and self._t is None) or (not other._c and other._t is None):
            return PuiseuxSeries._make({}, None)
        va, vb = self.val24(), other.val24()
        t = _min_trunc(
            None if self._t is None else self._t + vb,
            None if other._t is None else other._t + va,
        )
        c: dict[int, Fraction] = {}
        b_items = sorted(other._c.items())
        for ka, ca in self._c.items():
            for kb, cb in b_items:
                k = ka + kb
                if t is not None and k >= t:
                    break
                c[k] = c.get(k, 0) + ca * cb
        return PuiseuxSeries._clean(c, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def inverse(self, order=None) -> "PuiseuxSeries":
        """Multiplicative inverse.

        An exact series with more than one term has an infinite inverse, so
        ``order`` (absolute truncation of the result) must then be given.
        """
        if not self._c:
            raise ZeroDivisionError("series is zero to its truncation order")
        v = min(self._c)
        lead = self._c[v]
        if len(self._c) == 1 and self._t is None:
            return PuiseuxSeries._make({-v: 1 / lead}, None)
        if self._t is None:
            if order is None:
                raise TruncationError("inverse of an exact multi-term series needs an order")
            rel = order_to_grid(order) + v
        else:
            rel = self._t - v
            if order is not None:
                rel = min(rel, order_to_grid(order) + v)
        u = {k - v: c / lead for k, c in self._c.items() if k != v and k - v < rel}
        step = 0
        for k in u:
            step = gcd(step, k)
        r = {0: Fraction(1)}
        if step:
            u_items = sorted(u.items())
            for n in range(step, rel, step):
                acc = Fraction(0)
                for k, c in u_items:
                    if k > n:
                        break
                    prev = r.get(n - k)
                    if prev:
                        acc -= c * prev
                if acc:
                    r[n] = acc
        inv_lead = 1 / lead
        return PuiseuxSeries._clean({n - v: c * inv_lead for n, c in r.items()}, rel - v)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        if not other._c:
            raise ZeroDivisionError("division by a series that is zero to its order")
        if other._t is None and len(other._c) > 1:
            if self._t is None:
                raise TruncationError("quotient of exact series is infinite; truncate first")
            vb = min(other._c)
            inv = other.inverse(Fraction(self._t - vb - self.val24(), GRID))
            return self * inv
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse().scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        if n < 0:
            return self.inverse() ** (-n)
        result = PuiseuxSeries.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derive(self) -> "PuiseuxSeries":
        """The operator q d/dq."""
        return PuiseuxSeries._make(
            {k: v * Fraction(k, GRID) for k, v in self._c.items() if k}, self._t
        )

    def truncate(self, order) -> "PuiseuxSeries":
        t = _min_trunc(self._t, order_to_grid(order))
        return PuiseuxSeries._clean(self._c, t)

    def shift(self, exponent) -> "PuiseuxSeries":
        k = to_grid(exponent)
        return PuiseuxSeries._make(
            {e + k: v for e, v in self._c.items()}, None if self._t is None else self._t + k
        )

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PuiseuxSeries.constant(other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self._t == other._t and self._c == other._c

    def __hash__(self):
        return hash((self._t, frozenset(self._c.items())))

    def first_difference(self, other: "PuiseuxSeries", order):
        """First exponent below ``order`` where the two series differ, or None.

        Raises TruncationError if either side is not known up to ``order``.
        """
        t = order_to_grid(order)
        for s in (self, other):
            if s._t is not None and s._t < t:
                raise TruncationError(
                    f"series known only below q^{s.trunc}, needed below q^{Fraction(t, GRID)}"
                )
        keys = sorted(k for k in set(self._c) | set(other._c) if k < t)
        for k in keys:
            a, b = self._c.get(k, 0), other._c.get(k, 0)
            if a != b:
                return Fraction(k, GRID), Fraction(a), Fraction(b)
        return None

    # -- presentation ---------------------------------------------------
    def __repr__(self):
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}" if e.denominator == 1 and e > 0 else f"q^{{{e}}}"
            if mono == "":
                term = str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = f"{c}*{mono}"
            parts.append(term)
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        if self._t is not None:
            t = self.trunc
            body += f" + O(q^{t})" if t.denominator == 1 and t > 0 else f" + O(q^{{{t}}})"
        return body

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "num": e.numerator,
                    "den": e.denominator,
                    "coeff_num": c.numerator,
                    "coeff_den": c.denominator,
                }
                for e, c in self.items()
            ],
            "trunc": None if self._t is None else str(self.trunc),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PuiseuxSeries":
        trunc = data.get("trunc")
        return cls(
            [
                (Fraction(t["num"], t["den"]), Fraction(t["coeff_num"], t["coeff_den"]))
                for t in data["terms"]
            ],
            None if trunc is None else Fraction(trunc),
        )

    def csv_rows(self) -> list[tuple[int, int, int, int]]:
        return [(e.numerator, e.denominator, c.numerator, c.denominator) for e, c in self.items()]


# -- named series -------------------------------------------------------


def _divisor_sigma(k: int, n: int) -> int:
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
    return total


def _integer_limit(order) -> int:
    """Number of integer exponents 0, 1, ... lying strictly below ``order``."""
    t = order_to_grid(order)
    return max(0, -((-t) // GRID))


@lru_cache(maxsize=None)
def _eisenstein(k: int, order_24: int) -> PuiseuxSeries:
    factor = {2: -24, 4: 240, 6: -504}[k]
    order = Fraction(order_24, GRID)
    c = {0: Fraction(1)}
    for n in range(1, _integer_limit(order)):
        c[n * GRID] = Fraction(factor * _divisor_sigma(k - 1, n))
    return PuiseuxSeries._clean(c, order_24)


def eisenstein(k: int, order) -> PuiseuxSeries:
    """Normalized Eisenstein series E2, E4 or E6 (constant term 1)."""
    if k not in (2, 4, 6):
        raise ValueError(f"unsupported Eisenstein weight {k}")
    return _eisenstein(k, order_to_grid(order))


@lru_cache(maxsize=None)
def _euler_product(order_24: int) -> PuiseuxSeries:
    # pentagonal number theorem
    c: dict[int, Fraction] = {}
    m = 0
    while True:
        done = True
        for j in ((m, -m) if m else (0,)):
            e = j * (3 * j - 1) // 2
            if e * GRID < order_24:
                c[e * GRID] = Fraction(-1 if j % 2 else 1)
                done = False
        if done and m:
            break
        m += 1
    return PuiseuxSeries._clean(c, order_24)


@lru_cache(maxsize=None)
def _eta_power(n: int, order_24: int) -> PuiseuxSeries:
    rel = order_24 - n
    if rel <= 0:
        return PuiseuxSeries._make({}, order_24)
    p = _euler_product(rel)
    return (p**n).truncate(Fraction(rel, GRID)).shift(Fraction(n, GRID))


def eta_power(n: int, order) -> PuiseuxSeries:
    """eta(q)^n = q^(n/24) prod (1 - q^k)^n, known below q^order."""
    return _eta_power(n, order_to_grid(order))


@lru_cache(maxsize=None)
def _theta(kind: int, order_24: int) -> PuiseuxSeries:
    c: dict[int, Fraction] = {}
    if kind == 2:
        # sum over n of q^((n - 1/2)^2 / 2); doubled index m = 2n - 1 is odd
        m = 1
        while 3 * m * m < order_24:
            c[3 * m * m] = Fraction(2)
            m += 2
    else:
        sign = -1 if kind == 4 else 1
        c[0] = Fraction(1)
        n = 1
        while 12 * n * n < order_24:
            c[12 * n * n] = Fraction(2 * sign**n)
            n += 1
    return PuiseuxSeries._clean(c, order_24)


def theta(kind: int, order) -> PuiseuxSeries:
    """Theta constants theta_2, theta_3, theta_4 in the variable q^(1/2)."""
    if kind not in (2, 3, 4):
        raise ValueError(f"unknown theta constant {kind}")
    return _theta(kind, order_to_grid(order))


def xi(kind: int, order) -> PuiseuxSeries:
    """Logarithmic derivative 2 theta_i' / theta_i."""
    th = theta(kind, Fraction(order) + 1)
    return (th.derive() / th).scale(2).truncate(order)


def eta_log_derivative(order) -> PuiseuxSeries:
    """eta'/eta = E2/24."""
    return eisenstein(2, order).scale(Fraction(1, 24))


def serre_derivative(f: PuiseuxSeries, k) -> PuiseuxSeries:
    """f' - (k/12) E2 f."""
    k = Fraction(k)
    if not k or not f._c:
        return f.derive()
    if f._t is None:
        raise TruncationError("Serre derivative of an exact series needs a truncation")
    e2 = eisenstein(2, Fraction(f._t - f.val24(), GRID))
    return f.derive() - (e2 * f).scale(k / 12)


_NAMED = {
    "E2": lambda o: eisenstein(2, o),
    "E4": lambda o: eisenstein(4, o),
    "E6": lambda o: eisenstein(6, o),
    "eta": lambda o: eta_power(1, o),
    "theta2": lambda o: theta(2, o),
    "theta3": lambda o: theta(3, o),
    "theta4": lambda o: theta(4, o),
    "xi2": lambda o: xi(2, o),
    "xi3": lambda o: xi(3, o),
    "xi4": lambda o: xi(4, o),
}

NAMED_SERIES = tuple(_NAMED)


def named_series(name: str, order) -> PuiseuxSeries:
    try:
        build = _NAMED[name]
    except KeyError:
        raise ValueError(f"unknown series {name!r}; choose from {', '.join(_NAMED)}") from None
    return build(order)
