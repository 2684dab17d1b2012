"""Sparse multivariate polynomials with rational or q-series coefficients.

Coefficients are either ``Fraction`` or :class:`PuiseuxSeries`.  A truncated
series that happens to vanish is kept, so that its truncation bound survives
into residual checks; only exact zeros are dropped.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .qseries import PuiseuxSeries, TruncationError, order_to_grid


def _null(c) -> bool:
    if isinstance(c, PuiseuxSeries):
        return c.is_zero() and c.is_exact
    return not c


def _coerce(c):
    if isinstance(c, PuiseuxSeries):
        return c
    return Fraction(c)


def _mul_coeff(a, b):
    if isinstance(a, PuiseuxSeries) or isinstance(b, PuiseuxSeries):
        if not isinstance(a, PuiseuxSeries):
            return b.scale(a)
        if not isinstance(b, PuiseuxSeries):
            return a.scale(b)
    return a * b


def _add_coeff(a, b):
    if isinstance(b, PuiseuxSeries) and not isinstance(a, PuiseuxSeries):
        return b + a
    return a + b


class Poly:
    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.names = tuple(names)
        self.terms: dict[tuple, object] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(self.names):
                raise ValueError("exponent length does not match the variables")
            c = _coerce(c)
            if e in self.terms:
                c = _add_coeff(self.terms[e], c)
            self.terms[e] = c
        self.terms = {e: c for e, c in self.terms.items() if not _null(c)}

    @classmethod
    def _raw(cls, names, terms):
        obj = object.__new__(cls)
        obj.names = names
        obj.terms = terms
        return obj

    @classmethod
    def variable(cls, names, i: int):
        e = [0] * len(names)
        e[i] = 1
        return cls(names, {tuple(e): Fraction(1)})

    @classmethod
    def constant(cls, names, c):
        return cls(names, {(0,) * len(names): c})

    @property
    def nvars(self) -> int:
        return len(self.names)

    def _like(self, terms):
        return type(self)._raw(self.names, {e: c for e, c in terms.items() if not _null(c)})

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.names != self.names:
                raise ValueError("polynomials over different variables")
            return other
        if isinstance(other, (int, Fraction, PuiseuxSeries)):
            return type(self).constant(self.names, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = _add_coeff(terms[e], c) if e in terms else c
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PuiseuxSeries)):
            return self._like({e: _mul_coeff(c, other) for e, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple, object] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = _mul_coeff(ca, cb)
                terms[e] = _add_coeff(terms[e], c) if e in terms else c
        return self._like(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = type(self).constant(self.names, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms)))

    def diff(self, i: int):
        """Formal partial derivative in variable ``i``."""
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                terms[tuple(f)] = _mul_coeff(c, Fraction(e[i]))
        return self._like(terms)

    def map_coefficients(self, fn: Callable):
        return self._like({e: fn(c) for e, c in self.terms.items()})

    def coefficient(self, exponent: Sequence[int]):
        return self.terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, order):
        return self.map_coefficients(
            lambda c: c.truncate(order) if isinstance(c, PuiseuxSeries) else c
        )

    def first_nonzero(self, order):
        """First (monomial, exponent, coefficient) that is nonzero below ``order``, or None.

        Raises TruncationError when some coefficient is not known to ``order``.
        """
        t = order_to_grid(order)
        for e in sorted(self.terms):
            c = self.terms[e]
            if isinstance(c, PuiseuxSeries):
                if c.trunc24 is not None and c.trunc24 < t:
                    raise TruncationError(f"coefficient of {self.monomial_str(e)} known only below q^{c.trunc}")
                for k, v in c.raw_items():
                    if k < t:
                        return e, Fraction(k, 24), v
                    break
            elif c:
                return e, Fraction(0), c
        return None

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def degree(self, weights: Sequence | None = None) -> set:
        weights = weights or [1] * self.nvars
        return {sum(Fraction(w) * k for w, k in zip(weights, e)) for e in self.terms}

    def evaluate(self, values: Sequence, one):
        """Substitute ``values`` for the variables; ``one`` is the unit of the target ring."""
        cache: dict[tuple[int, int], object] = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = values[i] if k == 1 else power(i, k - 1) * values[i]
            return cache[(i, k)]

        total = None
        for e, c in sorted(self.terms.items()):
            term = None
            for i, k in enumerate(e):
                if k:
                    if values[i] is None:
                        raise ValueError(f"variable {self.names[i]} has no value")
                    p = power(i, k)
                    term = p if term is None else term * p
            if term is None:
                term = one
            term = term * c
            total = term if total is None else total + term
        return total if total is not None else one * 0

    def monomial_str(self, e) -> str:
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = self.monomial_str(e)
            if isinstance(c, PuiseuxSeries):
                out.append(f"({c})*{mono}" if mono != "1" else f"({c})")
            elif mono == "1":
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")
