"""Verification reports: compare two truncated objects up to a stated order."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .qseries import PuiseuxSeries, TruncationError


@dataclass
class Check:
    """Outcome of one identity check."""

    name: str
    order: Fraction
    passed: bool
    first_failure: dict | None = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": str(self.order),
            "status": self.status,
            "first_failure": self.first_failure,
        }

    def line(self) -> str:
        text = f"{self.status.upper():4} {self.name} (order {self.order})"
        if self.first_failure:
            text += " " + json.dumps(self.first_failure, sort_keys=True)
        return text


def _fmt_weight(w) -> list[str]:
    return [str(Fraction(x, 2)) for x in w]


def compare(name: str, got, expected, order) -> Check:
    """Exact comparison of series, Jacobi elements or constants below q^order."""
    from .jacobi import JacobiElement

    order = Fraction(order)
    if isinstance(expected, (int, Fraction)) and isinstance(got, (int, Fraction)):
        ok = Fraction(got) == Fraction(expected)
        failure = None if ok else {"got": str(got), "expected": str(expected)}
        return Check(name, order, ok, failure)
    try:
        if isinstance(got, JacobiElement):
            diff = got.first_difference(expected, order)
            if diff is None:
                return Check(name, order, True)
            e, w, a, b = diff
            return Check(
                name,
                order,
                False,
                {"exponent": str(e), "lattice": _fmt_weight(w), "got": str(a), "expected": str(b)},
            )
        if isinstance(got, PuiseuxSeries):
            if isinstance(expected, (int, Fraction)):
                expected = PuiseuxSeries.constant(expected)
            diff = got.first_difference(expected, order)
            if diff is None:
                return Check(name, order, True)
            e, a, b = diff
            return Check(name, order, False, {"exponent": str(e), "got": str(a), "expected": str(b)})
    except TruncationError as exc:
        return Check(name, order, False, {"reason": str(exc)})
    raise TypeError(f"cannot compare {type(got).__name__}")


def compare_poly(name: str, got, expected, order) -> Check:
    """Coefficientwise comparison of two polynomials with series or rational coefficients."""
    order = Fraction(order)
    try:
        diff = (got - expected).first_nonzero(order)
    except TruncationError as exc:
        return Check(name, order, False, {"reason": str(exc)})
    if diff is None:
        return Check(name, order, True)
    mono, e, c = diff
    return Check(
        name,
        order,
        False,
        {"monomial": got.monomial_str(mono), "exponent": str(e), "residual": str(c)},
    )


@dataclass
class VerificationReport:
    name: str
    order: Fraction
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def first_failure(self) -> dict | None:
        for c in self.checks:
            if not c.passed:
                return {"check": c.name, **(c.first_failure or {})}
        return None

    def extend(self, checks: Iterable[Check]) -> "VerificationReport":
        self.checks.extend(checks)
        return self

    def to_json(self, detailed: bool = False) -> dict:
        out = {
            "name": self.name,
            "order": str(self.order),
            "status": self.status,
            "first_failure": self.first_failure,
        }
        if detailed:
            out["checks"] = [c.to_json() for c in self.checks]
        return out

    def lines(self) -> list[str]:
        head = f"{self.status.upper():4} {self.name} (order {self.order}, {len(self.checks)} checks)"
        return [head] + ["  " + c.line() for c in self.checks]
