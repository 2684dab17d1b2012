"""Exact sparse Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Sequence


class InconsistentSystemError(ValueError):
    """The target is not in the span of the columns."""


class UnderdeterminedSystemError(ValueError):
    """The columns are linearly dependent on the available rows."""


def solve_columns(
    columns: Sequence[Mapping[Hashable, Fraction]], target: Mapping[Hashable, Fraction]
) -> list[Fraction]:
    """Solve sum_j x_j columns[j] = target for a unique rational vector x.

    Each column and the target are sparse vectors indexed by arbitrary row keys.
    """
    n = len(columns)
    rows: dict[Hashable, dict[int, Fraction]] = {}
    for j, col in enumerate(columns):
        for key, v in col.items():
            if v:
                rows.setdefault(key, {})[j] = Fraction(v)
    for key in target:
        rows.setdefault(key, {})
    pivots: dict[int, tuple[dict[int, Fraction], Fraction]] = {}
    for key in sorted(rows, key=repr):
        row = dict(rows[key])
        rhs = Fraction(target.get(key, 0))
        for col in [c for c in row if c in pivots]:
            f = row.get(col)
            if not f:
                continue
            prow, prhs = pivots[col]
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            rhs -= f * prhs
        if not row:
            if rhs:
                raise InconsistentSystemError(f"no solution: residual {rhs} at row {key!r}")
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {c: v * inv for c, v in row.items()}
        rhs *= inv
        for col, (prow, prhs) in list(pivots.items()):
            f = prow.get(p)
            if f:
                for c, v in row.items():
                    nv = prow.get(c, 0) - f * v
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
                pivots[col] = (prow, prhs - f * rhs)
        pivots[p] = (row, rhs)
    if len(pivots) < n:
        free = sorted(set(range(n)) - set(pivots))
        raise UnderdeterminedSystemError(f"columns {free} are not determined by the data")
    return [pivots[j][1] for j in range(n)]


def mat_mul(a, b):
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def transpose(a):
    return [list(r) for r in zip(*a)]


def mat_inverse(a):
    """Inverse of a square rational matrix by Gauss-Jordan."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]
