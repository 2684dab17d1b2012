"""Command-line front end: ``d4flat {expand,verify,table,export} TARGET``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import frobenius, jacobi, modforms
from .jacobi import JacobiElement
from .polynomial import Poly
from .qseries import NAMED_SERIES, PuiseuxSeries, named_series, to_grid
from .suites import KZ_WEIGHTS, SUITES, run_suite
from .weyl import coordinates

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN = 0, 1, 2


class UnknownTarget(KeyError):
    pass


def parse_order(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid order {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError("order must be positive")
    try:
        to_grid(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    return value


# -- the registry of expandable objects -------------------------------------


def _normalized(order, which):
    return modforms.normalized_characters(order)[which]


def _expandable(target: str, order: Fraction, k: Fraction):
    if target in NAMED_SERIES:
        return named_series(target, order)
    scalars = {
        "X0": lambda: _normalized(order, 0),
        "X1": lambda: _normalized(order, 1),
        "f0": lambda: frobenius.potential_coefficients(order)[0],
        "f1": lambda: frobenius.potential_coefficients(order)[1],
        "f2": lambda: frobenius.potential_coefficients(order)[2],
        "kz1": lambda: modforms.kz_solve(k, 1, order),
        "kz2": lambda: modforms.kz_solve(k, 2, order),
        "potential": lambda: frobenius.potential(order),
        "u4": lambda: frobenius.u4_from_s(order),
    }
    if target in scalars:
        return scalars[target]()
    if len(target) == 4 and target.startswith("chi") and target[3] in "0134":
        return jacobi.character(int(target[3]), order)
    if len(target) == 2 and target[1] in "01234":
        i = int(target[1])
        if target[0] == "s":
            return jacobi.generator(i, order)
        if target[0] == "t":
            return frobenius.s_tilde(order)[i]
        if target[0] == "b":
            return frobenius.flat_coordinates(order)[i]
    raise UnknownTarget(target)


EXPAND_TARGETS = (
    sorted(NAMED_SERIES)
    + ["X0", "X1", "f0", "f1", "f2", "kz1", "kz2", "potential", "u4"]
    + [f"chi{i}" for i in (0, 1, 3, 4)]
    + [f"{p}{i}" for p in "stb" for i in range(5)]
)


# -- rendering ----------------------------------------------------------------


def _element_json(el: JacobiElement) -> dict:
    return {
        "weight": str(el.weight),
        "index": el.index,
        "terms": [
            {
                "exponent": str(Fraction(e, 24)),
                "orbit_sums": [
                    {"dominant": [str(x) for x in coordinates(w)], "coeff": str(c)}
                    for w, c in sorted(inner.items())
                ],
            }
            for e, inner in el.raw_items()
        ],
        "trunc": None if el.trunc is None else str(el.trunc),
    }


def _q_power(e: Fraction) -> str:
    return f"q^{e}" if e.denominator == 1 and e >= 0 else f"q^{{{e}}}"


def _element_text(el: JacobiElement) -> str:
    lines = [f"weight {el.weight}, index {el.index}"]
    for e, inner in el.raw_items():
        body = " + ".join(
            f"{c}*S({','.join(str(x) for x in coordinates(w))})" for w, c in sorted(inner.items())
        ).replace("+ -", "- ")
        lines.append(f"{_q_power(Fraction(e, 24))}: {body}")
    if el.trunc is not None:
        lines.append(f"O({_q_power(el.trunc)})")
    return "\n".join(lines)


def _poly_json(p: Poly) -> list[dict]:
    out = []
    for e, c in sorted(p.terms.items()):
        value = c.to_json() if isinstance(c, PuiseuxSeries) else str(c)
        out.append({"monomial": p.monomial_str(e), "coeff": value})
    return out


def _series_csv(s: PuiseuxSeries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["exponent_num", "exponent_den", "coeff_num", "coeff_den"])
    writer.writerows(s.csv_rows())
    return buf.getvalue().rstrip("\n")


def render(obj, fmt: str) -> str:
    if isinstance(obj, PuiseuxSeries):
        if fmt == "json":
            return json.dumps(obj.to_json(), indent=2)
        if fmt == "csv":
            return _series_csv(obj)
        return repr(obj)
    if fmt == "csv":
        raise ValueError("csv output is only available for q-series")
    if isinstance(obj, JacobiElement):
        return json.dumps(_element_json(obj), indent=2) if fmt == "json" else _element_text(obj)
    if isinstance(obj, Poly):
        return json.dumps(_poly_json(obj), indent=2) if fmt == "json" else repr(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")


# -- tables ---------------------------------------------------------------------


def _matrix_text(rows, labels) -> list[str]:
    cells = [[str(x) for x in row] for row in rows]
    width = max(len(c) for row in cells for c in row + [str(l) for l in labels])
    head = " " * (width + 1) + " ".join(f"{l:>{width}}" for l in labels)
    return [head] + [f"{l:>{width}} " + " ".join(f"{c:>{width}}" for c in row) for l, row in zip(labels, cells)]


def table(target: str, order: Fraction, fmt: str) -> tuple[str, int]:
    if fmt == "csv":
        raise ValueError("tables are rendered as text or json")
    if target == "j0":
        try:
            mat = frobenius.j0_matrix(order)
        except ArithmeticError as exc:
            return f"FAIL {exc}", EXIT_FAIL
        ok = mat == [[Fraction(x) for x in row] for row in frobenius.J0_EXPECTED]
        if fmt == "json":
            text = json.dumps({"indices": list(frobenius.INDICES), "matrix": [[str(x) for x in r] for r in mat]}, indent=2)
        else:
            text = "\n".join(_matrix_text(mat, frobenius.INDICES))
        return text, EXIT_OK if ok else EXIT_FAIL
    if target == "j1":
        got = frobenius.j1_table(order)
        want = frobenius.j1_expected()
        ok = all(got[key] == want[key] for key in want)
        if fmt == "json":
            text = json.dumps({f"{i},{j}": repr(got[(i, j)]) for i, j in sorted(got)}, indent=2)
        else:
            text = "\n".join(f"({i},{j}): {got[(i, j)]!r}" for i, j in sorted(got))
        return text, EXIT_OK if ok else EXIT_FAIL
    if target == "duality":
        entries, ok = {}, True
        for k in KZ_WEIGHTS:
            checks = modforms.duality_check(k, order)
            ok = ok and all(c.passed for c in checks)
            entries[str(k)] = [[str(x) for x in row] for row in modforms.duality_expected(k)]
            if not all(c.passed for c in checks):
                entries[str(k)] = {"expected": entries[str(k)], "failures": [c.to_json() for c in checks if not c.passed]}
        if fmt == "json":
            text = json.dumps(entries, indent=2)
        else:
            lines = []
            for k, mat in entries.items():
                if isinstance(mat, dict):
                    lines.append(f"k={k}: FAIL {json.dumps(mat['failures'], sort_keys=True)}")
                else:
                    lines.append(f"k={k}: [[{mat[0][0]}, {mat[0][1]}], [{mat[1][0]}, {mat[1][1]}]]")
            text = "\n".join(lines)
        return text, EXIT_OK if ok else EXIT_FAIL
    raise UnknownTarget(target)


# -- verify -----------------------------------------------------------------------


def verify(target: str, order: Fraction, fmt: str) -> tuple[str, int]:
    if target != "all" and target not in SUITES:
        raise UnknownTarget(target)
    reports = run_suite(target, order)
    ok = all(r.passed for r in reports)
    if fmt == "json":
        text = json.dumps([r.to_json(detailed=True) for r in reports], indent=2)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "check", "order", "status", "first_failure"])
        for r in reports:
            for c in r.checks:
                writer.writerow([r.name, c.name, str(c.order), c.status, json.dumps(c.first_failure, sort_keys=True) if c.first_failure else ""])
        text = buf.getvalue().rstrip("\n")
    else:
        lines = []
        for r in reports:
            prefix = f"[{r.name}] " if len(reports) > 1 else ""
            lines.extend(prefix + c.line() for c in r.checks)
        total = sum(len(r.checks) for r in reports)
        passed = sum(c.passed for r in reports for c in r.checks)
        lines.append(f"summary: {passed}/{total} checks passed at order {order}")
        text = "\n".join(lines)
    return text, EXIT_OK if ok else EXIT_FAIL


# -- entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="d4flat", description="Exact q-series checks for the D4 flat structure.")
    parser.add_argument("verb", choices=("expand", "verify", "table", "export"))
    parser.add_argument("target")
    parser.add_argument("--order", type=parse_order, default=Fraction(4), help='"N" or "N/24" (default 4)')
    parser.add_argument("--format", choices=("text", "json", "csv"), default=None)
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument("--k", type=Fraction, default=Fraction(2), help="weight for the kz1/kz2 targets")
    return parser


def run(argv=None) -> tuple[str, int]:
    args = build_parser().parse_args(argv)
    fmt = args.format or ("json" if args.verb == "export" else "text")
    try:
        if args.verb in ("expand", "export"):
            text, status = render(_expandable(args.target, args.order, args.k), fmt), EXIT_OK
        elif args.verb == "verify":
            text, status = verify(args.target, args.order, fmt)
        else:
            text, status = table(args.target, args.order, fmt)
    except UnknownTarget as exc:
        return f"unknown target {exc.args[0]!r}", EXIT_UNKNOWN
    return text, status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    text, status = run(argv)
    if status == EXIT_UNKNOWN:
        print(text, file=sys.stderr)
        return status
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
