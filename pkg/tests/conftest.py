from fractions import Fraction

from hypothesis import strategies as st

from d4flat.qseries import PuiseuxSeries

F = Fraction


def brute_eta_power(n, terms):
    """Coefficients of prod_{k>=1} (1 - q^k)^n for q^0..q^(terms-1), by repeated convolution."""
    coeffs = [F(1)] + [F(0)] * (terms - 1)
    for k in range(1, terms):
        factor = [F(0)] * terms
        factor[0], factor[k] = F(1), F(-1)
        if n < 0:
            # 1/(1 - q^k) = sum q^(jk)
            factor = [F(1) if i % k == 0 else F(0) for i in range(terms)]
        for _ in range(abs(n)):
            coeffs = [sum(coeffs[j] * factor[i - j] for j in range(i + 1)) for i in range(terms)]
    return coeffs


def agree(x, y):
    """Equal on every coefficient both series determine.

    Cancellation can raise a valuation and with it the truncation of a
    product, so two routes to the same value may carry different O-terms.
    """
    bounds = [t for t in (x.trunc, y.trunc) if t is not None]
    if not bounds:
        return x == y
    return x.first_difference(y, min(bounds)) is None


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, max_terms=5, trunc_24=(48, 96)):
    """Random truncated series on the 1/24 grid with exponents in [0, 2)."""
    trunc = draw(st.integers(*trunc_24))
    keys = draw(st.lists(st.integers(0, 47), max_size=max_terms, unique=True))
    coeffs = {F(k, 24): draw(small_fractions) for k in keys}
    return PuiseuxSeries(coeffs, F(trunc, 24))


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
