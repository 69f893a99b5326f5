from fractions import Fraction

import pytest
from hypothesis import strategies as st

from sheffer_dunkl import Poly

TEST_NUS = [Fraction(-1, 2), Fraction(0), Fraction(1, 4), Fraction(3, 2)]


def pochhammer(a, k):
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def gamma_closed_form(n, nu):
    """gamma_{n,nu} straight from the parity-split Pochhammer formula."""
    nu = Fraction(nu)
    k, odd = divmod(n, 2)
    fact = 1
    for j in range(2, k + 1):
        fact *= j
    if odd:
        return Fraction(2) ** (2 * k + 1) * fact * pochhammer(nu + 1, k + 1)
    return Fraction(4) ** k * fact * pochhammer(nu + 1, k)


def dunkl_by_definition(p: Poly) -> Poly:
    """d/dx p + (2nu+1)/2 (p(x) - p(-x)) / x, built from polynomial operations."""
    nu = p.nu.nu
    reflected = Poly([c * (-1) ** k for k, c in enumerate(p.coeffs)], p.nu)
    odd_part = p - reflected
    assert odd_part[0] == 0
    quotient = Poly(odd_part.coeffs[1:], p.nu)
    return p.derivative() + quotient * ((2 * nu + 1) / 2)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
nus = st.sampled_from(TEST_NUS)


@st.composite
def polys(draw, nu=None, max_degree=12):
    nu = draw(nus) if nu is None else nu
    coeffs = draw(st.lists(rationals, min_size=0, max_size=max_degree + 1))
    return Poly(coeffs, nu)


@pytest.fixture(params=TEST_NUS, ids=str)
def nu(request):
    return request.param


# -- acceptance bookkeeping ----------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
