import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sheffer_dunkl import (
    DomainError,
    NotInvertibleError,
    Series,
    dunkl_kernel_series,
    gamma_factorial,
    series_compose,
    series_multiply,
    series_reciprocal,
    series_reverse,
)
from sheffer_dunkl.series import ORDER_ENV, default_order

from conftest import TEST_NUS, rationals

N = 12
HALF = Fraction(-1, 2)


def S(cs, order=N, nu=HALF):
    return Series(cs, order, nu)


def brute_force_reverse(f: Series) -> Series:
    """Fix one coefficient at a time so that f(g(t)) = t holds through t^k."""
    g = [Fraction(0), 1 / f[1]] + [Fraction(0)] * (f.order - 1)
    for k in range(2, f.order + 1):
        residual = series_compose(f, Series(g, f.order, f.nu))[k]
        g[k] = -residual / f[1]
    return Series(g, f.order, f.nu)


def arcsinh_series(order):
    cs = [Fraction(0)] * (order + 1)
    for n in range((order - 1) // 2 + 1):
        cs[2 * n + 1] = Fraction((-1) ** n * math.factorial(2 * n),
                                 4**n * math.factorial(n) ** 2 * (2 * n + 1))
    return cs


@st.composite
def series(draw, unit=False, delta=False):
    cs = draw(st.lists(rationals, min_size=N + 1, max_size=N + 1))
    if unit and cs[0] == 0:
        cs[0] = Fraction(1)
    if delta:
        cs[0] = Fraction(0)
        if cs[1] == 0:
            cs[1] = Fraction(1)
    return S(cs)


def test_multiply_examples():
    assert S([1, 1]) * S([1, -1]) == S([1, 0, -1])
    nu = Fraction(1, 4)
    lhs = Series.identity(N, nu) * dunkl_kernel_series("I_shift", nu, N)
    assert lhs.truncate(N) == dunkl_kernel_series("G", nu, N)
    one_minus_t = S([1, -1])
    assert one_minus_t * series_reciprocal(one_minus_t) == Series.constant(1, N, HALF)


def test_multiply_order_is_minimum():
    assert (S([1, 1], 3) * S([1, 2], 7)).order == 3


def test_mismatched_nu_rejected():
    with pytest.raises(DomainError):
        S([1]) * Series([1], N, 0)


def test_reciprocal_examples():
    assert series_reciprocal(S([1, -1])) == S([1] * (N + 1))
    assert series_reciprocal(S([1, 0, -1])) == S([1 if k % 2 == 0 else 0 for k in range(N + 1)])
    assert series_reciprocal(S([1])) == S([1])
    with pytest.raises(NotInvertibleError):
        series_reciprocal(S([0, 1]))


def test_compose_examples():
    g = S([3, 1, 4, 1, 5])
    assert series_compose(g, Series.identity(N, HALF)) == g
    assert series_compose(S([1, -1]), S([0, 1, 1])) == S([1, -1, -1])
    with pytest.raises(DomainError):
        series_compose(g, S([1, 1]))


def test_reverse_examples():
    t = Series.identity(N, HALF)
    assert series_reverse(t) == t
    assert series_reverse(S([0, 1, 1])) == S([0, 1, -1, 2, -5, 14, -42, 132, -429, 1430, -4862, 16796, -58786])
    sinh = dunkl_kernel_series("G", HALF, 15)
    rev = series_reverse(sinh)
    assert rev == brute_force_reverse(sinh)
    assert list(rev.coeffs) == arcsinh_series(15)
    assert rev[:6] == (0, 1, 0, Fraction(-1, 6), 0, Fraction(3, 40))
    with pytest.raises(NotInvertibleError):
        series_reverse(S([0, 0, 1]))


@pytest.mark.parametrize("nu", TEST_NUS, ids=str)
def test_reverse_of_G_matches_brute_force(nu):
    G = dunkl_kernel_series("G", nu, 13)
    assert series_reverse(G) == brute_force_reverse(G)


def test_kernel_series_classical():
    assert dunkl_kernel_series("E", HALF, N) == S([Fraction(1, math.factorial(n)) for n in range(N + 1)])
    assert dunkl_kernel_series("I", HALF, N) == S(
        [Fraction(1, math.factorial(n)) if n % 2 == 0 else 0 for n in range(N + 1)])
    assert dunkl_kernel_series("G", HALF, N) == S(
        [Fraction(1, math.factorial(n)) if n % 2 else 0 for n in range(N + 1)])
    with pytest.raises(DomainError):
        dunkl_kernel_series("J", HALF, N)


@pytest.mark.parametrize("nu", TEST_NUS, ids=str)
def test_kernel_even_odd_split(nu):
    E = dunkl_kernel_series("E", nu, N)
    I = dunkl_kernel_series("I", nu, N)
    G = dunkl_kernel_series("G", nu, N)
    assert E == I + G * (1 / (2 * (nu + 1)))
    for n in range(0, N // 2):
        # odd coefficient of G: 1/gamma_{2n,nu+1} = 2(nu+1)/gamma_{2n+1,nu}
        assert G[2 * n + 1] * gamma_factorial(2 * n, nu + 1) == 1
        assert G[2 * n + 1] == 2 * (nu + 1) / gamma_factorial(2 * n + 1, nu)


@settings(max_examples=40, deadline=None)
@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert series_multiply(a, b) == series_multiply(b, a)
    assert series_multiply(series_multiply(a, b), c) == series_multiply(a, series_multiply(b, c))


@settings(max_examples=40, deadline=None)
@given(series(unit=True))
def test_reciprocal_involution(a):
    assert series_reciprocal(series_reciprocal(a)) == a


@settings(max_examples=30, deadline=None)
@given(series(delta=True))
def test_reverse_involution(f):
    fbar = series_reverse(f)
    t = Series.identity(N, HALF)
    assert series_reverse(fbar) == f
    assert series_compose(f, fbar) == t
    assert series_compose(fbar, f) == t


def test_equality_uses_smaller_order():
    assert S([1, 2, 3], 2) == S([1, 2, 3, 4], 5)
    assert S([1, 2, 3], 2) != S([1, 2, 4], 5)


def test_json_form_roundtrip():
    s = Series([1, Fraction(-3, 4), 0], 2, Fraction(1, 4))
    data = s.to_dict()
    assert data == {"nu": "1/4", "order": 2, "coeffs": ["1", "-3/4", "0"]}
    assert Series.from_dict(data) == s


def test_default_order_env(monkeypatch):
    monkeypatch.delenv(ORDER_ENV, raising=False)
    assert default_order() == 16
    monkeypatch.setenv(ORDER_ENV, "9")
    assert default_order() == 9
    assert dunkl_kernel_series("E", 0).order == 9
