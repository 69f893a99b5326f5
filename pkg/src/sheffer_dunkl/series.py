"""Truncated formal power series in ``t`` with exact rational coefficients.

A :class:`Series` of order ``N`` stores the coefficients of ``t**0 .. t**N``;
every operation states the order of its result, which is never larger than
the orders of its inputs.
"""
from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError, NotInvertibleError
from .rational import DunklParam, RationalLike, as_nu, format_rational, gamma_factorial, to_rational

ORDER_ENV = "SHEFFER_DUNKL_ORDER"
DEFAULT_ORDER = 16

KERNEL_KINDS = ("E", "I", "G", "I_shift")


def default_order() -> int:
    """Global truncation order, overridable through ``$SHEFFER_DUNKL_ORDER``."""
    raw = os.environ.get(ORDER_ENV)
    if raw is None or raw == "":
        return DEFAULT_ORDER
    order = int(raw)
    if order < 0:
        raise DomainError(f"{ORDER_ENV} must be non-negative, got {order}")
    return order


class Series:
    """Formal power series ``sum coeffs[n] t**n`` known modulo ``t**(order+1)``."""

    __slots__ = ("coeffs", "order", "nu")

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None,
                 nu: Union[DunklParam, RationalLike] = Fraction(-1, 2)):
        cs = [to_rational(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise DomainError("series order must be non-negative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order = order
        self.nu = as_nu(nu)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: RationalLike, order: int, nu) -> "Series":
        return cls([c], order, nu)

    @classmethod
    def identity(cls, order: int, nu) -> "Series":
        """The series ``t``."""
        return cls([0, 1], order, nu)

    # -- queries ------------------------------------------------------------

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    @property
    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    @property
    def is_delta(self) -> bool:
        return self.coeffs[0] == 0 and self.order >= 1 and self.coeffs[1] != 0

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise DomainError(f"cannot raise truncation order {self.order} to {order}")
        return Series(self.coeffs[: order + 1], order, self.nu)

    def __eq__(self, other):
        # equal up to the smaller of the two orders
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.nu == other.nu and self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def __repr__(self):
        terms = ", ".join(format_rational(c) for c in self.coeffs)
        return f"Series([{terms}], order={self.order}, nu={self.nu})"

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "Series"):
        if self.nu != other.nu:
            raise DomainError(f"series carry different nu ({self.nu} vs {other.nu})")

    def __add__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(to_rational(other), self.order, self.nu)
        self._check(other)
        n = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n, self.nu)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.nu)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_multiply(self, other)
        c = to_rational(other)
        return Series([c * a for a in self.coeffs], self.order, self.nu)

    __rmul__ = __mul__

    def __call__(self, inner: "Series") -> "Series":
        return series_compose(self, inner)

    def to_dict(self) -> dict:
        return {
            "nu": format_rational(self.nu.nu),
            "order": self.order,
            "coeffs": [format_rational(c) for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Series":
        return cls(data["coeffs"], data["order"], data["nu"])


def _mul_coeffs(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: n + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def series_multiply(a: Series, b: Series) -> Series:
    """Cauchy product, truncated at ``min(a.order, b.order)``."""
    a._check(b)
    n = min(a.order, b.order)
    return Series(_mul_coeffs(a.coeffs, b.coeffs, n), n, a.nu)


def series_reciprocal(a: Series) -> Series:
    """The series ``r`` with ``a * r = 1`` to the order of ``a``."""
    if not a.is_unit:
        raise NotInvertibleError("series with zero constant term has no reciprocal")
    n = a.order
    inv0 = 1 / a.coeffs[0]
    r = [inv0]
    for k in range(1, n + 1):
        acc = sum((a.coeffs[j] * r[k - j] for j in range(1, k + 1) if a.coeffs[j]), Fraction(0))
        r.append(-acc * inv0)
    return Series(r, n, a.nu)


def series_compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(t))`` by Horner's rule; ``inner`` must have zero constant term."""
    outer._check(inner)
    if inner.coeffs[0] != 0:
        raise DomainError("composition needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    acc = [Fraction(0)] * (n + 1)
    for c in reversed(outer.coeffs[: n + 1]):
        acc = _mul_coeffs(acc, inner.coeffs, n)
        acc[0] += c
    return Series(acc, n, outer.nu)


def series_reverse(f: Series) -> Series:
    """Compositional inverse of a delta series, by Lagrange inversion.

    Uses ``[t^n] fbar = (1/n) [t^(n-1)] (t / f(t))**n``.
    """
    if not f.is_delta:
        raise NotInvertibleError("reversion needs f(0) = 0 and f'(0) != 0")
    n = f.order
    # t / f(t) as a unit series known to order n - 1
    shifted = Series(f.coeffs[1:], n - 1, f.nu)
    h = series_reciprocal(shifted).coeffs
    out = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for k in range(1, n + 1):
        power = _mul_coeffs(power, h, n - 1)
        out[k] = power[k - 1] / k
    return Series(out, n, f.nu)


def dunkl_kernel_series(kind: str, nu, order: int | None = None) -> Series:
    """Dunkl kernel ``E_nu`` or its even/odd parts as a truncated series.

    ``E``: ``t^n / gamma_n``; ``I``: even terms ``t^(2n) / gamma_(2n)``;
    ``G``: ``t * I_{nu+1}(t)``, i.e. ``t^(2n+1) / gamma_(2n, nu+1)``, which equals
    ``2(nu+1) t^(2n+1) / gamma_(2n+1, nu)``; ``I_shift``: ``I`` with nu replaced by nu + 1.
    The result is always tagged with the given ``nu``.
    """
    nu = as_nu(nu)
    if order is None:
        order = default_order()
    cs = [Fraction(0)] * (order + 1)
    if kind == "E":
        for n in range(order + 1):
            cs[n] = 1 / gamma_factorial(n, nu)
    elif kind in ("I", "I_shift"):
        table_nu = nu.shifted if kind == "I_shift" else nu
        for n in range(0, order + 1, 2):
            cs[n] = 1 / gamma_factorial(n, table_nu)
    elif kind == "G":
        for n in range(1, order + 1, 2):
            cs[n] = 1 / gamma_factorial(n - 1, nu.shifted)
    else:
        raise DomainError(f"unknown kernel kind {kind!r}; expected one of {KERNEL_KINDS}")
    return Series(cs, order, nu)
