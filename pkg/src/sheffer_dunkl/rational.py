"""Exact scalars, the Dunkl parameter and the generalized factorials.

All symbolic code in the package runs over :class:`fractions.Fraction`.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

__all__ = [
    "Rational",
    "DunklParam",
    "GammaTable",
    "as_nu",
    "to_rational",
    "format_rational",
    "gamma_factorial",
    "gamma_ratio",
    "dunkl_binomial",
]


def to_rational(value: RationalLike) -> Fraction:
    """Parse ``value`` into a Fraction; floats are refused to keep results exact."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    if isinstance(value, str):
        value = value.strip().replace("−", "-")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))


@dataclass(frozen=True)
class DunklParam:
    """The parameter ``nu > -1`` of the Dunkl operator."""

    nu: Fraction

    def __post_init__(self):
        nu = to_rational(self.nu)
        if nu <= -1:
            raise DomainError(f"Dunkl parameter must satisfy nu > -1, got {nu}")
        object.__setattr__(self, "nu", nu)

    def __str__(self):
        return format_rational(self.nu)

    @property
    def shifted(self) -> "DunklParam":
        return DunklParam(self.nu + 1)


def as_nu(nu: Union[DunklParam, RationalLike]) -> DunklParam:
    if isinstance(nu, DunklParam):
        return nu
    return DunklParam(to_rational(nu))


class GammaTable:
    """Memoized values of gamma_{n,nu}, grown on demand.

    Writes are serialized by a lock; reads of already computed entries only
    touch an append-only list.
    """

    def __init__(self, nu: DunklParam):
        self.nu = nu
        self.values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def ratio(self, n: int) -> Fraction:
        """gamma_n / gamma_{n-1}: ``n`` for even n, ``n + 2 nu + 1`` for odd n."""
        if n % 2 == 0:
            return Fraction(n)
        return n + 2 * self.nu.nu + 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"gamma index must be non-negative, got {n}")
        values = self.values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self.values) <= n:
                k = len(self.values)
                self.values.append(self.values[-1] * self.ratio(k))
            return self.values[n]


_tables: dict[Fraction, GammaTable] = {}
_tables_lock = threading.Lock()


def _table(nu: DunklParam) -> GammaTable:
    table = _tables.get(nu.nu)
    if table is None:
        with _tables_lock:
            table = _tables.setdefault(nu.nu, GammaTable(nu))
    return table


def gamma_factorial(n: int, nu: Union[DunklParam, RationalLike]) -> Fraction:
    """Return gamma_{n,nu}.

    For ``n = 2k`` this is ``4**k * k! * (nu+1)_k`` and for ``n = 2k+1`` it is
    ``2**(2k+1) * k! * (nu+1)_{k+1}``.  At ``nu = -1/2`` it equals ``n!``.
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return _table(as_nu(nu))[n]


def gamma_ratio(n: int, nu: Union[DunklParam, RationalLike]) -> Fraction:
    """gamma_{n,nu} / gamma_{n-1,nu} for ``n >= 1``."""
    if n < 1:
        raise DomainError(f"ratio needs n >= 1, got {n}")
    return _table(as_nu(nu)).ratio(n)


def dunkl_binomial(n: int, k: int, nu: Union[DunklParam, RationalLike]) -> Fraction:
    """Dunkl binomial coefficient gamma_n / (gamma_k gamma_{n-k}); zero outside 0 <= k <= n."""
    table = _table(as_nu(nu))
    if k < 0 or k > n:
        return Fraction(0)
    return table[n] / (table[k] * table[n - k])
