"""Floating-point cross-checks of the Bessel-K densities.

Two densities on the real line are claimed to have the moments ``gamma_{n,nu}``:

* ``besselK_signed``:  |x|^(nu+1) (K_nu(|x|) + sgn(x) K_{nu+1}(|x|)) / (2^(nu+1) Gamma(nu+1)),
  a positive weight exactly when -1 < nu <= -1/2; moments gamma_n.
* ``besselK_even``:    |x|^(nu+1) K_nu(|x|) / (2^(nu+1) Gamma(nu+1)),
  positive for nu > -1; moments gamma_n for even n and 0 for odd n.

Everything here is float; exact targets are converted only when compared.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy import integrate, special

from .errors import DomainError, QuadratureError
from .rational import gamma_factorial

NUMERIC_DENSITIES = ("besselK_signed", "besselK_even")
MAX_MOMENT = 12


def bessel_K(nu: float, x: float) -> float:
    """Modified Bessel function of the second kind, ``K_nu(x)`` for ``x > 0``."""
    x = float(x)
    if not x > 0:
        raise DomainError(f"K_nu(x) needs x > 0, got {x}")
    return float(special.kv(nu, x))


def bessel_K_integral(nu: float, x: float, rtol: float = 1e-13) -> float:
    """``K_nu(x) = int_0^inf exp(-x cosh u) cosh(nu u) du`` evaluated by quadrature.

    Slow; kept as an independent reference for :func:`bessel_K`.
    """
    x = float(x)
    if not x > 0:
        raise DomainError(f"K_nu(x) needs x > 0, got {x}")
    # integrand is below 1e-300 once x cosh u > 700
    upper = math.acosh(max(750.0 / x, 1.0)) + 1.0

    def h(u):
        return math.exp(-x * math.cosh(u) + abs(nu) * u) * (1 + math.exp(-2 * abs(nu) * u)) / 2

    val, _ = integrate.quad(h, 0.0, upper, epsabs=0.0, epsrel=rtol, limit=500)
    return val


@dataclass(frozen=True)
class Quadrature:
    """Adaptive quadrature that refuses results whose error estimate is too large."""

    rtol: float = 1e-10
    atol: float = 1e-14
    limit: int = 400

    def _quad(self, func, a, b):
        # quadpack warnings are superseded by the error-estimate check in _accept
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", integrate.IntegrationWarning)
            return integrate.quad(func, a, b, epsabs=self.atol, epsrel=self.rtol, limit=self.limit)

    def finite(self, func, a: float, b: float) -> float:
        val, err = self._quad(func, a, b)
        return self._accept(val, err, (a, b))

    def half_line(self, func) -> float:
        """``int_0^inf func(x) dx`` through ``x = exp(s)``.

        The substitution turns an integrable power singularity at 0 into
        exponential decay as ``s -> -inf``.
        """
        def h(s):
            x = math.exp(s)
            if x == 0.0:
                # underflow deep in the left tail; the weight there is negligible
                return 0.0
            return func(x) * x

        total = 0.0
        err_total = 0.0
        # past x = e^7 the densities here are below exp(-1000)
        for lo, hi in ((-np.inf, 0.0), (0.0, 7.0)):
            val, err = self._quad(h, lo, hi)
            total += val
            err_total += err
        return self._accept(total, err_total, (0.0, np.inf))

    def _accept(self, val, err, interval):
        if not np.isfinite(val) or err > max(self.rtol * abs(val), self.atol):
            raise QuadratureError(
                f"quadrature on {interval} did not converge: value {val!r}, error estimate {err!r}")
        return val


@dataclass(frozen=True)
class DensityEval:
    id: str
    nu: float

    def __post_init__(self):
        nu = float(self.nu)
        object.__setattr__(self, "nu", nu)
        if self.id == "besselK_signed":
            if not (-1 < nu <= -0.5):
                raise DomainError(f"besselK_signed is a positive weight only for -1 < nu <= -1/2, got {nu}")
        elif self.id == "besselK_even":
            if not nu > -1:
                raise DomainError(f"besselK_even needs nu > -1, got {nu}")
        else:
            raise DomainError(f"unknown density {self.id!r}; known: {', '.join(NUMERIC_DENSITIES)}")

    @property
    def norm(self) -> float:
        return 2.0 ** (self.nu + 1) * math.gamma(self.nu + 1)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        ax = np.abs(x)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            # kve(v, z) = kv(v, z) exp(z) keeps the products finite
            decay = np.exp(-ax)
            k0 = special.kve(self.nu, ax)
            if self.id == "besselK_signed":
                k0 = k0 + np.sign(x) * special.kve(self.nu + 1, ax)
            out = ax ** (self.nu + 1) * k0 * decay / self.norm
        out = np.where(ax == 0, self._at_zero(x), out)
        return out if out.ndim else float(out)

    def _at_zero(self, x):
        val = _power_bessel_limit(self.nu + 1, self.nu) / self.norm
        if self.id == "besselK_signed":
            val = val + np.sign(x) * _power_bessel_limit(self.nu + 1, self.nu + 1) / self.norm
        return val


def _power_bessel_limit(power: float, order: float) -> float:
    """Limit of ``x^power K_order(x)`` as ``x -> 0+`` (``power > 0``)."""
    order = abs(order)
    if order == 0:
        return 0.0
    # K_mu(x) ~ Gamma(mu) 2^(mu-1) x^(-mu)
    excess = power - order
    if excess > 0:
        return 0.0
    if excess == 0:
        return math.gamma(order) * 2.0 ** (order - 1)
    return math.inf


def density_moment(d: DensityEval, n: int, quadrature: Quadrature | None = None) -> float:
    """``int x^n d(x) dx`` over the real line."""
    if not 0 <= n <= MAX_MOMENT:
        raise DomainError(f"moment index must be in 0..{MAX_MOMENT}, got {n}")
    quad = quadrature or Quadrature()
    right = quad.half_line(lambda x: x**n * d(x))
    left = quad.half_line(lambda x: x**n * d(-x))
    return right + (-1) ** n * left


def target_moment(d: DensityEval, n: int) -> Fraction:
    """Exact moment the density is meant to reproduce (needs a rational nu)."""
    nu = Fraction(d.nu).limit_denominator(10**6)
    if d.id == "besselK_even" and n % 2:
        return Fraction(0)
    return gamma_factorial(n, nu)


@dataclass(frozen=True)
class MomentRow:
    n: int
    numeric: float
    target: float
    rel_err: float


@dataclass(frozen=True)
class CrosscheckReport:
    density: str
    nu: float
    tol: float
    rows: tuple[MomentRow, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(row.rel_err <= self.tol for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "density": self.density,
            "nu": self.nu,
            "rows": [
                {"n": r.n, "numeric": r.numeric, "target": r.target, "rel_err": r.rel_err}
                for r in self.rows
            ],
            "pass": self.passed,
        }


def crosscheck_moments(d: DensityEval, n_max: int, tol: float = 1e-6,
                       quadrature: Quadrature | None = None) -> CrosscheckReport:
    """Compare numeric moments ``0..n_max`` against ``gamma_{n,nu}``.

    Rows with a zero target report the absolute error in ``rel_err``.
    """
    rows = []
    for n in range(n_max + 1):
        numeric = density_moment(d, n, quadrature)
        target = float(target_moment(d, n))
        err = abs(numeric - target)
        rows.append(MomentRow(n, numeric, target, err / abs(target) if target else err))
    return CrosscheckReport(d.id, d.nu, tol, tuple(rows))
