"""Sheffer-Dunkl sequences from a generating pair ``(g, f)``.

The sequence is read off the expansion

    E_nu(x fbar(t)) / g(fbar(t)) = sum_n s_n(x) t^n / gamma_n,

with ``fbar`` the compositional inverse of ``f``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, PrecisionError
from .poly import Poly, apply_Lf
from .rational import DunklParam, as_nu, format_rational, gamma_factorial, to_rational
from .series import (
    Series,
    default_order,
    dunkl_kernel_series,
    series_compose,
    series_multiply,
    series_reciprocal,
    series_reverse,
)

FAMILIES = (
    "truncated",
    "truncated_t2",
    "bernoulli",
    "euler",
    "appell_discrete_truncated",
    "factorial",
    "bernoulli_2nd",
    "boole",
)


@dataclass(frozen=True)
class FamilySpec:
    """Generating pair: ``g`` a unit series, ``f`` a delta series."""

    g: Series
    f: Series
    name: Optional[str] = None

    def __post_init__(self):
        if self.g.nu != self.f.nu:
            raise DomainError("g and f must carry the same nu")
        if not self.g.is_unit:
            raise DomainError("g must have a non-zero constant term (b_0 != 0)")
        if not self.f.is_delta:
            raise DomainError("f must be a delta series (f(0) = 0, a_1 != 0)")

    @property
    def nu(self) -> DunklParam:
        return self.g.nu

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def associated(self) -> "FamilySpec":
        """The pair ``(1, f)`` whose sequence is the associated family of ``f``."""
        one = Series.constant(1, self.f.order, self.nu)
        name = f"associated({self.name})" if self.name else None
        return FamilySpec(one, self.f, name)


@dataclass(frozen=True)
class PolySequence:
    spec: FamilySpec
    polys: tuple[Poly, ...]

    @property
    def nu(self) -> DunklParam:
        return self.spec.nu

    def __getitem__(self, n: int) -> Poly:
        return self.polys[n]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def to_dict(self) -> dict:
        return {
            "family": self.spec.name,
            "nu": format_rational(self.nu.nu),
            "polys": [p.to_dict() for p in self.polys],
        }


def generate_sequence(spec: FamilySpec, N: int) -> PolySequence:
    """Return ``s_0 .. s_N`` for the pair in ``spec``.

    With ``H = 1 / g(fbar)`` and ``u = fbar``,
    ``s_n(x) = gamma_n * sum_m [t^n](H u^m) / gamma_m * x^m``.
    """
    if N < 0:
        raise DomainError(f"N must be non-negative, got {N}")
    if N > spec.order:
        raise PrecisionError(f"requested N = {N} but the pair is only known to order {spec.order}")
    nu = spec.nu
    g = spec.g.truncate(N) if N < spec.g.order else spec.g
    f = spec.f.truncate(max(N, 1)) if N < spec.f.order else spec.f
    u = series_reverse(f)
    h = series_reciprocal(series_compose(g, u))
    # columns[m][n] = [t^n](H u^m)
    columns = []
    power = h
    for m in range(N + 1):
        columns.append(power.coeffs)
        power = series_multiply(power, u)
    polys = []
    for n in range(N + 1):
        gn = gamma_factorial(n, nu)
        polys.append(Poly([gn * columns[m][n] / gamma_factorial(m, nu) for m in range(n + 1)], nu))
    return PolySequence(spec, tuple(polys))


def preset_family(name: str, nu, N: int | None = None) -> FamilySpec:
    """Generating pair of a named family, with series known to order ``N``."""
    nu = as_nu(nu)
    if N is None:
        N = default_order()
    N = max(N, 1)
    t = Series.identity(N, nu)
    one = Series.constant(1, N, nu)
    if name == "truncated":
        g, f = Series([1, -1], N, nu), t
    elif name == "truncated_t2":
        g, f = Series([1, 0, -1], N, nu), t
    elif name == "bernoulli":
        g, f = dunkl_kernel_series("I_shift", nu, N), t
    elif name == "euler":
        g, f = dunkl_kernel_series("I", nu, N), t
    elif name == "factorial":
        g, f = one, dunkl_kernel_series("G", nu, N)
    elif name == "appell_discrete_truncated":
        g, f = Series([1, -1], N, nu), dunkl_kernel_series("G", nu, N)
    elif name == "bernoulli_2nd":
        # g(u) = G(u) / u (= I_{nu+1}(u)), the odd series shifted down one place;
        # this is the discrete partner of the Bernoulli pair (I_{nu+1}, t)
        G = dunkl_kernel_series("G", nu, N + 1)
        g, f = Series(G.coeffs[1:], N, nu), G.truncate(N)
    elif name == "boole":
        g, f = dunkl_kernel_series("I", nu, N), dunkl_kernel_series("G", nu, N)
    else:
        raise DomainError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
    return FamilySpec(g, f, name)


def family_sequence(name: str, nu, N: int) -> PolySequence:
    """Shortcut: ``generate_sequence(preset_family(name, nu, N), N)``."""
    return generate_sequence(preset_family(name, nu, N), N)


def generating_moments(g: Series) -> list[Fraction]:
    """Moments ``mu_n = gamma_n [t^n] g`` so that ``g = sum mu_n t^n / gamma_n``."""
    return [gamma_factorial(n, g.nu) * c for n, c in enumerate(g.coeffs)]


def sequence_from_thorne(f: Series, mu: Sequence, nu, N: int) -> PolySequence:
    """Rebuild ``s_0 .. s_N`` from the moments of a Thorne functional.

    For each ``n`` the coefficients of ``s_n`` solve
    ``sum_k c_k L(L_f^r x^k) = gamma_n delta_{n,r}`` for ``r = 0..n``, where
    ``L`` maps ``x^k`` to ``mu[k]``.  ``L_f^r x^k`` vanishes for ``k < r`` so
    the matrix is upper triangular with diagonal ``f'(0)^r gamma_r mu[0]``.
    """
    nu = as_nu(nu)
    mu = [to_rational(m) for m in mu]
    if f.nu != nu:
        raise DomainError("f carries a different nu")
    if not f.is_delta:
        raise DomainError("f must be a delta series")
    if not mu or mu[0] == 0:
        raise DomainError("the Thorne system is singular when mu_0 = 0")
    if len(mu) <= N:
        raise PrecisionError(f"need {N + 1} moments, got {len(mu)}")
    if f.order < N:
        raise PrecisionError(f"f is known to order {f.order} < N = {N}")

    def functional(p: Poly) -> Fraction:
        return sum((c * mu[k] for k, c in enumerate(p.coeffs)), Fraction(0))

    # matrix[r][k] = L(L_f^r x^k), filled column by column
    matrix = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
    for k in range(N + 1):
        p = Poly.monomial(k, nu)
        for r in range(k + 1):
            matrix[r][k] = functional(p)
            if r < k:
                p = apply_Lf(f, p)
    polys = []
    for n in range(N + 1):
        c = [Fraction(0)] * (n + 1)
        for r in range(n, -1, -1):
            rhs = gamma_factorial(n, nu) if r == n else Fraction(0)
            rhs -= sum((matrix[r][k] * c[k] for k in range(r + 1, n + 1)), Fraction(0))
            c[r] = rhs / matrix[r][r]
        polys.append(Poly(c, nu))
    g = Series([m / gamma_factorial(k, nu) for k, m in enumerate(mu[: N + 1])], N, nu)
    spec = FamilySpec(g, f.truncate(max(N, 1)) if f.order > N else f, "thorne")
    return PolySequence(spec, tuple(polys))
