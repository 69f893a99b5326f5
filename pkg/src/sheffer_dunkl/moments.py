"""Moment functionals and the two integral characterizations of Sheffer-Dunkl sequences.

A moment functional is a linear map on polynomials.  Three kinds exist:

* :class:`Atomic` -- finite sums of point masses and derivatives of Dirac
  deltas.  An atom ``(x0, m, w)`` acts as ``w * (-1)**m * p^(m)(x0)``, the
  distributional convention under which ``delta_0'`` has first moment -1.
* :class:`MomentSeq` -- given directly by its moments, ``x^k -> omega[k]``.
* :class:`NamedDensity` -- one of the continuous weights; exact only when its
  moments are known in closed form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError, PrecisionError, UnsupportedExactError
from .poly import Poly, apply_Lf, translate
from .rational import DunklParam, as_nu, format_rational, gamma_factorial, to_rational
from .series import Series, series_reciprocal
from .sheffer import FamilySpec, PolySequence

DENSITY_IDS = ("bernoulli_weight", "besselK_signed", "besselK_even")


@dataclass(frozen=True)
class Atom:
    location: Fraction
    derivative_order: int
    weight: Fraction

    def __post_init__(self):
        object.__setattr__(self, "location", to_rational(self.location))
        object.__setattr__(self, "weight", to_rational(self.weight))
        if self.derivative_order < 0:
            raise DomainError("derivative order of an atom must be non-negative")


@dataclass(frozen=True)
class Atomic:
    atoms: tuple[Atom, ...]

    def __init__(self, atoms: Iterable):
        object.__setattr__(self, "atoms", tuple(a if isinstance(a, Atom) else Atom(*a) for a in atoms))

    def apply(self, p: Poly) -> Fraction:
        total = Fraction(0)
        for a in self.atoms:
            sign = -1 if a.derivative_order % 2 else 1
            total += sign * a.weight * p.derivative(a.derivative_order)(a.location)
        return total

    def moment(self, k: int, nu=Fraction(-1, 2)) -> Fraction:
        return self.apply(Poly.monomial(k, nu))


@dataclass(frozen=True)
class MomentSeq:
    omega: tuple[Fraction, ...]

    def __init__(self, omega: Iterable):
        object.__setattr__(self, "omega", tuple(to_rational(w) for w in omega))

    def apply(self, p: Poly) -> Fraction:
        if p.degree >= len(self.omega):
            raise PrecisionError(f"degree {p.degree} exceeds the {len(self.omega)} known moments")
        return sum((c * w for c, w in zip(p.coeffs, self.omega)), Fraction(0))

    def moment(self, k: int, nu=None) -> Fraction:
        return self.omega[k]


@dataclass(frozen=True)
class NamedDensity:
    """A continuous weight on the real line, identified by name.

    ``bernoulli_weight`` is ``(nu+1)|x|^(2nu+1)`` on (-1, 1) and acts exactly.
    The two Bessel-K densities have ``target_moment`` only; evaluate them with
    :meth:`numeric_moment`.
    """

    id: str
    nu: DunklParam = field(default_factory=lambda: DunklParam(Fraction(-1, 2)))

    def __post_init__(self):
        if self.id not in DENSITY_IDS:
            raise DomainError(f"unknown density {self.id!r}; known: {', '.join(DENSITY_IDS)}")
        object.__setattr__(self, "nu", as_nu(self.nu))

    @property
    def exact(self) -> bool:
        return self.id == "bernoulli_weight"

    def moment(self, k: int, nu=None) -> Fraction:
        if not self.exact:
            raise UnsupportedExactError(
                f"{self.id} has no exact action; use numeric_moment() or target_moment()")
        return bernoulli_weight_moment(k, self.nu)

    def apply(self, p: Poly) -> Fraction:
        return sum((c * self.moment(k) for k, c in enumerate(p.coeffs)), Fraction(0))

    def target_moment(self, k: int) -> Fraction:
        """The moment sequence the density is claimed to solve."""
        if self.id == "bernoulli_weight":
            return bernoulli_weight_moment(k, self.nu)
        if self.id == "besselK_even" and k % 2:
            return Fraction(0)
        return gamma_factorial(k, self.nu)

    def numeric_moment(self, k: int, **quad_options) -> float:
        from .numeric import DensityEval, density_moment

        if self.id == "bernoulli_weight":
            raise UnsupportedExactError("bernoulli_weight has exact moments; use moment()")
        return density_moment(DensityEval(self.id, float(self.nu.nu)), k, **quad_options)


MomentFunctional = Union[Atomic, MomentSeq, NamedDensity]


def apply_functional(m: MomentFunctional, p: Poly) -> Fraction:
    """Exact value of the functional ``m`` on ``p``."""
    return m.apply(p)


def bernoulli_weight_moment(k: int, nu) -> Fraction:
    """``int_{-1}^{1} x^k (nu+1)|x|^(2nu+1) dx``: 0 for odd k, ``(nu+1)/(nu+m+1)`` for k = 2m."""
    if k < 0:
        raise DomainError("moment index must be non-negative")
    nu = as_nu(nu).nu
    if k % 2:
        return Fraction(0)
    return (nu + 1) / (nu + k // 2 + 1)


# -- the measures paired with the named families --------------------------------

def truncated_measure(nu) -> Atomic:
    """``delta_0 + gamma_1 delta_0'``: moments 1, -gamma_1, 0, 0, ..."""
    return Atomic([(0, 0, 1), (0, 1, gamma_factorial(1, nu))])


def truncated_t2_measure(nu) -> Atomic:
    """``delta_0 - (gamma_2 / 2) delta_0''``: moments 1, 0, -gamma_2, 0, ..."""
    return Atomic([(0, 0, 1), (0, 2, -gamma_factorial(2, nu) / 2)])


def euler_measure(nu=None) -> Atomic:
    """``(delta_{-1} + delta_1) / 2``."""
    return Atomic([(-1, 0, Fraction(1, 2)), (1, 0, Fraction(1, 2))])


def bernoulli_measure(nu) -> NamedDensity:
    return NamedDensity("bernoulli_weight", as_nu(nu))


THORNE_MEASURES = {
    "truncated": truncated_measure,
    "appell_discrete_truncated": truncated_measure,
    "truncated_t2": truncated_t2_measure,
    "bernoulli": bernoulli_measure,
    "bernoulli_2nd": bernoulli_measure,
    "euler": euler_measure,
    "boole": euler_measure,
    "factorial": lambda nu: Atomic([(0, 0, 1)]),
}


def thorne_measure(family: str, nu) -> MomentFunctional:
    """The Thorne-type functional paired with a named family."""
    try:
        return THORNE_MEASURES[family](as_nu(nu))
    except KeyError:
        raise DomainError(f"no Thorne measure recorded for family {family!r}") from None


# -- Thorne-type verification ----------------------------------------------------

@dataclass(frozen=True)
class ThorneRow:
    n: int
    r: int
    value: Fraction
    expected: Fraction

    @property
    def passed(self) -> bool:
        return self.value == self.expected


@dataclass(frozen=True)
class ThorneReport:
    rows: tuple[ThorneRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> list[ThorneRow]:
        return [row for row in self.rows if not row.passed]

    def to_dict(self) -> dict:
        return {
            "pairs": [
                {"n": row.n, "r": row.r, "value": format_rational(row.value),
                 "expected": format_rational(row.expected), "pass": row.passed}
                for row in self.rows
            ],
            "all_pass": self.all_pass,
        }


def thorne_verify(m: MomentFunctional, seq: PolySequence) -> ThorneReport:
    """Tabulate ``m(L_f^r s_n)`` against ``gamma_n delta_{n,r}`` for ``0 <= r <= n``."""
    f = seq.spec.f
    nu = seq.nu
    rows = []
    for n, s in enumerate(seq):
        gn = gamma_factorial(n, nu)
        p = s
        for r in range(n + 1):
            rows.append(ThorneRow(n, r, m.apply(p), gn if r == n else Fraction(0)))
            if r < n:
                p = apply_Lf(f, p)
    return ThorneReport(tuple(rows))


# -- Sheffer-type reconstruction -----------------------------------------------

def sheffer_moments(g: Series) -> list[Fraction]:
    """``omega_n`` with ``1/g = sum omega_n t^n / gamma_n``."""
    inv = series_reciprocal(g)
    return [gamma_factorial(n, g.nu) * c for n, c in enumerate(inv.coeffs)]


def sheffer_reconstruct(omega: Sequence, assoc: PolySequence, g: Series | None = None) -> PolySequence:
    """``s_n(x) = sum_j omega_j [t^j] tau_t(p_n)(x)`` for an associated family ``p``.

    ``g`` only labels the result; when omitted it is rebuilt from ``omega``.
    """
    omega = [to_rational(w) for w in omega]
    nu = assoc.nu
    if any(c != 0 for c in assoc.spec.g.coeffs[1:]) or assoc.spec.g.coeffs[0] != 1:
        raise DomainError("sheffer_reconstruct needs an associated family (g = 1)")
    if not omega or omega[0] == 0:
        raise DomainError("omega_0 must be non-zero")
    N = len(assoc) - 1
    if len(omega) <= N:
        raise PrecisionError(f"need {N + 1} moments, got {len(omega)}")
    polys = []
    for p in assoc:
        bi = translate(p)
        out = Poly.zero(nu)
        for j in range(p.degree + 1 if p else 0):
            if omega[j]:
                out = out + bi.y_coefficient(j) * omega[j]
        polys.append(out)
    if g is None:
        inv = Series([w / gamma_factorial(n, nu) for n, w in enumerate(omega[: N + 1])], N, nu)
        g = series_reciprocal(inv)
    spec = FamilySpec(g, assoc.spec.f, "sheffer")
    return PolySequence(spec, tuple(polys))


# -- generating-function reconstructions ---------------------------------------

@dataclass(frozen=True)
class ComplexSeries:
    """``real + i * imag`` with exact rational coefficient series."""

    real: Series
    imag: Series

    def __eq__(self, other):
        if not isinstance(other, ComplexSeries):
            return NotImplemented
        return self.real == other.real and self.imag == other.imag

    def to_dict(self) -> dict:
        return {"real": self.real.to_dict(), "imag": self.imag.to_dict()}


def auxiliary_F(mu: Sequence, N: int, nu=Fraction(-1, 2)) -> ComplexSeries:
    """Return ``2*pi*F(t) = sum_n i^n mu_n t^n / n!`` to order ``N``.

    The ``1/(2 pi)`` normalization is left out so the result stays exact.
    """
    mu = [to_rational(m) for m in mu]
    if len(mu) <= N:
        raise PrecisionError(f"need {N + 1} moments, got {len(mu)}")
    real = [Fraction(0)] * (N + 1)
    imag = [Fraction(0)] * (N + 1)
    fact = 1
    for n in range(N + 1):
        if n:
            fact *= n
        term = mu[n] / fact
        # i^n cycles through 1, i, -1, -i
        if n % 4 == 0:
            real[n] = term
        elif n % 4 == 1:
            imag[n] = term
        elif n % 4 == 2:
            real[n] = -term
        else:
            imag[n] = -term
    return ComplexSeries(Series(real, N, nu), Series(imag, N, nu))


def reconstruct_generating(direction: str, moments: Sequence, nu, N: int) -> Series:
    """``sum_n moments[n] t^n / gamma_n`` to order ``N``.

    With ``direction="g_from_mu"`` the result is ``g`` itself; with
    ``"ginv_from_omega"`` it is ``1/g`` (take its reciprocal to recover ``g``).
    """
    if direction not in ("g_from_mu", "ginv_from_omega"):
        raise DomainError(f"unknown direction {direction!r}")
    nu = as_nu(nu)
    moments = [to_rational(m) for m in moments]
    if len(moments) <= N:
        raise PrecisionError(f"need {N + 1} moments, got {len(moments)}")
    return Series([moments[n] / gamma_factorial(n, nu) for n in range(N + 1)], N, nu)
