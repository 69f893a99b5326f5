"""Exact polynomials in ``x`` and the Dunkl operator calculus on them."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError, PrecisionError
from .rational import RationalLike, as_nu, format_rational, gamma_factorial, gamma_ratio, to_rational
from .series import Series


def _trim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Polynomial ``sum coeffs[k] x**k`` tagged with the Dunkl parameter."""

    __slots__ = ("coeffs", "nu")

    def __init__(self, coeffs: Iterable[RationalLike], nu):
        self.coeffs = _trim([to_rational(c) for c in coeffs])
        self.nu = as_nu(nu)

    @classmethod
    def monomial(cls, n: int, nu, c: RationalLike = 1) -> "Poly":
        return cls([0] * n + [c], nu)

    @classmethod
    def zero(cls, nu) -> "Poly":
        return cls([], nu)

    @property
    def degree(self):
        """Degree in ``x``; ``-math.inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nu == other.nu and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.nu))

    def __repr__(self):
        cs = ", ".join(format_rational(c) for c in self.coeffs)
        return f"Poly([{cs}], nu={self.nu})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(format_rational(c) + ("*" + mono if mono else ""))
        return " + ".join(reversed(parts)).replace("+ -", "- ")

    def _check(self, other: "Poly"):
        if self.nu != other.nu:
            raise DomainError(f"polynomials carry different nu ({self.nu} vs {other.nu})")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)], self.nu)

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.nu)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            if not self.coeffs or not other.coeffs:
                return Poly.zero(self.nu)
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out, self.nu)
        c = to_rational(other)
        return Poly([c * a for a in self.coeffs], self.nu)

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, m: int = 1) -> "Poly":
        """Ordinary ``m``-th derivative d^m/dx^m."""
        cs = list(self.coeffs)
        for _ in range(m):
            cs = [k * cs[k] for k in range(1, len(cs))]
        return Poly(cs, self.nu)

    def to_dict(self) -> dict:
        return {"nu": format_rational(self.nu.nu), "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Poly":
        return cls(data["coeffs"], data["nu"])


class BiPoly:
    """Polynomial in ``(x, y)`` stored as ``{(i, j): coefficient of x**i y**j}``."""

    __slots__ = ("terms", "nu")

    def __init__(self, terms: Mapping[tuple[int, int], RationalLike], nu):
        self.terms = {k: to_rational(v) for k, v in terms.items() if v != 0}
        self.nu = as_nu(nu)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.nu == other.nu and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"BiPoly({len(self.terms)} terms, nu={self.nu})"

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    @property
    def y_degree(self):
        return max((j for _, j in self.terms), default=-math.inf)

    def y_coefficient(self, j: int) -> Poly:
        """The polynomial in ``x`` multiplying ``y**j``."""
        cs: dict[int, Fraction] = {i: c for (i, jj), c in self.terms.items() if jj == j}
        size = max(cs, default=-1) + 1
        return Poly([cs.get(i, 0) for i in range(size)], self.nu)

    def specialize_y(self, y: RationalLike) -> Poly:
        y = to_rational(y)
        size = max((i for i, _ in self.terms), default=-1) + 1
        out = [Fraction(0)] * size
        for (i, j), c in self.terms.items():
            out[i] += c * y**j
        return Poly(out, self.nu)

    def __call__(self, x: RationalLike, y: RationalLike) -> Fraction:
        return self.specialize_y(y)(x)

    def to_dict(self) -> dict:
        return {
            "nu": format_rational(self.nu.nu),
            "terms": [[i, j, format_rational(c)] for (i, j), c in sorted(self.terms.items())],
        }


def _dunkl_once(p: Poly) -> Poly:
    # Lambda x^n = (gamma_n / gamma_{n-1}) x^{n-1}
    nu = p.nu
    return Poly([gamma_ratio(k, nu) * p.coeffs[k] for k in range(1, len(p.coeffs))], nu)


def dunkl_derivative(p: Poly, r: int = 1) -> Poly:
    """Apply the Dunkl operator ``r`` times."""
    if r < 1:
        raise DomainError(f"power of the Dunkl operator must be >= 1, got {r}")
    for _ in range(r):
        p = _dunkl_once(p)
    return p


def translate(p: Poly) -> BiPoly:
    """Dunkl translation ``tau_y p(x) = sum_n Lambda^n p(x) y^n / gamma_n``."""
    nu = p.nu
    terms: dict[tuple[int, int], Fraction] = {}
    q, n = p, 0
    while q:
        scale = 1 / gamma_factorial(n, nu)
        for i, c in enumerate(q.coeffs):
            if c:
                terms[(i, n)] = c * scale
        q = _dunkl_once(q)
        n += 1
    return BiPoly(terms, nu)


def apply_Lf(f: Series, p: Poly, r: int = 1) -> Poly:
    """Apply ``L_f = sum_n [t^n]f * Lambda^n`` to ``p``, ``r`` times."""
    if not f.is_delta:
        raise DomainError("L_f needs a delta series f (f(0) = 0, f'(0) != 0)")
    if f.nu != p.nu:
        raise DomainError(f"series and polynomial carry different nu ({f.nu} vs {p.nu})")
    if r < 0:
        raise DomainError(f"r must be non-negative, got {r}")
    if p and p.degree > f.order:
        raise PrecisionError(f"f is known to order {f.order} but deg p = {p.degree}")
    for _ in range(r):
        out = Poly.zero(p.nu)
        q = _dunkl_once(p)
        n = 1
        while q:
            if f.coeffs[n]:
                out = out + q * f.coeffs[n]
            q = _dunkl_once(q)
            n += 1
        p = out
    return p


def discrete_difference(p: Poly) -> Poly:
    """``(nu + 1) (tau_1 p - tau_{-1} p)``."""
    t = translate(p)
    return (t.specialize_y(1) - t.specialize_y(-1)) * (p.nu.nu + 1)
