"""
Dunkl operator calculus on polynomials
======================================

The generalized factorials, the Dunkl derivative, the Dunkl translation
and the discrete operator, all in exact rational arithmetic.
"""
from fractions import Fraction

from sheffer_dunkl import (
    Poly,
    apply_Lf,
    discrete_difference,
    dunkl_binomial,
    dunkl_derivative,
    dunkl_kernel_series,
    gamma_factorial,
    translate,
)

nu = Fraction(1, 4)

# gamma_{n,nu} replaces n!; at nu = -1/2 it is n! again
print("gamma_n, nu = 1/4:", [str(gamma_factorial(n, nu)) for n in range(8)])
print("gamma_n, nu = -1/2:", [str(gamma_factorial(n, "-1/2")) for n in range(8)])

# The Dunkl derivative lowers x^n to (gamma_n / gamma_{n-1}) x^(n-1)
p = Poly([1, -2, 0, 3], nu)
print("p        =", p)
print("Lambda p =", dunkl_derivative(p))

# Translation tau_y p(x), stored as a polynomial in (x, y)
tau = translate(Poly.monomial(3, nu))
print("tau_y x^3 coefficients:", {k: str(v) for k, v in sorted(tau.terms.items())})
print("Dunkl binomials (3, k):", [str(dunkl_binomial(3, k, nu)) for k in range(4)])

# The operator series L_G with G = t I_{nu+1}(t) is the symmetric difference
G = dunkl_kernel_series("G", nu, 12)
print("L_G p              =", apply_Lf(G, p))
print("(nu+1)(tau_1-tau_-1) p =", discrete_difference(p))
