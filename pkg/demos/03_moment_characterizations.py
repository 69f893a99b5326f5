"""
Thorne-type and Sheffer-type characterizations
==============================================

A family is pinned down by the moments of g (tested against L_f^r s_n)
or by the moments of 1/g (integrating translated associated polynomials).
"""
from fractions import Fraction

from sheffer_dunkl import (
    auxiliary_F,
    generate_sequence,
    generating_moments,
    preset_family,
    sequence_from_thorne,
    sheffer_moments,
    sheffer_reconstruct,
    thorne_measure,
    thorne_verify,
)

nu = Fraction(1, 4)
N = 6

for name in ("truncated", "truncated_t2", "bernoulli", "euler", "boole"):
    seq = generate_sequence(preset_family(name, nu, N), N)
    report = thorne_verify(thorne_measure(name, nu), seq)
    print(f"{name:>14}: Thorne table over {len(report.rows)} pairs, all pass = {report.all_pass}")

# The table for the truncated family, delta_0 + gamma_1 delta_0'
seq = generate_sequence(preset_family("truncated", nu, 3), 3)
for row in thorne_verify(thorne_measure("truncated", nu), seq).rows:
    print(f"  n={row.n} r={row.r} value={row.value} expected={row.expected}")

# Rebuilding the discrete truncated family both ways
spec = preset_family("appell_discrete_truncated", nu, N)
target = generate_sequence(spec, N).polys
mu = generating_moments(spec.g)
omega = sheffer_moments(spec.g)
print("mu    =", [str(m) for m in mu[: N + 1]])
print("omega =", [str(w) for w in omega[: N + 1]])
print("from mu:   ", sequence_from_thorne(spec.f, mu, nu, N).polys == target)
assoc = generate_sequence(spec.associated(), N)
print("from omega:", sheffer_reconstruct(omega, assoc).polys == target)

# 2*pi*F(t) for the Euler moments is the cosine series
F = auxiliary_F([1, 0] * 5, 8, nu)
print("2 pi F, real part:", [str(c) for c in F.real.coeffs])
