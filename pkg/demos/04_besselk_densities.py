"""
Bessel-K densities with Dunkl-factorial moments
===============================================

The weights built from K_nu have moments gamma_{n,nu}; we compare
numerically against the exact values.
"""
import numpy as np

from sheffer_dunkl.numeric import DensityEval, crosscheck_moments

for density, nu in [("besselK_signed", -0.5), ("besselK_signed", -0.75),
                    ("besselK_even", 0.0), ("besselK_even", 1.0)]:
    report = crosscheck_moments(DensityEval(density, nu), 8, 1e-6)
    worst = max(r.rel_err for r in report.rows)
    print(f"{density:>15} nu={nu:+.2f}: pass={report.passed} worst error={worst:.1e}")

# at nu = -1/2 the signed weight is exp(-x) on the positive half-line
d = DensityEval("besselK_signed", -0.5)
xs = np.array([0.1, 1.0, 5.0])
print("density:", d(xs), " exp(-x):", np.exp(-xs))
print("density at -x:", d(-xs))
