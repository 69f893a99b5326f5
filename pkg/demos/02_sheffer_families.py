"""
Sheffer-Dunkl families from a generating pair
=============================================

Every named family is a pair (g, f).  The sequence is read off
E_nu(x fbar(t)) / g(fbar(t)) and is lowered by L_f.
"""
from fractions import Fraction

from sheffer_dunkl import FAMILIES, apply_Lf, gamma_ratio, generate_sequence, preset_family

nu = Fraction(0)
N = 5

for name in FAMILIES:
    spec = preset_family(name, nu, N)
    seq = generate_sequence(spec, N)
    print(f"--- {name}")
    for n, p in enumerate(seq):
        print(f"  s_{n}(x) = {p}")
    lowered = all(apply_Lf(spec.f, seq[n]) == seq[n - 1] * gamma_ratio(n, nu) for n in range(1, N + 1))
    print("  lowering identity holds:", lowered)

# Euler-Dunkl values at x = +-1 are opposite; only the even-index ones vanish
euler = generate_sequence(preset_family("euler", Fraction(1, 4), 8), 8)
print("Euler-Dunkl at  1:", [str(p(1)) for p in euler])
print("Euler-Dunkl at -1:", [str(p(-1)) for p in euler])
