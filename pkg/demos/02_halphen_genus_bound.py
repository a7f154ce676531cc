"""
Genus of curves off low-degree surfaces
=======================================

For a degree d curve in P^r lying on no surface of degree < s, the maximal
genus (for d large) is d^2/2s + (d/2s)(2G(r-1;s) - 2 - s) + R, where the
correction R depends only on residues. This script evaluates it, shows the
division data behind R, and compares with complete intersections.
"""

from fractions import Fraction

from curvebounds import CIType, decompose, halphen_bound, halphen_R

# %%
for d in (18, 19, 20, 21):
    dec = decompose(3, d, 3)
    print(f"d={d}: G={halphen_bound(3, d, 3):4d}  R={str(halphen_R(3, d, 3)):>4}  "
          f"eps={dec.eps} branch={dec.branch.value} k={dec.k} delta={dec.delta}")

# %%
# When s divides d the extremal curve is a complete intersection (s, d/s).
for s in (2, 3, 4, 5):
    d = 6 * s
    print(f"s={s}, d={d}: bound {halphen_bound(3, d, s)}, CI genus {CIType(3, (s, d // s)).genus}")

# %%
# R stays tiny compared with s^3/(r-2) across a whole grid.
worst = max(
    abs(halphen_R(r, d, s)) / Fraction(s**3, r - 2)
    for r in range(3, 8)
    for s in range(r - 1, 20)
    for d in range(s + 1, 20 * s)
)
print("max |R| / (s^3/(r-2)) =", worst, "~", float(worst))
