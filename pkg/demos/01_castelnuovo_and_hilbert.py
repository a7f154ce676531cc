"""
Castelnuovo's bound two ways
============================

The maximal genus of a nondegenerate curve of degree s in P^n has a closed
form. For the extremal curves, which are arithmetically Cohen-Macaulay, it can
also be read off the Hilbert function of a hyperplane section.
"""

from curvebounds import acm_speciality, castelnuovo_bound, castelnuovo_hilbert, genus_from_hilbert

# %%
# A degree 8 space curve: its general plane section is 8 points whose
# Hilbert function grows by 2 until it reaches 8.
h = castelnuovo_hilbert(3, 8)
print("h(i) =", h.head(7))
print("closed form :", castelnuovo_bound(3, 8))
print("from h      :", genus_from_hilbert(8, h))

# %%
# For ACM curves the speciality index is max{i : h(i) < d} - 1.
# Degree 8 = 2 mod 2, so this curve is subcanonical: d*e = 2g - 2.
e = acm_speciality(h, 8)
print("speciality  :", e, " d*e =", 8 * e, " 2g-2 =", 2 * castelnuovo_bound(3, 8) - 2)

# %%
# The two routes agree everywhere we look.
mismatches = [
    (n, s)
    for n in range(2, 9)
    for s in range(n, 201)
    if castelnuovo_bound(n, s) != genus_from_hilbert(s, castelnuovo_hilbert(n, s))
]
print("mismatches  :", mismatches)
