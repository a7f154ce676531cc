"""
Speciality of curves in P^5
===========================

Under the flag (5; d, s, t, u) the speciality index is at most
d/s + s/t + t/u + u - 6, with equality exactly for the complete intersection
of hypersurfaces of degrees u, t/u, s/t, d/s. Several other bounds collapse
onto the same value when the degrees divide each other.
"""

from curvebounds import (
    g4_divisible,
    lemma2_bound,
    prop1_bound_i,
    prop1_bound_iii,
    thmB_bound,
    verify_sharp,
)

d, s, t, u = 120, 24, 6, 2

# %%
report = thmB_bound(d, s, t, u)
print("bound:", report.value, " witness:", report.witness)
res = verify_sharp("ThmB", dict(d=d, s=s, t=t, u=u))
print("CI speciality:", res.ci.speciality, " genus:", res.ci.genus, " attained:", res.attained)

# %%
# The same number from the surface's sectional genus and from the threefold.
pi = g4_divisible(s, t, u)
print("sectional genus G(4;s,t,u):", pi)
print("via sectional genus:", prop1_bound_iii(d, s, pi))
print("via threefold (k = u + t/u - 6):", lemma2_bound(d, s, t, u + t // u - 6).value)

# %%
# The general flag bound carries an extra 3/4.
print("general flag bound:", prop1_bound_i((5, (d, s, t, u)), 1).value)

# %%
# A non-divisible flag: the bound is fractional and no curve reaches it.
r = thmB_bound(125, 25, 7, 2)
print(r.value, "->", r.floor, " equality possible:", r.equality_possible)
