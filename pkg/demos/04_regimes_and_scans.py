"""
When do the bounds apply?
=========================

The speciality theorem in P^5 is proved for d >> s >> t >> u, made explicit
as d > (2/3)s^4, s > (2/3)t^4, t > 408(u+1)^3. This script checks those
hypotheses exactly, then runs a small grid scan with property checks.
"""

from curvebounds import ScanSpec, ineq8_check, run_scan, thmB_regime
from curvebounds.scan import format_rows

# %%
v = thmB_regime(120, 24, 6, 2)
for clause in v.clauses:
    print(clause)

# %%
# Smallest admissible degrees for u = 2 are enormous.
t = 408 * 27 + 1
s = (2 * t**4) // 3 + 1
d = (2 * s**4) // 3 + 1
print("t =", t)
print("s has", len(str(s)), "digits; d has", len(str(d)), "digits")
print("regime:", thmB_regime(d, s, t, 2).satisfied, " inequality (8):", ineq8_check(d, s, t, 2))

# %%
# Scan the length-2 flag bound in P^4 and check that an integral bound
# happens exactly in the predicted residue classes.
spec = ScanSpec.from_mapping({
    "model": "Prop2", "r": "4", "s": "4", "d": "20..32",
    "checks": "equality-equivalence,identity-14",
})
result = run_scan(spec)
print(format_rows(result.rows, "table"))
print(result.counts)
