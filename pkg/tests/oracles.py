"""Reference computations that do not share code paths with the library."""

from fractions import Fraction
from math import comb, prod

from curvebounds.castelnuovo import HilbertFunction


def series_coeffs(multidegree, nvars, upto):
    """Coefficients of prod(1 - t^a) / (1 - t)^nvars up to t^upto (Koszul)."""
    num = [1] + [0] * upto
    for a in multidegree:
        nxt = num[:]
        for i in range(a, upto + 1):
            nxt[i] -= num[i - a]
        num = nxt
    denom = [comb(i + nvars - 1, nvars - 1) for i in range(upto + 1)]
    return [sum(num[j] * denom[i - j] for j in range(i + 1)) for i in range(upto + 1)]


def ci_genus_via_hilbert_polynomial(multidegree, r):
    """Genus of a CI curve in P^r read off its Hilbert polynomial d*n + 1 - g."""
    d = prod(multidegree)
    n = sum(multidegree) + 5  # beyond the regularity
    h = series_coeffs(multidegree, r + 1, n)
    return d * n + 1 - h[n]


def ci_section_hilbert(multidegree, r):
    """Hilbert function of the hyperplane section (points in P^(r-1))."""
    d = prod(multidegree)
    n = sum(multidegree) + 2
    h = series_coeffs(multidegree, r, n)
    assert h[-1] == d
    return HilbertFunction.from_values(h, d)


def gruson_peskine(d, s):
    """Classical maximal genus of space curves off surfaces of degree < s."""
    rem = (-d) % s
    return Fraction(d * (d + s * s - 4 * s), 2 * s) + 1 - Fraction(rem * (s - rem) * (s - 1), 2 * s)


def castelnuovo_by_sum(n, s):
    """Castelnuovo genus as sum over i >= 1 of max(0, s - i(n-1) - 1)."""
    return sum(max(0, s - i * (n - 1) - 1) for i in range(1, s + 1))
