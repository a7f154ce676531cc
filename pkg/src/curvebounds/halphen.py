"""Halphen-type genus bounds for curves under flag conditions.

Covers the length-2 flag bound ``G(r; d, s)`` with its correction term R, the
P^4 bound ``G(4; s, t, u)`` (exact when u | t | s, an interval otherwise) and
the interval estimate for the P^5 bound ``G^h(5; d, s, t, u)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .castelnuovo import castelnuovo_bound
from .errors import DivisibilityError, DomainError, IntegralityError
from .numeric import binom, decompose, decompose_tu

__all__ = [
    "IntervalBound",
    "halphen_R",
    "halphen_value",
    "halphen_bound",
    "g4_divisible",
    "g4_penalty",
    "g4_interval",
    "gh_interval",
]


@dataclass(frozen=True)
class IntervalBound:
    """A rational quantity known to lie in ``[lo, hi]``, nominally ``center``."""

    lo: Fraction
    hi: Fraction
    center: Fraction

    def __post_init__(self):
        if not self.lo <= self.center <= self.hi:
            raise ValueError(f"need lo <= center <= hi, got {self.lo}, {self.center}, {self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def halphen_R(r: int, d: int, s: int) -> Fraction:
    """Correction term R of the length-2 flag genus bound."""
    dec = decompose(r, d, s)
    g = castelnuovo_bound(r - 1, s)
    eps, w, k, delta = dec.eps, dec.w, dec.k, dec.delta
    return (
        Fraction(1 + eps, 2 * s) * (s + 1 - eps - 2 * g)
        + w * (eps - delta)
        - k * binom(w + 1, 2)
        + binom(delta, 2)
    )


def halphen_value(r: int, d: int, s: int) -> Fraction:
    """Exact rational value of ``d^2/2s + (d/2s)(2G(r-1;s) - 2 - s) + R``."""
    g = castelnuovo_bound(r - 1, s)
    return Fraction(d * d, 2 * s) + Fraction(d, 2 * s) * (2 * g - 2 - s) + halphen_R(r, d, s)


def halphen_bound(r: int, d: int, s: int) -> int:
    """Maximal arithmetic genus of a degree d curve in P^r off surfaces of degree < s.

    Raises :class:`IntegralityError` rather than rounding a fractional value.
    """
    value = halphen_value(r, d, s)
    if value.denominator != 1:
        raise IntegralityError(f"G({r};{d},{s}) evaluated to non-integer {value}")
    return value.numerator


def _check_order(*xs: int) -> None:
    if xs[-1] < 1:
        raise DomainError(f"smallest degree must be >= 1, got {xs[-1]}")
    if any(a < b for a, b in zip(xs, xs[1:])):
        raise DomainError(f"degrees must be nonincreasing, got {xs}")


def g4_divisible(s: int, t: int, u: int) -> int:
    """``G(4; s, t, u)`` when u | t and t | s: ``s^2/2t + (s/2)(t/u + u - 5) + 1``."""
    _check_order(s, t, u)
    if t % u or s % t:
        raise DivisibilityError(f"need u | t | s, got s={s}, t={t}, u={u}")
    value = Fraction(s * s, 2 * t) + Fraction(s, 2) * (t // u + u - 5) + 1
    if value.denominator != 1:
        raise IntegralityError(f"G(4;{s},{t},{u}) evaluated to non-integer {value}")
    return value.numerator


def g4_penalty(t: int, u: int) -> Fraction:
    """``(u-1-beta)(1+beta)(u-1)/(u t)`` with ``t - 1 = alpha*u + beta``."""
    beta = decompose_tu(t, u).beta
    return Fraction((u - 1 - beta) * (1 + beta) * (u - 1), u * t)


def g4_interval(s: int, t: int, u: int, sign_facts: bool = True) -> IntervalBound:
    """Range of ``G(4; s, t, u)`` given only ``|rho_1 + 1| <= t^3/3``.

    ``center`` is ``s^2/2t + (s/2)(t/u + u - 5 - penalty)``, the midpoint of
    that envelope. With ``sign_facts`` the known signs of ``rho_1`` are
    applied: ``rho_1 <= 0`` when u | t, and ``rho_1 = 0`` exactly when
    moreover t | s, in which case the interval collapses to
    :func:`g4_divisible`.
    """
    _check_order(s, t, u)
    tu = decompose_tu(t, u)
    center = Fraction(s * s, 2 * t) + Fraction(s, 2) * (Fraction(t, u) + u - 5 - g4_penalty(t, u))
    spread = Fraction(t**3, 3)
    lo, hi = center - spread, center + spread
    if sign_facts and tu.u_divides_t:
        if s % t == 0:
            return IntervalBound(center + 1, center + 1, center + 1)
        hi = min(hi, center + 1)
    return IntervalBound(lo, hi, center)


def gh_interval(d: int, s: int, t: int, u: int) -> IntervalBound:
    """Range of the P^5 bound ``G^h(5; d, s, t, u)`` for ``|eta| <= 3/4``, ``|rho| <= 33 s^3/t^2``."""
    _check_order(d, s, t, u)
    center = (
        Fraction(d * d, 2 * s)
        + Fraction(d, 2) * (Fraction(s, t) + Fraction(t, u) + u - 6)
        + 1
    )
    half = Fraction(3, 4) * Fraction(d, 2) + Fraction(33 * s**3, t * t)
    return IntervalBound(center - half, center + half, center)
