"""Explicit numerical hypotheses under which the speciality bounds are asserted.

All comparisons are strict and exact; fractional thresholds stay rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import DomainError
from .speciality import FlagCondition, as_flag

__all__ = [
    "Clause",
    "RegimeVerdict",
    "thmB_regime",
    "prop1_regime",
    "prop1_iii_regime",
    "prop2_regime",
    "ineq8_check",
]

PROP1_NOTE = (
    "checks only the extra clause on s_1; the base hypotheses of the cited "
    "flag-genus theorem are not included"
)


@dataclass(frozen=True)
class Clause:
    name: str
    value: Fraction
    threshold: Fraction
    holds: bool

    def __str__(self) -> str:
        op = ">" if self.holds else "<="
        return f"{self.name}: {self.value} {op} {self.threshold}"


@dataclass(frozen=True)
class RegimeVerdict:
    clauses: tuple[Clause, ...]
    note: str = ""

    @property
    def satisfied(self) -> bool:
        return all(c.holds for c in self.clauses)

    @property
    def failed_clauses(self) -> list[str]:
        return [c.name for c in self.clauses if not c.holds]

    def as_dict(self) -> dict:
        return {"satisfied": self.satisfied, "failed_clauses": self.failed_clauses}


def _gt(name: str, value, threshold) -> Clause:
    value, threshold = Fraction(value), Fraction(threshold)
    return Clause(name, value, threshold, value > threshold)


def thmB_regime(d: int, s: int, t: int, u: int) -> RegimeVerdict:
    if not d >= s >= t >= u >= 1:
        raise DomainError(f"need d >= s >= t >= u >= 1, got {(d, s, t, u)}")
    if u >= 2:
        return RegimeVerdict((
            _gt("d > 2/3 s^4", d, Fraction(2, 3) * s**4),
            _gt("s > 2/3 t^4", s, Fraction(2, 3) * t**4),
            _gt("t > 408 (u+1)^3", t, 408 * (u + 1) ** 3),
        ))
    return RegimeVerdict((
        _gt("d > max(2/3 s^4, 12 (s+1)^2)", d, max(Fraction(2, 3) * s**4, 12 * (s + 1) ** 2)),
        _gt("s > t^2 - t", s, t * t - t),
        _gt("t >= 2", t, 1),
    ))


def prop1_regime(flag) -> RegimeVerdict:
    """``s_1 > 2(r-l)(l^2+2l+9) (s_2^3/s_3^2) s_2 ... s_l``, with ``s_3 = r-3`` when l = 2."""
    flag: FlagCondition = as_flag(flag)
    r, degs, l = flag.r, flag.degrees, flag.length
    if l < 2:
        raise DomainError("the clause needs a flag of length >= 2")
    s3 = degs[2] if l >= 3 else r - 3
    if s3 == 0:
        raise DomainError("l = 2 in P^3 puts s_3 = 0")
    s2 = degs[1]
    threshold = 2 * (r - l) * (l * l + 2 * l + 9) * Fraction(s2**3, s3 * s3) * prod(degs[1:])
    return RegimeVerdict((_gt("s_1 > prop1 threshold", degs[0], threshold),), PROP1_NOTE)


def prop1_iii_regime(r: int, s1: int, s2: int) -> bool:
    if r < 3:
        raise DomainError(f"need r >= 3, got {r}")
    return s1 > Fraction(2 * s2**4, r - 2)


def prop2_regime(r: int, d: int, s: int) -> bool:
    if r < 3:
        raise DomainError(f"need r >= 3, got {r}")
    return d > Fraction(2 * s**4, r - 2)


def ineq8_check(d: int, s: int, t: int, u: int) -> bool:
    """Worst case of ``(d/2) eta + rho < (d/2)(t/(u(u+1)) - 3u)``."""
    if not d >= s >= t >= u >= 1:
        raise DomainError(f"need d >= s >= t >= u >= 1, got {(d, s, t, u)}")
    lhs = Fraction(3, 4) * Fraction(d, 2) + Fraction(33 * s**3, t * t)
    rhs = Fraction(d, 2) * (Fraction(t, u * (u + 1)) - 3 * u)
    return lhs < rhs
