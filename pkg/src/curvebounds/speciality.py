"""Upper bounds for the speciality index e(C) of projective curves.

Every bound is returned as an exact rational. The speciality index itself is
an integer, so the effective bound is ``floor(value)``; when equality is
possible at all, ``value`` is necessarily an integer.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Any, Optional, Sequence

from .castelnuovo import castelnuovo_bound
from .ci import CIType
from .errors import DivisibilityError, DomainError, RegimeError
from .numeric import Decomposition, decompose

__all__ = [
    "FlagCondition",
    "BoundReport",
    "spec_from_genus",
    "thmA_bound",
    "thmB_bound",
    "thmB_genus_threshold",
    "prop1_bound_i",
    "prop1_bound_ii",
    "prop1_bound_iii",
    "prop2_bound",
    "prop2_equality_case",
    "lemma1_genus_bound",
    "lemma1_spec_bound",
    "lemma2_bound",
    "liaison_residual",
    "hodge_bound",
    "remark_iii_bound",
    "remark_iv_compose",
]


@dataclass(frozen=True)
class FlagCondition:
    """Flag condition ``(r; s_1, ..., s_l)``.

    A curve of degree s_1 in P^r lying in no integral i-dimensional
    subvariety of degree < s_i, for i = 2, ..., l.
    """

    r: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(int(x) for x in self.degrees)
        object.__setattr__(self, "degrees", degs)
        r, l = self.r, len(degs)
        if r < 3:
            raise DomainError(f"need r >= 3, got {r}")
        if not 1 <= l <= r - 1:
            raise DomainError(f"flag length must be in 1..{r - 1}, got {l}")
        if any(a < b for a, b in zip(degs, degs[1:])):
            raise DomainError(f"flag degrees must be nonincreasing: {degs}")
        if degs[-1] < r - l + 1:
            raise DomainError(f"need s_l >= r - l + 1 = {r - l + 1}, got {degs[-1]}")

    @property
    def length(self) -> int:
        return len(self.degrees)

    def __str__(self) -> str:
        return f"({self.r};{','.join(map(str, self.degrees))})"


@dataclass(frozen=True)
class BoundReport:
    value: Fraction
    equality_possible: bool
    witness: Optional[CIType] = None
    trace: Any = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.witness is not None and not self.equality_possible:
            raise ValueError("a witness requires equality_possible")

    @property
    def is_integer(self) -> bool:
        return self.value.denominator == 1

    @property
    def floor(self) -> int:
        return floor(self.value)


def _positive(**kw: int) -> None:
    for name, x in kw.items():
        if x < 1:
            raise DomainError(f"need {name} >= 1, got {x}")


def spec_from_genus(d: int, pa: int) -> int:
    """Largest e with ``d*e <= 2*pa - 2``."""
    _positive(d=d)
    return (2 * pa - 2) // d


def thmA_bound(d: int, s: int) -> BoundReport:
    """Space curves off surfaces of degree < s: ``e <= d/s + s - 4``."""
    _positive(d=d, s=s)
    value = Fraction(d, s) + s - 4
    divisible = d % s == 0
    witness = CIType(3, (s, d // s)) if divisible else None
    return BoundReport(value, divisible, witness, {"d": d, "s": s})


def _check_dstu(d: int, s: int, t: int, u: int) -> None:
    _positive(u=u)
    if not d >= s >= t >= u:
        raise DomainError(f"need d >= s >= t >= u, got {(d, s, t, u)}")


def thmB_bound(d: int, s: int, t: int, u: int) -> BoundReport:
    """Curves in P^5 under the flag (5; d, s, t, u): ``e <= d/s + s/t + t/u + u - 6``."""
    _check_dstu(d, s, t, u)
    value = Fraction(d, s) + Fraction(s, t) + Fraction(t, u) + u - 6
    chain = t % u == 0 and s % t == 0 and d % s == 0
    witness = CIType(5, (u, t // u, s // t, d // s)) if chain else None
    notes = ("witness is degenerate (u = 1)",) if chain and u == 1 else ()
    return BoundReport(value, chain, witness, {"d": d, "s": s, "t": t, "u": u}, notes)


def thmB_genus_threshold(d: int, s: int, t: int, u: int) -> Fraction:
    """Genus forced by equality in the Theorem B speciality bound."""
    _check_dstu(d, s, t, u)
    return (
        Fraction(d * d, 2 * s)
        + Fraction(d, 2) * (Fraction(s, t) + Fraction(t, u) + u - 6)
        + 1
    )


def as_flag(flag) -> FlagCondition:
    if isinstance(flag, FlagCondition):
        return flag
    r, degrees = flag
    return FlagCondition(r, tuple(degrees))


def prop1_bound_i(flag, s_next: Optional[int] = None) -> BoundReport:
    """``sum s_i/s_{i+1} - l - 2/(r-l) + 3/4`` over i = 1..l.

    ``s_{l+1}`` defaults to ``r - l``; for a full flag (l = r-1) that is 1.
    """
    flag = as_flag(flag)
    r, l = flag.r, flag.length
    if s_next is None:
        s_next = r - l
    if s_next < 1:
        raise DomainError(f"need s_next >= 1, got {s_next}")
    chain = flag.degrees + (s_next,)
    value = sum(Fraction(a, b) for a, b in zip(chain, chain[1:]))
    value += -l - Fraction(2, r - l) + Fraction(3, 4)
    return BoundReport(value, False, None, {"flag": flag.degrees, "r": r, "s_next": s_next})


def prop1_bound_ii(flag) -> BoundReport:
    """Full divisible flag: ``sum_{i<r-1} s_i/s_{i+1} + s_{r-1} - (r+1)``, sharp on CIs."""
    flag = as_flag(flag)
    r, degs = flag.r, flag.degrees
    if flag.length != r - 1:
        raise DomainError(f"need a full flag of length {r - 1}, got {flag}")
    if any(a % b for a, b in zip(degs, degs[1:])):
        raise DivisibilityError(f"need s_i | s_(i-1) along {flag}")
    quotients = [a // b for a, b in zip(degs, degs[1:])]
    value = Fraction(sum(quotients) + degs[-1] - (r + 1))
    witness = CIType(r, (degs[-1], *quotients))
    return BoundReport(value, True, witness, {"flag": degs, "r": r})


def prop1_bound_iii(s1: int, s2: int, G: int) -> Fraction:
    """``s1/s2 + (2G - 2 - s2)/s2`` with G the maximal genus for the shorter flag."""
    _positive(s2=s2)
    return Fraction(s1, s2) + Fraction(2 * G - 2 - s2, s2)


def _check_prop2(r: int, d: int, s: int) -> None:
    if r < 3 or s < r - 1:
        raise DomainError(f"need s >= r-1 >= 2, got r={r}, s={s}")
    if d < s:
        raise DomainError(f"need d >= s, got d={d}, s={s}")


def prop2_equality_case(r: int, d: int, s: int) -> bool:
    """Residue condition: ``v = 0 and eps = w``, or ``v >= 1 and eps = w(r-1-v) + 1``."""
    _check_prop2(r, d, s)
    dec = decompose(r, d, s)
    if dec.v == 0:
        return dec.eps == dec.w
    return dec.eps == dec.w * (r - 1 - dec.v) + 1


def prop2_bound(r: int, d: int, s: int) -> BoundReport:
    """Length-2 flag in P^r: ``e <= d/s + (2G(r-1;s) - 2 - s)/s``."""
    _check_prop2(r, d, s)
    g = castelnuovo_bound(r - 1, s)
    value = Fraction(d, s) + Fraction(2 * g - 2 - s, s)
    dec: Decomposition = decompose(r, d, s)
    return BoundReport(value, prop2_equality_case(r, d, s), None, dec)


def lemma1_genus_bound(r: int, d: int, s: int, pi: int) -> Fraction:
    """Genus of a degree d curve on a degree s surface with sectional genus pi."""
    if r < 3 or s < r - 1:
        raise DomainError(f"need s >= r-1 >= 2, got r={r}, s={s}")
    if d < s * s:
        raise DomainError(f"need d >= s^2 = {s * s}, got d={d}")
    return Fraction(d * d, 2 * s) + Fraction(d, 2 * s) * (2 * pi - 2 - s) + Fraction(s**3, r - 2)


def lemma1_threshold(r: int, s: int) -> Fraction:
    """Degree beyond which the sectional-genus speciality bound holds: ``2 s^4/(r-2)``."""
    return Fraction(2 * s**4, r - 2)


def lemma1_spec_bound(d: int, s: int, pi: int, r: int, strict: bool = True) -> Fraction:
    """``e <= d/s + (2 pi - 2 - s)/s`` for ``d > 2 s^4/(r-2)``.

    Outside that range raises :class:`RegimeError`, or only warns when
    ``strict`` is false.
    """
    _positive(d=d, s=s)
    if r < 3:
        raise DomainError(f"need r >= 3, got {r}")
    if not d > lemma1_threshold(r, s):
        msg = f"d={d} does not exceed 2s^4/(r-2) = {lemma1_threshold(r, s)}"
        if strict:
            raise RegimeError(msg)
        warnings.warn(msg, stacklevel=2)
    return Fraction(d, s) + Fraction(2 * pi - 2 - s, s)


def lemma2_bound(d: int, s: int, t: int, kT: int) -> BoundReport:
    """Curve on a surface that is a CI on an ACM threefold with ``omega_T = O_T(kT)``."""
    _positive(d=d, t=t)
    if s < t:
        raise DomainError(f"need s >= t, got s={s}, t={t}")
    if s % t:
        raise DivisibilityError(f"need t | s, got s={s}, t={t}")
    value = Fraction(d, s) + s // t + kT
    return BoundReport(value, d % s == 0, None, {"d": d, "s": s, "t": t, "kT": kT})


def liaison_residual(d: int, s: int, t: int, kT: int, e: int) -> int:
    """Degree of the residual curve in the second linkage: ``d - s(e - kT - s/t)``."""
    _positive(t=t)
    if s % t:
        raise DivisibilityError(f"need t | s, got s={s}, t={t}")
    return d - s * (e - kT - s // t)


def hodge_bound(d: int, s: int, pi: int) -> Fraction:
    _positive(d=d, s=s)
    return Fraction(d * d, 2 * s) + Fraction(d, 2 * s) * (2 * pi - 2 - s) + 1


def remark_iii_bound(r: int, d: int) -> BoundReport:
    """Nondegenerate curves in P^r: ``e <= (d - r - 1)/(r - 1)``.

    Equality exactly for Castelnuovo curves with ``d = 2 mod (r-1)``.
    """
    if r < 3:
        raise DomainError(f"need r >= 3, got {r}")
    if d < r:
        raise DomainError(f"nondegenerate curves in P^{r} have degree >= {r}, got {d}")
    value = Fraction(d - r - 1, r - 1)
    return BoundReport(value, (d - 2) % (r - 1) == 0, None, {"r": r, "d": d})


def remark_iv_compose(s1: int, s2: int, e_prev) -> Fraction:
    """Maximal speciality one flag step up: ``s1/s2 + e_prev - 1``."""
    _positive(s2=s2)
    if s1 % s2:
        warnings.warn(f"s2={s2} does not divide s1={s1}", stacklevel=2)
    return Fraction(s1, s2) + Fraction(e_prev) - 1
