"""Invariants of complete-intersection curves.

A curve cut out in P^r by hypersurfaces of degrees a_1, ..., a_{r-1} has
degree prod(a_i), speciality index sum(a_i) - r - 1 and is subcanonical, so
its genus is ``1 + degree*speciality/2``. These closed forms serve as ground
truth for every bound that claims to be attained by such curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import NamedTuple, Sequence

from .errors import DomainError

__all__ = ["CIType", "CIInvariants", "ci_invariants", "enumerate_ci_for_flag"]


@dataclass(frozen=True, order=True)
class CIType:
    """Multidegree of a complete-intersection curve in P^r, stored sorted."""

    r: int
    multidegree: tuple[int, ...]

    def __post_init__(self):
        degs = tuple(sorted(int(a) for a in self.multidegree))
        object.__setattr__(self, "multidegree", degs)
        if self.r < 3:
            raise DomainError(f"need r >= 3, got {self.r}")
        if len(degs) != self.r - 1:
            raise DomainError(f"a curve in P^{self.r} needs {self.r - 1} degrees, got {degs}")
        if degs[0] < 1:
            raise DomainError(f"degrees must be >= 1, got {degs}")

    @property
    def degree(self) -> int:
        return prod(self.multidegree)

    @property
    def speciality(self) -> int:
        return sum(self.multidegree) - self.r - 1

    @property
    def genus(self) -> int:
        twice = self.degree * self.speciality
        # degree*speciality is always even; see tests/test_ci.py
        return 1 + twice // 2

    @property
    def flag_degrees(self) -> tuple[int, ...]:
        """Degrees of the nominal flag, hypersurface first and curve last."""
        out, acc = [], 1
        for a in self.multidegree:
            acc *= a
            out.append(acc)
        return tuple(out)

    @property
    def degenerate(self) -> bool:
        """True when some entry is 1, i.e. the curve lies in a hyperplane."""
        return self.multidegree[0] == 1

    def __str__(self) -> str:
        return f"P^{self.r}({','.join(map(str, self.multidegree))})"


class CIInvariants(NamedTuple):
    degree: int
    speciality: int
    genus: int
    flag_degrees: tuple[int, ...]


def ci_invariants(ci: CIType) -> CIInvariants:
    return CIInvariants(ci.degree, ci.speciality, ci.genus, ci.flag_degrees)


def _divisors(n: int) -> list[int]:
    small = [k for k in range(1, int(n**0.5) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def enumerate_ci_for_flag(r: int, flag_degrees: Sequence[int]) -> list[CIType]:
    """All CI types in P^r whose nominal flag realizes ``flag_degrees``.

    ``flag_degrees`` lists the curve degree first, then surface, threefold,
    and so on, as in a flag condition ``(r; s_1, ..., s_l)``. When fewer than
    ``r - 1`` degrees are prescribed, the missing higher-dimensional entries
    range over all divisor chains. Returns ``[]`` when some prescribed degree
    does not divide the one before it.
    """
    targets = [int(x) for x in flag_degrees]
    if not 1 <= len(targets) <= r - 1 or any(x < 1 for x in targets):
        return []
    if any(a % b for a, b in zip(targets, targets[1:])):
        return []
    # quotients from the curve side: d/s, s/t, ..., then the lowest prescribed degree
    quotients = [a // b for a, b in zip(targets, targets[1:])]
    free_slots = r - 1 - len(targets)
    found: set[CIType] = set()

    def extend(rest: int, slots: int, acc: list[int]) -> None:
        if slots == 0:
            found.add(CIType(r, tuple(quotients + acc + [rest])))
            return
        for k in _divisors(rest):
            extend(rest // k, slots - 1, acc + [k])

    extend(targets[-1], free_slots, [])
    return sorted(found)
