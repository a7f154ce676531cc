"""Castelnuovo's genus bound and the Hilbert functions of extremal curves.

The bound is computed in closed form; :func:`castelnuovo_hilbert` together
with :func:`genus_from_hilbert` gives an independent route to the same number
for arithmetically Cohen-Macaulay curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .numeric import binom

__all__ = [
    "HilbertFunction",
    "castelnuovo_bound",
    "castelnuovo_hilbert",
    "genus_from_hilbert",
    "acm_speciality",
]


@dataclass(frozen=True)
class HilbertFunction:
    """Hilbert function of a zero-dimensional scheme of length ``cap``.

    ``values`` lists h(0), h(1), ...; every index past the end has value
    ``cap``.
    """

    values: tuple[int, ...]
    cap: int

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        object.__setattr__(self, "values", vals)
        if not vals or vals[0] != 1:
            raise DomainError("a Hilbert function starts with h(0) = 1")
        if any(b < a for a, b in zip(vals, vals[1:])):
            raise DomainError(f"Hilbert function must be nondecreasing: {vals}")
        if vals[-1] > self.cap:
            raise DomainError(f"values exceed the cap {self.cap}: {vals}")

    @classmethod
    def from_values(cls, values: Sequence[int], cap: int | None = None) -> "HilbertFunction":
        values = tuple(values)
        return cls(values, values[-1] if cap is None else cap)

    def __call__(self, i: int) -> int:
        if i < 0:
            return 0
        if i < len(self.values):
            return self.values[i]
        return self.cap

    def stable_index(self) -> int:
        """First index from which h is constantly equal to the cap."""
        for i, x in enumerate(self.values):
            if x == self.cap:
                return i
        return len(self.values)

    def head(self, n: int) -> list[int]:
        return [self(i) for i in range(n)]


def _check_castelnuovo(n: int, s: int) -> None:
    if n < 2:
        raise DomainError(f"need n >= 2, got n={n}")
    if s < n:
        raise DomainError(f"a nondegenerate curve in P^{n} has degree >= {n}, got {s}")


def castelnuovo_bound(n: int, s: int) -> int:
    """Maximal arithmetic genus of a nondegenerate degree ``s`` curve in P^n.

    With ``s - 1 = w*(n-1) + v``, ``0 <= v < n-1``, the bound is
    ``C(w, 2)*(n-1) + w*v``.
    """
    _check_castelnuovo(n, s)
    w, v = divmod(s - 1, n - 1)
    return binom(w, 2) * (n - 1) + w * v


def castelnuovo_hilbert(n: int, s: int) -> HilbertFunction:
    """h(i) = min(s, i*(n-1) + 1), listed up to the first index reaching s."""
    _check_castelnuovo(n, s)
    values = []
    i = 0
    while True:
        h = min(s, i * (n - 1) + 1)
        values.append(h)
        if h == s:
            break
        i += 1
    return HilbertFunction(tuple(values), s)


def _check_cap(h: HilbertFunction, d: int) -> None:
    if h.cap != d:
        raise DomainError(f"Hilbert function cap {h.cap} differs from degree {d}")


def genus_from_hilbert(d: int, h: HilbertFunction) -> int:
    """Genus of an ACM curve of degree d: sum over i >= 1 of d - h(i)."""
    _check_cap(h, d)
    return sum(d - h(i) for i in range(1, h.stable_index() + 1))


def acm_speciality(h: HilbertFunction, d: int) -> int:
    """Speciality index ``max{i : h(i) < d} - 1`` of an ACM curve."""
    _check_cap(h, d)
    below = [i for i in range(h.stable_index() + 1) if h(i) < d]
    # empty only for d = 1 (a line), whose speciality is -2
    return max(below, default=-1) - 1
