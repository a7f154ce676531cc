"""Exact rationals and the Euclidean decompositions behind the genus formulas.

Rationals are plain :class:`fractions.Fraction` values: always normalized,
denominator positive, arithmetic and comparison exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError

Rational = Fraction

__all__ = [
    "Rational",
    "Branch",
    "Decomposition",
    "TUDecomposition",
    "decompose",
    "decompose_tu",
    "binom",
    "as_rational",
    "parse_rational",
    "format_rational",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when n < k."""
    if n < k or k < 0:
        return 0
    return comb(n, k)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point input is not accepted; pass int or Fraction")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """Serialize as ``p/q`` (bare ``p`` for integers)."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class Branch(enum.Enum):
    LOW = "Low"
    HIGH = "High"


@dataclass(frozen=True)
class Decomposition:
    """Division data of a triple (r, d, s).

    ``d - 1 = m*s + eps`` and ``s - 1 = w*(r-2) + v``; ``(k, delta)`` come
    from dividing ``eps`` by ``w`` (low branch) or ``eps + r - 2 - v`` by
    ``w + 1`` (high branch).
    """

    r: int
    d: int
    s: int
    m: int
    eps: int
    w: int
    v: int
    branch: Branch
    k: int
    delta: int

    def as_dict(self) -> dict:
        return {
            "r": self.r, "d": self.d, "s": self.s, "m": self.m, "eps": self.eps,
            "w": self.w, "v": self.v, "branch": self.branch.value,
            "k": self.k, "delta": self.delta,
        }


def decompose(r: int, d: int, s: int) -> Decomposition:
    if r < 3:
        raise DomainError(f"need r >= 3, got r={r}")
    if s < r - 1:
        raise DomainError(f"need s >= r-1, got r={r}, s={s}")
    if d < 1:
        raise DomainError(f"need d >= 1, got d={d}")
    m, eps = divmod(d - 1, s)
    w, v = divmod(s - 1, r - 2)
    if eps < w * (r - 1 - v):
        branch = Branch.LOW
        k, delta = divmod(eps, w)
    else:
        branch = Branch.HIGH
        k, delta = divmod(eps + r - 2 - v, w + 1)
    return Decomposition(r, d, s, m, eps, w, v, branch, k, delta)


@dataclass(frozen=True)
class TUDecomposition:
    """``t - 1 = alpha*u + beta`` with ``0 <= beta < u``."""

    t: int
    u: int
    alpha: int
    beta: int

    @property
    def u_divides_t(self) -> bool:
        return self.beta == self.u - 1


def decompose_tu(t: int, u: int) -> TUDecomposition:
    if u < 1:
        raise DomainError(f"need u >= 1, got u={u}")
    if t < u:
        raise DomainError(f"need t >= u, got t={t}, u={u}")
    alpha, beta = divmod(t - 1, u)
    return TUDecomposition(t, u, alpha, beta)
