"""Check that a bound is attained by its canonical complete-intersection witness."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import prod

from .castelnuovo import castelnuovo_bound
from .ci import CIType
from .errors import DivisibilityError, DomainError
from .speciality import (
    prop1_bound_ii,
    prop2_bound,
    spec_from_genus,
    thmA_bound,
    thmB_bound,
)

__all__ = ["Model", "SharpnessResult", "verify_sharp", "castelnuovo_ci_surfaces"]


class Model(enum.Enum):
    THM_A = "ThmA"
    THM_B = "ThmB"
    PROP1_II = "Prop1ii"
    PROP2 = "Prop2"

    @classmethod
    def parse(cls, name) -> "Model":
        if isinstance(name, cls):
            return name
        for m in cls:
            if m.value.lower() == str(name).lower():
                return m
        raise DomainError(f"unknown sharpness model {name!r}")


@dataclass(frozen=True)
class SharpnessResult:
    bound: Fraction
    ci: CIType
    attained: bool
    subcanonical: bool


def castelnuovo_ci_surfaces(r: int, s: int) -> list[tuple[int, ...]]:
    """Nondegenerate CI surfaces of degree s in P^r with Castelnuovo sectional genus.

    Returned as sorted multidegrees of length ``r - 2``; the sectional genus
    of type ``a`` is ``1 + s*(sum(a) - r)/2``.
    """
    target = castelnuovo_bound(r - 1, s)
    out = []
    for degs in combinations_with_replacement(range(2, s + 1), r - 2):
        if prod(degs) == s and 2 + s * (sum(degs) - r) == 2 * target:
            out.append(degs)
    return out


def _witness(model: Model, params: dict):
    if model is Model.THM_A:
        report = thmA_bound(params["d"], params["s"])
    elif model is Model.THM_B:
        report = thmB_bound(params["d"], params["s"], params["t"], params["u"])
    elif model is Model.PROP1_II:
        report = prop1_bound_ii((params["r"], params["flag"]))
    else:
        r, d, s = params["r"], params["d"], params["s"]
        report = prop2_bound(r, d, s)
        if d % s:
            raise DivisibilityError(f"no CI witness: s={s} does not divide d={d}")
        surfaces = castelnuovo_ci_surfaces(r, s)
        if not surfaces:
            raise DivisibilityError(f"no CI surface of degree {s} in P^{r} with maximal sectional genus")
        return report.value, CIType(r, surfaces[0] + (d // s,))
    if report.witness is None:
        raise DivisibilityError(f"no canonical CI witness for {model.value} at {params}")
    return report.value, report.witness


def verify_sharp(model, params: dict) -> SharpnessResult:
    """Build the canonical witness CI and compare its speciality with the bound.

    ``params`` keys: ThmA ``d, s``; ThmB ``d, s, t, u``; Prop1ii ``r, flag``;
    Prop2 ``r, d, s``.
    """
    model = Model.parse(model)
    bound, ci = _witness(model, params)
    subcanonical = spec_from_genus(ci.degree, ci.genus) == ci.speciality
    return SharpnessResult(bound, ci, Fraction(ci.speciality) == bound, subcanonical)
