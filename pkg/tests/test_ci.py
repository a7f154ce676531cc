from itertools import combinations_with_replacement
from math import prod

import pytest

from curvebounds import (
    CIType,
    DivisibilityError,
    DomainError,
    acm_speciality,
    ci_invariants,
    enumerate_ci_for_flag,
    spec_from_genus,
    verify_sharp,
)
from curvebounds.sharp import castelnuovo_ci_surfaces
from oracles import ci_genus_via_hilbert_polynomial, ci_section_hilbert


def test_invariants_examples():
    assert ci_invariants(CIType(5, (2, 3, 4, 5))) == (120, 8, 481, (2, 6, 24, 120))
    inv = ci_invariants(CIType(3, (4, 2)))
    assert (inv.degree, inv.speciality, inv.genus) == (8, 2, 9)
    for r in range(3, 8):
        line = ci_invariants(CIType(r, (1,) * (r - 1)))
        assert (line.degree, line.speciality, line.genus) == (1, -2, 0)


def test_citype_validation():
    with pytest.raises(DomainError):
        CIType(4, (2, 3))
    with pytest.raises(DomainError):
        CIType(3, (0, 2))
    assert CIType(4, (6, 2, 3)).multidegree == (2, 3, 6)
    assert CIType(5, (1, 2, 3, 4)).degenerate


def _all_types(r, max_degree):
    def rec(start, slots, acc):
        if slots == 0:
            yield tuple(acc)
            return
        a = start
        while prod(acc) * a ** slots <= max_degree:
            yield from rec(a, slots - 1, acc + [a])
            a += 1
    yield from rec(1, r - 1, [])


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_parity_and_subcanonical(r):
    count = 0
    for degs in _all_types(r, 2000):
        ci = CIType(r, degs)
        assert (ci.degree * ci.speciality) % 2 == 0
        assert ci.degree * ci.speciality == 2 * ci.genus - 2
        assert spec_from_genus(ci.degree, ci.genus) == ci.speciality
        count += 1
    assert count > 10


@pytest.mark.parametrize("r", [3, 4, 5])
def test_genus_and_speciality_against_hilbert_series(r):
    for degs in _all_types(r, 300):
        ci = CIType(r, degs)
        assert ci.genus == ci_genus_via_hilbert_polynomial(degs, r)
        assert ci.speciality == acm_speciality(ci_section_hilbert(degs, r), ci.degree)


def test_enumerate_examples():
    assert enumerate_ci_for_flag(5, (120, 24, 6, 2)) == [CIType(5, (2, 3, 4, 5))]
    assert enumerate_ci_for_flag(3, (19, 3)) == []
    assert enumerate_ci_for_flag(4, (36, 12, 2)) == [CIType(4, (2, 3, 6))]


def test_enumerate_partial_flag():
    found = enumerate_ci_for_flag(4, (24, 6))
    assert found == [CIType(4, (1, 4, 6)), CIType(4, (2, 3, 4))]


@pytest.mark.parametrize("r", [3, 4, 5])
def test_flag_consistency(r):
    for degs in _all_types(r, 400):
        ci = CIType(r, degs)
        assert ci in enumerate_ci_for_flag(r, ci.flag_degrees[::-1])


def test_verify_sharp_examples():
    res = verify_sharp("ThmB", dict(d=120, s=24, t=6, u=2))
    assert (res.bound, res.ci, res.attained) == (8, CIType(5, (2, 3, 4, 5)), True)
    res = verify_sharp("ThmA", dict(d=18, s=3))
    assert (res.bound, res.ci.multidegree, res.attained) == (5, (3, 6), True)
    res = verify_sharp("Prop2", dict(r=4, d=24, s=4))
    assert (res.bound, res.ci.multidegree, res.attained) == (5, (2, 2, 6), True)
    res = verify_sharp("Prop1ii", dict(r=4, flag=(120, 24, 4)))
    assert (res.bound, res.ci.multidegree, res.attained) == (10, (4, 5, 6), True)


def test_verify_sharp_no_witness():
    with pytest.raises(DivisibilityError):
        verify_sharp("ThmA", dict(d=19, s=3))
    with pytest.raises(DivisibilityError):
        verify_sharp("Prop2", dict(r=4, d=30, s=3))
    with pytest.raises(DomainError):
        verify_sharp("Nope", {})


def test_castelnuovo_ci_surfaces():
    assert castelnuovo_ci_surfaces(4, 4) == [(2, 2)]
    assert castelnuovo_ci_surfaces(3, 7) == [(7,)]
    assert castelnuovo_ci_surfaces(4, 3) == []
