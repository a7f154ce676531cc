from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from curvebounds import Branch, DomainError, decompose, decompose_tu, format_rational, parse_rational


@pytest.mark.parametrize(
    "r, d, s, expected",
    [
        (3, 19, 3, dict(m=6, eps=0, w=2, v=0, branch=Branch.LOW, k=0, delta=0)),
        (4, 24, 4, dict(m=5, eps=3, w=1, v=1, branch=Branch.HIGH, k=2, delta=0)),
        (4, 41, 4, dict(m=10, eps=0, w=1, v=1, branch=Branch.LOW, k=0, delta=0)),
    ],
)
def test_decompose_examples(r, d, s, expected):
    dec = decompose(r, d, s)
    for key, val in expected.items():
        assert getattr(dec, key) == val, key


@pytest.mark.parametrize("r, d, s", [(2, 10, 3), (4, 10, 2), (3, 0, 3)])
def test_decompose_domain(r, d, s):
    with pytest.raises(DomainError):
        decompose(r, d, s)


@st.composite
def triples(draw):
    r = draw(st.integers(3, 12))
    s = draw(st.integers(r - 1, 200))
    d = draw(st.integers(1, 10**6))
    return r, d, s


@given(triples())
def test_decompose_reconstructs(rds):
    r, d, s = rds
    dec = decompose(r, d, s)
    assert dec.m * s + dec.eps + 1 == d and 0 <= dec.eps <= s - 1
    assert dec.w * (r - 2) + dec.v + 1 == s and 0 <= dec.v < r - 2
    assert dec.w >= 1
    high = dec.eps >= dec.w * (r - 1 - dec.v)
    assert (dec.branch is Branch.HIGH) == high
    if high:
        assert dec.eps + r - 2 - dec.v == (dec.w + 1) * dec.k + dec.delta
        assert 0 <= dec.delta < dec.w + 1
    else:
        assert dec.eps == dec.k * dec.w + dec.delta
        assert 0 <= dec.delta < dec.w


def test_decompose_tu_examples():
    a = decompose_tu(6, 2)
    assert (a.alpha, a.beta, a.u_divides_t) == (2, 1, True)
    b = decompose_tu(7, 2)
    assert (b.alpha, b.beta, b.u_divides_t) == (3, 0, False)
    c = decompose_tu(11, 1)
    assert (c.alpha, c.beta, c.u_divides_t) == (10, 0, True)


@given(st.integers(1, 500), st.integers(0, 500))
def test_decompose_tu_divisibility(u, extra):
    t = u + extra
    tu = decompose_tu(t, u)
    assert tu.alpha * u + tu.beta == t - 1
    assert tu.u_divides_t == (t % u == 0)


def test_decompose_tu_domain():
    with pytest.raises(DomainError):
        decompose_tu(3, 0)
    with pytest.raises(DomainError):
        decompose_tu(2, 3)


@given(st.fractions())
def test_rational_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_rational_normalized():
    x = Fraction(6, -4)
    assert (x.numerator, x.denominator) == (-3, 2)
    assert format_rational(Fraction(1, 3)) == "1/3"
