import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcat.errors import DomainError
from weylcat.weyl import (
    WeylElement,
    commutator,
    format_element,
    homogeneous_parts,
    is_even,
    parse,
)

N = 2


@st.composite
def elements(draw, laurent_t=False):
    out = WeylElement.zero(N)
    for _ in range(draw(st.integers(1, 3))):
        lo = -2 if laurent_t else 0
        a = [draw(st.integers(lo, 2)) for _ in range(N)]
        b = [draw(st.integers(0, 2)) for _ in range(N)]
        out = out + WeylElement.monomial(a, b, draw(st.integers(-3, 3)))
    return out


def t(i, p=1):
    return WeylElement.t(N, i, p)


def d(i, p=1):
    return WeylElement.d(N, i, p)


def test_canonical_commutators():
    for i in range(N):
        for j in range(N):
            assert commutator(d(i), t(j)) == WeylElement.const(N, int(i == j))
            assert commutator(t(i), t(j)).is_zero()
            assert commutator(d(i), d(j)).is_zero()


def test_parse_normal_orders():
    assert parse("d1*t1") == parse("t1*d1 + 1")
    assert str(parse("d1^2*t1^2", 1)) == "2 + 4*t1*d1 + t1^2*d1^2"


def test_laurent_rules():
    assert t(0, -1) * t(0) == WeylElement.const(N)
    # d t^{-1} = t^{-1} d - t^{-2}
    assert d(0) * t(0, -1) == t(0, -1) * d(0) - t(0, -2)
    with pytest.raises(DomainError):
        WeylElement.monomial([-1, 0], [-1, 0])


@settings(max_examples=60)
@given(elements(laurent_t=True), elements(laurent_t=True), elements(laurent_t=True))
def test_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(elements(), elements())
def test_distributive_and_grading(u, v):
    assert u * (v + u) == u * v + u * u
    for (deg, part, _), (deg2, part2, _) in [(p, q) for p in homogeneous_parts(u) for q in homogeneous_parts(v)]:
        prod = part * part2
        if not prod.is_zero():
            assert prod.degree() == tuple(x + y for x, y in zip(deg, deg2))


@given(elements(laurent_t=True))
def test_format_parse_round_trip(u):
    assert parse(format_element(u), N) == u


def test_evenness():
    assert is_even(parse("t1*d2 + t1^2", 2))
    assert not is_even(parse("t1 + 1", 2))


def test_parse_errors():
    with pytest.raises(DomainError):
        parse("")
    with pytest.raises(DomainError):
        parse("t3", 2)
    with pytest.raises(DomainError):
        parse("t1*x")
