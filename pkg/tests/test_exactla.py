from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcat.errors import DomainError
from weylcat.exactla import (
    LOCAL,
    Mat,
    Poly,
    companion,
    factor_poly,
    find_splitting_idempotent,
    is_idempotent,
    jordan_block,
    kernel,
    min_poly,
    radical,
    solve,
    to_q,
)

small = st.integers(-4, 4)


@st.composite
def matrices(draw, rows=None, cols=None):
    r = draw(st.integers(1, 4)) if rows is None else rows
    c = draw(st.integers(1, 4)) if cols is None else cols
    return Mat([[draw(small) for _ in range(c)] for _ in range(r)])


@st.composite
def square(draw):
    n = draw(st.integers(1, 4))
    return draw(matrices(n, n))


def test_floats_refused():
    with pytest.raises(DomainError):
        to_q(0.5)
    with pytest.raises(DomainError):
        to_q("1.5")
    assert to_q("3/6") == Fraction(1, 2)


@given(matrices())
def test_rank_nullity(m):
    ker = kernel(m)
    assert m.rank() + len(ker) == m.ncols
    for v in ker:
        assert all(x == 0 for x in m.apply(v))


@given(square(), square())
def test_det_multiplicative(a, b):
    if a.nrows == b.nrows:
        assert (a @ b).det() == a.det() * b.det()


@given(square())
def test_inverse(m):
    if m.det() != 0:
        assert m @ m.inverse() == Mat.identity(m.nrows)
    else:
        assert not m.is_invertible()


@given(square(), st.lists(small, min_size=4, max_size=4))
def test_solve(m, b):
    b = b[: m.nrows]
    x = solve(m, b)
    if x is not None:
        assert list(m.apply(x)) == [Fraction(v) for v in b]


@settings(max_examples=40)
@given(square())
def test_min_poly_annihilates(m):
    p = min_poly(m)
    assert p(m).is_zero()
    assert p.lead == 1


@given(st.lists(small, min_size=1, max_size=4))
def test_min_poly_of_companion(coeffs):
    p = Poly(coeffs + [1])
    assert min_poly(companion(p)) == p


def test_factor_poly():
    x = Poly.x()
    p = (x - Poly.const(1)) ** 2 * (x * x - Poly.const(2))
    facs = factor_poly(p)
    assert facs == sorted(facs, key=lambda f: (f[0].degree, f[0].coeffs))
    prod = Poly.const(1)
    for f, e in facs:
        prod = prod * f**e
    assert prod == p
    assert {(f.degree, e) for f, e in facs} == {(1, 2), (2, 1)}


def test_radical_of_upper_triangular():
    basis = [Mat([[1, 0], [0, 0]]), Mat([[0, 0], [0, 1]]), Mat([[0, 1], [0, 0]])]
    rad = radical(basis)
    assert len(rad) == 1
    assert rad[0][1, 0] == 0 and rad[0][0, 0] == 0 and rad[0][1, 1] == 0


def test_radical_checks_closure():
    with pytest.raises(DomainError):
        radical([Mat([[0, 1], [1, 0]])])


def test_local_verdicts():
    # Q[x]/x^2 and the field Q(sqrt 2) are local
    assert find_splitting_idempotent([Mat.identity(2), jordan_block(2, 0)]) == LOCAL
    c = companion(Poly([-2, 0, 1]))
    assert find_splitting_idempotent([Mat.identity(2), c]) == LOCAL


def test_splitting_matrix_algebra():
    units = [Mat([[int((i, j) == (a, b)) for j in range(2)] for i in range(2)]) for a in range(2) for b in range(2)]
    e = find_splitting_idempotent(units)
    assert e != LOCAL and is_idempotent(e)
    assert e != Mat.identity(2) and not e.is_zero()


def test_splitting_via_crt():
    # Q x Q embedded diagonally, generated by a non-scalar element
    basis = [Mat.identity(3), Mat.diag([1, 1, 0])]
    e = find_splitting_idempotent(basis)
    assert is_idempotent(e) and e not in (Mat.identity(3), Mat.zeros(3, 3))
