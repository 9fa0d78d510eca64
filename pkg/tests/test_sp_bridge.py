from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcat.blocks import box_around, materialize, std_module
from weylcat.errors import DomainError
from weylcat.exactla import Mat
from weylcat.sp_bridge import (
    SpElement,
    a_weight,
    apply_u,
    bracket,
    kernel_elements,
    omega,
    omega_u,
    sp_basis,
    sp_support,
    sp_weight,
)
from weylcat.weyl import commutator, is_even, parse

H = Fraction(1, 2)
E11 = Mat([[1]])
Z1 = Mat([[0]])


def test_omega_on_sp2():
    assert omega(SpElement(1, Z1, E11, Z1)) == parse("t1^2", 1)
    assert omega(SpElement(1, E11, Z1, Z1)) == parse("t1*d1 + 1/2", 1)
    # -1/4 on the C block keeps [omega(B), omega(C)] in step with [B, C]
    assert omega(SpElement(1, Z1, Z1, E11)) == parse("-1/4*d1^2", 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_brackets_preserved(n):
    basis = sp_basis(n)
    assert len(basis) == n * (2 * n + 1)
    for x in basis:
        assert is_even(omega(x))
        for y in basis:
            assert omega(bracket(x, y)) == commutator(omega(x), omega(y))


@settings(max_examples=30)
@given(st.lists(st.integers(-2, 2), min_size=10, max_size=10), st.lists(st.integers(-2, 2), min_size=10, max_size=10))
def test_omega_linear_and_bracket_on_combinations(cx, cy):
    basis = sp_basis(2)
    x = y = SpElement(2, Mat.zeros(2, 2), Mat.zeros(2, 2), Mat.zeros(2, 2))
    for c, b in zip(cx, basis):
        x = x + b.scale(c)
    for c, b in zip(cy, basis):
        y = y + b.scale(c)
    assert omega(bracket(x, y)) == commutator(omega(x), omega(y))


def test_symplectic_validation():
    with pytest.raises(DomainError):
        SpElement(2, Mat.zeros(2, 2), Mat([[0, 1], [0, 0]]), Mat.zeros(2, 2))


def test_weights():
    assert sp_weight([0, -1]) == (H, -H)
    assert a_weight(sp_weight([H, 3])) == (H, 3)


def test_kernel_elements_act_as_zero():
    basis = sp_basis(2)
    w = materialize(std_module("F", [H, 0]), box_around(2, 5))
    for u in kernel_elements(2, 4, seed=1):
        assert omega_u(u, basis).is_zero()
        out = apply_u(u, basis, w, [1], (0, 0))
        assert all(not any(v) for v in out.values())


def test_sp_support_cosets():
    m = std_module("L", [0, 0])
    even = sp_support(m, "even", box_around(2, 2))
    odd = sp_support(m, "odd", box_around(2, 2))
    assert set(even).isdisjoint(odd)
    assert all(sum(w) % 1 == 0 for w in even)
    assert (H, H) in even and (Fraction(3, 2), H) in odd
    with pytest.raises(DomainError):
        sp_support(m, [H, 0], box_around(2, 1))
