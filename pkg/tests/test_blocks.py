import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcat import quiver as qv
from weylcat.blocks import (
    WeightModule,
    apply_element,
    block_of,
    box_around,
    composition_factors,
    dual,
    is_isomorphic,
    materialize,
    socle_series,
    std_module,
    weight_multiplicity,
    window_violations,
)
from weylcat.errors import DomainError
from weylcat.weyl import parse

H = Fraction(1, 2)


def test_block_of():
    b = block_of([0, 0])
    assert b.integral_set == (0, 1) and b.k == 2
    b = block_of([H, 3])
    assert b.frac == (H, 0) and b.integral_set == (1,)
    assert block_of([Fraction(1, 3), Fraction(2, 3)]).k == 0


def test_standard_reps():
    l0 = std_module("L", [0])
    assert l0.rep.dims == {(-1,): 0, (0,): 1}
    assert weight_multiplicity(l0, [5]) == 1 and weight_multiplicity(l0, [-1]) == 0
    pm1 = std_module("P", [-1])
    assert not pm1.rep.maps[("t", 0, (-1,))].is_zero() and pm1.rep.maps[("d", 0, (0,))].is_zero()
    p0 = std_module("P", [0])
    assert p0.rep.maps[("t", 0, (-1,))].is_zero() and not p0.rep.maps[("d", 0, (0,))].is_zero()
    assert weight_multiplicity(p0, [-7]) == 1
    f = std_module("F", [H, H])
    assert all(weight_multiplicity(f, [H + a, H + b]) == 1 for a in range(-3, 3) for b in range(-3, 3))


def test_duality():
    assert is_isomorphic(dual(std_module("F", [0])), std_module("P", [0]))
    assert is_isomorphic(dual(std_module("L", [0])), std_module("L", [0]))


def test_socle_series_lm3():
    lm1, l0 = ((-1,), 1), ((0,), 1)
    assert socle_series(std_module("P", [0])) == [[lm1], [l0]]
    assert socle_series(std_module("F", [0])) == [[l0], [lm1]]
    assert len(socle_series(std_module("L", [-1, 0]))) == 1


def test_apply_element():
    w = materialize(std_module("F", [0]), box_around(1, 3))
    # t d acts by the weight
    img, off = apply_element(parse("t1*d1", 1), w, [1], (2,))
    assert off == (2,) and img == (2,)
    img, _ = apply_element(parse("d1*t1 - t1*d1", 1), w, [1], (1,))
    assert img == (1,)
    lw = materialize(std_module("L", [-1]), box_around(1, 3))
    img, off = apply_element(parse("t1", 1), lw, [1], (-1,))
    assert off == (0,) and not any(img)  # t kills delta


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([[0, 0], [H, 0], [0, -1]]))
def test_random_windows_satisfy_relations(seed, mu):
    block = block_of(mu)
    m = WeightModule(block, qv.random_rep(block.k, random.Random(seed)))
    assert window_violations(materialize(m, box_around(2, 3))) == []


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_projectives_represent_weight_spaces(seed):
    # dim Hom(P(s), M) = dim M at corner s: the projectivity used in the splitting argument
    m = qv.random_rep(2, random.Random(seed))
    for s in m.quiver.vertices:
        assert len(qv.hom_space(qv.projective(2, s), m)) == m.dims[s]


def test_composition_factors():
    cf = composition_factors(std_module("F", [0, 0]))
    assert sum(cf.values()) == 4


def test_bad_inputs():
    with pytest.raises(DomainError):
        std_module("Q", [0])
    with pytest.raises(DomainError):
        std_module("Ps", block=block_of([0]), s=[1])
    with pytest.raises(DomainError):
        materialize(std_module("F", [0]), [(0, 1), (0, 1)])
