import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcat import quiver as qv
from weylcat.blocks import (
    WeightModule,
    block_of,
    box_around,
    is_isomorphic,
    materialize,
    std_module,
    window_violations,
)
from weylcat.errors import DomainError
from weylcat.localization import (
    Direction,
    conjugate_by_power,
    direct_limit_window,
    injective_hull,
    is_bijective,
    localization_map,
    localize,
    parse_directions,
    projective_cover,
    theta,
    twist,
    twisted_localize,
    window_to_rep,
)
from weylcat.weyl import parse

H = Fraction(1, 2)
T1, D1 = Direction(0, "t"), Direction(0, "d")


def test_theta_examples():
    d = parse("d1", 1)
    assert theta(d, [T1], [1]) == parse("d1 - t1^-1", 1)
    assert theta(d, [T1], [1]) == conjugate_by_power(d, T1, 1)
    assert theta(d, [T1], [0]) == d
    # Phi^x then Phi^-x is the identity on elements
    u = parse("t1^2*d1^3 + d1", 1)
    assert theta(theta(u, [T1], [H]), [T1], [-H]) == u


def test_theta_refuses_nonterminating():
    with pytest.raises(DomainError):
        theta(parse("d1^-1", 1), [T1], [H])


def test_parse_directions():
    assert parse_directions("d2,t1") == [Direction(0, "t"), Direction(1, "d")]
    for bad in ("x1", "t0", "t1,d1"):
        with pytest.raises(DomainError):
            parse_directions(bad)


def test_localize_examples():
    assert is_isomorphic(localize(std_module("L", [0]), [T1]), std_module("F", [0]))
    assert localize(std_module("L", [-1]), [T1]).is_zero()
    f0 = std_module("F", [0])
    assert is_bijective(f0, [T1]) and is_isomorphic(localize(f0, [T1]), f0)


def test_twist_examples():
    f = twist(std_module("F", [0]), [T1], [H])
    assert f.block == block_of([H]) and f.free_mult == 1
    assert twisted_localize(std_module("L", [0]), [T1], [H]).free_mult == 1
    with pytest.raises(DomainError):
        twist(std_module("L", [0]), [T1], [H])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["t", "d"]), st.sampled_from([H, Fraction(1, 3), 2, -1]))
def test_twist_inverse(seed, side, x):
    block = block_of([0, 0])
    m = localize(WeightModule(block, qv.random_rep(2, random.Random(seed))), [Direction(0, side)])
    g = [Direction(0, side)]
    back = twist(twist(m, g, [x]), g, [-x])
    assert back.block == m.block and is_isomorphic(back, m)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["t", "d"]))
def test_face_formula_matches_oracle(seed, side):
    block = block_of([0, 0])
    m = WeightModule(block, qv.random_rep(2, random.Random(seed)))
    gamma = [Direction(1, side)]
    box = box_around(2, 3)
    w = direct_limit_window(m, gamma, box)
    assert window_violations(w) == []
    loc = localize(m, gamma)
    assert w.spaces == materialize(loc, box).spaces
    assert qv.is_isomorphic(window_to_rep(w, block), loc.rep)


def test_localization_map_is_a_morphism():
    m = std_module("P", [0, 0])
    gamma = [T1, Direction(1, "d")]
    f = localization_map(m, gamma)
    loc = localize(m, gamma)
    for a in m.rep.quiver.arrows:
        assert f[qv.arrow_target(a)] @ m.rep.maps[a] == loc.rep.maps[a] @ f[a[2]]


def test_hulls_and_covers():
    l0 = std_module("L", [0])
    assert is_isomorphic(injective_hull(l0), std_module("F", [0]))
    assert is_isomorphic(projective_cover(l0), std_module("P", [0]))
    semisimple = std_module("L", [H])
    assert is_isomorphic(injective_hull(semisimple), semisimple)
    with pytest.raises(DomainError):
        projective_cover(l0, side="sp")
    with pytest.raises(DomainError):
        injective_hull(std_module("F", [0]))


def test_unique_socle_gives_indecomposable_localization():
    m = std_module("P", [0, 0])  # indecomposable with simple socle
    for gamma in ([T1], [D1], [T1, Direction(1, "t")]):
        out = twisted_localize(m, gamma, [H] * len(gamma))
        assert qv.is_indecomposable(out.rep)
