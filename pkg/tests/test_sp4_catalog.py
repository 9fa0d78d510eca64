import random
from fractions import Fraction

import pytest

from weylcat import quiver as qv
from weylcat.blocks import WeightModule, dual
from weylcat.errors import DomainError
from weylcat.exactla import Mat, Poly
from weylcat.quiver import COMPASS_VERTEX
from weylcat.sp4_catalog import (
    HW_BLOCK,
    INF,
    CosetType,
    a_series,
    b_series,
    build,
    catalog,
    check_admissible,
    compass_simple,
    coset_type,
    figure1,
    identify,
    invert_parameter,
    jordan_series,
    parse_coset_type,
    rotate,
    string_rep,
    support_diagram,
)

H = Fraction(1, 2)


def test_coset_types():
    assert coset_type(0, 3) == CosetType("HighestWeight")
    assert coset_type(H, 0) == CosetType("SemiPlane", "NW-ES")
    assert coset_type(0, H) == CosetType("SemiPlane", "NE-SW")
    assert coset_type(H, Fraction(1, 3)) == CosetType("Cuspidal")
    assert parse_coset_type("ne-sw").orientation == "NE-SW"
    with pytest.raises(DomainError):
        parse_coset_type("elliptic")


def test_admissibility():
    check_admissible(["N", "E", "S", "W", "N"])
    for bad in (["N", "S"], ["N", "E", "N"], ["N", "Q"]):
        with pytest.raises(DomainError):
            check_admissible(bad)


def test_string_modules():
    rep = string_rep(["N", "E", "S"])
    assert rep.is_valid() and qv.is_indecomposable(rep)
    assert [sorted(qv.COMPASS[v] for v in layer) for layer in qv.socle_layers(rep)][0] == ["N", "S"]
    m = build("N", ("E",), 2)
    assert sum(m.rep.dims.values()) == 1 + 8 + 1
    assert qv.is_indecomposable(m.rep)


def test_rotation_has_order_four():
    m = build("N", ("E", "S"), 1)
    assert qv.is_isomorphic(rotate(m, 4).rep, m.rep)
    assert qv.is_isomorphic(rotate(compass_simple("N")).rep, compass_simple("E").rep)


@pytest.mark.parametrize("c", [Fraction(0), Fraction(1), Fraction(-1), H, INF, Poly([-2, 0, 1])])
def test_jordan_series(c):
    for k in (1, 2):
        m = jordan_series("N", k, c)
        lab = qv.classify(m.rep)
        assert lab.kind == "A" and lab.defect == 0
        expected = INF if c == INF else str(c)
        assert lab.parameter == expected
        assert qv.is_isomorphic(b_series(k, c).rep, dual(a_series(k, c)).rep)


def test_parameter_inversion():
    assert invert_parameter(Fraction(0)) == INF and invert_parameter(INF) == 0
    assert invert_parameter(Fraction(2)) == H
    assert invert_parameter(Poly([-2, 0, 1])) == Poly([-H, 0, 1])


def test_degenerate_tube_is_a_string():
    assert qv.is_isomorphic(jordan_series("N", 2, 0).rep, build("N", ("E", "S", "W"), 1).rep)


def test_semiplane_and_cuspidal():
    entries = catalog(CosetType("SemiPlane", "NW-ES"))
    assert [e.label for e in entries] == ["(1,0)", "(0,1)", "(1,1)-", "(1,1)+"]
    cusp = catalog(CosetType("Cuspidal"))
    assert len(cusp) == 1 and cusp[0].module.free_mult == 1
    with pytest.raises(DomainError):
        catalog(CosetType("SemiPlane", "NW-ES"), x=[1])


def test_catalog_json_is_exact():
    for e in catalog(CosetType("HighestWeight"), kmax=1):
        data = e.to_json()
        assert all("." not in v for v in data["params"].values())


def test_diagrams():
    pic = support_diagram(compass_simple("N"), 4, "odd")
    assert "1" in pic and set(pic) <= set(" .1\\/X\n")
    assert figure1(8).count("*") == 1
    with pytest.raises(DomainError):
        support_diagram(compass_simple("N"), -1)


@pytest.mark.parametrize("labels", [["N", "E"], ["N", "E", "S"], ["W", "N", "E", "S", "W"], ["S", "W", "N", "E", "S", "W"]])
def test_string_duality(labels):
    # (X_T / X)^* is the string starting at T_1
    rep = string_rep(labels)
    v = COMPASS_VERTEX[labels[0]]
    sub = {u: [] for u in rep.quiver.vertices}
    sub[v] = [tuple(Fraction(int(i == 0)) for i in range(rep.dims[v]))]
    assert qv.is_isomorphic(qv.dual(qv.quotient(rep, sub)), string_rep(labels[1:]))


@pytest.mark.parametrize("seed", [0, 1])
def test_small_indecomposables_are_catalogued(seed):
    # random V_2 reps with vertex dims <= 2 split into catalogued pieces
    rng = random.Random(seed)
    for _ in range(25):
        if rng.random() < 0.5:
            rep = qv.random_rep(2, rng, max_dim=2, generators=3)
        else:
            dims = {v: rng.randint(1, 2) for v in qv.vk(2).vertices}
            live = qv.A_ARROWS if rng.random() < 0.5 else qv.B_ARROWS
            maps = {}
            for a in qv.vk(2).arrows:
                r, c = dims[qv.arrow_target(a)], dims[a[2]]
                maps[a] = Mat([[rng.randint(-2, 2) if a in live else 0 for _ in range(c)] for _ in range(r)], c)
            rep = qv.Rep(2, dims, maps)
        for x in qv.decompose_flat(rep):
            assert identify(WeightModule(HW_BLOCK, x)) is not None, x
