import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcat import quiver as qv
from weylcat.errors import DomainError, RelationError
from weylcat.exactla import Mat, random_invertible

V1_PLUS = qv.Rep(1, {(-1,): 1, (0,): 1}, {("t", 0, (-1,)): Mat([[1]])})
V1_MINUS = qv.Rep(1, {(-1,): 1, (0,): 1}, {("d", 0, (0,)): Mat([[1]])})


def conjugated(rep, rng):
    change = {v: random_invertible(d, rng) for v, d in rep.dims.items()}
    return qv.conjugate(rep, change)


def test_quiver_shape():
    for k in range(4):
        q = qv.vk(k)
        assert len(q.vertices) == 2**k
        assert len(q.arrows) == k * 2**k
    assert qv.bits_vertex(qv.vertex_bits((-1, 0))) == (-1, 0)


def test_relation_violation_names_path():
    bad = qv.Rep(1, {(-1,): 1, (0,): 1}, {("t", 0, (-1,)): Mat([[1]]), ("d", 0, (0,)): Mat([[1]])})
    with pytest.raises(RelationError) as info:
        bad.check()
    assert info.value.path
    assert not bad.is_valid()


def test_commutativity_relation():
    # two routes around a square of V_2 must agree
    dims = {v: 1 for v in qv.vk(2).vertices}
    maps = {a: Mat([[0]]) for a in qv.vk(2).arrows}
    maps[("t", 0, (-1, -1))] = Mat([[1]])
    maps[("t", 1, (0, -1))] = Mat([[1]])
    assert not qv.Rep(2, dims, maps).is_valid()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2))
def test_random_reps_valid_and_dual_involution(seed, k):
    rep = qv.random_rep(k, random.Random(seed))
    assert rep.is_valid()
    assert qv.dual(qv.dual(rep)) == rep or qv.is_isomorphic(qv.dual(qv.dual(rep)), rep)


def test_projectives():
    for k in (1, 2):
        for s in qv.vk(k).vertices:
            p = qv.projective(k, s)
            assert p.is_valid()
            assert qv.top(p) == {s: 1}
            assert qv.is_indecomposable(p)


def test_v1_spec_example():
    rng = random.Random(5)
    rep = conjugated(qv.direct_sum(V1_PLUS, V1_MINUS), rng)
    labels = sorted(str(qv.classify(x)) for x, _ in qv.decompose(rep))
    assert labels == ["(1,1)+", "(1,1)-"]


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_krull_schmidt_property(seed):
    rng = random.Random(seed)
    pool = [V1_PLUS, V1_MINUS, qv.simple(1, (0,)), qv.simple(1, (-1,))]
    chosen = [rng.choice(pool) for _ in range(rng.randint(1, 4))]
    rep = conjugated(qv.direct_sum(*chosen), rng)
    es = []
    parts = qv.decompose(rep, idempotents=es)
    assert sum(m for _, m in parts) == len(chosen)
    assert all(e @ e == e for e in es)
    assert qv.is_isomorphic(qv.direct_sum(*[x for x, m in parts for _ in range(m)]), rep)


def test_isomorphism_is_explicit():
    rng = random.Random(1)
    x = qv.projective(2, (0, 0))
    y = conjugated(x, rng)
    f = qv.isomorphism(x, y)
    assert f is not None
    for a in x.quiver.arrows:
        src, tgt = a[2], qv.arrow_target(a)
        assert f[tgt] @ x.maps[a] == y.maps[a] @ f[src]


def test_v2_labels():
    assert qv.classify(qv.projective(2, (0, 0))).kind == "rho"
    n_simple = qv.simple(2, (-1, -1))
    lab = qv.classify(n_simple)
    # sources minus sinks: a sink simple is preprojective
    assert lab.kind == "A" and lab.defect == -1 and lab.name == "A-preprojective"


def test_wild_rank_decomposes_but_is_not_classified():
    rng = random.Random(2)
    p = qv.projective(3, (0, 0, 0))
    rep = conjugated(qv.direct_sum(p, qv.simple(3, (-1, 0, -1))), rng)
    parts = qv.decompose(rep)
    assert sum(m for _, m in parts) == 2
    lab = qv.classify(parts[0][0])
    assert lab.kind == "generic" and lab.notice


def test_classify_refuses_decomposable():
    with pytest.raises(DomainError):
        qv.classify(qv.direct_sum(V1_PLUS, V1_MINUS))


def test_socle_layers_of_projective():
    layers = qv.socle_layers(qv.projective(1, (0,)))
    assert layers == [{(-1,): 1}, {(0,): 1}]


def test_hom_dimension_of_regular_family():
    # H(lambda, mu) regular modules in different tubes have no maps between them
    def tube(c):
        dims = {v: 1 for v in qv.vk(2).vertices}
        maps = {a: Mat([[0]]) for a in qv.vk(2).arrows}
        for a in qv.A_ARROWS:
            maps[a] = Mat([[1]])
        maps[qv.A_ARROWS[0]] = Mat([[Fraction(c)]])
        return qv.Rep(2, dims, maps)

    one, two = tube(1), tube(2)
    assert one.is_valid() and two.is_valid()
    assert qv.classify(one).parameter != qv.classify(two).parameter
    assert not qv.hom_space(one, two)
