"""Executable acceptance checks.

Each ``check_*`` function returns ``(passed, detail)``; :data:`CHECKS` lists
them in order.  ``weylcat selftest`` and ``tests/test_acceptance.py`` both
run this list.
"""

from __future__ import annotations

import random
from fractions import Fraction
from importlib import resources
from itertools import combinations, product

from . import quiver as qv
from .blocks import (
    WeightModule,
    block_of,
    box_around,
    dual,
    materialize,
    socle_series,
    std_module,
    weight_multiplicity,
    window_violations,
)
from .errors import DomainError
from .exactla import Mat, is_idempotent, random_invertible
from .localization import (
    Direction,
    conjugate_by_power,
    direct_limit_window,
    injective_hull,
    is_injective,
    localize,
    projective_cover,
    theta,
    twisted_localize,
    window_to_rep,
)
from .sp4_catalog import (
    DEFAULT_PARAMS,
    INF,
    CosetType,
    a_series,
    b_series,
    beta,
    build,
    catalog,
    compass_simple,
    figure1,
    jordan_series,
    support_diagram,
)
from .sp_bridge import apply_u, bracket, kernel_elements, omega, sp_basis
from .weyl import WeylElement, commutator, is_even

H = Fraction(1, 2)


def _fail(msg):
    return False, msg


# 1 -----------------------------------------------------------------------


def relation_modules():
    mods = []
    for mu in ([0], [-1], [H], [Fraction(-7, 3)]):
        mods += [std_module(k, mu) for k in "FPL"]
    for mu in ([0, 0], [-1, 0], [0, -1], [-1, -1], [H, 0], [0, Fraction(1, 3)], [H, Fraction(1, 3)]):
        mods += [std_module(k, mu) for k in "FPL"]
    for mu in ([0, 0, 0], [-1, 0, -1], [H, 0, -1]):
        mods += [std_module(k, mu) for k in "FPL"]
    return mods


def check_relations(seed=0):
    mods = relation_modules()
    bad = 0
    for m in mods:
        v = window_violations(materialize(m, box_around(m.n, 4)))
        bad += len(v)
    return bad == 0, f"{len(mods)} standard modules (n <= 3, radius 4), {bad} violations"


# 2 -----------------------------------------------------------------------


def check_lm3(seed=0):
    got0 = socle_series(std_module("P", [0]))
    gotm = socle_series(std_module("P", [-1]))
    ok0 = got0 == [[((-1,), 1)], [((0,), 1)]]
    okm = gotm == [[((0,), 1)], [((-1,), 1)]]
    iso = qv.is_isomorphic(dual(std_module("F", [0])).rep, std_module("P", [0]).rep)
    return ok0 and okm and iso, f"soc P(0)={got0}, soc P(-1)={gotm}, dual F(0) ~ P(0): {iso}"


# 3 -----------------------------------------------------------------------


def _v1(a, b, t, d) -> qv.Rep:
    return qv.Rep(1, {(-1,): a, (0,): b}, {("t", 0, (-1,)): t, ("d", 0, (0,)): d})


def _mat(bits, r, c):
    return Mat([[bits[i * c + j] for j in range(c)] for i in range(r)], c) if r else Mat.zeros(0, c)


def v1_normal_forms(a, b):
    """Orbit representatives: t of rank r, d of rank r2 between the
    complements (d must kill im t and land in ker t)."""
    out = []
    for r in range(min(a, b) + 1):
        for r2 in range(min(a - r, b - r) + 1):
            t = [[1 if i == j and i < r else 0 for j in range(a)] for i in range(b)]
            d = [[1 if i - r == j - r and r <= i < r + r2 else 0 for j in range(b)] for i in range(a)]
            out.append(_v1(a, b, Mat(t, a) if b else Mat.zeros(0, a), Mat(d, b) if a else Mat.zeros(0, b)))
    return out


def v1_sample(seed=0):
    rng = random.Random(seed)
    reps = []
    # exhaustive 0/1 matrices for small dimension pairs
    for a, b in product(range(4), repeat=2):
        if a * b > 4:
            continue
        for bits in product((0, 1), repeat=2 * a * b):
            r = _v1(a, b, _mat(bits[: a * b], b, a), _mat(bits[a * b :], a, b))
            if r.is_valid():
                reps.append(r)
    # every orbit type up to (3, 3), transported by random base changes
    for a, b in product(range(4), repeat=2):
        for r in v1_normal_forms(a, b):
            g = {(-1,): random_invertible(a, rng), (0,): random_invertible(b, rng)}
            reps.append(qv.conjugate(r, g))
    for _ in range(60):
        reps.append(qv.random_rep(1, rng, max_dim=3, generators=3))
    return reps


def check_lm5(seed=0):
    reps = v1_sample(seed)
    classes: list[qv.Rep] = []
    labels = set()
    for r in reps:
        for x in qv.decompose_flat(r, seed):
            labels.add(qv.classify(x).name)
            if not any(qv.indecomposables_isomorphic(x, c) for c in classes):
                classes.append(x)
    expected = {"(1,0)", "(0,1)", "(1,1)+", "(1,1)-"}
    ok = len(classes) == 4 and labels == expected
    return ok, f"{len(reps)} valid V_1 reps, {len(classes)} classes, labels {sorted(labels)}"


# 4 -----------------------------------------------------------------------


def indecomposable_pool(k: int) -> list[qv.Rep]:
    if k == 1:
        return [
            qv.simple(1, (-1,)),
            qv.simple(1, (0,)),
            qv.projective(1, (-1,)),
            qv.projective(1, (0,)),
        ]
    from .sp4_catalog import INF, build, jordan_series, rotate

    pool = [qv.simple(2, v) for v in qv.BoundQuiver(2).vertices]
    pool += [qv.projective(2, v) for v in qv.BoundQuiver(2).vertices]
    strings = [build("N", ("E",)), build("N", ("E", "S")), build("N", ("E", "S", "W")), build("N", (), 1)]
    for c in (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), INF):
        strings.append(jordan_series("N", 1, c))
    strings.append(jordan_series("N", 2, Fraction(3)))
    for s in strings:
        for r in range(4):
            pool.append(rotate(s, r).rep)
    return pool


def random_sum(rng: random.Random, pool, cap=3):
    chosen = []
    dims = None
    for _ in range(6):
        x = rng.choice(pool)
        new = {v: (dims[v] if dims else 0) + x.dims[v] for v in x.quiver.vertices}
        if max(new.values()) > cap:
            continue
        chosen.append(x)
        dims = new
    if not chosen:
        chosen = [min(pool, key=lambda r: r.dim())]
    total = qv.direct_sum(*chosen)
    g = {v: random_invertible(total.dims[v], rng) for v in total.quiver.vertices}
    return chosen, qv.conjugate(total, g)


def _same_multiset(inputs, found) -> bool:
    remaining = list(inputs)
    for rep, mult in found:
        for _ in range(mult):
            for i, x in enumerate(remaining):
                if qv.indecomposables_isomorphic(rep, x):
                    del remaining[i]
                    break
            else:
                return False
    return not remaining


def check_krull_schmidt(seed=0, samples=200):
    rng = random.Random(seed)
    pools = {1: indecomposable_pool(1), 2: indecomposable_pool(2)}
    bad = 0
    idem = 0
    for i in range(samples):
        k = 1 if i % 2 == 0 else 2
        chosen, rep = random_sum(rng, pools[k])
        es: list = []
        if not _same_multiset(chosen, qv.decompose(rep, seed, es)):
            bad += 1
        if len(es) != len(chosen) - 1:
            bad += 1
        for e in es:
            if not is_idempotent(e):
                bad += 1
            idem += 1
    return bad == 0, f"{samples} conjugated sums, {idem} idempotents checked, {bad} failures"


# 5 -----------------------------------------------------------------------


def check_dichotomy(seed=0, samples=500):
    rng = random.Random(seed)
    kinds = {"rho": 0, "A": 0, "B": 0}
    bad = 0
    for _ in range(samples):
        rep = qv.random_rep(2, rng, max_dim=3, generators=3)
        for x in qv.decompose_flat(rep, seed):
            try:
                lab = qv.classify(x, seed)
            except DomainError:
                bad += 1
                continue
            if lab.kind not in kinds:
                bad += 1
                continue
            kinds[lab.kind] += 1
            if lab.kind in ("A", "B"):
                for a in x.quiver.arrows:
                    for b in x.quiver.out_arrows[qv.arrow_target(a)]:
                        if not x.compose([a, b]).is_zero():
                            bad += 1
    return bad == 0, f"{samples} samples, summands {kinds}, {bad} violations"


# 6 -----------------------------------------------------------------------


def admissible_path_classes(k: int) -> int:
    """Count pairs of vertices joined by an admissible path (one class each)."""
    q = qv.BoundQuiver(k)
    count = 0
    for s in q.vertices:
        reach = {s}
        frontier = [(s, frozenset())]
        while frontier:
            v, moved = frontier.pop()
            for a in q.out_arrows[v]:
                if a[1] not in moved:
                    t = qv.arrow_target(a)
                    reach.add(t)
                    frontier.append((t, moved | {a[1]}))
        count += len(reach)
    return count


def check_end_dims(seed=0):
    out = []
    ok = True
    for k in (1, 2):
        total = qv.direct_sum(*(qv.projective(k, s) for s in qv.BoundQuiver(k).vertices))
        dim = len(qv.end_algebra(total))
        oracle = admissible_path_classes(k)
        ok &= dim == oracle == 4**k
        out.append(f"k={k}: dim End={dim}, path classes={oracle}")
    return ok, "; ".join(out)


# 7 -----------------------------------------------------------------------


def random_weyl(rng, n=2, terms=3, max_exp=2):
    out = WeylElement.zero(n)
    for _ in range(terms):
        a = [rng.randint(0, max_exp) for _ in range(n)]
        b = [rng.randint(0, max_exp) for _ in range(n)]
        out = out + WeylElement.monomial(a, b, Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
    return out


def _random_gamma(rng, n):
    coords = rng.sample(range(n), rng.randint(1, n))
    return [Direction(c, rng.choice("td")) for c in sorted(coords)]


def check_theta(seed=0, samples=50):
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        u, v = random_weyl(rng), random_weyl(rng)
        gamma = _random_gamma(rng, 2)
        ms = [rng.randint(-2, 2) for _ in gamma]
        expect = u
        for g, m in zip(gamma, ms):
            expect = conjugate_by_power(expect, g, m)
        if theta(u, gamma, ms) != expect:
            bad += 1
        if theta(u, gamma, [0] * len(gamma)) != u:
            bad += 1
        xs = [Fraction(rng.randint(-5, 5), rng.choice([2, 3])) for _ in gamma]
        if theta(u * v, gamma, xs) != theta(u, gamma, xs) * theta(v, gamma, xs):
            bad += 1
    return bad == 0, f"{samples} elements, m in [-2,2], 0 offset, fractional multiplicativity: {bad} failures"


# 8 -----------------------------------------------------------------------


def _all_gammas(n):
    for sides in product("-td", repeat=n):
        gamma = [Direction(i, s) for i, s in enumerate(sides) if s != "-"]
        if gamma:
            yield gamma


def face_agrees(m, gamma, radius=4):
    box = box_around(m.n, radius)
    w = direct_limit_window(m, gamma, box)
    loc = localize(m, gamma)
    if w.spaces != materialize(loc, box).spaces:
        return False
    return qv.is_isomorphic(window_to_rep(w, m.block), loc.rep)


def check_face_formula(seed=0, samples=50, radius=4):
    rng = random.Random(seed)
    cases = []
    for m in relation_modules():
        if m.n <= 2:
            cases += [(m, g) for g in _all_gammas(m.n)]
        else:
            cases.append((m, _random_gamma(rng, m.n)))
    block = block_of([0, 0])
    for _ in range(samples):
        m = WeightModule(block, qv.random_rep(2, rng))
        cases.append((m, _random_gamma(rng, 2)))
    bad = sum(1 for m, g in cases if not face_agrees(m, g, radius))
    return bad == 0, f"{len(cases)} (module, Gamma) pairs at radius {radius}, {bad} disagreements"


# 9 -----------------------------------------------------------------------

_TWISTS = (0, 1, -2, H, Fraction(1, 3), Fraction(-5, 4))


def injective_cases(seed=0, count=20):
    """Seeded Gamma-injective (module, Gamma, x) triples over n = 2 blocks."""
    rng = random.Random(seed)
    blocks = [block_of(mu) for mu in ([0, 0], [H, 0], [0, Fraction(1, 3)])]
    out = []
    while len(out) < count:
        block = rng.choice(blocks)
        m = WeightModule(block, qv.random_rep(block.k, rng))
        if m.is_zero():
            continue
        gamma = _random_gamma(rng, 2)
        if not is_injective(m, gamma):
            continue
        out.append((m, gamma, [rng.choice(_TWISTS) for _ in gamma]))
    return out


def string_max(m, gamma, nu, reach=3):
    """max dim M^{nu + k} over the Gamma-string, k ranging far enough to
    see both sides of every seam."""
    best = 0
    coords = [g.coord for g in gamma]
    for ks in product(range(-reach, reach + 1), repeat=len(coords)):
        w = list(nu)
        for c, k in zip(coords, ks):
            w[c] += k
        best = max(best, weight_multiplicity(m, w))
    return best


def check_locind(seed=0, count=20, radius=2):
    bad = 0
    for m, gamma, x in injective_cases(seed, count):
        out = twisted_localize(m, gamma, x)
        shift = [Fraction(0)] * m.n
        for g, xi in zip(gamma, x):
            shift[g.coord] = Fraction(xi)
        base = [b + s for b, s in zip(m.block.frac, shift)]
        for off in product(range(-radius, radius + 1), repeat=m.n):
            nu = [b + o for b, o in zip(base, off)]
            src = [a - s for a, s in zip(nu, shift)]
            if weight_multiplicity(out, nu) != string_max(m, gamma, src):
                bad += 1
    return bad == 0, f"{count} Gamma-injective cases, support and string-max multiplicities: {bad} mismatches"


# 10 ----------------------------------------------------------------------


def _omega_modules(seed):
    rng = random.Random(seed)
    mods = [std_module(k, mu) for k in "FPL" for mu in ([0, 0], [-1, 0], [H, -1], [H, Fraction(1, 3)])]
    mods.append(WeightModule(block_of([0, 0]), qv.random_rep(2, rng)))
    return mods


def check_omega(seed=0, count=20, radius=6, probe=1):
    bad = 0
    for n in (2, 3):
        basis = sp_basis(n)
        ims = [omega(b) for b in basis]
        for i, x in enumerate(basis):
            if not is_even(ims[i]):
                bad += 1
            for j, y in enumerate(basis):
                if omega(bracket(x, y)) != commutator(ims[i], ims[j]):
                    bad += 1
    basis = sp_basis(2)
    elems = kernel_elements(2, count, seed)
    windows = [materialize(m, box_around(2, radius)) for m in _omega_modules(seed)]
    for u in elems:
        for w in windows:
            for off in product(range(-probe, probe + 1), repeat=2):
                dim = w.spaces[off]
                for k in range(dim):
                    vec = [Fraction(int(r == k)) for r in range(dim)]
                    out = apply_u(u, basis, w, vec, off)
                    if any(any(v) for v in out.values()):
                        bad += 1
    return bad == 0, f"sp(4), sp(6) brackets and evenness; {len(elems)} kernel elements on {len(windows)} windows: {bad} failures"


# 11 ----------------------------------------------------------------------


def compass_layers(m):
    """Socle layers (bottom first) as sorted lists of compass labels."""
    return [sorted(qv.COMPASS[v] for v, mult in layer for _ in range(mult)) for layer in socle_series(m)]


def check_sp4loc():
    n = compass_simple("N")
    got = {
        "b1": compass_layers(localize(n, [beta(1)])),
        "b2": compass_layers(localize(n, [beta(2)])),
        "b1b2": compass_layers(localize(n, [beta(1), beta(2)])),
    }
    want = {"b1": [["N"], ["W"]], "b2": [["N"], ["E"]], "b1b2": [["N"], ["E", "W"], ["S"]]}
    tops = {qv.COMPASS[v]: d for v, d in qv.top(localize(n, [beta(1), beta(2)]).rep).items()}
    return got == want and tops == {"S": 1}, f"socle layers {got}, top of D_b1b2 N {tops}"


# 12 ----------------------------------------------------------------------


def check_catalog(kmax=3):
    entries = catalog(CosetType("HighestWeight"), kmax=kmax)  # certifies indecomposability
    bad = []
    for a, b in combinations(entries, 2):
        if a.module.rep.dims == b.module.rep.dims and qv.is_isomorphic(a.module.rep, b.module.rep):
            bad.append(f"{a.name} ~ {b.name}")
    for e in entries:
        if "c" in e.params:
            lab = qv.classify(e.module.rep)
            c = e.params["c"]
            if lab.defect != 0 or str(lab.parameter) != (c if c == INF else str(c)):
                bad.append(f"{e.name} c={c}: {lab}")
    for k in range(1, kmax + 1):
        for c in DEFAULT_PARAMS:
            a = a_series(k, c)
            if not qv.is_isomorphic(b_series(k, c).rep, dual(a).rep):
                bad.append(f"B^{k}_{c} vs (A^{k}_{c})*")
        if not qv.is_isomorphic(jordan_series("N", k, 0).rep, build("N", ("E", "S", "W"), k - 1).rep):
            bad.append(f"N^{k}_0 vs N^{k - 1}_(E,S,W)")
    return not bad, f"{len(entries)} entries; problems: {bad or 'none'}"


# 13 ----------------------------------------------------------------------

_REGION = {(True, True): "N", (True, False): "E", (False, False): "S", (False, True): "W"}


def golden_figure1() -> str:
    return resources.files("weylcat").joinpath("data/figure1.txt").read_text()


def figure_structure_problems(text: str, radius: int = 8) -> list[str]:
    """Every letter sits in the cone cut out by the two seam lines."""
    out = []
    for row, line in enumerate(text.splitlines()):
        for col, ch in enumerate(line):
            if col % 2:
                if ch != " ":
                    out.append(f"stray {ch!r} at row {row}")
                continue
            x, y = col // 2 - radius, radius - row
            if ch in "NESW" and _REGION[(x + y > 1, y - x > 1)] != ch:
                out.append(f"{ch} outside its cone at ({x},{y})")
    for ch, count in (("*", 1), ("X", 1), ("?", 0)):
        if text.count(ch) != count:
            out.append(f"{text.count(ch)} x {ch!r}")
    if any(ch not in text for ch in "NESW"):
        out.append("missing region")
    return out


def check_figure1(radius=8):
    got = figure1(radius)
    problems = figure_structure_problems(got, radius)
    if got != golden_figure1():
        problems.append("differs from golden rendering")
    # the multiplicity diagrams agree with the region layout
    for x in "NESW":
        pic = support_diagram(compass_simple(x), radius, "odd")
        if pic.count("1") != got.count(x) + (x == "S"):  # '*' marks a weight of S
            problems.append(f"support_diagram({x}) disagrees with the layout")
    return not problems, "; ".join(problems) or f"matches golden rendering at radius {radius}"


# 14 ----------------------------------------------------------------------


def check_rank_one():
    problems = []
    for mu in ([0], [-1]):
        simple = std_module("L", mu)
        for op in (projective_cover, injective_hull):
            try:
                op(simple, side="sp")
                problems.append(f"{op.__name__}(L({mu[0]}), sp) did not refuse")
            except DomainError:
                pass
        cover = projective_cover(simple)
        if not qv.is_isomorphic(cover.rep, std_module("P", mu).rep):
            problems.append(f"cover of L({mu[0]}) is not P({mu[0]})")
    # the two indecomposable projectives of the integral n = 1 block
    if not qv.is_isomorphic(injective_hull(std_module("L", [-1])).rep, std_module("P", [0]).rep):
        problems.append("hull of L(-1) is not P(0)")
    if not qv.is_isomorphic(injective_hull(std_module("L", [0])).rep, std_module("F", [0]).rep):
        problems.append("hull of L(0) is not F(0) = P(-1)")
    return not problems, "; ".join(problems) or "sp side refuses; A side covers are P(0), P(-1)"


CHECKS = [
    ("1 relations suite", check_relations),
    ("2 Lemma lm3 sequences", check_lm3),
    ("3 V_1 normal forms", check_lm5),
    ("4 Krull-Schmidt round trip", check_krull_schmidt),
    ("5 V_2 dichotomy", check_dichotomy),
    ("6 End-algebra dimensions", check_end_dims),
    ("7 Theta consistency", check_theta),
    ("8 face formula vs oracle", check_face_formula),
    ("9 twisted localization support", check_locind),
    ("10 omega suite", check_omega),
    ("11 sp(4) localization layers", check_sp4loc),
    ("12 catalog integrity", check_catalog),
    ("13 Figure 1 reproduction", check_figure1),
    ("14 rank-one negative fact", check_rank_one),
]
