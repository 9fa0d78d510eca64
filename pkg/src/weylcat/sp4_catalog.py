"""The sp(4) atlas: compass simples, strings ``X_T``, Jordan gluings, the
catalog of indecomposables per coset type, and support diagrams.

Through ``omega`` (n = 2) the highest weight blocks become the ``V_2``
block of ``A_2`` with the compass simples at the cube corners

    N = (-1,-1)   E = (-1,0)   W = (0,-1)   S = (0,0).

Localizing at the long root ``beta_i`` is localizing at ``d_i``; ``-beta_i``
is ``t_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import quiver as qv
from .blocks import BlockId, WeightModule, dual
from .errors import DomainError
from .exactla import Mat, Poly, companion, jordan_block, to_q
from .localization import Direction, projective_cover, twisted_localize
from .quiver import COMPASS, COMPASS_VERTEX, Rep, Vertex, arrow_target
from .sp_bridge import sp_support

HW_BLOCK = BlockId(2, (Fraction(0), Fraction(0)))
NEIGHBOURS = {"N": ("E", "W"), "S": ("E", "W"), "E": ("N", "S"), "W": ("N", "S")}
# counter-clockwise and clockwise turns starting from each label
TURN_CCW = {"N": "W", "W": "S", "S": "E", "E": "N"}
TURN_CW = {v: k for k, v in TURN_CCW.items()}
INF = "inf"


def beta(i: int) -> Direction:
    """Long root ``beta_i`` (1-based) as a localization direction."""
    return Direction(i - 1, "d")


def minus_beta(i: int) -> Direction:
    return Direction(i - 1, "t")


# --------------------------------------------------------------------------
# coset types


@dataclass(frozen=True)
class CosetType:
    tag: str  # "HighestWeight", "SemiPlane", "Cuspidal"
    orientation: str | None = None  # "NW-ES" or "NE-SW" for SemiPlane

    def __str__(self):
        return f"{self.tag}({self.orientation})" if self.orientation else self.tag


def coset_type(x1, x2) -> CosetType:
    """Classify the coset ``lambda^+ + x1 eps_1 + x2 eps_2 + Q``."""
    i1 = to_q(x1).denominator == 1
    i2 = to_q(x2).denominator == 1
    if i1 and i2:
        return CosetType("HighestWeight")
    if i2:
        return CosetType("SemiPlane", "NW-ES")
    if i1:
        return CosetType("SemiPlane", "NE-SW")
    return CosetType("Cuspidal")


def parse_coset_type(text: str) -> CosetType:
    t = text.lower()
    if t in ("hw", "highestweight", "highest-weight"):
        return CosetType("HighestWeight")
    if t in ("cusp", "cuspidal"):
        return CosetType("Cuspidal")
    if t in ("semi", "semiplane", "nw-es", "semi-nw-es"):
        return CosetType("SemiPlane", "NW-ES")
    if t in ("ne-sw", "semi-ne-sw"):
        return CosetType("SemiPlane", "NE-SW")
    raise DomainError(f"unknown coset type {text!r}")


# --------------------------------------------------------------------------
# compass simples and strings


def compass_simple(x: str) -> WeightModule:
    if x not in COMPASS_VERTEX:
        raise DomainError(f"unknown compass label {x!r}")
    return WeightModule(HW_BLOCK, qv.simple(2, COMPASS_VERTEX[x]))


def _arrow_between(u: Vertex, v: Vertex):
    diff = [i for i in range(2) if u[i] != v[i]]
    if len(diff) != 1:
        raise DomainError(f"{COMPASS[u]} and {COMPASS[v]} are not successive")
    i = diff[0]
    return ("t", i, u) if u[i] == -1 else ("d", i, u)


def check_admissible(labels: Sequence[str]) -> None:
    for a in labels:
        if a not in COMPASS_VERTEX:
            raise DomainError(f"unknown compass label {a!r}")
    for a, b in zip(labels, labels[1:]):
        if b not in NEIGHBOURS[a]:
            raise DomainError(f"{a} and {b} are not successive")
    for a, b in zip(labels, labels[2:]):
        if a == b:
            raise DomainError(f"tuple turns back at {a} (consecutive steps must not backtrack)")


def string_rep(labels: Sequence[str]) -> Rep:
    """Zigzag string: position 0 is the socle; odd positions map to their
    neighbours by identity along the connecting arrow."""
    check_admissible(labels)
    q = qv.BoundQuiver(2)
    verts = [COMPASS_VERTEX[x] for x in labels]
    index: dict[Vertex, list[int]] = {v: [] for v in q.vertices}
    for pos, v in enumerate(verts):
        index[v].append(pos)
    dims = {v: len(index[v]) for v in q.vertices}
    entries: dict = {}
    for pos in range(1, len(verts), 2):
        for nb in (pos - 1, pos + 1):
            if nb < len(verts):
                a = _arrow_between(verts[pos], verts[nb])
                r = index[verts[nb]].index(nb)
                c = index[verts[pos]].index(pos)
                entries.setdefault(a, {})[(r, c)] = Fraction(1)
    maps = {}
    for a, ent in entries.items():
        rows, cols = dims[arrow_target(a)], dims[a[2]]
        maps[a] = Mat([[ent.get((r, c), 0) for c in range(cols)] for r in range(rows)], cols)
    return Rep(q, dims, maps)


def loop_for(x: str, tail: Sequence[str], turns: int) -> list[str]:
    """``turns`` full turns around the compass from ``x``, oriented so that
    ``tail`` continues without backtracking."""
    step = TURN_CW if tail and TURN_CW[x] == tail[0] else TURN_CCW
    if tail and step[x] != tail[0]:
        raise DomainError(f"{tail[0]} does not follow {x}")
    out = []
    cur = x
    for _ in range(4 * turns):
        cur = step[cur]
        out.append(cur)
    return out


def build(x: str, tail: Sequence[str] = (), k: int = 0, c=None) -> WeightModule:
    """``X^k_T`` (string module) or, with ``c`` given, the Jordan series ``X^k_c``."""
    tail = list(tail)
    if c is not None:
        if tail or k < 1:
            raise DomainError("the Jordan series needs an empty tuple and k >= 1")
        return jordan_series(x, k, c)
    labels = [x] + loop_for(x, tail, k) + tail
    return WeightModule(HW_BLOCK, string_rep(labels))


# --------------------------------------------------------------------------
# gluing and the Jordan series


def socle_embedding(m: Rep, x: str) -> dict[Vertex, Mat]:
    """Embedding of the compass simple ``x`` into the socle of ``m``
    (unique up to scalar; the first basis vector is used)."""
    v = COMPASS_VERTEX[x]
    soc = qv.socle_series(m)[0][v] if m.dim() else []
    if not soc:
        raise DomainError(f"{x} does not embed in the socle")
    if len(soc) > 1:
        raise DomainError(f"{x} occurs {len(soc)} times in the socle; embedding not unique")
    return {u: (Mat.from_columns([soc[0]]) if u == v else Mat.zeros(m.dims[u], 0)) for u in m.quiver.vertices}


def glue(m1: Rep, m2: Rep, a: Rep, i: Mapping[Vertex, Mat], j: Mapping[Vertex, Mat], lmap: Mapping[Vertex, Mat],
         allow_singular: bool = False) -> Rep:
    """``(m1 + m2) / {(i(a), j(L a))}`` computed vertexwise.

    ``i``, ``j`` are morphisms ``a -> m1`` and ``a -> m2`` and ``L`` an
    endomorphism of ``a``; all are checked.
    """
    q = m1.quiver
    for name, f, tgt in (("i", i, m1), ("j", j, m2)):
        for arr in q.arrows:
            lhs = tgt.maps[arr] @ f[arr[2]]
            rhs = f[arrow_target(arr)] @ a.maps[arr]
            if lhs != rhs:
                raise DomainError(f"{name} is not a morphism")
        for v in q.vertices:
            if f[v].rank() != a.dims[v]:
                raise DomainError(f"{name} is not injective (A does not embed)")
    for arr in q.arrows:
        if a.maps[arr] @ lmap[arr[2]] != lmap[arrow_target(arr)] @ a.maps[arr]:
            raise DomainError("L is not an endomorphism of A")
    if not allow_singular and any(not lmap[v].is_invertible() for v in q.vertices if a.dims[v]):
        raise DomainError("gluing map L must be invertible")
    total = qv.direct_sum(m1, m2)
    sub = {}
    for v in q.vertices:
        top = i[v]
        bot = j[v] @ lmap[v]
        cols = [tuple(top.col(c)) + tuple(bot.col(c)) for c in range(a.dims[v])]
        sub[v] = cols
    return qv.quotient(total, sub)


def _block_embed(parts: Sequence[Mapping[Vertex, Mat]], srcs: Sequence[Rep], tgts: Sequence[Rep]):
    """Direct sum of morphisms ``srcs[r] -> tgts[r]``."""
    from .exactla import block_diag

    q = srcs[0].quiver
    return {v: block_diag([p[v] for p in parts]) for v in q.vertices}


def _jordan(k: int, c) -> Mat:
    if isinstance(c, Poly):
        return companion(c**k) if c.degree > 1 else jordan_block(k, -c.coeffs[0])
    return jordan_block(k, to_q(c))


def jordan_series(x: str, k: int, c) -> WeightModule:
    """``X^k_c`` for ``x`` in the compass; ``c`` rational, ``"inf"`` or an
    irreducible :class:`Poly`.

    For ``x = N`` this is the dual of ``(W_{N,E}^k + W_{S,E}^k)`` modulo
    the diagonal of the ``E``-socles and the ``J^k_c``-graph of the
    ``W``-socles; ``c = inf`` swaps the roles of the two gluings.  Other
    labels are obtained by rotating the compass.
    """
    if k < 1:
        raise DomainError("Jordan series needs k >= 1")
    if x in ("E", "W"):
        # a quarter turn inverts the tube parameter; compensate so that
        # E^k_c and W^k_c are the duals of N^k_c
        return rotate(jordan_series("N", k, invert_parameter(c)), _rotation_to(x))
    if x != "N":
        return rotate(jordan_series("N", k, c), _rotation_to(x))
    if c == INF or c == "∞":
        lw, le = Mat.identity(k), jordan_block(k, 0)
    else:
        lw, le = _jordan(k, c), Mat.identity(k)
        if isinstance(c, Poly):
            le = Mat.identity(lw.nrows)
    size = lw.nrows
    if le.nrows != size:
        le = Mat.identity(size)
    m1 = string_rep(["W", "N", "E"])
    m2 = string_rep(["W", "S", "E"])
    big1 = qv.power(m1, size)
    big2 = qv.power(m2, size)
    simple_e = qv.simple(2, COMPASS_VERTEX["E"])
    simple_w = qv.simple(2, COMPASS_VERTEX["W"])
    a = qv.direct_sum(qv.power(simple_e, size), qv.power(simple_w, size))
    i = _socle_sum(big1, size)
    j = _socle_sum(big2, size)
    lmap = {v: Mat.zeros(a.dims[v], a.dims[v]) for v in a.quiver.vertices}
    lmap[COMPASS_VERTEX["E"]] = le
    lmap[COMPASS_VERTEX["W"]] = lw
    glued = glue(big1, big2, a, i, j, lmap, allow_singular=True)
    return WeightModule(HW_BLOCK, qv.dual(glued))


def invert_parameter(c):
    """``c -> 1/c`` on the projective line (irreducible classes by reciprocal)."""
    if c == INF or c == "∞":
        return Fraction(0)
    if isinstance(c, Poly):
        if c.degree == 1:
            return invert_parameter(-c.coeffs[0] / c.coeffs[1])
        return Poly(reversed(c.coeffs)).monic()
    c = to_q(c)
    return INF if c == 0 else 1 / c


def a_series(l: int, c) -> WeightModule:
    return jordan_series("N", l, c)


def b_series(l: int, c) -> WeightModule:
    """``B^l_c``, realized by a compass rotation of the A-series.

    At the two exceptional tubes the quarter turns to ``E`` and ``W`` land
    on different modules of the same dimension; the turn matching
    ``(A^l_c)^*`` is used (``W`` for ``c = 0``, ``E`` otherwise).
    """
    if c == 0 and not isinstance(c, Poly):
        return jordan_series("W", l, c)
    return jordan_series("E", l, c)


def _socle_sum(big: Rep, size: int) -> dict[Vertex, Mat]:
    """Embed ``E^size + W^size`` into ``size`` copies of a string whose
    socle is ``W + E`` (copy ``r`` receives basis vector ``r``)."""
    out = {}
    for v in big.quiver.vertices:
        if COMPASS[v] in ("E", "W"):
            out[v] = Mat.identity(size) if big.dims[v] == size else None
            if out[v] is None:
                raise DomainError("unexpected socle size")
        else:
            out[v] = Mat.zeros(big.dims[v], 0)
    return out


# --------------------------------------------------------------------------
# Weyl-group twists as compass rotations

ROTATE = {"N": "E", "E": "S", "S": "W", "W": "N"}


def _rotation_to(x: str) -> int:
    r, cur = 0, "N"
    while cur != x:
        cur = ROTATE[cur]
        r += 1
    return r


def rotate(m: WeightModule, quarter_turns: int = 1) -> WeightModule:
    """Relabel the compass by ``quarter_turns`` clockwise 90-degree turns."""
    rep = m.rep
    for _ in range(quarter_turns % 4):
        perm = {COMPASS_VERTEX[a]: COMPASS_VERTEX[b] for a, b in ROTATE.items()}
        dims = {perm[v]: d for v, d in rep.dims.items()}
        maps = {}
        for a, mat in rep.maps.items():
            maps[_arrow_between(perm[a[2]], perm[arrow_target(a)])] = mat
        rep = Rep(rep.quiver, dims, maps)
    return WeightModule(m.block, rep)


# --------------------------------------------------------------------------
# the catalog


@dataclass
class CatalogEntry:
    name: str
    params: dict
    module: WeightModule
    support: str
    label: str = ""

    def to_json(self) -> dict:
        from .exactla import q_str

        return {
            "name": self.name,
            "params": {k: (q_str(v) if isinstance(v, Fraction) else str(v)) for k, v in self.params.items()},
            "block": [q_str(f) for f in self.module.block.frac],
            "dims": {qv.vertex_bits(v): d for v, d in self.module.rep.dims.items()},
            "support": self.support,
            "label": self.label,
        }


def _support(m: WeightModule) -> str:
    k = m.block.k
    if k == 0:
        return "full coset"
    if k == 1:
        live = [v for v, d in m.rep.dims.items() if d]
        return "semi-plane" if len(live) == 1 else "full coset (two semi-planes)"
    regions = sorted(COMPASS[v] for v, d in m.rep.dims.items() if d)
    return "cone " + "".join(regions) if len(regions) == 1 else "regions " + ",".join(regions)


def _fmt(c) -> str:
    from .exactla import q_str

    if isinstance(c, Fraction):
        return q_str(c)
    return str(c)


def _string_name(k: int, tail: Sequence[str]) -> str:
    base = "N" if k == 0 else f"N^{k}"
    if not tail:
        return base
    return base + "_" + (tail[0] if len(tail) == 1 else "{" + ",".join(tail) + "}")


def highest_weight_entries(kmax: int, params: Sequence) -> list[CatalogEntry]:
    out = [CatalogEntry("P_N", {}, projective_cover(compass_simple("N")), "")]
    for k in range(kmax + 1):
        for tail in ((), ("E",), ("E", "S")):
            out.append(CatalogEntry(_string_name(k, tail), {"k": k}, build("N", tail, k), ""))
    for k in range(1, kmax + 1):
        for c in params:
            out.append(CatalogEntry(f"N^{k}_c", {"k": k, "c": c}, jordan_series("N", k, c), ""))
    return out


def semiplane_entries(orientation: str, x) -> list[CatalogEntry]:
    x = to_q(x)
    if x.denominator == 1:
        raise DomainError("semi-plane twist parameter must be non-integral")
    i = 1 if orientation == "NW-ES" else 2
    j = 3 - i
    n, s = compass_simple("N"), compass_simple("S")
    one = twisted_localize(n, [beta(i)], [x])
    other = twisted_localize(s, [minus_beta(i)], [x])
    pair = twisted_localize(n, [beta(i), beta(j)], [x, 0] if i == 1 else [0, x])
    b = f"b{i}"
    return [
        CatalogEntry(f"D^x_{{{b}}}N", {"x": x}, one, ""),
        CatalogEntry(f"(D^x_{{{b}}}N)*", {"x": x}, other, ""),
        CatalogEntry("D^x_{b1,b2}N", {"x": x}, pair, ""),
        CatalogEntry("(D^x_{b1,b2}N)*", {"x": x}, dual(pair), ""),
    ]


def cuspidal_entries(x1, x2) -> list[CatalogEntry]:
    x1, x2 = to_q(x1), to_q(x2)
    if x1.denominator == 1 or x2.denominator == 1:
        raise DomainError("cuspidal twist parameters must both be non-integral")
    m = twisted_localize(compass_simple("N"), [beta(1), beta(2)], [x1, x2])
    return [CatalogEntry("D^x_{b1,b2}N", {"x1": x1, "x2": x2}, m, "")]


DEFAULT_PARAMS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), INF)


def catalog(ctype: CosetType, kmax: int = 1, params: Sequence = DEFAULT_PARAMS,
            x: Sequence = (Fraction(1, 2), Fraction(1, 3)), full: bool = False) -> list[CatalogEntry]:
    """Indecomposables of one coset type, each certified and labeled.

    ``full`` adds the compass rotations and duals of the highest weight
    series (duplicates removed up to isomorphism).
    """
    if ctype.tag == "HighestWeight":
        entries = highest_weight_entries(kmax, params)
        if full:
            entries = _saturate(entries)
    elif ctype.tag == "SemiPlane":
        entries = semiplane_entries(ctype.orientation, x[0])
    elif ctype.tag == "Cuspidal":
        entries = cuspidal_entries(x[0], x[1] if len(x) > 1 else x[0])
    else:
        raise DomainError(f"unknown coset type {ctype}")
    for e in entries:
        if not qv.is_indecomposable(e.module.rep):
            raise DomainError(f"catalog entry {e.name} is not indecomposable")
        e.support = _support(e.module)
        if e.module.rep.k <= 2:
            e.label = str(qv.classify(e.module.rep))
    return entries


def _saturate(entries: list[CatalogEntry]) -> list[CatalogEntry]:
    out: list[CatalogEntry] = []
    for e in entries:
        for r in range(4):
            for d in (False, True):
                m = rotate(e.module, r)
                if d:
                    m = dual(m)
                name = e.name + (f" rot{r}" if r else "") + ("*" if d else "")
                if any(o.module.rep.dims == m.rep.dims and qv.is_isomorphic(o.module.rep, m.rep) for o in out):
                    continue
                out.append(CatalogEntry(name, dict(e.params), m, ""))
    return out


def parameter_value(text: str):
    """Inverse of the tube names printed by ``classify``: ``"inf"``, a
    rational, or an irreducible polynomial in ``x``."""
    if text == INF:
        return INF
    try:
        return to_q(text)
    except (ValueError, ZeroDivisionError, DomainError):
        pass
    import sympy

    x = sympy.Symbol("x")
    coeffs = sympy.Poly(sympy.sympify(text.replace("^", "**")), x).all_coeffs()
    return Poly(Fraction(int(c.p), int(c.q)) for c in reversed(coeffs)).monic()


def identify(m: WeightModule, kmax: int = 3) -> str | None:
    """Name of a catalog entry (up to compass rotation and duality)
    isomorphic to the indecomposable ``m`` of the highest weight block, or
    None when the bounded catalog has no match."""
    if m.block != HW_BLOCK:
        raise DomainError("identify works in the highest weight block")
    lab = qv.classify(m.rep)
    pool = highest_weight_entries(kmax, ())
    if lab.parameter is not None:
        # regular: strings cover parts of the exceptional tubes, the Jordan
        # series (at c and at 1/c, for the rotated copies) the rest
        size = sum(m.rep.dims.values())
        c = parameter_value(lab.parameter)
        for cc in (c, invert_parameter(c)):
            deg = cc.degree if isinstance(cc, Poly) else 1
            pool += [CatalogEntry(f"N^{k}_c", {"k": k, "c": cc}, jordan_series("N", k, cc), "")
                     for k in range(1, kmax + 1) if 4 * k * deg == size]
    for e in pool:
        for r in range(4):
            for d in (False, True):
                cand = rotate(e.module, r)
                if d:
                    cand = dual(cand)
                if cand.rep.dims == m.rep.dims and qv.is_isomorphic(cand.rep, m.rep):
                    name = e.name + (f" rot{r}" if r else "") + ("*" if d else "")
                    return name.replace("_c", f"_{_fmt(e.params['c'])}") if "c" in e.params else name
    return None


# --------------------------------------------------------------------------
# support diagrams
#
# Offsets m (weights frac + m) are drawn at x = m2 - m1 (right) and
# y = -(m1 + m2) (up), so that N sits on top, S at the bottom, E right and
# W left.  Lattice points of one Q-coset have x = y (mod 2) and y of the
# coset's parity; the seam lines m_i = -1/2 of integral coordinates are
# drawn between lattice points.

LEGEND = (
    "legend: digit = weight multiplicity, '.' = zero, '\\' and '/' = seam lines "
    "m1 = -1/2 and m2 = -1/2, 'X' = crossing, '*' = omega^- (Figure 1 only)"
)
OMEGA_MINUS = (0, 1)  # offsets of the extreme weight of S on the odd coset


def _grid(radius: int, parity: int, block: BlockId, cell) -> str:
    integral = set(block.integral_set)
    rows = []
    for y in range(radius, -radius - 1, -1):
        chars = []
        for x in range(-radius, radius + 1):
            if (x - y) % 2 == 0 and y % 2 == parity:
                m1, m2 = -(x + y) // 2, (x - y) // 2
                chars.append(cell((m1, m2)))
                continue
            on1 = 0 in integral and x + y == 1
            on2 = 1 in integral and y - x == 1
            chars.append("X" if on1 and on2 else "\\" if on1 else "/" if on2 else " ")
        rows.append(" ".join(chars).rstrip())
    return "\n".join(rows) + "\n"


def support_diagram(m: WeightModule, radius: int, coset="odd") -> str:
    """ASCII multiplicity picture of one Q-coset of a rank-2 module."""
    if m.n != 2:
        raise DomainError("support diagrams are drawn for n = 2")
    if radius < 0:
        raise DomainError("radius must be non-negative")
    from .sp_bridge import coset_parity

    parity = coset_parity(m, coset)
    table = sp_support(m, parity, [(-radius, radius)] * 2)
    frac = m.block.frac

    def cell(off):
        d = table.get(tuple(f + o + Fraction(1, 2) for f, o in zip(frac, off)), 0)
        return "." if d == 0 else (str(d) if d < 10 else "#")

    return _grid(radius, parity, m.block, cell)


def figure1(radius: int = 8) -> str:
    """Region layout of the odd highest weight coset: each lattice point
    carries the compass simple supported there."""
    simples = {x: compass_simple(x) for x in "NESW"}
    from .blocks import weight_multiplicity

    def cell(off):
        if off == OMEGA_MINUS:
            return "*"
        hits = [x for x, s in simples.items() if weight_multiplicity(s, off)]
        return hits[0] if len(hits) == 1 else "?"

    return _grid(radius, 1, HW_BLOCK, cell)
