"""Cube quivers ``V_k`` with their relations, and representations over Q.

Vertices are sign vectors ``s`` in ``{0, -1}^k``.  For each coordinate ``i``
there is a ``t``-arrow raising ``s_i`` from ``-1`` to ``0`` and a ``d``-arrow
lowering it back.  The relations are ``t_i d_i = d_i t_i = 0`` and
commutation of arrows in different coordinates.  A path is *admissible* when
no coordinate is moved twice; admissible paths with equal endpoints agree,
every other path vanishes.

Vertex spaces are ordered by ``sorted(vertices)``; bitstrings write ``1`` for
``-1`` and ``0`` for ``0``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Mapping, Sequence

from .errors import DomainError, RelationError
from .exactla import (
    LOCAL,
    Mat,
    Span,
    block_diag,
    column_space,
    complete_basis,
    find_splitting_idempotent,
    is_nilpotent,
    kernel,
    kron,
    solve_matrix,
    vstack,
)

Vertex = tuple[int, ...]
Arrow = tuple[str, int, Vertex]  # (kind, coordinate, source)


def vertex_bits(s: Vertex) -> str:
    return "".join("1" if x == -1 else "0" for x in s)


def bits_vertex(bits: str) -> Vertex:
    if any(ch not in "01" for ch in bits):
        raise DomainError(f"bad vertex bitstring {bits!r}")
    return tuple(-1 if ch == "1" else 0 for ch in bits)


def arrow_target(a: Arrow) -> Vertex:
    kind, i, s = a
    t = list(s)
    t[i] = 0 if kind == "t" else -1
    return tuple(t)


def arrow_name(a: Arrow) -> str:
    kind, i, s = a
    return f"{kind}{i + 1}@{vertex_bits(s)}"


class BoundQuiver:
    """The quiver ``V_k`` together with its generating relations."""

    def __init__(self, k: int):
        if k < 0:
            raise DomainError("k must be non-negative")
        self.k = k
        self.vertices: list[Vertex] = sorted(product((-1, 0), repeat=k))
        arrows = []
        for s in self.vertices:
            for i in range(k):
                arrows.append(("t", i, s) if s[i] == -1 else ("d", i, s))
        self.arrows: list[Arrow] = arrows
        self.out_arrows = {v: [a for a in arrows if a[2] == v] for v in self.vertices}

    def __eq__(self, other):
        return isinstance(other, BoundQuiver) and other.k == self.k

    def __hash__(self):
        return hash(("V", self.k))

    def __repr__(self):
        return f"BoundQuiver(k={self.k})"

    def arrow(self, kind: str, i: int, source: Vertex) -> Arrow:
        a = (kind, i, tuple(source))
        if a not in self.out_arrows.get(a[2], []):
            raise DomainError(f"no arrow {kind}{i + 1} out of {vertex_bits(a[2])}")
        return a

    def relations(self) -> list[tuple]:
        """Generating relations: ``("zero", path)`` and ``("commute", p, q)``.

        Paths are lists of arrows in order of traversal.
        """
        rels = []
        for a in self.arrows:
            b = ("d" if a[0] == "t" else "t", a[1], arrow_target(a))
            rels.append(("zero", [a, b]))
        for s in self.vertices:
            for i, j in combinations(range(self.k), 2):
                a = self._step(i, s)
                b = self._step(j, s)
                p = [a, self._step(j, arrow_target(a))]
                q = [b, self._step(i, arrow_target(b))]
                rels.append(("commute", p, q))
        return rels

    def _step(self, i: int, s: Vertex) -> Arrow:
        return ("t", i, s) if s[i] == -1 else ("d", i, s)


def vk(k: int) -> BoundQuiver:
    return BoundQuiver(k)


def path_name(path: Sequence[Arrow]) -> str:
    return " -> ".join(arrow_name(a) for a in path)


class Rep:
    """A representation of ``V_k``: vertex dimensions and arrow matrices.

    ``maps[a]`` has shape ``(dim target, dim source)``.  Missing arrows are
    zero.  Instances are treated as immutable.
    """

    __slots__ = ("quiver", "dims", "maps")

    def __init__(self, quiver: BoundQuiver | int, dims: Mapping[Vertex, int], maps: Mapping[Arrow, Mat] | None = None):
        if isinstance(quiver, int):
            quiver = BoundQuiver(quiver)
        self.quiver = quiver
        self.dims = {v: int(dims.get(v, 0)) for v in quiver.vertices}
        extra = set(dims) - set(quiver.vertices)
        if extra:
            raise DomainError(f"unknown vertices {sorted(extra)}")
        if any(d < 0 for d in self.dims.values()):
            raise DomainError("negative dimension")
        full = {}
        maps = dict(maps or {})
        for a in quiver.arrows:
            m = maps.pop(a, None)
            shape = (self.dims[arrow_target(a)], self.dims[a[2]])
            if m is None:
                m = Mat.zeros(*shape)
            elif not isinstance(m, Mat):
                m = Mat(m, shape[1]) if shape[0] else Mat.zeros(*shape)
            if m.shape != shape:
                raise DomainError(f"arrow {arrow_name(a)} needs shape {shape}, got {m.shape}")
            full[a] = m
        if maps:
            raise DomainError(f"maps given for non-arrows {list(maps)}")
        self.maps = full

    @property
    def k(self) -> int:
        return self.quiver.k

    def dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.vertices)

    def offsets(self) -> dict[Vertex, int]:
        out, acc = {}, 0
        for v in self.quiver.vertices:
            out[v] = acc
            acc += self.dims[v]
        return out

    def __eq__(self, other):
        return isinstance(other, Rep) and self.quiver == other.quiver and self.dims == other.dims and self.maps == other.maps

    def __hash__(self):
        return hash((self.k, tuple(self.dims.items()), tuple(self.maps.items())))

    def __repr__(self):
        dims = ",".join(f"{vertex_bits(v)}:{d}" for v, d in self.dims.items() if d)
        return f"Rep(k={self.k}, dims={{{dims}}})"

    def compose(self, path: Sequence[Arrow]) -> Mat:
        """Matrix of a path (first arrow applied first)."""
        if not path:
            raise DomainError("empty path")
        m = self.maps[path[0]]
        for a in path[1:]:
            m = self.maps[a] @ m
        return m

    def validate(self) -> str | None:
        """``None`` when all relations hold, otherwise a description of the
        first violated path."""
        try:
            self.check()
        except RelationError as exc:
            return str(exc)
        return None

    def check(self) -> "Rep":
        """Raise :class:`RelationError` naming the first violated relation.

        Every path is covered: admissible prefixes are extended one arrow at
        a time; a non-admissible extension must vanish (so all its further
        extensions do too) and admissible paths with common endpoints must
        agree.
        """
        q = self.quiver
        for s in q.vertices:
            seen: dict[Vertex, tuple[list[Arrow], Mat]] = {}
            stack = [([], None, frozenset())]
            while stack:
                path, m, moved = stack.pop()
                end = arrow_target(path[-1]) if path else s
                for a in q.out_arrows[end]:
                    step = self.maps[a] if m is None else self.maps[a] @ m
                    p2 = path + [a]
                    if a[1] in moved:
                        if not step.is_zero():
                            raise RelationError(f"path {path_name(p2)} should vanish", p2)
                        continue
                    tgt = arrow_target(a)
                    if tgt in seen:
                        if seen[tgt][1] != step:
                            raise RelationError(
                                f"paths {path_name(seen[tgt][0])} and {path_name(p2)} differ", p2
                            )
                    else:
                        seen[tgt] = (p2, step)
                    stack.append((p2, step, moved | {a[1]}))
        return self

    def is_valid(self) -> bool:
        return self.validate() is None


# --------------------------------------------------------------------------
# basic constructions


def zero_rep(k: int) -> Rep:
    return Rep(k, {})


def simple(k: int, s: Vertex) -> Rep:
    return Rep(k, {tuple(s): 1})


def projective(k: int, s: Vertex) -> Rep:
    """Indecomposable projective ``P_s``: one-dimensional at every vertex.

    An arrow acts by 1 exactly when it moves a coordinate still at its value
    in ``s``; in ``V_k`` these are also the injective hulls of the simples
    at the opposite vertex.
    """
    q = BoundQuiver(k)
    s = tuple(s)
    maps = {a: Mat([[1 if a[2][a[1]] == s[a[1]] else 0]]) for a in q.arrows}
    return Rep(q, {v: 1 for v in q.vertices}, maps)


def direct_sum(*reps: Rep) -> Rep:
    if not reps:
        raise DomainError("direct_sum needs at least one summand")
    q = reps[0].quiver
    if any(r.quiver != q for r in reps):
        raise DomainError("summands live on different quivers")
    dims = {v: sum(r.dims[v] for r in reps) for v in q.vertices}
    maps = {a: block_diag([r.maps[a] for r in reps]) for a in q.arrows}
    return Rep(q, dims, maps)


def power(rep: Rep, m: int) -> Rep:
    return direct_sum(*([rep] * m)) if m else zero_rep(rep.k)


def dual(rep: Rep) -> Rep:
    """Linear dual: each arrow becomes the transpose of its reverse."""
    q = rep.quiver
    maps = {}
    for a in q.arrows:
        rev = ("d" if a[0] == "t" else "t", a[1], arrow_target(a))
        maps[a] = rep.maps[rev].T
    return Rep(q, rep.dims, maps)


def conjugate(rep: Rep, change: Mapping[Vertex, Mat]) -> Rep:
    """Transport ``rep`` along vertexwise invertible maps ``g_v``."""
    inv = {v: change[v].inverse() for v in rep.quiver.vertices}
    maps = {a: change[arrow_target(a)] @ m @ inv[a[2]] for a, m in rep.maps.items()}
    return Rep(rep.quiver, rep.dims, maps)


def tensor(r1: Rep, r2: Rep) -> Rep:
    """Outer tensor product: a representation of ``V_{k1 + k2}``."""
    q = BoundQuiver(r1.k + r2.k)
    dims = {}
    for v in q.vertices:
        dims[v] = r1.dims[v[: r1.k]] * r2.dims[v[r1.k :]]
    maps = {}
    for a in q.arrows:
        kind, i, s = a
        s1, s2 = s[: r1.k], s[r1.k :]
        if i < r1.k:
            maps[a] = kron(r1.maps[(kind, i, s1)], Mat.identity(r2.dims[s2]))
        else:
            maps[a] = kron(Mat.identity(r1.dims[s1]), r2.maps[(kind, i - r1.k, s2)])
    return Rep(q, dims, maps)


def _basis_mat(cols: Sequence[Sequence], n: int) -> Mat:
    return Mat.from_columns(cols) if cols else Mat.zeros(n, 0)


def restrict(rep: Rep, bases: Mapping[Vertex, Sequence[Sequence]]) -> Rep:
    """Subrepresentation on invariant subspaces given by independent columns."""
    mats = {v: _basis_mat(bases.get(v, []), rep.dims[v]) for v in rep.quiver.vertices}
    maps = {}
    for a, m in rep.maps.items():
        tgt = mats[arrow_target(a)]
        x = solve_matrix(tgt, m @ mats[a[2]])
        if x is None:
            raise DomainError(f"subspaces are not invariant under {arrow_name(a)}")
        maps[a] = x
    return Rep(rep.quiver, {v: m.ncols for v, m in mats.items()}, maps)


def quotient(rep: Rep, bases: Mapping[Vertex, Sequence[Sequence]]) -> Rep:
    """Quotient by an invariant family of subspaces."""
    proj = {}
    lifts = {}
    for v in rep.quiver.vertices:
        n = rep.dims[v]
        sub = column_space(bases.get(v, []), n)
        comp = complete_basis(sub, n)
        full = _basis_mat(list(sub) + comp, n)
        inv = full.inverse() if n else Mat.zeros(0, 0)
        proj[v] = Mat._raw(inv.rows[len(sub) :], n) if n else Mat.zeros(0, 0)
        lifts[v] = _basis_mat(comp, n)
    maps = {}
    for a, m in rep.maps.items():
        tgt = arrow_target(a)
        maps[a] = proj[tgt] @ m @ lifts[a[2]]
    out = Rep(rep.quiver, {v: lifts[v].ncols for v in rep.quiver.vertices}, maps)
    # invariance check: the image of the subspace must die in the quotient
    for a, m in rep.maps.items():
        sub = bases.get(a[2], [])
        if sub and not (proj[arrow_target(a)] @ m @ _basis_mat(sub, rep.dims[a[2]])).is_zero():
            raise DomainError(f"subspaces are not invariant under {arrow_name(a)}")
    return out


def generated(rep: Rep, vectors: Mapping[Vertex, Sequence[Sequence]]) -> dict[Vertex, list[tuple]]:
    """Smallest invariant family of subspaces containing ``vectors``."""
    spans = {v: column_space(vectors.get(v, []), rep.dims[v]) for v in rep.quiver.vertices}
    changed = True
    while changed:
        changed = False
        for a, m in rep.maps.items():
            src, tgt = a[2], arrow_target(a)
            if not spans[src]:
                continue
            sp = Span(spans[tgt], rep.dims[tgt])
            new = [m.apply(x) for x in spans[src]]
            if any(not sp.contains(y) for y in new):
                spans[tgt] = column_space(list(spans[tgt]) + new, rep.dims[tgt])
                changed = True
    return spans


# --------------------------------------------------------------------------
# morphisms and Krull-Schmidt


def hom_space(r1: Rep, r2: Rep) -> list[dict[Vertex, Mat]]:
    """Basis of ``Hom(r1, r2)``; each element maps vertex to matrix."""
    if r1.quiver != r2.quiver:
        raise DomainError("representations live on different quivers")
    q = r1.quiver
    index = {}
    nvar = 0
    for v in q.vertices:
        index[v] = nvar
        nvar += r2.dims[v] * r1.dims[v]
    if nvar == 0:
        return []
    rows = []
    for a in q.arrows:
        s, t = a[2], arrow_target(a)
        m, n = r1.maps[a], r2.maps[a]
        ds, dt = r1.dims[s], r1.dims[t]
        es, et = r2.dims[s], r2.dims[t]
        for p in range(et):
            for col in range(ds):
                row = [Fraction(0)] * nvar
                # (X_t M)[p, col]
                for r in range(dt):
                    c = m.rows[r][col]
                    if c:
                        row[index[t] + p * dt + r] += c
                # (N X_s)[p, col]
                for r in range(es):
                    c = n.rows[p][r]
                    if c:
                        row[index[s] + r * ds + col] -= c
                if any(row):
                    rows.append(row)
    sols = kernel(Mat(rows, nvar)) if rows else [
        tuple(Fraction(int(i == j)) for i in range(nvar)) for j in range(nvar)
    ]
    out = []
    for vec in sols:
        f = {}
        for v in q.vertices:
            d1, d2 = r1.dims[v], r2.dims[v]
            base = index[v]
            f[v] = Mat([[vec[base + p * d1 + r] for r in range(d1)] for p in range(d2)], d1) if d2 else Mat.zeros(0, d1)
        out.append(f)
    return out


def _total(f: Mapping[Vertex, Mat], q: BoundQuiver) -> Mat:
    return block_diag([f[v] for v in q.vertices])


def end_algebra(rep: Rep) -> list[Mat]:
    """Basis of ``End(rep)`` as block-diagonal matrices on the total space."""
    return [_total(f, rep.quiver) for f in hom_space(rep, rep)]


def is_indecomposable(rep: Rep, seed: int = 0) -> bool:
    if rep.dim() == 0:
        return False
    return find_splitting_idempotent(end_algebra(rep), seed=seed, check=False) == LOCAL


def _split_by(rep: Rep, e: Mat) -> tuple[Rep, Rep]:
    off = rep.offsets()
    parts = []
    n = rep.dim()
    for proj in (e, Mat.identity(n) - e):
        bases = {}
        for v in rep.quiver.vertices:
            d = rep.dims[v]
            cols = [proj.col(off[v] + j)[off[v] : off[v] + d] for j in range(d)]
            bases[v] = column_space(cols, d)
        parts.append(restrict(rep, bases))
    return parts[0], parts[1]


def decompose_flat(rep: Rep, seed: int = 0, idempotents: list | None = None) -> list[Rep]:
    """Indecomposable summands, each certified local, in discovery order.

    Splitting idempotents are appended to ``idempotents`` when given.
    """
    if rep.dim() == 0:
        return []
    e = find_splitting_idempotent(end_algebra(rep), seed=seed, check=False)
    if e == LOCAL:
        return [rep]
    if idempotents is not None:
        idempotents.append(e)
    a, b = _split_by(rep, e)
    return decompose_flat(a, seed, idempotents) + decompose_flat(b, seed, idempotents)


def decompose(rep: Rep, seed: int = 0, idempotents: list | None = None) -> list[tuple[Rep, int]]:
    """Summands grouped into isomorphism classes ``(representative, mult)``."""
    groups: list[list] = []
    for x in decompose_flat(rep, seed, idempotents):
        for g in groups:
            if indecomposables_isomorphic(g[0], x):
                g[1] += 1
                break
        else:
            groups.append([x, 1])
    return [(g[0], g[1]) for g in groups]


def indecomposables_isomorphic(x: Rep, y: Rep) -> bool:
    """Isomorphism test for indecomposables: some ``g f`` is not nilpotent."""
    return isomorphism(x, y) is not None


def isomorphism(x: Rep, y: Rep) -> dict[Vertex, Mat] | None:
    """An explicit isomorphism ``x -> y`` of indecomposables, or None."""
    if x.dims != y.dims or x.quiver != y.quiver:
        return None
    if x.dim() == 0:
        return {v: Mat.zeros(0, 0) for v in x.quiver.vertices}
    fs = hom_space(x, y)
    if not fs:
        return None
    gs = hom_space(y, x)
    q = x.quiver
    for f in fs:
        tf = _total(f, q)
        for g in gs:
            if not is_nilpotent(_total(g, q) @ tf):
                return f
    # over Q a sum may be needed when End(x)/rad is a proper field extension
    rng = random.Random(0)
    for _ in range(8):
        tf = sum((_total(f, q) * rng.randint(-3, 3) for f in fs), Mat.zeros(x.dim(), x.dim()))
        if tf.is_invertible():
            return {v: tf_block for v, tf_block in zip(q.vertices, _blocks(tf, x))}
    return None


def _blocks(m: Mat, rep: Rep) -> list[Mat]:
    off = rep.offsets()
    out = []
    for v in rep.quiver.vertices:
        d = rep.dims[v]
        out.append(Mat._raw(tuple(r[off[v] : off[v] + d] for r in m.rows[off[v] : off[v] + d]), d))
    return out


def is_isomorphic(r1: Rep, r2: Rep, seed: int = 0) -> bool:
    """Krull-Schmidt comparison of arbitrary representations."""
    if r1.quiver != r2.quiver or r1.dims != r2.dims:
        return False
    d1 = decompose(r1, seed)
    d2 = decompose(r2, seed)
    left = [list(g) for g in d2]
    for x, m in d1:
        for g in left:
            if g[1] == m and indecomposables_isomorphic(x, g[0]):
                g[1] = 0
                break
        else:
            return False
    return all(g[1] == 0 for g in left)


# --------------------------------------------------------------------------
# Loewy structure


def socle_series(rep: Rep) -> list[dict[Vertex, list[tuple]]]:
    """Increasing socle filtration ``0 = soc^0 < soc^1 < ... = rep``.

    Returns the nonzero terms ``soc^1, soc^2, ...`` as vertexwise bases.
    """
    q = rep.quiver
    current = {v: [] for v in q.vertices}
    out = []
    while any(len(current[v]) < rep.dims[v] for v in q.vertices):
        nxt = {}
        for v in q.vertices:
            d = rep.dims[v]
            blocks = []
            for a in q.out_arrows[v]:
                t = arrow_target(a)
                if rep.dims[t] == 0:
                    continue
                sub = current[t]
                if sub:
                    ann = kernel(_basis_mat(sub, rep.dims[t]).T)
                    if not ann:
                        continue
                    qt = Mat(ann, rep.dims[t])
                else:
                    qt = Mat.identity(rep.dims[t])
                blocks.append(qt @ rep.maps[a])
            if blocks:
                nxt[v] = kernel(vstack(blocks, d))
            else:
                nxt[v] = [tuple(Fraction(int(i == j)) for i in range(d)) for j in range(d)]
        if all(len(nxt[v]) == len(current[v]) for v in q.vertices):
            raise DomainError("socle series stalled (relations violated?)")
        out.append(nxt)
        current = nxt
    return out


def socle_layers(rep: Rep) -> list[dict[Vertex, int]]:
    """Composition factors of each socle layer, bottom first."""
    prev = {v: 0 for v in rep.quiver.vertices}
    out = []
    for term in socle_series(rep):
        out.append({v: len(term[v]) - prev[v] for v in rep.quiver.vertices if len(term[v]) - prev[v]})
        prev = {v: len(term[v]) for v in rep.quiver.vertices}
    return out


def top(rep: Rep) -> dict[Vertex, int]:
    """Multiplicities of simples in ``rep / rad rep``."""
    out = {}
    for v in rep.quiver.vertices:
        imgs = []
        for a in rep.quiver.arrows:
            if arrow_target(a) == v and rep.dims[a[2]]:
                imgs.extend(rep.maps[a].columns())
        r = len(column_space(imgs, rep.dims[v])) if imgs else 0
        if rep.dims[v] - r:
            out[v] = rep.dims[v] - r
    return out


# --------------------------------------------------------------------------
# classification of indecomposables

# compass names of the V_2 vertices
N, E, W, S = (-1, -1), (-1, 0), (0, -1), (0, 0)
COMPASS = {N: "N", E: "E", W: "W", S: "S"}
COMPASS_VERTEX = {v: k for k, v in COMPASS.items()}

# the two Euclidean subquivers (type A~3 with alternating orientation)
A_ARROWS = [("d", 1, E), ("t", 0, E), ("d", 0, W), ("t", 1, W)]  # E->N, E->S, W->N, W->S
B_ARROWS = [("t", 1, N), ("t", 0, N), ("d", 0, S), ("d", 1, S)]  # N->E, N->W, S->E, S->W
A_SOURCES, A_SINKS = (E, W), (N, S)
B_SOURCES, B_SINKS = (N, S), (E, W)
# projective-injective rho_1..rho_4, indexed by the vertex generating them
RHO_ORDER = [E, N, W, S]

WILD_NOTICE = "V_k with k >= 3 has wild representation type; only generic data reported"


@dataclass(frozen=True)
class IndecLabel:
    k: int
    kind: str  # "simple", "V1", "rho", "A", "B", "generic"
    name: str
    dims: tuple[tuple[str, int], ...]
    defect: int | None = None
    parameter: str | None = None
    notice: str | None = None

    def __str__(self):
        bits = [self.name]
        if self.defect is not None:
            bits.append(f"defect={self.defect}")
        if self.parameter is not None:
            bits.append(f"parameter={self.parameter}")
        return " ".join(bits)


def _dims_key(rep: Rep) -> tuple[tuple[str, int], ...]:
    return tuple((vertex_bits(v), rep.dims[v]) for v in rep.quiver.vertices)


def classify(rep: Rep, seed: int = 0) -> IndecLabel:
    """Name an indecomposable representation of ``V_0``, ``V_1`` or ``V_2``."""
    if not is_indecomposable(rep, seed):
        raise DomainError("classify expects an indecomposable representation")
    k = rep.k
    dk = _dims_key(rep)
    if k == 0:
        return IndecLabel(0, "simple", "L", dk)
    if k == 1:
        lo, hi = rep.dims[(-1,)], rep.dims[(0,)]
        if (lo, hi) == (1, 0):
            return IndecLabel(1, "V1", "(1,0)", dk)
        if (lo, hi) == (0, 1):
            return IndecLabel(1, "V1", "(0,1)", dk)
        sign = "+" if not rep.maps[("t", 0, (-1,))].is_zero() else "-"
        return IndecLabel(1, "V1", f"(1,1){sign}", dk)
    if k >= 3:
        return IndecLabel(k, "generic", "indecomposable", dk, notice=WILD_NOTICE)
    return _classify_v2(rep, dk)


def _classify_v2(rep: Rep, dk) -> IndecLabel:
    for s in RHO_ORDER:
        for i in range(2):
            a = rep.quiver._step(i, s)
            b = rep.quiver._step(1 - i, arrow_target(a))
            if not rep.compose([a, b]).is_zero():
                return IndecLabel(2, "rho", f"rho{RHO_ORDER.index(s) + 1}", dk)
    a_live = any(not rep.maps[a].is_zero() for a in A_ARROWS)
    b_live = any(not rep.maps[a].is_zero() for a in B_ARROWS)
    if a_live and b_live:
        raise DomainError("indecomposable is neither A- nor B-induced")
    if not a_live and not b_live:
        v = next(v for v in rep.quiver.vertices if rep.dims[v])
        side = "A" if v in A_SINKS else "B"
    else:
        side = "A" if a_live else "B"
    srcs, sinks = (A_SOURCES, A_SINKS) if side == "A" else (B_SOURCES, B_SINKS)
    defect = sum(rep.dims[v] for v in srcs) - sum(rep.dims[v] for v in sinks)
    param = None
    if defect == 0:
        param = regular_parameter(rep if side == "A" else dual(rep))
    if defect < 0:
        family = "preprojective"
    elif defect > 0:
        family = "preinjective"
    else:
        family = "regular"
    return IndecLabel(2, side, f"{side}-{family}", dk, defect=defect, parameter=param)


def regular_parameter(rep: Rep) -> str:
    """Tube of a defect-zero indecomposable A-induced representation.

    With ``a = E->N``, ``b = E->S``, ``c = W->N``, ``d = W->S`` the pencil
    ``H(l, m) = det [[b, -d], [l a, -m c]]`` vanishes only at the tube's
    point; ``c`` singular gives ``0``, ``a`` singular gives ``inf``.
    """
    dims = {COMPASS[v]: rep.dims[v] for v in (N, E, W, S)}
    lo = min(dims.values())
    excess = {x for x, d in dims.items() if d > lo}
    if excess:
        if excess in ({"E", "N"}, {"W", "S"}):
            return "0"
        if excess in ({"E", "S"}, {"W", "N"}):
            return "inf"
        raise DomainError(f"dimension vector {dims} is not regular")
    a, b = rep.maps[A_ARROWS[0]], rep.maps[A_ARROWS[1]]
    c, d = rep.maps[A_ARROWS[2]], rep.maps[A_ARROWS[3]]
    n = lo

    def h(lam, mu):
        top_ = [list(rb) + [-x for x in rd] for rb, rd in zip(b.rows, d.rows)]
        bot = [[lam * x for x in ra] + [-mu * x for x in rc] for ra, rc in zip(a.rows, c.rows)]
        return Mat(top_ + bot, 2 * n).det()

    from .exactla import Poly

    # interpolate h(l, 1), a polynomial of degree <= n
    xs = list(range(n + 1))
    ys = [h(Fraction(x), Fraction(1)) for x in xs]
    poly = Poly()
    for j, xj in enumerate(xs):
        term = Poly((1,))
        for m, xm in enumerate(xs):
            if m != j:
                term = term * Poly((-xm, 1)) * Fraction(1, xj - xm)
        poly = poly + term * ys[j]
    if poly.is_zero():
        raise DomainError("pencil vanishes identically; representation is not regular indecomposable")
    if poly.degree < n:
        return "inf"
    facs = poly.factor()
    if len(facs) != 1:
        raise DomainError("pencil has several roots; representation is decomposable")
    p = facs[0][0]
    if p.degree == 1:
        root = -p.coeffs[0]
        return str(root.numerator) if root.denominator == 1 else f"{root.numerator}/{root.denominator}"
    return str(p)


# --------------------------------------------------------------------------
# seeded random valid representations


def random_rep(k: int, rng: random.Random, max_dim: int = 3, generators: int = 2) -> Rep:
    """A random quotient of a sum of indecomposable projectives.

    The result always satisfies the relations; vertex dimensions are capped
    by ``max_dim``.
    """
    q = BoundQuiver(k)
    while True:
        counts = {v: 0 for v in q.vertices}
        for _ in range(rng.randint(1, max(1, max_dim))):
            counts[rng.choice(q.vertices)] += 1
        # every projective is 1-dimensional at each vertex
        if sum(counts.values()) <= max_dim:
            break
    summands = [projective(k, v) for v in q.vertices for _ in range(counts[v])]
    big = direct_sum(*summands)
    vectors = {}
    for _ in range(rng.randint(0, generators)):
        v = rng.choice(q.vertices)
        d = big.dims[v]
        vec = tuple(rng.randint(-2, 2) for _ in range(d))
        if any(vec):
            vectors.setdefault(v, []).append(vec)
    return quotient(big, generated(big, vectors))
