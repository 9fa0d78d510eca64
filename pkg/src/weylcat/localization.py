"""Localization and twisted localization of weight modules.

On quiver data, localizing at ``t_i`` keeps the face ``s_i = 0`` of the cube
and re-extends it with an identity ``t``-edge and a zero ``d``-edge
(symmetrically for ``d_i``).  Torsion is killed in the process.  The face
formula is checked in the tests against a direct-limit computation on
materialized windows (:func:`direct_limit_window`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import quiver as qv
from .blocks import BlockId, WeightModule, Window, dual, frac_part, materialize
from .errors import DomainError
from .exactla import Mat, to_q
from .quiver import Rep, Vertex, arrow_target
from .weyl import WeylElement, multiply


@dataclass(frozen=True)
class Direction:
    coord: int  # 0-based
    side: str  # "t" or "d"

    def __post_init__(self):
        if self.side not in ("t", "d"):
            raise DomainError(f"direction side must be 't' or 'd', got {self.side!r}")
        if self.coord < 0:
            raise DomainError("negative coordinate")

    def generator(self, n: int) -> WeylElement:
        return WeylElement.t(n, self.coord) if self.side == "t" else WeylElement.d(n, self.coord)

    def __str__(self):
        return f"{self.side}{self.coord + 1}"


def parse_directions(text: str) -> list[Direction]:
    """``"t1,d2"`` -> directions (1-based in the text)."""
    out = []
    for item in filter(None, (x.strip() for x in text.split(","))):
        if item[0] not in "td" or not item[1:].isdigit() or int(item[1:]) < 1:
            raise DomainError(f"bad direction {item!r} (expected e.g. t1 or d2)")
        out.append(Direction(int(item[1:]) - 1, item[0]))
    return check_gamma(out)


def check_gamma(gamma: Iterable[Direction], n: int | None = None) -> list[Direction]:
    gamma = list(gamma)
    coords = [g.coord for g in gamma]
    if len(set(coords)) != len(coords):
        raise DomainError("at most one direction per coordinate")
    if n is not None and any(c >= n for c in coords):
        raise DomainError(f"direction coordinate out of range for n={n}")
    return sorted(gamma, key=lambda g: g.coord)


# --------------------------------------------------------------------------
# the conjugation operator


def theta(u: WeylElement, gamma: Sequence[Direction], x: Sequence) -> WeylElement:
    """``Theta_x(u) = sum prod binom(x_j, i_j) ad(f)^i(u) f^{-i}``.

    For integral ``x`` this is conjugation ``f^x u f^{-x}``.
    """
    gamma = check_gamma(gamma, u.n)
    x = [to_q(v) for v in x]
    if len(x) != len(gamma):
        raise DomainError("one parameter per direction")
    out = u
    for g, xj in zip(gamma, x):
        out = _theta_one(out, g, xj)
    return out


def _theta_one(u: WeylElement, g: Direction, x: Fraction) -> WeylElement:
    n = u.n
    f = g.generator(n)
    total = WeylElement.zero(n)
    term = u
    i = 0
    # ad(t_c) lowers the d_c exponent (and ad(d_c) the t_c exponent), so the
    # sum terminates unless u carries negative powers of the opposite generator
    bound = _ad_bound(u, g)
    while not term.is_zero():
        if i > bound:
            raise DomainError("Theta sum does not terminate for this element")
        c = gen_binom_q(x, i)
        if c:
            finv = WeylElement.t(n, g.coord, -i) if g.side == "t" else WeylElement.d(n, g.coord, -i)
            total = total + multiply(term, finv).scale(c)
        term = multiply(f, term) - multiply(term, f)
        i += 1
    return total


def _ad_bound(u: WeylElement, g: Direction) -> int:
    idx = 1 if g.side == "t" else 0
    exps = [ab[idx][g.coord] for ab in u.terms]
    if any(e < 0 for e in exps):
        raise DomainError(f"element is Laurent in the direction opposite to {g}")
    return max(exps, default=0)


def gen_binom_q(x: Fraction, i: int) -> Fraction:
    out = Fraction(1)
    for j in range(i):
        out = out * (x - j) / (j + 1)
    return out


def conjugate_by_power(u: WeylElement, g: Direction, m: int) -> WeylElement:
    """Explicit ``f^m u f^{-m}`` (the integral case of Theta)."""
    n = u.n
    make = WeylElement.t if g.side == "t" else WeylElement.d
    return multiply(multiply(make(n, g.coord, m), u), make(n, g.coord, -m))


# --------------------------------------------------------------------------
# cube surgery


def face(rep: Rep, p: int, value: int) -> Rep:
    """Restrict to the face ``s_p = value`` and drop coordinate ``p``."""
    k = rep.k
    q = qv.BoundQuiver(k - 1)
    dims = {}
    maps = {}
    for v in q.vertices:
        full = v[:p] + (value,) + v[p:]
        dims[v] = rep.dims[full]
    for a in q.arrows:
        kind, i, s = a
        full = s[:p] + (value,) + s[p:]
        j = i if i < p else i + 1
        maps[a] = rep.maps[(kind, j, full)]
    return Rep(q, dims, maps)


def insert_coordinate(rep: Rep, p: int, pattern: str) -> Rep:
    """Add coordinate ``p`` with an identity ``t``-edge (pattern ``"t"``) or
    identity ``d``-edge (pattern ``"d"``); the other edge is zero."""
    k = rep.k + 1
    q = qv.BoundQuiver(k)
    dims = {}
    maps = {}
    for v in q.vertices:
        dims[v] = rep.dims[v[:p] + v[p + 1 :]]
    for a in q.arrows:
        kind, i, s = a
        rest = s[:p] + s[p + 1 :]
        if i == p:
            d = dims[s]
            maps[a] = Mat.identity(d) if kind == pattern else Mat.zeros(d, d)
        else:
            maps[a] = rep.maps[(kind, i if i < p else i - 1, rest)]
    return Rep(q, dims, maps)


def _quiver_pos(block: BlockId) -> dict[int, int]:
    return {i: j for j, i in enumerate(block.integral_set)}


# --------------------------------------------------------------------------
# localization and twists


def localize(m: WeightModule, gamma: Sequence[Direction]) -> WeightModule:
    gamma = check_gamma(gamma, m.n)
    pos = _quiver_pos(m.block)
    rep = m.rep
    for g in gamma:
        if g.coord not in pos:
            continue  # generators already act bijectively off the integral set
        p = pos[g.coord]
        rep = insert_coordinate(face(rep, p, 0 if g.side == "t" else -1), p, g.side)
    return WeightModule(m.block, rep)


def is_bijective(m: WeightModule, gamma: Sequence[Direction]) -> bool:
    pos = _quiver_pos(m.block)
    for g in check_gamma(gamma, m.n):
        if g.coord not in pos:
            continue
        p = pos[g.coord]
        for a, mat in m.rep.maps.items():
            if a[1] == p and a[0] == g.side:
                if not mat.is_invertible():
                    return False
    return True


def localization_map(m: WeightModule, gamma: Sequence[Direction]) -> dict[Vertex, Mat]:
    """Vertexwise matrices of the natural map ``M -> D_Gamma M``."""
    gamma = check_gamma(gamma, m.n)
    pos = _quiver_pos(m.block)
    out = {}
    for v in m.rep.quiver.vertices:
        mat = Mat.identity(m.rep.dims[v])
        cur = v
        for g in gamma:
            if g.coord not in pos:
                continue
            p = pos[g.coord]
            want = 0 if g.side == "t" else -1
            if cur[p] != want:
                a = (g.side, p, cur)
                mat = m.rep.maps[a] @ mat
                cur = arrow_target(a)
        out[v] = mat
    return out


def twist(m: WeightModule, gamma: Sequence[Direction], x: Sequence) -> WeightModule:
    """Shift the block by ``x`` along Gamma (the functor ``Phi^x``)."""
    gamma = check_gamma(gamma, m.n)
    x = [to_q(v) for v in x]
    if len(x) != len(gamma):
        raise DomainError("one twist parameter per direction")
    if not is_bijective(m, gamma):
        raise DomainError("twist needs a Gamma-bijective module (localize first)")
    frac = list(m.block.frac)
    rep = m.rep
    integral = list(m.block.integral_set)
    for g, xi in zip(gamma, x):
        i = g.coord
        new = frac_part(frac[i] + xi)
        was, now = frac[i] == 0, new == 0
        if was and not now:
            p = integral.index(i)
            rep = face(rep, p, 0 if g.side == "t" else -1)
            integral.remove(i)
        elif now and not was:
            p = sum(1 for j in integral if j < i)
            rep = insert_coordinate(rep, p, g.side)
            integral.insert(p, i)
        frac[i] = new
    return WeightModule(BlockId(m.n, tuple(frac)), rep)


def twisted_localize(m: WeightModule, gamma: Sequence[Direction], x: Sequence) -> WeightModule:
    return twist(localize(m, gamma), gamma, x)


def _simple_corner(m: WeightModule) -> Vertex:
    live = [v for v, d in m.rep.dims.items() if d]
    if len(live) != 1 or m.rep.dims[live[0]] != 1:
        raise DomainError("expected a simple module")
    return live[0]


def injective_hull(m: WeightModule, side: str = "A") -> WeightModule:
    """Injective hull of a simple module in its block.

    ``side="sp"`` reads the module through the sp(2n) dictionary, where
    rank one has no injectives.
    """
    if side == "sp" and m.n == 1:
        raise DomainError("sp(2) blocks have no injective or projective objects (rank 1)")
    s = _simple_corner(m)
    gamma = [Direction(i, "t" if s[p] == 0 else "d") for p, i in enumerate(m.block.integral_set)]
    return localize(m, gamma)


def projective_cover(m: WeightModule, side: str = "A") -> WeightModule:
    if side == "sp" and m.n == 1:
        raise DomainError("sp(2) blocks have no injective or projective objects (rank 1)")
    return dual(injective_hull(dual(m), side))


# --------------------------------------------------------------------------
# brute-force oracle


def direct_limit_window(m: WeightModule, gamma: Sequence[Direction], box: Sequence[tuple[int, int]]) -> Window:
    """``D_Gamma M`` on ``box`` computed from ``M`` alone.

    The weight space at ``mu`` is identified with ``f^{-R} M^{mu + R e}``
    far beyond the seam, where every ``f`` in Gamma acts invertibly; the
    generator action picks up the commutator corrections
    ``d t^{-R} = t^{-R} d - R t^{-R-1}`` and ``t d^{-R} = d^{-R} t + R d^{-R-1}``.
    """
    gamma = check_gamma(gamma, m.n)
    box = [tuple(b) for b in box]
    radius = max(max(abs(lo), abs(hi)) for lo, hi in box)
    r = radius + 2
    shift = [0] * m.n
    for g in gamma:
        shift[g.coord] = r if g.side == "t" else -r
    big_box = [(lo + s - 1, hi + s + 1) for (lo, hi), s in zip(box, shift)]
    src = materialize(m, big_box)
    out = Window(src.base, tuple(box), {})

    def far(off):
        return tuple(o + s for o, s in zip(off, shift))

    for off in product(*[range(lo, hi + 1) for lo, hi in box]):
        out.spaces[off] = src.spaces[far(off)]
    sides = {g.coord: g.side for g in gamma}
    for off in out.spaces:
        f = far(off)
        for i in range(m.n):
            up = list(off)
            up[i] += 1
            up = tuple(up)
            if up in out.spaces:
                t = src.gen("t", i, f)
                if sides.get(i) == "d":
                    # t d^{-R} = d^{-R} t + R d^{-R-1}
                    dinv = src.gen("d", i, tuple(x + (j == i) for j, x in enumerate(f))).inverse()
                    t = t + dinv * r
                out.maps[("t", i, off)] = t
            dn = list(off)
            dn[i] -= 1
            dn = tuple(dn)
            if dn in out.spaces:
                d = src.gen("d", i, f)
                if sides.get(i) == "t":
                    tinv = src.gen("t", i, tuple(x - (j == i) for j, x in enumerate(f))).inverse()
                    d = d - tinv * r
                out.maps[("d", i, off)] = d
    return out


def window_to_rep(w: Window, block: BlockId) -> Rep:
    """Read the quiver representation off the seam weights of a window.

    Requires offsets ``-1`` and ``0`` in every integral coordinate and ``0``
    in the others.
    """
    q = qv.BoundQuiver(block.k)
    integral = block.integral_set

    def offset(s):
        off = [0] * block.n
        for p, i in enumerate(integral):
            off[i] = s[p]
        return tuple(off)

    dims = {}
    for s in q.vertices:
        if offset(s) not in w.spaces:
            raise DomainError("window does not contain the seam weights")
        dims[s] = w.spaces[offset(s)]
    maps = {}
    for a in q.arrows:
        kind, p, s = a
        maps[a] = w.gen(kind, integral[p], offset(s))
    return Rep(q, dims, maps)


def is_injective(m: WeightModule, gamma: Sequence[Direction]) -> bool:
    """Every generator of Gamma acts injectively (``M`` embeds in ``D_Gamma M``)."""
    pos = _quiver_pos(m.block)
    for g in check_gamma(gamma, m.n):
        if g.coord not in pos:
            continue
        p = pos[g.coord]
        for a, mat in m.rep.maps.items():
            if a[1] == p and a[0] == g.side and mat.rank() != mat.ncols:
                return False
    return True
