"""Bounded weight ``A_n``-modules as finite quiver data.

A block is fixed by the fractional parts ``frac`` of the weights; coordinates
with integral weights form the set ``I`` and the block is equivalent to
representations of the cube quiver ``V_k`` (``k = |I|``).  The corner ``s``
of the cube stands for all weights ``mu`` with ``s_i = 0`` when ``mu_i >= 0``
and ``s_i = -1`` otherwise.

Windows materialize the actual generator action on a finite box of weights.
Bases are trivialized so that ``t_i`` is the identity away from the seam
``-1 -> 0`` and ``d_i`` is then the scalar ``mu_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor
from typing import Sequence

from . import quiver as qv
from .errors import DomainError
from .exactla import Mat, q_str, to_q
from .quiver import Rep, Vertex
from .weyl import WeylElement


@dataclass(frozen=True)
class BlockId:
    n: int
    frac: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.frac) != self.n:
            raise DomainError("frac length must equal n")
        if any(not (0 <= f < 1) for f in self.frac):
            raise DomainError("frac entries must lie in [0, 1)")

    @property
    def integral_set(self) -> tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.frac) if f == 0)

    @property
    def k(self) -> int:
        return len(self.integral_set)

    def __str__(self):
        return "(" + ", ".join(q_str(f) for f in self.frac) + ")"


def frac_part(x: Fraction) -> Fraction:
    return x - floor(x)


def block_of(mu: Sequence) -> BlockId:
    mu = [to_q(x) for x in mu]
    return BlockId(len(mu), tuple(frac_part(x) for x in mu))


def corner(block: BlockId, mu: Sequence) -> Vertex:
    """Cube corner ``s(mu)`` over the integral coordinates."""
    return tuple(0 if to_q(mu[i]) >= 0 else -1 for i in block.integral_set)


@dataclass(frozen=True)
class WeightModule:
    block: BlockId
    rep: Rep

    def __post_init__(self):
        if self.rep.k != self.block.k:
            raise DomainError(f"block has k={self.block.k} but representation lives on V_{self.rep.k}")

    @property
    def n(self) -> int:
        return self.block.n

    @property
    def free_mult(self) -> int | None:
        return self.rep.dims[()] if self.block.k == 0 else None

    def is_zero(self) -> bool:
        return self.rep.dim() == 0

    def __repr__(self):
        return f"WeightModule(block={self.block}, {self.rep!r})"


# --------------------------------------------------------------------------
# standard modules

_F0 = Rep(1, {(-1,): 1, (0,): 1}, {("t", 0, (-1,)): Mat([[1]])})
_P0 = Rep(1, {(-1,): 1, (0,): 1}, {("d", 0, (0,)): Mat([[1]])})
_L0 = qv.simple(1, (0,))
_Lm1 = qv.simple(1, (-1,))
_ONE = Rep(0, {(): 1})


def _coordinate_factor(kind: str, mu_i: Fraction | None, s_i: int | None) -> Rep:
    if kind == "F":
        return _F0
    if kind == "P":
        return _P0 if s_i == 0 else _F0
    if kind == "L":
        return _L0 if s_i == 0 else _Lm1
    raise DomainError(f"unknown standard module kind {kind!r}")


def std_module(kind: str, mu: Sequence | None = None, *, block: BlockId | None = None,
               s: Sequence[int] | None = None) -> WeightModule:
    """Standard modules ``F(mu)``, ``P(mu)``, ``L(mu)`` and ``Ps`` (``P(s)``).

    ``F``, ``P`` and ``L`` take a weight ``mu``; ``Ps`` takes a block and a
    corner ``s`` (or a weight, from which the corner is read off).
    """
    kind = kind.upper() if kind.lower() != "ps" else "Ps"
    if kind == "Ps":
        if block is None:
            if mu is None:
                raise DomainError("Ps needs a block or a weight")
            block = block_of(mu)
            s = corner(block, mu) if s is None else s
        if s is None or len(s) != block.k:
            raise DomainError(f"Ps needs s defined on every integral coordinate ({block.k} values)")
        if any(x not in (0, -1) for x in s):
            raise DomainError("corner entries must be 0 or -1")
        return WeightModule(block, qv.projective(block.k, tuple(s)))
    if mu is None:
        raise DomainError(f"{kind} needs a weight mu")
    mu = [to_q(x) for x in mu]
    block = block_of(mu)
    if kind == "L":
        return WeightModule(block, qv.simple(block.k, corner(block, mu)))
    rep = _ONE
    for i in block.integral_set:
        fac = _coordinate_factor(kind, mu[i], 0 if mu[i] >= 0 else -1)
        rep = qv.tensor(rep, fac)
    return WeightModule(block, rep)


def simple_module(block: BlockId, s: Sequence[int]) -> WeightModule:
    return WeightModule(block, qv.simple(block.k, tuple(s)))


def weight_multiplicity(m: WeightModule, mu: Sequence) -> int:
    mu = [to_q(x) for x in mu]
    if len(mu) != m.n or block_of(mu) != m.block:
        return 0
    return m.rep.dims[corner(m.block, mu)]


def dual(m: WeightModule) -> WeightModule:
    return WeightModule(m.block, qv.dual(m.rep))


def direct_sum(*mods: WeightModule) -> WeightModule:
    if any(x.block != mods[0].block for x in mods):
        raise DomainError("direct sum across different blocks")
    return WeightModule(mods[0].block, qv.direct_sum(*(x.rep for x in mods)))


def is_isomorphic(a: WeightModule, b: WeightModule) -> bool:
    return a.block == b.block and qv.is_isomorphic(a.rep, b.rep)


def simple_label(block: BlockId, s: Vertex) -> str:
    if block.k == 0:
        return f"L(free; {block})"
    return "L(" + ",".join(str(x) for x in s) + ")"


def socle_series(m: WeightModule) -> list[list[tuple[Vertex, int]]]:
    """Socle layers, bottom first; each layer lists ``(corner, multiplicity)``."""
    return [sorted(layer.items(), reverse=True) for layer in qv.socle_layers(m.rep)]


def composition_factors(m: WeightModule) -> dict[Vertex, int]:
    return {v: d for v, d in m.rep.dims.items() if d}


# --------------------------------------------------------------------------
# windows

Offset = tuple[int, ...]


@dataclass
class Window:
    """Generator action on the weights ``base + m`` for ``m`` in a box.

    ``maps[("t", i, m)]`` goes from offset ``m`` to ``m + e_i`` and
    ``maps[("d", i, m)]`` from ``m`` to ``m - e_i``; only maps with both
    ends inside the box are stored.
    """

    base: tuple[Fraction, ...]
    box: tuple[tuple[int, int], ...]
    spaces: dict[Offset, int]
    maps: dict[tuple[str, int, Offset], Mat] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.base)

    def weight(self, m: Offset) -> tuple[Fraction, ...]:
        return tuple(b + x for b, x in zip(self.base, m))

    def offsets(self) -> list[Offset]:
        return list(self.spaces)

    def inside(self, m: Offset) -> bool:
        return all(lo <= x <= hi for x, (lo, hi) in zip(m, self.box))

    def gen(self, kind: str, i: int, m: Offset) -> Mat:
        key = (kind, i, tuple(m))
        if key not in self.maps:
            raise DomainError(f"{kind}{i + 1} at offset {m} leaves the window")
        return self.maps[key]


def _step(m: Offset, i: int, delta: int) -> Offset:
    out = list(m)
    out[i] += delta
    return tuple(out)


def box_around(n: int, radius: int, center: Sequence[int] | None = None) -> tuple[tuple[int, int], ...]:
    c = list(center) if center is not None else [0] * n
    return tuple((x - radius, x + radius) for x in c)


def materialize(m: WeightModule, box: Sequence[tuple[int, int]]) -> Window:
    """Materialize ``m`` on a box of offsets from the block's base weight."""
    block = m.block
    box = tuple((int(lo), int(hi)) for lo, hi in box)
    if len(box) != block.n:
        raise DomainError(f"box has {len(box)} coordinates, module has n={block.n}")
    if any(lo > hi for lo, hi in box):
        raise DomainError("empty box interval")
    base = block.frac
    integral = set(block.integral_set)
    pos = {i: j for j, i in enumerate(block.integral_set)}
    rep = m.rep
    win = Window(base, box, {})
    ranges = [range(lo, hi + 1) for lo, hi in box]
    for off in product(*ranges):
        win.spaces[off] = rep.dims[corner(block, off)]
    for off in win.spaces:
        s = corner(block, off)
        dim = win.spaces[off]
        for i in range(block.n):
            up = _step(off, i, 1)
            if up in win.spaces:
                if i in integral and off[i] == -1:
                    win.maps[("t", i, off)] = rep.maps[("t", pos[i], s)]
                else:
                    win.maps[("t", i, off)] = Mat.identity(dim)
            down = _step(off, i, -1)
            if down in win.spaces:
                if i in integral and off[i] == 0:
                    win.maps[("d", i, off)] = rep.maps[("d", pos[i], s)]
                else:
                    win.maps[("d", i, off)] = Mat.scalar(dim, base[i] + off[i])
    return win


def window_violations(w: Window, limit: int = 10) -> list[str]:
    """Check ``[d_i, t_j] = delta_ij``, commuting generators, and
    ``t_i d_i = mu_i`` wherever all maps involved lie in the window."""
    out = []
    n = w.n
    for m in w.spaces:
        dim = w.spaces[m]
        mu = w.weight(m)
        for i in range(n):
            dn = _step(m, i, -1)
            if dn in w.spaces:
                td = w.maps[("t", i, dn)] @ w.maps[("d", i, m)]
                if td != Mat.scalar(dim, mu[i]):
                    out.append(f"t{i + 1}d{i + 1} != {q_str(mu[i])} at {m}")
            for j in range(n):
                for a, b, expect in (("d", "t", Fraction(int(i == j))), ("t", "t", 0), ("d", "d", 0)):
                    if a == b and j <= i:
                        continue
                    lhs = _path(w, [(b, j), (a, i)], m)
                    rhs = _path(w, [(a, i), (b, j)], m)
                    if lhs is None or rhs is None:
                        continue
                    if a == b or i != j:
                        bad = not (lhs - rhs).is_zero()
                    else:
                        bad = lhs - rhs != Mat.scalar(dim, expect)
                    if bad:
                        out.append(f"[{a}{i + 1},{b}{j + 1}] wrong at {m}")
        if len(out) >= limit:
            break
    return out


def _path(w: Window, word, m: Offset) -> Mat | None:
    """Apply generators in ``word`` (first applied first) starting at ``m``."""
    acc = None
    cur = m
    for kind, i in word:
        key = (kind, i, cur)
        if key not in w.maps:
            return None
        acc = w.maps[key] if acc is None else w.maps[key] @ acc
        cur = _step(cur, i, 1 if kind == "t" else -1)
    return acc


def apply_element(u: WeylElement, w: Window, vec: Sequence, m: Offset) -> tuple[tuple, Offset]:
    """Apply a homogeneous element to ``vec`` at offset ``m``.

    Returns ``(image, target_offset)``.  In each monomial the ``d`` factors
    act first; a negative exponent inverts the corresponding generator map.
    """
    if u.n != w.n:
        raise DomainError("element and window have different n")
    m = tuple(m)
    if m not in w.spaces:
        raise DomainError(f"offset {m} outside the window")
    if len(vec) != w.spaces[m]:
        raise DomainError("vector dimension does not match the weight space")
    if not u.is_homogeneous():
        raise DomainError("apply_element needs a homogeneous element")
    if u.is_zero():
        return tuple(Fraction(0) for _ in vec), m
    deg = u.degree()
    target = tuple(x + y for x, y in zip(m, deg))
    if target not in w.spaces:
        raise DomainError(f"image weight offset {target} outside the window")
    total = [Fraction(0)] * w.spaces[target]
    for (a, b), c in u.terms.items():
        v = [to_q(x) for x in vec]
        cur = m
        for kind, exps in (("d", b), ("t", a)):
            for i, e in enumerate(exps):
                for _ in range(abs(e)):
                    v, cur = _gen_step(w, kind, i, cur, v, inverse=e < 0)
        total = [x + c * y for x, y in zip(total, v)]
    return tuple(total), target


def _gen_step(w: Window, kind: str, i: int, cur: Offset, v, inverse: bool):
    if not inverse:
        nxt = _step(cur, i, 1 if kind == "t" else -1)
        return list(w.gen(kind, i, cur).apply(v)), nxt
    # inverse of the generator: x -> y with gen(y) = x
    prev = _step(cur, i, -1 if kind == "t" else 1)
    if prev not in w.spaces:
        raise DomainError(f"inverse {kind}{i + 1} at offset {cur} leaves the window")
    g = w.gen(kind, i, prev)
    if not g.is_invertible():
        raise DomainError(f"{kind}{i + 1} is not invertible at offset {prev}")
    return list(g.inverse().apply(v)), prev
