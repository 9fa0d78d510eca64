"""The oscillator map ``omega : U(sp(2n)) -> A_n`` and sp-side views.

An element of ``sp(2n)`` is stored by its blocks ``[[A, B], [C, -A^T]]``
with ``B`` and ``C`` symmetric.  ``omega`` sends

* ``A`` to ``sum a_ij t_i d_j + tr(A)/2``,
* ``B`` to ``t^T B t``,
* ``C`` to ``-(1/4) d^T C d``,

which preserves brackets.  Its image is the even part of ``A_n``, and the
Cartan element ``E_ii`` acts on ``M^mu`` by ``mu_i + 1/2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .blocks import WeightModule, Window, apply_element, block_of, weight_multiplicity
from .errors import DomainError
from .exactla import Mat, kernel, to_q
from .weyl import WeylElement, multiply

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SpElement:
    n: int
    A: Mat
    B: Mat
    C: Mat
    name: str = ""

    def __post_init__(self):
        for m in (self.A, self.B, self.C):
            if m.shape != (self.n, self.n):
                raise DomainError(f"sp(2n) blocks must be {self.n}x{self.n}")
        if self.B != self.B.T or self.C != self.C.T:
            raise DomainError("B and C blocks must be symmetric")

    def matrix(self) -> Mat:
        top = [ra + rb for ra, rb in zip(self.A.rows, self.B.rows)]
        bot = [rc + rd for rc, rd in zip(self.C.rows, (-self.A.T).rows)]
        return Mat(top + bot, 2 * self.n)

    @classmethod
    def from_matrix(cls, m: Mat, name: str = "") -> "SpElement":
        n = m.nrows // 2
        blk = lambda r, c: Mat([row[c * n : (c + 1) * n] for row in m.rows[r * n : (r + 1) * n]], n)
        a, b, c, d = blk(0, 0), blk(0, 1), blk(1, 0), blk(1, 1)
        if d != -a.T:
            raise DomainError("matrix is not in sp(2n)")
        return cls(n, a, b, c, name)

    def __add__(self, other):
        return SpElement(self.n, self.A + other.A, self.B + other.B, self.C + other.C)

    def scale(self, c):
        return SpElement(self.n, self.A * c, self.B * c, self.C * c)

    def __str__(self):
        return self.name or repr(self)


def bracket(x: SpElement, y: SpElement) -> SpElement:
    mx, my = x.matrix(), y.matrix()
    return SpElement.from_matrix(mx @ my - my @ mx)


def _unit(n, i, j) -> Mat:
    return Mat([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])


def sp_basis(n: int) -> list[SpElement]:
    """Standard basis: ``A = E_ij``, then symmetric ``B``, then symmetric ``C``."""
    z = Mat.zeros(n, n)
    out = []
    for i in range(n):
        for j in range(n):
            out.append(SpElement(n, _unit(n, i, j), z, z, f"A{i + 1}{j + 1}"))
    for which in ("B", "C"):
        for i in range(n):
            for j in range(i, n):
                s = _unit(n, i, j) + _unit(n, j, i) if i != j else _unit(n, i, i)
                blocks = {"A": z, "B": s if which == "B" else z, "C": s if which == "C" else z}
                out.append(SpElement(n, blocks["A"], blocks["B"], blocks["C"], f"{which}{i + 1}{j + 1}"))
    return out


def omega(x: SpElement) -> WeylElement:
    n = x.n
    out = WeylElement.const(n, x.A.trace() * HALF)
    for i in range(n):
        for j in range(n):
            a, b, c = x.A[i, j], x.B[i, j], x.C[i, j]
            if a:
                out = out + multiply(WeylElement.t(n, i), WeylElement.d(n, j)).scale(a)
            if b:
                out = out + multiply(WeylElement.t(n, i), WeylElement.t(n, j)).scale(b)
            if c:
                out = out + multiply(WeylElement.d(n, i), WeylElement.d(n, j)).scale(-c / 4)
    return out


def sp_weight(mu: Sequence) -> tuple[Fraction, ...]:
    """epsilon-coordinates of the sp-weight carried by ``M^mu``."""
    return tuple(to_q(m) + HALF for m in mu)


def a_weight(lam: Sequence) -> tuple[Fraction, ...]:
    return tuple(to_q(x) - HALF for x in lam)


# --------------------------------------------------------------------------
# cosets of the root lattice Q = {v in Z^n : sum v even}


def coset_parity(module: WeightModule, coset) -> int:
    """Normalize a coset spec ("even", "odd", or a weight) to a parity."""
    if coset in ("even", 0):
        return 0
    if coset in ("odd", 1):
        return 1
    mu = [to_q(x) for x in coset]
    if block_of(mu) != module.block:
        raise DomainError("coset is not inside the module's block")
    off = [m - f for m, f in zip(mu, module.block.frac)]
    return int(sum(off)) % 2


def sp_support(module: WeightModule, coset, box: Sequence[tuple[int, int]]) -> dict[tuple[Fraction, ...], int]:
    """Nonzero multiplicities on one Q-coset, keyed by sp-weight."""
    parity = coset_parity(module, coset)
    if len(box) != module.n:
        raise DomainError("box dimension mismatch")
    from itertools import product

    out = {}
    for off in product(*[range(lo, hi + 1) for lo, hi in box]):
        if sum(off) % 2 != parity:
            continue
        mu = tuple(f + o for f, o in zip(module.block.frac, off))
        d = weight_multiplicity(module, mu)
        if d:
            out[sp_weight(mu)] = d
    return out


# --------------------------------------------------------------------------
# elements of U(sp(2n)) as noncommutative polynomials in the basis

UElement = dict  # word (tuple of basis indices) -> Fraction


def omega_u(u: UElement, basis: Sequence[SpElement]) -> WeylElement:
    n = basis[0].n
    images = [omega(b) for b in basis]
    out = WeylElement.zero(n)
    for word, c in u.items():
        acc = WeylElement.const(n, c)
        for i in word:
            acc = multiply(acc, images[i])
        out = out + acc
    return out


def kernel_elements(n: int, count: int, seed: int = 0, max_degree: int = 3) -> list[UElement]:
    """Seeded elements of ``ker omega`` of degree at most ``max_degree``.

    The kernel in degree <= 2 is found exactly from PBW monomials; degree 3
    elements are products of those with basis elements (plus random
    combinations).  Every returned element is re-checked to map to zero.
    """
    basis = sp_basis(n)
    images = [omega(b) for b in basis]
    words = [()] + [(i,) for i in range(len(basis))]
    words += list(combinations_with_replacement(range(len(basis)), 2))
    ims = []
    for w in words:
        acc = WeylElement.const(n)
        for i in w:
            acc = multiply(acc, images[i])
        ims.append(acc)
    keys = sorted({k for im in ims for k in im.terms})
    system = Mat([[im.terms.get(k, Fraction(0)) for im in ims] for k in keys], len(ims))
    low = []
    for vec in kernel(system):
        low.append({w: c for w, c in zip(words, vec) if c})
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        u = {}
        for _ in range(rng.randint(1, 2)):
            base = rng.choice(low)
            c = Fraction(rng.randint(-3, 3) or 1)
            if max_degree >= 3 and rng.random() < 0.7:
                g = rng.randrange(len(basis))
                left = rng.random() < 0.5
                for w, cw in base.items():
                    nw = (g,) + w if left else w + (g,)
                    u[nw] = u.get(nw, Fraction(0)) + c * cw
            else:
                for w, cw in base.items():
                    u[w] = u.get(w, Fraction(0)) + c * cw
        u = {w: c for w, c in u.items() if c}
        if u and omega_u(u, basis).is_zero():
            out.append(u)
    return out


def apply_u(u: UElement, basis: Sequence[SpElement], w: Window, vec: Sequence, offset) -> dict:
    """Act by ``u`` on a window vector, one basis factor at a time
    (rightmost factor first); returns ``{target offset: vector}``."""
    images = [omega(b) for b in basis]
    total: dict = {}
    for word, c in u.items():
        parts = {tuple(offset): tuple(to_q(x) for x in vec)}
        for i in reversed(word):
            nxt: dict = {}
            for off, v in parts.items():
                for _, piece, _ in _homogeneous(images[i]):
                    img, tgt = apply_element(piece, w, v, off)
                    prev = nxt.get(tgt)
                    nxt[tgt] = img if prev is None else tuple(a + b for a, b in zip(prev, img))
            parts = nxt
        for off, v in parts.items():
            prev = total.get(off)
            v = tuple(c * x for x in v)
            total[off] = v if prev is None else tuple(a + b for a, b in zip(prev, v))
    return total


def _homogeneous(u: WeylElement):
    from .weyl import homogeneous_parts

    return homogeneous_parts(u)
