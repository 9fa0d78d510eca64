"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`; floats are rejected at
the boundary.  The module provides a small immutable matrix type, rational
polynomials, and the finite-dimensional algebra routines (Jacobson radical,
splitting idempotents) that drive Krull-Schmidt decomposition elsewhere.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import DomainError

LOCAL = "local"
SPLIT_ATTEMPTS = 16


_ZERO, _ONE = Fraction(0), Fraction(1)


def to_q(x) -> Fraction:
    """Coerce ``x`` to an exact rational; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if any(ch in s for ch in ".eE"):
            raise DomainError(f"non-rational literal {x!r}")
        return Fraction(s)
    raise DomainError(f"cannot use {type(x).__name__} {x!r} as an exact rational")


def q_str(x: Fraction) -> str:
    x = to_q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Mat:
    """Immutable dense rational matrix (row-major)."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(to_q(x) for x in r) for r in rows)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise DomainError("ragged matrix rows")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise DomainError(f"declared {ncols} columns, rows have {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows, ncols):
        # trusted constructor: rows already tuples of Fractions
        m = object.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, r: int, c: int) -> "Mat":
        z = Fraction(0)
        return cls._raw(tuple((z,) * c for _ in range(r)), c)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls.scalar(n, _ONE)

    @classmethod
    def scalar(cls, n: int, c) -> "Mat":
        c = to_q(c)
        row = (_ZERO,) * n
        return cls._raw(tuple(row[:i] + (c,) + row[i + 1 :] for i in range(n)), n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "Mat":
        cols = [tuple(to_q(x) for x in c) for c in cols]
        if not cols:
            return cls.zeros(nrows or 0, 0)
        return cls._raw(tuple(zip(*cols)), len(cols)) if cols[0] else cls.zeros(0, len(cols))

    @classmethod
    def diag(cls, entries: Sequence) -> "Mat":
        n = len(entries)
        z = Fraction(0)
        return cls._raw(tuple(tuple(to_q(entries[i]) if i == j else z for j in range(n)) for i in range(n)), n)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Mat) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(q_str(x) for x in r) for r in self.rows)
        return f"Mat({self.nrows}x{self.ncols}: [{body}])"

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DomainError(f"shape mismatch {self.shape} + {other.shape}")
        return Mat._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise DomainError(f"shape mismatch {self.shape} - {other.shape}")
        return Mat._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Mat":
        return Mat._raw(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def __mul__(self, other):
        if isinstance(other, Mat):
            return self.matmul(other)
        c = to_q(other)
        return Mat._raw(tuple(tuple(a * c for a in r) for r in self.rows), self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other: "Mat") -> "Mat":
        return self.matmul(other)

    def matmul(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise DomainError(f"shape mismatch {self.shape} @ {other.shape}")
        z = Fraction(0)
        # row-times-sparse-rows accumulation, skipping zero entries on both sides
        orows = [[(j, b) for j, b in enumerate(r) if b] for r in other.rows]
        out = []
        for r in self.rows:
            acc = [z] * other.ncols
            for k, a in enumerate(r):
                if a:
                    for j, b in orows[k]:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Mat._raw(tuple(out), other.ncols)

    @property
    def T(self) -> "Mat":
        if self.nrows == 0:
            return Mat.zeros(self.ncols, 0)
        return Mat._raw(tuple(zip(*self.rows)), self.nrows)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    def flat(self) -> tuple:
        return tuple(a for r in self.rows for a in r)

    def __pow__(self, k: int) -> "Mat":
        if not self.is_square():
            raise DomainError("power of non-square matrix")
        result = Mat.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, v: Sequence) -> tuple:
        z = Fraction(0)
        return tuple(sum((a * b for a, b in zip(r, v) if a), z) for r in self.rows)

    def rank(self) -> int:
        return len(rref(self)[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise DomainError("determinant of non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.nrows
        d = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d *= a[c][c]
            inv = 1 / a[c][c]
            for i in range(c + 1, n):
                f = a[i][c] * inv
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return d

    def inverse(self) -> "Mat":
        if not self.is_square():
            raise DomainError("inverse of non-square matrix")
        n = self.nrows
        aug = Mat._raw(tuple(r + Mat.identity(n).rows[i] for i, r in enumerate(self.rows)), 2 * n)
        r, piv = rref(aug)
        if piv[:n] != list(range(n)):
            raise DomainError("matrix is singular")
        return Mat._raw(tuple(row[n:] for row in r.rows[:n]), n)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows


def block_diag(blocks: Sequence[Mat]) -> Mat:
    nc = sum(b.ncols for b in blocks)
    z = Fraction(0)
    rows = []
    off = 0
    for b in blocks:
        for r in b.rows:
            rows.append((z,) * off + r + (z,) * (nc - off - b.ncols))
        off += b.ncols
    return Mat._raw(tuple(rows), nc)


def hstack(mats: Sequence[Mat], nrows: int | None = None) -> Mat:
    mats = list(mats)
    if not mats:
        return Mat.zeros(nrows or 0, 0)
    n = mats[0].nrows
    if any(m.nrows != n for m in mats):
        raise DomainError("hstack row mismatch")
    return Mat._raw(tuple(sum((m.rows[i] for m in mats), ()) for i in range(n)), sum(m.ncols for m in mats))


def vstack(mats: Sequence[Mat], ncols: int | None = None) -> Mat:
    mats = list(mats)
    if not mats:
        return Mat.zeros(0, ncols or 0)
    c = mats[0].ncols
    if any(m.ncols != c for m in mats):
        raise DomainError("vstack column mismatch")
    return Mat._raw(sum((m.rows for m in mats), ()), c)


# --------------------------------------------------------------------------
# row reduction


def _rref_lists(a: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place reduced row echelon form; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        inv = 1 / pr[c]
        if inv != 1:
            pr = a[r] = [x * inv for x in pr]
        nz = [(j, pr[j]) for j in range(c, ncols) if pr[j]]
        for i in range(nrows):
            if i != r:
                row = a[i]
                f = row[c]
                if f:
                    for j, y in nz:
                        row[j] -= f * y
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    a = [list(r) for r in m.rows]
    piv = _rref_lists(a, m.ncols)
    return Mat._raw(tuple(tuple(r) for r in a), m.ncols), piv


def _kernel_from_rref(a, piv, ncols) -> list[tuple]:
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -a[i][f]
        basis.append(tuple(v))
    return basis


def kernel(m: Mat) -> list[tuple]:
    """Basis of the right null space, as coordinate tuples."""
    a = [list(r) for r in m.rows]
    piv = _rref_lists(a, m.ncols)
    return _kernel_from_rref(a, piv, m.ncols)


def rank_profile(m: Mat) -> tuple[int, list[Mat], list[Mat]]:
    """Return ``(rank, kernel_basis, image_basis)``; bases are column matrices.

    The image basis consists of the pivot columns of ``m`` itself.
    """
    a = [list(r) for r in m.rows]
    piv = _rref_lists(a, m.ncols)
    ker = [Mat.from_columns([v]) for v in _kernel_from_rref(a, piv, m.ncols)]
    img = [Mat.from_columns([m.col(p)]) for p in piv]
    return len(piv), ker, img


def column_space(vectors: Sequence[Sequence], dim: int) -> list[tuple]:
    """Reduced basis (as tuples) of the span of ``vectors`` in Q^dim."""
    a = [[to_q(x) for x in v] for v in vectors if any(v)]
    if not a:
        return []
    piv = _rref_lists(a, dim)
    return [tuple(a[i]) for i in range(len(piv))]


def solve(m: Mat, b: Sequence) -> tuple | None:
    """One solution of ``m x = b`` or ``None``."""
    n = m.ncols
    a = [list(r) + [to_q(bi)] for r, bi in zip(m.rows, b)]
    piv = _rref_lists(a, n + 1)
    if piv and piv[-1] == n:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(piv):
        x[p] = a[i][n]
    return tuple(x)


def solve_matrix(a: Mat, b: Mat) -> Mat | None:
    """Solve ``a X = b`` column by column; ``None`` if inconsistent."""
    cols = []
    for j in range(b.ncols):
        x = solve(a, b.col(j))
        if x is None:
            return None
        cols.append(x)
    if not cols:
        return Mat.zeros(a.ncols, 0)
    return Mat.from_columns(cols)


class Span:
    """A subspace of Q^dim kept in reduced echelon form for fast membership."""

    def __init__(self, vectors: Iterable[Sequence], dim: int):
        self.dim = dim
        rows = [list(map(to_q, v)) for v in vectors]
        rows = [r for r in rows if any(r)]
        self.pivots = _rref_lists(rows, dim) if rows else []
        self.rows = [rows[i] for i in range(len(self.pivots))]

    def __len__(self):
        return len(self.pivots)

    def reduce(self, v: Sequence) -> list[Fraction]:
        v = list(v)
        for p, r in zip(self.pivots, self.rows):
            f = v[p]
            if f:
                v = [x - f * y for x, y in zip(v, r)]
        return v

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> list[Fraction] | None:
        """Coordinates of ``v`` against the echelon rows, or None if outside."""
        if any(self.reduce(v)):
            return None
        return [to_q(v[p]) for p in self.pivots]


# --------------------------------------------------------------------------
# polynomials


class Poly:
    """Rational polynomial, coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_q(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        return reduce(lambda p, r: p * cls((-to_q(r), 1)), roots, cls((1,)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        inv = 1 / self.lead
        return Poly(c * inv for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = q_str(c) + ("*" + mono if mono else "")
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Poly":
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = to_q(other)
            return Poly(x * c for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        return reduce(lambda p, _: p * self, range(k), Poly((1,)))

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(len(r) - other.degree, 1)
        inv = 1 / other.lead
        while len(r) - 1 >= other.degree and any(r):
            shift = len(r) - 1 - other.degree
            f = r[-1] * inv
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                r[shift + i] -= f * c
            r.pop()
            while r and not r[-1]:
                r.pop()
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x):
        if isinstance(x, Mat):
            n = x.nrows
            acc = Mat.zeros(n, n)
            for c in reversed(self.coeffs):
                acc = acc @ x + Mat.scalar(n, c)
            return acc
        x = to_q(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def factor(self) -> list[tuple["Poly", int]]:
        """Monic irreducible factors over Q with multiplicities (sorted)."""
        return factor_poly(self)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``u a + v b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lead
    return r0 * inv, s0 * inv, t0 * inv


def factor_poly(p: Poly) -> list[tuple[Poly, int]]:
    if p.degree < 1:
        return []
    # factorization over Q is delegated to sympy
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(p.coeffs))
    _, facs = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))
    out = []
    for f, e in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        out.append((Poly(coeffs).monic(), int(e)))
    out.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs))
    return out


def companion(p: Poly) -> Mat:
    """Companion matrix of a monic polynomial."""
    p = p.monic()
    d = p.degree
    rows = []
    for i in range(d):
        r = [Fraction(0)] * d
        if i > 0:
            r[i - 1] = Fraction(1)
        r[d - 1] = -p.coeffs[i]
        rows.append(r)
    return Mat(rows)


def jordan_block(k: int, c) -> Mat:
    c = to_q(c)
    return Mat([[c if i == j else (1 if j == i + 1 else 0) for j in range(k)] for i in range(k)])


# --------------------------------------------------------------------------
# minimal polynomials and primary decomposition


def min_poly(m: Mat) -> Poly:
    """Monic minimal polynomial via Krylov dependence of powers."""
    if not m.is_square():
        raise DomainError(f"min_poly needs a square matrix, got {m.shape}")
    n = m.nrows
    if n == 0:
        return Poly((1,))
    # incremental elimination on flattened powers, tracking combinations
    rows: list[list[Fraction]] = []
    combos: list[list[Fraction]] = []
    pivots: list[int] = []
    power = Mat.identity(n)
    for k in range(n + 1):
        v = list(power.flat())
        c = [Fraction(0)] * (n + 1)
        c[k] = Fraction(1)
        for p, r, rc in zip(pivots, rows, combos):
            f = v[p]
            if f:
                v = [x - f * y for x, y in zip(v, r)]
                c = [x - f * y for x, y in zip(c, rc)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return Poly(c[: k + 1]).monic()
        inv = 1 / v[piv]
        rows.append([x * inv for x in v])
        combos.append([x * inv for x in c])
        pivots.append(piv)
        power = power @ m
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover


def kernel_basis_of_poly(p: Poly, m: Mat) -> list[tuple]:
    return kernel(p(m))


def primary_decomposition(m: Mat) -> list[tuple[Poly, list[tuple]]]:
    """Split Q^n into the generalized eigenspaces ``ker p_i(m)^{e_i}``."""
    if not m.is_square():
        raise DomainError("primary_decomposition needs a square matrix")
    mp = min_poly(m)
    return [(p, kernel((p**e)(m))) for p, e in mp.factor()]


def _crt_idempotent(m: Mat, factors: list[tuple[Poly, int]]) -> Mat:
    """Projector onto ``ker p_1^{e_1}(m)`` along the other primary parts."""
    p, e = factors[0]
    q = p**e
    rest = reduce(lambda a, b: a * b, ((f**k) for f, k in factors[1:]), Poly((1,)))
    g, u, v = poly_xgcd(q, rest)
    assert g == Poly((1,))
    return (v * rest)(m)


# --------------------------------------------------------------------------
# finite-dimensional algebras of matrices


def _algebra_span(basis: Sequence[Mat]) -> Span:
    if not basis:
        raise DomainError("empty algebra basis")
    n = basis[0].nrows
    return Span((b.flat() for b in basis), n * n)


def check_closed(basis: Sequence[Mat]) -> Span:
    span = _algebra_span(basis)
    for a in basis:
        for b in basis:
            if not span.contains((a @ b).flat()):
                raise DomainError("algebra basis is not closed under multiplication")
    return span


def radical(algebra_basis: Sequence[Mat], check: bool = True) -> list[Mat]:
    """Jacobson radical as the kernel of the trace form (characteristic 0)."""
    basis = list(algebra_basis)
    if check:
        check_closed(basis)
    d = len(basis)
    # tr(XY) = <vec X, vec Y^T>; sparse dot products avoid full products
    flats = [[(k, x) for k, x in enumerate(b.flat()) if x] for b in basis]
    tflats = [b.T.flat() for b in basis]
    gram = Mat([[sum((x * tflats[j][k] for k, x in flats[i]), Fraction(0)) for j in range(d)] for i in range(d)])
    out = []
    for v in kernel(gram):
        n = basis[0].nrows
        acc = Mat.zeros(n, n)
        for c, b in zip(v, basis):
            if c:
                acc = acc + b * c
        out.append(acc)
    return out


def _sample_elements(basis: Sequence[Mat], rng: random.Random, count: int):
    n = basis[0].nrows
    for b in basis:
        yield b
        count -= 1
        if count <= 0:
            return
    while count > 0:
        acc = Mat.zeros(n, n)
        for b in basis:
            c = rng.randint(-3, 3)
            if c:
                acc = acc + b * c
        count -= 1
        yield acc


def find_splitting_idempotent(algebra_basis: Sequence[Mat], seed: int = 0, check: bool = True):
    """A nontrivial idempotent of the algebra, or the verdict ``"local"``.

    Candidates are sampled deterministically; an element whose minimal
    polynomial has two coprime primary parts yields an exact idempotent in
    the algebra by the Chinese remainder theorem.  If the semisimple quotient
    is a matrix algebra, annihilators of vectors in ``U/RU`` supply zero
    divisors.  ``"local"`` is returned only with a certificate that the
    quotient by the radical is a field.
    """
    basis = list(algebra_basis)
    if check:
        check_closed(basis)
    n = basis[0].nrows
    rad = radical(basis, check=False)
    quotient_dim = len(basis) - len(rad)
    if quotient_dim <= 1:
        return LOCAL
    rng = random.Random(seed)
    for a in _sample_elements(basis, rng, SPLIT_ATTEMPTS):
        facs = min_poly(a).factor()
        if len(facs) >= 2:
            return _lift(_crt_idempotent(a, facs))
        if facs and facs[0][0].degree == quotient_dim:
            return LOCAL
    # zero divisors in the semisimple quotient via annihilators of U/RU
    rad_span = _algebra_span(rad) if rad else None
    ru = Span((r.col(j) for r in rad for j in range(n)), n)
    basis_span = _algebra_span(basis)
    for j in range(n):
        e_j = [Fraction(0)] * n
        e_j[j] = Fraction(1)
        if ru.contains(e_j):
            continue
        ann = _annihilator_mod(basis, j, ru)
        nonrad = [x for x in ann if rad_span is None or not rad_span.contains(x.flat())]
        if not nonrad:
            continue
        for a in _sample_elements(nonrad + ann, rng, SPLIT_ATTEMPTS):
            if not basis_span.contains(a.flat()):
                continue
            facs = min_poly(a).factor()
            if len(facs) >= 2:
                return _lift(_crt_idempotent(a, facs))
    raise DomainError("could not split the algebra nor certify it local")


def _annihilator_mod(basis: Sequence[Mat], j: int, ru: Span) -> list[Mat]:
    """Elements ``x`` of the algebra with ``x e_j`` inside the subspace ``ru``."""
    n = basis[0].nrows
    images = [ru.reduce(b.col(j)) for b in basis]
    system = Mat.from_columns(images) if images else Mat.zeros(n, 0)
    out = []
    for v in kernel(system):
        acc = Mat.zeros(n, n)
        for c, b in zip(v, basis):
            if c:
                acc = acc + b * c
        out.append(acc)
    return out


def _lift(e: Mat) -> Mat:
    # exact CRT projectors are already idempotent; the Newton-type iteration
    # e <- 3e^2 - 2e^3 is kept for inputs that are idempotent modulo the radical
    for _ in range(64):
        e2 = e @ e
        if e2 == e:
            return e
        e = e2 * 3 - (e2 @ e) * 2
    raise DomainError("idempotent lifting did not converge")


def is_idempotent(e: Mat) -> bool:
    return e @ e == e


def kron(a: Mat, b: Mat) -> Mat:
    rows = []
    for ra in a.rows:
        for rb in b.rows:
            rows.append(tuple(x * y for x in ra for y in rb))
    return Mat._raw(tuple(rows), a.ncols * b.ncols)


def is_nilpotent(m: Mat) -> bool:
    return (m ** max(m.nrows, 1)).is_zero()


def complete_basis(vectors: Sequence[Sequence], dim: int) -> list[tuple]:
    """Standard basis vectors extending the (independent) ``vectors`` to Q^dim."""
    span = Span(vectors, dim)
    extra = []
    for j in range(dim):
        e = [Fraction(0)] * dim
        e[j] = Fraction(1)
        if len(span) == dim:
            break
        if not span.contains(e):
            extra.append(tuple(e))
            span = Span(list(span.rows) + [e], dim)
    return extra


def random_invertible(n: int, rng: random.Random, spread: int = 2) -> Mat:
    """Seeded random invertible integer matrix (unit triangular product)."""
    lo = Mat([[1 if i == j else (rng.randint(-spread, spread) if j > i else 0) for j in range(n)] for i in range(n)])
    up = Mat([[1 if i == j else (rng.randint(-spread, spread) if j < i else 0) for j in range(n)] for i in range(n)])
    perm = list(range(n))
    rng.shuffle(perm)
    p = Mat([[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)])
    return p @ lo @ up
