"""Normal-form arithmetic in the Weyl algebra ``A_n``.

Elements are finite sums ``c * t^a d^b`` with every ``t`` to the left of every
``d`` (``d_i`` is the derivation ``d/dt_i``, so ``[d_i, t_j] = delta_ij``).
Exponents may be negative in a coordinate as long as ``t_i`` and ``d_i`` are
not both inverted there; this is what the localized (Laurent) elements need.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterable, Mapping

from .errors import DomainError
from .exactla import q_str, to_q

Exps = tuple[int, ...]


def falling(c: int | Fraction, k: int):
    out = 1
    for j in range(k):
        out *= c - j
    return out


def gen_binom(b: int, k: int) -> Fraction:
    """Generalized binomial coefficient ``b(b-1)...(b-k+1)/k!``."""
    return Fraction(falling(b, k), factorial(k))


def _swap_terms(b: int, c: int) -> list[tuple[Fraction, int, int]]:
    """Expand ``d^b t^c`` as a list of ``(coeff, t_exp, d_exp)``."""
    if b < 0 and c < 0:
        raise DomainError("t and d are both inverted in one coordinate")
    if b == 0 or c == 0:
        return [(Fraction(1), c, b)]
    top = b if b >= 0 else c
    out = []
    for k in range(top + 1):
        coef = gen_binom(b, k) * falling(c, k)
        if coef:
            out.append((coef, c - k, b - k))
    return out


class WeylElement:
    """An element of ``A_n`` (or of its localization) in normal order."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[Exps, Exps], object] | None = None):
        self.n = n
        clean = {}
        for (a, b), c in (terms or {}).items():
            a, b = tuple(a), tuple(b)
            if len(a) != n or len(b) != n:
                raise DomainError(f"exponent length mismatch for n={n}")
            if any(x < 0 and y < 0 for x, y in zip(a, b)):
                raise DomainError("t and d are both inverted in one coordinate")
            c = to_q(c)
            if c:
                clean[(a, b)] = clean.get((a, b), Fraction(0)) + c
                if not clean[(a, b)]:
                    del clean[(a, b)]
        self.terms = dict(sorted(clean.items()))

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "WeylElement":
        return cls(n)

    @classmethod
    def const(cls, n: int, c=1) -> "WeylElement":
        z = (0,) * n
        return cls(n, {(z, z): c})

    @classmethod
    def monomial(cls, a: Iterable[int], b: Iterable[int], c=1) -> "WeylElement":
        a, b = tuple(a), tuple(b)
        return cls(len(a), {(a, b): c})

    @classmethod
    def t(cls, n: int, i: int, power: int = 1) -> "WeylElement":
        """The generator ``t_i`` (0-based ``i``) raised to ``power``."""
        a = [0] * n
        a[i] = power
        return cls.monomial(a, [0] * n)

    @classmethod
    def d(cls, n: int, i: int, power: int = 1) -> "WeylElement":
        b = [0] * n
        b[i] = power
        return cls.monomial([0] * n, b)

    # arithmetic -------------------------------------------------------
    def _check(self, other: "WeylElement"):
        if not isinstance(other, WeylElement):
            raise TypeError(f"expected WeylElement, got {type(other).__name__}")
        if other.n != self.n:
            raise DomainError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, WeylElement):
            other = WeylElement.const(self.n, other)
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return WeylElement(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, WeylElement):
            other = WeylElement.const(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "WeylElement":
        c = to_q(c)
        return WeylElement(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = WeylElement.const(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylElement.const(self.n, other)
        return isinstance(other, WeylElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree_set(self) -> set[tuple[int, ...]]:
        return {tuple(x - y for x, y in zip(a, b)) for a, b in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degree_set()) <= 1

    def degree(self) -> tuple[int, ...]:
        """Grading degree ``a - b`` of a homogeneous nonzero element."""
        degs = self.degree_set()
        if len(degs) != 1:
            raise DomainError("element is not homogeneous")
        return degs.pop()

    def is_polynomial(self) -> bool:
        return all(min(a + b, default=0) >= 0 for a, b in self.terms)

    def filtration_degree(self) -> int:
        return max((sum(a) + sum(b) for a, b in self.terms), default=0)

    def __repr__(self):
        return f"WeylElement({self})"

    def __str__(self):
        return format_element(self)


def _mono_product(a1, b1, a2, b2, n):
    """Normal form of ``t^a1 d^b1 t^a2 d^b2`` as a dict."""
    per_coord = [_swap_terms(b1[i], a2[i]) for i in range(n)]
    out = {}
    for choice in product(*per_coord):
        coef = Fraction(1)
        a = []
        b = []
        for i, (c, te, de) in enumerate(choice):
            coef *= c
            a.append(a1[i] + te)
            b.append(de + b2[i])
        key = (tuple(a), tuple(b))
        out[key] = out.get(key, Fraction(0)) + coef
    return out


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    u._check(v)
    n = u.n
    out: dict = {}
    for (a1, b1), c1 in u.terms.items():
        for (a2, b2), c2 in v.terms.items():
            for key, c in _mono_product(a1, b1, a2, b2, n).items():
                out[key] = out.get(key, Fraction(0)) + c1 * c2 * c
    return WeylElement(n, out)


def commutator(u: WeylElement, v: WeylElement) -> WeylElement:
    return multiply(u, v) - multiply(v, u)


def normalize(n: int, word: Iterable[tuple[str, int, int]], coeff=1) -> WeylElement:
    """Normal form of a product of generators given in arbitrary order.

    ``word`` is a sequence of ``(kind, index, power)`` with ``kind`` in
    ``{"t", "d"}`` and 0-based ``index``.
    """
    out = WeylElement.const(n, coeff)
    for kind, i, p in word:
        if kind == "t":
            g = WeylElement.t(n, i, p)
        elif kind == "d":
            g = WeylElement.d(n, i, p)
        else:
            raise DomainError(f"unknown generator {kind!r}")
        out = multiply(out, g)
    return out


def homogeneous_parts(u: WeylElement) -> list[tuple[tuple[int, ...], WeylElement, bool]]:
    """Split ``u`` by grading degree; flag is True when the degree lies in
    the even sublattice (coordinate sum even), i.e. the part is in ``A_n^ev``."""
    parts: dict = {}
    for (a, b), c in u.terms.items():
        deg = tuple(x - y for x, y in zip(a, b))
        parts.setdefault(deg, {})[(a, b)] = c
    return [(deg, WeylElement(u.n, t), sum(deg) % 2 == 0) for deg, t in sorted(parts.items())]


def is_even(u: WeylElement) -> bool:
    return all(flag for _, _, flag in homogeneous_parts(u))


# --------------------------------------------------------------------------
# text format

_FACTOR = re.compile(r"^(t|d)(\d*)(?:\^(-?\d+))?$")


def format_element(u: WeylElement) -> str:
    if not u.terms:
        return "0"
    pieces = []
    for (a, b), c in u.terms.items():
        factors = []
        for i, e in enumerate(a):
            if e:
                factors.append(f"t{i + 1}" + (f"^{e}" if e != 1 else ""))
        for i, e in enumerate(b):
            if e:
                factors.append(f"d{i + 1}" + (f"^{e}" if e != 1 else ""))
        if not factors:
            body = q_str(c)
        elif c == 1:
            body = "*".join(factors)
        elif c == -1:
            body = "-" + "*".join(factors)
        else:
            body = q_str(c) + "*" + "*".join(factors)
        pieces.append(body)
    text = " + ".join(pieces)
    return text.replace("+ -", "- ")


def parse(text: str, n: int | None = None) -> WeylElement:
    """Parse expressions such as ``"t1^2*d2 + 3*d1 - 1/2"``.

    Factors inside a term are multiplied in the order written, so ``"d1*t1"``
    normalizes to ``t1*d1 + 1``.
    """
    src = text.replace(" ", "")
    if not src:
        raise DomainError("empty expression")
    indices = [int(m) for m in re.findall(r"[td](\d+)", src)]
    if n is None:
        n = max(indices, default=1)
    if any(i < 1 or i > n for i in indices):
        raise DomainError(f"generator index out of range for n={n}")
    # split into signed terms (a '-' after '^' or '/' belongs to a number)
    terms = []
    start = 0
    for k in range(1, len(src)):
        if src[k] in "+-" and src[k - 1] not in "^*/":
            terms.append(src[start:k])
            start = k
    terms.append(src[start:])
    out = WeylElement.zero(n)
    for term in terms:
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if not term:
            raise DomainError(f"malformed expression {text!r}")
        coeff = Fraction(sign)
        word = []
        for f in term.split("*"):
            m = _FACTOR.match(f)
            if m:
                idx = int(m.group(2)) - 1 if m.group(2) else 0
                word.append((m.group(1), idx, int(m.group(3)) if m.group(3) else 1))
            else:
                try:
                    coeff *= to_q(f)
                except (ValueError, ZeroDivisionError) as exc:
                    raise DomainError(f"bad factor {f!r} in {text!r}") from exc
        out = out + normalize(n, word, coeff)
    return out
