"""Sparse multivariate polynomials with exact coefficients.

Used for two things: expanding minors of the generic element
``A(t) = sum_i t_i A_i`` of a matrix space, and gcds/roots of binary forms
(the two-variable homogeneous case that arises for pencils).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterator, Sequence

from .fields import Field, Fp, QQ, Scalar


class Poly:
    """Polynomial in ``nvars`` variables: a dict exponent-tuple -> nonzero coefficient."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms: dict | None = None):
        self.field = field
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, field: Field, nvars: int, c) -> "Poly":
        return cls(field, nvars, {(0,) * nvars: field(c)})

    @classmethod
    def var(cls, field: Field, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): field.one})

    @classmethod
    def linear(cls, field: Field, coeffs: Sequence[Scalar]) -> "Poly":
        d = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * d
                e[i] = 1
                terms[tuple(e)] = c
        return cls(field, d, terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            out[e] = c if v is None else v + c
        return Poly(self.field, self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.field, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(self.field, self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly(self.field, self.nvars, out)

    __rmul__ = __mul__

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def evaluate(self, point: Sequence[Scalar]):
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, polynomial has {self.nvars} variables")
        total = self.field.zero
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = ["s", "t"] if self.nvars == 2 else [f"t{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            cv = Fraction(c.v) if isinstance(c, Fp) else Fraction(c)
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            neg = cv < 0
            mag = -cv if neg else cv
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("- " if neg else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"Poly({self.format()})"


def generic_element(mats) -> list[list[Poly]]:
    """Entries of sum_i t_i A_i as linear forms in t_1..t_d."""
    F = mats[0].field
    m, n = mats[0].shape
    return [[Poly.linear(F, [A.rows[i][j] for A in mats]) for j in range(n)] for i in range(m)]


class MinorExpander:
    """Memoized Laplace expansion of minors of a polynomial matrix.

    Minors sharing trailing row/column subsets reuse each other, so sweeping
    all r x r minors costs far less than expanding each from scratch.
    """

    def __init__(self, M: list[list[Poly]]):
        self.M = M
        self.m = len(M)
        self.n = len(M[0])
        self._memo: dict = {}

    def minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> Poly:
        key = (rows, cols)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if len(rows) == 1:
            out = self.M[rows[0]][cols[0]]
        else:
            r0, rest = rows[0], rows[1:]
            first = self.M[r0][cols[0]]
            out = Poly(first.field, first.nvars)
            for j, c in enumerate(cols):
                a = self.M[r0][c]
                if not a:
                    continue
                sub = self.minor(rest, cols[:j] + cols[j + 1:])
                if not sub:
                    continue
                term = a * sub
                out = out - term if j % 2 else out + term
        self._memo[key] = out
        return out

    def minors(self, r: int) -> Iterator[tuple[tuple, tuple, Poly]]:
        for rows in combinations(range(self.m), r):
            for cols in combinations(range(self.n), r):
                yield rows, cols, self.minor(rows, cols)


# --- univariate helpers (coefficient lists, lowest degree first) -------------

def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _udivmod(a: list, b: list, field: Field):
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [field.zero] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = f
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - f * bc
        _trim(a)
    return _trim(q), a


def _ugcd(a: list, b: list, field: Field) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _udivmod(a, b, field)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def _dehomogenize(f: Poly) -> tuple[int, list]:
    """For a binary form f(s, t): (power of s dividing f, coefficients of f(1, x))."""
    D = f.degree()
    s_power = min(e[0] for e in f.terms)
    coeffs = [f.field.zero] * (D + 1)
    for (a, b), c in f.terms.items():
        coeffs[b] = c
    return s_power, _trim(coeffs)


def binary_form_gcd(forms: Sequence[Poly], field: Field) -> Poly:
    """Gcd of binary forms in (s, t), normalized so the coefficient of the
    highest power of t is 1. Zero forms are ignored; if all are zero the
    result is the zero form."""
    nonzero = [f for f in forms if f]
    if not nonzero:
        return Poly(field, 2)
    s_pow = None
    g: list = []
    for f in nonzero:
        if not f.is_homogeneous():
            raise ValueError("binary_form_gcd expects homogeneous forms")
        a, h = _dehomogenize(f)
        s_pow = a if s_pow is None else min(s_pow, a)
        g = h if not g else _ugcd(g, h, field)
    g = _ugcd(g, [], field)  # normalize a single input too
    e = len(g) - 1
    terms = {(s_pow + e - b, b): c for b, c in enumerate(g) if c}
    return Poly(field, 2, terms)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _rational_roots(coeffs: list) -> list[Fraction]:
    """Rational roots of a univariate polynomial over Q (lowest degree first)."""
    c = _trim([Fraction(x) for x in coeffs])
    if len(c) <= 1:
        return []
    roots = set()
    while c and c[0] == 0:
        roots.add(Fraction(0))
        c = c[1:]
    if len(c) <= 1:
        return sorted(roots)
    den = lcm(*(x.denominator for x in c))
    ints = [int(x * den) for x in c]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                val = Fraction(0)
                for a in reversed(ints):
                    val = val * cand + a
                if val == 0:
                    roots.add(cand)
    return sorted(roots)


def binary_form_roots(f: Poly) -> list[tuple]:
    """Roots of a binary form in P^1 over the coefficient field.

    Points are ``(s, t)`` pairs, the affine chart [1:x] (by increasing x)
    first, then [0:1]. Over Q only rational roots are returned.
    """
    if not f:
        raise ValueError("the zero form vanishes everywhere")
    F = f.field
    s_power, h = _dehomogenize(f)
    if F == QQ:
        xs = _rational_roots(h)
    else:
        xs = []
        for x in F.elements():
            v = F.zero
            for c in reversed(h):
                v = v * x + c
            if not v:
                xs.append(x)
    pts = [(F.one, x) for x in xs]
    if s_power > 0:
        pts.append((F.zero, F.one))
    return pts
