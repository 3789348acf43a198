"""Exact dense linear algebra over Q and F_p.

Everything here is immutable and deterministic. Subspaces are stored in a
canonical form (the reduced column-echelon basis, kept as the rows of a
reduced row-echelon matrix), so ``==`` on :class:`Subspace` is subspace
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field, GF, PrimeField, QQ, Scalar, reduce_mod

Vector = tuple  # tuple of scalars


def rref(rows: Sequence[Sequence[Scalar]], ncols: int, field: Field):
    """Reduced row-echelon form of ``rows``.

    Returns ``(R, pivots)`` where ``R`` is a list of the nonzero reduced rows
    (as lists) and ``pivots`` the pivot column of each.
    """
    R = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(R)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if R[i][c]:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = field.one / R[r][c]
        R[r] = [x * inv for x in R[r]]
        prow = R[r]
        for i in range(nrows):
            if i != r:
                f = R[i][c]
                if f:
                    R[i] = [x - f * y for x, y in zip(R[i], prow)]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int, field: Field) -> list[Vector]:
    R, pivots = rref(rows, ncols, field)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, pc in zip(R, pivots):
            v[pc] = -row[free]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Mat:
    field: Field
    rows: tuple

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise DimensionMismatch("matrices must have at least one row and column")
        n = len(self.rows[0])
        if any(len(r) != n for r in self.rows):
            raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable]) -> "Mat":
        return cls(field, tuple(tuple(field(x) for x in r) for r in rows))

    @classmethod
    def zeros(cls, field: Field, m: int, n: int) -> "Mat":
        z = field.zero
        return cls(field, tuple((z,) * n for _ in range(m)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        return cls(field, tuple(tuple(field.one if i == j else field.zero for j in range(n))
                                for i in range(n)))

    @classmethod
    def unit(cls, field: Field, m: int, n: int, i: int, j: int) -> "Mat":
        """The matrix unit E_ij (zero-based)."""
        return cls(field, tuple(tuple(field.one if (r, c) == (i, j) else field.zero
                                      for c in range(n)) for r in range(m)))

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence[Scalar]]) -> "Mat":
        return cls(field, tuple(zip(*cols)))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    @property
    def T(self) -> "Mat":
        return Mat(self.field, tuple(zip(*self.rows)))

    def columns(self) -> list[Vector]:
        return list(zip(*self.rows))

    def flat(self) -> Vector:
        return tuple(x for r in self.rows for x in r)

    def _check(self, other: "Mat"):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Mat(self.field, tuple(tuple(a + b for a, b in zip(r, s))
                                     for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def __neg__(self) -> "Mat":
        return Mat(self.field, tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c: Scalar) -> "Mat":
        return Mat(self.field, tuple(tuple(c * a for a in r) for r in self.rows))

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.n != other.m:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        z = self.field.zero
        return Mat(self.field, tuple(
            tuple(sum((a * b for a, b in zip(r, c)), z) for c in cols) for r in self.rows))

    def apply(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.n:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        z = self.field.zero
        return tuple(sum((a * b for a, b in zip(r, v)), z) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def rank(self) -> int:
        return len(rref(self.rows, self.n, self.field)[1])

    def reduce(self, F: PrimeField) -> "Mat":
        """Reduce a rational matrix modulo ``F.p`` (identity on F itself)."""
        if self.field == F:
            return self
        if self.field != QQ:
            raise FieldMismatch(f"cannot reduce {self.field!r} matrix to {F!r}")
        return Mat(F, tuple(tuple(reduce_mod(x, F) for x in r) for r in self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Mat[{self.m}x{self.n} {self.field!r}]({body})"


def linear_combination(mats: Sequence[Mat], coeffs: Sequence[Scalar]) -> Mat:
    if len(mats) != len(coeffs):
        raise DimensionMismatch("one coefficient per matrix required")
    F = mats[0].field
    m, n = mats[0].shape
    acc = [[F.zero] * n for _ in range(m)]
    for A, c in zip(mats, coeffs):
        if not c:
            continue
        for i, r in enumerate(A.rows):
            row = acc[i]
            for j, a in enumerate(r):
                if a:
                    row[j] = row[j] + c * a
    return Mat(F, tuple(tuple(r) for r in acc))


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of ``field^ambient`` in canonical echelon form."""

    field: Field
    ambient: int
    basis: tuple = ()

    @classmethod
    def span(cls, field: Field, ambient: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient}")
        if not vecs:
            return cls(field, ambient, ())
        R, _ = rref(vecs, ambient, field)
        return cls(field, ambient, tuple(tuple(r) for r in R))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, Mat.identity(field, ambient).rows)

    @classmethod
    def coordinate(cls, field: Field, ambient: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard basis vectors e_i for zero-based ``indices``."""
        I = Mat.identity(field, ambient).rows
        return cls.span(field, ambient, [I[i] for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient - len(self.basis)

    def matrix(self) -> Mat:
        """Basis vectors as the columns of an ``ambient x dim`` matrix."""
        if not self.basis:
            raise DimensionMismatch("the zero subspace has no basis matrix")
        return Mat.from_columns(self.field, self.basis)

    def canonicalize(self) -> "Subspace":
        return Subspace.span(self.field, self.ambient, self.basis)

    def contains(self, v: Sequence[Scalar]) -> bool:
        if len(v) != self.ambient:
            raise DimensionMismatch("vector length does not match ambient dimension")
        if not any(v):
            return True
        # reduce v against the RREF rows; v is in the span iff nothing is left
        w = list(v)
        for row in self.basis:
            pc = next(i for i, x in enumerate(row) if x)
            f = w[pc]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return not any(w)

    def __le__(self, other: "Subspace") -> bool:
        _same_ambient(self, other)
        return all(other.contains(v) for v in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return self <= other and self.dim < other.dim

    def extend_to(self, dim: int) -> "Subspace":
        """Pad with standard basis vectors (lowest index first) up to ``dim``."""
        if dim < self.dim or dim > self.ambient:
            raise DimensionMismatch(f"cannot extend a {self.dim}-dim subspace to dim {dim}")
        cur = self
        I = Mat.identity(self.field, self.ambient).rows
        for e in I:
            if cur.dim == dim:
                break
            if not cur.contains(e):
                cur = Subspace.span(self.field, self.ambient, cur.basis + (e,))
        return cur

    def shrink_to(self, dim: int) -> "Subspace":
        """Span of the first ``dim`` canonical basis vectors."""
        if dim > self.dim or dim < 0:
            raise DimensionMismatch(f"cannot shrink a {self.dim}-dim subspace to dim {dim}")
        return Subspace(self.field, self.ambient, self.basis[:dim])

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis)
        return f"Subspace[{self.dim}/{self.ambient}]({vecs})"


def _same_ambient(U: Subspace, V: Subspace):
    if U.ambient != V.ambient:
        raise DimensionMismatch(f"ambient dimensions differ: {U.ambient} vs {V.ambient}")
    if U.field != V.field:
        raise FieldMismatch("subspaces over different fields")


@dataclass(frozen=True)
class RankFactor:
    rank: int
    kernel: Subspace
    image: Subspace


def rank_factor(A: Mat) -> RankFactor:
    F = A.field
    R, pivots = rref(A.rows, A.n, F)
    kernel = Subspace.span(F, A.n, nullspace(A.rows, A.n, F))
    cols = A.columns()
    image = Subspace.span(F, A.m, [cols[c] for c in pivots])
    return RankFactor(len(pivots), kernel, image)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _same_ambient(U, V)
    return Subspace.span(U.field, U.ambient, U.basis + V.basis)


def subspace_intersect(U: Subspace, V: Subspace) -> Subspace:
    _same_ambient(U, V)
    F, N = U.field, U.ambient
    if U.dim == 0 or V.dim == 0:
        return Subspace.zero(F, N)
    du = U.dim
    # columns [U | -V]; kernel vectors (a, b) give U a = V b
    cols = list(U.basis) + [tuple(-x for x in v) for v in V.basis]
    rows = list(zip(*cols))
    ker = nullspace(rows, len(cols), F)
    vecs = []
    for k in ker:
        a = k[:du]
        vecs.append(tuple(sum((c * u[i] for c, u in zip(a, U.basis)), F.zero) for i in range(N)))
    return Subspace.span(F, N, vecs)


def preimage_subspace(A: Mat, W: Subspace) -> Subspace:
    """Largest subspace U of the domain with A(U) contained in W."""
    if W.ambient != A.m:
        raise DimensionMismatch(f"subspace of F^{W.ambient} for a map into F^{A.m}")
    if W.field != A.field:
        raise FieldMismatch("map and subspace over different fields")
    F = A.field
    if W.dim == 0:
        return rank_factor(A).kernel
    # kernel of [A | -W] projected onto the domain coordinates
    rows = [tuple(A.rows[i]) + tuple(-w[i] for w in W.basis) for i in range(A.m)]
    ker = nullspace(rows, A.n + W.dim, F)
    return Subspace.span(F, A.n, [k[:A.n] for k in ker])


def image_of(A: Mat, U: Subspace) -> Subspace:
    if U.ambient != A.n:
        raise DimensionMismatch(f"subspace of F^{U.ambient} for a map from F^{A.n}")
    return Subspace.span(A.field, A.m, [A.apply(u) for u in U.basis])


def inverse(A: Mat) -> Mat:
    if A.m != A.n:
        raise DimensionMismatch("only square matrices can be inverted")
    F, n = A.field, A.n
    I = Mat.identity(F, n).rows
    aug = [tuple(r) + e for r, e in zip(A.rows, I)]
    R, pivots = rref(aug, 2 * n, F)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return Mat(F, tuple(tuple(r[n:]) for r in R))


def random_invertible(field: Field, n: int, rng: Random, bound: int = 3) -> Mat:
    """A random invertible matrix; entries in [-bound, bound] over Q."""
    while True:
        M = Mat(field, tuple(tuple(field(field.random(rng, bound)) for _ in range(n))
                             for _ in range(n)))
        if M.rank() == n:
            return M


__all__ = [
    "GF", "QQ", "Mat", "RankFactor", "Subspace", "image_of", "inverse",
    "linear_combination", "nullspace", "preimage_subspace", "random_invertible",
    "rank_factor", "rref", "subspace_intersect", "subspace_sum",
]
