"""Finite-dimensional Lie algebras by structure constants, and their representations.

Brackets are stored as a full antisymmetric table: ``table[i][j]`` is the
coordinate vector of [e_i, e_j]. Indices are zero-based throughout the
Python API.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from random import Random
from typing import Mapping, Sequence

from .errors import DimensionMismatch, FieldMismatch, InapplicableError
from .fields import Field, QQ
from .linalg import Mat, Subspace, inverse


def _zero_vec(F: Field, n: int) -> tuple:
    return (F.zero,) * n


def _axpy(F: Field, acc: list, c, v: Sequence) -> None:
    if c:
        for k, x in enumerate(v):
            if x:
                acc[k] = acc[k] + c * x


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    field: Field
    dim: int
    table: tuple
    name: str = ""

    @classmethod
    def from_brackets(cls, field: Field, dim: int, brackets: Mapping[tuple[int, int], Sequence],
                      name: str = "") -> "LieAlgebra":
        """Build from ``{(i, j): coords of [e_i, e_j]}``; unlisted pairs are zero.

        Either ordering of a pair may be given; (j, i) is filled in by
        antisymmetry. Giving both orderings, or (i, i), is an error.
        """
        if dim < 1:
            raise DimensionMismatch("a Lie algebra needs dimension at least 1")
        T = [[list(_zero_vec(field, dim)) for _ in range(dim)] for _ in range(dim)]
        seen = set()
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"bracket index ({i}, {j}) out of range for dim {dim}")
            if i == j:
                raise ValueError(f"[e_{i}, e_{i}] is zero by antisymmetry and cannot be set")
            if len(coeffs) != dim:
                raise DimensionMismatch(f"bracket ({i}, {j}) has {len(coeffs)} coefficients, expected {dim}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"bracket of pair {key} given twice")
            seen.add(key)
            v = [field(c) for c in coeffs]
            T[i][j] = v
            T[j][i] = [-x for x in v]
        table = tuple(tuple(tuple(v) for v in row) for row in T)
        return cls(field, dim, table, name)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.field == other.field and self.dim == other.dim and self.table == other.table

    def __hash__(self):
        return hash((self.dim, self.table))

    def structure(self, i: int, j: int) -> tuple:
        return self.table[i][j]

    def brackets(self) -> dict[tuple[int, int], tuple]:
        """Nonzero brackets [e_i, e_j] with i < j."""
        return {(i, j): self.table[i][j] for i, j in combinations(range(self.dim), 2)
                if any(self.table[i][j])}

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        F, n = self.field, self.dim
        acc = list(_zero_vec(F, n))
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    _axpy(F, acc, xi * yj, self.table[i][j])
        return tuple(acc)

    def basis_vector(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def is_abelian(self) -> bool:
        return not any(x for row in self.table for v in row for x in v)


def verify_lie_algebra(g: LieAlgebra) -> bool:
    """Jacobi identity on every basis triple (antisymmetry holds by construction)."""
    e = [g.basis_vector(i) for i in range(g.dim)]
    for i, j, k in combinations(range(g.dim), 3):
        a = g.bracket(e[i], g.bracket(e[j], e[k]))
        b = g.bracket(e[j], g.bracket(e[k], e[i]))
        c = g.bracket(e[k], g.bracket(e[i], e[j]))
        if any(x + y + z for x, y, z in zip(a, b, c)):
            return False
    return True


@dataclass(frozen=True)
class DerivedSeries:
    dims: tuple[int, ...]
    solvable: bool


def derived_series(g: LieAlgebra) -> DerivedSeries:
    """Dimensions of g, [g,g], [[g,g],[g,g]], ... until they stop changing.

    The list ends at 0 for solvable algebras; otherwise it ends with the
    repeated dimension of the perfect term (sl_2 gives (3, 3)).
    """
    F, n = g.field, g.dim
    current = Subspace.full(F, n)
    dims = [current.dim]
    while current.dim > 0:
        vecs = [g.bracket(u, v) for u, v in combinations(current.basis, 2)]
        nxt = Subspace.span(F, n, vecs)
        dims.append(nxt.dim)
        if nxt.dim == current.dim:
            break
        current = nxt
    return DerivedSeries(tuple(dims), dims[-1] == 0)


@dataclass(frozen=True)
class Representation:
    algebra: LieAlgebra
    dimV: int
    matrices: tuple

    def __post_init__(self):
        if len(self.matrices) != self.algebra.dim:
            raise DimensionMismatch(
                f"{len(self.matrices)} matrices for a {self.algebra.dim}-dim algebra")
        for M in self.matrices:
            if M.shape != (self.dimV, self.dimV):
                raise DimensionMismatch(f"representation matrix of shape {M.shape}, expected {self.dimV}x{self.dimV}")
            if M.field != self.algebra.field:
                raise FieldMismatch("representation and algebra over different fields")

    def of(self, x: Sequence) -> Mat:
        """The matrix of a general algebra element given in coordinates."""
        F = self.algebra.field
        acc = Mat.zeros(F, self.dimV, self.dimV)
        for c, M in zip(x, self.matrices):
            if c:
                acc = acc + M.scale(c)
        return acc


def verify_representation(pi: Representation) -> bool:
    g = pi.algebra
    rho = pi.matrices
    for i, j in combinations(range(g.dim), 2):
        lhs = rho[i] @ rho[j] - rho[j] @ rho[i]
        if lhs != pi.of(g.table[i][j]):
            return False
    return True


def adjoint_representation(g: LieAlgebra) -> Representation:
    # column j of ad(e_i) is [e_i, e_j]
    mats = tuple(Mat.from_columns(g.field, [g.table[i][j] for j in range(g.dim)])
                 for i in range(g.dim))
    return Representation(g, g.dim, mats)


def upper_triangular_algebra(n: int, field: Field = QQ) -> tuple[LieAlgebra, Representation]:
    """T_n: upper-triangular n x n matrices under the commutator.

    The basis is E_ij (i <= j) in row-major order, so T_2 has basis
    (E_11, E_12, E_22). Returns the algebra and its defining representation.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {ij: k for k, ij in enumerate(idx)}
    units = [Mat.unit(field, n, n, i, j) for i, j in idx]
    N = len(idx)
    brackets = {}
    for a, b in combinations(range(N), 2):
        C = units[a] @ units[b] - units[b] @ units[a]
        coeffs = [field.zero] * N
        for (i, j), k in pos.items():
            coeffs[k] = C.rows[i][j]
        if any(coeffs):
            brackets[(a, b)] = coeffs
    g = LieAlgebra.from_brackets(field, N, brackets, name=f"T_{n}")
    return g, Representation(g, n, tuple(units))


def example1_algebra(field: Field = QQ, dim: int = 3) -> LieAlgebra:
    """[e_top, e_i] = e_i for every i < top, all other brackets zero.

    With dim = 3 this is [e3, e1] = e1, [e3, e2] = e2, [e1, e2] = 0.
    """
    top = dim - 1
    brackets = {}
    for i in range(top):
        v = [field.zero] * dim
        v[i] = field.one
        brackets[(top, i)] = v
    return LieAlgebra.from_brackets(field, dim, brackets, name=f"example1_{dim}")


def sl2_algebra(field: Field = QQ) -> LieAlgebra:
    """sl_2 in the basis (e, h, f): [e, h] = -2e, [e, f] = h, [h, f] = -2f."""
    z, o = field.zero, field.one
    return LieAlgebra.from_brackets(field, 3, {
        (0, 1): [-2 * o, z, z],
        (0, 2): [z, o, z],
        (1, 2): [z, z, -2 * o],
    }, name="sl_2")


def abelian_algebra(dim: int, field: Field = QQ) -> LieAlgebra:
    return LieAlgebra.from_brackets(field, dim, {}, name=f"abelian_{dim}")


def transport_bracket(phi: Mat, target: LieAlgebra) -> LieAlgebra:
    """Pull the bracket of ``target`` back along the linear bijection ``phi``.

    ``phi`` maps source coordinates to target coordinates; the source bracket
    is [x, y] = phi^{-1}[phi x, phi y], which makes phi an isomorphism.
    """
    if phi.shape != (target.dim, target.dim):
        raise DimensionMismatch(f"phi has shape {phi.shape}, target algebra has dim {target.dim}")
    if phi.field != target.field:
        raise FieldMismatch("phi and target algebra over different fields")
    try:
        inv = inverse(phi)
    except ZeroDivisionError:
        raise InapplicableError("phi is singular") from None
    cols = phi.columns()
    brackets = {}
    for i, j in combinations(range(target.dim), 2):
        v = inv.apply(target.bracket(cols[i], cols[j]))
        if any(v):
            brackets[(i, j)] = v
    return LieAlgebra.from_brackets(target.field, target.dim, brackets,
                                    name=f"transported({target.name})" if target.name else "")


def character_representation(g: LieAlgebra, values: Sequence) -> Representation:
    """The 1-dim representation e_i -> values[i]; must vanish on [g, g]."""
    F = g.field
    pi = Representation(g, 1, tuple(Mat(F, ((F(v),),)) for v in values))
    if not verify_representation(pi):
        raise ValueError("character does not vanish on the derived algebra")
    return pi


def direct_sum(reps: Sequence[Representation]) -> Representation:
    g = reps[0].algebra
    F = g.field
    total = sum(r.dimV for r in reps)
    mats = []
    for i in range(g.dim):
        rows = []
        offset = 0
        for r in reps:
            M = r.matrices[i]
            for row in M.rows:
                rows.append((F.zero,) * offset + tuple(row) + (F.zero,) * (total - offset - r.dimV))
            offset += r.dimV
        mats.append(Mat(F, tuple(rows)))
    return Representation(g, total, tuple(mats))


def conjugate(pi: Representation, P: Mat) -> Representation:
    """The equivalent representation x -> P^{-1} rho(x) P."""
    Pinv = inverse(P)
    return Representation(pi.algebra, pi.dimV, tuple(Pinv @ M @ P for M in pi.matrices))


class _Echelon:
    """Incremental linear-independence test over a field."""

    def __init__(self, field: Field, length: int):
        self.field = field
        self.length = length
        self.rows: dict[int, list] = {}

    def add(self, v: Sequence) -> bool:
        w = list(v)
        for pc, row in self.rows.items():
            f = w[pc]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        pc = next((k for k, x in enumerate(w) if x), None)
        if pc is None:
            return False
        inv = self.field.one / w[pc]
        w = [x * inv for x in w]
        # keep existing rows reduced at the new pivot
        for k, row in self.rows.items():
            f = row[pc]
            if f:
                self.rows[k] = [a - f * b for a, b in zip(row, w)]
        self.rows[pc] = w
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Irreducibility:
    irreducible: bool
    enveloping_dim: int


def enveloping_dimension(pi: Representation) -> int:
    """Dimension of the unital associative algebra generated by the rho_i."""
    F, v = pi.algebra.field, pi.dimV
    ech = _Echelon(F, v * v)
    I = Mat.identity(F, v)
    ech.add(I.flat())
    queue = [I]
    while queue:
        W = queue.pop()
        for R in pi.matrices:
            P = R @ W
            if ech.add(P.flat()):
                queue.append(P)
        if ech.dim == v * v:
            break
    return ech.dim


def is_absolutely_irreducible(pi: Representation) -> Irreducibility:
    """Burnside's criterion: absolutely irreducible iff the rho_i generate all
    of End(V), i.e. the enveloping dimension is (dim V)^2. The dimension of
    that algebra does not change under field extension, so the rational
    computation decides irreducibility over the algebraic closure."""
    dim = enveloping_dimension(pi)
    return Irreducibility(dim == pi.dimV ** 2, dim)


def cyclic_submodule(pi: Representation, v: Sequence) -> Subspace:
    F, n = pi.algebra.field, pi.dimV
    U = Subspace.span(F, n, [v])
    queue = list(U.basis)
    while queue:
        w = queue.pop()
        for R in pi.matrices:
            x = R.apply(w)
            if not U.contains(x):
                U = Subspace.span(F, n, U.basis + (x,))
                queue.append(x)
    return U


def invariant_subspace_witness(pi: Representation, seed: int = 0,
                               retries: int = 16) -> Subspace | None:
    """A proper nonzero invariant subspace, if a cyclic search finds one.

    Tries the cyclic submodule of each basis vector, then of ``retries``
    random vectors. None does not prove irreducibility: an absolutely
    reducible representation may have no invariant subspace defined over
    the base field.
    """
    F, n = pi.algebra.field, pi.dimV
    if n < 2:
        return None
    rng = Random(seed)
    candidates = [tuple(F.one if k == j else F.zero for k in range(n)) for j in range(n)]
    for _ in range(retries):
        v = tuple(F.random(rng, 9) for _ in range(n))
        if any(v):
            candidates.append(v)
    for v in candidates:
        U = cyclic_submodule(pi, v)
        if 0 < U.dim < n:
            return U
    return None


def faithful_irreducible_representation(g: LieAlgebra) -> Representation | None:
    """A faithful absolutely irreducible representation of a solvable g, if any.

    By Lie's theorem every absolutely irreducible representation of a
    solvable algebra is 1-dimensional, so its image sits inside gl_1, which
    is itself 1-dimensional. Injectivity then forces dim g <= 1. For
    dim g = 1 the representation e_1 -> [1] is returned (after checking it);
    otherwise None.
    """
    if not derived_series(g).solvable:
        raise InapplicableError("criterion only decided for solvable algebras")
    if g.dim > 1:
        return None
    pi = Representation(g, 1, (Mat.identity(g.field, 1),))
    if not verify_representation(pi) or not is_absolutely_irreducible(pi).irreducible:
        raise AssertionError("1-dim faithful representation failed its checks")  # pragma: no cover
    return pi
