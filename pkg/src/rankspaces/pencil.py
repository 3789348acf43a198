"""Kronecker data of matrix pencils sA + tB.

Minimal indices come from block-Toeplitz rank sequences: if T_j is the
matrix of the map sending degree-j polynomial vectors x(s, t) to the
coefficients of (sA + tB) x, then dim ker T_j = sum over right indices
e <= j of (j - e + 1), so second differences of the kernel dimensions count
the indices of each size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FieldMismatch, InapplicableError
from .linalg import Mat
from .matrix_space import MatrixSpace
from .poly import MinorExpander, Poly, binary_form_gcd


@dataclass(frozen=True)
class PencilInvariants:
    normal_rank: int
    right_minimal_indices: tuple[int, ...]
    left_minimal_indices: tuple[int, ...]
    minor_gcd_degree: int
    gcd: Poly

    def transpose(self) -> "PencilInvariants":
        return PencilInvariants(self.normal_rank, self.left_minimal_indices,
                                self.right_minimal_indices, self.minor_gcd_degree, self.gcd)


def _check_pair(A: Mat, B: Mat):
    if A.shape != B.shape:
        raise DimensionMismatch(f"pencil matrices have shapes {A.shape} and {B.shape}")
    if A.field != B.field:
        raise FieldMismatch("pencil matrices over different fields")


def _pencil_entries(A: Mat, B: Mat) -> list[list[Poly]]:
    return [[Poly.linear(A.field, [a, b]) for a, b in zip(ra, rb)]
            for ra, rb in zip(A.rows, B.rows)]


def _normal_rank_and_gcd(A: Mat, B: Mat) -> tuple[int, Poly]:
    F = A.field
    expander = MinorExpander(_pencil_entries(A, B))
    for r in range(min(A.m, A.n), 0, -1):
        minors = [mnr for _, _, mnr in expander.minors(r)]
        if any(minors):
            return r, binary_form_gcd(minors, F)
    return 0, Poly.const(F, 2, 1)


def toeplitz(A: Mat, B: Mat, j: int) -> Mat:
    """The ((j+2)m) x ((j+1)n) block matrix with A on the block diagonal and
    B on the block subdiagonal."""
    F, m, n = A.field, A.m, A.n
    z = F.zero
    rows = []
    for bi in range(j + 2):
        for i in range(m):
            row = []
            for bc in range(j + 1):
                if bi == bc:
                    row.extend(A.rows[i])
                elif bi == bc + 1:
                    row.extend(B.rows[i])
                else:
                    row.extend([z] * n)
            rows.append(tuple(row))
    return Mat(F, tuple(rows))


def right_minimal_indices(A: Mat, B: Mat, normal_rank: int | None = None) -> tuple[int, ...]:
    _check_pair(A, B)
    if normal_rank is None:
        normal_rank = _normal_rank_and_gcd(A, B)[0]
    n = A.n
    wanted = n - normal_rank
    out: list[int] = []
    prev_kernel, prev_delta = 0, 0
    j = 0
    while len(out) < wanted:
        if j > normal_rank:
            raise AssertionError("minimal indices exceed the normal rank")  # pragma: no cover
        T = toeplitz(A, B, j)
        kernel = T.n - T.rank()
        delta = kernel - prev_kernel
        out.extend([j] * (delta - prev_delta))
        prev_kernel, prev_delta = kernel, delta
        j += 1
    return tuple(out)


def kronecker_minimal_indices(A: Mat, B: Mat) -> PencilInvariants:
    _check_pair(A, B)
    r, g = _normal_rank_and_gcd(A, B)
    right = right_minimal_indices(A, B, r)
    left = right_minimal_indices(A.T, B.T, r)
    return PencilInvariants(r, right, left, g.degree(), g)


def pencil_constant_rank(A: Mat, B: Mat) -> tuple[bool, Poly]:
    """Whether every nonzero sA + tB has the normal rank, with the minor gcd.

    A and B must be linearly independent.
    """
    _check_pair(A, B)
    try:
        MatrixSpace(A.field, A.m, A.n, (A, B))
    except DimensionMismatch:
        raise InapplicableError("degenerate pencil: A and B are linearly dependent") from None
    _, g = _normal_rank_and_gcd(A, B)
    return g.degree() == 0, g


def pencil_from_space(space: MatrixSpace) -> tuple[Mat, Mat]:
    if space.d != 2:
        raise InapplicableError(f"a pencil needs a 2-dimensional space, got d = {space.d}")
    return space.basis[0], space.basis[1]
