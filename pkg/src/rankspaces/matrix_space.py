"""Linear spaces of m x n matrices: generic rank, constant rank, compression.

A :class:`MatrixSpace` is given by a basis A_1..A_d. Its *generic element*
is A(t) = sum t_i A_i. A rank-2 compression certificate is a pair of
subspaces V' (codim k1) of the domain and W' (dim k2) of the codomain with
k1 + k2 = 2 and A(V') contained in W' for every A in the space.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from itertools import product
from random import Random
from typing import Sequence

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    InapplicableError,
    InvariantViolation,
    ReductionError,
)
from .fields import GF, Field, Fp, PrimeField, QQ, Scalar
from .linalg import (
    Mat,
    Subspace,
    image_of,
    linear_combination,
    nullspace,
    preimage_subspace,
    random_invertible,
    rank_factor,
    rref,
    subspace_intersect,
    subspace_sum,
)
from .modp import combine_mod_p, projective_count, projective_points, rank_mod_p
from .poly import MinorExpander, Poly, binary_form_gcd, binary_form_roots, generic_element

DEFAULT_PRIME = 101
DEFAULT_RETRIES = 16
DEFAULT_POINT_BUDGET = 10 ** 6

# desk-scale bounds for symbolic minor expansion (enforced by the CLI)
SYMBOLIC_MAX_DIM = 6
SYMBOLIC_MAX_D = 4


@dataclass(frozen=True)
class MatrixSpace:
    field: Field
    rows: int
    cols: int
    basis: tuple

    def __post_init__(self):
        if not self.basis:
            raise DimensionMismatch("a matrix space needs at least one basis matrix")
        for A in self.basis:
            if A.field != self.field:
                raise FieldMismatch("basis matrices over different fields")
            if A.shape != (self.rows, self.cols):
                raise DimensionMismatch(
                    f"basis matrix of shape {A.shape} in a {self.rows}x{self.cols} space")
        flat = [A.flat() for A in self.basis]
        if len(rref(flat, self.rows * self.cols, self.field)[1]) != len(flat):
            raise DimensionMismatch("basis matrices are linearly dependent")

    @classmethod
    def from_lists(cls, field: Field, basis: Sequence[Sequence[Sequence]]) -> "MatrixSpace":
        mats = tuple(Mat.from_rows(field, A) for A in basis)
        return cls(field, mats[0].m, mats[0].n, mats)

    @property
    def d(self) -> int:
        return len(self.basis)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def element(self, t: Sequence[Scalar]) -> Mat:
        if len(t) != self.d:
            raise DimensionMismatch(f"{len(t)} coefficients for a {self.d}-dim space")
        return linear_combination(self.basis, [self.field(x) for x in t])

    def transpose(self) -> "MatrixSpace":
        return MatrixSpace(self.field, self.cols, self.rows, tuple(A.T for A in self.basis))

    def reduce(self, F: PrimeField) -> "MatrixSpace":
        """The same space with its basis reduced modulo ``F.p``."""
        if self.field == F:
            return self
        mats = tuple(A.reduce(F) for A in self.basis)
        try:
            return MatrixSpace(F, self.rows, self.cols, mats)
        except DimensionMismatch:
            raise ReductionError(
                f"basis becomes dependent modulo {F.p}; choose a different prime") from None

    def int_basis(self) -> list[list[list[int]]]:
        if not isinstance(self.field, PrimeField):
            raise FieldMismatch("integer residues need a prime-field space")
        return [[[x.v for x in r] for r in A.rows] for A in self.basis]


class RankStatus(str, enum.Enum):
    EXACT_CERTIFIED = "ExactCertified"
    EXACT_NEGATIVE = "ExactCertifiedNegative"
    FIELD_EXHAUSTIVE = "FieldExhaustive"
    FALSIFIED = "Falsified"
    SAMPLED_ONLY = "SampledOnly"


@dataclass(frozen=True)
class ConstantRank:
    """Lower-bound verdict: do all nonzero elements reach the generic rank?

    ``witness`` is a coefficient vector (over ``witness_field``) whose element
    has rank ``witness_rank`` below the generic rank; only set when Falsified.
    ``gcd`` is the gcd of the k x k minors for pencils over Q.
    """

    status: RankStatus
    prime: int | None = None
    points_checked: int = 0
    witness: tuple | None = None
    witness_rank: int | None = None
    witness_field: str | None = None
    gcd: Poly | None = None


@dataclass(frozen=True)
class RankVerdict:
    generic_rank: int
    witness: tuple
    upper_bound: RankStatus
    constant_rank: ConstantRank | None = None
    minors_checked: int = 0

    @property
    def is_constant_rank(self) -> bool | None:
        if self.constant_rank is None:
            return None
        return self.constant_rank.status in (RankStatus.EXACT_CERTIFIED, RankStatus.FIELD_EXHAUSTIVE)


def _random_point(field: Field, d: int, rng: Random) -> tuple:
    while True:
        t = tuple(field.random(rng, 50) for _ in range(d))
        if any(t):
            return t


def _nonvanishing_point(f: Poly, field: Field, budget: int) -> tuple | None:
    # a nonzero polynomial of total degree D has a non-root on S^d once |S| > D
    D = f.degree()
    if isinstance(field, PrimeField):
        grid = range(field.p)
        count = field.p ** f.nvars
    else:
        grid = range(D + 1)
        count = (D + 1) ** f.nvars
    if count > budget:
        raise BudgetExceeded(f"non-root search over {count} points exceeds budget {budget}")
    for pt in product(grid, repeat=f.nvars):
        x = tuple(field(v) for v in pt)
        if f.evaluate(x):
            return x
    return None


def generic_rank(space: MatrixSpace, seed: int = 0, samples: int = 8, symbolic: bool = True,
                 budget: int = DEFAULT_POINT_BUDGET) -> RankVerdict:
    """Rank of a generic element, with a witness attaining it.

    Sampling gives a lower bound. With ``symbolic`` (the default) every
    (k+1) x (k+1) minor of the generic element is expanded and shown to be
    the zero polynomial; a nonzero minor is instead used to locate a point
    of higher rank, and the search repeats.
    """
    F, d = space.field, space.d
    rng = Random(seed)
    candidates = [tuple(F.one if i == j else F.zero for j in range(d)) for i in range(d)]
    candidates += [_random_point(F, d, rng) for _ in range(samples)]
    best, witness = -1, candidates[0]
    for t in candidates:
        r = space.element(t).rank()
        if r > best:
            best, witness = r, t
    if not symbolic:
        return RankVerdict(best, witness, RankStatus.SAMPLED_ONLY)

    expander = MinorExpander(generic_element(space.basis))
    checked = 0
    while best < min(space.rows, space.cols):
        nonzero = None
        for _, _, minor in expander.minors(best + 1):
            checked += 1
            if minor:
                nonzero = minor
                break
        if nonzero is None:
            break
        t = _nonvanishing_point(nonzero, F, budget)
        if t is None:
            raise InapplicableError(
                f"generic rank exceeds the rank of every point over {F!r}; use a larger prime")
        r = space.element(t).rank()
        if r <= best:
            raise InvariantViolation("nonvanishing minor did not raise the rank")
        best, witness = r, t
    return RankVerdict(best, witness, RankStatus.EXACT_CERTIFIED, minors_checked=checked)


def _pencil_lower_bound(space: MatrixSpace, k: int) -> ConstantRank:
    F = space.field
    expander = MinorExpander(generic_element(space.basis))
    g = binary_form_gcd([m for _, _, m in expander.minors(k)], F)
    if g.degree() == 0:
        return ConstantRank(RankStatus.EXACT_CERTIFIED, gcd=g)
    roots = binary_form_roots(g)
    if roots:
        t = roots[0]
        return ConstantRank(RankStatus.FALSIFIED, witness=t, witness_rank=space.element(t).rank(),
                            witness_field=F.tag, gcd=g)
    return ConstantRank(RankStatus.EXACT_NEGATIVE, gcd=g)


def rank_profile_fp(space: MatrixSpace, k: int, budget: int = DEFAULT_POINT_BUDGET):
    """Sweep P^{d-1}(F_p) for a prime-field space.

    Returns ``(points, max_rank, first_deficient)`` where ``first_deficient``
    is ``(point, rank)`` for the first point of rank below ``k`` (or None).
    """
    p, d = space.field.p, space.d
    total = projective_count(d, p)
    if total > budget:
        raise BudgetExceeded(f"P^{d - 1}(F_{p}) has {total} points, budget is {budget}")
    mats = space.int_basis()
    max_rank, first = -1, None
    for pt in projective_points(d, p):
        r = rank_mod_p(combine_mod_p(mats, pt, p), p)
        if r > max_rank:
            max_rank = r
        if r < k and first is None:
            first = (pt, r)
    return total, max_rank, first


def _sampled_lower_bound(space: MatrixSpace, k: int, seed: int, samples: int = 64) -> ConstantRank:
    """Fallback when P^{d-1}(F_p) is too large to sweep: look for a rank
    drop among the basis elements and random points over the space's own
    field. Finding one falsifies exactly; otherwise nothing is certified."""
    F, d = space.field, space.d
    rng = Random(seed + 1)
    points = [tuple(F.one if i == j else F.zero for j in range(d)) for i in range(d)]
    points += [_random_point(F, d, rng) for _ in range(samples)]
    checked = 0
    for t in points:
        if not any(t):
            continue
        checked += 1
        r = space.element(t).rank()
        if r < k:
            return ConstantRank(RankStatus.FALSIFIED, points_checked=checked, witness=t,
                                witness_rank=r, witness_field=F.tag)
    return ConstantRank(RankStatus.SAMPLED_ONLY, points_checked=checked)


def constant_rank_verdict(space: MatrixSpace, p: int = DEFAULT_PRIME, seed: int = 0,
                          symbolic: bool = True, budget: int = DEFAULT_POINT_BUDGET) -> RankVerdict:
    """Generic rank plus a constant-rank verdict.

    d = 1: trivially constant. d = 2 over Q: exact, via the gcd of the k x k
    minors as binary forms. Otherwise: exhaustive sweep of P^{d-1}(F_p),
    where a rational space is first reduced mod ``p`` (a prime-field space
    uses its own modulus). When the sweep exceeds ``budget`` points, basis
    elements and random points are tried instead and the verdict is either
    Falsified or SampledOnly.
    """
    verdict = generic_rank(space, seed=seed, symbolic=symbolic, budget=budget)
    k = verdict.generic_rank
    if space.d == 1:
        status = ConstantRank(RankStatus.EXACT_CERTIFIED)
    elif space.d == 2 and space.field == QQ:
        status = _pencil_lower_bound(space, k)
    else:
        if isinstance(space.field, PrimeField):
            reduced = space
        else:
            reduced = space.reduce(GF(p))
        q = reduced.field.p
        if projective_count(space.d, q) > budget:
            return RankVerdict(k, verdict.witness, verdict.upper_bound,
                               _sampled_lower_bound(space, k, seed), verdict.minors_checked)
        total, max_rank, first = rank_profile_fp(reduced, k, budget)
        if max_rank < k:
            raise ReductionError(
                f"generic rank drops from {k} to {max_rank} modulo {q}; choose a different prime")
        if first is None:
            status = ConstantRank(RankStatus.FIELD_EXHAUSTIVE, prime=q, points_checked=total)
        else:
            pt, r = first
            status = ConstantRank(RankStatus.FALSIFIED, prime=q, points_checked=total,
                                  witness=tuple(Fp(x, q) for x in pt), witness_rank=r,
                                  witness_field=reduced.field.tag)
    return RankVerdict(k, verdict.witness, verdict.upper_bound, status, verdict.minors_checked)


@dataclass(frozen=True)
class CommonSubspaces:
    ck: Subspace  # common kernel
    ci: Subspace  # sum of images


def common_kernel_and_image(space: MatrixSpace) -> CommonSubspaces:
    F = space.field
    stacked = [r for A in space.basis for r in A.rows]
    ck = Subspace.span(F, space.cols, nullspace(stacked, space.cols, F))
    ci = Subspace.span(F, space.rows, [c for A in space.basis for c in A.columns()])
    return CommonSubspaces(ck, ci)


@dataclass(frozen=True)
class CompressionCertificate:
    k1: int
    k2: int
    Vprime: Subspace
    Wprime: Subspace
    split_rule: str = dc_field(default="", compare=False)

    @property
    def rank(self) -> int:
        return self.k1 + self.k2

    @property
    def split(self) -> tuple[int, int]:
        return self.k1, self.k2


def verify_certificate(space: MatrixSpace, cert: CompressionCertificate,
                       rank: int | None = None) -> bool:
    """Exact re-check of a certificate; no search.

    ``rank`` is the claimed rank k1 + k2 must equal; by default the generic
    rank of the space.
    """
    V, W = cert.Vprime, cert.Wprime
    if V.ambient != space.cols or W.ambient != space.rows:
        return False
    if V.field != space.field or W.field != space.field:
        return False
    if V.codim != cert.k1 or W.dim != cert.k2:
        return False
    if rank is None:
        rank = generic_rank(space).generic_rank
    if cert.k1 + cert.k2 != rank:
        return False
    return all(W.contains(A.apply(v)) for A in space.basis for v in V.basis)


def _images_intersection(space: MatrixSpace, first: Sequence[Scalar], rng: Random,
                         retries: int) -> Subspace | None:
    F, d = space.field, space.d
    points = [tuple(first)]
    points += [tuple(F.one if i == j else F.zero for j in range(d)) for i in range(d)]
    points += [_random_point(F, d, rng) for _ in range(retries)]
    Z = None
    for t in points:
        fac = rank_factor(space.element(t))
        if fac.rank != 2:
            continue
        Z = fac.image if Z is None else subspace_intersect(Z, fac.image)
        if Z.dim <= 1:
            break
    return Z


def detect_compression_rank2(space: MatrixSpace, seed: int = 0, retries: int = DEFAULT_RETRIES,
                             verdict: RankVerdict | None = None) -> CompressionCertificate | None:
    """Search for a rank-2 compression certificate.

    Splits are tried in the order (0,2), (2,0), (1,1). The (1,1) candidate
    W' is the intersection of the images of rank-2 elements: every rank-2
    element A has A(V') nonzero (its kernel has codim 2, V' codim 1), so
    W' = A(V') lies in Im A. That search is Monte-Carlo, so a None result can
    be wrong with small probability; a returned certificate never is.

    Spaces of generic rank below 2 return None (they compress at their own
    rank); generic rank above 2 raises :class:`InapplicableError`.
    """
    verdict = generic_rank(space, seed=seed)
    k = verdict.generic_rank
    if k > 2:
        raise InapplicableError(f"rank-2 procedure inapplicable: generic rank is {k}")
    if k < 2:
        return None
    F, m, n = space.field, space.rows, space.cols
    common = common_kernel_and_image(space)
    ck, ci = common.ck, common.ci
    cert = None
    if ci.dim <= 2 and m >= 2:
        cert = CompressionCertificate(0, 2, Subspace.full(F, n), ci.extend_to(2), "common-image")
    elif ck.codim <= 2 and n >= 2:
        cert = CompressionCertificate(2, 0, ck.shrink_to(n - 2), Subspace.zero(F, m), "common-kernel")
    elif ck.codim <= 1:
        V = ck.shrink_to(n - 1)
        W = Subspace.zero(F, m)
        for A in space.basis:
            W = subspace_sum(W, image_of(A, V))
        if W.dim <= 1:
            cert = CompressionCertificate(1, 1, V, W.extend_to(1), "kernel-hyperplane")
    else:
        Z = _images_intersection(space, verdict.witness, Random(seed), retries)
        if Z is not None and Z.dim == 1:
            V = Subspace.full(F, n)
            for A in space.basis:
                V = subspace_intersect(V, preimage_subspace(A, Z))
            if V.codim <= 1:
                cert = CompressionCertificate(1, 1, V.shrink_to(n - 1), Z, "image-intersection")
    if cert is not None and not verify_certificate(space, cert, rank=2):
        raise InvariantViolation(f"detector produced an invalid certificate {cert}")
    return cert


def equivalent(space: MatrixSpace, P: Mat, Q: Mat) -> MatrixSpace:
    """The space {P A Q}; P and Q must be invertible."""
    if P.rank() != P.m or Q.rank() != Q.m:
        raise ValueError("P and Q must be invertible")
    return MatrixSpace(space.field, P.m, Q.n, tuple(P @ A @ Q for A in space.basis))


def random_equivalent(space: MatrixSpace, seed: int) -> MatrixSpace:
    rng = Random(seed)
    P = random_invertible(space.field, space.rows, rng)
    Q = random_invertible(space.field, space.cols, rng)
    return equivalent(space, P, Q)
