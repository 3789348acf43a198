"""Line bundles on P^1, section algebras, and the rank-2 classification driver.

A line bundle O(n) on P^1 has an (n+1)-dimensional space of global sections
(n >= 0). That space is made into a solvable Lie algebra by choosing a
bracket, and triviality of the bundle (n = 0) is matched against the
existence of a faithful irreducible representation of the algebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from math import isqrt
from typing import Sequence

from .errors import BudgetExceeded, DimensionMismatch, InvariantViolation
from .fields import GF, PrimeField, QQ
from .lie import (
    LieAlgebra,
    Representation,
    derived_series,
    example1_algebra,
    faithful_irreducible_representation,
    is_absolutely_irreducible,
    transport_bracket,
    upper_triangular_algebra,
    verify_lie_algebra,
    verify_representation,
)
from .linalg import Mat
from .matrix_space import (
    DEFAULT_POINT_BUDGET,
    DEFAULT_PRIME,
    DEFAULT_RETRIES,
    CompressionCertificate,
    MatrixSpace,
    RankVerdict,
    detect_compression_rank2,
    generic_rank,
)
from .modp import combine_mod_p, projective_count, projective_points, rank_mod_p

TRANSPORT_RULE = "upper-triangular-transport"
EXAMPLE1_RULE = "example1-generalized"


def sections_dim_p1(n: int) -> int:
    """dim of the global sections of O(n) on P^1."""
    return n + 1 if n >= 0 else 0


def _triangular_root(N: int) -> int | None:
    k = (isqrt(8 * N + 1) - 1) // 2
    return k if k * (k + 1) // 2 == N else None


def section_bracket_rule(n: int) -> str:
    return TRANSPORT_RULE if _triangular_root(n + 1) else EXAMPLE1_RULE


def build_section_algebra(n: int, field=QQ) -> LieAlgebra:
    """A solvable bracket on the sections of O(n).

    If n + 1 = k(k+1)/2 the bracket is transported from T_k along the
    coordinate bijection (section monomial i <-> i-th basis matrix E_ij);
    otherwise [e_top, e_i] = e_i for i < top and all other brackets vanish.
    """
    if n < 0:
        raise ValueError("O(n) with n < 0 has no sections")
    N = n + 1
    k = _triangular_root(N)
    if k:
        T, _ = upper_triangular_algebra(k, field)
        g = transport_bracket(Mat.identity(field, N), T)
        name = f"sections(O({n})) <- T_{k}"
    else:
        g = example1_algebra(field, N)
        name = f"sections(O({n})) <- example1"
    g = LieAlgebra(g.field, g.dim, g.table, name)
    if not verify_lie_algebra(g) or not derived_series(g).solvable:
        raise InvariantViolation(f"section algebra for O({n}) is not a solvable Lie algebra")
    return g


@dataclass(frozen=True)
class PairVerdict:
    degree: int
    trivial: bool
    dim_VE: int
    has_irreducible_pair: bool


def trivial_iff_irreducible_pair(n: int) -> PairVerdict:
    if n < 0:
        raise ValueError("only bundles generated by sections (n >= 0) are covered")
    g = build_section_algebra(n)
    pair = faithful_irreducible_representation(g)
    verdict = PairVerdict(n, n == 0, sections_dim_p1(n), pair is not None)
    if g.dim != verdict.dim_VE:
        raise InvariantViolation("section algebra dimension differs from h^0(O(n))")
    if verdict.trivial != verdict.has_irreducible_pair:
        raise InvariantViolation(f"triviality and irreducible pair disagree for O({n})")
    return verdict


class Case(str, enum.Enum):
    ALL_TRIVIAL = "AllTrivial"
    ALL_NONTRIVIAL = "AllNontrivial"
    MIXED = "Mixed"


@dataclass(frozen=True)
class Correspondence:
    case: Case
    consistent: bool
    summands: tuple  # (degree, irreducible, matches) per summand


def theorem_correspondence_check(degrees: Sequence[int],
                                 reps: Sequence[Representation]) -> Correspondence:
    """Match a splitting into line bundles O(n_i) against representations.

    Degree-0 summands should carry an absolutely irreducible representation,
    nonzero degrees a reducible one.
    """
    if len(degrees) != len(reps):
        raise DimensionMismatch(f"{len(degrees)} degrees but {len(reps)} representations")
    if not degrees:
        raise ValueError("empty splitting")
    summands = []
    for n, pi in zip(degrees, reps):
        if n < 0:
            raise ValueError(f"O({n}) is not generated by sections")
        if pi.algebra.dim != sections_dim_p1(n):
            raise DimensionMismatch(
                f"representation of a {pi.algebra.dim}-dim algebra paired with O({n})")
        if not verify_representation(pi):
            raise ValueError(f"representation paired with O({n}) is not a homomorphism")
        irr = is_absolutely_irreducible(pi).irreducible
        summands.append((n, irr, irr == (n == 0)))
    zero = sum(1 for n in degrees if n == 0)
    if zero == len(degrees):
        case = Case.ALL_TRIVIAL
    elif zero == 0:
        case = Case.ALL_NONTRIVIAL
    else:
        case = Case.MIXED
    return Correspondence(case, all(ok for *_, ok in summands), tuple(summands))


def evaluate_phi(space: MatrixSpace, t: Sequence) -> Mat:
    """The fibre map at [t] in P(M): the element sum t_i A_i."""
    if not any(space.field(x) for x in t):
        raise ValueError("the zero vector is not a point of projective space")
    return space.element(t)


def generation_witness(space: MatrixSpace, fiber_dim: int, points: Sequence | None = None,
                       p: int = DEFAULT_PRIME, budget: int = DEFAULT_POINT_BUDGET):
    """First point where the rank differs from ``fiber_dim``, or None.

    Without ``points``, every point of P^{d-1}(F_p) is visited (a rational
    space is reduced mod ``p``; a prime-field space uses its own modulus).
    """
    if points is not None:
        for t in points:
            if evaluate_phi(space, t).rank() != fiber_dim:
                return tuple(space.field(x) for x in t)
        return None
    reduced = space if isinstance(space.field, PrimeField) else space.reduce(GF(p))
    q = reduced.field.p
    mats = reduced.int_basis()
    if projective_count(space.d, q) > budget:
        raise BudgetExceeded(f"P^{space.d - 1}(F_{q}) exceeds budget {budget}")
    for pt in projective_points(space.d, q):
        if rank_mod_p(combine_mod_p(mats, pt, q), q) != fiber_dim:
            return tuple(reduced.field(x) for x in pt)
    return None


def generation_check(space: MatrixSpace, fiber_dim: int, points: Sequence | None = None,
                     p: int = DEFAULT_PRIME, budget: int = DEFAULT_POINT_BUDGET) -> bool:
    return generation_witness(space, fiber_dim, points, p, budget) is None


@dataclass(frozen=True)
class SummandRep:
    side: str  # "L" (image side, k1) or "T" (dual side, k2)
    algebra: LieAlgebra
    representation: Representation
    irreducible: bool
    enveloping_dim: int


@dataclass(frozen=True)
class ClassificationReport:
    compression: CompressionCertificate | None
    split: tuple[int, int] | None
    bundle_view: dict
    rep_view: tuple
    primitive: bool
    metadata: dict = dc_field(default_factory=dict)


def classify_rank2(space: MatrixSpace, seed: int = 0, retries: int = DEFAULT_RETRIES,
                   verdict: RankVerdict | None = None) -> ClassificationReport:
    """Compression certificate plus its representation-side reading.

    Each trivial summand (k1 on the L side, k2 on the T side) gets the
    1-dimensional section algebra of O(0) and its faithful 1-dim
    representation; all of them are checked for irreducibility. The
    biconditional "certificate exists iff the rep view is nonempty and all
    irreducible" is enforced before returning.
    """
    if verdict is None:
        verdict = generic_rank(space, seed=seed)
    cert = detect_compression_rank2(space, seed=seed, retries=retries, verdict=verdict)
    k = verdict.generic_rank
    meta = {"generic_rank": k, "seed": seed, "retries": retries,
            "section_bracket": section_bracket_rule(0),
            "rank_status": verdict.upper_bound.value}
    if cert is None:
        report = ClassificationReport(None, None, {"L": 0, "T": 0}, (), True, meta)
    else:
        meta["split_rule"] = cert.split_rule
        entries = []
        for side, count in (("L", cert.k1), ("T", cert.k2)):
            for _ in range(count):
                g = build_section_algebra(0)
                pi = faithful_irreducible_representation(g)
                res = is_absolutely_irreducible(pi)
                if not verify_representation(pi):
                    raise InvariantViolation("summand representation is not a homomorphism")
                entries.append(SummandRep(side, g, pi, res.irreducible, res.enveloping_dim))
        report = ClassificationReport(cert, cert.split, {"L": cert.k1, "T": cert.k2},
                                      tuple(entries), False, meta)
    has_cert = report.compression is not None
    reps_ok = bool(report.rep_view) and all(e.irreducible for e in report.rep_view)
    if has_cert != reps_ok or report.primitive == has_cert:
        raise InvariantViolation("certificate and representation view disagree")
    return report
