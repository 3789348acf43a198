"""Exact analysis of linear spaces of matrices.

Constant-rank verdicts, rank-2 compression certificates, Kronecker data of
pencils, and the solvable Lie algebra side of line bundles on P^1.
"""

from .bridge import (
    ClassificationReport,
    build_section_algebra,
    classify_rank2,
    generation_check,
    sections_dim_p1,
    theorem_correspondence_check,
    trivial_iff_irreducible_pair,
)
from .errors import *  # noqa: F401,F403
from .fields import GF, QQ, Fp, PrimeField, Rationals, field_from_tag
from .lie import (
    LieAlgebra,
    Representation,
    adjoint_representation,
    derived_series,
    invariant_subspace_witness,
    is_absolutely_irreducible,
    upper_triangular_algebra,
    verify_lie_algebra,
    verify_representation,
)
from .linalg import Mat, Subspace, rank_factor
from .matrix_space import (
    CompressionCertificate,
    MatrixSpace,
    RankStatus,
    common_kernel_and_image,
    constant_rank_verdict,
    detect_compression_rank2,
    generic_rank,
    verify_certificate,
)
from .oracle import brute_force_compression_fp, rank2_compression_fp
from .pencil import kronecker_minimal_indices, pencil_constant_rank

__version__ = "0.1.0"
