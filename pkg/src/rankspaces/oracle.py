"""Exhaustive compression search over F_p.

Independent of the detector in :mod:`rankspaces.matrix_space`: it uses only
the integer kernel in :mod:`rankspaces.modp` and walks every candidate pair
(V', W') in lexicographic order of their echelon representatives.
"""

from __future__ import annotations

from itertools import product

from .errors import BudgetExceeded, FieldMismatch
from .fields import Fp, PrimeField
from .linalg import Subspace
from .matrix_space import CompressionCertificate, MatrixSpace
from .modp import gaussian_binomial, grassmannian, rank_mod_p

DEFAULT_BUDGET = 10 ** 6
RANK2_SPLITS = ((0, 2), (1, 1), (2, 0))


def search_size(space: MatrixSpace, k1: int, k2: int) -> int:
    """Number of (V', W') pairs the oracle may visit."""
    p, m, n = space.field.p, space.rows, space.cols
    return gaussian_binomial(n, n - k1, p) * gaussian_binomial(m, k2, p)


def _to_subspace(F: PrimeField, ambient: int, rows) -> Subspace:
    return Subspace.span(F, ambient, [tuple(Fp(x, F.p) for x in r) for r in rows])


def brute_force_compression_fp(space: MatrixSpace, k1: int, k2: int,
                               budget: int = DEFAULT_BUDGET) -> CompressionCertificate | None:
    """First (V', W') with codim V' = k1, dim W' = k2 and A(V') in W' for all A.

    Candidates are ordered by V' first, then W'. For each V' the span S of
    all A(V') is formed once; W' qualifies iff S lies in W'. This visits the
    same pairs in the same order as the naive double loop.
    """
    F = space.field
    if not isinstance(F, PrimeField):
        raise FieldMismatch("the brute-force oracle needs a prime-field space; reduce it first")
    p, m, n = F.p, space.rows, space.cols
    if not (0 <= k1 <= n and 0 <= k2 <= m):
        return None
    size = search_size(space, k1, k2)
    if size > budget:
        raise BudgetExceeded(f"oracle search of {size} pairs exceeds budget {budget}")
    mats = space.int_basis()
    Ws = grassmannian(m, k2, p)
    for V in grassmannian(n, n - k1, p):
        images = [[sum(a * x for a, x in zip(row, v)) % p for row in A] for A in mats for v in V]
        s_rank = rank_mod_p(images, p) if images else 0
        if s_rank > k2:
            continue
        for W in Ws:
            if k2 == 0:
                ok = s_rank == 0
            else:
                ok = rank_mod_p(list(W) + images, p) == k2
            if ok:
                return CompressionCertificate(k1, k2, _to_subspace(F, n, V), _to_subspace(F, m, W),
                                              "brute-force")
    return None


def max_rank_fp(space: MatrixSpace) -> int:
    """Largest rank over every coefficient vector in F_p^d, by enumeration."""
    F = space.field
    if not isinstance(F, PrimeField):
        raise FieldMismatch("exhaustive rank needs a prime-field space")
    p = F.p
    mats = space.int_basis()
    best = 0
    for t in product(range(p), repeat=space.d):
        M = [[sum(c * A[i][j] for c, A in zip(t, mats)) % p for j in range(space.cols)]
             for i in range(space.rows)]
        best = max(best, rank_mod_p(M, p))
    return best


def rank2_compression_fp(space: MatrixSpace, budget: int = DEFAULT_BUDGET):
    """Exhaustive answer to "is this a compression space of rank 2 over F_p?".

    Returns ``(max_rank, certificate or None)``; a certificate is only
    reported when the enumerated maximal rank is exactly 2.
    """
    r = max_rank_fp(space)
    if r != 2:
        return r, None
    for k1, k2 in RANK2_SPLITS:
        cert = brute_force_compression_fp(space, k1, k2, budget)
        if cert is not None:
            return r, cert
    return r, None


def oracle_splits(space: MatrixSpace, budget: int = DEFAULT_BUDGET) -> dict:
    """Oracle result for each rank-2 split, keyed by ``(k1, k2)``."""
    return {s: brute_force_compression_fp(space, *s, budget=budget) for s in RANK2_SPLITS}
