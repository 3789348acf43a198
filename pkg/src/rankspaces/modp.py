"""Plain-integer linear algebra mod p, and finite enumerations over F_p.

These routines back the exhaustive procedures (projective-space sweeps and
the Grassmannian brute-force oracle). They deliberately do not share code
with :mod:`rankspaces.linalg` so the oracle stays an independent check.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, Sequence


def rref_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int):
    R = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(R):
            break
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = pow(R[r][c], -1, p)
        R[r] = [(x * inv) % p for x in R[r]]
        prow = R[r]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [(x - f * y) % p for x, y in zip(R[i], prow)]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    if not rows:
        return 0
    # forward elimination only
    R = [[x % p for x in r] for r in rows]
    ncols = len(R[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[rank], R[piv] = R[piv], R[rank]
        inv = pow(R[rank][c], -1, p)
        prow = R[rank]
        for i in range(rank + 1, len(R)):
            f = R[i][c]
            if f:
                f = f * inv
                R[i] = [(x - f * y) % p for x, y in zip(R[i], prow)]
        rank += 1
        if rank == len(R):
            break
    return rank


def combine_mod_p(mats: Sequence[Sequence[Sequence[int]]], coeffs: Sequence[int], p: int):
    m, n = len(mats[0]), len(mats[0][0])
    out = [[0] * n for _ in range(m)]
    for A, c in zip(mats, coeffs):
        if c:
            for i in range(m):
                row, Ai = out[i], A[i]
                for j in range(n):
                    row[j] += c * Ai[j]
    return [[x % p for x in r] for r in out]


def projective_points(d: int, p: int) -> Iterator[tuple[int, ...]]:
    """Normalized representatives of P^{d-1}(F_p).

    The first nonzero coordinate is 1. Points with the leading 1 in position 0
    come first, each block in lexicographic order, so [1:0:...:0] is first.
    """
    for lead in range(d):
        for tail in product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + tail


def projective_count(d: int, p: int) -> int:
    return (p ** d - 1) // (p - 1)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def grassmannian(n: int, k: int, p: int) -> list[tuple[tuple[int, ...], ...]]:
    """All k-dim subspaces of F_p^n as RREF row bases, lexicographically sorted."""
    if k == 0:
        return [()]
    out = []
    for pivots in combinations(range(n), k):
        # free slots: row r, column c > pivots[r] with c not a pivot
        slots = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
        for vals in product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), v in zip(slots, vals):
                rows[r][c] = v
            out.append(tuple(tuple(r) for r in rows))
    out.sort()
    return out
