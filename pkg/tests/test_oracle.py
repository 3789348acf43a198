from random import Random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from rankspaces.errors import BudgetExceeded, FieldMismatch
from rankspaces.fields import GF, QQ
from rankspaces.linalg import Subspace
from rankspaces.matrix_space import MatrixSpace, detect_compression_rank2, generic_rank
from rankspaces.modp import gaussian_binomial, grassmannian, projective_count, projective_points
from rankspaces.oracle import (
    brute_force_compression_fp,
    max_rank_fp,
    oracle_splits,
    rank2_compression_fp,
    search_size,
)
from spacegen import BORDERED4, SKEW3, random_low_rank_space

F5 = GF(5)


def skew5():
    return MatrixSpace.from_lists(QQ, SKEW3).reduce(F5)


def bordered5():
    return MatrixSpace.from_lists(QQ, BORDERED4).reduce(F5)


def test_projective_points_enumeration():
    pts = list(projective_points(3, 5))
    assert len(pts) == projective_count(3, 5) == 31
    assert pts[0] == (1, 0, 0)
    assert len(set(pts)) == 31


@pytest.mark.parametrize("n,k,p", [(3, 1, 5), (3, 2, 5), (4, 2, 3), (2, 1, 7), (4, 0, 3)])
def test_grassmannian_counts(n, k, p):
    reps = grassmannian(n, k, p)
    assert len(reps) == gaussian_binomial(n, k, p)
    if k:
        assert len(reps) == len(oracles.fp_subspaces(n, k, p))
    assert reps == sorted(reps)


def test_skew_mod5_has_no_compression():
    sp = skew5()
    assert search_size(sp, 1, 1) == 961
    assert len(oracles.fp_hyperplanes(3, 5)) * len(oracles.fp_subspaces(3, 1, 5)) == 961
    assert brute_force_compression_fp(sp, 1, 1) is None
    mats = sp.int_basis()
    assert oracles.fp_compressions(mats, oracles.fp_hyperplanes(3, 5), oracles.fp_subspaces(3, 1, 5), 5) == []
    assert all(c is None for c in oracle_splits(sp).values())


def test_bordered_mod5_unique_certificate():
    sp = bordered5()
    cert = brute_force_compression_fp(sp, 1, 1)
    assert cert.Vprime == Subspace.coordinate(F5, 4, [0, 1, 2])
    assert cert.Wprime == Subspace.coordinate(F5, 4, [3])
    found = oracles.fp_compressions(sp.int_basis(), oracles.fp_hyperplanes(4, 5),
                                    oracles.fp_subspaces(4, 1, 5), 5)
    assert len(found) == 1
    V, W = found[0]
    assert V == frozenset(v for v in oracles.fp_span([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)], 4, 5))
    assert W == oracles.fp_span([(0, 0, 0, 1)], 4, 5)


def test_trivial_split_always_found():
    sp = skew5()
    cert = brute_force_compression_fp(sp, 0, 3)
    assert cert is not None and cert.Wprime.dim == 3


def test_impossible_split():
    assert brute_force_compression_fp(skew5(), 4, 0) is None


def test_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_compression_fp(bordered5(), 1, 1, budget=100)


def test_rank2_oracle_reports_max_rank():
    r, cert = rank2_compression_fp(bordered5())
    assert r == 2 and cert is not None
    assert max_rank_fp(skew5()) == 2


def test_requires_prime_field():
    with pytest.raises(FieldMismatch):
        brute_force_compression_fp(MatrixSpace.from_lists(QQ, SKEW3), 1, 1)


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6))
def test_transpose_swaps_split(seed):
    sp = random_low_rank_space(Random(seed))
    if sp is None or max(sp.rows, sp.cols) > 3:
        return
    for k1, k2 in [(0, 2), (1, 1), (2, 0)]:
        a = brute_force_compression_fp(sp, k1, k2)
        b = brute_force_compression_fp(sp.transpose(), k2, k1)
        assert (a is None) == (b is None)


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6))
def test_detector_agrees_with_oracle(seed):
    sp = random_low_rank_space(Random(seed))
    if sp is None or generic_rank(sp).generic_rank > 2:
        return
    _, cert = rank2_compression_fp(sp)
    assert (cert is None) == (detect_compression_rank2(sp, seed=seed) is None)
