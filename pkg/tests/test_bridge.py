from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from rankspaces.bridge import (
    Case,
    build_section_algebra,
    classify_rank2,
    evaluate_phi,
    generation_check,
    generation_witness,
    section_bracket_rule,
    sections_dim_p1,
    theorem_correspondence_check,
    trivial_iff_irreducible_pair,
)
from rankspaces.errors import DimensionMismatch, InapplicableError
from rankspaces.fields import QQ
from rankspaces.lie import (
    abelian_algebra,
    adjoint_representation,
    character_representation,
    derived_series,
    upper_triangular_algebra,
)
from rankspaces.linalg import Mat
from rankspaces.matrix_space import MatrixSpace, generic_rank
from spacegen import BORDERED4, DIAG_PENCIL, L2_PENCIL, SKEW3, random_low_rank_space


def test_sections_dim():
    assert sections_dim_p1(2) == 3
    assert sections_dim_p1(0) == 1
    assert sections_dim_p1(-1) == 0
    # monomials s^a t^b with a + b = n
    for n in range(-3, 8):
        assert sections_dim_p1(n) == len([(a, n - a) for a in range(n + 1)])


def test_section_algebras():
    g2 = build_section_algebra(2)
    t2, _ = upper_triangular_algebra(2)
    assert g2 == t2 and section_bracket_rule(2) == "upper-triangular-transport"
    g0 = build_section_algebra(0)
    assert g0.dim == 1 and g0.is_abelian()
    g3 = build_section_algebra(3)
    assert g3.dim == 4 and list(derived_series(g3).dims) == [4, 3, 0]
    assert section_bracket_rule(3) == "example1-generalized"
    assert build_section_algebra(5).dim == 6
    with pytest.raises(ValueError):
        build_section_algebra(-1)


@pytest.mark.parametrize("n,trivial,dim", [(0, True, 1), (2, False, 3), (5, False, 6), (1, False, 2)])
def test_pair_verdict(n, trivial, dim):
    v = trivial_iff_irreducible_pair(n)
    assert v.trivial == trivial == v.has_irreducible_pair
    assert v.dim_VE == dim


def test_correspondence_cases():
    g0 = build_section_algebra(0)
    one = character_representation(g0, [1])
    c = theorem_correspondence_check([0, 0], [one, one])
    assert c.case == Case.ALL_TRIVIAL and c.consistent

    g2, g3 = build_section_algebra(2), build_section_algebra(3)
    _, taut = upper_triangular_algebra(2)
    c = theorem_correspondence_check([2, 3], [taut, adjoint_representation(g3)])
    assert c.case == Case.ALL_NONTRIVIAL and c.consistent
    assert taut.algebra == g2

    c = theorem_correspondence_check([0, 2], [one, taut])
    assert c.case == Case.MIXED and c.consistent

    # an irreducible rep paired with a nontrivial bundle is inconsistent
    char = character_representation(g2, [1, 0, 1])
    assert not theorem_correspondence_check([2], [char]).consistent


def test_correspondence_dimension_checks():
    one = character_representation(abelian_algebra(1), [1])
    with pytest.raises(DimensionMismatch):
        theorem_correspondence_check([2], [one])
    with pytest.raises(DimensionMismatch):
        theorem_correspondence_check([0, 0], [one])


def test_evaluate_phi():
    sp = MatrixSpace.from_lists(QQ, SKEW3)
    assert evaluate_phi(sp, (1, 0, 0)) == Mat.from_rows(QQ, SKEW3[0])
    with pytest.raises(ValueError):
        evaluate_phi(sp, (0, 0, 0))


def test_generation():
    assert generation_check(MatrixSpace.from_lists(QQ, SKEW3), 2, p=101)
    diag = MatrixSpace.from_lists(QQ, DIAG_PENCIL)
    assert not generation_check(diag, 2, p=101)
    assert generation_witness(diag, 2, p=101) == (1, 0)
    assert generation_witness(diag, 2, points=[(1, 1), (0, 1)]) == (0, 1)


def test_classify_corpus():
    r = classify_rank2(MatrixSpace.from_lists(QQ, SKEW3))
    assert r.primitive and r.rep_view == () and r.compression is None
    r = classify_rank2(MatrixSpace.from_lists(QQ, BORDERED4))
    assert r.split == (1, 1) and len(r.rep_view) == 2
    assert [e.side for e in r.rep_view] == ["L", "T"]
    assert all(e.irreducible and e.enveloping_dim == 1 for e in r.rep_view)
    r = classify_rank2(MatrixSpace.from_lists(QQ, L2_PENCIL))
    assert r.split == (0, 2) and [e.side for e in r.rep_view] == ["T", "T"]
    assert r.metadata["seed"] == 0 and r.metadata["generic_rank"] == 2


def test_classify_rejects_high_rank():
    with pytest.raises(InapplicableError):
        classify_rank2(MatrixSpace.from_lists(QQ, [[[1, 0, 0], [0, 1, 0], [0, 0, 1]]]))


@settings(max_examples=40)
@given(st.integers(0, 10 ** 6))
def test_classification_biconditional(seed):
    sp = random_low_rank_space(Random(seed))
    if sp is None or generic_rank(sp).generic_rank > 2:
        return
    r = classify_rank2(sp, seed=seed)
    assert (r.compression is not None) == (bool(r.rep_view) and all(e.irreducible for e in r.rep_view))
    assert r.primitive == (r.compression is None)
