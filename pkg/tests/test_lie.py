from random import Random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

import oracles
from rankspaces.errors import DimensionMismatch, InapplicableError
from rankspaces.fields import GF, QQ
from rankspaces.lie import (
    LieAlgebra,
    Representation,
    abelian_algebra,
    adjoint_representation,
    character_representation,
    conjugate,
    derived_series,
    direct_sum,
    enveloping_dimension,
    example1_algebra,
    faithful_irreducible_representation,
    invariant_subspace_witness,
    is_absolutely_irreducible,
    sl2_algebra,
    transport_bracket,
    upper_triangular_algebra,
    verify_lie_algebra,
    verify_representation,
)
from rankspaces.linalg import Mat, Subspace, random_invertible


def as_fraction_dict(g):
    return {k: [str(x) for x in v] for k, v in g.brackets().items()}


def test_jacobi_examples():
    assert verify_lie_algebra(example1_algebra())
    assert verify_lie_algebra(abelian_algebra(4))
    assert verify_lie_algebra(sl2_algebra())


def test_jacobi_detects_perturbation():
    # [e1, e2] = e3 on top of Example 1 breaks Jacobi on (e1, e2, e3)
    g = LieAlgebra.from_brackets(QQ, 3, {(2, 0): [1, 0, 0], (2, 1): [0, 1, 0], (0, 1): [0, 0, 1]})
    assert not verify_lie_algebra(g)
    rng = Random(4)
    broken = 0
    for _ in range(20):
        br = {(2, 0): [1, 0, 0], (2, 1): [0, 1, 0]}
        key = rng.choice([(2, 0), (2, 1)])
        br[key] = list(br[key])
        br[key][2] = rng.choice([1, -1, 2])
        broken += not verify_lie_algebra(LieAlgebra.from_brackets(QQ, 3, br))
    assert broken == 20


def test_bad_bracket_tables():
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets(QQ, 2, {(0, 0): [1, 0]})
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets(QQ, 2, {(0, 1): [1, 0], (1, 0): [1, 0]})
    with pytest.raises(DimensionMismatch):
        LieAlgebra.from_brackets(QQ, 2, {(0, 1): [1, 0, 0]})


@pytest.mark.parametrize("g,dims,solvable", [
    (example1_algebra(), [3, 2, 0], True),
    (upper_triangular_algebra(2)[0], [3, 1, 0], True),
    (sl2_algebra(), [3, 3], False),
    (upper_triangular_algebra(3)[0], [6, 3, 1, 0], True),
    (example1_algebra(QQ, 4), [4, 3, 0], True),
    (abelian_algebra(2), [2, 0], True),
])
def test_derived_series(g, dims, solvable):
    ds = derived_series(g)
    assert list(ds.dims) == dims and ds.solvable == solvable
    assert oracles.derived_dims(g.dim, as_fraction_dict(g)) == dims


def test_t1_is_abelian_1dim():
    g, _ = upper_triangular_algebra(1)
    assert g.dim == 1 and g.is_abelian()


def test_transport():
    t2, _ = upper_triangular_algebra(2)
    assert transport_bracket(Mat.identity(QQ, 3), t2) == t2
    ab = abelian_algebra(3)
    P = random_invertible(QQ, 3, Random(1))
    assert transport_bracket(P, ab).is_abelian()
    with pytest.raises(InapplicableError):
        transport_bracket(Mat.zeros(QQ, 3, 3), t2)


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_transport_preserves_series(seed):
    t2, _ = upper_triangular_algebra(2)
    P = random_invertible(QQ, 3, Random(seed))
    g = transport_bracket(P, t2)
    assert verify_lie_algebra(g)
    assert list(derived_series(g).dims) == [3, 1, 0]
    # phi is a homomorphism: phi [x, y] = [phi x, phi y]
    cols = P.columns()
    for i in range(3):
        for j in range(3):
            assert P.apply(g.structure(i, j)) == t2.bracket(cols[i], cols[j])


def test_adjoint_examples():
    assert all(M.is_zero() for M in adjoint_representation(abelian_algebra(3)).matrices)
    ad = adjoint_representation(example1_algebra())
    assert ad.matrices[2] == Mat.from_rows(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    t2, _ = upper_triangular_algebra(2)
    ad_t2 = adjoint_representation(t2)
    assert ad_t2.dimV == 3 and verify_representation(ad_t2)


def test_homomorphism_checks():
    _, taut = upper_triangular_algebra(2)
    assert verify_representation(taut)
    assert verify_representation(adjoint_representation(sl2_algebra()))
    ad = adjoint_representation(example1_algebra())
    I = Mat.identity(QQ, 3)
    shifted = Representation(ad.algebra, 3, tuple(M + I for M in ad.matrices))
    assert not verify_representation(shifted)


def test_irreducibility_examples():
    g = example1_algebra()
    one = character_representation(g, [0, 0, 5])
    assert is_absolutely_irreducible(one).irreducible and enveloping_dimension(one) == 1
    _, taut = upper_triangular_algebra(2)
    res = is_absolutely_irreducible(taut)
    assert not res.irreducible and res.enveloping_dim == 3
    ad = is_absolutely_irreducible(adjoint_representation(g))
    assert not ad.irreducible and ad.enveloping_dim < 9


def test_enveloping_dim_matches_sympy():
    _, taut = upper_triangular_algebra(2)
    for pi in (taut, adjoint_representation(example1_algebra()), adjoint_representation(sl2_algebra())):
        mats = [sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in M.rows])
                for M in pi.matrices]
        assert enveloping_dimension(pi) == oracles.enveloping_dim(mats)


def test_sl2_adjoint_irreducible():
    assert is_absolutely_irreducible(adjoint_representation(sl2_algebra())).irreducible


def test_invariant_subspace_witness():
    _, taut = upper_triangular_algebra(2)
    assert invariant_subspace_witness(taut) == Subspace.coordinate(QQ, 2, [0])
    g = example1_algebra()
    assert invariant_subspace_witness(character_representation(g, [0, 0, 1])) is None
    two = direct_sum([character_representation(g, [0, 0, 1]), character_representation(g, [0, 0, 2])])
    U = invariant_subspace_witness(two)
    assert U in (Subspace.coordinate(QQ, 2, [0]), Subspace.coordinate(QQ, 2, [1]))
    adU = invariant_subspace_witness(adjoint_representation(g))
    assert adU is not None and adU <= Subspace.coordinate(QQ, 3, [0, 1])


def test_character_must_kill_derived_algebra():
    with pytest.raises(ValueError):
        character_representation(example1_algebra(), [1, 0, 0])


def test_faithful_irreducible():
    assert faithful_irreducible_representation(abelian_algebra(1)) is not None
    assert faithful_irreducible_representation(example1_algebra()) is None
    with pytest.raises(InapplicableError):
        faithful_irreducible_representation(sl2_algebra())


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_irreducibility_invariant_under_conjugation(seed):
    rng = Random(seed)
    _, taut = upper_triangular_algebra(2)
    pi = rng.choice([taut, adjoint_representation(sl2_algebra()), adjoint_representation(example1_algebra())])
    P = random_invertible(QQ, pi.dimV, rng)
    c = conjugate(pi, P)
    assert verify_representation(c)
    assert is_absolutely_irreducible(c) == is_absolutely_irreducible(pi)


def test_prime_field_algebra():
    g = example1_algebra(GF(7))
    assert verify_lie_algebra(g) and list(derived_series(g).dims) == [3, 2, 0]
