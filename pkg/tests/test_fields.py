from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rankspaces.errors import FieldMismatch, ReductionError, ScalarParseError
from rankspaces.fields import GF, QQ, Fp, field_from_tag, is_prime, reduce_mod


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_rational_parse_and_format():
    assert QQ.parse("3/6") == Fraction(1, 2)
    assert QQ.parse("-4") == -4
    assert QQ.format(Fraction(-2, 4)) == "-1/2"
    assert QQ.format(Fraction(7)) == "7"


@pytest.mark.parametrize("bad", ["1/0", "", "x", "1.5", "1//2"])
def test_rational_parse_rejects(bad):
    with pytest.raises(ScalarParseError):
        QQ.parse(bad)


def test_prime_field_parse_and_format():
    F = GF(7)
    assert F.parse("10 mod 7") == Fp(3, 7)
    assert F.parse("-1") == Fp(6, 7)
    assert F.format(F(9)) == "2 mod 7"
    with pytest.raises(ScalarParseError):
        F.parse("1 mod 5")


def test_prime_field_rejects_even_and_composite():
    for p in (2, 4, 9, 15):
        with pytest.raises(ValueError):
            GF(p)


def test_field_tags_roundtrip():
    assert field_from_tag("Q") is QQ
    assert field_from_tag("fp:11") == GF(11)
    assert GF(11).tag == "Fp:11"
    with pytest.raises(ValueError):
        field_from_tag("Fp:12")


def test_mixed_moduli_raise():
    with pytest.raises(FieldMismatch):
        Fp(1, 5) + Fp(1, 7)


def test_reduce_mod():
    F = GF(5)
    assert reduce_mod(Fraction(1, 2), F) == Fp(3, 5)
    with pytest.raises(ReductionError):
        reduce_mod(Fraction(1, 5), F)


def test_fp_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        Fp(1, 5) / Fp(0, 5)


primes = st.sampled_from([3, 5, 7, 11, 101])


@given(primes, st.integers(), st.integers(), st.integers())
def test_fp_ring_axioms(p, a, b, c):
    x, y, z = Fp(a, p), Fp(b, p), Fp(c, p)
    assert (x + y) * z == x * z + y * z
    assert x - x == 0
    assert int(x * y) == (a * b) % p


@given(primes, st.integers().filter(lambda v: v != 0))
def test_fp_division_inverts(p, a):
    x = Fp(a, p)
    if x:
        assert (Fp(1, p) / x) * x == 1
        assert x ** (p - 1) == 1


@given(st.fractions(max_denominator=1000))
def test_rational_format_parse_roundtrip(q):
    assert QQ.parse(QQ.format(q)) == q


@given(primes, st.integers(-10 ** 6, 10 ** 6))
def test_prime_format_parse_roundtrip(p, a):
    F = GF(p)
    assert F.parse(F.format(F(a))) == F(a)
