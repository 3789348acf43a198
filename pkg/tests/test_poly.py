from itertools import product

import sympy as sp
from hypothesis import given, strategies as st

import oracles
from rankspaces.fields import GF, QQ
from rankspaces.linalg import Mat
from rankspaces.poly import MinorExpander, Poly, binary_form_gcd, binary_form_roots, generic_element
from spacegen import SKEW3

s_, t_ = Poly.var(QQ, 2, 0), Poly.var(QQ, 2, 1)


def test_arithmetic_and_degree():
    f = (s_ + t_) * (s_ - t_)
    assert f == s_ * s_ - t_ * t_
    assert f.degree() == 2 and f.is_homogeneous()
    assert Poly(QQ, 2).degree() == -1
    assert f.evaluate((3, 1)) == 8
    assert f.format(["s", "t"]) in ("s^2 - t^2", "-t^2 + s^2")


def test_skew_determinant_vanishes():
    M = generic_element([Mat.from_rows(QQ, A) for A in SKEW3])
    ex = MinorExpander(M)
    assert not ex.minor((0, 1, 2), (0, 1, 2))
    assert any(m for _, _, m in ex.minors(2))


def test_minors_match_sympy():
    mats = [[[1, 2, 0], [0, 1, -1]], [[0, 0, 3], [1, 1, 0]], [[2, 0, 1], [0, 0, 1]]]
    ex = MinorExpander(generic_element([Mat.from_rows(QQ, A) for A in mats]))
    M, xs = oracles.generic_matrix(mats)
    for rows, cols, minor in ex.minors(2):
        ref = sp.Poly(sp.expand(M.extract(list(rows), list(cols)).det()), *xs)
        mine = {k: v for k, v in minor.terms.items()}
        theirs = {k: sp.Rational(v) for k, v in ref.terms()} if not ref.is_zero else {}
        assert {k: sp.Rational(v.numerator, v.denominator) for k, v in mine.items()} == theirs


def test_gcd_examples():
    assert binary_form_gcd([s_ * s_, s_ * t_, t_ * t_], QQ) == Poly.const(QQ, 2, 1)
    assert binary_form_gcd([s_ * t_], QQ) == s_ * t_
    g = binary_form_gcd([s_ * s_ * t_ - s_ * t_ * t_, s_ * s_ - s_ * t_], QQ)
    assert g == s_ * t_ - s_ * s_  # s(s - t), scaled so the top power of t is monic
    assert not binary_form_gcd([Poly(QQ, 2)], QQ)


def test_roots_order():
    f = s_ * t_ * (t_ - s_ * 2)
    assert binary_form_roots(f) == [(1, 0), (1, 2), (0, 1)]


def test_roots_irrational_over_q():
    f = t_ * t_ - s_ * s_ * 2
    assert binary_form_roots(f) == []


def test_roots_over_prime_field():
    F = GF(7)
    s7, t7 = Poly.var(F, 2, 0), Poly.var(F, 2, 1)
    f = t7 * t7 - s7 * s7 * 2  # 2 = 3^2 = 4^2 mod 7
    xs = sorted(int(t) for _, t in binary_form_roots(f))
    assert xs == [3, 4]


coef = st.integers(-4, 4)


@st.composite
def binary_forms(draw, max_deg=3):
    roots = draw(st.lists(st.tuples(coef, coef).filter(any), max_size=max_deg))
    f = Poly.const(QQ, 2, draw(st.integers(1, 3)))
    for a, b in roots:
        f = f * (s_ * b - t_ * a)  # vanishes at [a:b]
    return f


def _to_sympy(f):
    return sum(sp.Rational(c.numerator, c.denominator) * oracles.s ** a * oracles.t ** b
               for (a, b), c in f.terms.items())


@given(st.lists(binary_forms(), min_size=1, max_size=3))
def test_gcd_matches_sympy(forms):
    g = binary_form_gcd(forms, QQ)
    ref = sp.gcd_list([_to_sympy(f) for f in forms])
    assert sp.simplify(_to_sympy(g) / ref).is_constant()


@given(binary_forms())
def test_roots_are_roots(f):
    for pt in binary_form_roots(f):
        assert f.evaluate(pt) == 0


@given(st.lists(st.tuples(coef, coef, coef), min_size=1, max_size=4))
def test_evaluation_is_ring_hom(cs):
    F = QQ
    x, y = Poly.var(F, 2, 0), Poly.var(F, 2, 1)
    f = Poly.const(F, 2, 0)
    for a, b, c in cs:
        f = f + Poly.const(F, 2, a) * x * y + Poly.const(F, 2, b) * x + Poly.const(F, 2, c)
    g = f * f
    for pt in product(range(-2, 3), repeat=2):
        assert g.evaluate(pt) == f.evaluate(pt) ** 2
