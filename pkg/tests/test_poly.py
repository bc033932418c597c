from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from dsolid.poly import MultiPoly
from dsolid.qfield import QuadExt, eval_poly_at, sqrt_fraction


def _mk(nvars=3):
    exps = st.tuples(*[st.integers(0, 3)] * nvars)
    coeffs = st.fractions(min_value=-5, max_value=5)
    return st.lists(st.tuples(exps, coeffs), max_size=6).map(
        lambda ts: MultiPoly.from_terms(nvars, ts)
    )


@settings(max_examples=60, deadline=None)
@given(a=_mk(), b=_mk(), c=_mk())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == MultiPoly.zero(3)


@settings(max_examples=30, deadline=None)
@given(a=_mk())
def test_zero_coefficients_never_stored(a):
    assert all(c != 0 for c in a.terms.values())


def test_substitute_monomials_matches_general():
    p = MultiPoly.from_terms(2, [((2, 1), 3), ((0, 2), Fraction(1, 2))])
    images = {0: (Fraction(2), (1, 0)), 1: (Fraction(-1), (0, 1))}
    fast = p.substitute_monomials(2, images)
    gen = p.substitute(
        [MultiPoly.monomial(2, (1, 0), 2), MultiPoly.monomial(2, (0, 1), -1)]
    )
    assert fast == gen


def test_derivative():
    p = MultiPoly.from_terms(2, [((3, 0), 1), ((1, 1), 2)])
    assert p.derivative(0) == MultiPoly.from_terms(2, [((2, 0), 3), ((0, 1), 2)])


def test_homogeneity_and_degree():
    p = MultiPoly.from_terms(3, [((2, 1, 1), 1), ((0, 4, 0), -2)])
    assert p.is_homogeneous() and p.total_degree() == 4
    q = p + MultiPoly.const(3, 1)
    assert not q.is_homogeneous()


def test_evaluate_exact():
    p = MultiPoly.from_terms(2, [((1, 1), Fraction(1, 3)), ((2, 0), 1)])
    assert p.evaluate([Fraction(3), Fraction(2)]) == 2 + 9


def test_var_bounds():
    with pytest.raises(ValueError):
        MultiPoly.var(2, 5)


def test_quadext_field_ops():
    x = QuadExt(Fraction(1), Fraction(2), 5)  # 1 + 2 sqrt5
    y = QuadExt(Fraction(0), Fraction(1), 5)
    assert (x * y).a == Fraction(10)
    assert (x * y).b == Fraction(1)
    assert (x - x).is_zero()
    assert (y * y).a == 5


def test_quadext_rejects_square_d():
    with pytest.raises(ValueError):
        QuadExt(Fraction(0), Fraction(1), 9)


def test_sqrt_fraction():
    assert sqrt_fraction(Fraction(9, 4)) == Fraction(3, 2)
    r = sqrt_fraction(Fraction(2))
    assert isinstance(r, QuadExt) and (r * r).a == 2 and (r * r).b == 0
    r = sqrt_fraction(Fraction(2, 3))
    assert isinstance(r, QuadExt)
    sq = r * r
    assert sq.a == Fraction(2, 3) and sq.b == 0


def test_eval_poly_mixed_point():
    p = MultiPoly.from_terms(2, [((2, 0), 1), ((0, 1), -1)])
    root2 = sqrt_fraction(Fraction(2))
    v = eval_poly_at(p, [root2, Fraction(2)])
    assert isinstance(v, QuadExt) and v.is_zero()
