import pytest
import sympy as sp
from hypothesis import given, strategies as st

from wpfermat.laurent import LaurentPoly2

X, Y = sp.symbols("x y")

exps = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
laurent = st.dictionaries(exps, st.integers(-20, 20), max_size=5).map(LaurentPoly2)


def to_sympy(p: LaurentPoly2):
    return sp.Add(*[c * X**i * Y**j for (i, j), c in p.items()])


@given(laurent, laurent, laurent)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly2()


@given(laurent, laurent)
def test_product_matches_sympy(p, q):
    assert sp.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@given(laurent)
def test_serialize_round_trip(p):
    assert LaurentPoly2.parse(p.serialize()) == p


@given(laurent, exps, exps)
def test_monomial_map_matches_substitution(p, xi, yi):
    q = p.monomial_map(xi, yi)
    expected = to_sympy(p).subs({X: sp.Symbol("u"), Y: sp.Symbol("v")}).subs(
        {sp.Symbol("u"): X**xi[0] * Y**xi[1], sp.Symbol("v"): X**yi[0] * Y**yi[1]}
    )
    assert sp.expand(to_sympy(q) - expected) == 0


@given(laurent)
def test_derivatives_match_sympy(p):
    assert sp.expand(to_sympy(p.diff_x()) - sp.diff(to_sympy(p), X)) == 0
    assert sp.expand(to_sympy(p.diff_y()) - sp.diff(to_sympy(p), Y)) == 0


@given(laurent)
def test_clear_denominators(p):
    q, shift = p.clear_denominators()
    assert q.is_polynomial()
    assert q * LaurentPoly2.monomial(*shift) == p


def test_zero_coefficients_dropped_and_hash():
    p = LaurentPoly2({(1, 0): 2, (0, 1): 0})
    assert len(p) == 1 and p == 2 * LaurentPoly2.x()
    assert hash(p) == hash(LaurentPoly2({(1, 0): 2}))


def test_pretty_printing():
    p = LaurentPoly2({(3, 0): 1, (1, 2): -1, (0, 0): 1})
    assert str(p) == "x^3 - x*y^2 + 1"


def test_negative_power():
    assert LaurentPoly2.monomial(2, -1) ** -2 == LaurentPoly2.monomial(-4, 2)
    with pytest.raises(ValueError):
        (LaurentPoly2.x() + 1) ** -1


def test_evaluate_and_restrictions():
    p = LaurentPoly2({(3, 0): 1, (1, 2): -1, (0, 0): 1})
    assert p.evaluate(2, 1) == 7
    assert p.restrict_x0() == {0: 1}
    assert p.restrict_y0() == {3: 1, 0: 1}
    assert p.degree_x() == 3 and p.degree_y() == 2
