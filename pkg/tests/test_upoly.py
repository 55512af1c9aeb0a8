import sympy as sp
from hypothesis import given, strategies as st

from wpfermat import upoly as U

T = sp.Symbol("T")
polys = st.lists(st.integers(-9, 9), min_size=1, max_size=7).map(U.trim)


def to_sympy(p):
    return sp.Poly(list(reversed(p)) or [0], T, domain="QQ")


@given(polys, polys)
def test_mul_and_divmod(p, q):
    assert to_sympy(U.mul(p, q)) == to_sympy(p) * to_sympy(q)
    if U.deg(q) >= 0:
        quo, rem = U.divmod_q(p, q)
        assert U.trim(U.sub(U.add(U.mul(quo, q), rem), p)) == []
        assert U.deg(rem) < U.deg(q)


@given(polys, polys)
def test_gcd_matches_sympy(p, q):
    if not U.trim(p) and not U.trim(q):
        return
    g = U.monic_q(U.gcd_q(p, q))
    assert to_sympy(g) == sp.gcd(to_sympy(p), to_sympy(q)).monic()


@given(polys)
def test_squarefree(p):
    if U.deg(p) < 1:
        return
    sq = U.squarefree_part(p)
    expected = sp.quo(to_sympy(p), sp.gcd(to_sympy(p), to_sympy(p).diff(T)))
    assert to_sympy(U.monic_q(sq)) == expected.monic()
    prod = [1]
    for f, k in U.squarefree_decomposition(p):
        for _ in range(k):
            prod = U.mul(prod, f)
    assert to_sympy(U.monic_q(prod)) == to_sympy(p).monic()


def test_exact_div_and_strip():
    assert U.exact_div([-1, 0, 1], [1, 1]) == [-1, 1]
    assert U.strip_x_factor([0, 0, 3, 1]) == ([3, 1], 2)
    assert U.to_str([1, 0, 0, 1]) == "T^3 + 1"
