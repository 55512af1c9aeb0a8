from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from wpfermat.lattice import (
    Cone2D,
    LatticePoint as P,
    ceil_adj,
    det,
    dual_cone,
    semigroup_generators,
    wps_fan,
)

from conftest import coprime_pairs


def hilbert_basis(cone: Cone2D, box: int) -> set:
    """Irreducible nonzero lattice points of the cone, by brute force in a box."""
    pts = [
        P(x, y)
        for x, y in product(range(-box, box + 1), repeat=2)
        if (x, y) != (0, 0) and cone.contains(P(x, y))
    ]
    ptset = set(pts)
    reducible = {p + q for p in pts for q in pts} & ptset
    return ptset - reducible


def test_fan_rays():
    fan = wps_fan(2, 3)
    assert set(fan.rays) == {P(-2, -3), P(1, 0), P(0, 1)}
    assert set(wps_fan(1, 2).rays) == {P(-1, -2), P(1, 0), P(0, 1)}
    assert set(wps_fan(3, 5).maximal_cones[1].rays) == {P(-3, -5), P(0, 1)}


def test_fan_relation_and_multiplicities():
    for m, n in coprime_pairs(15):
        v0, v1, v2 = wps_fan(m, n).rays
        assert v0 + m * v1 + n * v2 == P(0, 0)
        mults = [c.multiplicity for c in wps_fan(m, n).maximal_cones]
        assert mults == [1, m, n]


@pytest.mark.parametrize("m,n", [(2, 4), (3, 2), (0, 3), (2, 2)])
def test_fan_rejects(m, n):
    with pytest.raises(ValueError):
        wps_fan(m, n)


def test_dual_cone_examples():
    m, n = 2, 3
    s1 = Cone2D.spanned_by((-m, -n), (0, 1))
    s2 = Cone2D.spanned_by((-m, -n), (1, 0))
    assert set(dual_cone(s1).rays) == {P(-1, 0), P(-n, m)}
    assert set(dual_cone(s2).rays) == {P(n, -m), P(0, -1)}
    q = Cone2D.spanned_by((1, 0), (0, 1))
    assert set(dual_cone(q).rays) == {P(1, 0), P(0, 1)}


rays = st.tuples(st.integers(-9, 9), st.integers(-9, 9)).filter(lambda v: v != (0, 0))


@given(rays, rays)
def test_dual_is_involution_and_nonnegative(u, v):
    if det(P(*u), P(*v)) == 0:
        return
    c = Cone2D.spanned_by(u, v)
    d = dual_cone(c)
    assert dual_cone(d) == c
    for f in d.rays:
        for r in c.rays:
            assert f.dot(r) >= 0


def test_ceil_adj():
    assert ceil_adj(0, 5) == 1
    assert ceil_adj(3, 2) == 2
    assert ceil_adj(6, 3) == 2
    with pytest.raises(ValueError):
        ceil_adj(1, 0)


@given(st.integers(1, 10**6), st.integers(1, 1000))
def test_ceil_adj_is_ceiling_for_positive(p, q):
    c = ceil_adj(p, q)
    assert (c - 1) * q < p <= c * q


def test_semigroup_examples():
    s1d = dual_cone(Cone2D.spanned_by((-2, -3), (0, 1)))
    assert semigroup_generators(s1d, 2) == [P(-1, 0), P(-2, 1), P(-3, 2)]
    s2d = dual_cone(Cone2D.spanned_by((-2, -3), (1, 0)))
    assert [tuple(g) for g in semigroup_generators(s2d, 3)] == [
        (0, -1), (1, -1), (2, -2), (3, -2)
    ]
    s1d = dual_cone(Cone2D.spanned_by((-1, -2), (0, 1)))
    assert semigroup_generators(s1d, 1) == [P(-1, 0), P(-2, 1)]


@pytest.mark.parametrize("m,n", coprime_pairs(9))
def test_semigroup_generators_match_brute_force(m, n):
    for cone, k in (
        (Cone2D.spanned_by((-m, -n), (0, 1)), m),
        (Cone2D.spanned_by((-m, -n), (1, 0)), n),
    ):
        gens = semigroup_generators(dual_cone(cone), k)
        assert len(gens) == k + 1
        # the generator list may contain non-minimal elements; it must contain the Hilbert basis
        # and every generator must lie in the dual cone
        basis = hilbert_basis(dual_cone(cone), 2 * n + 2)
        assert basis <= set(gens)
        assert all(dual_cone(cone).contains(g) for g in gens)


def test_semigroup_rejects_foreign_cone():
    with pytest.raises(ValueError):
        semigroup_generators(Cone2D.spanned_by((1, 2), (2, 1)), 3)


def test_cone_validation():
    with pytest.raises(ValueError):
        Cone2D.spanned_by((1, 1), (2, 2))
    with pytest.raises(ValueError):
        Cone2D(P(0, 1), P(1, 0))
