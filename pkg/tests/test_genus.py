from math import gcd

import pytest
from hypothesis import given, strategies as st

from wpfermat.cover import MonomialQuotient as M, Weights
from wpfermat.genus import (
    GenusError,
    _hurwitz_genus,
    dual_projection_genus,
    full_report,
    genus_closed_form,
    genus_hurwitz,
    interior_points,
    newton_polygon_genus_oracle,
    orbit_is_consistent,
    phi_degree,
    pick_interior,
    ramification_u0,
    ramification_x0,
    wp_line_charts,
)

from conftest import coprime_pairs

SWEEP = [Weights(a, m, n) for a in range(1, 6) for m, n in coprime_pairs(12)]


def superelliptic_genus(d, e):
    """Genus of the smooth model of y^d = f(x), f squarefree of degree e."""
    return ((d - 1) * (e - 1) - gcd(d, e) + 1) // 2


def test_line_charts():
    c = wp_line_charts(1, 4)
    assert c.v0_gen == M(-4, 1, 0) and c.v1_gen == M(4, -1, 0)
    assert wp_line_charts(1, 1).v0_gen == M(-1, 1, 0)
    assert wp_line_charts(2, 3).v0_gen == M(-3, 2, 0)
    with pytest.raises(ValueError):
        wp_line_charts(2, 4)


@pytest.mark.parametrize(
    "abc,phi,u0,x0,deg_r,g",
    [
        ((1, 2, 3), 2, (3, 1), (1, 1), 4, 1),
        ((2, 2, 3), 4, (6, 3), (2, 1), None, 7),
        ((1, 1, 2), 1, (2, 0), (1, 0), 0, 0),
        ((3, 1, 2), 3, (6, 2), (3, 0), None, None),
    ],
)
def test_examples(abc, phi, u0, x0, deg_r, g):
    w = Weights(*abc)
    assert phi_degree(w) == phi
    o = ramification_u0(w)
    assert (o.point_count, o.coefficient) == u0
    assert o.minimal_polynomial == tuple([1] + [0] * (u0[0] - 1) + [1])
    o = ramification_x0(w)
    assert (o.point_count, o.coefficient) == x0
    h = genus_hurwitz(w)
    if deg_r is not None:
        assert h.deg_R == deg_r
    if g is not None:
        assert h.genus == g
        rep = full_report(w)
        assert rep.genus == g and rep.agreement


def test_newton_examples():
    assert interior_points(3, 2) == 1
    assert interior_points(2, 1) == 0
    assert interior_points(6, 4) == 7
    assert dual_projection_genus(Weights(1, 2, 3)) == 1


@given(st.integers(1, 60), st.integers(1, 60))
def test_pick_agrees_with_enumeration(p, q):
    assert pick_interior(p, q) == interior_points(p, q)


@pytest.mark.parametrize("w", SWEEP, ids=str)
def test_sweep_invariants(w):
    rep = full_report(w)
    a, m, n = w.as_tuple()
    assert rep.genus == genus_closed_form(w) == newton_polygon_genus_oracle(w) == dual_projection_genus(w)
    assert rep.genus == superelliptic_genus(a * m, a * n)
    assert rep.deg_R == a * n * (a * m - 1) + a * (m - 1)
    assert 2 * rep.genus - 2 == -2 * a * m + rep.deg_R
    assert ((a * m - 1) * (a * n - 2) + a * (m - 1)) % 2 == 0
    assert all(orbit_is_consistent(o) for o in rep.ramification)
    assert full_report(Weights(a + 1, m, n)).genus > rep.genus


def test_hurwitz_rejects_odd():
    with pytest.raises(GenusError):
        _hurwitz_genus(2, 3)
