"""Genus of the Fermat-type curve from the projection [x0,x1,x2] -> [x0,x1], with two cross-checks."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import upoly as U
from .cover import MonomialQuotient, Weights


class GenusError(ArithmeticError):
    """An internal computation produced a non-integral or negative genus."""


@dataclass(frozen=True)
class WeightedLineCharts:
    """The two affine charts V0 = {x0 != 0}, V1 = {x1 != 0} of P(s,t); V1 = V0 glued by x -> 1/x."""

    s: int
    t: int
    v0_gen: MonomialQuotient
    v1_gen: MonomialQuotient


def wp_line_charts(s: int, t: int) -> WeightedLineCharts:
    if s <= 0 or t <= 0 or gcd(s, t) != 1:
        raise ValueError(f"P({s},{t}) needs coprime positive weights")
    v0 = MonomialQuotient(-t, s, 0)
    return WeightedLineCharts(s, t, v0, v0.inverse())


def phi_degree(w: Weights) -> int:
    return w.a * w.m


@dataclass(frozen=True)
class RamificationOrbit:
    """Ramification points sharing one coefficient, given by the roots of a squarefree polynomial."""

    location: str
    point_count: int
    coefficient: int
    point_description: str
    minimal_polynomial: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.point_count * self.coefficient


def ramification_u0(w: Weights) -> RamificationOrbit:
    """Points [1, alpha, 0] with alpha^(an) = -1, each with coefficient am - 1."""
    an = w.a * w.n
    return RamificationOrbit(
        "U0",
        an,
        w.a * w.m - 1,
        f"[1, alpha, 0] with alpha^{an} = -1",
        tuple([1] + [0] * (an - 1) + [1]),
    )


def ramification_x0(w: Weights) -> RamificationOrbit:
    """Points (z_0, ..., z_m) = (0, ..., 0, gamma) with gamma^a = 1, each with coefficient m - 1."""
    return RamificationOrbit(
        "x0_zero",
        w.a,
        w.m - 1,
        f"(0,...,0,gamma) in U1 with gamma^{w.a} = 1",
        tuple([-1] + [0] * (w.a - 1) + [1]),
    )


def _hurwitz_genus(degree: int, deg_r: int) -> int:
    # 2g - 2 = degree * (2*0 - 2) + deg R
    twice = -2 * degree + deg_r + 2
    if twice % 2 or twice < 0:
        raise GenusError(f"Hurwitz gives 2g = {twice} for degree {degree}, deg R = {deg_r}")
    return twice // 2


def genus_closed_form(w: Weights) -> int:
    a, m, n = w.as_tuple()
    num = (a * m - 1) * (a * n - 2) + a * (m - 1)
    if num % 2 or num < 0:
        raise GenusError(f"closed form numerator {num} is not a nonnegative even integer")
    return num // 2


@dataclass(frozen=True)
class HurwitzGenus:
    weights: Weights
    phi_degree: int
    ramification: tuple[RamificationOrbit, ...]
    deg_R: int
    genus: int
    closed_form: int


def genus_hurwitz(w: Weights) -> HurwitzGenus:
    orbits = (ramification_u0(w), ramification_x0(w))
    deg_r = sum(o.degree for o in orbits)
    expected = w.a * w.n * (w.a * w.m - 1) + w.a * (w.m - 1)
    if deg_r != expected:
        raise GenusError(f"deg R = {deg_r} from the orbits, expected {expected}")
    d = phi_degree(w)
    g = _hurwitz_genus(d, deg_r)
    closed = genus_closed_form(w)
    if g != closed:
        raise GenusError(f"Hurwitz genus {g} != closed form {closed} for {w}")
    return HurwitzGenus(w, d, orbits, deg_r, g, closed)


def interior_points(a_side: int, b_side: int) -> int:
    """Lattice points strictly inside the triangle (0,0), (a_side,0), (0,b_side), by enumeration."""
    total = a_side * b_side
    return sum(
        1
        for x in range(1, a_side)
        for y in range(1, b_side)
        if b_side * x + a_side * y < total
    )


def pick_interior(a_side: int, b_side: int) -> Fraction:
    area = Fraction(a_side * b_side, 2)
    boundary = a_side + b_side + gcd(a_side, b_side)
    return area - Fraction(boundary, 2) + 1


def newton_polygon_genus_oracle(w: Weights) -> int:
    """Interior lattice points of the Newton polygon of 1 + X^an - Y^am."""
    an, am = w.a * w.n, w.a * w.m
    count = interior_points(an, am)
    if pick_interior(an, am) != count:
        raise GenusError(f"enumeration ({count}) disagrees with Pick's formula for {w}")
    return count


def dual_projection_genus(w: Weights) -> int:
    """Genus through [x0,x1,x2] -> [x0,x2]: the same ramification count with m and n exchanged."""
    a, m, n = w.as_tuple()
    degree = a * n
    deg_r = a * m * (a * n - 1) + a * (n - 1)
    return _hurwitz_genus(degree, deg_r)


@dataclass(frozen=True)
class GenusReport:
    weights: Weights
    phi_degree: int
    ramification: tuple[RamificationOrbit, ...]
    deg_R: int
    genus: int
    oracle_genus: int
    dual_projection_genus: int
    smoothness: object | None = None

    @property
    def agreement(self) -> bool:
        return self.genus == self.oracle_genus == self.dual_projection_genus

    def hurwitz_holds(self) -> bool:
        return 2 * self.genus - 2 == -2 * self.phi_degree + self.deg_R


def full_report(w: Weights, smoothness=None) -> GenusReport:
    """Everything the genus computation produces, plus the optional smoothness certificate."""
    h = genus_hurwitz(w)
    return GenusReport(
        w,
        h.phi_degree,
        h.ramification,
        h.deg_R,
        h.genus,
        newton_polygon_genus_oracle(w),
        dual_projection_genus(w),
        smoothness,
    )


def orbit_is_consistent(o: RamificationOrbit) -> bool:
    """point_count matches the degree of a squarefree defining polynomial."""
    p = list(o.minimal_polynomial)
    return U.deg(p) == o.point_count and U.deg(U.gcd_q(p, U.derivative(p))) == 0
