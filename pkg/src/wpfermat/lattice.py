"""Two-dimensional lattice arithmetic for the fan of P(1,m,n).

Points, rational cones and their duals, and the semigroup generators that
give the coordinate rings of the singular charts.  Everything is plain
Python integers, so nothing overflows.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True, order=True)
class LatticePoint:
    x: int
    y: int

    def __add__(self, other: LatticePoint) -> LatticePoint:
        return LatticePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: LatticePoint) -> LatticePoint:
        return LatticePoint(self.x - other.x, self.y - other.y)

    def __neg__(self) -> LatticePoint:
        return LatticePoint(-self.x, -self.y)

    def __rmul__(self, k: int) -> LatticePoint:
        return LatticePoint(k * self.x, k * self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: LatticePoint) -> int:
        return self.x * other.x + self.y * other.y

    def is_primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def primitive(self) -> LatticePoint:
        g = gcd(self.x, self.y)
        if g == 0:
            raise ValueError("the zero vector has no primitive representative")
        return LatticePoint(self.x // g, self.y // g)

    def __repr__(self):
        return f"({self.x},{self.y})"


def det(u: LatticePoint, v: LatticePoint) -> int:
    return u.x * v.y - u.y * v.x


@dataclass(frozen=True)
class Cone2D:
    """Strictly convex cone spanned by two primitive rays.

    Construct through :meth:`spanned_by`, which normalizes the rays to be
    primitive and ordered with ``det(ray1, ray2) > 0``.
    """

    ray1: LatticePoint
    ray2: LatticePoint

    def __post_init__(self):
        if not (self.ray1.is_primitive() and self.ray2.is_primitive()):
            raise ValueError(f"cone rays must be primitive: {self.ray1}, {self.ray2}")
        if det(self.ray1, self.ray2) <= 0:
            raise ValueError(
                f"cone rays must be independent and positively ordered: {self.ray1}, {self.ray2}"
            )

    @classmethod
    def spanned_by(cls, u, v) -> Cone2D:
        u = LatticePoint(*u).primitive()
        v = LatticePoint(*v).primitive()
        d = det(u, v)
        if d == 0:
            # collinear rays: either a half-line or a whole line, neither is allowed
            raise ValueError(f"rays {u} and {v} do not span a strictly convex 2D cone")
        return cls(u, v) if d > 0 else cls(v, u)

    @property
    def rays(self) -> tuple[LatticePoint, LatticePoint]:
        return (self.ray1, self.ray2)

    @property
    def multiplicity(self) -> int:
        """Index of the sublattice spanned by the rays; 1 means a smooth cone."""
        return det(self.ray1, self.ray2)

    def contains(self, p: LatticePoint) -> bool:
        # p = s*ray1 + t*ray2 with s, t >= 0, by Cramer's rule
        d = det(self.ray1, self.ray2)
        return det(p, self.ray2) * d >= 0 and det(self.ray1, p) * d >= 0


@dataclass(frozen=True)
class Fan:
    rays: tuple[LatticePoint, LatticePoint, LatticePoint]
    maximal_cones: tuple[Cone2D, Cone2D, Cone2D]


def wps_fan(m: int, n: int) -> Fan:
    """Fan of P(1,m,n): rays v0=(-m,-n), v1=(1,0), v2=(0,1).

    The i-th maximal cone is spanned by the two rays other than ``v_i``.
    """
    if m <= 0 or n <= 0:
        raise ValueError("weights must be positive")
    if gcd(m, n) != 1 or m >= n:
        raise ValueError(f"(m, n) = ({m}, {n}) must be coprime with m < n; normalize first")
    rays = (LatticePoint(-m, -n), LatticePoint(1, 0), LatticePoint(0, 1))
    cones = tuple(
        Cone2D.spanned_by(*[r for k, r in enumerate(rays) if k != i]) for i in range(3)
    )
    return Fan(rays, cones)


def _perp(r: LatticePoint, other: LatticePoint) -> LatticePoint:
    # primitive functional vanishing on r and positive on other
    u = LatticePoint(-r.y, r.x).primitive()
    return u if u.dot(other) > 0 else -u


def dual_cone(c: Cone2D) -> Cone2D:
    """Cone of functionals that are nonnegative on ``c``."""
    return Cone2D.spanned_by(_perp(c.ray1, c.ray2), _perp(c.ray2, c.ray1))


def ceil_adj(p: int, q: int) -> int:
    """Ceiling of p/q, except that a zero numerator gives 1."""
    if q <= 0:
        raise ValueError("denominator must be positive")
    if p < 0:
        raise ValueError("numerator must be nonnegative")
    if p == 0:
        return 1
    return -(-p // q)


def semigroup_generators(c_dual: Cone2D, m_or_n: int) -> list[LatticePoint]:
    """Generators of ``c_dual`` intersected with the dual lattice, for a chart cone of P(1,m,n).

    ``c_dual`` must have one ray equal to a signed unit vector (the edge
    ``u_0``) and the other ray ``q`` with ``|q|`` equal to ``m_or_n`` along the
    remaining axis.  For the dual of sigma_1 this is ``(-1,0)`` and ``(-n,m)``,
    and the generators are ``u_j = (-ceil_adj(n*j, m), j)`` for ``0 <= j <= m``.
    The ``u_j`` are the lattice points on the segments ``t = j/m`` of the
    parallelogram spanned by the two edges.
    """
    k = m_or_n
    if k <= 0:
        raise ValueError("m_or_n must be positive")
    for edge, q in (c_dual.rays, c_dual.rays[::-1]):
        if abs(edge.x) + abs(edge.y) != 1:
            continue
        axis = 0 if edge.x else 1
        sign = edge.x or edge.y
        other = 1 - axis
        q_other, q_axis = tuple(q)[other], tuple(q)[axis]
        if abs(q_other) != k:
            continue
        if q_axis * sign <= 0:
            continue
        step = 1 if q_other > 0 else -1
        out = []
        for j in range(k + 1):
            coords = [0, 0]
            coords[other] = j * step
            coords[axis] = sign * ceil_adj(j * abs(q_axis), k)
            out.append(LatticePoint(*coords))
        return out
    raise ValueError(f"cone {c_dual} is not the dual of a chart cone with parameter {k}")
