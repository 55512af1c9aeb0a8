"""Hirzebruch-Jung resolution of the singular chart cone of P(1,m,n)."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cover import Weights
from .laurent import LaurentPoly2
from .lattice import LatticePoint, det


@dataclass(frozen=True)
class HJResolution:
    """Resolution data for the cone spanned by (0,1) and (-m,-n).

    ``r_seq`` holds r_{-1}, r_0, ..., r_s and ``t_seq`` holds t_0, ..., t_{s+1};
    use :meth:`r` and :meth:`t` to index them the way the recursions do.
    ``rays`` holds l_0, ..., l_{s+1}; the smooth cones are tau_j = <l_{j-1}, l_j>.
    """

    m: int
    n: int
    k: int
    r0: int
    b: tuple[int, ...]
    r_seq: tuple[int, ...]
    t_seq: tuple[int, ...]
    rays: tuple[LatticePoint, ...]

    @property
    def s(self) -> int:
        return len(self.b)

    def r(self, j: int) -> int:
        return self.r_seq[j + 1]

    def t(self, j: int) -> int:
        return self.t_seq[j]

    def b_at(self, j: int) -> int:
        """b_j for 1 <= j <= s."""
        if not 1 <= j <= self.s:
            raise IndexError(f"b_{j} undefined for s = {self.s}")
        return self.b[j - 1]

    @property
    def self_intersections(self) -> tuple[int, ...]:
        return tuple(-bj for bj in self.b)

    @property
    def is_trivial(self) -> bool:
        return self.s == 0

    def cones(self) -> list[tuple[LatticePoint, LatticePoint]]:
        return [(self.rays[j - 1], self.rays[j]) for j in range(1, self.s + 2)]

    def check(self) -> list[str]:
        """Every violated invariant, as a message; empty when the data is consistent."""
        bad = []
        s = self.s
        if any(bj < 2 for bj in self.b):
            bad.append(f"some b_j < 2: {self.b}")
        if len(self.r_seq) != s + 2 or len(self.t_seq) != s + 2 or len(self.rays) != s + 2:
            bad.append("sequence lengths inconsistent with s")
            return bad
        if self.r(-1) != self.m or self.r(0) != self.r0 or self.n != self.m * self.k + self.r0:
            bad.append("initial values r_{-1}=m, r_0=r, n=mk+r violated")
        if self.r(s) != 0:
            bad.append(f"r_s = {self.r(s)} != 0")
        if s >= 1 and self.r(s - 1) <= 0:
            bad.append("r_{s-1} must be positive")
        if any(self.r(j) <= self.r(j + 1) for j in range(0, s)):
            bad.append(f"r sequence not strictly decreasing: {self.r_seq}")
        if any(self.t(j) >= self.t(j + 1) for j in range(0, s + 1)):
            bad.append(f"t sequence not strictly increasing: {self.t_seq}")
        if self.t(0) != 0 or self.t(1) != 1:
            bad.append("t_0 = 0, t_1 = 1 violated")
        for j in range(1, s + 1):
            bj = self.b_at(j)
            if self.r(j) != bj * self.r(j - 1) - self.r(j - 2):
                bad.append(f"r recursion fails at j={j}")
            if self.t(j + 1) != bj * self.t(j) - self.t(j - 1):
                bad.append(f"t recursion fails at j={j}")
            if self.rays[j - 1] + self.rays[j + 1] != bj * self.rays[j]:
                bad.append(f"ray relation l_(j-1) + l_(j+1) = b_j l_j fails at j={j}")
        dets = [det(u, v) for u, v in self.cones()]
        if any(abs(d) != 1 for d in dets) or len(set(dets)) != 1:
            bad.append(f"consecutive ray determinants not a constant +-1: {dets}")
        if self.rays[0] != LatticePoint(0, 1) or self.rays[1] != LatticePoint(-1, -self.k):
            bad.append("first rays must be (0,1), (-1,-k)")
        if self.rays[-1] != LatticePoint(-self.m, -self.n):
            bad.append(f"terminal ray {self.rays[-1]} != ({-self.m},{-self.n})")
        return bad


def resolve_cone(m: int, n: int) -> HJResolution:
    """Resolve the cone <(0,1), (-m,-n)> for coprime positive m, n (any order)."""
    if m <= 0 or n <= 0 or gcd(m, n) != 1:
        raise ValueError(f"need coprime positive (m, n), got ({m}, {n})")
    k, r0 = divmod(n, m)
    r_seq = [m, r0]
    b: list[int] = []
    while r_seq[-1] != 0:
        prev2, prev = r_seq[-2], r_seq[-1]
        bj = -(-prev2 // prev)
        b.append(bj)
        r_seq.append(bj * prev - prev2)
    t_seq = [0, 1]
    rays = [LatticePoint(0, 1), LatticePoint(-1, -k)]
    for bj in b:
        t_seq.append(bj * t_seq[-1] - t_seq[-2])
        rays.append(bj * rays[-1] - rays[-2])
    res = HJResolution(m, n, k, r0, tuple(b), tuple(r_seq), tuple(t_seq), tuple(rays))
    if res.rays[-1] != LatticePoint(-m, -n):
        raise AssertionError(f"resolution of ({m},{n}) does not close at (-m,-n): {res.rays}")
    return res


def hj_resolve(w: Weights, chart: str = "U1") -> HJResolution:
    """Resolution of the singular cone sigma_1 (chart U1), or of sigma_2 via the x1 <-> x2 swap.

    For chart ``"U2"`` the result describes <(0,1), (-n,-m)> in swapped lattice
    coordinates; swap each ray's entries to read it in the fan of P(1,m,n).
    """
    if chart == "U1":
        return resolve_cone(w.m, w.n)
    if chart == "U2":
        return resolve_cone(w.n, w.m)
    raise ValueError(f"unknown chart {chart!r}")


@dataclass(frozen=True)
class ChartChange:
    """Coordinate change from tau_j to tau_{j+1}: x -> x'^b y', y -> 1/x'."""

    b: int

    def apply(self, p: LaurentPoly2) -> LaurentPoly2:
        return p.monomial_map((self.b, 1), (-1, 0))

    def inverse(self, p: LaurentPoly2) -> LaurentPoly2:
        return p.monomial_map((0, -1), (1, self.b))

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Images of x and y as exponent rows."""
        return ((self.b, 1), (-1, 0))


def chart_change_apply(p: LaurentPoly2, c: ChartChange) -> LaurentPoly2:
    return c.apply(p)


def fan_diagram(res: HJResolution) -> str:
    """Rays of the resolved cone in order, with the self-intersections of the exceptional curves."""
    lines = []
    for j, ray in enumerate(res.rays):
        note = ""
        if 1 <= j <= res.s:
            note = f"  D(l_{j})^2 = {-res.b_at(j)}"
        elif j == 0 or j == res.s + 1:
            note = "  (edge)"
        lines.append(f"l_{j} = {ray}{note}")
    return "\n".join(lines)
