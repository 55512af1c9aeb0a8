"""Affine charts of P(1,m,n): coordinate generators and the binomial relations between them."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .lattice import dual_cone, semigroup_generators, wps_fan, ceil_adj
from .laurent import LaurentPoly2


@dataclass(frozen=True)
class Weights:
    """Normalized weights: the surface is P(1,m,n) and the curve has degree a*m*n."""

    a: int
    m: int
    n: int

    def __post_init__(self):
        if min(self.a, self.m, self.n) <= 0:
            raise ValueError(f"weights must be positive, got {self}")
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"m and n must be coprime, got m={self.m}, n={self.n}")
        if self.m >= self.n:
            raise ValueError(f"need m < n, got m={self.m}, n={self.n}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.m, self.n)


def normalize_weights(a0: int, a1: int, a2: int) -> Weights:
    """Reduce weights (1, a1, a2) to ``Weights(a, m, n)``.

    ``a = gcd(a1, a2)`` is split off (P(1,am,an) is isomorphic to P(1,m,n)) and
    the remaining pair is ordered by swapping x1 and x2.
    """
    if a0 != 1:
        raise ValueError("only planes with one trivial weight, P(1,m,n), are supported")
    if a1 <= 0 or a2 <= 0:
        raise ValueError("weights must be positive")
    a = gcd(a1, a2)
    m, n = sorted((a1 // a, a2 // a))
    if m == n:
        raise ValueError(f"weights (1,{a1},{a2}) reduce to m = n = 1; no singular chart to study")
    return Weights(a, m, n)


@dataclass(frozen=True)
class MonomialQuotient:
    """x0^e0 * x1^e1 * x2^e2, negative exponents sitting in the denominator."""

    e0: int
    e1: int
    e2: int

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.e0, self.e1, self.e2)

    def weighted_degree(self, w: Weights) -> int:
        return self.e0 + self.e1 * w.m + self.e2 * w.n

    def __mul__(self, other: MonomialQuotient) -> MonomialQuotient:
        return MonomialQuotient(self.e0 + other.e0, self.e1 + other.e1, self.e2 + other.e2)

    def __pow__(self, k: int) -> MonomialQuotient:
        return MonomialQuotient(k * self.e0, k * self.e1, k * self.e2)

    def inverse(self) -> MonomialQuotient:
        return self ** -1

    def __str__(self):
        def part(es):
            s = [f"x{i}" + (f"^{e}" if e != 1 else "") for i, e in es]
            return "*".join(s) if s else "1"

        num = [(i, e) for i, e in enumerate(self.exponents) if e > 0]
        den = [(i, -e) for i, e in enumerate(self.exponents) if e < 0]
        return part(num) if not den else f"{part(num)}/{part(den)}"


def u1_generators(w: Weights) -> list[MonomialQuotient]:
    """z_0..z_m generating the ring of U1 = {x1 != 0}."""
    out = []
    for j in range(w.m + 1):
        c = ceil_adj(j * w.n, w.m)
        out.append(MonomialQuotient(w.m * c - j * w.n, -c, j))
    return out


def u2_generators(w: Weights) -> list[MonomialQuotient]:
    """w_0..w_n generating the ring of U2 = {x2 != 0}."""
    out = []
    for j in range(w.n + 1):
        c = ceil_adj(j * w.m, w.n)
        out.append(MonomialQuotient(w.n * c - j * w.m, j, -c))
    return out


def duplicate_generators(gens: list[MonomialQuotient]) -> list[tuple[int, int]]:
    """Index pairs (i, j), i < j, of generators with identical exponents."""
    return [
        (i, j)
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
        if gens[i] == gens[j]
    ]


# Toric coordinates X, Y of the smooth chart, read as classical monomials.
def toric_x(w: Weights) -> MonomialQuotient:
    return MonomialQuotient(-w.m, 1, 0)


def toric_y(w: Weights) -> MonomialQuotient:
    return MonomialQuotient(-w.n, 0, 1)


def toric_to_classical(w: Weights, u) -> MonomialQuotient:
    """The character X^u1 Y^u2 written in x0, x1, x2."""
    return toric_x(w) ** u.x * toric_y(w) ** u.y


@dataclass(frozen=True)
class CorrespondenceEntry:
    chart: str
    j: int
    toric: tuple[int, int]
    image: MonomialQuotient
    classical: MonomialQuotient

    @property
    def ok(self) -> bool:
        return self.image == self.classical


@dataclass(frozen=True)
class CorrespondenceReport:
    entries: tuple[CorrespondenceEntry, ...]

    @property
    def all_ok(self) -> bool:
        return all(e.ok for e in self.entries)


def toric_classical_correspondence(w: Weights) -> CorrespondenceReport:
    """Compare each toric generator chi^{u_j} with the classical z_j (resp. w_j).

    Uses X ~ x1/x0^m and Y ~ x2/x0^n.  Mismatches are reported, not raised.
    """
    fan = wps_fan(w.m, w.n)
    entries = []
    for chart, cone, k, classical in (
        ("U1", fan.maximal_cones[1], w.m, u1_generators(w)),
        ("U2", fan.maximal_cones[2], w.n, u2_generators(w)),
    ):
        toric = semigroup_generators(dual_cone(cone), k)
        for j, (u, z) in enumerate(zip(toric, classical, strict=True)):
            entries.append(
                CorrespondenceEntry(chart, j, (u.x, u.y), toric_to_classical(w, u), z)
            )
    return CorrespondenceReport(tuple(entries))


@dataclass(frozen=True)
class BinomialRelation:
    """``var[lhs_var]^lhs_exp = prod var[i]^rhs[i]`` among one chart's generators.

    Exponents are all nonnegative (denominators already cleared).
    """

    chart: str
    kind: tuple[int, int]
    j: int
    lhs_var: int
    lhs_exp: int
    rhs: dict[int, int] = field(hash=False)

    def sides(self, gens: list[MonomialQuotient]) -> tuple[MonomialQuotient, MonomialQuotient]:
        lhs = gens[self.lhs_var] ** self.lhs_exp
        rhs = MonomialQuotient(0, 0, 0)
        for i, e in self.rhs.items():
            rhs = rhs * gens[i] ** e
        return lhs, rhs

    def holds(self, gens: list[MonomialQuotient]) -> bool:
        lhs, rhs = self.sides(gens)
        return lhs == rhs

    def __str__(self):
        v = "z" if self.chart == "U1" else "w"
        rhs = " ".join(f"{v}{i}" + (f"^{e}" if e != 1 else "") for i, e in sorted(self.rhs.items()))
        lhs = f"{v}{self.lhs_var}" + (f"^{self.lhs_exp}" if self.lhs_exp != 1 else "")
        return f"{lhs} = {rhs or '1'}"


def _relation(chart, kind, j, lhs_var, lhs_exp, rhs):
    rhs = {i: e for i, e in rhs.items() if e}
    if lhs_exp <= 0 or any(e < 0 for e in rhs.values()):
        raise AssertionError(f"relation {chart} {kind} j={j} has a negative exponent")
    return BinomialRelation(chart, kind, j, lhs_var, lhs_exp, rhs)


def ideal_relations(w: Weights, chart: str, kind: str) -> list[BinomialRelation]:
    """Binomials of types (0,m)/(0,n) ("edge") and (0,1) in the ideal of U1 or U2.

    These families do not generate the whole ideal.
    """
    m, n = w.m, w.n
    if chart == "U1":
        big, small = m, n
    elif chart == "U2":
        big, small = n, m
    else:
        raise ValueError(f"unknown chart {chart!r}; expected 'U1' or 'U2'")

    # On U1: z_j^m = z_0^(m*ceil(nj/m) - nj) z_m^j, and
    #        z_1^j = z_0^(j*ceil(n/m) - ceil(nj/m)) z_j.
    # On U2 the same with (m, n) exchanged.
    out = []
    if kind == "edge":
        for j in range(1, big):
            e0 = big * ceil_adj(small * j, big) - small * j
            out.append(_relation(chart, (0, big), j, j, big, {0: e0, big: j}))
    elif kind == "01":
        c1 = ceil_adj(small, big)
        for j in range(2, big + 1):
            e0 = j * c1 - ceil_adj(small * j, big)
            out.append(_relation(chart, (0, 1), j, 1, j, {0: e0, j: 1}))
    else:
        raise ValueError(f"unknown relation kind {kind!r}; expected 'edge' or '01'")
    return out


def all_relations(w: Weights) -> dict[str, list[BinomialRelation]]:
    return {
        f"{chart}_{label}": ideal_relations(w, chart, kind)
        for chart in ("U1", "U2")
        for kind, label in (("edge", "0e"), ("01", "01"))
    }


def local_fermat_form(w: Weights, chart: str) -> LaurentPoly2:
    """The curve x0^amn + x1^an - x2^am on one chart of the standard cover.

    U0 is written in (X, Y) = (x1/x0^m, x2/x0^n), U1 in (z_0, z_m), U2 in
    (w_0, w_n); the first variable of the pair is ``x`` of the result.
    """
    a, m, n = w.as_tuple()
    if chart == "U0":
        terms = {(0, 0): 1, (a * n, 0): 1, (0, a * m): -1}
    elif chart == "U1":
        terms = {(a * n, 0): 1, (0, 0): 1, (0, a): -1}
    elif chart == "U2":
        terms = {(a * m, 0): 1, (0, a): 1, (0, 0): -1}
    else:
        raise ValueError(f"unknown chart {chart!r}")
    return LaurentPoly2(terms)
