"""The Fermat-type curve on the resolved chart U1 and its smoothness certificate."""
from __future__ import annotations

from dataclasses import dataclass

from . import upoly as U
from .cover import Weights, local_fermat_form
from .elimination import FULL_PLANE, SINGULAR, SMOOTH, LocusVerdict, singular_locus_empty
from .hj import ChartChange, HJResolution, hj_resolve
from .laurent import LaurentPoly2


def chart_polynomial(w: Weights, res: HJResolution, j: int) -> LaurentPoly2:
    """F_j = x^(an t_j) y^(an t_(j-1)) - x^(a r_(j-1)) y^(a r_(j-2)) + 1 on U_(tau_j), 1 <= j <= s+1."""
    if not 1 <= j <= res.s + 1:
        raise IndexError(f"chart index {j} outside 1..{res.s + 1}")
    a, n = w.a, w.n
    first = (a * n * res.t(j), a * n * res.t(j - 1))
    second = (a * res.r(j - 1), a * res.r(j - 2))
    return LaurentPoly2({first: 1, second: -1}) + 1


def chart_polynomials(w: Weights, res: HJResolution | None = None) -> list[LaurentPoly2]:
    res = res or hj_resolve(w)
    return [chart_polynomial(w, res, j) for j in range(1, res.s + 2)]


def tau1_from_u1(w: Weights, res: HJResolution | None = None) -> LaurentPoly2:
    """Rewrite z_0^an + 1 - z_m^a in the coordinates of tau_1.

    z_0 = X^-1 and z_m = X^-n Y^m in toric coordinates, and x_1 = X^-1,
    y_1 = X^-k Y on tau_1, so X = x_1^-1 and Y = x_1^-k y_1.
    """
    res = res or hj_resolve(w)
    f = local_fermat_form(w, "U1")
    # (z_0, z_m) -> (X, Y) exponents, then (X, Y) -> (x_1, y_1)
    toric = f.monomial_map((-1, 0), (-w.n, w.m))
    return toric.monomial_map((-1, 0), (-res.k, 1))


def verify_chart_recursion(w: Weights, res: HJResolution | None = None) -> list[bool]:
    """For j = 1..s, whether the coordinate change carries F_j exactly onto F_(j+1)."""
    res = res or hj_resolve(w)
    polys = chart_polynomials(w, res)
    return [
        ChartChange(res.b_at(j)).apply(polys[j - 1]) == polys[j]
        for j in range(1, res.s + 1)
    ]


@dataclass(frozen=True)
class ChartResult:
    chart: str
    method: str
    verdict: str
    polynomial: LaurentPoly2 | None = None
    locus: LocusVerdict | None = None
    x_axis_points: tuple[int, ...] | None = None
    evidence: str = ""


@dataclass(frozen=True)
class SmoothnessCertificate:
    weights: Weights
    chart_results: tuple[ChartResult, ...]

    @property
    def overall(self) -> str:
        if all(c.verdict == SMOOTH for c in self.chart_results):
            return SMOOTH
        return SINGULAR

    @property
    def smooth(self) -> bool:
        return self.overall == SMOOTH

    @property
    def elimination_checks(self) -> int:
        return sum(c.method == "elimination" for c in self.chart_results)

    @property
    def overlap_records(self) -> int:
        return sum(c.method == "overlap" for c in self.chart_results)

    def witness(self):
        """(chart, witness) pairs for every singular verdict."""
        out = []
        for c in self.chart_results:
            if c.verdict != SMOOTH and c.locus is not None:
                out += [(c.chart, wt) for wt in c.locus.witnesses]
        return out


def _x_axis_points(p: LaurentPoly2) -> tuple[int, ...]:
    """Squarefree polynomial in y whose roots are the points of p = 0 on x = 0."""
    f = U.from_dict(p.restrict_x0())
    if not f:
        raise ValueError("the curve contains the whole line x = 0")
    return tuple(U.squarefree_part(f)) if U.deg(f) > 0 else ()


def _axes_empty(p: LaurentPoly2) -> bool:
    fx0 = U.from_dict(p.restrict_x0())
    fy0 = U.from_dict(p.restrict_y0())
    return U.deg(fx0) == 0 and U.deg(fy0) == 0


def smoothness_certificate(w: Weights) -> SmoothnessCertificate:
    """Check the curve on U0 and on every chart of the resolved U1.

    U0 (= {x0 != 0}) and the two end charts tau_1, tau_(s+1) of the
    resolution are tested on their full affine planes by the elimination
    routine.  Points of an interior chart tau_j with x_j y_j != 0 also lie in
    tau_(j-1); such charts are recorded with the recursion identity and the
    absence of curve points on their axes as evidence.
    """
    res = hj_resolve(w)
    polys = chart_polynomials(w, res)
    recursion = verify_chart_recursion(w, res)
    results = []

    u0 = local_fermat_form(w, "U0")
    locus = singular_locus_empty(u0, FULL_PLANE)
    results.append(ChartResult("U0", "elimination", locus.status, u0, locus))

    s = res.s
    for j in range(1, s + 2):
        f = polys[j - 1]
        name = f"tau_{j}"
        if j in (1, s + 1):
            locus = singular_locus_empty(f, FULL_PLANE)
            results.append(
                ChartResult(name, "elimination", locus.status, f, locus, _x_axis_points(f))
            )
        else:
            covered = recursion[j - 2] and _axes_empty(f)
            results.append(
                ChartResult(
                    name,
                    "overlap",
                    SMOOTH if covered else SINGULAR,
                    f,
                    evidence=(
                        f"F_{j - 1} -> F_{j} recursion {'holds' if recursion[j - 2] else 'FAILS'}; "
                        f"curve {'misses' if _axes_empty(f) else 'meets'} both axes"
                    ),
                )
            )
    return SmoothnessCertificate(w, tuple(results))
