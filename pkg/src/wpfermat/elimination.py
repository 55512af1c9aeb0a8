"""Exact singular-locus test for plane curves: does F = dF/dx = dF/dy = 0 have a solution?

The domain is split into strata: the torus (x != 0, y != 0) and the
coordinate axes.  On the axes the question is a univariate gcd.  On the torus
the curve is first pulled back along a monomial map so that its exponents
are as small as possible; the map is étale and surjective on the torus in
characteristic 0, so singular points correspond exactly.  The reduced
polynomial is then eliminated with resultants, and every candidate root is
confirmed or refuted by a gcd computation over Q[x]/(h), splitting h
whenever a zero divisor shows up.  No floating point is used.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import upoly as U
from .laurent import LaurentPoly2

SMOOTH = "smooth"
SINGULAR = "singular"
NEEDS_FACTORIZATION = "needs-factorization"

FULL_PLANE = "full-plane"
X_NONZERO = "x!=0"
TORUS = "x!=0,y!=0"
DOMAINS = (FULL_PLANE, X_NONZERO, TORUS)


@dataclass(frozen=True)
class SingularWitness:
    """Algebraic description of singular points found in one stratum.

    ``polynomial`` is a primitive integer polynomial in ``variable`` whose
    roots are the ``variable``-coordinates of the singular points
    (``None`` when a whole line is singular).  ``coordinates`` explains how
    ``variable`` relates to the original x, y.  ``multiplicities`` is the
    squarefree decomposition of the elimination polynomial it came from.
    """

    stratum: str
    variable: str
    polynomial: tuple[int, ...] | None
    coordinates: str
    multiplicities: tuple[tuple[tuple[int, ...], int], ...] = ()
    fibers: tuple[str, ...] = ()

    def describe(self) -> str:
        if self.polynomial is None:
            return f"[{self.stratum}] every point with {self.coordinates} is singular"
        return (
            f"[{self.stratum}] {U.to_str(self.polynomial, self.variable)} = 0"
            f" where {self.coordinates}"
        )


@dataclass(frozen=True)
class LocusVerdict:
    status: str
    domain: str
    strata: tuple[tuple[str, str], ...]
    witnesses: tuple[SingularWitness, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def smooth(self) -> bool:
        return self.status == SMOOTH


# -- bivariate helpers -------------------------------------------------------

def _y_coeffs(p: LaurentPoly2) -> list[list[int]]:
    """p as a list over powers of y of dense polynomials in x."""
    if not p:
        return []
    out: list[dict[int, int]] = [dict() for _ in range(p.degree_y() + 1)]
    for (i, j), c in p.items():
        out[j][i] = c
    return [U.from_dict(d) for d in out]


def _swap(p: LaurentPoly2) -> LaurentPoly2:
    return p.monomial_map((0, 1), (1, 0))


def resultant_y(f: LaurentPoly2, g: LaurentPoly2) -> list[int]:
    """Res_y(f, g) as a dense integer polynomial in x.

    Computed as the determinant of the Sylvester matrix by fraction-free
    (Bareiss) elimination with polynomial entries.  Both inputs must be
    ordinary polynomials; ``Res(f, 0) = 0`` and ``Res(f, c) = c^deg f``.
    """
    if not f.is_polynomial() or not g.is_polynomial():
        raise ValueError("resultants need ordinary polynomials; clear denominators first")
    if not f or not g:
        return []
    F, G = _y_coeffs(f), _y_coeffs(g)
    df, dg = len(F) - 1, len(G) - 1
    size = df + dg
    if size == 0:
        return [1]
    rows = []
    for i in range(dg):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(F)):
            row[i + j] = list(c)
        rows.append(row)
    for i in range(df):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(G)):
            row[i + j] = list(c)
        rows.append(row)
    return _bareiss_det(rows)


def _bareiss_det(M: list[list[list]]) -> list:
    n = len(M)
    sign = 1
    prev: list = [1]
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                num = U.sub(U.mul(M[i][j], pivot), U.mul(mik, M[k][j]))
                M[i][j] = U.exact_div(num, prev) if num else []
            M[i][k] = []
        prev = pivot
    det = M[n - 1][n - 1]
    return U.neg(det) if sign < 0 else list(det)


# -- torus reduction -----------------------------------------------------------

def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_basis(vectors) -> list[tuple[int, int]]:
    """Hermite basis of the subgroup of Z^2 generated by ``vectors`` (0, 1 or 2 vectors)."""
    px = py = 0
    h = 0
    for x, y in vectors:
        g, s, t = _egcd(px, x)
        if g == 0:
            h = gcd(h, y)
            continue
        # (x/g)*pivot - (px/g)*v has first coordinate 0
        ky = (x // g) * py - (px // g) * y
        px, py = g, s * py + t * y
        h = gcd(h, ky)
    basis = []
    if px:
        basis.append((px, py % h if h else py))
    if h:
        basis.append((0, h))
    return basis


@dataclass(frozen=True)
class TorusReduction:
    """``p = x^shift * G(x^basis[0], x^basis[1])`` on the torus (vector exponents).

    With rank 1, G is univariate in its first variable; with rank 0, G is a
    nonzero constant.
    """

    reduced: LaurentPoly2
    basis: tuple[tuple[int, int], ...]
    shift: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def describe(self) -> str:
        names = ("u", "v")
        parts = [f"{names[k]} = x^{bx} y^{by}" for k, (bx, by) in enumerate(self.basis)]
        return ", ".join(parts) if parts else "constant"


def _coords(basis, d) -> tuple[int, ...] | None:
    if len(basis) == 1:
        (bx, by), = basis
        k = d[0] // bx if bx else d[1] // by
        return (k,) if (k * bx, k * by) == tuple(d) else None
    (ax, ay), (bx, by) = basis
    det = ax * by - ay * bx
    c1n = d[0] * by - d[1] * bx
    c2n = ax * d[1] - ay * d[0]
    if c1n % det or c2n % det:
        return None
    return (c1n // det, c2n // det)


def _reduce_with(p: LaurentPoly2, basis) -> tuple[LaurentPoly2, tuple[int, int]] | None:
    exps = p.exponents()
    e0 = exps[0]
    coords = {}
    for e, c in p.items():
        k = _coords(basis, (e[0] - e0[0], e[1] - e0[1]))
        if k is None:
            return None
        coords[k + (0,) * (2 - len(k))] = c
    g, (i0, j0) = LaurentPoly2(coords).clear_denominators()
    sx = e0[0] + i0 * basis[0][0] + (j0 * basis[1][0] if len(basis) > 1 else 0)
    sy = e0[1] + i0 * basis[0][1] + (j0 * basis[1][1] if len(basis) > 1 else 0)
    return g, (sx, sy)


def torus_reduce(p: LaurentPoly2, max_pairs: int = 400) -> TorusReduction:
    """Pull p back along a monomial map making its exponent lattice all of Z^rank.

    Among Hermite bases and bases made of exponent differences, the one
    giving the smallest total degree is kept.
    """
    if not p:
        raise ValueError("the zero polynomial defines no curve")
    exps = p.exponents()
    e0 = exps[0]
    diffs = [(e[0] - e0[0], e[1] - e0[1]) for e in exps[1:]]
    hnf = lattice_basis(diffs)
    if not hnf:
        return TorusReduction(LaurentPoly2.const(p[e0]), (), e0)
    if len(hnf) == 1:
        g, shift = _reduce_with(p, hnf)
        return TorusReduction(g, tuple(hnf), shift)

    index = abs(hnf[0][0] * hnf[1][1] - hnf[0][1] * hnf[1][0])
    candidates = [tuple(hnf)]
    all_diffs = sorted({(a[0] - b[0], a[1] - b[1]) for a, b in combinations(exps, 2)})
    for u, v in combinations(all_diffs, 2):
        if len(candidates) > max_pairs:
            break
        d = u[0] * v[1] - u[1] * v[0]
        if abs(d) == index:
            candidates.append((u, v) if d > 0 else (v, u))
    best = None
    for basis in candidates:
        out = _reduce_with(p, basis)
        if out is None:
            continue
        g, shift = out
        score = (g.degree_x() + g.degree_y(), g.degree_x() * g.degree_y())
        if best is None or score < best[0]:
            best = (score, g, basis, shift)
    _, g, basis, shift = best
    return TorusReduction(g, tuple(basis), shift)


# -- arithmetic in (Q[x]/h)[y] --------------------------------------------------

def _inv_mod(a, h):
    """Inverse of a modulo h over Q (a must be coprime to h)."""
    r0, r1 = list(h), U.rem_q(a, h)
    s0, s1 = [], [Fraction(1)]
    while U.deg(r1) > 0:
        q, r = U.divmod_q(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, U.sub(s0, U.mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible modulo h")
    return U.rem_q(U.scale(s1, Fraction(1) / Fraction(r1[0])), h)


def _split_lead(P, h):
    """Split h so that on each part P has an invertible leading coefficient (or is zero)."""
    out = []
    stack = [(h, P)]
    while stack:
        hh, Q = stack.pop()
        Q = [U.rem_q(c, hh) for c in Q]
        while Q and not Q[-1]:
            Q.pop()
        if not Q:
            out.append((hh, []))
            continue
        g = U.gcd_q(Q[-1], hh)
        if U.deg(g) == 0:
            out.append((hh, Q))
            continue
        # lc vanishes on the g-part and is a unit on the cofactor
        stack.append((g, Q[:-1]))
        stack.append((U.divmod_q(hh, g)[0], Q))
    return out


def _split_const(P, h):
    """Split h so that on each part P(0) is either zero or a unit; strip y-factors."""
    out = []
    stack = [(h, P)]
    while stack:
        hh, Q = stack.pop()
        Q = [U.rem_q(c, hh) for c in Q]
        while Q and not Q[-1]:
            Q.pop()
        if not Q:
            out.append((hh, Q))
            continue
        if not Q[0]:
            stack.append((hh, Q[1:]))
            continue
        g = U.gcd_q(Q[0], hh)
        if U.deg(g) == 0:
            out.append((hh, Q))
            continue
        stack.append((g, Q[1:]))
        stack.append((U.divmod_q(hh, g)[0], Q))
    return out


def _rem_mod(A, B, h):
    A = list(A)
    inv = _inv_mod(B[-1], h)
    while A and len(A) >= len(B):
        f = U.rem_q(U.mul(A[-1], inv), h)
        shift = len(A) - len(B)
        for i, c in enumerate(B):
            A[shift + i] = U.rem_q(U.sub(A[shift + i], U.mul(f, c)), h)
        A.pop()
        while A and not A[-1]:
            A.pop()
    return A


def _monic_mod(P, h):
    if not P:
        return []
    inv = _inv_mod(P[-1], h)
    return [U.rem_q(U.mul(c, inv), h) for c in P]


def gcd_branches(polys, h):
    """gcd of polynomials in y over Q[x]/(h), h squarefree.

    Returns pairs ``(h_i, g_i)`` with h = prod h_i and g_i the monic gcd over
    Q[x]/(h_i) (``[]`` when every input vanishes there).
    """
    branches = [(h, [U.rem_q(c, h) for c in polys[0]])]
    for P in polys[1:]:
        nxt = []
        for hh, A in branches:
            work = [(hh, A, [U.rem_q(c, hh) for c in P])]
            while work:
                h1, A1, B1 = work.pop()
                for h2, Bt in _split_lead(B1, h1):
                    if not Bt:
                        for h3, At in _split_lead(A1, h2):
                            nxt.append((h3, At))
                        continue
                    A2 = [U.rem_q(c, h2) for c in A1]
                    work.append((h2, Bt, _rem_mod(A2, Bt, h2)))
        branches = nxt
    return [(hh, _monic_mod(G, hh)) for hh, G in branches]


# -- strata ---------------------------------------------------------------------

def _univariate_common(polys, strip_zero_root: bool):
    """gcd of univariate integer polynomials; None means all are identically zero."""
    g: list = []
    for p in polys:
        g = U.gcd_q(g, p)
    if not g:
        return None
    g = U.primitive_z(g)
    if strip_zero_root:
        g, _ = U.strip_x_factor(g)
    return g


def _axis_check(p: LaurentPoly2, axis: str, exclude_origin: bool) -> tuple[str, list[SingularWitness]]:
    px, py = p.diff_x(), p.diff_y()
    if axis == "x=0":
        var, pick = "y", LaurentPoly2.restrict_x0
    else:
        var, pick = "x", LaurentPoly2.restrict_y0
    polys = [U.from_dict(pick(q)) for q in (p, px, py)]
    g = _univariate_common(polys, exclude_origin)
    stratum = axis if not exclude_origin else f"{axis}, {var}!=0"
    if g is None:
        return SINGULAR, [SingularWitness(stratum, var, None, stratum)]
    if U.deg(g) <= 0:
        return SMOOTH, []
    return SINGULAR, [
        SingularWitness(stratum, var, tuple(g), f"{axis}; roots are {var}-coordinates",
                        ((tuple(g), 1),))
    ]


def _torus_check(p: LaurentPoly2) -> tuple[str, list[SingularWitness], list[str]]:
    red = torus_reduce(p)
    notes = [f"torus reduction: {red.describe()}"] if red.rank else []
    g = red.reduced
    if red.rank == 0:
        return SMOOTH, [], notes
    if red.rank == 1:
        f = U.from_dict(g.restrict_y0())
        h = _univariate_common([f, U.derivative(f)], strip_zero_root=True)
        if h is None or U.deg(h) <= 0:
            return SMOOTH, [], notes
        return SINGULAR, [
            SingularWitness("torus", "u", tuple(h), red.describe() + " (v free)",
                            tuple((tuple(a), k) for a, k in U.squarefree_decomposition(f)))
        ], notes

    # eliminate the variable of smaller degree
    swapped = g.degree_y() > g.degree_x()
    G = _swap(g) if swapped else g
    names = ("v", "u") if swapped else ("u", "v")
    for attempt in range(2):
        Gx, Gy = G.diff_x(), G.diff_y()
        res = [r for r in (resultant_y(G, Gy), resultant_y(G, Gx)) if r]
        if res:
            break
        G, names = _swap(G), names[::-1]
    else:
        notes.append("both resultants vanish identically: the curve has a repeated component")
        return NEEDS_FACTORIZATION, [], notes

    elim: list = []
    for r in res:
        elim = U.gcd_q(elim, r)
    elim = U.primitive_z(elim)
    h, _ = U.strip_x_factor(U.squarefree_part(elim))
    if U.deg(h) <= 0:
        return SMOOTH, [], notes

    Gx, Gy = G.diff_x(), G.diff_y()
    polys = [[list(c) for c in _y_coeffs(q)] for q in (G, Gx, Gy)]
    hq = [Fraction(c) for c in h]
    found = []
    for hh, gg in gcd_branches(polys, hq):
        if not gg:
            found.append((hh, None))
            continue
        for h2, g2 in _split_const(gg, hh):
            if not g2 or len(g2) >= 2:
                found.append((h2, g2))
    if not found:
        return SMOOTH, [], notes
    wit_poly: list = [1]
    fibers = []
    for hh, gg in found:
        wit_poly = U.mul(wit_poly, hh)
        if gg is None:
            fibers.append(f"{U.to_str(U.primitive_z(hh), names[0])}: whole fiber")
        else:
            ystr = " + ".join(f"({U.to_str(c, names[0])})*{names[1]}^{e}" for e, c in enumerate(gg) if c)
            fibers.append(f"{U.to_str(U.primitive_z(hh), names[0])}: gcd in {names[1]} = {ystr}")
    wit_poly = U.primitive_z(wit_poly)
    mult = tuple((tuple(a), k) for a, k in U.squarefree_decomposition(elim))
    return SINGULAR, [
        SingularWitness("torus", names[0], tuple(wit_poly), red.describe(), mult, tuple(fibers))
    ], notes


def singular_locus_empty(p: LaurentPoly2, domain: str = FULL_PLANE) -> LocusVerdict:
    """Decide whether the curve p = 0 has a singular point in ``domain`` over the algebraic closure.

    ``domain`` is one of ``"full-plane"`` (p must be a polynomial),
    ``"x!=0"`` (x may appear with negative exponents) or ``"x!=0,y!=0"``.
    """
    if not p:
        raise ValueError("the zero polynomial defines no curve")
    if domain not in DOMAINS:
        raise ValueError(f"unknown domain {domain!r}; expected one of {DOMAINS}")
    i0, j0 = p.min_exponents()
    if domain == FULL_PLANE and (i0 < 0 or j0 < 0):
        raise ValueError("a Laurent polynomial is not defined on the full plane")
    if domain == X_NONZERO:
        if j0 < 0:
            raise ValueError("negative powers of y are not defined where y = 0")
        # x is a unit on this domain
        p = p * LaurentPoly2.monomial(-i0, 0)

    strata = []
    witnesses: list[SingularWitness] = []
    notes: list[str] = []
    status, wit, nt = _torus_check(p)
    strata.append(("torus", status))
    witnesses += wit
    notes += nt
    statuses = [status]
    if domain in (FULL_PLANE, X_NONZERO):
        st, wit = _axis_check(p, "y=0", exclude_origin=True)
        strata.append(("y=0, x!=0", st))
        witnesses += wit
        statuses.append(st)
    if domain == FULL_PLANE:
        st, wit = _axis_check(p, "x=0", exclude_origin=False)
        strata.append(("x=0", st))
        witnesses += wit
        statuses.append(st)

    if SINGULAR in statuses:
        overall = SINGULAR
    elif NEEDS_FACTORIZATION in statuses:
        overall = NEEDS_FACTORIZATION
    else:
        overall = SMOOTH
    return LocusVerdict(overall, domain, tuple(strata), tuple(witnesses), tuple(notes))
