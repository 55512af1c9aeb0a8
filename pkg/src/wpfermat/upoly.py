"""Dense univariate polynomials as coefficient lists, lowest degree first.

The zero polynomial is ``[]``.  Coefficients are ``int`` or ``Fraction``; the
``*_q`` functions work over the rationals, the rest are ring operations.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Poly = list


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p: Sequence) -> int:
    """Degree, with deg(0) = -1."""
    return len(p) - 1


def lc(p: Sequence):
    return p[-1] if p else 0


def from_dict(d: dict[int, int]) -> Poly:
    if not d:
        return []
    if min(d) < 0:
        raise ValueError("negative exponent in a univariate polynomial")
    out = [0] * (max(d) + 1)
    for e, c in d.items():
        out[e] += c
    return trim(out)


def add(p: Sequence, q: Sequence) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p: Sequence) -> Poly:
    return [-c for c in p]


def sub(p: Sequence, q: Sequence) -> Poly:
    return add(p, neg(q))


def scale(p: Sequence, c) -> Poly:
    return trim([c * a for a in p]) if c else []


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return []
    # skip zero coefficients: the inputs here are often sparse
    nz = [(j, b) for j, b in enumerate(q) if b]
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in nz:
                out[i + j] += a * b
    return trim(out)


def derivative(p: Sequence) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_q(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    """Quotient and remainder over Q."""
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in trim(p)]
    dq = deg(q)
    inv = Fraction(1) / Fraction(q[-1])
    quo = [Fraction(0)] * max(len(r) - dq, 0)
    while len(r) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        f = r[-1] * inv
        quo[shift] = f
        for i, c in enumerate(q):
            if c:
                r[shift + i] -= f * c
        r.pop()
        r = trim(r)
    return trim(quo), r


def rem_q(p: Sequence, q: Sequence) -> Poly:
    return divmod_q(p, q)[1]


def exact_div(p: Sequence, q: Sequence) -> Poly:
    """Quotient p/q when q divides p exactly; works over Z without fractions."""
    q = trim(q)
    r = trim(p)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    dq = deg(q)
    quo = [0] * max(len(r) - dq, 0)
    lead = q[-1]
    while r and len(r) - 1 >= dq:
        shift = len(r) - 1 - dq
        if isinstance(r[-1], int) and isinstance(lead, int):
            f, rest = divmod(r[-1], lead)
            if rest:
                raise ArithmeticError("inexact polynomial division")
        else:
            f = Fraction(r[-1]) / lead
        quo[shift] = f
        for i, c in enumerate(q):
            if c:
                r[shift + i] -= f * c
        r = trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return trim(quo)


def monic_q(p: Sequence) -> Poly:
    if not p:
        return []
    inv = Fraction(1) / Fraction(p[-1])
    return [Fraction(c) * inv for c in p]


def gcd_q(p: Sequence, q: Sequence) -> Poly:
    """Monic gcd over Q (``[]`` when both are zero)."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, rem_q(a, b)
    return monic_q(a)


def content(p: Sequence) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive_z(p: Sequence) -> Poly:
    """Integer polynomial proportional to p with coprime coefficients and positive leading coefficient."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = content(ints)
    ints = [c // g for c in ints]
    return ints if ints[-1] > 0 else neg(ints)


def squarefree_part(p: Sequence) -> Poly:
    """p / gcd(p, p') as a primitive integer polynomial."""
    p = trim(p)
    if deg(p) <= 0:
        return primitive_z(p)
    g = gcd_q(p, derivative(p))
    return primitive_z(divmod_q(p, g)[0])


def squarefree_decomposition(p: Sequence) -> list[tuple[Poly, int]]:
    """Yun's algorithm: pairs (f_i, i), f_i squarefree and pairwise coprime, p ~ prod f_i^i.

    Factors are primitive integer polynomials; constant factors are dropped.
    """
    p = trim(p)
    if deg(p) <= 0:
        return []
    out = []
    dp = derivative(p)
    a = gcd_q(p, dp)
    b = divmod_q(p, a)[0]
    c = divmod_q(dp, a)[0]
    d = sub(c, derivative(b))
    i = 1
    while deg(b) > 0:
        a = gcd_q(b, d)
        b = divmod_q(b, a)[0]
        c = divmod_q(d, a)[0]
        if deg(a) > 0:
            out.append((primitive_z(a), i))
        d = sub(c, derivative(b))
        i += 1
    return out


def strip_x_factor(p: Sequence) -> tuple[Poly, int]:
    """Split p = x^k * q with q(0) != 0; returns (q, k)."""
    p = trim(p)
    k = 0
    while p and p[0] == 0:
        p = p[1:]
        k += 1
    return p, k


def to_str(p: Sequence, var: str = "T") -> str:
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
