"""Exact two-variable Laurent polynomials with integer coefficients."""
from __future__ import annotations

import re
from typing import Iterator, Mapping

Exponent = tuple[int, int]


class LaurentPoly2:
    """Finite sum of ``c * x^i * y^j`` with integer ``c`` and integer (possibly negative) ``i, j``.

    Instances are immutable and hashable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            if c:
                clean[(int(i), int(j))] = c
        self._terms = dict(sorted(clean.items(), reverse=True))
        self._hash = None

    @classmethod
    def const(cls, c: int) -> LaurentPoly2:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> LaurentPoly2:
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> LaurentPoly2:
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> LaurentPoly2:
        return cls.monomial(0, 1)

    # -- container protocol ------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, e: Exponent) -> int:
        return self._terms.get(e, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly2:
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            ((i, j), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("inverse of a monomial with coefficient other than +-1 is not integral")
            return LaurentPoly2({(i * k, j * k): c ** (-k)})
        result = LaurentPoly2.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus and substitution ----------------------------------------

    def diff_x(self) -> LaurentPoly2:
        return LaurentPoly2({(i - 1, j): i * c for (i, j), c in self._terms.items()})

    def diff_y(self) -> LaurentPoly2:
        return LaurentPoly2({(i, j - 1): j * c for (i, j), c in self._terms.items()})

    def monomial_map(self, x_image: Exponent, y_image: Exponent) -> LaurentPoly2:
        """Substitute ``x -> x'^p y'^q`` and ``y -> x'^r y'^s``.

        ``x_image = (p, q)``, ``y_image = (r, s)``.  Any integer matrix is
        allowed; when it is not invertible, distinct monomials may merge.
        """
        (p, q), (r, s) = x_image, y_image
        out: dict[Exponent, int] = {}
        for (i, j), c in self._terms.items():
            e = (p * i + r * j, q * i + s * j)
            out[e] = out.get(e, 0) + c
        return LaurentPoly2(out)

    def substitute(self, x_image: LaurentPoly2, y_image: LaurentPoly2) -> LaurentPoly2:
        """General substitution of Laurent polynomials for x and y."""
        out = LaurentPoly2()
        for (i, j), c in self._terms.items():
            out = out + c * (x_image ** i) * (y_image ** j)
        return out

    def evaluate(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self._terms.items())

    # -- shape -------------------------------------------------------------

    def exponents(self) -> list[Exponent]:
        return list(self._terms)

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0, 0)
        return (min(i for i, _ in self._terms), min(j for _, j in self._terms))

    def is_polynomial(self) -> bool:
        return all(i >= 0 and j >= 0 for i, j in self._terms)

    def clear_denominators(self) -> tuple[LaurentPoly2, Exponent]:
        """Return ``(P, (i0, j0))`` with ``self = x^i0 y^j0 * P`` and P an ordinary polynomial
        not divisible by x or y."""
        i0, j0 = self.min_exponents()
        return self * LaurentPoly2.monomial(-i0, -j0), (i0, j0)

    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=0)

    def restrict_x0(self) -> dict[int, int]:
        """Coefficients in y of ``self(0, y)`` (polynomials only)."""
        return {j: c for (i, j), c in self._terms.items() if i == 0}

    def restrict_y0(self) -> dict[int, int]:
        return {i: c for (i, j), c in self._terms.items() if j == 0}

    # -- text forms --------------------------------------------------------

    def serialize(self) -> str:
        """Canonical term list ``"c x^i y^j + ..."``, exponents in decreasing lexicographic order."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c} x^{i} y^{j}" for (i, j), c in self._terms.items())

    _TERM = re.compile(r"^\s*(-?\d+) x\^(-?\d+) y\^(-?\d+)\s*$")

    @classmethod
    def parse(cls, text: str) -> LaurentPoly2:
        """Inverse of :meth:`serialize`."""
        if text.strip() == "0":
            return cls()
        terms: dict[Exponent, int] = {}
        for chunk in text.split(" + "):
            mo = cls._TERM.match(chunk)
            if mo is None:
                raise ValueError(f"malformed term {chunk!r}")
            c, i, j = map(int, mo.groups())
            e = (i, j)
            if e in terms:
                raise ValueError(f"repeated exponent {e}")
            terms[e] = c
        return cls(terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self._terms.items():
            mono = "*".join(
                v + (f"^{e}" if e != 1 else "") for v, e in (("x", i), ("y", j)) if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentPoly2({self})"
