"""Exact coefficients: arbitrary-precision rationals and polynomials in t over Q.

Rational is an alias for fractions.Fraction, which already keeps lowest terms
and a positive denominator.  QtPoly is a sparse polynomial in the single
variable t, stored as a degree -> Rational map with no zero entries.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction


def binom(n: int, k: int):
    """Binomial coefficient C(n, k), equal to 0 outside 0 <= k <= n.

    The vanishing convention matters: many of the closed-form sums in this
    package silently rely on out-of-range binomials dropping terms.
    """
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


class QtPoly:
    """A polynomial in t with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        table = {}
        if coeffs:
            for deg, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    if deg < 0:
                        raise ValueError("negative t-degree")
                    table[deg] = c
        self.coeffs = table

    @classmethod
    def const(cls, c) -> "QtPoly":
        return cls({0: Fraction(c)})

    @classmethod
    def zero(cls) -> "QtPoly":
        return cls()

    @classmethod
    def one(cls) -> "QtPoly":
        return cls({0: Fraction(1)})

    @classmethod
    def t(cls, power: int = 1) -> "QtPoly":
        return cls({power: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree in t; the zero polynomial reports -1."""
        return max(self.coeffs) if self.coeffs else -1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QtPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == QtPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for deg, c in other.coeffs.items():
            s = out.get(deg, 0) + c
            if s:
                out[deg] = s
            else:
                out.pop(deg, None)
        res = QtPoly.__new__(QtPoly)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = QtPoly.__new__(QtPoly)
        res.coeffs = {deg: -c for deg, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                s = out.get(d, 0) + c1 * c2
                if s:
                    out[d] = s
                else:
                    del out[d]
        res = QtPoly.__new__(QtPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def eval_at(self, t0) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        t0 = Fraction(t0)
        if not self.coeffs:
            return Fraction(0)
        top = max(self.coeffs)
        acc = Fraction(0)
        for deg in range(top, -1, -1):
            acc = acc * t0 + self.coeffs.get(deg, 0)
        return acc

    def is_const(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {0}

    def as_monomial(self):
        """Return (degree, coeff) if this is a single term, else None."""
        if len(self.coeffs) == 1:
            deg, c = next(iter(self.coeffs.items()))
            return deg, c
        return None

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for deg in sorted(self.coeffs):
            c = self.coeffs[deg]
            mag = _term_str(abs(c), deg)
            if not pieces:
                pieces.append(mag if c > 0 else "-" + mag)
            else:
                pieces.append(("+ " if c > 0 else "- ") + mag)
        return " ".join(pieces)

    def __repr__(self):
        return "QtPoly(%s)" % str(self)


def _coerce(value):
    if isinstance(value, QtPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return QtPoly.const(value)
    return None


def _term_str(c: Fraction, deg: int) -> str:
    if deg == 0:
        return str(c)
    tpart = "t" if deg == 1 else "t^%d" % deg
    if c == 1:
        return tpart
    return "%s*%s" % (c, tpart)


_TERM_RE = re.compile(
    r"""^\s*
        (?:(?P<num>\d+(?:/\d+)?)\s*\*?\s*)?     # optional rational factor
        (?:(?P<t>t)(?:\^(?P<pow>\d+))?)?        # optional t power
        \s*$""",
    re.VERBOSE,
)


def parse_qtpoly(text: str) -> QtPoly:
    """Parse strings like "2 - 3*t + t^2", "-t", "1/2", "0"."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        raise ValueError("empty polynomial")
    # normalize to explicit leading sign, then split into signed terms
    if s[0] not in "+-":
        s = "+" + s
    chunks = re.findall(r"[+-][^+-]+", s.replace(" ", ""))
    if "".join(chunks) != s.replace(" ", ""):
        raise ValueError("cannot parse polynomial %r" % text)
    out = QtPoly.zero()
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        m = _TERM_RE.match(chunk[1:])
        if not m or (m.group("num") is None and m.group("t") is None):
            raise ValueError("cannot parse polynomial term %r" % chunk)
        c = Fraction(m.group("num")) if m.group("num") else Fraction(1)
        deg = 0
        if m.group("t"):
            deg = int(m.group("pow")) if m.group("pow") else 1
        out = out + QtPoly({deg: sign * c})
    return out
