"""The word algebra over Q[t]: linear combinations of words with concatenation.

HElement stores a word -> QtPoly map with no zero coefficients.  Words print
in canonical order (length first, then y before x), which for fixed weight
matches ascending index order on the zeta side.
"""

from __future__ import annotations

import json

from .coeffs import QtPoly, parse_qtpoly
from .words import EMPTY_WORD, Word, parse_word


class HElement:
    """A finite Q[t]-linear combination of words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        table = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, QtPoly):
                    c = QtPoly.const(c)
                if not c.is_zero():
                    table[Word(w)] = c
        self.terms = table

    @classmethod
    def zero(cls) -> "HElement":
        return cls()

    @classmethod
    def unit(cls) -> "HElement":
        return cls({EMPTY_WORD: QtPoly.one()})

    @classmethod
    def from_word(cls, w, coeff=1) -> "HElement":
        return cls({Word(w): coeff if isinstance(coeff, QtPoly) else QtPoly.const(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, HElement):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, HElement):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        res = HElement.__new__(HElement)
        res.terms = out
        return res

    def __neg__(self):
        res = HElement.__new__(HElement)
        res.terms = {w: -c for w, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if not isinstance(other, HElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HElement":
        if not isinstance(c, QtPoly):
            c = QtPoly.const(c)
        if c.is_zero():
            return HElement.zero()
        res = HElement.__new__(HElement)
        res.terms = {}
        for w, old in self.terms.items():
            new = old * c
            if not new.is_zero():
                res.terms[w] = new
        return res

    def __rmul__(self, c):
        if isinstance(c, HElement):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        """Concatenation product, extended bilinearly."""
        if not isinstance(other, HElement):
            return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        res = HElement.__new__(HElement)
        res.terms = out
        return res

    def coeff(self, w) -> QtPoly:
        return self.terms.get(Word(w), QtPoly.zero())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def substitute_t(self, t0) -> "HElement":
        """Evaluate every coefficient at a rational t value."""
        out = {}
        for w, c in self.terms.items():
            v = c.eval_at(t0)
            if v:
                out[w] = QtPoly.const(v)
        res = HElement.__new__(HElement)
        res.terms = out
        return res

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_term_str(w, c) for w, c in self.sorted_terms())

    def __repr__(self):
        return "HElement(%s)" % str(self)

    def to_json_obj(self):
        return [
            {"word": str(w), "coeff": str(c)} for w, c in self.sorted_terms()
        ]


def _term_str(w: Word, c: QtPoly) -> str:
    mono = c.as_monomial()
    plain = (
        mono is not None
        and mono[0] == 0
        and mono[1] > 0
        and mono[1].denominator == 1
    )
    if plain:
        n = mono[1]
        if n == 1:
            return str(w)
        return "%d*%s" % (n, w)
    return "(%s)*%s" % (c, w)


def parse_helement(text: str) -> HElement:
    """Parse the textual form, e.g. "2*xyxy + 4*xxyy + (-6*t)*xxxy"."""
    s = text.strip()
    if s == "0":
        return HElement.zero()
    out = HElement.zero()
    for piece in _split_terms(s):
        piece = piece.strip()
        if not piece:
            raise ValueError("cannot parse element %r" % text)
        if "*" in piece:
            cpart, _, wpart = piece.rpartition("*")
            coeff = parse_qtpoly(cpart)
        else:
            coeff, wpart = QtPoly.one(), piece
        out = out + HElement.from_word(parse_word(wpart), coeff)
    return out


def helement_from_json(obj) -> HElement:
    out = HElement.zero()
    for rec in obj:
        out = out + HElement.from_word(parse_word(rec["word"]), parse_qtpoly(rec["coeff"]))
    return out


def _split_terms(s: str):
    depth = 0
    start = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0:
            yield s[start:i]
            start = i + 1
    yield s[start:]


def all_admissible(v: HElement) -> bool:
    """True when every word of v is empty or starts with x and ends in y."""
    from .words import is_admissible

    return all(is_admissible(w) for w in v.terms)


def all_end_in_y(v: HElement) -> bool:
    """True when every word of v is empty or ends in y."""
    return all(not w.letters or w.letters[-1] == "y" for w in v.terms)


def helement_to_json(v: HElement) -> str:
    return json.dumps(v.to_json_obj())
