"""Linear combinations of zeta values and the word-to-zeta map.

A ZetaCombo is a finite Q[t]-linear combination of zeta symbols plus a
scalar part.  Its ``kind`` records which family the symbols denote:

* ``"interpolated"`` -- the one-parameter family z^t(l1,...,ln) that is
  the plain value at t=0 and the star value at t=1,
* ``"plain"``        -- ordinary values with strict summation,
* ``"star"``         -- star values with non-strict summation.

Combos of different kinds never mix: adding a plain combo to a star
combo raises instead of producing a meaningless hybrid.  The map from
admissible words sends z_{l1}...z_{ln} to the symbol for (l1,...,ln)
and the empty word to the scalar 1.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .coeffs import QtPoly, binom, parse_qtpoly
from .halg import HElement
from .tshuffle import compositions, tshuffle_words
from .words import Index, Word, index_from_word
from . import closedforms

INTERPOLATED = "interpolated"
PLAIN = "plain"
STAR = "star"

_KINDS = (INTERPOLATED, PLAIN, STAR)
_SYMBOL = {INTERPOLATED: "z", PLAIN: "z", STAR: "zs"}


class ZetaCombo:
    """A scalar plus a Q[t]-linear combination of admissible zeta symbols."""

    __slots__ = ("kind", "scalar", "terms")

    def __init__(self, kind=PLAIN, terms=None, scalar=0):
        if kind not in _KINDS:
            raise ValueError("unknown combo kind %r" % (kind,))
        clean = {}
        for idx, c in (terms or {}).items():
            if not isinstance(idx, Index):
                idx = Index(idx)
            if not idx.admissible:
                raise ValueError("non-admissible index %s in combo" % idx)
            c = c if isinstance(c, QtPoly) else QtPoly.const(c)
            if c:
                clean[idx] = clean[idx] + c if idx in clean else c
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "terms", {i: c for i, c in clean.items() if c})
        s = scalar if isinstance(scalar, QtPoly) else QtPoly.const(scalar)
        object.__setattr__(self, "scalar", s)

    def __setattr__(self, name, value):
        raise AttributeError("ZetaCombo is immutable")

    @classmethod
    def zero(cls, kind=PLAIN) -> "ZetaCombo":
        return cls(kind)

    def is_zero(self) -> bool:
        return not self.terms and self.scalar.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, ZetaCombo):
            return (
                self.kind == other.kind
                and self.scalar == other.scalar
                and self.terms == other.terms
            )
        return NotImplemented

    def _check_kind(self, other):
        if self.kind != other.kind:
            raise ValueError(
                "cannot combine %s and %s zeta combos" % (self.kind, other.kind)
            )

    def __add__(self, other):
        if not isinstance(other, ZetaCombo):
            return NotImplemented
        self._check_kind(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            acc = terms.get(idx)
            acc = c if acc is None else acc + c
            if acc:
                terms[idx] = acc
            else:
                terms.pop(idx, None)
        out = ZetaCombo.__new__(ZetaCombo)
        object.__setattr__(out, "kind", self.kind)
        object.__setattr__(out, "terms", terms)
        object.__setattr__(out, "scalar", self.scalar + other.scalar)
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, ZetaCombo):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, c) -> "ZetaCombo":
        c = c if isinstance(c, QtPoly) else QtPoly.const(c)
        out = ZetaCombo.__new__(ZetaCombo)
        object.__setattr__(out, "kind", self.kind)
        object.__setattr__(
            out, "terms", {i: p for i, p0 in self.terms.items() if (p := p0 * c)}
        )
        object.__setattr__(out, "scalar", self.scalar * c)
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def coeff(self, idx) -> QtPoly:
        if not isinstance(idx, Index):
            idx = Index(idx)
        return self.terms.get(idx, QtPoly.zero())

    def sorted_terms(self):
        """Terms in canonical order: weight first, then parts lexicographically."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0].weight, kv[0].parts))

    def substitute_t(self, t0) -> "ZetaCombo":
        """Evaluate all coefficients at a rational t0; interpolated becomes plain."""
        kind = PLAIN if self.kind == INTERPOLATED else self.kind
        terms = {
            idx: QtPoly.const(c.eval_at(t0)) for idx, c in self.terms.items()
        }
        return ZetaCombo(kind, terms, QtPoly.const(self.scalar.eval_at(t0)))

    def __str__(self):
        sym = _SYMBOL[self.kind]
        pieces = []
        if self.scalar:
            pieces.append(_scalar_str(self.scalar))
        for idx, c in self.sorted_terms():
            pieces.append(_zeta_term_str(c, "%s%s" % (sym, idx)))
        if not pieces:
            return "0"
        out = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self):
        return "ZetaCombo(%s: %s)" % (self.kind, self)

    def to_json_obj(self):
        return {
            "kind": self.kind,
            "scalar": str(self.scalar),
            "terms": [
                {"index": list(idx.parts), "coeff": str(c)}
                for idx, c in self.sorted_terms()
            ],
        }


def _scalar_str(c: QtPoly) -> str:
    mono = c.as_monomial()
    if mono is not None and mono[0] == 0:
        return str(c)
    return "(%s)" % c


def _zeta_term_str(c: QtPoly, symbol: str) -> str:
    """Render one term with the sign folded out front when possible."""
    mono = c.as_monomial()
    if mono is None:
        return "(%s)*%s" % (c, symbol)
    deg, coef = mono
    sign = "-" if coef < 0 else ""
    coef = abs(coef)
    if deg == 0:
        body = symbol if coef == 1 else "%s*%s" % (coef, symbol)
    else:
        tpart = "t" if deg == 1 else "t^%d" % deg
        if coef == 1:
            body = "%s*%s" % (tpart, symbol)
        else:
            body = "%s*%s*%s" % (coef, tpart, symbol)
    return sign + body


def zeta_map(v: HElement, kind=INTERPOLATED) -> ZetaCombo:
    """Apply the zeta symbol map to an element whose words are all admissible.

    Raises ValueError when some word is nonempty and not admissible, since
    such words carry no convergent zeta value.
    """
    terms = {}
    scalar = QtPoly.zero()
    for w, c in v.terms.items():
        if not w.letters:
            scalar = scalar + c
            continue
        idx = index_from_word(w) if w.letters[-1] == "y" else None
        if idx is None or not idx.admissible:
            raise ValueError("word %s lies outside the admissible span" % w)
        terms[idx] = terms.get(idx, QtPoly.zero()) + c
    return ZetaCombo(kind, terms, scalar)


def expand_interpolation(zc: ZetaCombo) -> ZetaCombo:
    """Rewrite interpolated symbols as plain ones.

    Each symbol of depth n expands over the 2^(n-1) ways of either keeping
    or adding together adjacent parts, with a factor t per addition:
    z^t(2,1) = z(2,1) + t*z(3).
    """
    if zc.kind != INTERPOLATED:
        raise ValueError("can only expand an interpolated combo, got %s" % zc.kind)
    out = {}
    for idx, c in zc.terms.items():
        parts = idx.parts
        n = len(parts)
        for mask in range(1 << (n - 1)):
            merged = [parts[0]]
            fused = 0
            for j in range(1, n):
                if mask >> (j - 1) & 1:
                    merged[-1] += parts[j]
                    fused += 1
                else:
                    merged.append(parts[j])
            key = Index(merged)
            add = c * QtPoly.t(fused) if fused else c
            out[key] = out.get(key, QtPoly.zero()) + add
    return ZetaCombo(PLAIN, out, zc.scalar)


def star_view(zc: ZetaCombo) -> ZetaCombo:
    """Specialize an interpolated combo at t=1 and tag it with star symbols.

    The result is kept apart from plain combos by its kind, so star and
    plain values can never be summed by accident.
    """
    if zc.kind != INTERPOLATED:
        raise ValueError("star view needs an interpolated combo, got %s" % zc.kind)
    terms = {idx: QtPoly.const(c.eval_at(1)) for idx, c in zc.terms.items()}
    return ZetaCombo(STAR, terms, QtPoly.const(zc.scalar.eval_at(1)))


def star_expand(zc: ZetaCombo) -> ZetaCombo:
    """Rewrite star symbols as plain ones (every merge pattern, weight 1)."""
    if zc.kind != STAR:
        raise ValueError("can only star-expand a star combo, got %s" % zc.kind)
    as_interp = ZetaCombo(INTERPOLATED, zc.terms, zc.scalar)
    return expand_interpolation(as_interp).substitute_t(1)


_COMBO_TERM_RE = re.compile(
    r"^(?P<coeff>.*?)\*?\s*(?P<sym>zs|z)\s*\((?P<idx>[^()]*)\)$"
)


def _signed_pieces(s: str):
    """Split on top-level + and - while respecting parentheses."""
    depth = 0
    start = 0
    sign = 1
    first = True
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and not first:
            yield sign, s[start:i]
            sign = 1 if ch == "+" else -1
            start = i + 1
        if not ch.isspace():
            if first and ch in "+-" and depth == 0:
                sign = 1 if ch == "+" else -1
                start = i + 1
            first = False
    yield sign, s[start:]


def parse_zeta_combo(text: str) -> ZetaCombo:
    """Parse forms like "2*z(2,2) + 4*z(3,1) - 6*t*z(4)" or "zs(5,1)".

    Plain z(...) symbols give a plain combo, zs(...) a star combo; the two
    may not appear together.  Bare coefficients join the scalar part.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty zeta combo")
    if s == "0":
        return ZetaCombo.zero()
    terms = {}
    scalar = QtPoly.zero()
    kinds = set()
    for sign, piece in _signed_pieces(s):
        piece = piece.strip()
        if not piece:
            raise ValueError("cannot parse zeta combo %r" % text)
        m = _COMBO_TERM_RE.match(piece)
        if m is None:
            scalar = scalar + parse_qtpoly(piece) * QtPoly.const(sign)
            continue
        kinds.add(m.group("sym"))
        cpart = m.group("coeff").strip().rstrip("*").strip()
        if cpart:
            coeff = parse_qtpoly(cpart)
        else:
            coeff = QtPoly.one()
        if sign < 0:
            coeff = -coeff
        try:
            parts = [int(p) for p in m.group("idx").split(",")]
        except ValueError:
            raise ValueError("cannot parse index in %r" % piece) from None
        idx = Index(parts)
        if not idx.admissible:
            raise ValueError("non-admissible index %s in combo" % idx)
        terms[idx] = terms.get(idx, QtPoly.zero()) + coeff
    if len(kinds) > 1:
        raise ValueError("cannot mix z and zs symbols in one combo")
    kind = STAR if kinds == {"zs"} else PLAIN
    return ZetaCombo(kind, terms, scalar)


def zeta_combo_from_json(obj) -> ZetaCombo:
    terms = {
        Index(rec["index"]): parse_qtpoly(rec["coeff"]) for rec in obj["terms"]
    }
    return ZetaCombo(obj["kind"], terms, parse_qtpoly(obj["scalar"]))


def zeta_combo_to_json(zc: ZetaCombo) -> str:
    return json.dumps(zc.to_json_obj())


def interpolated_symbol(parts) -> ZetaCombo:
    """The combo holding the single interpolated symbol for ``parts``."""
    return ZetaCombo(INTERPOLATED, {Index(parts): QtPoly.one()})


def zeta_uniform_product(m: int, p: int, n: int, u: int, v: int) -> ZetaCombo:
    """Product z^t(m, p^n) * z^t(u, p^v) as an interpolated combo.

    Both factors repeat one part p below a distinct head, the shape covered
    by the uniform-tail product formula; requires m, u >= 2 and p, n, v >= 1, 0.
    """
    if m < 2 or u < 2:
        raise ValueError("head parts must be at least 2 for admissibility")
    if p < 1 or n < 0 or v < 0:
        raise ValueError("need a positive repeated part and nonnegative tail counts")
    a_exps = (m - 1,) + (p - 1,) * n
    b_exps = (u - 1,) + (p - 1,) * v
    return zeta_map(closedforms.pattern_product(a_exps, b_exps))


def zeta_height_one_product(a: int, b: int, r: int, s: int) -> ZetaCombo:
    """Product z^t(a+1, 1^(r-1)) * z^t(b+1, 1^(s-1)) as an interpolated combo."""
    return zeta_map(closedforms.height_one_product(a, r, b, s))


def alternating_zeta_sum(k: int, p: int = 2) -> ZetaCombo:
    """Alternating product sum sum_j (-1)^j z^t(p,1^j) z^t(p,1^(k-j))."""
    return zeta_map(closedforms.alternating_product_sum(k, p))


def alternating_zeta_identity(k: int):
    """LHS and stated RHS of the alternating double-product identity at p=2.

    The left side is the word-level alternating sum pushed through the
    zeta map; the right side is its stated closed form, zero for odd k.
    Returns the pair (lhs, rhs).
    """
    if k < 1:
        raise ValueError("need k >= 1")
    lhs = alternating_zeta_sum(k, 2)
    if k % 2 == 1:
        return lhs, ZetaCombo.zero(INTERPOLATED)
    terms = {}

    def bump(parts, c):
        idx = Index(parts)
        terms[idx] = terms.get(idx, QtPoly.zero()) + c

    for aa in compositions(1, k + 2):
        parts = (aa[-1] + 2,) + tuple(q + 1 for q in aa[:-1])
        bump(parts, QtPoly.const(2 * (aa[-1] + 1)))
    for i in range(k):
        parts = (2,) + (1,) * i + (3,) + (1,) * (k - i - 1)
        bump(parts, QtPoly.t() * QtPoly.const(2 * (2 * (-1) ** i - 1)))
    bump((4,) + (1,) * k, QtPoly.t() * QtPoly.const(-6))
    return lhs, ZetaCombo(INTERPOLATED, terms)


def euler_decomposition(i: int, j: int) -> ZetaCombo:
    """Classical two-factor decomposition of z(i)*z(j) into depth-two values."""
    if i < 2 or j < 2:
        raise ValueError("need i, j >= 2")
    terms = {}
    for k in range(1, j + 1):
        idx = Index((i + j - k, k))
        terms[idx] = terms.get(idx, QtPoly.zero()) + QtPoly.const(
            binom(i + j - k - 1, i - 1)
        )
    for k in range(1, i + 1):
        idx = Index((i + j - k, k))
        terms[idx] = terms.get(idx, QtPoly.zero()) + QtPoly.const(
            binom(i + j - k - 1, j - 1)
        )
    return ZetaCombo(PLAIN, terms)


def product_combo(w1: Word, w2: Word, cache=None) -> ZetaCombo:
    """Zeta image of the deformed product of two admissible words."""
    return zeta_map(tshuffle_words(w1, w2, cache))
