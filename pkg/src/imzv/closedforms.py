"""Closed product formulas for whole families of words.

Every function here produces the same element as the recursive engine in
tshuffle, but by direct summation instead of recursion.  The construction
behind all of them: list the merge patterns of the two words' y letters,
fill the x letters into the gaps with multinomial multiplicities, and for
the t part replace one y by x in each pattern, namely whichever of the two
source words' final y's lands first in the output.  The grid tests pin each
function to the recursive engine exactly, coefficient by coefficient.
"""

from __future__ import annotations

import itertools
from math import comb

from .coeffs import QtPoly, binom
from .halg import HElement
from .tshuffle import compositions, tshuffle_words
from .words import Word


def _assemble(plain: dict, merged: dict) -> HElement:
    """Build sum(plain) - t * sum(merged) from str -> int coefficient maps."""
    res = HElement.__new__(HElement)
    res.terms = {}
    for w, c in plain.items():
        if c:
            res.terms[Word(w)] = QtPoly({0: c})
    for w, c in merged.items():
        if not c:
            continue
        key = Word(w)
        old = res.terms.get(key)
        if old is None:
            res.terms[key] = QtPoly({1: -c})
        else:
            val = old + QtPoly({1: -c})
            if val:
                res.terms[key] = val
            else:
                del res.terms[key]
    return res


def _bump(table: dict, w: str, c: int):
    if c:
        table[w] = table.get(w, 0) + c


def _zword(exps) -> str:
    """The word z_{e1+1} ... z_{en+1} as a string, x^e y per entry."""
    return "".join("x" * e + "y" for e in exps)


def _gap_fills(pattern, a_exps, b_exps):
    """Distribute both words' x runs over a fixed y merge pattern.

    pattern is a sequence of 0/1 flags, one per output y (0 = y from the
    left word).  Yields (runs, mult): the x-run lengths in front of each y,
    and the number of interleavings producing that filling.  At each y all
    x's still pending from that word's current run must land, together with
    any forward portion of the other word's current run.
    """
    n = len(pattern)
    a_runs, b_runs = list(a_exps), list(b_exps)

    def rec(pos, iu, iv, ru, rv, mult, runs):
        if pos == n:
            yield tuple(runs), mult
            return
        if pattern[pos] == 0:
            for q in range(rv + 1):
                runs.append(ru + q)
                nu = iu + 1
                yield from rec(pos + 1, nu, iv,
                               a_runs[nu] if nu < len(a_runs) else 0,
                               rv - q, mult * comb(ru + q, q), runs)
                runs.pop()
        else:
            for q in range(ru + 1):
                runs.append(rv + q)
                nv = iv + 1
                yield from rec(pos + 1, iu, nv, ru - q,
                               b_runs[nv] if nv < len(b_runs) else 0,
                               mult * comb(rv + q, q), runs)
                runs.pop()

    yield from rec(0, 0, 0,
                   a_runs[0] if a_runs else 0,
                   b_runs[0] if b_runs else 0, 1, [])


def _pattern_words(pattern, runs, jstar):
    """The filled word and its y -> x replacement at pattern position jstar."""
    plain = "".join("x" * g + "y" for g in runs)
    merged = "".join("x" * g + ("x" if i == jstar else "y")
                     for i, g in enumerate(runs))
    return plain, merged


def pattern_product(a_exps, b_exps) -> HElement:
    """t-shuffle of x^{a1}y...x^{ar}y with x^{b1}y...x^{bs}y, built from
    the merge patterns of the y's.

    Each pattern contributes its multinomially filled words, minus t times
    the same words with one y turned into x: the earlier of the two final
    y's.  The later final y stays, so every output word still ends in y.
    """
    a_exps, b_exps = tuple(a_exps), tuple(b_exps)
    r, s = len(a_exps), len(b_exps)
    if r < 1 or s < 1:
        raise ValueError("need at least one y run on each side")
    plain: dict = {}
    merged: dict = {}
    for upos in itertools.combinations(range(r + s), r):
        uset = set(upos)
        pattern = tuple(0 if i in uset else 1 for i in range(r + s))
        last_u = upos[-1]
        last_v = max(i for i in range(r + s) if i not in uset)
        jstar = min(last_u, last_v)
        for runs, mult in _gap_fills(pattern, a_exps, b_exps):
            w, wm = _pattern_words(pattern, runs, jstar)
            _bump(plain, w, mult)
            _bump(merged, wm, mult)
    return _assemble(plain, merged)


def height_one_product(a: int, r: int, b: int, s: int) -> HElement:
    """Summation formula for x^a y^r sh x^b y^s, all arguments >= 1.

    The plain part runs over compositions alpha of a+b into r+s runs whose
    tail past position l+1 vanishes; the t part has six families: two with
    an inner y^i x block, two guarded by s = 1 or r = 1 ending in a bumped
    run, and two where the final two runs merge with one extra x.
    """
    if min(a, r, b, s) < 1:
        raise ValueError("need a, r, b, s >= 1")
    plain: dict = {}
    merged: dict = {}

    for alpha in compositions(a + b, r + s):
        c = 0
        for l in range(1, r + 1):
            if all(alpha[j] == 0 for j in range(l + 1, r + s)):
                c += binom(alpha[0], a) * binom(r + s - l - 1, r - l)
        for l in range(1, s + 1):
            if all(alpha[j] == 0 for j in range(l + 1, r + s)):
                c += binom(alpha[0], b) * binom(r + s - l - 1, s - l)
        _bump(plain, _zword(alpha), c)

    # inner-replacement families: ... x^{alpha_{l+1}} y^{i+1} x y^{rest}
    for l in range(1, r):
        for alpha in compositions(a + b, l + 1):
            ca = binom(alpha[0], a)
            if not ca:
                continue
            for i in range(max(min(r - l, s - 1) - 1, 0), r + s - l - 2):
                c = ca * (binom(i, r - l - 1) + binom(i, s - 2))
                w = ("".join("x" * e + "y" for e in alpha[:-1])
                     + "x" * alpha[-1] + "y" * (i + 1) + "x"
                     + "y" * (r + s - l - i - 2))
                _bump(merged, w, c)
    for l in range(1, s):
        for alpha in compositions(a + b, l + 1):
            cb = binom(alpha[0], b)
            if not cb:
                continue
            for i in range(max(min(r - 1, s - l) - 1, 0), r + s - l - 2):
                c = cb * (binom(i, s - l - 1) + binom(i, r - 2))
                w = ("".join("x" * e + "y" for e in alpha[:-1])
                     + "x" * alpha[-1] + "y" * (i + 1) + "x"
                     + "y" * (r + s - l - i - 2))
                _bump(merged, w, c)

    # single-height tails: only present when the other word has one y
    if s == 1:
        for l in range(1, r):
            for alpha in compositions(a + b, l + 1):
                w = ("".join("x" * e + "y" for e in alpha[:-1])
                     + "x" * (alpha[-1] + 1) + "y" * (r - l))
                _bump(merged, w, binom(alpha[0], a))
    if r == 1:
        for l in range(1, s):
            for alpha in compositions(a + b, l + 1):
                w = ("".join("x" * e + "y" for e in alpha[:-1])
                     + "x" * (alpha[-1] + 1) + "y" * (s - l))
                _bump(merged, w, binom(alpha[0], b))

    # final-run merges: the last two runs fuse around the replaced y
    for alpha in compositions(a + b, r + 1):
        w = ("".join("x" * e + "y" for e in alpha[: r - 1])
             + "x" * (alpha[r - 1] + alpha[r] + 1) + "y" * s)
        _bump(merged, w, binom(alpha[0], a))
    for alpha in compositions(a + b, s + 1):
        w = ("".join("x" * e + "y" for e in alpha[: s - 1])
             + "x" * (alpha[s - 1] + alpha[s] + 1) + "y" * r)
        _bump(merged, w, binom(alpha[0], b))

    return _assemble(plain, merged)


def expanded_height_one_product(m: int, j: int, n: int, k: int) -> HElement:
    """Fully expanded form of x^m y^j sh x^n y^k, all arguments >= 1.

    Two plain families (split along which word supplies the leading x run)
    and five replacement families.  The fifth replacement family, active
    only for k = 1, restores the terms the chain loses when the right word
    carries a single y; without it the k = 1 column fails the oracle check.
    """
    if min(m, j, n, k) < 1:
        raise ValueError("need m, j, n, k >= 1")
    plain: dict = {}
    merged: dict = {}

    for n1 in range(n + 1):
        cn = binom(m + n1 - 1, m - 1)
        if not cn:
            continue
        # leading run absorbed from the left word
        for m1 in range(j + 1):
            m2 = j - m1
            cm = cn * binom(m2 + k - 1, k - 1)
            for aa in compositions(n - n1, m1 + 1):
                runs = [aa[0] + m + n1, *aa[1:]]
                w = "y".join("x" * e for e in runs) + "y" * (m2 + k)
                _bump(plain, w, cm)
            # inner replacement inside the shared y tail
            for aa in compositions(n - n1, m1 + 1):
                runs = [aa[0] + m + n1, *aa[1:]]
                base = "y".join("x" * e for e in runs)
                for i in range(max(min(m2, k - 1) - 1, 0), m2 + k - 2):
                    c = cn * (binom(i, m2 - 1) + binom(i, k - 2))
                    w = base + "y" * (i + 1) + "x" + "y" * (m2 + k - i - 2)
                    _bump(merged, w, c)
        # left word's last y merged into a bumped run
        for j1 in range(n - n1 + 1):
            j2 = n - n1 - j1
            for aa in compositions(j1, j):
                runs = [aa[0] + m + n1, *aa[1:]]
                runs[-1] += j2 + 1
                w = "y".join("x" * e for e in runs) + "y" * k
                _bump(merged, w, cn)
        # right word with one y: its y merged into a bumped run
        if k == 1:
            for i in range(j):
                for aa in compositions(n - n1, i + 1):
                    runs = [aa[0] + m + n1, *aa[1:]]
                    runs[-1] += 1
                    w = "y".join("x" * e for e in runs) + "y" * (j - i)
                    _bump(merged, w, cn)

    for k1 in range(1, k + 1):
        for m1 in range(m):
            m2 = m - 1 - m1
            ca = binom(m1 + n - 1, n - 1)
            if not ca:
                continue
            # leading run absorbed from the right word
            cb = ca * binom(j + k - k1, j)
            for bb in compositions(m2, k1 + 1):
                runs = [bb[0] + n + m1, *bb[1:]]
                runs[-1] += 1
                w = "y".join("x" * e for e in runs) + "y" * (j + k - k1)
                _bump(plain, w, cb)
            # inner replacement past the bumped run
            for i in range(max(min(j, k - k1) - 1, 0), j + k - k1 - 1):
                c = ca * (binom(i, j - 1) + binom(i, k - k1 - 1))
                for bb in compositions(m2, k1 + 1):
                    runs = [bb[0] + n + m1, *bb[1:]]
                    runs[-1] += 1
                    w = ("y".join("x" * e for e in runs)
                         + "y" * i + "x" + "y" * (j + k - k1 - i - 1))
                    _bump(merged, w, c)

    # right word's last y merged, all of its y's used as separators
    for m1 in range(m):
        for m2 in range(m - m1):
            m3 = m - 1 - m1 - m2
            ca = binom(m1 + n - 1, n - 1)
            if not ca:
                continue
            for aa in compositions(m2, k):
                runs = [aa[0] + n + m1, *aa[1:]]
                runs[-1] += m3 + 2
                w = "y".join("x" * e for e in runs) + "y" * j
                _bump(merged, w, ca)

    return _assemble(plain, merged)


def _height_two_replacement(pattern, r: int, s1: int, s2: int) -> int:
    """Pattern position of the y replaced by x, for a left word with r y's
    against a right word with y blocks of sizes s1 and s2.

    Routed by the case split on where the first left y sits relative to the
    right word's first block, then by the guards (trailing left y's present,
    single final right y, all right y's leading) that decide which final y
    comes first.
    """
    upos = [i for i, lab in enumerate(pattern) if lab == 0]
    vpos = [i for i, lab in enumerate(pattern) if lab == 1]
    last_u, last_v = upos[-1], vpos[-1]
    if upos[0] <= s1:
        # first left y lands in or right after the right word's first block
        trailing_u = sum(1 for p in upos if p > vpos[s1])
        if not trailing_u:
            return last_u
        if s2 == 1:
            return vpos[s1]
        return min(last_u, last_v)
    # first left y lands inside the right word's second block
    if upos[0] == s1 + s2:
        return last_v
    if r == 1:
        return upos[0]
    return min(last_u, last_v)


def height_two_product(a: int, r: int, b1: int, s1: int,
                       b2: int, s2: int) -> HElement:
    """t-shuffle of x^a y^r with x^{b1} y^{s1} x^{b2} y^{s2}, built from the
    four-way case split on where the left word's y's land in the right
    word's two y blocks (a, b1, b2 >= 0 and r, s1, s2 >= 1)."""
    if min(r, s1, s2) < 1 or min(a, b1, b2) < 0:
        raise ValueError("need r, s1, s2 >= 1 and a, b1, b2 >= 0")
    a_exps = (a,) + (0,) * (r - 1)
    b_exps = (b1,) + (0,) * (s1 - 1) + (b2,) + (0,) * (s2 - 1)
    s = s1 + s2
    plain: dict = {}
    merged: dict = {}
    for upos in itertools.combinations(range(r + s), r):
        uset = set(upos)
        pattern = tuple(0 if i in uset else 1 for i in range(r + s))
        jstar = _height_two_replacement(pattern, r, s1, s2)
        for runs, mult in _gap_fills(pattern, a_exps, b_exps):
            w, wm = _pattern_words(pattern, runs, jstar)
            _bump(plain, w, mult)
            _bump(merged, wm, mult)
    return _assemble(plain, merged)


def alternating_product_sum(k: int, p: int) -> HElement:
    """sum_{i=0}^{k} (-1)^i  (z_p z_1^i sh z_p z_1^{k-i}) by the recursive
    engine.  Zero for odd k: the terms cancel in pairs."""
    if k < 1 or p < 1:
        raise ValueError("need k, p >= 1")
    zp = "x" * (p - 1) + "y"
    cache: dict = {}
    res = HElement.zero()
    for i in range(k + 1):
        term = tshuffle_words(zp + "y" * i, zp + "y" * (k - i), cache)
        res = res + (term if i % 2 == 0 else -term)
    return res


def alternating_product_closed_form(k: int, p: int) -> HElement:
    """Closed form of alternating_product_sum for even k.

    The plain part is a single family over compositions into k+2 runs; the
    t part stacks three unsigned families, two alternating families, and a
    parity-weighted family ending in a fixed xy block.
    """
    if p < 1:
        raise ValueError("need p >= 1")
    if k < 2 or k % 2:
        raise ValueError("closed form needs even k >= 2")
    wt = 2 * (p - 1)
    plain: dict = {}
    merged: dict = {}

    for alpha in compositions(wt, k + 2):
        _bump(plain, _zword(alpha), 2 * binom(alpha[0], p - 1))

    # bumped final run before a y^(k-l) tail, plus both two-run merges
    for l in range(1, k + 1):
        for alpha in compositions(wt, l + 1):
            c = 2 * binom(alpha[0], p - 1)
            w = _zword(alpha[:-1]) + "x" * (alpha[-1] + 1) + "y" * (k - l + 1)
            _bump(merged, w, c)
    for alpha in compositions(wt, 2):
        c = 2 * binom(alpha[0], p - 1)
        _bump(merged, "x" * (alpha[0] + alpha[1] + 1) + "y" * (k + 1), c)
    for alpha in compositions(wt, k + 2):
        c = 2 * binom(alpha[0], p - 1)
        w = _zword(alpha[:k]) + "x" * (alpha[k] + alpha[k + 1] + 1) + "y"
        _bump(merged, w, c)

    # alternating merge families, from both ends of the run list
    for i in range(1, k // 2 + 1):
        sign = -1 if i % 2 else 1
        for alpha in compositions(wt, i + 2):
            c = 2 * sign * binom(alpha[0], p - 1)
            w = (_zword(alpha[:i]) + "x" * (alpha[i] + alpha[i + 1] + 1)
                 + "y" * (k - i + 1))
            _bump(merged, w, c)
    for i in range(1, k // 2):
        sign = -1 if i % 2 else 1
        for alpha in compositions(wt, k - i + 2):
            c = 2 * sign * binom(alpha[0], p - 1)
            w = (_zword(alpha[: k - i])
                 + "x" * (alpha[k - i] + alpha[k - i + 1] + 1)
                 + "y" * (i + 1))
            _bump(merged, w, c)

    # parity-weighted family with a trailing xy block
    for l in range(1, k):
        weight = 2 * (-1 + (-1) ** l)
        if not weight:
            continue
        for alpha in compositions(wt, l + 1):
            c = weight * binom(alpha[0], p - 1)
            w = _zword(alpha) + "xy" + "y" * (k - l - 1)
            _bump(merged, w, c)

    return _assemble(plain, merged)


def alternating_product_weight4_form(k: int) -> HElement:
    """The p = 2 specialization of the alternating sum, for any k >= 1:
    zero for odd k, and for even k a single plain family with weights
    (a_{k+2} + 1) on the lead run plus two explicit t families."""
    if k < 1:
        raise ValueError("need k >= 1")
    if k % 2:
        return HElement.zero()
    plain: dict = {}
    merged: dict = {}
    for aa in compositions(1, k + 2):
        c = 2 * (aa[-1] + 1)
        w = "x" * (aa[-1] + 1) + "y" + _zword(aa[:-1])
        _bump(plain, w, c)
    for i in range(k):
        c = 2 * (2 * (-1) ** i - 1)
        _bump(merged, "xy" + "y" * i + "xxy" + "y" * (k - i - 1), -c)
    _bump(merged, "xxxy" + "y" * k, 6)
    return _assemble(plain, merged)
