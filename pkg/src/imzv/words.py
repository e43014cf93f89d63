"""Words over the alphabet {x, y}, zeta indices, and duality.

An index (l1,...,ln) of positive integers encodes the word
z_{l1} ... z_{ln} with z_k = x^(k-1) y, so words ending in y correspond
bijectively to indices.  A word is admissible when it is empty or starts
with x and ends with y; admissible nonempty words are exactly the images
of indices with l1 >= 2, the convergent zeta arguments.
"""

from __future__ import annotations

import itertools

X = "x"
Y = "y"

# canonical term order: length first, then letters with y before x
_LETTER_ORDER = str.maketrans("yx", "ab")


class Word:
    """An immutable word over {x, y}; the empty word is the unit and prints as 1."""

    __slots__ = ("letters",)

    def __init__(self, letters=""):
        if isinstance(letters, Word):
            letters = letters.letters
        if any(ch not in "xy" for ch in letters):
            raise ValueError("word letters must be x or y, got %r" % letters)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __add__(self, other):
        """Concatenation."""
        if isinstance(other, Word):
            return Word(self.letters + other.letters)
        return NotImplemented

    def sort_key(self):
        return (len(self.letters), self.letters.translate(_LETTER_ORDER))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def count(self, letter: str) -> int:
        return self.letters.count(letter)

    def __str__(self):
        return self.letters if self.letters else "1"

    def __repr__(self):
        return "Word(%r)" % self.letters


EMPTY_WORD = Word("")


class Index:
    """A zeta index: a nonempty tuple of positive integer parts."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("index needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError("index parts must be positive, got %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Index is immutable")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def height(self) -> int:
        return sum(1 for p in self.parts if p > 1)

    @property
    def admissible(self) -> bool:
        return self.parts[0] >= 2

    def __eq__(self, other):
        if isinstance(other, Index):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __str__(self):
        return "(%s)" % ",".join(str(p) for p in self.parts)

    def __repr__(self):
        return "Index(%r)" % (self.parts,)


def word_from_index(idx: Index) -> Word:
    """The word z_{l1}...z_{ln} for the index (l1,...,ln)."""
    return Word("".join("x" * (p - 1) + "y" for p in idx.parts))


def index_from_word(w: Word) -> Index:
    """Inverse of word_from_index; defined for nonempty words ending in y."""
    s = w.letters
    if not s or s[-1] != "y":
        raise ValueError("word %s does not encode an index (must end in y)" % w)
    parts = []
    run = 0
    for ch in s:
        if ch == "x":
            run += 1
        else:
            parts.append(run + 1)
            run = 0
    return Index(parts)


def is_admissible(w: Word) -> bool:
    """True for the empty word and for words starting with x and ending in y."""
    s = w.letters
    return not s or (s[0] == "x" and s[-1] == "y")


def dual(w: Word) -> Word:
    """MZV duality on admissible words: reverse and swap x with y."""
    if not w.letters or not is_admissible(w):
        raise ValueError("dual is only defined on nonempty admissible words")
    return Word("".join("x" if ch == "y" else "y" for ch in reversed(w.letters)))


def parse_word(text: str) -> Word:
    s = text.strip()
    if s == "1":
        return EMPTY_WORD
    return Word(s)


def parse_index(text: str) -> Index:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    try:
        parts = [int(p) for p in s.split(",") if p.strip() != ""]
    except ValueError:
        raise ValueError("cannot parse index %r" % text) from None
    if not parts:
        raise ValueError("cannot parse index %r" % text)
    return Index(parts)


def words_of_length(n: int):
    """All 2^n words of the given length, in canonical order (y before x)."""
    for tup in itertools.product("yx", repeat=n):
        yield Word("".join(tup))


def all_words(max_len: int):
    """All words of length 0..max_len."""
    yield EMPTY_WORD
    for n in range(1, max_len + 1):
        yield from words_of_length(n)


def admissible_words(max_weight: int):
    """All nonempty admissible words of length up to max_weight."""
    for n in range(2, max_weight + 1):
        for mid in itertools.product("xy", repeat=n - 2):
            yield Word("x" + "".join(mid) + "y")


def admissible_indices(max_weight: int):
    """All admissible indices of weight up to max_weight."""
    for w in admissible_words(max_weight):
        yield index_from_word(w)
