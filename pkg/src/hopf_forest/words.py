"""Words over graded alphabets: shuffle, deconcatenation, concatenation, deshuffle.

Also compositions and their quasi-shuffle product.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Any

from hopf_forest.combinatorics import (
    enumerate_objects,
    parse_pbt,
    parse_perm,
    perm_is_irreducible,
)
from hopf_forest.errors import ParseError
from hopf_forest.lincomb import LinComb


@dataclass(frozen=True, eq=False)
class Alphabet:
    """A graded set of letters: ``letters(n)`` lists the letters of weight ``n >= 1``."""

    name: str
    weight: Callable[[Any], int]
    is_letter: Callable[[Any], bool]
    letters: Callable[[int], list]
    parse_letter: Callable[[str], Any]

    def __str__(self) -> str:
        return self.name


IRREDUCIBLE_PERMS = Alphabet(
    "perm",
    weight=len,
    is_letter=perm_is_irreducible,
    letters=lambda n: enumerate_objects("irreducible-perm", n),
    parse_letter=parse_perm,
)

IRREDUCIBLE_PBTS = Alphabet(
    "pbt",
    weight=lambda t: t.degree,
    is_letter=lambda t: t.is_irreducible,
    letters=lambda n: enumerate_objects("irreducible-pbt", n),
    parse_letter=parse_pbt,
)

ALPHABETS = {"perm": IRREDUCIBLE_PERMS, "pbt": IRREDUCIBLE_PBTS}


def symbol_alphabet(weights: dict[str, int], name: str = "symbols") -> Alphabet:
    """Finite alphabet of plain string letters with the given weights."""
    frozen = dict(weights)

    def parse_letter(s: str) -> str:
        if s not in frozen:
            raise ParseError(f"unknown letter {s!r}")
        return s

    return Alphabet(
        name,
        weight=frozen.__getitem__,
        is_letter=frozen.__contains__,
        letters=lambda n: sorted(a for a, w in frozen.items() if w == n),
        parse_letter=parse_letter,
    )


class Word:
    """A finite sequence of letters, written ``[a|b|c]``; ``[]`` is the empty word."""

    __slots__ = ("letters", "_str")

    def __init__(self, letters: Iterable[Any] = ()):
        self.letters = tuple(letters)
        self._str = "[" + "|".join(map(str, self.letters)) + "]"

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"Word({self._str!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Word) and other.letters == self.letters

    def __hash__(self) -> int:
        return hash(("W", self.letters))

    def __lt__(self, other: Word) -> bool:
        return self._str < other._str

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)


EMPTY_WORD = Word()


def parse_word(text: str, alphabet: Alphabet) -> Word:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("words are written [a|b|...]", text, 0)
    body = s[1:-1].strip()
    if not body:
        return EMPTY_WORD
    letters = [alphabet.parse_letter(part.strip()) for part in body.split("|")]
    for a in letters:
        if not alphabet.is_letter(a):
            raise ParseError(f"{a} is not a letter of the {alphabet} alphabet")
    return Word(letters)


def word_weight(w: Word, alphabet: Alphabet) -> int:
    return sum(alphabet.weight(a) for a in w.letters)


def compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of ``n`` in lexicographic order; ``[()]`` for ``n = 0``."""
    if n == 0:
        return [()]
    return [(first,) + rest for first in range(1, n + 1) for rest in compositions(n - first)]


def words_of_weight(alphabet: Alphabet, n: int) -> list[Word]:
    out = []
    for comp in compositions(n):
        for letters in itertools.product(*(alphabet.letters(p) for p in comp)):
            out.append(Word(letters))
    return sorted(out, key=str)


@functools.lru_cache(maxsize=65536)
def _shuffle_tuples(u: tuple, v: tuple) -> Counter:
    if not u:
        return Counter({v: 1})
    if not v:
        return Counter({u: 1})
    out: Counter = Counter()
    for w, c in _shuffle_tuples(u[1:], v).items():
        out[(u[0],) + w] += c
    for w, c in _shuffle_tuples(u, v[1:]).items():
        out[(v[0],) + w] += c
    return out


def shuffle(u: Word, v: Word) -> LinComb:
    """Sum of all interleavings of ``u`` and ``v``, with multiplicity."""
    return LinComb((Word(w), c) for w, c in _shuffle_tuples(u.letters, v.letters).items())


def concatenate(u: Word, v: Word) -> Word:
    return u + v


def deconcatenation(w: Word) -> LinComb:
    """``sum_i w[:i] ⊗ w[i:]``."""
    L = w.letters
    return LinComb(((Word(L[:i]), Word(L[i:])), 1) for i in range(len(L) + 1))


def deshuffle(w: Word) -> LinComb:
    """Sum over position subsets ``S`` of ``w|S ⊗ w|S^c`` (dual to the shuffle)."""
    L = w.letters
    n = len(L)
    terms = []
    for mask in range(1 << n):
        left = Word(L[i] for i in range(n) if mask >> i & 1)
        right = Word(L[i] for i in range(n) if not mask >> i & 1)
        terms.append(((left, right), 1))
    return LinComb(terms)


class Composition:
    """A sequence of positive integers, written ``(a1,a2,...)``."""

    __slots__ = ("parts", "_str")

    def __init__(self, parts: Iterable[int] = ()):
        self.parts = tuple(parts)
        if any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")
        self._str = "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return self._str

    def __repr__(self) -> str:
        return f"Composition({self._str!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Composition) and other.parts == self.parts

    def __hash__(self) -> int:
        return hash(("C", self.parts))

    def __lt__(self, other: Composition) -> bool:
        return self._str < other._str


def parse_composition(text: str) -> Composition:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("compositions are written (a1,a2,...)", text, 0)
    body = s[1:-1].strip()
    try:
        return Composition(int(p) for p in body.split(",")) if body else Composition()
    except ValueError as exc:
        raise ParseError(f"bad composition {text!r}: {exc}") from None


@functools.lru_cache(maxsize=65536)
def _quasi_shuffle_tuples(a: tuple, b: tuple) -> Counter:
    if not a:
        return Counter({b: 1})
    if not b:
        return Counter({a: 1})
    out: Counter = Counter()
    for w, c in _quasi_shuffle_tuples(a[1:], b).items():
        out[(a[0],) + w] += c
    for w, c in _quasi_shuffle_tuples(a, b[1:]).items():
        out[(b[0],) + w] += c
    for w, c in _quasi_shuffle_tuples(a[1:], b[1:]).items():
        out[(a[0] + b[0],) + w] += c
    return out


def quasi_shuffle(a: Composition, b: Composition) -> LinComb:
    """Shuffles of ``a`` and ``b`` plus every way of merging adjacent parts from both."""
    return LinComb((Composition(w), c) for w, c in _quasi_shuffle_tuples(a.parts, b.parts).items())
