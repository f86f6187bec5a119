"""Letters, bracketed words, good words and the deg-lex order.

A bracketed word is either a :class:`Letter` or a pair ``(left, right)`` of
bracketed words.  Good words are stored canonically as a head letter followed
by a nondecreasing tuple of good right multipliers, so that

    x R_{w1} R_{w2} ... R_{wn}  ==  (((x w1) w2) ... wn).

:class:`GoodWord` instances are interned: two good words are equal exactly
when they are the same object, which keeps hashing and dictionary lookups
cheap inside the polynomial arithmetic.
"""
from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Tuple, Union

DEFAULT_CAP = 10**6


class NotGood(ValueError):
    """Raised when a word fails the goodness condition."""


class ResourceBound(RuntimeError):
    """Raised when an enumeration would exceed the configured word cap."""


@dataclass(frozen=True, order=False)
class Letter:
    name: str
    rank: int

    def __repr__(self):
        return self.name


Word = Union[Letter, Tuple["Word", "Word"]]

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class Alphabet:
    """A finite alphabet ordered by declaration (first declared is least)."""

    letters: Tuple[Letter, ...]

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "Alphabet":
        names = list(names)
        if any(not n for n in names):
            raise ValueError("generator names must be nonempty")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        return cls(tuple(Letter(n, r) for r, n in enumerate(names)))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, str):
            for x in self.letters:
                if x.name == item:
                    return x
            raise KeyError(item)
        return self.letters[item]

    @property
    def names(self):
        return [x.name for x in self.letters]


# ---------------------------------------------------------------------------
# bracketed words

@lru_cache(maxsize=None)
def length(u: Word) -> int:
    if isinstance(u, Letter):
        return 1
    return length(u[0]) + length(u[1])


@lru_cache(maxsize=None)
def sort_key(u: Word) -> tuple:
    """Key whose tuple ordering is exactly the deg-lex order on words.

    Longer words are greater; words of equal length compare by their left
    subwords, then by their right subwords; letters compare by rank.
    """
    if isinstance(u, Letter):
        return (1, u.rank)
    return (length(u), sort_key(u[0]), sort_key(u[1]))


def compare(u: Word, v: Word) -> int:
    """Deg-lex comparison returning ``LT``, ``EQ`` or ``GT``."""
    if isinstance(u, Letter) and isinstance(v, Letter):
        return (u.rank > v.rank) - (u.rank < v.rank)
    lu, lv = length(u), length(v)
    if lu != lv:
        return GT if lu > lv else LT
    # equal length >= 2: both are products
    c = compare(u[0], v[0])
    if c != EQ:
        return c
    return compare(u[1], v[1])


@lru_cache(maxsize=None)
def is_good(u: Word) -> bool:
    if isinstance(u, Letter):
        return True
    v, w = u
    if not (is_good(v) and is_good(w)):
        return False
    if isinstance(v, Letter):
        return True
    return sort_key(v[1]) <= sort_key(w)


def word_str(u: Word) -> str:
    if isinstance(u, Letter):
        return u.name
    return f"({word_str(u[0])} {word_str(u[1])})"


def all_words(letters: Sequence[Letter], n: int) -> Iterator[Word]:
    """Every bracketing of every letter string of length ``n``."""
    if n == 1:
        yield from letters
        return
    for k in range(1, n):
        for left in all_words(letters, k):
            for right in all_words(letters, n - k):
                yield (left, right)


# ---------------------------------------------------------------------------
# good words

class GoodWord:
    """A good word ``head R_{m1} ... R_{mn}`` with ``m1 <= ... <= mn``."""

    __slots__ = ("head", "mults", "tree", "key", "length", "__weakref__")
    _table: dict = {}

    def __new__(cls, head: Letter, mults: Sequence["GoodWord"] = ()):
        mults = tuple(mults)
        ident = (head, mults)
        self = cls._table.get(ident)
        if self is not None:
            return self
        for a, b in zip(mults, mults[1:]):
            if a.key > b.key:
                raise NotGood(f"multipliers out of order: {a} > {b}")
        self = object.__new__(cls)
        tree: Word = head
        for m in mults:
            tree = (tree, m.tree)
        self.head = head
        self.mults = mults
        self.tree = tree
        self.key = sort_key(tree)
        self.length = 1 + sum(m.length for m in mults)
        return cls._table.setdefault(ident, self)

    def __reduce__(self):
        return (GoodWord, (self.head, self.mults))

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __gt__(self, other):
        return self.key > other.key

    def __ge__(self, other):
        return self.key >= other.key

    def __repr__(self):
        return word_str(self.tree)

    __str__ = __repr__

    @property
    def is_letter(self) -> bool:
        return not self.mults

    def prefix(self, k: int) -> "GoodWord":
        """``head R_{m1} ... R_{mk}``; the left spine of the tree."""
        return GoodWord(self.head, self.mults[:k])


def letter_word(x: Letter) -> GoodWord:
    return GoodWord(x, ())


def decompose(u: Word) -> GoodWord:
    """Canonical head + multiplier form of a good bracketed word."""
    if not is_good(u):
        raise NotGood(f"{word_str(u)} is not a good word")
    return _decompose(u)


@lru_cache(maxsize=None)
def _decompose(u: Word) -> GoodWord:
    if isinstance(u, Letter):
        return GoodWord(u, ())
    left = _decompose(u[0])
    return GoodWord(left.head, left.mults + (_decompose(u[1]),))


def tree_form(g: GoodWord) -> Word:
    return g.tree


def append_mult(u: GoodWord, v: GoodWord) -> GoodWord | None:
    """``(u v)`` as a good word, or None when appending breaks goodness."""
    if u.mults and u.mults[-1].key > v.key:
        return None
    return GoodWord(u.head, u.mults + (v,))


def insert_mult(u: GoodWord, v: GoodWord) -> GoodWord:
    """Insert ``v`` into the multipliers of ``u`` after every element ``<= v``."""
    keys = [m.key for m in u.mults]
    pos = bisect.bisect_right(keys, v.key)
    return GoodWord(u.head, u.mults[:pos] + (v,) + u.mults[pos:])


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def _good_of_length(alphabet: Alphabet, n: int) -> Tuple[GoodWord, ...]:
    if n == 1:
        return tuple(GoodWord(x, ()) for x in alphabet)
    # candidate multipliers: every good word of length < n, ascending
    pool = sorted(
        itertools.chain.from_iterable(_good_of_length(alphabet, k) for k in range(1, n)),
        key=lambda g: g.key,
    )
    out = []
    for seq in _multisets(pool, n - 1, 0):
        for x in alphabet:
            out.append(GoodWord(x, seq))
    out.sort(key=lambda g: g.key)
    return tuple(out)


def _multisets(pool, total, start):
    """Nondecreasing sequences from ``pool[start:]`` whose lengths sum to ``total``."""
    if total == 0:
        yield ()
        return
    for i in range(start, len(pool)):
        g = pool[i]
        if g.length <= total:
            for rest in _multisets(pool, total - g.length, i):
                yield (g,) + rest


def enumerate_good(alphabet: Alphabet, max_len: int, cap: int = DEFAULT_CAP) -> list:
    """All good words of length ``<= max_len`` in ascending deg-lex order."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    out = []
    for n in range(1, max_len + 1):
        out.extend(good_of_length(alphabet, n, cap=cap - len(out)))
    return out


def good_of_length(alphabet: Alphabet, n: int, cap: int = DEFAULT_CAP) -> Tuple[GoodWord, ...]:
    words = _good_of_length(alphabet, n)
    if len(words) > cap:
        raise ResourceBound(f"more than {cap} good words of length <= {n}")
    return words


def good_below(bound: GoodWord, alphabet: Alphabet, cap: int = DEFAULT_CAP) -> list:
    """Every good word strictly below ``bound`` in deg-lex order."""
    out = enumerate_good(alphabet, bound.length - 1, cap) if bound.length > 1 else []
    same = good_of_length(alphabet, bound.length, cap)
    out.extend(g for g in same if g.key < bound.key)
    return out
