"""Polynomials of the free right-symmetric algebra over the rationals.

Elements are stored in the good-word basis.  Products of good words are
expanded with the right-symmetry identity

    ((v1 v2) w) = ((v1 w) v2) + (v1 (v2 w)) - (v1 (w v2))

applied whenever appending ``w`` to ``(v1 v2)`` breaks goodness (``v2 > w``).
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from .terms import (
    GoodWord,
    Letter,
    Word,
    append_mult,
    decompose,
    insert_mult,
    is_good,
    sort_key,
    word_str,
)


class ZeroPolynomial(ValueError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("inexact coefficient")
    return Fraction(c)


class Poly:
    """A finite rational combination of good words.

    Treated as immutable: arithmetic returns new objects.
    """

    __slots__ = ("terms", "_lead", "_hash")

    def __init__(self, terms: Mapping[GoodWord, object] | None = None):
        clean: Dict[GoodWord, Fraction] = {}
        if terms:
            for w, c in terms.items():
                c = _frac(c)
                if c:
                    clean[w] = c
        self.terms = clean
        self._lead = None
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[GoodWord, Fraction]) -> "Poly":
        # trusted constructor: no zero coefficients, Fraction values
        p = object.__new__(cls)
        p.terms = terms
        p._lead = None
        p._hash = None
        return p

    @classmethod
    def word(cls, w: GoodWord, c=1) -> "Poly":
        return cls({w: c})

    @classmethod
    def letter(cls, x: Letter) -> "Poly":
        return cls({GoodWord(x, ()): 1})

    # -- container protocol -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self):
        """Terms in descending deg-lex order."""
        return sorted(self.terms.items(), key=lambda t: t[0].key, reverse=True)

    def coefficient(self, w: GoodWord) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return Poly._raw(out)

    def __neg__(self):
        return Poly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c) -> "Poly":
        c = _frac(c)
        if not c:
            return Poly()
        return Poly._raw({w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return multiply(self, other)
        return self.scale(other)

    # -- leading term -------------------------------------------------------
    def leading(self) -> GoodWord:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading word")
        if self._lead is None:
            self._lead = max(self.terms, key=lambda w: w.key)
        return self._lead

    def lc(self) -> Fraction:
        return self.terms[self.leading()]

    def monic(self) -> "Poly":
        c = self.lc()
        return self if c == 1 else self.scale(1 / c)

    @property
    def degree(self) -> int:
        return self.leading().length

    def is_homogeneous(self) -> bool:
        return len({w.length for w in self.terms}) <= 1

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return poly_str(self)


def leading(p: Poly) -> GoodWord:
    return p.leading()


def lc(p: Poly) -> Fraction:
    return p.lc()


def monic(p: Poly) -> Poly:
    return p.monic()


def poly_str(p: Poly) -> str:
    """Text form accepted back by the expression parser."""
    if not p:
        return "0"
    parts = []
    for i, (w, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        body = word_str(w.tree) if c == 1 else f"{c} {word_str(w.tree)}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# products

def _acc(out: dict, items, c):
    for w, v in items:
        s = out.get(w, 0) + c * v
        if s:
            out[w] = s
        else:
            del out[w]


@lru_cache(maxsize=None)
def mul_words(u: GoodWord, v: GoodWord) -> Tuple[Tuple[GoodWord, Fraction], ...]:
    """Good-word expansion of the product ``(u v)``."""
    uv = append_mult(u, v)
    if uv is not None:
        return ((uv, Fraction(1)),)
    # u = (u1 un) with un > v
    u1 = u.prefix(len(u.mults) - 1)
    un = u.mults[-1]
    out: Dict[GoodWord, Fraction] = {}
    for w, c in mul_words(u1, v):
        _acc(out, mul_words(w, un), c)
    for w, c in mul_words(un, v):
        _acc(out, mul_words(u1, w), c)
    for w, c in mul_words(v, un):
        _acc(out, mul_words(u1, w), -c)
    return tuple(out.items())


def multiply(p: Poly, q: Poly) -> Poly:
    out: Dict[GoodWord, Fraction] = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            _acc(out, mul_words(u, v), a * b)
    return Poly._raw(out)


def mul_word_left(p: Poly, w: GoodWord) -> Poly:
    """``p * w``."""
    out: Dict[GoodWord, Fraction] = {}
    for u, a in p.terms.items():
        _acc(out, mul_words(u, w), a)
    return Poly._raw(out)


def mul_word_right(w: GoodWord, p: Poly) -> Poly:
    """``w * p``."""
    out: Dict[GoodWord, Fraction] = {}
    for u, a in p.terms.items():
        _acc(out, mul_words(w, u), a)
    return Poly._raw(out)


def leading_product(u: GoodWord, v: GoodWord) -> GoodWord:
    """Leading word of ``u * v`` without expanding the product."""
    return insert_mult(u, v)


@lru_cache(maxsize=None)
def _normalize(u: Word) -> Poly:
    if isinstance(u, Letter):
        return Poly._raw({GoodWord(u, ()): Fraction(1)})
    if is_good(u):
        return Poly._raw({decompose(u): Fraction(1)})
    return multiply(_normalize(u[0]), _normalize(u[1]))


def normalize(u: Word) -> Poly:
    """Expansion of an arbitrary bracketed word in the good-word basis."""
    return _normalize(u)


# ---------------------------------------------------------------------------
# literal term rewriting, used to cross-check ``normalize``

def bad_sites(u: Word, path=()):
    """Paths to nodes ``((v1 v2) w)`` with ``v2 > w``, in leftmost-innermost order."""
    if isinstance(u, Letter):
        return
    v, w = u
    yield from bad_sites(v, path + (0,))
    yield from bad_sites(w, path + (1,))
    if not isinstance(v, Letter) and sort_key(v[1]) > sort_key(w):
        yield path


def _rewrite_at(u: Word, path) -> list:
    if not path:
        (v1, v2), w = u
        return [(((v1, w), v2), 1), ((v1, (v2, w)), 1), ((v1, (w, v2)), -1)]
    left, right = u
    if path[0] == 0:
        return [((t, right), c) for t, c in _rewrite_at(left, path[1:])]
    return [((left, t), c) for t, c in _rewrite_at(right, path[1:])]


def rewrite(
    u: Word,
    choose: Optional[Callable[[list], int]] = None,
    max_steps: int = 10**6,
) -> Poly:
    """Normalize by applying the right-symmetry identity at chosen bad nodes.

    ``choose`` picks an index into the list of available (term, site) pairs;
    the default takes the first term and its leftmost-innermost site.
    """
    pending: Dict[Word, Fraction] = {u: Fraction(1)}
    done: Dict[GoodWord, Fraction] = {}
    for _ in range(max_steps):
        if not pending:
            return Poly(done)
        options = []
        for t in list(pending):
            sites = list(bad_sites(t))
            if not sites:
                c = pending.pop(t)
                _acc(done, [(decompose(t), c)], 1)
            else:
                options.extend((t, s) for s in sites)
        if not options:
            continue
        t, site = options[choose(options) if choose else 0]
        c = pending.pop(t)
        for t2, c2 in _rewrite_at(t, site):
            s = pending.get(t2, 0) + c * c2
            if s:
                pending[t2] = s
            else:
                pending.pop(t2, None)
    raise RuntimeError("rewriting did not terminate within max_steps")


def random_chooser(rng: random.Random) -> Callable[[list], int]:
    return lambda options: rng.randrange(len(options))


def poly_from_words(pairs: Iterable[Tuple[Word, object]]) -> Poly:
    """Sum of coefficient * normalize(word)."""
    out = Poly()
    for w, c in pairs:
        out = out + normalize(w).scale(c)
    return out
