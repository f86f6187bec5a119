"""Brute-force oracles: good-word counting and quotient dimensions.

Nothing here calls the reduction machinery of :mod:`rsgs.gs`; the quotient
dimensions come from exact Gaussian elimination on the truncated ideal, and
the word counts from a generating-function recurrence.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List

from .freers import Poly, mul_word_left, mul_word_right
from .terms import DEFAULT_CAP, ResourceBound, enumerate_good

DegreeTable = Dict[int, int]


@lru_cache(maxsize=None)
def _multiset_counts(k: int, n: int) -> tuple:
    """(T(1..n), M(0..n)): good words of each length and multisets of total size."""
    T = [0] * (n + 1)
    M = [1] + [0] * n
    # c[j] = sum_{d | j} d * T(d); Euler transform M(m) = 1/m sum_j c[j] M(m-j)
    c = [0] * (n + 1)
    for m in range(1, n + 1):
        T[m] = k * M[m - 1]
        for j in range(m, n + 1, m):
            c[j] += m * T[m]
        M[m] = sum(c[j] * M[m - j] for j in range(1, m + 1)) // m
    return tuple(T), tuple(M)


def count_good(num_letters: int, n: int) -> int:
    """Number of good words of length exactly ``n`` over ``num_letters`` letters."""
    if num_letters < 1 or n < 1:
        raise ValueError("num_letters and n must be >= 1")
    return _multiset_counts(num_letters, n)[0][n]


class Echelon:
    """Rows kept with pairwise distinct leading words (deg-lex maximal)."""

    def __init__(self):
        self.rows: Dict = {}

    def reduce(self, terms: dict) -> dict:
        v = dict(terms)
        while v:
            lead = max(v, key=lambda w: w.key)
            row = self.rows.get(lead)
            if row is None:
                return v
            c = v[lead]
            for w, a in row.items():
                s = v.get(w, 0) - c * a
                if s:
                    v[w] = s
                else:
                    del v[w]
        return v

    def add(self, terms: dict):
        """Insert a vector; returns the new monic row or None if dependent."""
        v = self.reduce(terms)
        if not v:
            return None
        lead = max(v, key=lambda w: w.key)
        inv = 1 / Fraction(v[lead])
        row = {w: a * inv for w, a in v.items()}
        self.rows[lead] = row
        return row

    def __len__(self):
        return len(self.rows)


def rank(vectors: Iterable[Poly], degree: int | None = None) -> int:
    ech = Echelon()
    for p in vectors:
        if degree is not None and any(w.length != degree for w in p.terms):
            raise ValueError(f"vector {p} is not homogeneous of degree {degree}")
        ech.add(p.terms)
    return len(ech)


def ideal_span(S, max_degree: int, cap: int = DEFAULT_CAP) -> Echelon:
    """Echelon basis of the ideal truncated to words of length ``<= max_degree``.

    Closes the relations under one-sided multiplication by good words while
    the product stays within the degree bound.
    """
    words = enumerate_good(S.alphabet, max(max_degree - 1, 1), cap)
    ech = Echelon()
    frontier: List[dict] = []
    for r in S.relations:
        if r.degree <= max_degree:
            row = ech.add(r.terms)
            if row is not None:
                frontier.append(row)
    while frontier:
        nxt = []
        for row in frontier:
            p = Poly(row)
            d = p.degree
            for w in words:
                if d + w.length > max_degree:
                    break
                for q in (mul_word_left(p, w), mul_word_right(w, p)):
                    new = ech.add(q.terms)
                    if new is not None:
                        nxt.append(new)
        frontier = nxt
    return ech


def quotient_dims(S, max_degree: int, cap: int = DEFAULT_CAP) -> DegreeTable:
    """Per-degree dimensions of the truncated quotient by exact elimination."""
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    total = count_good(len(S.alphabet), max_degree)
    if total > cap:
        raise ResourceBound(f"{total} good words of degree {max_degree} exceeds cap {cap}")
    ech = ideal_span(S, max_degree, cap)
    dims = {d: count_good(len(S.alphabet), d) for d in range(1, max_degree + 1)}
    for lead in ech.rows:
        dims[lead.length] -= 1
    return dims
