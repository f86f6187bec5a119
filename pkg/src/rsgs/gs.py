"""Reduction modulo relations, compositions, GS-basis checks and completion.

Subwords of a good word are its subtrees.  A path is a tuple of ``L``/``R``
steps from the root of the tree form.  Every subtree of a good word is
itself good, so occurrences and substitutions are computed directly on the
canonical head + multiplier form.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .freers import Poly, mul_word_left, mul_word_right, multiply
from .terms import DEFAULT_CAP, Alphabet, GoodWord, good_below, enumerate_good

log = logging.getLogger(__name__)

L, R = "L", "R"
Path = Tuple[str, ...]


class PatternMismatch(ValueError):
    pass


class NotConfluent(RuntimeError):
    """The relation set has not been shown to be a Groebner-Shirshov basis."""


@dataclass(frozen=True)
class Occurrence:
    host: GoodWord
    path: Path = ()

    def subword(self) -> GoodWord:
        return subword_at(self.host, self.path)


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relations: Tuple[Poly, ...] = ()

    def __post_init__(self):
        rels = tuple(self.relations)
        for r in rels:
            if not r:
                raise ValueError("relations must be nonzero")
            if r.lc() != 1:
                raise ValueError(f"relation {r} is not monic")
        object.__setattr__(self, "relations", rels)

    @classmethod
    def from_polys(cls, alphabet: Alphabet, polys: Sequence[Poly]) -> "Presentation":
        """Build a presentation, dropping zeros and making every relation monic."""
        return cls(alphabet, tuple(p.monic() for p in polys if p))

    def leads(self) -> List[GoodWord]:
        return [r.leading() for r in self.relations]


@dataclass
class Step:
    relation: int
    occurrence: Occurrence
    coefficient: Fraction


@dataclass
class Reduction:
    normal_form: Poly
    steps: List[Step]

    def __iter__(self):
        return iter((self.normal_form, self.steps))


@dataclass
class CompositionReport:
    kind: str  # "inclusion" or "rightmul"
    sources: Tuple[int, ...]
    multiplier: Optional[GoodWord]
    raw: Poly
    normal_form: Poly
    steps: List[Step] = field(default_factory=list, repr=False)
    path: Path = ()

    @property
    def trivial(self) -> bool:
        return not self.normal_form

    def describe(self, names=None) -> str:
        def rel(i):
            return f"s{i + 1}" if names is None else names[i]

        if self.kind == "inclusion":
            i, j = self.sources
            where = "".join(self.path) or "root"
            return f"({rel(i)}, {rel(j)}) at {where}"
        return f"{rel(self.sources[0])} * {self.multiplier}"


# ---------------------------------------------------------------------------
# subwords

def subwords(g: GoodWord) -> Iterator[Tuple[Path, GoodWord]]:
    """All (path, subword) pairs of ``g`` in preorder (outermost, then left)."""
    yield from _spine(g, len(g.mults), ())


def _spine(g: GoodWord, k: int, path: Path):
    yield path, g.prefix(k)
    if k:
        yield from _spine(g, k - 1, path + (L,))
        yield from _spine(g.mults[k - 1], len(g.mults[k - 1].mults), path + (R,))


def subword_at(g: GoodWord, path: Path) -> GoodWord:
    node, k = g, len(g.mults)
    for step in path:
        if k == 0:
            raise PatternMismatch(f"path {''.join(path)} leaves {g}")
        if step == L:
            k -= 1
        else:
            node = node.mults[k - 1]
            k = len(node.mults)
    return node.prefix(k)


def _context(g: GoodWord, path: Path) -> List[Tuple[str, GoodWord]]:
    """Siblings met along ``path``, root first."""
    frames = []
    node, k = g, len(g.mults)
    for step in path:
        if k == 0:
            raise PatternMismatch(f"path {''.join(path)} leaves {g}")
        if step == L:
            frames.append((L, node.mults[k - 1]))
            k -= 1
        else:
            frames.append((R, node.prefix(k - 1)))
            node = node.mults[k - 1]
            k = len(node.mults)
    return frames


def occurrences(host: GoodWord, pattern: GoodWord) -> List[Occurrence]:
    if pattern.length > host.length:
        return []
    return [Occurrence(host, p) for p, w in subwords(host) if w is pattern]


def substitute(occ: Occurrence, g: Poly) -> Poly:
    """Evaluate the S-word obtained by plugging ``g`` in at ``occ``."""
    if occ.subword() is not g.leading():
        raise PatternMismatch(f"{occ.subword()} at {''.join(occ.path) or 'root'} is not {g.leading()}")
    p = g
    for side, sib in reversed(_context(occ.host, occ.path)):
        p = mul_word_left(p, sib) if side == L else mul_word_right(sib, p)
    return p


# ---------------------------------------------------------------------------
# reduction

def _lead_index(S: Presentation) -> dict:
    table = {}
    for i, r in enumerate(S.relations):
        table.setdefault(r.leading(), i)
    return table


def find_reducer(w: GoodWord, table: dict) -> Optional[Tuple[int, Path]]:
    """Leftmost-outermost subword of ``w`` that is a relation's leading word."""
    for path, sub in subwords(w):
        i = table.get(sub)
        if i is not None:
            return i, path
    return None


def reduce(f: Poly, S: Presentation, _table: dict | None = None) -> Reduction:
    """Normal form of ``f`` modulo ``S`` together with the reduction certificate.

    ``f - normal_form == sum(c * substitute(occ, S[i]) for i, occ, c in steps)``.
    """
    table = _lead_index(S) if _table is None else _table
    rest = dict(f.terms)
    nf = {}
    steps: List[Step] = []
    while rest:
        w = max(rest, key=lambda t: t.key)
        c = rest[w]
        hit = find_reducer(w, table)
        if hit is None:
            nf[w] = c
            del rest[w]
            continue
        i, path = hit
        occ = Occurrence(w, path)
        steps.append(Step(i, occ, c))
        for t, v in substitute(occ, S.relations[i]).terms.items():
            s = rest.get(t, 0) - c * v
            if s:
                rest[t] = s
            else:
                del rest[t]
    return Reduction(Poly._raw(nf), steps)


def replay(steps: Sequence[Step], S: Presentation) -> Poly:
    """Sum of the substituted S-words recorded in a reduction certificate."""
    out = Poly()
    for st in steps:
        out = out + substitute(st.occurrence, S.relations[st.relation]).scale(st.coefficient)
    return out


def is_irreducible(w: GoodWord, S: Presentation) -> bool:
    return find_reducer(w, _lead_index(S)) is None


# ---------------------------------------------------------------------------
# compositions

def inclusion_compositions(
    f: Poly, g: Poly, S: Presentation, sources: Tuple[int, int] = (-1, -1)
) -> List[CompositionReport]:
    """Compositions ``f - [a g b]`` for each occurrence of lead(g) in lead(f).

    The root occurrence is skipped when ``f`` and ``g`` are the same relation.
    """
    same = sources[0] == sources[1] and sources[0] >= 0
    out = []
    table = _lead_index(S)
    for occ in occurrences(f.leading(), g.leading()):
        if same and not occ.path:
            continue
        raw = f - substitute(occ, g)
        red = reduce(raw, S, table)
        out.append(CompositionReport("inclusion", sources, None, raw, red.normal_form, red.steps, occ.path))
    return out


def rightmul_compositions(
    f: Poly, alphabet: Alphabet, S: Presentation, source: int = -1, cap: int = DEFAULT_CAP
) -> List[CompositionReport]:
    """Compositions ``f * w`` for every ``w`` below the last multiplier of lead(f)."""
    lead = f.leading()
    if not lead.mults:
        return []
    table = _lead_index(S)
    out = []
    for w in good_below(lead.mults[-1], alphabet, cap):
        raw = mul_word_left(f, w)
        red = reduce(raw, S, table)
        out.append(CompositionReport("rightmul", (source,), w, raw, red.normal_form, red.steps))
    return out


def compositions(S: Presentation, cap: int = DEFAULT_CAP) -> List[CompositionReport]:
    reports = []
    rels = S.relations
    for i, f in enumerate(rels):
        for j, g in enumerate(rels):
            reports.extend(inclusion_compositions(f, g, S, (i, j)))
    for i, f in enumerate(rels):
        reports.extend(rightmul_compositions(f, S.alphabet, S, i, cap))
    return reports


def is_gs(S: Presentation, cap: int = DEFAULT_CAP) -> Tuple[bool, List[CompositionReport]]:
    reports = compositions(S, cap)
    return all(r.trivial for r in reports), reports


@lru_cache(maxsize=64)
def _verified(S: Presentation) -> bool:
    return is_gs(S)[0]


def nf_equal(f: Poly, g: Poly, S: Presentation) -> bool:
    """Decide ``f == g`` in the quotient by comparing normal forms."""
    if not _verified(S):
        raise NotConfluent("relations are not a Groebner-Shirshov basis; run complete() first")
    return not reduce(f - g, S).normal_form


# ---------------------------------------------------------------------------
# completion

def interreduce(S: Presentation) -> Presentation:
    """Reduce every relation by the others until nothing changes."""
    rels = sorted((r.monic() for r in S.relations if r), key=lambda r: r.leading().key)
    changed = True
    while changed:
        changed = False
        for i, r in enumerate(rels):
            others = Presentation(S.alphabet, tuple(rels[:i] + rels[i + 1:]))
            nf = reduce(r, others).normal_form
            if nf != r:
                changed = True
                if nf:
                    rels[i] = nf.monic()
                else:
                    del rels[i]
                rels.sort(key=lambda p: p.leading().key)
                break
    return Presentation(S.alphabet, tuple(rels))


COMPLETE, BOUND_REACHED = "Complete", "BoundReached"


def complete(S: Presentation, max_degree: int, cap: int = DEFAULT_CAP) -> Tuple[Presentation, str]:
    """Add normal forms of nontrivial compositions until every one is trivial.

    Only relations of degree ``<= max_degree`` are added.  Returns the new
    presentation and ``"Complete"`` or ``"BoundReached"``.
    """
    cur = interreduce(S)
    while True:
        reports = compositions(cur, cap)
        pending = sorted(
            (r.normal_form for r in reports if not r.trivial),
            key=lambda p: p.leading().key,
        )
        if not pending:
            return cur, COMPLETE
        small = [p for p in pending if p.degree <= max_degree]
        if not small:
            log.info("completion stopped: %d compositions above degree %d", len(pending), max_degree)
            return cur, BOUND_REACHED
        new = small[0].monic()
        log.debug("adding relation %s", new)
        cur = interreduce(Presentation(cur.alphabet, cur.relations + (new,)))


# ---------------------------------------------------------------------------
# monomial bases

def irr(S: Presentation, max_degree: int, cap: int = DEFAULT_CAP) -> List[GoodWord]:
    table = _lead_index(S)
    return [w for w in enumerate_good(S.alphabet, max_degree, cap) if find_reducer(w, table) is None]


def degree_counts(words, max_degree: int) -> dict:
    counts = {d: 0 for d in range(1, max_degree + 1)}
    for w in words:
        counts[w.length] += 1
    return counts
