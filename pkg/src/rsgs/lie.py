"""Universal enveloping right-symmetric algebras of finite-dimensional Lie algebras.

For a Lie algebra with ordered basis e_1 < ... < e_n and brackets
[e_i, e_j] = sum_m c[i][j][m] e_m, the enveloping algebra is presented by

    f_ij = (e_i e_j) - (e_j e_i) - sum_m c[i][j][m] e_m,    i > j.

Indices are 0-based in this module.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from .freers import Poly
from .gs import CompositionReport, Presentation, degree_counts, irr, is_gs, reduce
from .terms import DEFAULT_CAP, Alphabet, GoodWord


class InvalidLie(ValueError):
    def __init__(self, violations):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class Violation:
    kind: str  # "antisymmetry" or "jacobi"
    indices: Tuple[int, ...]
    defect: Tuple[Tuple[int, Fraction], ...]

    def __str__(self):
        ids = ",".join(str(i + 1) for i in self.indices)
        vec = ", ".join(f"e{m + 1}: {c}" for m, c in self.defect)
        return f"{self.kind} fails on ({ids}): {{{vec}}}"


Vector = Dict[int, Fraction]


@dataclass
class LieAlgebra:
    """Structure constants ``constants[(i, j)] = {m: coeff}`` for ``[e_i, e_j]``."""

    basis: Tuple[str, ...]
    constants: Dict[Tuple[int, int], Vector] = field(default_factory=dict)

    @classmethod
    def from_lower(cls, basis: Sequence[str], lower: Mapping[Tuple[int, int], Mapping[int, object]]):
        """Fill the table from entries with ``i > j`` using antisymmetry."""
        table: Dict[Tuple[int, int], Vector] = {}
        for (i, j), vec in lower.items():
            if i <= j:
                raise ValueError(f"expected i > j, got ({i}, {j})")
            v = {m: Fraction(c) for m, c in vec.items() if Fraction(c)}
            table[(i, j)] = v
            table[(j, i)] = {m: -c for m, c in v.items()}
        return cls(tuple(basis), table)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bracket(self, i: int, j: int) -> Vector:
        return self.constants.get((i, j), {})

    def bracket_vec(self, u: Vector, v: Vector) -> Vector:
        out: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                for m, c in self.bracket(i, j).items():
                    out[m] = out.get(m, 0) + a * b * c
        return {m: c for m, c in out.items() if c}

    def scaled(self, c) -> "LieAlgebra":
        c = Fraction(c)
        return LieAlgebra(self.basis, {k: {m: c * x for m, x in v.items()} for k, v in self.constants.items()})

    def alphabet(self) -> Alphabet:
        return Alphabet.from_names(self.basis)


def validate(L: LieAlgebra) -> List[Violation]:
    out = []
    n = L.dim
    for (i, j) in L.constants:
        if not (0 <= i < n and 0 <= j < n) or any(not 0 <= m < n for m in L.constants[(i, j)]):
            out.append(Violation("range", (i, j), ()))
    for i in range(n):
        for j in range(i, n):
            a, b = L.bracket(i, j), L.bracket(j, i)
            defect = {m: a.get(m, 0) + b.get(m, 0) for m in set(a) | set(b)}
            defect = {m: c for m, c in defect.items() if c}
            if defect:
                out.append(Violation("antisymmetry", (i, j), tuple(sorted(defect.items()))))
    unit = lambda k: {k: Fraction(1)}
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        e_i, e_j, e_k = unit(i), unit(j), unit(k)
        total: Vector = {}
        for x, y, z in ((e_i, e_j, e_k), (e_j, e_k, e_i), (e_k, e_i, e_j)):
            for m, c in L.bracket_vec(L.bracket_vec(x, y), z).items():
                total[m] = total.get(m, 0) + c
        defect = tuple(sorted((m, c) for m, c in total.items() if c))
        if defect:
            out.append(Violation("jacobi", (i, j, k), defect))
    return out


def _require_valid(L: LieAlgebra):
    bad = validate(L)
    if bad:
        raise InvalidLie(bad)


def relation(L: LieAlgebra, i: int, j: int, alphabet: Alphabet | None = None) -> Poly:
    """``f_ij = (e_i e_j) - (e_j e_i) - [e_i, e_j]``."""
    A = alphabet or L.alphabet()
    e = [GoodWord(x, ()) for x in A]
    terms = {GoodWord(A[i], (e[j],)): 1, GoodWord(A[j], (e[i],)): -1}
    for m, c in L.bracket(i, j).items():
        terms[e[m]] = terms.get(e[m], 0) - c
    return Poly(terms)


def enveloping_presentation(L: LieAlgebra) -> Presentation:
    _require_valid(L)
    A = L.alphabet()
    rels = [relation(L, i, j, A) for i in range(L.dim) for j in range(i)]
    return Presentation(A, tuple(rels))


@dataclass
class TheoremReport:
    presentation: Presentation
    compositions: List[CompositionReport]
    passed: bool

    @property
    def checked(self) -> int:
        return len(self.compositions)

    def summary(self) -> str:
        verdict = "yes" if self.passed else "no"
        if self.passed:
            detail = "all f_ij*e_k -> 0" if self.compositions else "none needed"
        else:
            bad = sum(not r.trivial for r in self.compositions)
            detail = f"{bad} of {self.checked} nontrivial"
        return f"GS basis: {verdict}; compositions checked: {self.checked} ({detail})"


def verify_theorem(L: LieAlgebra, cap: int = DEFAULT_CAP) -> TheoremReport:
    S = enveloping_presentation(L)
    ok, reports = is_gs(S, cap)
    return TheoremReport(S, reports, ok)


@dataclass
class PBWBasis:
    words: List[GoodWord]
    counts: Dict[int, int]
    embedded: bool


def pbw_basis(L: LieAlgebra, max_degree: int, cap: int = DEFAULT_CAP) -> PBWBasis:
    S = enveloping_presentation(L)
    words = irr(S, max_degree, cap)
    letters = [w for w in words if w.length == 1]
    # distinct basis letters must stay distinct (and nonzero) in the quotient
    nfs = [reduce(Poly({w: 1}), S).normal_form for w in letters]
    embedded = len(letters) == L.dim and all(nfs) and len(set(nfs)) == len(nfs)
    return PBWBasis(words, degree_counts(words, max_degree), embedded)


# a few standard algebras, basis order = declaration order

def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.from_lower([f"e{i + 1}" for i in range(n)], {})


def heisenberg() -> LieAlgebra:
    # [e2, e1] = e3, e3 central
    return LieAlgebra.from_lower(["e1", "e2", "e3"], {(1, 0): {2: 1}})


def sl2() -> LieAlgebra:
    # basis e < f < h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
    return LieAlgebra.from_lower(["e", "f", "h"], {(1, 0): {2: -1}, (2, 0): {0: 2}, (2, 1): {1: -2}})


def affine2() -> LieAlgebra:
    # two-dimensional nonabelian: [e2, e1] = e1
    return LieAlgebra.from_lower(["e1", "e2"], {(1, 0): {0: 1}})
