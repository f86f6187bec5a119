from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rsgs.freers import Poly, normalize, poly_from_words
from rsgs.gs import degree_counts, irr, is_gs, reduce
from rsgs.lie import (
    InvalidLie,
    LieAlgebra,
    abelian,
    affine2,
    enveloping_presentation,
    heisenberg,
    pbw_basis,
    sl2,
    validate,
    verify_theorem,
)
from rsgs.oracle import quotient_dims
from rsgs.terms import decompose

LEVI = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}


def cross_product_algebra(n00, n01, n02, n11, n12, n22):
    """[e_i, e_j] = sum_l eps_ijl N_lk e_k with N symmetric (always a Lie algebra)."""
    N = [[n00, n01, n02], [n01, n11, n12], [n02, n12, n22]]
    lower = {}
    for i in range(3):
        for j in range(i):
            vec = {}
            for l in range(3):
                eps = LEVI.get((i, j, l), 0)
                for k in range(3):
                    vec[k] = vec.get(k, 0) + eps * N[l][k]
            lower[(i, j)] = vec
    return LieAlgebra.from_lower(["e1", "e2", "e3"], lower)


small = st.integers(-2, 2)
dim3 = st.builds(cross_product_algebra, small, small, small, small, small, small)
dim2 = st.builds(lambda x, y: LieAlgebra.from_lower(["e1", "e2"], {(1, 0): {0: x, 1: y}}), small, small)


def test_validate_examples():
    assert validate(abelian(3)) == []
    assert validate(sl2()) == []
    bad = LieAlgebra.from_lower(["e1", "e2", "e3"], {(1, 0): {2: 1}, (2, 0): {0: 1}})
    v = validate(bad)
    assert len(v) == 1
    assert v[0].kind == "jacobi" and v[0].indices == (0, 1, 2)
    # [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 + 0 + [e1,e2] = -e3
    assert v[0].defect == ((2, Fraction(-1)),)


def test_validate_antisymmetry():
    L = LieAlgebra(("e1", "e2"), {(1, 0): {0: Fraction(1)}, (0, 1): {0: Fraction(1)}})
    kinds = {v.kind for v in validate(L)}
    assert "antisymmetry" in kinds
    L = LieAlgebra(("e1",), {(0, 0): {0: Fraction(1)}})
    # [e1, e1] = e1 also breaks Jacobi on (1, 1, 1): 3 [[e1, e1], e1] = 3 e1
    assert [(v.kind, v.indices) for v in validate(L)] == [("antisymmetry", (0, 0)), ("jacobi", (0, 0, 0))]


def test_enveloping_presentation_examples():
    S = enveloping_presentation(abelian(2))
    e1, e2 = S.alphabet
    assert S.relations == (poly_from_words([((e2, e1), 1), ((e1, e2), -1)]),)
    S = enveloping_presentation(heisenberg())
    e1, e2, e3 = S.alphabet
    expect = {
        poly_from_words([((e2, e1), 1), ((e1, e2), -1), (e3, -1)]),
        poly_from_words([((e3, e1), 1), ((e1, e3), -1)]),
        poly_from_words([((e3, e2), 1), ((e2, e3), -1)]),
    }
    assert set(S.relations) == expect
    assert enveloping_presentation(abelian(1)).relations == ()
    with pytest.raises(InvalidLie):
        enveloping_presentation(LieAlgebra.from_lower(["e1", "e2", "e3"], {(1, 0): {2: 1}, (2, 0): {0: 1}}))


def test_relation_leads_are_structural():
    for L in (sl2(), heisenberg(), affine2(), abelian(3)):
        S = enveloping_presentation(L)
        A = S.alphabet
        leads = [r.leading() for r in S.relations]
        assert leads == [decompose((A[i], A[j])) for i in range(L.dim) for j in range(i)]
        assert all(r.lc() == 1 and r.leading().length == 2 for r in S.relations)


def test_verify_theorem_examples():
    rep = verify_theorem(sl2())
    assert rep.passed and rep.checked == 1
    assert all(r.trivial for r in rep.compositions)
    rep = verify_theorem(abelian(2))
    assert rep.passed and rep.checked == 0
    rep = verify_theorem(heisenberg())
    (comp,) = rep.compositions
    assert comp.sources == (2,) and comp.multiplier.tree == rep.presentation.alphabet[0]
    assert comp.trivial


def test_compositions_are_f_ij_e_k():
    # one composition f_ij * e_k per triple i > j > k
    L = abelian(4)
    rep = verify_theorem(L)
    S = rep.presentation
    seen = set()
    for r in rep.compositions:
        lead = S.relations[r.sources[0]].leading()
        i, j, k = lead.head.rank, lead.mults[0].head.rank, r.multiplier.head.rank
        assert r.kind == "rightmul" and i > j > k
        seen.add((i, j, k))
    assert len(seen) == 4 == len(rep.compositions)


@settings(max_examples=40)
@given(st.one_of(dim2, dim3))
def test_theorem_holds_for_small_algebras(L):
    assert validate(L) == []
    assert verify_theorem(L).passed


@settings(max_examples=20)
@given(st.one_of(dim2, dim3), st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool))
def test_scaling_robustness(L, c):
    M = L.scaled(c)
    assert validate(M) == []
    assert verify_theorem(M).passed == verify_theorem(L).passed


@settings(max_examples=8)
@given(st.one_of(dim2, dim3))
def test_pbw_counts_match_oracle(L):
    S = enveloping_presentation(L)
    assert pbw_basis(L, 4).counts == quotient_dims(S, 4)


def test_pbw_basis_examples():
    basis = pbw_basis(abelian(2), 2)
    e1, e2 = abelian(2).alphabet()
    assert [w.tree for w in basis.words if w.length == 2] == [(e1, e1), (e1, e2), (e2, e2)]
    for L in (sl2(), heisenberg(), affine2(), abelian(3)):
        b = pbw_basis(L, 1)
        assert b.counts == {1: L.dim} and b.embedded
    assert pbw_basis(abelian(1), 5).counts == {1: 1, 2: 1, 3: 2, 4: 4, 5: 9}


def test_sl2_word_problem():
    S = enveloping_presentation(sl2())
    e, f, h = S.alphabet
    assert is_gs(S)[0]
    # (e f) = (f e) + h and (h e) = (e h) + 2e in the quotient
    assert not reduce(normalize((e, f)) - normalize((f, e)) - normalize(h), S).normal_form
    assert not reduce(normalize((h, e)) - normalize((e, h)) - Poly({decompose(e): 2}), S).normal_form
    assert degree_counts(irr(S, 2), 2) == {1: 3, 2: 6}
