import functools
import itertools

import pytest

from rsgs.oracle import count_good
from rsgs.terms import (
    EQ,
    GT,
    LT,
    Alphabet,
    GoodWord,
    NotGood,
    ResourceBound,
    all_words,
    compare,
    decompose,
    enumerate_good,
    good_below,
    is_good,
    sort_key,
    tree_form,
)


def words_upto(letters, n):
    return [w for k in range(1, n + 1) for w in all_words(letters, k)]


def naive_good(u):
    """Goodness straight from the inductive definition."""
    if not isinstance(u, tuple):
        return True
    v, w = u
    if not (naive_good(v) and naive_good(w)):
        return False
    if isinstance(v, tuple):
        return compare(v[1], w) != GT
    return True


def test_compare_examples():
    A = Alphabet.from_names(["e1", "e2"])
    e1, e2 = A
    assert compare(e2, e1) == GT
    x = Alphabet.from_names("x")[0]
    assert compare((x, x), x) == GT
    assert compare((x, (x, x)), ((x, x), x)) == LT


def test_compare_is_strict_total_order(ab):
    ws = words_upto(list(ab), 4)
    for u, v in itertools.product(ws, repeat=2):
        c = compare(u, v)
        assert (c == EQ) == (u == v)
        assert compare(v, u) == -c
    # every pair agrees with one linear arrangement, hence transitive
    chain = sorted(ws, key=functools.cmp_to_key(compare))
    for i, j in itertools.combinations(range(len(chain)), 2):
        assert compare(chain[i], chain[j]) == LT


def test_sort_key_agrees_with_compare(ab):
    ws = words_upto(list(ab), 5)
    for u, v in itertools.product(ws[:200], ws):
        k = (sort_key(u) > sort_key(v)) - (sort_key(u) < sort_key(v))
        assert k == compare(u, v)


def test_is_good_examples():
    x1, x2 = Alphabet.from_names(["x1", "x2"])
    assert is_good((x2, x1))
    assert is_good(((x2, x1), x1))
    assert not is_good(((x1, x2), x1))


def test_is_good_matches_definition(ab):
    for u in words_upto(list(ab), 5):
        assert is_good(u) == naive_good(u)


def test_length_two_words_are_good_and_bad_pattern(ab):
    for u in all_words(list(ab), 2):
        assert is_good(u)
    for u in words_upto(list(ab), 5):
        if isinstance(u, tuple) and isinstance(u[0], tuple) and compare(u[0][1], u[1]) == GT:
            assert not is_good(u)


def test_decompose_examples(ab):
    a, b = ab
    g = decompose(((a, a), b))
    assert g.head == a and [m.tree for m in g.mults] == [a, b]
    assert decompose(a).mults == ()
    g = decompose((a, ((a, a), b)))
    assert g.head == a and [m.tree for m in g.mults] == [((a, a), b)]
    with pytest.raises(NotGood):
        decompose(((a, b), a))


def test_tree_form_examples(ab):
    a, b = ab
    A, B = GoodWord(a), GoodWord(b)
    assert tree_form(A) == a
    assert tree_form(GoodWord(a, (A, B))) == ((a, a), b)
    aa = GoodWord(a, (A,))
    assert compare(b, (a, a)) == LT
    assert tree_form(GoodWord(a, (B, aa))) == ((a, b), (a, a))
    with pytest.raises(NotGood):
        GoodWord(a, (aa, B))


def test_round_trip(ab):
    for g in enumerate_good(ab, 6):
        assert is_good(tree_form(g))
        assert decompose(tree_form(g)) is g
        keys = [m.key for m in g.mults]
        assert keys == sorted(keys)


def test_enumerate_good_examples(ab):
    x = Alphabet.from_names("x")
    X = x[0]
    got = [g.tree for g in enumerate_good(x, 3)]
    assert set(got) == {X, (X, X), ((X, X), X), (X, (X, X))}
    # ascending: (x (x x)) < ((x x) x) since x < (x x) on the left
    assert got == [X, (X, X), (X, (X, X)), ((X, X), X)]
    assert len([g for g in enumerate_good(ab, 2) if g.length == 2]) == 4


def test_enumerate_matches_filter(ab):
    # head + multiset generation equals filtering every bracketing
    for n in range(1, 6):
        filtered = sorted((u for u in all_words(list(ab), n) if is_good(u)), key=sort_key)
        gen = [g.tree for g in enumerate_good(ab, n) if g.length == n]
        assert gen == filtered


@pytest.mark.parametrize("k,upto", [(1, 7), (2, 6), (3, 4)])
def test_counts_match_oracle(k, upto):
    A = Alphabet.from_names([f"x{i}" for i in range(k)])
    words = enumerate_good(A, upto)
    for n in range(1, upto + 1):
        assert sum(g.length == n for g in words) == count_good(k, n)


def test_enumerate_sorted_unique(abc):
    ws = enumerate_good(abc, 4)
    keys = [g.key for g in ws]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_enumerate_cap(ab):
    with pytest.raises(ResourceBound):
        enumerate_good(ab, 5, cap=20)


def test_good_below_examples(ab):
    E = Alphabet.from_names(["e1", "e2", "e3", "e4"])
    for j, x in enumerate(E):
        got = good_below(GoodWord(x), E)
        assert [g.head for g in got] == list(E)[:j]
    a, b = ab
    assert good_below(GoodWord(a), ab) == []
    assert [g.tree for g in good_below(GoodWord(a, (GoodWord(a),)), ab)] == [a, b]


def test_good_below_is_exact(ab):
    allw = enumerate_good(ab, 4)
    for bound in allw:
        expect = [g for g in allw if g.key < bound.key]
        assert good_below(bound, ab) == expect
