from itertools import combinations

import pytest

from dcamb.affine import (
    AffinePermutation,
    cover_reflections,
    is_negative,
    is_positive,
    length,
    parabolic_elements,
    root_neg,
    support,
    weak_leq,
)
from dcamb.errors import InvariantViolation
from dcamb.exact import determinant, transpose
from dcamb.sorting import (
    CoxeterWord,
    antipode_finite,
    enumerate_sortables,
    first_block_tail,
    is_sortable,
    label,
    labels,
    pi_down,
    restrict,
    sorting_word,
)


def P(n, *word):
    return AffinePermutation.from_word(n, word)


def linear(k):
    """t_1 ... t_k inside rank k + 1 (at least 3)."""
    return CoxeterWord(max(k + 1, 3), tuple(range(1, k + 1)))


C12 = CoxeterWord(3, (1, 2))


def test_coxeter_word_validation():
    with pytest.raises(ValueError):
        CoxeterWord(3, (1, 1))
    with pytest.raises(ValueError):
        CoxeterWord(3, (1, 2, 3))
    assert CoxeterWord(3, (4, 2)).letters == (1, 2)
    assert str(C12.reversed()) == "s2s1"


def test_sorting_word_of_identity():
    sw = sorting_word(C12, P(3))
    assert sw.letters == () and sw.blocks == ()
    assert sw.skips == {1: 0, 2: 0}


def test_sorting_word_s1s2s1():
    sw = sorting_word(C12, P(3, 1, 2, 1))
    assert sw.letters == (1, 2, 1)
    assert sw.blocks == ((1, 2), (1,))
    assert sw.block_boundaries == (2, 3)
    assert is_sortable(C12, P(3, 1, 2, 1))


def test_sorting_word_s2s1_is_not_sortable():
    sw = sorting_word(C12, P(3, 2, 1))
    assert sw.letters == (2, 1) and sw.blocks == ((2,), (1,))
    assert not is_sortable(C12, P(3, 2, 1))


def test_support_outside_word_is_an_error():
    with pytest.raises(ValueError):
        sorting_word(C12, P(3, 3))


def _leftmost_positions(c, w):
    """Lexicographically first positions in c^m spelling a reduced word for w."""
    ell = length(w)
    stream = list(c.letters) * max(ell, 1)
    for pos in combinations(range(len(stream)), ell):
        if P(c.n, *(stream[p] for p in pos)) == w:
            return [stream[p] for p in pos]
    raise AssertionError("no subword found")


@pytest.mark.parametrize("c", [CoxeterWord(3, (1, 2)), CoxeterWord(3, (2, 1)), CoxeterWord(4, (2, 1, 3)), linear(3)])
def test_greedy_scan_is_leftmost_subword(c):
    for w in parabolic_elements(c.n, c.letter_set):
        if length(w) > 5:
            continue
        sw = sorting_word(c, w)
        assert list(sw.letters) == _leftmost_positions(c, w)
        assert length(P(c.n, *sw.letters)) == len(sw.letters) == length(w)


@pytest.mark.parametrize("k,count", [(1, 2), (2, 5), (3, 14), (4, 42), (5, 132)])
def test_catalan_counts(k, count):
    assert len(enumerate_sortables(linear(k))) == count


def test_a2_sortables():
    names = {str(w) for w in enumerate_sortables(C12)}
    assert names == {"e", "s1", "s2", "s1.s2", "s1.s2.s1"}


def test_labels_of_t1():
    assert set(labels(C12, P(3, 1)).values()) == {(-1, 0, 0), (1, 1, 0)}
    assert label(C12, P(3, 1), 2) == (1, 1, 0)
    with pytest.raises(ValueError):
        label(C12, P(3, 1), 3)
    with pytest.raises(ValueError):
        labels(C12, P(3, 2, 1))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_labels_are_unimodular_bases(k):
    c = linear(k)
    for v in enumerate_sortables(c):
        lab = list(labels(c, v).values())
        assert abs(determinant(transpose([b[:k] for b in lab]))) == 1
        assert all(is_positive(b) or is_negative(b) for b in lab)


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_negative_labels_are_cover_reflections(k):
    c = linear(k)
    for v in enumerate_sortables(c):
        neg = {b for b in labels(c, v).values() if is_negative(b)}
        assert neg == {root_neg(b) for b in cover_reflections(v)}


def test_labels_outside_the_support_are_positive():
    c = linear(4)
    for v in enumerate_sortables(c):
        lab = labels(c, v)
        for r in c.letter_set - support(v):
            assert is_positive(lab[r])


@pytest.mark.parametrize("c1,c2", [((1, 3, 2), (3, 1, 2)), ((2, 1, 4), (2, 4, 1)), ((1, 4, 3), (4, 1, 3))])
def test_commuting_letters_do_not_change_labels(c1, c2):
    a, b = CoxeterWord(5, c1), CoxeterWord(5, c2)
    assert set(enumerate_sortables(a)) == set(enumerate_sortables(b))
    for v in enumerate_sortables(a):
        assert labels(a, v) == labels(b, v)


@pytest.mark.parametrize("word", [(1, 2, 3, 4), (3, 1, 2, 4), (2, 4, 1, 3), (4, 3, 2, 1)])
def test_restriction_keeps_sortability_and_labels(word):
    c = CoxeterWord(5, word)
    for drop in c.letters:
        J = c.letter_set - {drop}
        cr = restrict(c, J)
        for v in parabolic_elements(5, J):
            assert is_sortable(c, v) == is_sortable(cr, v)
            if is_sortable(c, v):
                full = labels(c, v)
                assert labels(cr, v) == {r: full[r] for r in J}


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_full_support_sortables_factor_through_c(k):
    c = linear(k)
    inner = CoxeterWord(k + 1, tuple(range(1, k)))
    cel = c.element()
    for v in enumerate_sortables(c):
        if support(v) != c.letter_set:
            continue
        u = cel.inverse() * v
        assert length(u) + k == length(v)
        assert u in set(enumerate_sortables(inner))


@pytest.mark.parametrize("k", [2, 3, 4])
def test_pi_down_is_the_maximum_and_order_preserving(k):
    c = linear(k)
    elems = parabolic_elements(k + 1, c.letter_set)
    sortables = enumerate_sortables(c)
    image = {w: pi_down(c, w) for w in elems}
    for w, p in image.items():
        assert is_sortable(c, p) and weak_leq(p, w)
        assert all(weak_leq(v, p) for v in sortables if weak_leq(v, w))
        assert pi_down(c, p) == p
    if k <= 3:
        for x in elems:
            for y in elems:
                if weak_leq(x, y):
                    assert weak_leq(image[x], image[y])


def test_pi_down_examples():
    assert pi_down(C12, P(3, 2, 1)) == P(3, 2)
    c21 = C12.reversed()
    assert pi_down(c21, P(3, 2, 1)) == P(3, 2, 1)


def test_antipode_examples():
    c1 = CoxeterWord(3, (1,))
    assert antipode_finite(c1, P(3)) == P(3, 1)
    assert antipode_finite(C12, P(3, 1)) == P(3, 2, 1)
    assert antipode_finite(C12, P(3, 1, 2, 1)) == P(3)
    with pytest.raises(ValueError):
        antipode_finite(C12, P(3, 2, 1))


@pytest.mark.parametrize("word", [(1, 2), (1, 2, 3), (2, 1, 3), (1, 2, 3, 4), (2, 4, 1, 3), (1, 2, 3, 4, 5)])
def test_antipode_is_a_label_negating_bijection(word):
    c = CoxeterWord(len(word) + 1, word)
    images = {}
    for u in enumerate_sortables(c):
        up = antipode_finite(c, u)
        assert is_sortable(c.reversed(), up)
        assert set(labels(c, u).values()) == {root_neg(b) for b in labels(c.reversed(), up).values()}
        images[u] = up
    assert set(images.values()) == set(enumerate_sortables(c.reversed()))


def test_first_block_tail_examples():
    assert first_block_tail(linear(2), P(3)) == 3
    assert first_block_tail(linear(2), P(3, 2)) == 2
    assert first_block_tail(linear(3), P(4, 1, 3)) == 3
    assert first_block_tail(linear(3), P(4, 1, 2, 3)) == 1
    rev = linear(3).reversed()
    assert first_block_tail(rev, P(4), reverse=True) == 0
    assert first_block_tail(rev, P(4, 2, 1), reverse=True) == 2
    assert first_block_tail(rev, P(4, 3), reverse=True) == 0
    with pytest.raises(ValueError):
        first_block_tail(linear(2), P(3, 2, 1))


def test_pi_down_detects_non_unique_maximum(monkeypatch):
    import dcamb.sorting as sorting

    fake = (P(3), P(3, 1), P(3, 2))
    monkeypatch.setattr(sorting, "enumerate_sortables", lambda c: fake)
    with pytest.raises(InvariantViolation):
        sorting.pi_down(C12, P(3, 1, 2, 1))
