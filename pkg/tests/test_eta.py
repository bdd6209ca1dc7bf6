import pytest
from hypothesis import given
from hypothesis import strategies as st

from dcamb.affine import (
    AffinePermutation,
    act_word,
    delta,
    reduce_index,
    reduced_word,
    root_sub,
    simple_root,
    support,
)
from dcamb.cyclic import Orientation, enumerate_omega_sortables, labels_omega
from dcamb.eta import (
    CASE_A,
    VertexClass,
    check_delta_identity,
    classify,
    eta,
    factor,
    funny_indices,
    funny_roots,
    glue_labels,
    interval_word,
    rotate,
    rotate_root,
)
from dcamb.sorting import CoxeterWord, antipode_finite, first_block_tail


def P(n, *word):
    return AffinePermutation.from_word(n, word)


OM3 = Orientation(3)


def test_classify_examples():
    assert classify(OM3, P(3)) == CASE_A
    assert classify(OM3, P(3, 1)) == CASE_A
    assert classify(OM3, P(3, 1, 2)) == VertexClass(3)
    assert str(classify(OM3, P(3, 1, 2))) == "B(3)" and str(CASE_A) == "A"
    with pytest.raises(ValueError):
        classify(OM3, P(3, 2, 1))


def test_interval_words():
    assert interval_word(4, 2, 2).letters == (2,)
    assert interval_word(4, 2, 4).letters == (2, 3, 4)
    assert interval_word(4, 3, 5).letters == (3, 4, 1)
    assert interval_word(4, 6, 4).letters == (2, 1, 4)
    with pytest.raises(ValueError):
        interval_word(3, 1, 5)


@given(st.integers(3, 6).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), max_size=9))), st.integers(-4, 4))
def test_rotation_relabels_letters(nw, k):
    n, word = nw
    w = AffinePermutation.from_word(n, word)
    shifted = AffinePermutation.from_word(n, [reduce_index(i + k, n) for i in word])
    assert rotate(w, k) == shifted
    beta = act_word(word, simple_root(n, 1))
    assert rotate_root(beta, k) == act_word([reduce_index(i + k, n) for i in word], simple_root(n, 1 + k))


def test_eta_examples():
    assert eta(OM3, P(3, 1, 2)) == P(3, 3, 2, 3)
    assert eta(OM3, P(3, 1, 2, 1)) == P(3, 3, 2)
    assert eta(OM3, P(3, 2, 3)) == P(3, 1, 3, 1)
    with pytest.raises(ValueError):
        eta(OM3, P(3, 1))
    with pytest.raises(ValueError):
        eta(OM3.opposite(), P(3, 3, 2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_eta_is_a_bijection_onto_boundary(n):
    om, neg = Orientation(n), Orientation(n, True)
    boundary = [v for v in enumerate_omega_sortables(om) if classify(om, v).is_boundary]
    targets = {v for v in enumerate_omega_sortables(neg) if len(support(v)) == n - 1}
    images = [eta(om, v) for v in boundary]
    assert len(set(images)) == len(images) == len(targets)
    assert set(images) == targets
    for v, vp in zip(boundary, images):
        (missing_p,) = set(range(1, n + 1)) - support(vp)
        assert missing_p == reduce_index(classify(om, v).missing + 1, n)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_glued_labels_form_a_basis_with_n_minus_2_overlap(n):
    om, neg = Orientation(n), Orientation(n, True)
    for v in enumerate_omega_sortables(om):
        if not classify(om, v).is_boundary:
            continue
        own = set(labels_omega(om, v).values())
        other = {tuple(-x for x in b) for b in labels_omega(neg, eta(om, v)).values()}
        assert len(own & other) == n - 2
        assert len(glue_labels(om, v)) == n


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_funny_roots_differ_by_delta(n):
    om = Orientation(n)
    for v in enumerate_omega_sortables(om):
        if classify(om, v).is_boundary:
            beta, gamma = funny_roots(om, v)
            assert root_sub(gamma, beta) == delta(n)
            assert check_delta_identity(om, v)


def test_funny_roots_example():
    assert funny_roots(OM3, P(3, 1, 2)) == ((-1, -1, 0), (0, 0, 1))
    assert funny_indices(OM3, P(3, 1, 2)) == (2, 1)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_funny_indices_agree_with_first_block_tails(n):
    # t_j = s_{i+j}, relabelled to a linear word t_1 ... t_{n-2} in rank n
    om = Orientation(n)
    for v in enumerate_omega_sortables(om):
        if not classify(om, v).is_boundary:
            continue
        i, u = factor(om, v)
        shift = -i
        c = CoxeterWord(n, tuple(range(1, n - 1)))
        u_lin = rotate(u, shift)
        up = antipode_finite(c, u_lin)
        g = first_block_tail(c, u_lin)
        g_prime = first_block_tail(c.reversed(), up, reverse=True)
        fg, fg_prime = funny_indices(om, v)
        assert (fg, fg_prime) == (g, g_prime)
        assert g_prime == g - 1


def test_factor_lengths_add():
    for v in enumerate_omega_sortables(Orientation(4)):
        if classify(Orientation(4), v).is_boundary:
            i, u = factor(Orientation(4), v)
            assert len(reduced_word(u)) + 3 == len(reduced_word(v))
