import pytest
from hypothesis import given, strategies as st

from parray_crystal.alignment import (
    Alignment, align, all_weak_alignments, is_weak_alignment, minimal_weak_alignments, pre_alignment,
)
from parray_crystal.errors import GuardExceeded
from parray_crystal.parray import PArray, enumerate_parrays
from parray_crystal.poset import antichain, chain, random_31free_poset


def cols(phi):
    return {x: phi.column(x) for x in phi.placement}


@pytest.fixture
def fig4(fig1):
    rest = [x for x in fig1.elements if x not in "bcdah"]
    return PArray(fig1, [["b", "c", "d"], ["a", "h"], fig1.sort_chain(rest)])


def test_pre_alignment_fig4(fig4):
    assert cols(pre_alignment(fig4, 1)) == {"b": 2, "c": 3, "d": 4, "a": 1, "h": 2}


def test_alignment_fig5(fig4):
    assert cols(align(fig4, 1)) == {"b": 2, "c": 3, "d": 4, "a": 1, "h": 3}


def test_q_alignment(Q):
    A = PArray(Q, [["c", "a"], ["d", "b"]], 4)
    assert cols(pre_alignment(A, 1)) == {"c": 1, "a": 2, "d": 1, "b": 2}
    assert align(A, 1) == pre_alignment(A, 1)


def test_empty_bottom_and_single_row():
    P = chain(3)
    A = PArray(P, [["x1", "x2", "x3"]], 2)
    assert cols(pre_alignment(A, 1)) == {"x1": 1, "x2": 2, "x3": 3}
    assert align(A, 1) == pre_alignment(A, 1)


def test_weak_alignment_predicate(fig4):
    assert is_weak_alignment(fig4, 1, align(fig4, 1))
    assert not is_weak_alignment(fig4, 1, pre_alignment(fig4, 1))
    assert not is_weak_alignment(fig4, 1, align(fig4, 1).shifted("d"))


def test_render(fig4):
    text = align(fig4, 1).render()
    assert text.splitlines()[0].split("|")[1].split() == [".", "b", "c", "d"]


def test_two_incomparable_share_column():
    P = antichain(2)
    A = PArray(P, [["x1"], ["x2"]])
    found = all_weak_alignments(A, 1)
    assert [cols(phi) for phi in found] == [{"x1": 1, "x2": 1}]


def test_single_element():
    A = PArray(antichain(1), [["x1"], []])
    assert [cols(phi) for phi in all_weak_alignments(A, 1)] == [{"x1": 1}]


def test_guard():
    P = antichain(1)
    C = chain(11)
    A = PArray(C, [C.elements[:6], C.elements[6:]])
    with pytest.raises(GuardExceeded):
        all_weak_alignments(A, 1)


def _lemma_checks(P, phi):
    by_col = phi.columns()
    bottom_only = [c for c, (t, b) in by_col.items() if t is None]
    top_only = [c for c, (t, b) in by_col.items() if b is None]
    assert all(b < t for b in bottom_only for t in top_only)
    for c, (t, b) in by_col.items():
        if (t is None) != (b is None):
            left = [x for x in phi.placement if phi.column(x) < c]
            right = [x for x in phi.placement if phi.column(x) >= c]
            assert all(P.lt(x, y) for x in left for y in right)


@given(st.integers(2, 6), st.integers(0, 3000), st.data())
def test_alignment_is_unique_minimum(n, seed, data):
    P = random_31free_poset(n, seed)
    A = data.draw(st.sampled_from(enumerate_parrays(P, n)))
    for r in range(1, n):
        phi = align(A, r)
        assert is_weak_alignment(A, r, phi)
        assert minimal_weak_alignments(A, r) == [phi]
        _lemma_checks(P, phi)
