import pytest
from hypothesis import given, strategies as st

from parray_crystal.alignment import align
from parray_crystal.crystal import (
    all_components, character, component_of, flipped_set, is_highest_weight, lower, raise_,
)
from parray_crystal.errors import CrystalError, OperatorUndefined
from parray_crystal.parray import PArray, enumerate_parrays, is_p_tableau, padded_weight
from parray_crystal.poset import antichain, random_nuio, random_31free_poset
from parray_crystal.symfunc import SymPoly, schur, schur_expand


def rows(*rs):
    return [list(r) for r in rs]


@pytest.fixture
def top(Q):
    return PArray(Q, [["c", "a"], ["d", "b"]], 4)


def test_fig8_lowering_edges(Q, top):
    b = lower(top, 2)
    assert b == PArray(Q, [["c", "a"], ["b"], ["d"]], 4)
    assert lower(b, 1) == PArray(Q, [["b"], ["c", "a"], ["d"]], 4)
    source = PArray(Q, [["c", "a"], [], ["d", "b"]], 4)
    assert lower(source, 1) == PArray(Q, [["a"], ["c"], ["d", "b"]], 4)


def test_fig8_raising(Q, top):
    assert raise_(PArray(Q, [["c", "a"], ["b"], ["d"]], 4), 2) == top


def test_fig2_tableau_is_highest(fig1):
    T = PArray(fig1, [list("abcdf"), list("ghe")], 8)
    assert all(raise_(T, r) is None for r in range(1, 8))


def test_singleton_component():
    P = antichain(1)
    A = PArray(P, [["x1"]], 2)
    assert raise_(A, 1) is None
    C = component_of(A)
    assert set(C.vertices) == {A, PArray(P, [[], ["x1"]], 2)}
    assert len(C.edges) == 1 and C.edges[0][1] == 1
    assert character(C) == schur((1,), 2)


def test_operator_range(top):
    with pytest.raises(CrystalError):
        lower(top, 4)
    with pytest.raises(CrystalError):
        raise_(top, 0)


def test_fig8_component(Q, top):
    C = component_of(top)
    assert len(C) == 35
    assert {T.key() for T in C.roots} == {(("c", "a"), ("d", "b")), (("d", "a"), ("b",), ("c",))}
    assert schur_expand(character(C)) == {(2, 2): 1, (2, 1, 1): 1}


def test_flipped_set_examples(Q, top):
    moved = flipped_set(top, 2, "lower")
    assert moved == {"d"}
    with pytest.raises(OperatorUndefined):
        flipped_set(top, 1, "raise")


def test_character_sum(Q):
    from parray_crystal.chromatic import chromatic_sym
    from parray_crystal.poset import incomparability_graph

    total = SymPoly(4)
    for C in all_components(Q, 4):
        total = total + character(C)
    assert total == chromatic_sym(incomparability_graph(Q), 4)


def _posets():
    return st.builds(random_31free_poset, st.integers(1, 6), st.integers(0, 5000))


@given(_posets(), st.data())
def test_crystal_axioms(P, data):
    N = len(P)
    A = data.draw(st.sampled_from(enumerate_parrays(P, N)))
    assert is_highest_weight(A) == is_p_tableau(A)
    w = padded_weight(A)
    for r in range(1, N):
        B = lower(A, r)
        if B is not None:
            assert raise_(B, r) == A
            assert padded_weight(B)[r - 1] == w[r - 1] - 1 and padded_weight(B)[r] == w[r] + 1
            phi, psi = align(A, r), align(B, r)
            assert all(phi.column(x) == psi.column(x) for x in phi.placement)
            flipped_set(A, r, "lower")
        C = raise_(A, r)
        if C is not None:
            assert lower(C, r) == A
            flipped_set(A, r, "raise")
        k = w[r - 1] - w[r]
        X = A
        for _ in range(max(k, 0)):
            X = lower(X, r)
        if k > 0:
            assert padded_weight(X)[r - 1] == w[r] and padded_weight(X)[r] == w[r - 1]


@given(st.integers(2, 6), st.integers(0, 5000), st.data())
def test_nuio_flips_are_label_monotone_paths(n, seed, data):
    # along a flipped path consecutive incomparable elements alternate rows
    P = random_nuio(n, seed)
    A = data.draw(st.sampled_from(enumerate_parrays(P, n)))
    for r in range(1, n):
        if lower(A, r) is None:
            continue
        moved = sorted(flipped_set(A, r, "lower"), key=P.labels.__getitem__)
        for u, v in zip(moved, moved[1:]):
            assert P.incomparable(u, v)
            assert A.row_of(u) != A.row_of(v)
