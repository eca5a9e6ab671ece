from hypothesis import given, strategies as st

from parray_crystal.chromatic import (
    chromatic_polynomial_value, chromatic_qsym, chromatic_sym, count_proper_colorings,
)
from parray_crystal.parray import enumerate_parrays, padded_weight
from parray_crystal.poset import antichain, build_poset, incomparability_graph, random_31free_poset, random_nuio
from parray_crystal.symfunc import SymPoly, schur, schur_expand, sym_from_weights


def test_one_vertex():
    G = incomparability_graph(antichain(1))
    for N in (1, 2, 3):
        assert chromatic_sym(G, N) == schur((1,), N)


def test_k2():
    G = incomparability_graph(antichain(2))
    assert chromatic_sym(G, 2) == 2 * schur((1, 1), 2)


def test_k2_qsym():
    P = build_poset(["1", "2"], [], {"1": 1, "2": 2})
    q = chromatic_qsym(incomparability_graph(P), 2)
    assert q.terms == {0: SymPoly(2, {(1, 1): 1}), 1: SymPoly(2, {(1, 1): 1})}


@given(st.integers(1, 6), st.integers(0, 3000), st.integers(1, 4))
def test_sum_over_arrays(n, seed, N):
    P = random_31free_poset(n, seed)
    G = incomparability_graph(P)
    f = chromatic_sym(G, N)
    assert f == sym_from_weights([padded_weight(A) for A in enumerate_parrays(P, N)], N)
    assert count_proper_colorings(G, N) == chromatic_polynomial_value(G, N)


@given(st.integers(1, 6), st.integers(0, 3000))
def test_qsym_specialises_and_is_positive(n, seed):
    P = random_nuio(n, seed)
    G = incomparability_graph(P)
    q = chromatic_qsym(G, n)
    assert q.at_q_equals_one() == chromatic_sym(G, n)
    for f in q.terms.values():
        assert all(c >= 0 for c in schur_expand(f).values())
