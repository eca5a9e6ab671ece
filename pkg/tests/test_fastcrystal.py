from hypothesis import given, strategies as st

from parray_crystal.crystal import all_components
from parray_crystal.fastcrystal import fast_components, operator_tables, tableau_expansion
from parray_crystal.poset import random_31free_poset
from parray_crystal.positivity import tableau_counts


def signature(roots, size, expansion):
    return (sorted(T.key() for T in roots), size, sorted(expansion.items()))


def agree(P, N):
    slow = sorted(signature(C.roots, len(C), tableau_counts(C)) for C in all_components(P, N))
    fast = sorted(signature(F.tableaux, F.size, F.expansion) for F in fast_components(P, N))
    return slow == fast


def test_q_matches_bfs(Q):
    assert agree(Q, 4) and agree(Q, 5)


def test_fig1_matches_bfs(fig1):
    assert agree(fig1, 4)


def test_tables_are_inverse(Q):
    f_def, e_def, f_delta = operator_tables(Q, 4)
    assert f_def.sum() > 0 and e_def.sum() > 0


@given(st.integers(1, 6), st.integers(0, 5000), st.integers(0, 1))
def test_random_matches_bfs(n, seed, extra):
    P = random_31free_poset(n, seed)
    assert agree(P, n + extra)
    for F in fast_components(P, n + extra):
        assert F.expansion == tableau_expansion(F)
