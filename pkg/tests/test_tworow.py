import pytest
from hypothesis import given, strategies as st

from parray_crystal.crystal import lower, raise_
from parray_crystal.diagram import Diagram, raise_d
from parray_crystal.errors import DiagramNotInComponent, NotTwoRowTableau
from parray_crystal.parray import PArray, padded_weight
from parray_crystal.poset import antichain, chain, random_31free_poset
from parray_crystal.symfunc import schur, sym_from_weights
from parray_crystal.tworow import (
    array_of, dfa, diagram_component, diagram_of, filling, residual_components, two_row_tableaux, verify_two_row,
)


@pytest.fixture
def T(Q):
    return PArray(Q, [["c", "a"], ["d", "b"]], 4)


def test_diagram_of_examples(T):
    assert diagram_of(T) == Diagram.from_shape((2, 2))
    S = antichain(1)
    assert diagram_of(PArray(S, [["x1"]], 2)) == Diagram([(1, 1)])
    C = chain(4)
    assert diagram_of(PArray(C, [C.elements], 4)) == Diagram.from_shape((4,))


def test_diagram_of_rejects(Q):
    with pytest.raises(NotTwoRowTableau):
        diagram_of(PArray(Q, [["d", "a"], ["b"], ["c"]], 4))
    with pytest.raises(NotTwoRowTableau):
        diagram_of(PArray(Q, [["c"], ["d", "b"], ["a"]], 4))


def test_filling_example(T):
    D = Diagram([(1, 1), (1, 2), (3, 1), (2, 2)])
    L = filling(D, T)
    assert L.assign == {"c": (1, 1), "d": (3, 1), "a": (1, 2), "b": (2, 2)}
    assert L.rules == (3, 1)
    assert array_of(L) == PArray(T.poset, [["c", "a"], ["b"], ["d"]], 4)


def test_filling_of_own_diagram(T):
    assert array_of(filling(diagram_of(T), T)) == T


def test_filling_outside_component(T):
    with pytest.raises(DiagramNotInComponent):
        filling(Diagram([(1, 1), (1, 2), (1, 3), (2, 1)]), T)


def test_singleton():
    S = antichain(1)
    T1 = PArray(S, [["x1"]], 2)
    L = filling(Diagram([(2, 1)]), T1)
    assert L.assign == {"x1": (2, 1)}
    assert array_of(L) == PArray(S, [[], ["x1"]], 2)
    arrays = dfa(T1, 2)
    assert set(arrays) == {T1, PArray(S, [[], ["x1"]], 2)}
    assert sym_from_weights([padded_weight(A) for A in arrays], 2) == schur((1,), 2)
    assert residual_components(S, T1, 2) == []


def test_q_generating_function(T):
    arrays = dfa(T, 4)
    assert sym_from_weights([padded_weight(A) for A in arrays], 4) == schur((2, 2), 4)


def test_q_disjoint(Q):
    tabs = two_row_tableaux(Q, 4)
    assert len(tabs) == 2
    a, b = (set(dfa(t, 4)) for t in tabs)
    assert not a & b


def test_fig8_edge_matches_diagram_raise(T):
    # raising the diagram at r=2 corresponds to raising the array
    D = Diagram([(1, 1), (1, 2), (3, 1), (2, 2)])
    A = array_of(filling(D, T))
    E = raise_d(D, 2)
    assert array_of(filling(E, T)) == raise_(A, 2) == T


def test_verify_q_and_fig1(Q, fig1):
    assert verify_two_row(Q, 4).tableaux == 2
    report = verify_two_row(fig1, 4)
    assert report.tableaux == 12 and all(report.checks.values())


def test_residual_closing_remark(Q, T):
    pieces = residual_components(Q, T, 4)
    assert any(not p.schur_expandable for p in pieces)
    assert sum(len(p.vertices) for p in pieces) == 108 - 20


def test_chain_residual():
    C = chain(3)
    T1 = PArray(C, [C.elements], 3)
    pieces = residual_components(C, T1, 3)
    assert sum(len(p.vertices) for p in pieces) == 27 - 10


@given(st.integers(1, 6), st.integers(0, 5000))
def test_random_two_row(n, seed):
    P = random_31free_poset(n, seed)
    report = verify_two_row(P, n)
    assert report.fillings == sum(len(diagram_component(t, n)) for t in two_row_tableaux(P, n))
