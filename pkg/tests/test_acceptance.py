"""Acceptance criteria 1-10, one pass/fail line each."""

import time

import pytest

from parray_crystal.crystal import all_components, character, component_of, lower
from parray_crystal.chromatic import chromatic_sym
from parray_crystal.parray import PArray, enumerate_parrays
from parray_crystal.poset import figure1_poset, incomparability_graph, poset_q
from parray_crystal.positivity import tableau_counts
from parray_crystal.verify import (
    check_alignment_minimality, check_components, check_crystal_axioms, check_diagram_theorem, check_nuio,
    check_truncation, check_two_row, closing_remark_holds, nuio_corpus, random_31free_corpus, standard_corpus,
)

FIG8 = {
    "a": [["c", "a"], ["d", "b"]],
    "b": [["c", "a"], ["b"], ["d"]],
    "c": [["c", "a"], [], ["d", "b"]],
    "d": [["a"], ["c"], ["d", "b"]],
    "e": [[], ["c", "a"], ["d", "b"]],
    "f": [["b"], ["c", "a"], ["d"]],
    "g": [["b"], ["c"], ["d", "a"]],
    "h": [["a"], ["d", "b"], ["c"]],
    "i": [["d", "a"], ["b"], ["c"]],
}
FIG8_EDGES = {("a", 2, "b"), ("b", 2, "c"), ("d", 1, "e"), ("f", 2, "g"),
              ("h", 2, "d"), ("b", 1, "f"), ("c", 1, "d"), ("i", 1, "h")}


@pytest.fixture
def report(capsys):
    """Prints ``PASS``/``FAIL criterion k`` with timing around the body of a test."""
    lines = []

    class Reporter:
        def __init__(self):
            self.start = time.perf_counter()

        def __call__(self, k, what, ok=True, limit=None):
            elapsed = time.perf_counter() - self.start
            ok = ok and (limit is None or elapsed < limit)
            budget = f" (limit {limit:g} s)" if limit else ""
            lines.append(f"{'PASS' if ok else 'FAIL'} criterion {k}: {what} [{elapsed:.1f} s{budget}]")
            return ok

    yield Reporter()
    with capsys.disabled():
        for line in lines:
            print("\n" + line)


def test_criterion_1_fig8(report):
    Q = poset_q()
    arrays = {name: PArray(Q, rows, 4) for name, rows in FIG8.items()}
    C = component_of(arrays["a"])
    members = set(C.vertices)
    names = {A: name for name, A in arrays.items()}
    induced = {(names[s], r, names[t]) for s, r, t in C.edges if s in names and t in names}
    direct = {(x, r, y) for x, A in arrays.items() for r in (1, 2, 3) for y in FIG8 if lower(A, r) == arrays[y]}
    roots = {T.key() for T in C.roots}
    expansion = tableau_counts(C)
    ok = (all(A in members for A in arrays.values()) and induced == FIG8_EDGES and direct == FIG8_EDGES
          and roots == {(("c", "a"), ("d", "b")), (("d", "a"), ("b",), ("c",))}
          and expansion == {(2, 2): 1, (2, 1, 1): 1})
    assert report(1, f"Fig. 8 vertices, 8 edges, roots, expansion {expansion}", ok, limit=1)


def test_criterion_2_global_character(report):
    ok = True
    for P in (poset_q(), figure1_poset()):
        total = None
        for C in all_components(P, 4):
            total = character(C) if total is None else total + character(C)
        ok = ok and total == chromatic_sym(incomparability_graph(P), 4)
    assert report(2, "sum of component characters equals chromatic_sym for Q and Fig. 1 at N=4", ok, limit=60)


def test_criterion_3_triple_agreement(report):
    components = 0
    ok = True
    for case in standard_corpus():
        result = check_components(case.poset, case.n_rows)
        components += result["components"]
        ok = ok and all(c >= 0 for comp in result["report"] for c in comp["expansion"].values())
    assert report(3, f"tableau count = signed count = schur_expand on {components} components", ok, limit=300)


def test_criterion_4_crystal_axioms(report):
    arrays = edges = 0
    for case in standard_corpus():
        result = check_crystal_axioms(case.poset, case.n_rows)
        arrays += result["arrays"]
        edges += result["edges"]
    assert report(4, f"crystal axioms on {arrays} arrays and {edges} edges")


def test_criterion_5_alignment_minimality(report):
    pairs = 0
    for case in standard_corpus():
        pairs += check_alignment_minimality(case.poset, case.n_rows)["row_pairs"]
    assert report(5, f"r alignment is the unique minimal weak alignment on {pairs} row pairs")


def test_criterion_6_diagram_crystal(report):
    shapes = check_diagram_theorem(max_size=6, max_rows=5)["shapes"]
    assert report(6, f"diagram components are Schur on {shapes} (shape, N) pairs", limit=60)


def test_criterion_7_nuio(report):
    components = 0
    for case in nuio_corpus():
        components += check_nuio(case.poset, case.n_rows)["components"]
    assert report(7, f"asc constant and q-refinement equals chromatic_qsym on {components} components", limit=300)


def test_criterion_8_two_row(report):
    cases = [(poset_q(), 4), (figure1_poset(), 8)] + [(c.poset, len(c.poset)) for c in random_31free_corpus()]
    tableaux = fillings = 0
    for P, N in cases:
        result = check_two_row(P, N)
        tableaux += result["tableaux"]
        fillings += result["fillings"]
    assert report(8, f"two-row bijection for {tableaux} tableaux, {fillings} fillings at N=|P|")


def test_criterion_9_closing_remark(report):
    Q = poset_q()
    T = PArray(Q, [["c", "a"], ["d", "b"]], 4)
    assert report(9, "a residual piece of Q is not Schur-expandable", closing_remark_holds(Q, T, 4))


def test_criterion_10_truncation(report):
    components = 0
    for case in standard_corpus():
        components += check_truncation(case.poset, len(case.poset))["components"]
    assert report(10, f"expansions agree between N=|P| and N=|P|+1 on {components} components")


def test_fig8_vertex_list_is_complete():
    # the nine vertices are distinct arrays of Q
    Q = poset_q()
    every = set(enumerate_parrays(Q, 4))
    assert len({PArray(Q, rows, 4) for rows in FIG8.values()} & every) == 9
