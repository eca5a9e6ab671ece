"""Exhaustive checks shared by the test suite and ``verify-all``.

Every ``check_*`` function returns a small dict of counts and raises
:class:`VerificationFailure` with a witness as soon as something is off.
"""

import random
from dataclasses import dataclass

from .alignment import align, align_columns, minimal_weak_alignments
from .chromatic import chromatic_polynomial_value, chromatic_qsym, chromatic_sym, count_proper_colorings
from .crystal import all_components, character, flipped_set, is_highest_weight, lower, raise_
from .diagram import (
    Diagram, column_pair_counts, component_d, lower_d, max_descent_chain, raise_d,
)
from .errors import VerificationFailure
from .fastcrystal import fast_components, tableau_expansion
from .parray import enumerate_parrays, is_p_tableau, padded_weight, trim, weight
from .poset import (
    figure1_poset, incomparability_graph, is_natural_unit_interval_order, is_three_plus_one_free,
    is_two_plus_two_free, poset_q, random_31free_poset, random_nuio,
)
from .positivity import check_involution, component_ascents, component_expansion, qsym_refinement, schur_coeff_signed
from .symfunc import partitions, schur, schur_expand, ssyt, sym_from_weights
from .tworow import residual_components, verify_two_row

CORPUS_SIZE = 25
MAX_CORPUS_N = 6


@dataclass(frozen=True)
class Case:
    name: str
    poset: object
    n_rows: int


def random_31free_corpus(seed=0, size=CORPUS_SIZE, max_n=MAX_CORPUS_N):
    rng = random.Random(seed)
    cases = []
    for k in range(size):
        n = rng.randint(3, max_n)
        s = rng.randrange(1 << 30)
        cases.append(Case(f"random31free[{k}] n={n} seed={s}", random_31free_poset(n, s), n))
    return cases


def nuio_corpus(seed=0, size=CORPUS_SIZE, max_n=MAX_CORPUS_N):
    rng = random.Random(seed + 1)
    cases = []
    for k in range(size):
        n = rng.randint(3, max_n)
        s = rng.randrange(1 << 30)
        cases.append(Case(f"nuio[{k}] n={n} seed={s}", random_nuio(n, s), n))
    return cases


def named_cases():
    return [Case("Q", poset_q(), 4), Case("figure1", figure1_poset(), 4)]


def standard_corpus(seed=0):
    """Q and the eight-element example poset at N=4, then the seeded random (3+1)-free posets at N=n."""
    return named_cases() + random_31free_corpus(seed)


# -- individual checks --------------------------------------------------

def check_poset(P):
    if not is_three_plus_one_free(P):
        raise VerificationFailure("poset is not (3+1)-free", P)
    out = {"three_plus_one_free": True, "two_plus_two_free": is_two_plus_two_free(P)}
    if P.labels is not None:
        out["nuio"] = is_natural_unit_interval_order(P)
        if out["nuio"] and not out["two_plus_two_free"]:
            raise VerificationFailure("natural unit interval order with a (2+2)", P)
    return out


def check_enumeration(P, n_rows, arrays=None):
    arrays = enumerate_parrays(P, n_rows) if arrays is None else arrays
    G = incomparability_graph(P)
    colourings = count_proper_colorings(G, n_rows)
    if len(arrays) != colourings:
        raise VerificationFailure(f"{len(arrays)} arrays but {colourings} colourings")
    if len(P) <= 10 and chromatic_polynomial_value(G, n_rows) != colourings:
        raise VerificationFailure("colouring count disagrees with the chromatic polynomial")
    for A in arrays:
        if sum(weight(A)) != len(P):
            raise VerificationFailure("weight does not sum to |P|", A)
        if is_p_tableau(A) and list(trim(weight(A))) != sorted(trim(weight(A)), reverse=True):
            raise VerificationFailure("P-tableau with non-partition weight", A)
    return {"arrays": len(arrays)}


def _alpha_shift(w, r, sign):
    w = list(w)
    w[r - 1] += sign
    w[r] -= sign
    return tuple(w)


def check_crystal_axioms(P, n_rows, arrays=None):
    """Inverse property, weight shifts, alignment columns, flipped sets, highest weights, strings."""
    arrays = enumerate_parrays(P, n_rows) if arrays is None else arrays
    members = set(arrays)
    edges = 0
    for A in arrays:
        w = padded_weight(A)
        for r in range(1, n_rows):
            B = lower(A, r)
            if B is not None:
                edges += 1
                if B not in members:
                    raise VerificationFailure(f"f_{r} left the array set", A)
                if raise_(B, r) != A:
                    raise VerificationFailure(f"e_{r} does not undo f_{r}", A)
                if padded_weight(B) != _alpha_shift(w, r, -1):
                    raise VerificationFailure(f"f_{r} shifted the weight wrongly", A)
                phi, psi = align(A, r), align(B, r)
                if any(phi.column(x) != psi.column(x) for x in A.row(r) + A.row(r + 1)):
                    raise VerificationFailure(f"f_{r} moved an alignment column", A)
                flipped_set(A, r, "lower")
            C = raise_(A, r)
            if C is not None:
                if lower(C, r) != A:
                    raise VerificationFailure(f"f_{r} does not undo e_{r}", A)
                if padded_weight(C) != _alpha_shift(w, r, 1):
                    raise VerificationFailure(f"e_{r} shifted the weight wrongly", A)
                phi, psi = align(A, r), align(C, r)
                if any(phi.column(x) != psi.column(x) for x in A.row(r) + A.row(r + 1)):
                    raise VerificationFailure(f"e_{r} moved an alignment column", A)
                flipped_set(A, r, "raise")
            k = w[r - 1] - w[r]
            if k > 0:
                X = A
                for _ in range(k):
                    X = lower(X, r)
                    if X is None:
                        raise VerificationFailure(f"f_{r}^{k} vanished", A)
                swapped = list(w)
                swapped[r - 1], swapped[r] = swapped[r], swapped[r - 1]
                if padded_weight(X) != tuple(swapped):
                    raise VerificationFailure(f"f_{r}^{k} does not reflect the weight", A)
        if is_highest_weight(A) != is_p_tableau(A):
            raise VerificationFailure("highest weight and P-tableau disagree", A)
    return {"arrays": len(arrays), "edges": edges}


def check_alignment_minimality(P, n_rows, arrays=None, guard=10):
    """``align`` is the unique minimal weak alignment, checked once per distinct row pair."""
    arrays = enumerate_parrays(P, n_rows) if arrays is None else arrays
    seen = set()
    checked = skipped = 0
    for A in arrays:
        for r in range(1, n_rows):
            pair = (A.row(r), A.row(r + 1))
            if pair in seen:
                continue
            seen.add(pair)
            if len(pair[0]) + len(pair[1]) > guard:
                skipped += 1
                continue
            minimal = minimal_weak_alignments(A, r, guard)
            if minimal != [align(A, r)]:
                raise VerificationFailure(f"alignment of rows {r},{r + 1} is not the unique minimum", (A, minimal))
            checked += 1
    return {"row_pairs": checked, "skipped": skipped}


def check_diagram_theorem(max_size=6, max_rows=5):
    """Components of top-justified diagrams have Schur characters and the expected invariants."""
    count = 0
    for N in range(1, max_rows + 1):
        for size in range(0, max_size + 1):
            for lam in partitions(size, max_len=N):
                D0 = Diagram.from_shape(lam)
                comp = component_d(D0, N)
                if character_of(comp, N) != schur(lam, N):
                    raise VerificationFailure(f"diagram character differs from s{list(lam)} at N={N}")
                if len(comp) != sum(1 for _ in ssyt(lam, N)):
                    raise VerificationFailure(f"component size differs from SSYT count for {list(lam)}")
                nulls = [D for D in comp if all(raise_d(D, r) is None for r in range(1, N))]
                if nulls != [D0]:
                    raise VerificationFailure(f"raise-null diagrams {nulls} for {list(lam)}")
                members = set(comp)
                for D in comp:
                    for r in range(1, N):
                        E = lower_d(D, r)
                        if E is None:
                            continue
                        if E not in members or raise_d(E, r) != D:
                            raise VerificationFailure("diagram lowering not inverted by raising", (D, r))
                        if column_pair_counts(D) != column_pair_counts(E):
                            raise VerificationFailure("column pair counts changed", (D, r))
                        if max_descent_chain(D) != max_descent_chain(E):
                            raise VerificationFailure("maximal descent chain changed", (D, r))
                count += 1
    return {"shapes": count}


def character_of(diagrams, n_rows):
    return sym_from_weights((D.weight(n_rows) for D in diagrams), n_rows)


def check_components(P, n_rows, arrays=None, components=None):
    """Triple agreement and the involution for every component and partition; the global identity."""
    arrays = enumerate_parrays(P, n_rows) if arrays is None else arrays
    components = all_components(P, n_rows, arrays) if components is None else components
    report = []
    total = None
    for C in components:
        expansion = component_expansion(C, len(P))
        signed = {}
        for lam in partitions(len(P), max_len=n_rows):
            fixed, _ = check_involution(C, lam)
            if len(fixed) != expansion.get(lam, 0):
                raise VerificationFailure(f"involution fixes {len(fixed)} arrays for {list(lam)}")
            value = schur_coeff_signed(C, lam)
            if value:
                signed[lam] = value
        char = character(C)
        total = char if total is None else total + char
        report.append({
            "size": len(C),
            "roots": [[list(row) for row in T.key()] for T in C.roots],
            "expansion": expansion,
            "signed": signed,
            "passed": True,
        })
    if total != chromatic_sym(incomparability_graph(P), n_rows):
        raise VerificationFailure("sum of component characters differs from the chromatic polynomial")
    return {"components": len(components), "report": report}


def check_nuio(P, n_rows, components=None):
    components = all_components(P, n_rows) if components is None else components
    for C in components:
        component_ascents(C)
    refined = qsym_refinement(P, n_rows, components)
    if refined != chromatic_qsym(incomparability_graph(P), n_rows):
        raise VerificationFailure("graded component characters differ from the quasisymmetric chromatic function")
    for d, f in refined.terms.items():
        if any(c < 0 for c in schur_expand(f).values()):
            raise VerificationFailure(f"q^{d} coefficient is not Schur-positive")
    return {"components": len(components), "degrees": sorted(refined.terms)}


def check_two_row(P, n_rows):
    return verify_two_row(P, n_rows).to_dict()


def check_truncation(P, n_rows=None):
    """Components at N and N+1 have the same tableau sets and Schur expansions."""
    n = n_rows or len(P)
    expansions = []
    for N in (n, n + 1):
        by_tableaux = {}
        for F in fast_components(P, N):
            if F.expansion != tableau_expansion(F):
                raise VerificationFailure(f"expansion differs from tableau count at N={N}", F.tableaux)
            if any(c < 0 for c in F.expansion.values()):
                raise VerificationFailure("negative Schur coefficient", F.tableaux)
            key = F.tableau_keys()
            if key in by_tableaux:
                raise VerificationFailure("two components share a tableau set", key)
            by_tableaux[key] = {lam: c for lam, c in F.expansion.items() if len(lam) <= len(P)}
        expansions.append(by_tableaux)
    if expansions[0] != expansions[1]:
        missing = set(expansions[0]) ^ set(expansions[1])
        raise VerificationFailure(f"component expansions change between N={n} and N={n + 1}", missing)
    return {"components": len(expansions[0]), "n_rows": [n, n + 1]}


def closing_remark_holds(P, T, n_rows):
    """True when some residual piece outside the fillings of ``T`` is not Schur-expandable."""
    return any(not piece.schur_expandable for piece in residual_components(P, T, n_rows))
