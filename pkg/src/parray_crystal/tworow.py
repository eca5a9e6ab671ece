"""Two-row P-tableaux, diagram fillings and the Schur generating-function bijection.

For a two-row P-tableau ``T`` its diagram is the cell set of the 1 alignment of
``T``; that diagram is top-justified, so its diagram-crystal component has
character ``s_wt(T)``.  Filling each diagram of the component with the
elements of ``T`` (column by column, see :func:`filling`) yields P-arrays whose
generating function is again ``s_wt(T)``.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .alignment import align
from .crystal import lower, raise_
from .diagram import Diagram, component_d, lower_d, r_pairs, raise_d
from .errors import (
    AsymmetricInput,
    DiagramNotInComponent,
    InternalInvariantViolation,
    NotAChain,
    NotTwoRowTableau,
    VerificationFailure,
)
from .parray import PArray, enumerate_parrays, is_p_tableau, padded_weight, trim, weight
from .symfunc import schur, schur_expand, sym_from_weights


def is_two_row_tableau(T):
    return is_p_tableau(T) and len(weight(T)) <= 2


def diagram_of(T):
    if not is_two_row_tableau(T):
        raise NotTwoRowTableau(f"{T!r} is not a two-row P-tableau")
    return Diagram(align(T, 1).cells())


@dataclass(frozen=True)
class Filling:
    tableau: PArray
    diagram: Diagram
    assign: dict
    rules: tuple = field(default=())
    n_rows: int = 0

    def at(self):
        """Inverse map ``cell -> element``."""
        return {cell: x for x, cell in self.assign.items()}


@lru_cache(maxsize=1024)
def _component(T_key_poset, T_key, n_rows):
    T = PArray(T_key_poset, T_key, max(n_rows, 1))
    return frozenset(component_d(diagram_of(T), n_rows))


def diagram_component(T, n_rows=None):
    """The diagram-crystal component of the diagram of ``T`` (all of its members)."""
    n_rows = n_rows or T.n_rows
    return sorted(_component(T.poset, T.key(), n_rows))


def filling(D, T, n_rows=None, check_component=True):
    """Assign the elements of ``T`` to the cells of ``D``, column by column."""
    n_rows = n_rows or max(T.n_rows, D.max_row())
    if check_component and D not in _component(T.poset, T.key(), n_rows):
        raise DiagramNotInComponent(f"{D!r} is not in the component of the diagram of {T!r}")
    P = T.poset
    columns = align(T, 1).columns()
    assign, at, rules = {}, {}, []
    for c in range(1, max(columns, default=0) + 1):
        x1, x2 = columns[c]
        cells = [(r, c) for r in D.column(c)]
        entries = [x for x in (x1, x2) if x is not None]
        if len(cells) != len(entries):
            raise InternalInvariantViolation(f"column {c} of the diagram does not match the alignment")
        if len(entries) == 1:
            chosen, rule = {entries[0]: cells[0]}, 0
        else:
            chosen, rule = None, 3
            prev = D.column(c - 1) if c > 1 else []
            for rule_no, anchor_row in ((1, prev[0] if prev else None), (2, prev[-1] if prev else None)):
                if anchor_row is None:
                    break
                y = at[(anchor_row, c - 1)]
                greater = [x for x in (x1, x2) if P.lt(y, x)]
                if len(greater) != 1:
                    continue
                rows_ok = [r for r, _ in cells if r <= anchor_row]
                if not rows_ok:
                    raise InternalInvariantViolation(f"rule {rule_no} has no cell weakly above row {anchor_row}")
                target = (max(rows_ok), c)
                other = next(cell for cell in cells if cell != target)
                rest = x2 if greater[0] == x1 else x1
                chosen, rule = {greater[0]: target, rest: other}, rule_no
                break
            if chosen is None:
                chosen = {x1: cells[0], x2: cells[1]}
        for x, cell in chosen.items():
            assign[x] = cell
            at[cell] = x
        rules.append(rule)
    return Filling(T, D, assign, tuple(rules), n_rows)


def array_of(L):
    """The P-array read off a filling row by row."""
    rows = [[] for _ in range(L.n_rows)]
    for x, (r, c) in sorted(L.assign.items(), key=lambda kv: kv[1][1]):
        rows[r - 1].append(x)
    try:
        return PArray(L.tableau.poset, rows, L.n_rows)
    except NotAChain as exc:
        raise InternalInvariantViolation(f"filling rows are not chains: {exc}") from exc


def dfa(T, n_rows=None):
    """The arrays of all fillings of the diagrams in the component of ``T``'s diagram."""
    n_rows = n_rows or T.n_rows
    arrays = [array_of(filling(D, T, n_rows, check_component=False)) for D in diagram_component(T, n_rows)]
    if len(set(arrays)) != len(arrays):
        raise VerificationFailure(f"two diagrams of {T!r} gave the same array")
    return arrays


def two_row_tableaux(P, n_rows=None):
    n_rows = n_rows or len(P)
    found = [T for T in enumerate_parrays(P, min(2, n_rows)) if is_p_tableau(T)]
    return [T.resize(n_rows) for T in found]


# -- runtime checks of the structural lemmas -----------------------------

def _check_no_flip(L):
    P = L.tableau.poset
    for c, (x1, x2) in align(L.tableau, 1).columns().items():
        if x1 is None or x2 is None:
            continue
        if all(P.lt(y, x2) for y in P.below(x1) if y != x2):
            if not L.assign[x1][0] < L.assign[x2][0]:
                raise VerificationFailure(f"no-flip violated in column {c}", (x1, x2, L.diagram))


def _check_nw(L):
    P = L.tableau.poset
    items = list(L.assign.items())
    for x, (r1, c1) in items:
        for y, (r2, c2) in items:
            if x != y and r1 <= r2 and c1 <= c2 and P.gt(x, y):
                raise VerificationFailure("north-west condition violated", (x, y, L.diagram))


def _check_ascend(L):
    P = L.tableau.poset
    at = L.at()
    for x, (r, c) in L.assign.items():
        nxt = L.diagram.column(c + 1)
        if len(nxt) == 2 and not any(s <= r and P.lt(x, at[(s, c + 1)]) for s in nxt):
            raise VerificationFailure("ascend lemma violated", (x, L.diagram))


def _check_gap_rows(L):
    P = L.tableau.poset
    at = L.at()
    cells = L.diagram.cells
    for (r2, c1) in cells:
        for (r1, c2) in cells:
            if not (r1 <= r2 and c1 < c2):
                continue
            box = [
                (r, c) for (r, c) in cells
                if r1 <= r <= r2 and c1 <= c <= c2 and (r, c) not in ((r2, c1), (r1, c2))
            ]
            if not box and not P.lt(at[(r2, c1)], at[(r1, c2)]):
                raise VerificationFailure("increasing-rows proposition violated", ((r2, c1), (r1, c2)))


def _min_raise(D, n_rows):
    for r in range(1, n_rows):
        E = raise_d(D, r)
        if E is not None:
            return r, E
    return None, None


def _check_raising_step(L, n_rows, arrays_by_diagram):
    """Minimal-``r`` raising on the diagram matches raising on the array."""
    T, D = L.tableau, L.diagram
    r, E = _min_raise(D, n_rows)
    A = arrays_by_diagram[D]
    if r is None:
        return None
    # the element at the raised cell is the array's rightmost lone bottom entry
    paired = {y for _, y in r_pairs(D, r)}
    free = [cell for cell in sorted(D.cells, key=lambda z: z[1]) if cell[0] == r + 1 and cell not in paired]
    x = L.at()[free[-1]]
    phi = align(A, r)
    tops = {phi.column(z) for z in A.row(r)}
    lone = [z for z in A.row(r + 1) if phi.column(z) not in tops]
    if not lone or lone[-1] != x:
        raise VerificationFailure("raised cell does not carry the alignment's lone bottom entry", (T, D, r))
    B = raise_(A, r)
    if B is None or B != arrays_by_diagram[E]:
        raise VerificationFailure(f"raising compatibility fails at r={r}", (T, D))
    for s in range(1, r):
        if raise_(A, s) is not None:
            raise VerificationFailure(f"array raises at r={s} below the diagram's minimal r={r}", (T, D))
    return E


@dataclass
class TwoRowReport:
    n_rows: int
    tableaux: int = 0
    fillings: int = 0
    rule_counts: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "n_rows": self.n_rows,
            "tableaux": self.tableaux,
            "fillings": self.fillings,
            "rule_counts": {str(k): v for k, v in sorted(self.rule_counts.items())},
            "checks": dict(sorted(self.checks.items())),
        }


def _connected(arrays):
    members = set(arrays)
    if not members:
        return True
    start = next(iter(members))
    seen, queue = {start}, deque([start])
    while queue:
        X = queue.popleft()
        for r in range(1, X.n_rows):
            for Y in (lower(X, r), raise_(X, r)):
                if Y is not None and Y in members and Y not in seen:
                    seen.add(Y)
                    queue.append(Y)
    return seen == members


def verify_two_row(P, n_rows=None):
    """Check the two-row bijection for every two-row P-tableau of ``P``.

    Raises :class:`VerificationFailure` with a witness on the first problem.
    """
    n_rows = n_rows or len(P)
    report = TwoRowReport(n_rows)
    owner = {}
    names = ["weight", "schur", "connected", "disjoint", "raising", "top_justified",
             "highest_filling", "no_flip", "north_west", "ascend", "increasing_rows"]
    for T in two_row_tableaux(P, n_rows):
        D0 = diagram_of(T)
        if not D0.is_top_justified():
            raise VerificationFailure("diagram of a two-row tableau is not top-justified", T)
        diagrams = diagram_component(T, n_rows)
        by_diagram, fillings = {}, []
        for D in diagrams:
            L = filling(D, T, n_rows, check_component=False)
            fillings.append(L)
            A = array_of(L)
            if padded_weight(A) != D.weight(n_rows):
                raise VerificationFailure("filling does not preserve the weight", (T, D))
            _check_no_flip(L)
            _check_nw(L)
            _check_ascend(L)
            _check_gap_rows(L)
            for rule in L.rules:
                report.rule_counts[rule] = report.rule_counts.get(rule, 0) + 1
            by_diagram[D] = A
        if by_diagram[D0] != T:
            raise VerificationFailure("filling of the tableau's own diagram is not the tableau", T)
        arrays = list(by_diagram.values())
        if len(set(arrays)) != len(arrays):
            raise VerificationFailure("fillings of one tableau collide", T)
        lam = trim(weight(T))
        if len(lam) <= n_rows and sym_from_weights((padded_weight(A) for A in arrays), n_rows) != schur(lam, n_rows):
            raise VerificationFailure("generating function differs from the Schur polynomial", T)
        if not _connected(arrays):
            raise VerificationFailure("filling arrays are not connected in the crystal", T)
        for A in arrays:
            if A in owner:
                raise VerificationFailure("arrays shared between two tableaux", (owner[A], T, A))
            owner[A] = T
        # each raising step lowers sum(i * wt_i), so checking one step per diagram
        # and that D0 is the only dead end covers every raising path
        for L in fillings:
            E = _check_raising_step(L, n_rows, by_diagram)
            if E is None and L.diagram != D0:
                raise VerificationFailure("raising path does not reach the tableau's diagram", (T, L.diagram))
        report.tableaux += 1
        report.fillings += len(arrays)
    for name in names:
        report.checks[name] = True
    return report


@dataclass(frozen=True)
class ResidualPiece:
    vertices: tuple
    symmetric: bool
    expansion: dict
    positive: bool

    @property
    def schur_expandable(self):
        return self.symmetric and self.positive


def residual_components(P, T, n_rows=None, arrays=None):
    """Maximal connected pieces of the crystal left after removing the fillings of ``T``."""
    n_rows = n_rows or len(P)
    T = T.resize(n_rows)
    removed = set(dfa(T, n_rows))
    if arrays is None:
        arrays = enumerate_parrays(P, n_rows)
    rest = [A for A in arrays if A not in removed]
    members = set(rest)
    seen, pieces = set(), []
    for A in rest:
        if A in seen:
            continue
        comp, queue = {A}, deque([A])
        while queue:
            X = queue.popleft()
            for r in range(1, n_rows):
                for Y in (lower(X, r), raise_(X, r)):
                    if Y is not None and Y in members and Y not in comp:
                        comp.add(Y)
                        queue.append(Y)
        seen |= comp
        vertices = tuple(sorted(comp))
        try:
            f = sym_from_weights((padded_weight(X) for X in vertices), n_rows)
        except AsymmetricInput:
            pieces.append(ResidualPiece(vertices, False, {}, False))
            continue
        exp = schur_expand(f)
        pieces.append(ResidualPiece(vertices, True, exp, all(c >= 0 for c in exp.values())))
    return pieces
