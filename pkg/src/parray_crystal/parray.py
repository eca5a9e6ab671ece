"""P-arrays, P-tableaux, weights and exhaustive enumeration.

A P-array places every element of the poset in one of the rows ``1..N`` so
that each row is a chain.  Rows are stored ``<_P``-increasing.  Equivalently a
P-array is a proper colouring of the incomparability graph (row = colour).
"""

import json

from .errors import InternalInvariantViolation, MissingLabels, NotAChain, CrystalError


def trim(composition):
    """Drop trailing zeros so compositions of different lengths compare equal."""
    parts = list(composition)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def is_partition(composition):
    c = trim(composition)
    return all(x > 0 for x in c) and all(c[i] >= c[i + 1] for i in range(len(c) - 1))


class PArray:
    """An immutable P-array with an explicit row bound ``n_rows``.

    ``rows[i]`` is row ``i + 1``.  Equality compares the full row sequence
    (including empty rows up to the bound); :meth:`key` gives the trimmed form
    used to match arrays across different row bounds.
    """

    __slots__ = ("poset", "rows", "n_rows", "_row_of", "_hash")

    def __init__(self, poset, rows, n_rows=None, check=True):
        rows = [tuple(r) for r in rows]
        if n_rows is None:
            n_rows = max(len(trim([len(r) for r in rows])), 1)
        if len(trim([len(r) for r in rows])) > n_rows:
            raise CrystalError(f"array uses more than {n_rows} rows")
        rows = rows[:n_rows] + [()] * (n_rows - len(rows))
        self.poset = poset
        self.n_rows = n_rows
        row_of = {}
        for i, row in enumerate(rows, 1):
            for x in row:
                if x in row_of:
                    raise CrystalError(f"element {x!r} appears twice")
                row_of[x] = i
        if check:
            if set(row_of) != set(poset.elements):
                missing = sorted(set(poset.elements) - set(row_of))
                extra = sorted(set(row_of) - set(poset.elements))
                raise CrystalError(f"not a placement of the poset: missing {missing}, unknown {extra}")
            for i, row in enumerate(rows, 1):
                for u, v in zip(row, row[1:]):
                    if not poset.lt(u, v):
                        raise NotAChain(f"row {i} is not an increasing chain at {u!r}, {v!r}")
        self.rows = tuple(rows)
        self._row_of = row_of
        self._hash = None

    @classmethod
    def from_sets(cls, poset, row_sets, n_rows=None):
        """Build from unordered rows, sorting each into chain order."""
        rows = []
        for i, s in enumerate(row_sets, 1):
            s = list(s)
            if not poset.is_chain(s):
                raise NotAChain(f"row {i} contains incomparable elements")
            rows.append(poset.sort_chain(s))
        return cls(poset, rows, n_rows)

    def key(self):
        trimmed = list(self.rows)
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        return tuple(trimmed)

    def __eq__(self, other):
        if not isinstance(other, PArray):
            return NotImplemented
        return self.rows == other.rows and self.poset is other.poset

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return tuple(tuple(self.poset.index(x) for x in row) for row in self.rows)

    def __repr__(self):
        return f"PArray({[list(r) for r in self.key()]})"

    def __str__(self):
        return " / ".join(" ".join(r) if r else "." for r in self.key()) or "."

    def row(self, i):
        """Row ``i`` (1-based); rows beyond the bound are empty."""
        if 1 <= i <= self.n_rows:
            return self.rows[i - 1]
        return ()

    def entry(self, i, j):
        """``A_{i,j}`` or None if undefined."""
        row = self.row(i)
        return row[j - 1] if 1 <= j <= len(row) else None

    def row_of(self, x):
        return self._row_of[x]

    def coloring(self):
        return dict(self._row_of)

    def with_rows(self, rows):
        return PArray(self.poset, rows, self.n_rows)

    def resize(self, n_rows):
        return PArray(self.poset, self.key(), n_rows)

    def to_dict(self):
        return {"rows": [list(r) for r in self.key()]}


def from_coloring(P, kappa, n_rows=None):
    """The P-array whose row ``i`` lists ``kappa^{-1}(i)`` in increasing order."""
    if set(kappa) != set(P.elements):
        raise CrystalError("colouring must be total on the poset")
    if n_rows is None:
        n_rows = max(kappa.values())
    fibres = [[] for _ in range(n_rows)]
    for x, i in kappa.items():
        if not 1 <= i <= n_rows:
            raise CrystalError(f"colour {i} of {x!r} outside 1..{n_rows}")
        fibres[i - 1].append(x)
    return PArray.from_sets(P, fibres, n_rows)


def from_dict(P, data, n_rows=None):
    return PArray(P, data["rows"], n_rows)


def loads(P, text, n_rows=None):
    return from_dict(P, json.loads(text), n_rows)


def weight(A):
    return trim(len(r) for r in A.rows)


def padded_weight(A):
    return tuple(len(r) for r in A.rows)


def is_p_tableau(A):
    P = A.poset
    for i in range(2, A.n_rows + 1):
        above, here = A.row(i - 1), A.row(i)
        if len(here) > len(above):
            return False
        for x, u in zip(above, here):
            if P.gt(x, u):
                return False
    return True


def ascents(A):
    """Incomparable pairs ``(u, v)`` with ``label(u) < label(v)`` and ``u`` in an earlier row."""
    P = A.poset
    if P.labels is None:
        raise MissingLabels("ascents need a labelled poset")
    count = 0
    for u in P.elements:
        for v in P.elements:
            if P.labels[u] < P.labels[v] and P.incomparable(u, v) and A.row_of(u) < A.row_of(v):
                count += 1
    return count


def enumerate_parrays(P, n_rows=None):
    """All P-arrays with rows in ``1..n_rows``, in canonical order.

    Backtracking over the elements: an element may join a row only if it is
    comparable with everything already there.
    """
    if n_rows is None:
        n_rows = len(P)
    if n_rows < 1:
        raise ValueError("row bound must be positive")
    elements = list(P.elements)
    rows = [[] for _ in range(n_rows)]
    out = []

    def place(k):
        if k == len(elements):
            out.append(PArray(P, [P.sort_chain(r) for r in rows], n_rows, check=False))
            return
        x = elements[k]
        for row in rows:
            if all(P.comparable(x, y) for y in row):
                row.append(x)
                place(k + 1)
                row.pop()

    place(0)
    out.sort()
    return out


def enumerate_p_tableaux(P, n_rows=None):
    if n_rows is None:
        n_rows = len(P)
    found = [A for A in enumerate_parrays(P, n_rows) if is_p_tableau(A)]
    for T in found:
        if not is_partition(weight(T)):
            raise InternalInvariantViolation(f"P-tableau {T!r} has non-partition weight")
    return found
