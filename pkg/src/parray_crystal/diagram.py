"""The diagram crystal on finite sets of cells in the positive quadrant.

Cells are ``(row, column)`` pairs using matrix convention.  Raising moves the
rightmost unpaired cell of row ``r+1`` up one row; lowering moves the leftmost
unpaired cell of row ``r`` down one row.
"""

from collections import deque
from functools import lru_cache

from .errors import InternalInvariantViolation
from .symfunc import sym_from_weights


class Diagram:
    """An immutable finite set of cells."""

    __slots__ = ("cells", "_hash")

    def __init__(self, cells):
        cells = frozenset((int(r), int(c)) for r, c in cells)
        if any(r < 1 or c < 1 for r, c in cells):
            raise ValueError("cells must have positive coordinates")
        self.cells = cells
        self._hash = hash(cells)

    @classmethod
    def from_shape(cls, lam):
        """Top- and left-justified diagram of a partition."""
        return cls((i, j) for i, part in enumerate(lam, 1) for j in range(1, part + 1))

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sorted_cells() < other.sorted_cells()

    def __iter__(self):
        return iter(self.sorted_cells())

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return cell in self.cells

    def __repr__(self):
        return f"Diagram({self.sorted_cells()})"

    def sorted_cells(self):
        return sorted(self.cells)

    def max_row(self):
        return max((r for r, _ in self.cells), default=0)

    def max_column(self):
        return max((c for _, c in self.cells), default=0)

    def row(self, r):
        return sorted(c for i, c in self.cells if i == r)

    def column(self, c):
        return sorted(r for r, j in self.cells if j == c)

    def weight(self, n_rows=None):
        if n_rows is None:
            n_rows = self.max_row()
        w = [0] * n_rows
        for r, _ in self.cells:
            w[r - 1] += 1
        return tuple(w)

    def is_top_justified(self):
        return all(r == 1 or (r - 1, c) in self.cells for r, c in self.cells)

    def move(self, src, dst):
        return Diagram((self.cells - {src}) | {dst})

    def render(self, n_rows=None):
        n_rows = n_rows or self.max_row()
        width = self.max_column()
        return "\n".join(
            "".join("o" if (r, c) in self.cells else "." for c in range(1, width + 1))
            for r in range(1, n_rows + 1)
        )


def _pair_fixed_point(first, second, between, order):
    """Iterate the pairing rule until nothing changes.

    ``first``/``second`` are the two candidate cell lists, ``between(x, y)``
    yields the other cells constrained by a prospective pair.  ``order`` flips
    the scan order so that callers can check the result does not depend on it.
    """
    paired = {}
    changed = True
    while changed:
        changed = False
        xs = first if order > 0 else first[::-1]
        ys = second if order > 0 else second[::-1]
        for x in xs:
            if x in paired:
                continue
            for y in ys:
                if y in paired:
                    continue
                blockers = between(x, y)
                if blockers is None:
                    continue
                if all(z in paired for z in blockers if z not in (x, y)):
                    paired[x] = y
                    paired[y] = x
                    changed = True
                    break
    return frozenset((x, y) for x, y in paired.items() if x in first)


@lru_cache(maxsize=1 << 16)
def _r_pairs(cells, r):
    top = sorted(c for c in cells if c[0] == r)
    bottom = sorted(c for c in cells if c[0] == r + 1)
    band = top + bottom

    def between(x, y):
        if x[1] > y[1]:
            return None
        return [z for z in band if x[1] <= z[1] <= y[1]]

    forward = _pair_fixed_point(top, bottom, between, 1)
    backward = _pair_fixed_point(top, bottom, between, -1)
    if forward != backward:
        raise InternalInvariantViolation(f"r-pairing of rows {r},{r + 1} depends on scan order")
    return forward


def r_pairs(D, r):
    """The set of r-pairs ``(cell in row r, cell in row r+1)``."""
    return _r_pairs(D.cells, r)


@lru_cache(maxsize=1 << 16)
def _column_pairs(cells, c):
    left = sorted((x for x in cells if x[1] == c), reverse=True)
    right = sorted((x for x in cells if x[1] == c + 1), reverse=True)
    band = left + right

    def between(x, y):
        # x in column c must sit weakly below y in column c+1
        if x[0] < y[0]:
            return None
        return [z for z in band if y[0] <= z[0] <= x[0]]

    forward = _pair_fixed_point(left, right, between, 1)
    backward = _pair_fixed_point(left, right, between, -1)
    if forward != backward:
        raise InternalInvariantViolation(f"column pairing of columns {c},{c + 1} depends on scan order")
    return forward


def column_pairs(D, c):
    """The column c-pairs ``(cell in column c, cell in column c+1)``."""
    return _column_pairs(D.cells, c)


def column_pair_counts(D):
    return tuple(len(column_pairs(D, c)) for c in range(1, D.max_column() + 1))


def _unpaired(D, r, row):
    pairs = r_pairs(D, r)
    used = {x for pair in pairs for x in pair}
    return [cell for cell in sorted(D.cells) if cell[0] == row and cell not in used]


def raise_d(D, r):
    free = _unpaired(D, r, r + 1)
    if not free:
        return None
    cell = max(free, key=lambda x: x[1])
    return D.move(cell, (r, cell[1]))


def lower_d(D, r):
    free = _unpaired(D, r, r)
    if not free:
        return None
    cell = min(free, key=lambda x: x[1])
    return D.move(cell, (r + 1, cell[1]))


def max_descent_chain(D):
    """Longest cell sequence with strictly increasing rows and weakly increasing columns."""
    best = {}
    for cell in sorted(D.cells, key=lambda x: (x[1], x[0])):
        r, c = cell
        best[cell] = 1 + max((best[z] for z in best if z[0] < r and z[1] <= c), default=0)
    return max(best.values(), default=0)


def component_d(D, n_rows):
    """Closure of ``D`` under ``raise_d``/``lower_d`` for ``r < n_rows``, sorted."""
    if D.max_row() > n_rows:
        raise ValueError(f"diagram uses rows beyond {n_rows}")
    seen = {D}
    queue = deque([D])
    while queue:
        X = queue.popleft()
        for r in range(1, n_rows):
            for Y in (raise_d(X, r), lower_d(X, r)):
                if Y is not None and Y not in seen:
                    seen.add(Y)
                    queue.append(Y)
    return sorted(seen)


def component_edges(diagrams, n_rows):
    """Lowering edges ``(D, r, f_r D)`` inside a list of diagrams."""
    members = set(diagrams)
    edges = []
    for D in diagrams:
        for r in range(1, n_rows):
            E = lower_d(D, r)
            if E is not None and E in members:
                edges.append((D, r, E))
    return edges


def character_d(diagrams, n_rows):
    return sym_from_weights((D.weight(n_rows) for D in diagrams), n_rows)
