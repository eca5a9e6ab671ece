"""Alignments of adjacent row pairs of a P-array.

For rows ``r`` (top band) and ``r+1`` (bottom band) an alignment places each
entry in a column.  The r alignment is produced from the pre-alignment by
repeatedly shifting the rightmost *eligible* entry one column right, where an
entry in column ``c`` is eligible when column ``c+1`` is nonempty and holds
nothing greater than it.  It is also the unique minimal weak r alignment;
:func:`all_weak_alignments` enumerates the latter for cross-checking.
"""

import itertools
from functools import lru_cache

from .errors import GuardExceeded, InternalInvariantViolation


class Alignment:
    """Placement ``element -> (row, column)`` for the row pair ``(r, r+1)``."""

    __slots__ = ("r", "placement")

    def __init__(self, r, placement):
        self.r = r
        self.placement = dict(placement)

    def __eq__(self, other):
        if not isinstance(other, Alignment):
            return NotImplemented
        return self.r == other.r and self.placement == other.placement

    def __hash__(self):
        return hash((self.r, frozenset(self.placement.items())))

    def __repr__(self):
        items = sorted(self.placement.items(), key=lambda kv: (kv[1][1], kv[1][0]))
        return f"Alignment(r={self.r}, {dict(items)})"

    def column(self, x):
        return self.placement[x][1]

    def band(self, x):
        return "top" if self.placement[x][0] == self.r else "bottom"

    def columns(self):
        """``{column: (top entry or None, bottom entry or None)}``."""
        out = {}
        for x, (i, c) in self.placement.items():
            top, bottom = out.get(c, (None, None))
            if i == self.r:
                top = x
            else:
                bottom = x
            out[c] = (top, bottom)
        return out

    def band_entries(self, band):
        row = self.r if band == "top" else self.r + 1
        found = [(c, x) for x, (i, c) in self.placement.items() if i == row]
        return [x for c, x in sorted(found)]

    def max_column(self):
        return max((c for _, c in self.placement.values()), default=0)

    def cells(self):
        return frozenset(self.placement.values())

    def shifted(self, x, by=1):
        i, c = self.placement[x]
        moved = dict(self.placement)
        moved[x] = (i, c + by)
        return Alignment(self.r, moved)

    def precedes(self, other):
        """Pointwise column comparison (weakly left everywhere)."""
        return all(self.placement[x][1] <= other.placement[x][1] for x in self.placement)

    def render(self, width=None):
        cols = self.columns()
        d = self.max_column()
        if width is None:
            width = max([len(str(x)) for x in self.placement] + [1])
        lines = []
        for slot, tag in ((0, f"{self.r}"), (1, f"{self.r + 1}")):
            cells = []
            for c in range(1, d + 1):
                x = cols.get(c, (None, None))[slot]
                cells.append((x if x is not None else ".").ljust(width))
            lines.append(f"{tag:>3} | " + " ".join(cells))
        return "\n".join(lines)


def _pre_columns(P, top, bottom):
    col = {}
    for k, b in enumerate(bottom, 1):
        col[b] = k
    prev = 0
    for a in top:
        c = max([col[b] for b in bottom if P.lt(b, a)] + [prev]) + 1
        col[a] = c
        prev = c
    return col


@lru_cache(maxsize=1 << 16)
def _align_columns(P, top, bottom):
    col = _pre_columns(P, top, bottom)
    by_col = {}
    for x, c in col.items():
        by_col.setdefault(c, []).append(x)
    d = max(by_col, default=0)
    steps, limit = 0, (len(col) + 1) * (d + 1)
    while True:
        moved = False
        for c in range(d - 1, 0, -1):
            right = by_col.get(c + 1)
            here = by_col.get(c)
            if not right or not here:
                continue
            eligible = [x for x in here if not any(P.lt(x, y) for y in right)]
            if len(eligible) > 1:
                raise InternalInvariantViolation(
                    f"two eligible entries {eligible} in column {c}; is the poset (3+1)-free?"
                )
            if eligible:
                x = eligible[0]
                here.remove(x)
                if not here:
                    del by_col[c]
                right.append(x)
                col[x] = c + 1
                moved = True
                break
        if not moved:
            break
        steps += 1
        if steps > limit:
            raise InternalInvariantViolation("alignment shift loop did not terminate")
    return tuple(col[a] for a in top), tuple(col[b] for b in bottom)


def _band_rows(A, r):
    return A.row(r), A.row(r + 1)


def _build(r, top, bottom, top_cols, bottom_cols):
    placement = {a: (r, c) for a, c in zip(top, top_cols)}
    placement.update({b: (r + 1, c) for b, c in zip(bottom, bottom_cols)})
    return Alignment(r, placement)


def pre_alignment(A, r):
    top, bottom = _band_rows(A, r)
    col = _pre_columns(A.poset, top, bottom)
    return _build(r, top, bottom, [col[a] for a in top], [col[b] for b in bottom])


def align(A, r):
    """The r alignment of ``A``."""
    top, bottom = _band_rows(A, r)
    top_cols, bottom_cols = _align_columns(A.poset, top, bottom)
    return _build(r, top, bottom, top_cols, bottom_cols)


def align_columns(P, top, bottom):
    """Column tuples for two chains given directly (cached)."""
    return _align_columns(P, tuple(top), tuple(bottom))


def is_weak_alignment(A, r, phi):
    """Check the four defining properties of a weak r alignment."""
    P = A.poset
    top, bottom = _band_rows(A, r)
    if set(phi.placement) != set(top) | set(bottom):
        return False
    # (1) bands in their rows, strictly increasing columns
    for seq, row in ((top, r), (bottom, r + 1)):
        for x in seq:
            if phi.placement[x][0] != row or phi.placement[x][1] < 1:
                return False
        cols = [phi.placement[x][1] for x in seq]
        if any(c1 >= c2 for c1, c2 in zip(cols, cols[1:])):
            return False
    used = {c for _, c in phi.placement.values()}
    # (2) no gaps
    if any(c > 1 and c - 1 not in used for c in used):
        return False
    # (3) bottom x < top y forces x strictly left of y
    for x in bottom:
        for y in top:
            if P.lt(x, y) and not phi.placement[x][1] < phi.placement[y][1]:
                return False
    # (4) the next column is empty or holds something greater
    by_col = {}
    for x, (_, c) in phi.placement.items():
        by_col.setdefault(c, []).append(x)
    for x, (_, c) in phi.placement.items():
        nxt = by_col.get(c + 1)
        if nxt and not any(P.lt(x, y) for y in nxt):
            return False
    return True


def all_weak_alignments(A, r, guard=10):
    """Every weak r alignment with columns in ``1..m+n`` (exhaustive)."""
    top, bottom = _band_rows(A, r)
    m, n = len(top), len(bottom)
    if m + n > guard:
        raise GuardExceeded(f"{m + n} entries exceed the enumeration guard {guard}")
    width = m + n
    found = []
    for top_cols in itertools.combinations(range(1, width + 1), m):
        for bottom_cols in itertools.combinations(range(1, width + 1), n):
            phi = _build(r, top, bottom, top_cols, bottom_cols)
            if is_weak_alignment(A, r, phi):
                found.append(phi)
    return found


def minimal_weak_alignments(A, r, guard=10):
    """The ``precedes``-minimal elements among all weak r alignments."""
    found = all_weak_alignments(A, r, guard)
    return [phi for phi in found if not any(psi != phi and psi.precedes(phi) for psi in found)]
