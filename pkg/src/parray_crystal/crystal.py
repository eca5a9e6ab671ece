"""Crystal raising and lowering operators on P-arrays, and crystal components.

Both operators read the r alignment of rows ``r, r+1``.  Lowering takes the
leftmost top entry standing alone in its column and carries it, together with
the run of columns to its right whose bottom entry is *not* greater than the
top entry one column left, into row ``r+1``; the bottom entries of those
columns go up.  Raising is the mirror image, starting from the rightmost lone
bottom entry.

Operators are exposed for ``1 <= r < N`` only, where ``N`` is the array's
row bound.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .alignment import align_columns
from .errors import AsymmetricCharacter, AsymmetricInput, CrystalError, InternalInvariantViolation, OperatorUndefined
from .parray import PArray, enumerate_parrays, is_p_tableau, padded_weight
from .symfunc import sym_from_weights


def _resort(P, items):
    if not P.is_chain(items):
        raise InternalInvariantViolation(f"operator produced a non-chain row {sorted(items)}")
    return P.sort_chain(items)


@lru_cache(maxsize=1 << 18)
def lower_rows(P, top, bottom):
    """Apply ``f_r`` to the row pair ``(top, bottom)``; None when undefined."""
    tc, bc = align_columns(P, top, bottom)
    bottom_at = dict(zip(bc, bottom))
    start = next((i for i, c in enumerate(tc) if c not in bottom_at), None)
    if start is None:
        return None
    down, up = [top[start]], []
    i = start
    while True:
        b = bottom_at.get(tc[i] + 1)
        if b is None or P.lt(top[i], b):
            break
        if i + 1 >= len(top) or tc[i + 1] != tc[i] + 1:
            raise InternalInvariantViolation("lowering run left the top band")
        up.append(b)
        i += 1
        down.append(top[i])
    new_top = [x for x in top if x not in down] + up
    new_bottom = [x for x in bottom if x not in up] + down
    return _resort(P, new_top), _resort(P, new_bottom)


@lru_cache(maxsize=1 << 18)
def raise_rows(P, top, bottom):
    """Apply ``e_r`` to the row pair ``(top, bottom)``; None when undefined."""
    tc, bc = align_columns(P, top, bottom)
    top_at = dict(zip(tc, top))
    lone = [j for j, c in enumerate(bc) if c not in top_at]
    if not lone:
        return None
    j = lone[-1]
    up, down = [bottom[j]], []
    while True:
        a = top_at.get(bc[j] + 1)
        if a is None or P.lt(bottom[j], a):
            break
        if j + 1 >= len(bottom) or bc[j + 1] != bc[j] + 1:
            raise InternalInvariantViolation("raising run left the bottom band")
        down.append(a)
        j += 1
        up.append(bottom[j])
    new_top = [x for x in top if x not in down] + up
    new_bottom = [x for x in bottom if x not in up] + down
    return _resort(P, new_top), _resort(P, new_bottom)


def _check_r(A, r):
    if not 1 <= r < A.n_rows:
        raise CrystalError(f"operator index {r} outside 1..{A.n_rows - 1}")


def _apply(A, r, rows_fn):
    _check_r(A, r)
    result = rows_fn(A.poset, A.rows[r - 1], A.rows[r])
    if result is None:
        return None
    rows = list(A.rows)
    rows[r - 1], rows[r] = result
    return PArray(A.poset, rows, A.n_rows, check=False)


def lower(A, r):
    """``f_r(A)``, or None for the zero element."""
    return _apply(A, r, lower_rows)


def raise_(A, r):
    """``e_r(A)``, or None for the zero element."""
    return _apply(A, r, raise_rows)


def is_highest_weight(A):
    return all(raise_(A, r) is None for r in range(1, A.n_rows))


def row_pair_components(A, r):
    """Connected components of inc(P) restricted to rows ``r`` and ``r+1``."""
    P = A.poset
    vertices = list(A.row(r)) + list(A.row(r + 1))
    seen, comps = set(), []
    for v in vertices:
        if v in seen:
            continue
        comp, stack = set(), [v]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(y for y in vertices if y not in comp and P.incomparable(x, y))
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _is_path(P, comp):
    comp = list(comp)
    edges = [(u, v) for i, u in enumerate(comp) for v in comp[i + 1:] if P.incomparable(u, v)]
    if len(edges) != len(comp) - 1:
        return False
    degree = {x: 0 for x in comp}
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    return all(d <= 2 for d in degree.values())


def flipped_set(A, r, direction):
    """Elements whose row changes under ``f_r`` (``"lower"``) or ``e_r`` (``"raise"``).

    Re-derived from the row contents before and after, then checked to be a
    single connected component of inc(P) on rows ``r, r+1`` forming a path whose
    two sides differ in size by one.
    """
    op = lower if direction == "lower" else raise_
    B = op(A, r)
    if B is None:
        raise OperatorUndefined(f"{direction} is undefined on {A!r} at r={r}")
    moved = frozenset(x for x in A.poset.elements if A.row_of(x) != B.row_of(x))
    if moved not in row_pair_components(A, r):
        raise InternalInvariantViolation(f"flipped set {sorted(moved)} is not one inc-component")
    source = r if direction == "lower" else r + 1
    n_src = sum(1 for x in moved if A.row_of(x) == source)
    if n_src != len(moved) - n_src + 1:
        raise InternalInvariantViolation("flipped set sides do not differ by one")
    if not _is_path(A.poset, moved):
        raise InternalInvariantViolation(f"flipped set {sorted(moved)} is not a path")
    return moved


@dataclass
class CrystalComponent:
    """A connected component of the truncated P-array crystal."""

    vertices: tuple
    edges: tuple
    n_rows: int
    roots: tuple = field(default=())

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, A):
        return A in self.vertex_set

    @property
    def vertex_set(self):
        try:
            return self._vertex_set
        except AttributeError:
            self._vertex_set = frozenset(self.vertices)
            return self._vertex_set

    def root_keys(self):
        return frozenset(T.key() for T in self.roots)

    def weights(self):
        return [padded_weight(A) for A in self.vertices]


def _neighbours(A):
    for r in range(1, A.n_rows):
        B = lower(A, r)
        if B is not None:
            yield ("f", r, B)
        B = raise_(A, r)
        if B is not None:
            yield ("e", r, B)


def component_of(A, n_rows=None):
    """BFS closure of ``A`` under every ``e_r`` and ``f_r`` with ``r < N``."""
    if n_rows is not None and n_rows != A.n_rows:
        A = A.resize(n_rows)
    seen = {A}
    queue = deque([A])
    edges = set()
    while queue:
        X = queue.popleft()
        for kind, r, Y in _neighbours(X):
            edges.add((X, r, Y) if kind == "f" else (Y, r, X))
            if Y not in seen:
                seen.add(Y)
                queue.append(Y)
    vertices = tuple(sorted(seen))
    roots = tuple(v for v in vertices if is_highest_weight(v))
    return CrystalComponent(vertices, tuple(sorted(edges, key=lambda e: (e[0].sort_key(), e[1]))), A.n_rows, roots)


def all_components(P, n_rows=None, arrays=None):
    """Partition every P-array with ``N`` rows into crystal components."""
    if n_rows is None:
        n_rows = len(P)
    if arrays is None:
        arrays = enumerate_parrays(P, n_rows)
    done = set()
    comps = []
    for A in arrays:
        if A in done:
            continue
        C = component_of(A)
        done |= C.vertex_set
        comps.append(C)
    return comps


def character(C):
    """``sum x^wt(v)`` over the component, as a symmetric polynomial in N variables."""
    try:
        return sym_from_weights(C.weights(), C.n_rows)
    except AsymmetricInput as exc:
        raise AsymmetricCharacter(f"component character is not symmetric: {exc}", exc.witness) from exc
