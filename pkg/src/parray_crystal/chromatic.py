"""Chromatic symmetric and quasisymmetric polynomials by direct colouring enumeration.

These are the ground truth the crystal characters are compared against, so
nothing here touches P-arrays.
"""

from collections import Counter
from functools import lru_cache

from .errors import MissingLabels
from .symfunc import QSymPoly, SymPoly


def _vertex_order(G):
    if G.labels is not None:
        return sorted(G.vertices, key=G.labels.__getitem__)
    return list(G.vertices)


def proper_colorings(G, n_colors):
    """Yield every proper colouring ``{vertex: colour in 1..n_colors}``."""
    order = _vertex_order(G)
    adj = {v: set() for v in order}
    for e in G.edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    kappa = {}
    # forward pruning: remaining colours per vertex
    banned = {v: Counter() for v in order}

    def go(k):
        if k == len(order):
            yield dict(kappa)
            return
        v = order[k]
        for colour in range(1, n_colors + 1):
            if banned[v][colour]:
                continue
            later = [w for w in adj[v] if w not in kappa]
            kappa[v] = colour
            for w in later:
                banned[w][colour] += 1
            if all(any(not banned[w][c] for c in range(1, n_colors + 1)) for w in later):
                yield from go(k + 1)
            for w in later:
                banned[w][colour] -= 1
            del kappa[v]

    yield from go(0)


def _weight_of(kappa, n_colors):
    w = [0] * n_colors
    for colour in kappa.values():
        w[colour - 1] += 1
    return tuple(w)


def coloring_ascents(G, kappa):
    if G.labels is None:
        raise MissingLabels("ascents need vertex labels")
    lab = G.labels
    count = 0
    for e in G.edges:
        u, v = sorted(e, key=lab.__getitem__)
        if kappa[u] < kappa[v]:
            count += 1
    return count


def chromatic_sym(G, n_vars):
    """``X_G`` in ``n_vars`` variables: sum over proper colourings of ``prod x_kappa(v)``."""
    counts = Counter(_weight_of(k, n_vars) for k in proper_colorings(G, n_vars))
    return SymPoly.from_monomials(n_vars, counts)


def chromatic_qsym(G, n_vars):
    """``X_G(x, q)``: each colouring weighted by ``q^asc``."""
    if G.labels is None:
        raise MissingLabels("the quasisymmetric refinement needs vertex labels")
    graded = {}
    for kappa in proper_colorings(G, n_vars):
        d = coloring_ascents(G, kappa)
        graded.setdefault(d, Counter())[_weight_of(kappa, n_vars)] += 1
    return QSymPoly(n_vars, {d: SymPoly.from_monomials(n_vars, c) for d, c in graded.items()})


def count_proper_colorings(G, n_colors):
    return sum(1 for _ in proper_colorings(G, n_colors))


def chromatic_polynomial_value(G, k, max_vertices=10):
    """Chromatic polynomial at ``k`` by deletion-contraction (small graphs only)."""
    if len(G.vertices) > max_vertices:
        raise ValueError(f"deletion-contraction limited to {max_vertices} vertices")
    vertices = frozenset(G.vertices)
    edges = frozenset(frozenset(e) for e in G.edges)
    return _deletion_contraction(vertices, edges, k)


@lru_cache(maxsize=None)
def _deletion_contraction(vertices, edges, k):
    if not edges:
        return k ** len(vertices)
    e = min(edges, key=lambda s: sorted(s))
    u, v = sorted(e)
    deleted = edges - {e}
    contracted = set()
    for f in deleted:
        f = frozenset(u if x == v else x for x in f)
        if len(f) == 2:
            contracted.add(f)
    return _deletion_contraction(vertices, deleted, k) - _deletion_contraction(vertices - {v}, frozenset(contracted), k)
