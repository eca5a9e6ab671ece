"""Finite posets, structural predicates and random generators.

Elements are opaque string ids.  A natural-number labelling may be attached
separately; only the unit-interval-order material needs it.
"""

import itertools
import json
import random
from dataclasses import dataclass

from .errors import CycleError, MissingLabels, PosetError, UnknownElement


class FinitePoset:
    """A finite strict partial order ``<_P``.

    Instances are immutable after construction and compare by identity, so they
    can be used as cache keys cheaply.
    """

    def __init__(self, elements, lt, labels=None):
        self.elements = tuple(elements)
        self._index = {x: i for i, x in enumerate(self.elements)}
        self._lt = frozenset(lt)
        self._up = {x: set() for x in self.elements}
        self._down = {x: set() for x in self.elements}
        for u, v in self._lt:
            self._up[u].add(v)
            self._down[v].add(u)
        self._up = {x: frozenset(s) for x, s in self._up.items()}
        self._down = {x: frozenset(s) for x, s in self._down.items()}
        if labels is not None:
            labels = dict(labels)
            if set(labels) != set(self.elements):
                raise PosetError("labels must cover exactly the elements")
            values = list(labels.values())
            if any(not isinstance(v, int) or v < 0 for v in values):
                raise PosetError("labels must be natural numbers")
            if len(set(values)) != len(values):
                raise PosetError("labels must be pairwise distinct")
        self.labels = labels

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def __repr__(self):
        return f"FinitePoset({len(self)} elements, {len(self._lt)} relations)"

    @property
    def relations(self):
        """All pairs ``(u, v)`` with ``u <_P v``."""
        return self._lt

    def index(self, x):
        return self._index[x]

    def lt(self, u, v):
        return (u, v) in self._lt

    def gt(self, u, v):
        return (v, u) in self._lt

    def comparable(self, u, v):
        return u == v or (u, v) in self._lt or (v, u) in self._lt

    def incomparable(self, u, v):
        return not self.comparable(u, v)

    def above(self, x):
        return self._up[x]

    def below(self, x):
        return self._down[x]

    def height(self, x):
        # Strictly increasing along any chain, so it sorts chains.
        return len(self._down[x])

    def sort_chain(self, items):
        """Return ``items`` in ``<_P``-increasing order; they must form a chain."""
        return tuple(sorted(items, key=lambda x: (len(self._down[x]), self._index[x])))

    def is_chain(self, items):
        items = list(items)
        return all(self.comparable(u, v) for u, v in itertools.combinations(items, 2))

    def label(self, x):
        if self.labels is None:
            raise MissingLabels("poset has no natural-number labels")
        return self.labels[x]

    def covers(self):
        """The cover relation (Hasse diagram edges), sorted."""
        out = []
        for u, v in self._lt:
            if not any((u, w) in self._lt and (w, v) in self._lt for w in self.elements):
                out.append((u, v))
        return sorted(out, key=lambda e: (self._index[e[0]], self._index[e[1]]))


def transitive_closure(elements, pairs):
    """Transitive closure of a relation given as ordered pairs."""
    up = {x: set() for x in elements}
    for u, v in pairs:
        up[u].add(v)
    closed = set()
    for x in elements:
        seen = set()
        stack = list(up[x])
        while stack:
            y = stack.pop()
            if y in seen:
                continue
            seen.add(y)
            stack.extend(up[y])
        closed.update((x, y) for y in seen)
    return closed


def build_poset(elements, covers, labels=None):
    """Build a poset from its elements and a generating set of relations."""
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise PosetError("element ids must be distinct")
    known = set(elements)
    for pair in covers:
        u, v = pair
        for x in (u, v):
            if x not in known:
                raise UnknownElement(f"unknown element {x!r} in cover {pair!r}")
    lt = transitive_closure(elements, covers)
    loops = sorted(x for x, y in lt if x == y)
    if loops:
        raise CycleError(f"relation is cyclic through {loops[0]!r}")
    if labels is not None and set(labels) - known:
        raise UnknownElement(f"labels for unknown elements {sorted(set(labels) - known)}")
    return FinitePoset(elements, lt, labels)


def antichain(n, prefix="x"):
    return build_poset([f"{prefix}{i}" for i in range(1, n + 1)], [])


def chain(n, prefix="x", labelled=False):
    ids = [f"{prefix}{i}" for i in range(1, n + 1)]
    covers = list(zip(ids, ids[1:]))
    labels = {x: i for i, x in enumerate(ids, 1)} if labelled else None
    return build_poset(ids, covers, labels)


def disjoint_union(*posets):
    elements, lt = [], set()
    labels = {}
    for P in posets:
        elements.extend(P.elements)
        lt.update(P.relations)
        if P.labels is not None:
            labels.update(P.labels)
    return FinitePoset(elements, lt, labels if len(labels) == len(elements) else None)


# -- structural predicates -------------------------------------------------

def find_three_plus_one(P):
    """Return a witness ``(x, y, z, w)`` with ``x<y<z`` and ``w`` incomparable to all, or None."""
    for x, y, z in itertools.permutations(P.elements, 3):
        if P.lt(x, y) and P.lt(y, z):
            for w in P.elements:
                if w not in (x, y, z) and all(P.incomparable(w, u) for u in (x, y, z)):
                    return (x, y, z, w)
    return None


def is_three_plus_one_free(P):
    return find_three_plus_one(P) is None


def find_two_plus_two(P):
    """Return ``(x, y, u, v)`` with ``x<y``, ``u<v`` and no other relations among them, or None."""
    for (x, y), (u, v) in itertools.permutations(sorted(P.relations), 2):
        if len({x, y, u, v}) < 4:
            continue
        if all(P.incomparable(p, q) for p in (x, y) for q in (u, v)):
            return (x, y, u, v)
    return None


def is_two_plus_two_free(P):
    return find_two_plus_two(P) is None


def is_natural_unit_interval_order(P):
    if P.labels is None:
        raise MissingLabels("natural unit interval order check needs labels")
    lab = P.labels
    for u, v in P.relations:
        if not lab[u] < lab[v]:
            return False
    for u, w in P.relations:
        for v in P.elements:
            if v in (u, w):
                continue
            if P.incomparable(v, w) and P.incomparable(v, u):
                if not lab[u] < lab[v] < lab[w]:
                    return False
    return True


# -- incomparability graph -------------------------------------------------

@dataclass(frozen=True)
class IncGraph:
    vertices: tuple
    edges: frozenset
    labels: dict = None

    def neighbours(self, v):
        return {w for e in self.edges if v in e for w in e if w != v}

    def edge_list(self):
        order = {v: i for i, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=order.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (order[p[0]], order[p[1]]))


def incomparability_graph(P):
    edges = frozenset(
        frozenset((u, v)) for u, v in itertools.combinations(P.elements, 2) if P.incomparable(u, v)
    )
    return IncGraph(P.elements, edges, P.labels)


# -- serialisation ---------------------------------------------------------

def poset_to_dict(P):
    out = {
        "elements": sorted(P.elements),
        "covers": sorted([list(c) for c in P.covers()]),
    }
    if P.labels is not None:
        out["labels"] = {x: P.labels[x] for x in sorted(P.elements)}
    return out


def poset_from_dict(data):
    try:
        elements = data["elements"]
        covers = [tuple(c) for c in data.get("covers", [])]
    except (KeyError, TypeError) as exc:
        raise PosetError(f"malformed poset description: {exc}") from exc
    if any(len(c) != 2 for c in covers):
        raise PosetError("every cover must be a pair")
    return build_poset([str(x) for x in elements], covers, data.get("labels"))


def load_poset(path):
    with open(path) as fh:
        return poset_from_dict(json.load(fh))


def dump_poset(P, path):
    with open(path, "w") as fh:
        json.dump(poset_to_dict(P), fh, indent=2)
        fh.write("\n")


# -- generators ------------------------------------------------------------

def random_nuio(n, seed, spread=None):
    """Random natural unit interval order on ``n`` points.

    Draws ``n`` reals, relates ``u <_P v`` iff ``u + 1 < v`` and relabels the
    points ``1..n`` in increasing real order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    if spread is None:
        spread = max(1.0, n / 2.0)
    reals = sorted(rng.uniform(0.0, spread) for _ in range(n))
    ids = [str(i) for i in range(1, n + 1)]
    covers = [(ids[i], ids[j]) for i in range(n) for j in range(n) if reals[i] + 1 < reals[j]]
    return build_poset(ids, covers, {x: i for i, x in enumerate(ids, 1)})


def _element_names(n):
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"e{i}" for i in range(n)]


def random_31free_poset(n, seed, density=0.35, max_attempts=10_000):
    """Random (3+1)-free poset by rejection sampling over random relation sets.

    Deterministic for a given seed; not uniform over isomorphism classes.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    ids = _element_names(n)
    for _ in range(max_attempts):
        order = ids[:]
        rng.shuffle(order)
        pairs = [
            (order[i], order[j])
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < density
        ]
        P = build_poset(ids, pairs)
        if is_three_plus_one_free(P):
            return P
    raise PosetError(f"no (3+1)-free poset found in {max_attempts} attempts")


def figure1_poset():
    """The eight-element (3+1)-free poset used as the running example."""
    covers = [
        ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"),
        ("g", "b"), ("a", "h"), ("g", "h"), ("h", "d"),
    ]
    return build_poset(list("abcdefgh"), covers)


def poset_q():
    """The four-element poset with ``c<a``, ``d<a``, ``d<b``."""
    return build_poset(list("abcd"), [("c", "a"), ("d", "a"), ("d", "b")])
