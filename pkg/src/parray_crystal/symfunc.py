"""Symmetric polynomials in N variables stored in the monomial basis.

A :class:`SymPoly` maps partitions ``lam`` (length <= N) to the coefficient of
the monomial symmetric polynomial ``m_lam``.  Schur polynomials are computed
from semistandard Young tableaux, which keeps them independent of everything
else in the package.
"""

import itertools
from collections import Counter
from functools import lru_cache
from math import factorial

from .errors import AsymmetricInput, LengthExceedsVars, NonHomogeneous, UnequalSizes


def partitions(n, max_len=None, max_part=None):
    """Partitions of ``n`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions(n - first, rest_len, first):
            yield (first,) + rest


def conjugate(lam):
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def dominance_leq(lam, mu):
    """``lam`` is dominated by ``mu`` (prefix sums of ``lam`` never exceed those of ``mu``)."""
    if sum(lam) != sum(mu):
        raise UnequalSizes(f"{lam} and {mu} have different sizes")
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam[i] if i < len(lam) else 0
        t += mu[i] if i < len(mu) else 0
        if s > t:
            return False
    return True


def _sorted_partition(alpha):
    return tuple(sorted((a for a in alpha if a), reverse=True))


def orbit_size(lam, n_vars):
    """Number of distinct exponent vectors of length ``n_vars`` that sort to ``lam``."""
    counts = Counter(lam)
    zeros = n_vars - len(lam)
    denom = factorial(zeros)
    for c in counts.values():
        denom *= factorial(c)
    return factorial(n_vars) // denom


class SymPoly:
    """Symmetric polynomial in ``n_vars`` variables, monomial basis, integer coefficients."""

    __slots__ = ("n_vars", "coeffs")

    def __init__(self, n_vars, coeffs=None):
        self.n_vars = n_vars
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if len(lam) > n_vars:
                raise LengthExceedsVars(f"{lam} has more than {n_vars} parts")
            if c:
                clean[lam] = clean.get(lam, 0) + int(c)
        self.coeffs = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def zero(cls, n_vars):
        return cls(n_vars)

    @classmethod
    def from_monomials(cls, n_vars, terms):
        """Compress ``{exponent vector: coefficient}``; rejects non-symmetric input."""
        full = {}
        for alpha, c in terms.items():
            alpha = tuple(alpha)
            if any(a for a in alpha[n_vars:]):
                raise LengthExceedsVars(f"exponent {alpha} uses more than {n_vars} variables")
            alpha = alpha[:n_vars] + (0,) * (n_vars - len(alpha))
            if c:
                full[alpha] = full.get(alpha, 0) + c
        by_orbit = {}
        for alpha, c in full.items():
            by_orbit.setdefault(_sorted_partition(alpha), {})[alpha] = c
        coeffs = {}
        for lam, members in by_orbit.items():
            values = set(members.values())
            if len(values) != 1 or len(members) != orbit_size(lam, n_vars):
                witness = _orbit_witness(lam, members, n_vars)
                raise AsymmetricInput(f"monomials in the orbit of {lam} are not uniform", witness)
            coeffs[lam] = values.pop()
        return cls(n_vars, coeffs)

    def monomials(self):
        """Expand to ``{exponent vector: coefficient}``."""
        out = {}
        for lam, c in self.coeffs.items():
            padded = lam + (0,) * (self.n_vars - len(lam))
            for alpha in set(itertools.permutations(padded)):
                out[alpha] = c
        return out

    def coefficient(self, alpha):
        """Coefficient of the monomial ``x^alpha``."""
        alpha = tuple(alpha)
        if any(alpha[self.n_vars:]):
            return 0
        return self.coeffs.get(_sorted_partition(alpha), 0)

    def degrees(self):
        return {sum(lam) for lam in self.coeffs}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def evaluate_ones(self):
        return sum(c * orbit_size(lam, self.n_vars) for lam, c in self.coeffs.items())

    def _check(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        if other.n_vars != self.n_vars:
            raise ValueError(f"variable counts differ: {self.n_vars} vs {other.n_vars}")
        return other

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n_vars == other.n_vars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n_vars, frozenset(self.coeffs.items())))

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPoly(self.n_vars, out)

    def __neg__(self):
        return SymPoly(self.n_vars, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymPoly(self.n_vars, {lam: c * other for lam, c in self.coeffs.items()})
        other = self._check(other)
        left, right = self.monomials(), other.monomials()
        prod = {}
        for a, c in left.items():
            for b, d in right.items():
                k = tuple(x + y for x, y in zip(a, b))
                prod[k] = prod.get(k, 0) + c * d
        return SymPoly.from_monomials(self.n_vars, prod)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"SymPoly({self.n_vars}, {self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        return format_combination(self.coeffs, "m")

    def to_dict(self):
        return {"n_vars": self.n_vars, "m": [[list(lam), c] for lam, c in sorted(self.coeffs.items(), reverse=True)]}


def _orbit_witness(lam, members, n_vars):
    padded = lam + (0,) * (n_vars - len(lam))
    for alpha in sorted(set(itertools.permutations(padded))):
        if alpha not in members:
            return alpha
    return max(members, key=members.get)


def sym_from_weights(weights, n_vars):
    """Generating function ``sum x^w`` of a multiset of compositions."""
    counts = Counter()
    for w in weights:
        w = tuple(w)
        if any(w[n_vars:]):
            raise LengthExceedsVars(f"weight {w} has more than {n_vars} parts")
        counts[w[:n_vars] + (0,) * (n_vars - len(w))] += 1
    return SymPoly.from_monomials(n_vars, counts)


def ssyt(lam, n_vars):
    """Semistandard Young tableaux of shape ``lam`` with entries in ``1..n_vars``.

    Tableaux are tuples of rows; rows weakly increase, columns strictly increase.
    Filled row by row, cell by cell, with the bounds each cell must respect.
    """
    lam = tuple(lam)
    cells = [(i, j) for i, part in enumerate(lam) for j in range(part)]
    grid = [[0] * part for part in lam]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # room for the strictly increasing column below
        hi = n_vars - (len([p for p in lam if p > j]) - 1 - i)
        for v in range(lo, hi + 1):
            grid[i][j] = v
            yield from fill(k + 1)
        grid[i][j] = 0

    yield from fill(0)


def content(tableau, n_vars):
    c = [0] * n_vars
    for row in tableau:
        for v in row:
            c[v - 1] += 1
    return tuple(c)


@lru_cache(maxsize=None)
def schur(lam, n_vars):
    lam = tuple(lam)
    if len(lam) > n_vars:
        raise LengthExceedsVars(f"s{list(lam)} needs at least {len(lam)} variables")
    return sym_from_weights((content(t, n_vars) for t in ssyt(lam, n_vars)), n_vars)


def kostka(lam, mu):
    """Number of SSYT of shape ``lam`` and content ``mu``."""
    n = max(len(mu), 1)
    return schur(tuple(lam), max(n, len(lam))).coefficient(mu)


def schur_expand(f):
    """Coefficients of ``f`` in the Schur basis (lengths <= N).

    Triangular elimination: peel off a dominance-maximal monomial term each step,
    the lexicographically largest among incomparable maxima.
    """
    if not f.is_homogeneous():
        raise NonHomogeneous(f"degrees {sorted(f.degrees())} present")
    rest = f
    out = {}
    while rest.coeffs:
        support = list(rest.coeffs)
        maxima = [lam for lam in support if not any(mu != lam and dominance_leq(lam, mu) for mu in support)]
        lead = max(maxima)
        c = rest.coeffs[lead]
        out[lead] = out.get(lead, 0) + c
        rest = rest - schur(lead, f.n_vars) * c
    return {lam: c for lam, c in out.items() if c}


def schur_combination(coeffs, n_vars):
    total = SymPoly.zero(n_vars)
    for lam, c in coeffs.items():
        total = total + schur(tuple(lam), n_vars) * c
    return total


def format_combination(coeffs, basis="s"):
    """Render ``{lam: c}`` as e.g. ``s[2,2] + s[2,1,1]`` (dominance-friendly order)."""
    if not coeffs:
        return "0"
    pieces = []
    for lam, c in sorted(coeffs.items(), reverse=True):
        term = f"{basis}[{','.join(map(str, lam))}]"
        if c == 1:
            pieces.append(("+", term))
        elif c == -1:
            pieces.append(("-", term))
        else:
            pieces.append(("+" if c > 0 else "-", f"{abs(c)}*{term}"))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, term in pieces[1:]:
        text += f" {sign} {term}"
    return text


class QSymPoly:
    """Polynomial in ``q`` whose coefficients are :class:`SymPoly` in the same N."""

    def __init__(self, n_vars, terms=None):
        self.n_vars = n_vars
        self.terms = {}
        for deg, f in (terms or {}).items():
            if f.n_vars != n_vars:
                raise ValueError("all q-coefficients must share the variable count")
            if f:
                self.terms[deg] = self.terms.get(deg, SymPoly.zero(n_vars)) + f
        self.terms = {d: f for d, f in self.terms.items() if f}

    def add_term(self, deg, f):
        return self + QSymPoly(self.n_vars, {deg: f})

    def __add__(self, other):
        out = dict(self.terms)
        for d, f in other.terms.items():
            out[d] = out.get(d, SymPoly.zero(self.n_vars)) + f
        return QSymPoly(self.n_vars, out)

    def __eq__(self, other):
        if not isinstance(other, QSymPoly):
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    def at_q_equals_one(self):
        total = SymPoly.zero(self.n_vars)
        for f in self.terms.values():
            total = total + f
        return total

    def schur_expand(self):
        return {d: schur_expand(f) for d, f in sorted(self.terms.items())}

    def __repr__(self):
        return f"QSymPoly({self.n_vars}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"q^{d}*({f})" for d, f in sorted(self.terms.items()))
