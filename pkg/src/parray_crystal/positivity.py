"""Schur positivity of crystal components.

For a partition ``lam`` of length ``l`` and a permutation ``pi`` of ``1..l``
write ``pi(lam)_i = lam_{pi(i)} - pi(i) + i``.  The Schur coefficient of a
component character equals the signed count of its arrays whose weight is
some ``pi(lam)``, sign ``sgn(pi)``.  :func:`iota` is a sign-reversing
involution on those arrays built from crystal operators; its fixed points are
the P-tableaux of weight ``lam``.
"""

from dataclasses import dataclass

from .crystal import all_components, character, is_highest_weight, lower, raise_
from .errors import AscNotConstant, InternalInvariantViolation, MissingLabels, NoValidPi, VerificationFailure
from .parray import ascents, is_p_tableau, trim, weight
from .symfunc import QSymPoly, partitions, schur_expand


def permutation_sign(pi):
    pi = list(pi)
    sign, seen = 1, set()
    for start in range(len(pi)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = pi[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def act(pi, lam):
    """The weak composition ``pi(lam)`` (may contain negative parts)."""
    return tuple(lam[p - 1] - p + i for i, p in enumerate(pi, 1))


def compose_transposition(pi, r):
    """``pi * s_r``: swap the images of ``r`` and ``r+1``."""
    pi = list(pi)
    pi[r - 1], pi[r] = pi[r], pi[r - 1]
    return tuple(pi)


def recover_pi(w, lam):
    """The unique ``pi`` with ``pi(lam) = w``, or None."""
    lam = tuple(lam)
    ell = len(lam)
    w = tuple(w)
    if any(w[ell:]):
        return None
    w = w[:ell] + (0,) * (ell - len(w))
    shifted = {lam[j] - (j + 1): j + 1 for j in range(ell)}
    pi = []
    for i, wi in enumerate(w, 1):
        j = shifted.get(wi - i)
        if j is None:
            return None
        pi.append(j)
    if len(set(pi)) != ell:
        return None
    return tuple(pi)


@dataclass(frozen=True)
class SignedClass:
    lam: tuple
    pi: tuple
    members: tuple
    sign: int


def signed_classes(C, lam):
    """Group the arrays of ``C`` by the permutation recovering their weight."""
    lam = tuple(lam)
    groups = {}
    for A in C.vertices:
        pi = recover_pi(weight(A), lam)
        if pi is not None:
            groups.setdefault(pi, []).append(A)
    return [SignedClass(lam, pi, tuple(ms), permutation_sign(pi)) for pi, ms in sorted(groups.items())]


def _violation(A):
    """Minimal column ``c`` with a tableau violation, and the maximal row ``r`` there."""
    P = A.poset
    width = max((len(row) for row in A.rows), default=0)
    for c in range(1, width + 1):
        bad = []
        for i in range(1, A.n_rows):
            below = A.entry(i + 1, c)
            if below is None:
                continue
            above = A.entry(i, c)
            if above is None or P.gt(above, below):
                bad.append(i)
        if bad:
            return c, max(bad)
    return None


def iota(A, lam):
    """The sign-reversing involution on arrays with weight in the orbit of ``lam``."""
    lam = tuple(lam)
    pi = recover_pi(weight(A), lam)
    if pi is None:
        raise NoValidPi(f"weight {weight(A)} is not pi({list(lam)}) for any pi")
    if is_p_tableau(A):
        return A
    found = _violation(A)
    if found is None:
        raise InternalInvariantViolation("non-tableau without a violating column")
    _, r = found
    here = act(pi, lam)
    there = act(compose_transposition(pi, r), lam)
    if here[r - 1] >= here[r]:
        k, op = here[r - 1] - there[r - 1], lower
    else:
        k, op = there[r - 1] - here[r - 1], raise_
    if k < 1:
        raise InternalInvariantViolation(f"involution step count {k} at r={r} for {A!r}")
    B = A
    for _ in range(k):
        B = op(B, r)
        if B is None:
            raise InternalInvariantViolation(f"operator vanished inside the involution at r={r}")
    if trim(weight(B)) != trim(there):
        raise InternalInvariantViolation(f"involution landed on weight {weight(B)}, expected {there}")
    return B


def schur_coeff_signed(C, lam):
    """Signed count over the classes ``C_{pi(lam)}``."""
    return sum(cls.sign * len(cls.members) for cls in signed_classes(C, lam))


def check_involution(C, lam):
    """Verify that ``iota`` is a sign-reversing involution on the classes of ``C``.

    Returns ``(fixed points, number of cancelling pairs)``.
    """
    lam = tuple(lam)
    members = {}
    for cls in signed_classes(C, lam):
        for A in cls.members:
            members[A] = cls.sign
    fixed, pairs = [], 0
    for A, sign in members.items():
        B = iota(A, lam)
        if B not in members:
            raise VerificationFailure(f"iota left the classes of {list(lam)}", (A, B))
        if B == A:
            if not is_p_tableau(A):
                raise VerificationFailure("iota fixed a non-tableau", A)
            fixed.append(A)
            continue
        if members[B] != -sign:
            raise VerificationFailure("iota did not reverse the sign", (A, B))
        if iota(B, lam) != A:
            raise VerificationFailure("iota is not an involution", (A, B))
        pairs += 1
    for T in fixed:
        if trim(weight(T)) != lam:
            raise VerificationFailure("fixed point of iota with weight other than lambda", T)
    return fixed, pairs // 2


def tableau_counts(C):
    counts = {}
    for T in C.vertices:
        if is_p_tableau(T):
            lam = trim(weight(T))
            counts[lam] = counts.get(lam, 0) + 1
    return counts


def component_expansion(C, n_elements=None):
    """Schur expansion of ``char(C)``, from three independent routes that must agree.

    Counts P-tableaux by weight, then compares against triangular Schur
    expansion of the character and against the signed class counts for every
    partition with at most N parts.
    """
    if n_elements is None:
        n_elements = len(C.vertices[0].poset)
    counts = tableau_counts(C)
    roots = {T for T in C.vertices if is_highest_weight(T)}
    tabs = {T for T in C.vertices if is_p_tableau(T)}
    if roots != tabs:
        raise VerificationFailure("highest-weight vertices differ from P-tableaux", sorted(roots ^ tabs))
    expanded = schur_expand(character(C))
    if expanded != counts:
        raise VerificationFailure(f"Schur expansion {expanded} != tableau counts {counts}")
    for lam in partitions(n_elements, max_len=C.n_rows):
        signed = schur_coeff_signed(C, lam)
        if signed != counts.get(lam, 0):
            raise VerificationFailure(f"signed count {signed} for {list(lam)} != {counts.get(lam, 0)}")
    if any(c < 0 for c in expanded.values()):
        raise VerificationFailure("negative Schur coefficient", expanded)
    return counts


def component_ascents(C):
    """The common ascent count of a component; raises if it varies along an edge."""
    values = {A: ascents(A) for A in C.vertices}
    for src, r, tgt in C.edges:
        if values[src] != values[tgt]:
            raise AscNotConstant(f"ascents change along f_{r}", (src, r, tgt))
    distinct = set(values.values())
    if len(distinct) != 1:
        raise AscNotConstant("component has several ascent values", sorted(distinct))
    return distinct.pop()


def qsym_refinement(P, n_rows=None, components=None):
    """``sum_C q^asc(C) char(C)`` over the crystal components."""
    if P.labels is None:
        raise MissingLabels("the ascent grading needs a labelled poset")
    if n_rows is None:
        n_rows = len(P)
    if components is None:
        components = all_components(P, n_rows)
    total = QSymPoly(n_rows)
    for C in components:
        total = total.add_term(component_ascents(C), character(C))
    return total
