import pytest
from hypothesis import given, strategies as st

from parray_crystal.errors import AsymmetricInput, LengthExceedsVars, NonHomogeneous, UnequalSizes
from parray_crystal.symfunc import (
    QSymPoly, SymPoly, conjugate, dominance_leq, format_combination, kostka, partitions, schur,
    schur_combination, schur_expand, ssyt, sym_from_weights,
)


def test_sym_from_weights():
    assert sym_from_weights([(1, 0), (0, 1)], 2) == SymPoly(2, {(1,): 1})
    with pytest.raises(AsymmetricInput) as info:
        sym_from_weights([(2, 0), (1, 1)], 2)
    assert info.value.witness is not None


def test_schur_examples():
    assert schur((1,), 2) == SymPoly(2, {(1,): 1})
    assert schur((2, 1), 3).coefficient((1, 1, 1)) == 2
    assert schur((2, 2), 4).evaluate_ones() == 20
    with pytest.raises(LengthExceedsVars):
        schur((1, 1, 1), 2)


def test_expand_examples():
    for lam in [(3,), (2, 1), (1, 1, 1), (2, 2)]:
        assert schur_expand(schur(lam, 4)) == {lam: 1}
    x = schur((1,), 3)
    assert schur_expand(x * x) == {(2,): 1, (1, 1): 1}
    with pytest.raises(NonHomogeneous):
        schur_expand(schur((1,), 2) + schur((2,), 2))


def test_dominance_examples():
    assert dominance_leq((1, 1, 1), (2, 1)) and dominance_leq((2, 1), (3,))
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1, 1, 1), (2, 2, 2)) and not dominance_leq((2, 2, 2), (3, 1, 1, 1))
    with pytest.raises(UnequalSizes):
        dominance_leq((2,), (1,))


def test_format():
    assert format_combination({(2, 2): 1, (2, 1, 1): 1}) == "s[2,2] + s[2,1,1]"


def test_qsym():
    f = QSymPoly(2, {0: schur((1, 1), 2), 1: schur((1, 1), 2)})
    assert f.at_q_equals_one() == 2 * schur((1, 1), 2)
    assert f.schur_expand() == {0: {(1, 1): 1}, 1: {(1, 1): 1}}


def test_kostka_and_conjugate():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert conjugate((3, 1)) == (2, 1, 1)


@given(st.integers(1, 5), st.integers(1, 4))
def test_triangularity(n, N):
    for lam in partitions(n, max_len=N):
        s = schur(lam, N)
        assert s.coefficient(lam + (0,) * (N - len(lam))) == 1
        assert all(dominance_leq(mu, lam) for mu in s.coeffs)
        assert s.evaluate_ones() == sum(1 for _ in ssyt(lam, N))


@given(st.integers(1, 5), st.integers(1, 4), st.data())
def test_roundtrip(n, N, data):
    lams = list(partitions(n, max_len=N))
    coeffs = {lam: data.draw(st.integers(-3, 3)) for lam in lams}
    coeffs = {k: v for k, v in coeffs.items() if v}
    assert schur_expand(schur_combination(coeffs, N)) == coeffs
