import pytest
from hypothesis import given, settings, strategies as st

from kschur import DomainError
from kschur.algebra import (
    H_product,
    LinearCombination,
    M_quasi_shuffle,
    chi_project,
    h_product,
    invert_integer_matrix,
    pairing,
)

words = st.lists(st.integers(1, 3), max_size=3).map(tuple)


def H(index, k=None, coeff=1):
    return LinearCombination.single("H", index, k, coeff)


def M(index, k=None, coeff=1):
    return LinearCombination.single("M", index, k, coeff)


def h(index, k=None, coeff=1):
    return LinearCombination.single("h", index, k, coeff)


def test_combination_drops_zeros_and_mixes_raise():
    assert LinearCombination("H", None, {(2,): 0}).is_zero()
    with pytest.raises(DomainError):
        H((2,)) + LinearCombination.single("M", (2,), None)
    with pytest.raises(DomainError):
        H((2,), k=2) + H((2,), k=3)
    assert H((2,)) - H((2,)) == LinearCombination.zero("H", None)


def test_bounded_combinations_reject_tall_indices():
    with pytest.raises(DomainError):
        LinearCombination.single("H", (3, 1), 2)
    assert LinearCombination.single("H", (3, 1), 3).coefficient((3, 1)) == 1


def test_h_product_examples():
    assert h_product(h((2,)), h((1,))) == h((2, 1))
    assert h_product(h((1,)), h((1,))) == h((1, 1))
    assert h_product(h((2,)) + h((1, 1)), h((1,))) == h((2, 1)) + h((1, 1, 1))


def test_H_product_examples():
    assert H_product(H((2,)), H((1,))) == H((2, 1))
    assert H_product(H((1,)), H((2,))) == H((1, 2))
    assert H_product(H((1, 2)), H(())) == H((1, 2))
    assert H_product(H((2,)), H((1,))) != H_product(H((1,)), H((2,)))


def test_quasi_shuffle_examples():
    assert M_quasi_shuffle(M((1,)), M((1,))) == M((1, 1), coeff=2) + M((2,))
    assert M_quasi_shuffle(M((1,), k=1), M((1,), k=1)) == M((1, 1), k=1, coeff=2)
    assert M_quasi_shuffle(M(()), M((2, 1))) == M((2, 1))


@given(words, words)
def test_quasi_shuffle_commutative(x, y):
    assert M_quasi_shuffle(M(x), M(y)) == M_quasi_shuffle(M(y), M(x))


@settings(max_examples=40)
@given(words, words, words)
def test_quasi_shuffle_associative(x, y, z):
    left = M_quasi_shuffle(M_quasi_shuffle(M(x), M(y)), M(z))
    right = M_quasi_shuffle(M(x), M_quasi_shuffle(M(y), M(z)))
    assert left == right


@settings(max_examples=40)
@given(words, words, words)
def test_H_product_associative(x, y, z):
    assert H_product(H_product(H(x), H(y)), H(z)) == H_product(H(x), H_product(H(y), H(z)))


@settings(max_examples=40)
@given(words, words, words)
def test_h_product_associative_commutative(x, y, z):
    hx, hy, hz = (h(tuple(sorted(w, reverse=True))) for w in (x, y, z))
    assert h_product(hx, hy) == h_product(hy, hx)
    assert h_product(h_product(hx, hy), hz) == h_product(hx, h_product(hy, hz))


@given(words, words)
def test_quotient_ideal_soundness(x, y):
    # A product with a factor containing a part above k only produces
    # terms containing a part above k, so the quotient discards a full ideal.
    k = 2
    tall = (k + 1,) + x
    product = M_quasi_shuffle(M(tall), M(y))
    for index, _ in product.terms():
        assert any(p > k for p in index)


def test_pairing_examples():
    assert pairing(M((2, 1)), H((2, 1))) == 1
    assert pairing(M((2, 1)), H((1, 2))) == 0
    m_side = LinearCombination.single("m", (2, 1), 3)
    h_side = LinearCombination.single("h", (2, 1), 3, coeff=5)
    assert pairing(m_side, h_side) == 5
    combo = M((2, 2)) + M((2, 1, 1)) + M((1, 2, 1)) + M((1, 1, 2)) + M((1, 1, 1, 1), coeff=2)
    assert pairing(combo, H((1, 1, 1, 1))) == 2
    with pytest.raises(DomainError):
        pairing(H((2,)), M((2,)))
    with pytest.raises(DomainError):
        pairing(M((2,), k=2), H((2,), k=3))


def test_chi_project_examples():
    assert chi_project(H((1, 3, 1))) == h((3, 1, 1))
    assert chi_project(H((2, 1)) - H((1, 2))).is_zero()
    assert chi_project(H((2,)) + H((1, 1))) == h((2,)) + h((1, 1))


@settings(max_examples=40)
@given(words, words)
def test_chi_is_an_algebra_map(x, y):
    left = chi_project(H_product(H(x), H(y)))
    right = h_product(chi_project(H(x)), chi_project(H(y)))
    assert left == right


def test_invert_examples():
    assert invert_integer_matrix([[1, 0], [0, 1]]) == [[1, 0], [0, 1]]
    assert invert_integer_matrix([[1, 0], [1, 1]]) == [[1, 0], [-1, 1]]
    with pytest.raises(DomainError):
        invert_integer_matrix([[1, 1], [1, 1]])
    with pytest.raises(DomainError):
        invert_integer_matrix([[2]])


def test_invert_round_trip():
    matrix = [[1, 0, 0, 0], [-1, 1, 0, 0], [-1, 0, 1, 0], [1, -1, -1, 1]]
    inverse = invert_integer_matrix(matrix)
    n = len(matrix)
    product = [
        [sum(matrix[i][t] * inverse[t][j] for t in range(n)) for j in range(n)]
        for i in range(n)
    ]
    assert product == [[int(i == j) for j in range(n)] for i in range(n)]


def test_terms_are_sorted_and_exact():
    combo = H((3,)) + H((1, 2), coeff=-1) + H((1, 1, 1), coeff=10**30)
    assert combo.terms() == (
        ((1, 1, 1), 10**30),
        ((1, 2), -1),
        ((3,), 1),
    )
