import random
from fractions import Fraction

import pytest

from stochtensor import (check_vec_characterization, constraint_system, is_stochastic,
                         matrix_vec_check, satisfies, uniform)
from stochtensor.errors import DimensionError
from stochtensor.polytope import random_omega
from stochtensor.stochastic import all_slices
from stochtensor.tensor_core import Tensor3, zeros

from oracles import brute_is_stochastic, sympy_rank


def random_nonneg(rng, n):
    return Tensor3(n, tuple(Fraction(rng.randint(0, 4), rng.randint(1, 4)) for _ in range(n ** 3)))


def near_misses(T, rng):
    """Stochastic tensor nudged along one entry, or moved along a zero-sum direction."""
    out = []
    n = T.n
    for _ in range(3):
        c = rng.randrange(n ** 3)
        d = list(T.data)
        d[c] += Fraction(1, 97)
        out.append(Tensor3(n, tuple(d)))
    if n >= 2:
        # +-eps on a 2x2x2 alternating pattern keeps every line sum at 1
        eps = Fraction(1, 5)
        d = list(T.data)
        for i in (0, 1):
            for j in (0, 1):
                for k in (0, 1):
                    d[(k * n + i) * n + j] += eps * (-1) ** (i + j + k)
        out.append(Tensor3(n, tuple(d)))
    return out


def test_fixtures_stochastic(E, F):
    assert is_stochastic(E) and is_stochastic(F)


def test_broken_line_sum(E):
    d = list(E.data)
    d[(0 * 3 + 0) * 3 + 1] = 0  # entry (1, 2, 1)
    assert E.entry(1, 2, 1) == Fraction(1, 2)
    assert not is_stochastic(Tensor3(3, tuple(d)))


def test_vec_characterization_fixtures(E, F):
    assert check_vec_characterization(E) and check_vec_characterization(F)
    for n in range(1, 6):
        assert check_vec_characterization(uniform(n))


def test_negative_entry_with_unit_line_sums():
    # uniform(2) moved along the alternating pattern by 1: line sums stay 1, entries hit -1/2
    T = Tensor3(2, tuple(Fraction(1, 2) + (-1) ** (i + j + k)
                         for k in (0, 1) for i in (0, 1) for j in (0, 1)))
    assert any(v < 0 for v in T.data)
    assert not check_vec_characterization(T)
    assert not is_stochastic(T)


def test_vec_characterization_agrees_with_direct_check():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 3)
        T = random_nonneg(rng, n)
        assert is_stochastic(T) == check_vec_characterization(T) == brute_is_stochastic(T)


def test_agreement_on_members_and_near_misses(vertices3):
    rng = random.Random(11)
    for _ in range(30):
        T = random_omega(3, rng, terms=4, vertices=vertices3.vertices)
        assert is_stochastic(T) and check_vec_characterization(T)
        for M in near_misses(T, rng):
            assert is_stochastic(M) == check_vec_characterization(M) == brute_is_stochastic(M)


def test_matrix_vec_check(E):
    for _, _, S in all_slices(E):
        assert matrix_vec_check(S)
    assert matrix_vec_check([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert not matrix_vec_check([[1, 1], [0, 0]])
    assert not matrix_vec_check([[Fraction(3, 2), Fraction(-1, 2)], [Fraction(-1, 2), Fraction(3, 2)]])
    with pytest.raises(DimensionError):
        matrix_vec_check([[1, 0]])


def test_slices_of_stochastic_members_are_doubly_stochastic(vertices3):
    rng = random.Random(3)
    for _ in range(10):
        T = random_omega(3, rng, vertices=vertices3.vertices)
        assert all(matrix_vec_check(S) for _, _, S in all_slices(T))


@pytest.mark.parametrize("n,rows", [(1, 1), (2, 7), (3, 19), (4, 37), (5, 61)])
def test_reduced_row_counts(n, rows):
    C = constraint_system(n, reduced=True)
    assert C.num_rows == rows == 3 * n * n - 3 * n + 1
    assert C.rank() == rows
    assert C.equality_rhs == (1,) * rows
    assert C.nonneg_count == n ** 3


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_full_system_rank(n):
    C = constraint_system(n, reduced=False)
    assert C.num_rows == 3 * n * n
    assert C.rank() == 3 * n * n - 3 * n + 1


@pytest.mark.parametrize("n", [2, 3])
def test_rank_against_sympy(n):
    C = constraint_system(n, reduced=False)
    assert sympy_rank(C.equality_matrix) == C.rank()


def test_reduced_rows_span_the_full_system():
    from stochtensor._exact import rank
    for n in (2, 3, 4):
        full = constraint_system(n, reduced=False).equality_matrix
        red = constraint_system(n, reduced=True).equality_matrix
        assert rank(list(full) + list(red)) == rank(red)


def test_column_order_k_i_j():
    C = constraint_system(2, reduced=False)
    # first row: the mode-i line at (j, k) = (1, 1), i.e. x_111 and x_211
    assert C.row_labels[0] == ("i", (1, 1))
    assert C.equality_matrix[0] == (1, 0, 1, 0, 0, 0, 0, 0)


def test_satisfies(E):
    assert satisfies(E, constraint_system(3))
    assert not satisfies(zeros(3), constraint_system(3))
    with pytest.raises(DimensionError):
        satisfies(E, constraint_system(2))


def test_satisfies_reduced_matches_is_stochastic(vertices3):
    rng = random.Random(5)
    C = constraint_system(3)
    for _ in range(200):
        T = random_nonneg(rng, 3)
        assert satisfies(T, C) == is_stochastic(T)
    for _ in range(20):
        T = random_omega(3, rng, terms=3, vertices=vertices3.vertices)
        assert satisfies(T, C)
        for M in near_misses(T, rng):
            assert satisfies(M, C) == is_stochastic(M)


def test_hrep_text():
    text = constraint_system(2).to_hrep_text()
    lines = text.splitlines()
    assert lines[0].startswith("# n=2 variables=8")
    assert len(lines) == 1 + 7 + 8
    assert lines[1] == "= 1 0 1 0 0 0 0 0 1"
    assert lines[8] == ">= 1 0 0 0 0 0 0 0 0"
