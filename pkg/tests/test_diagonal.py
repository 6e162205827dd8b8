import itertools
import random
from fractions import Fraction

import pytest

from stochtensor import (LatinSquare, enumerate_latin_squares, enumerate_positive_diagonals,
                         find_positive_diagonal, in_L, is_positive_diagonal, latin_to_tensor,
                         tensor_to_latin, uniform)
from stochtensor.diagonal import DiagonalWitness
from stochtensor.errors import DimensionError, ResourceGuardError
from stochtensor.fixtures import F_WITNESS_CELLS
from stochtensor.polytope import random_delta, random_omega
from stochtensor.tensor_core import Tensor3


def brute_diagonals(T):
    """Every set of n^2 positive entries with no two on a line, by direct search."""
    n = T.n
    positive = [p for p, v in T.positions() if v > 0]
    found = []
    for combo in itertools.combinations(positive, n * n):
        lines = set()
        ok = True
        for i, j, k in combo:
            keys = [("i", j, k), ("j", i, k), ("k", i, j)]
            if any(key in lines for key in keys):
                ok = False
                break
            lines.update(keys)
        if ok:
            found.append(frozenset(combo))
    return found


def test_F_witness(F):
    W = DiagonalWitness(LatinSquare(3, F_WITNESS_CELLS))
    assert is_positive_diagonal(F, W)
    all_w = enumerate_positive_diagonals(F)
    assert W in all_w
    assert find_positive_diagonal(F) == min(all_w, key=lambda w: w.square.cells)


def test_E_has_no_positive_diagonal(E):
    for L in enumerate_latin_squares(3):
        assert not is_positive_diagonal(E, DiagonalWitness(L))
    assert find_positive_diagonal(E) is None
    assert enumerate_positive_diagonals(E) == []
    assert brute_diagonals(E) == []


def test_witness_of_permutation_tensor(perms3):
    for P in perms3:
        assert is_positive_diagonal(P, DiagonalWitness(tensor_to_latin(P)))
        assert find_positive_diagonal(P).square == tensor_to_latin(P)


def test_uniform_gets_least_square():
    for n in (1, 2, 3, 4):
        assert find_positive_diagonal(uniform(n)).square == enumerate_latin_squares(n)[0]
    assert len(enumerate_positive_diagonals(uniform(3))) == 12


def test_witness_positions_noncollinear():
    for L in enumerate_latin_squares(3):
        pos = DiagonalWitness(L).positions()
        for a, b in itertools.combinations(pos, 2):
            assert sum(x == y for x, y in zip(a, b)) <= 1


def test_search_matches_exhaustive_filter():
    rng = random.Random(99)
    for _ in range(300):
        # sparse random supports exercise the pruning
        T = Tensor3(3, tuple(Fraction(rng.random() < 0.45) for _ in range(27)))
        listed = enumerate_positive_diagonals(T)
        found = find_positive_diagonal(T)
        assert (found is None) == (not listed)
        if listed:
            assert found == listed[0]
        assert len(listed) == len(brute_diagonals(T))


def test_search_matches_exhaustive_on_random_stochastic(vertices3):
    rng = random.Random(4)
    for _ in range(500):
        T = random_omega(3, rng, terms=rng.randint(1, 3), vertices=vertices3.vertices)
        assert (find_positive_diagonal(T) is None) == (not enumerate_positive_diagonals(T))


def test_order4_search():
    rng = random.Random(1)
    for _ in range(20):
        T = Tensor3(4, tuple(Fraction(rng.random() < 0.6) for _ in range(64)))
        listed = enumerate_positive_diagonals(T)
        found = find_positive_diagonal(T)
        assert (found is None) == (not listed)
        if listed:
            assert found == listed[0]


def test_cone_property(vertices3):
    rng = random.Random(8)
    for _ in range(50):
        A = random_omega(3, rng, terms=2, vertices=vertices3.vertices)
        W = find_positive_diagonal(A)
        if W is None:
            continue
        B = Tensor3(3, tuple(Fraction(rng.randint(0, 3), 2) for _ in range(27)))
        a, b = Fraction(rng.randint(1, 9), 4), Fraction(rng.randint(1, 9), 5)
        assert is_positive_diagonal(A.scale(a), W)
        assert is_positive_diagonal(A + B.scale(b), W)


def test_in_L(E, F, perms3):
    assert in_L(F) and not in_L(E)
    assert all(in_L(P) for P in perms3)
    rng = random.Random(2)
    for _ in range(20):
        assert in_L(random_delta(3, rng, terms=rng.randint(2, 6)))


def test_dimension_mismatch(F):
    with pytest.raises(DimensionError):
        is_positive_diagonal(F, DiagonalWitness(enumerate_latin_squares(2)[0]))


def test_enumeration_cap():
    with pytest.raises(ResourceGuardError):
        enumerate_positive_diagonals(uniform(5))
