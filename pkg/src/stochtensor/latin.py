"""Latin squares and permutation tensors.

A Latin square ``L`` of order n (symbols 1..n) corresponds to the 0/1 cube
with a one at ``(i, j, k)`` exactly when ``L(j, k) == i``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPermutationTensorError, ResourceGuardError
from .stochastic import is_stochastic
from .tensor_core import Tensor3

DEFAULT_CAP = 5


@dataclass(frozen=True, order=True)
class LatinSquare:
    """``cells[j-1][k-1]`` is the symbol ``i`` placed at row j, column k."""

    n: int
    cells: tuple

    def __post_init__(self):
        n = self.n
        cells = tuple(tuple(int(v) for v in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        full = set(range(1, n + 1))
        if len(cells) != n or any(len(r) != n for r in cells):
            raise ValueError(f"a Latin square of order {n} needs {n} rows of {n} cells")
        for r in cells:
            if set(r) != full:
                raise ValueError(f"row {r} is not a permutation of 1..{n}")
        for col in zip(*cells):
            if set(col) != full:
                raise ValueError(f"column {col} is not a permutation of 1..{n}")

    def __call__(self, j: int, k: int) -> int:
        return self.cells[j - 1][k - 1]

    def rows(self):
        return [list(r) for r in self.cells]

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in r) for r in self.cells)


def cyclic_square(n: int) -> LatinSquare:
    """``L(j, k) = ((j + k - 2) mod n) + 1``."""
    return LatinSquare(n, tuple(tuple((j + k) % n + 1 for k in range(n)) for j in range(n)))


def latin_to_tensor(L: LatinSquare) -> Tensor3:
    n = L.n
    one, zero = Fraction(1), Fraction(0)
    return Tensor3(n, tuple(one if L.cells[j][k] == i + 1 else zero
                            for k in range(n) for i in range(n) for j in range(n)))


def is_permutation_tensor(T: Tensor3) -> bool:
    return all(v == 0 or v == 1 for v in T.data) and is_stochastic(T)


def tensor_to_latin(P: Tensor3) -> LatinSquare:
    if not is_permutation_tensor(P):
        raise NotPermutationTensorError("tensor is not a 0/1 stochastic tensor")
    n = P.n
    cells = [[0] * n for _ in range(n)]
    for (i, j, k), v in P.positions():
        if v == 1:
            cells[j - 1][k - 1] = i
    return LatinSquare(n, tuple(tuple(r) for r in cells))


def _complete(n, first_row):
    """All Latin squares with the given first row, in lexicographic order.

    Cells are filled row-major with ascending symbols; row and column usage
    are bitmasks.
    """
    full = (1 << n) - 1
    grid = [list(first_row)] + [[0] * n for _ in range(n - 1)]
    row_used = [full] + [0] * (n - 1)
    col_used = [1 << (v - 1) for v in first_row]
    out = []

    def fill(pos):
        if pos == n * n:
            out.append(LatinSquare(n, tuple(tuple(r) for r in grid)))
            return
        r, c = divmod(pos, n)
        free = full & ~(row_used[r] | col_used[c])
        while free:
            bit = free & -free
            free ^= bit
            grid[r][c] = bit.bit_length()
            row_used[r] |= bit
            col_used[c] |= bit
            fill(pos + 1)
            row_used[r] ^= bit
            col_used[c] ^= bit
        grid[r][c] = 0

    fill(n)
    return out


def _complete_star(args):
    return _complete(*args)


def enumerate_latin_squares(n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> list:
    """Every Latin square of order ``n``, lexicographic in row-major reading.

    Work is split by first row; with ``jobs > 1`` the split is farmed out to
    worker processes and reassembled in the same order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ResourceGuardError(
            f"enumerating Latin squares of order {n} exceeds the cap {cap}; raise the cap to proceed")
    first_rows = list(itertools.permutations(range(1, n + 1)))
    if jobs > 1 and len(first_rows) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_complete_star, [(n, r) for r in first_rows]))
    else:
        parts = [_complete(n, r) for r in first_rows]
    return [sq for part in parts for sq in part]


def permutation_tensors(n: int, cap: int = DEFAULT_CAP) -> list:
    """The vertices of the permutation-tensor polytope, in Latin-square order."""
    return [latin_to_tensor(L) for L in enumerate_latin_squares(n, cap=cap)]
