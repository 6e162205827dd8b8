"""Diagonals of cubes and the positive-diagonal property.

A diagonal picks n^2 entries with no two on a common line.  Choosing entry
``(i, j, k)`` for each cell ``(j, k)`` with ``i = L(j, k)`` gives a diagonal
exactly when ``L`` is a Latin square, so witnesses are Latin squares.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, ResourceGuardError
from .latin import LatinSquare, enumerate_latin_squares
from .stochastic import is_stochastic
from .tensor_core import Tensor3

DEFAULT_DIAGONAL_CAP = 4


@dataclass(frozen=True)
class DiagonalWitness:
    square: LatinSquare

    @property
    def n(self):
        return self.square.n

    def positions(self):
        """Selected entries as 1-based ``(i, j, k)``, in row-major cell order."""
        n = self.square.n
        return [(self.square.cells[j][k], j + 1, k + 1) for j in range(n) for k in range(n)]


def is_positive_diagonal(T: Tensor3, W: DiagonalWitness) -> bool:
    if T.n != W.n:
        raise DimensionError(f"tensor has n={T.n}, witness has n={W.n}")
    return all(T.entry(i, j, k) > 0 for i, j, k in W.positions())


def _positive_heights(T):
    # masks[j][k]: bit (i-1) set iff T[i, j, k] > 0
    n = T.n
    masks = [[0] * n for _ in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if T._at(i, j, k) > 0:
                    masks[j][k] |= 1 << i
    return masks


def find_positive_diagonal(T: Tensor3):
    """The lexicographically least positive diagonal, or ``None``.

    Backtracking over cells in row-major order with ascending symbols, so the
    first hit is the least one.  After each placement every open cell in the
    affected row and column must still have a candidate, otherwise the branch
    is cut.
    """
    n = T.n
    allowed = _positive_heights(T)
    if any(m == 0 for row in allowed for m in row):
        return None
    row_used = [0] * n
    col_used = [0] * n
    grid = [[0] * n for _ in range(n)]

    def viable(r, c):
        # open cells after (r, c) sharing its row or column
        for cc in range(c + 1, n):
            if not allowed[r][cc] & ~(row_used[r] | col_used[cc]):
                return False
        for rr in range(r + 1, n):
            if not allowed[rr][c] & ~(row_used[rr] | col_used[c]):
                return False
        return True

    def fill(pos):
        if pos == n * n:
            return True
        r, c = divmod(pos, n)
        free = allowed[r][c] & ~(row_used[r] | col_used[c])
        while free:
            bit = free & -free
            free ^= bit
            row_used[r] |= bit
            col_used[c] |= bit
            grid[r][c] = bit.bit_length()
            if viable(r, c) and fill(pos + 1):
                return True
            row_used[r] ^= bit
            col_used[c] ^= bit
        grid[r][c] = 0
        return False

    if not fill(0):
        return None
    return DiagonalWitness(LatinSquare(n, tuple(tuple(r) for r in grid)))


def enumerate_positive_diagonals(T: Tensor3, cap: int = DEFAULT_DIAGONAL_CAP) -> list:
    """Every positive diagonal, found by filtering all Latin squares of order n."""
    if T.n > cap:
        raise ResourceGuardError(f"n={T.n} exceeds the diagonal enumeration cap {cap}")
    witnesses = (DiagonalWitness(L) for L in enumerate_latin_squares(T.n, cap=cap))
    return [W for W in witnesses if is_positive_diagonal(T, W)]


def in_L(T: Tensor3) -> bool:
    """Stochastic with at least one positive diagonal."""
    return is_stochastic(T) and find_positive_diagonal(T) is not None
