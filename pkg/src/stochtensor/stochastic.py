"""Stochasticity checks and the equality/nonnegativity description of the polytope."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._exact import rank
from .errors import DimensionError
from .tensor_core import MODES, Tensor3, line, line_labels, vec_lines
from .tensor_core import slice as slice_of


def is_stochastic(T: Tensor3) -> bool:
    """All entries nonnegative and every line (in all three modes) sums to 1."""
    if any(v < 0 for v in T.data):
        return False
    return all(sum(line(T, mode, fixed)) == 1 for mode, fixed in line_labels(T.n))


def check_vec_characterization(T: Tensor3) -> bool:
    """Stochasticity decided from the line vector alone.

    Multiplying the line vector by ``I_m (x) e_n`` with ``m = 3n^2`` sums each
    consecutive length-n block, so the test is: nonnegative, and every block
    of the line vector sums to one.
    """
    v = vec_lines(T)
    if any(x < 0 for x in v.values):
        return False
    return all(sum(b) == 1 for b in v.blocks())


def vec_rows(S):
    return [x for row in S for x in row]


def vec_cols(S):
    return [S[i][j] for j in range(len(S[0])) for i in range(len(S))]


def _kron_identity_ones(vec, n):
    # (I_n (x) e_n) v: sum of each consecutive n-block
    return [sum(vec[t:t + n], Fraction(0)) for t in range(0, len(vec), n)]


def matrix_vec_check(S) -> bool:
    """Doubly-stochastic test for a square matrix via its row and column vecs."""
    n = len(S)
    if n == 0 or any(len(row) != n for row in S):
        raise DimensionError("matrix must be square and nonempty")
    if any(x < 0 for row in S for x in row):
        return False
    ones = [1] * n
    return (_kron_identity_ones(vec_rows(S), n) == ones
            and _kron_identity_ones(vec_cols(S), n) == ones)


def variable_index(n: int, i: int, j: int, k: int) -> int:
    """Column of ``x_ijk`` (1-based indices): k outer, i middle, j inner."""
    return ((k - 1) * n + (i - 1)) * n + (j - 1)


def _line_row(n, mode, fixed):
    row = [0] * n ** 3
    a, b = fixed
    for t in range(1, n + 1):
        i, j, k = {"i": (t, a, b), "j": (a, t, b), "k": (a, b, t)}[mode]
        row[variable_index(n, i, j, k)] = 1
    return tuple(row)


@dataclass(frozen=True)
class ConstraintSystem:
    """``{x : A x = u, x >= 0}`` over the ``n**3`` entries of a cube.

    ``equality_matrix`` rows are 0/1 line-sum functionals (stored as ints),
    labelled by ``row_labels`` entries ``(mode, (a, b))`` meaning the line
    along ``mode`` with the other two indices fixed to ``a, b``.  Variables
    follow :func:`variable_index`.
    """

    n: int
    equality_matrix: tuple
    equality_rhs: tuple
    row_labels: tuple
    reduced: bool

    @property
    def nonneg_count(self) -> int:
        return self.n ** 3

    @property
    def num_rows(self) -> int:
        return len(self.equality_matrix)

    def rank(self) -> int:
        return rank(self.equality_matrix)

    def to_hrep_text(self) -> str:
        """Plain H-representation: one functional per line, RHS last.

        Equalities are written ``= c_1 ... c_m  b``, nonnegativity rows as
        ``>= c_1 ... c_m  0``, in variable order k, i, j.
        """
        m = self.n ** 3
        lines = [
            f"# n={self.n} variables={m} order=k,i,j "
            f"equalities={self.num_rows} inequalities={m} reduced={str(self.reduced).lower()}"
        ]
        for row, rhs in zip(self.equality_matrix, self.equality_rhs):
            lines.append("= " + " ".join(str(c) for c in row) + " " + str(rhs))
        for c in range(m):
            lines.append(">= " + " ".join("1" if t == c else "0" for t in range(m)) + " 0")
        return "\n".join(lines) + "\n"


def constraint_system(n: int, reduced: bool = True) -> ConstraintSystem:
    """Line-sum equalities for side ``n``.

    The full system has all ``3n^2`` line functionals.  The reduced one keeps
    mode-i lines for every (j, k), mode-j lines for i <= n-1 (every k), and
    mode-k lines for i, j <= n-1: ``3n^2 - 3n + 1`` independent rows.

    Restricting the mode-j lines by k instead of by i would not do: inside a
    slice with fixed k the mode-i and mode-j sums share a total, so that
    choice has rank ``3n^2 - 2n`` and no longer cuts out the polytope.
    """
    if n < 1:
        raise DimensionError("n must be positive")
    labels = []
    for mode, (a, b) in line_labels(n):
        if reduced:
            if mode == "j" and a == n:
                continue
            if mode == "k" and (a == n or b == n):
                continue
        labels.append((mode, (a, b)))
    rows = tuple(_line_row(n, mode, fixed) for mode, fixed in labels)
    return ConstraintSystem(n, rows, (1,) * len(rows), tuple(labels), reduced)


def satisfies(T: Tensor3, C: ConstraintSystem) -> bool:
    if T.n != C.n:
        raise DimensionError(f"tensor has n={T.n}, system has n={C.n}")
    x = T.data
    if any(v < 0 for v in x):
        return False
    for row, rhs in zip(C.equality_matrix, C.equality_rhs):
        if sum(v for c, v in zip(row, x) if c) != rhs:
            return False
    return True


def all_slices(T: Tensor3):
    """Every slice in every mode, as ``(mode, index, matrix)``."""
    return [(mode, c, slice_of(T, mode, c)) for mode in MODES for c in range(1, T.n + 1)]
