"""Exact integer/rational linear algebra helpers (rank, row reduction)."""

from fractions import Fraction
from math import gcd, lcm


def integer_row(row):
    """Scale a row of rationals to a primitive integer row with the same span."""
    fracs = [Fraction(v) for v in row]
    den = 1
    for v in fracs:
        den = lcm(den, v.denominator)
    ints = [int(v * den) for v in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def rank(rows):
    """Exact rank of a rational matrix by fraction-free (Bareiss) elimination."""
    mat = [integer_row(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][c]
        for i in range(r + 1, len(mat)):
            a = mat[i][c]
            row_i = mat[i]
            row_r = mat[r]
            mat[i] = [(p * row_i[j] - a * row_r[j]) // prev for j in range(ncols)]
        prev = p
        r += 1
        if r == len(mat):
            break
    return r


def rref(rows):
    """Reduced row echelon form over the rationals.

    Returns ``(matrix, pivot_columns)`` with zero rows dropped.
    """
    mat = [[Fraction(v) for v in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][c]
        mat[r] = [v / p for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots
