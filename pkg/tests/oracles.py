"""Independent reference implementations used only to compute expected values."""

import itertools
from fractions import Fraction


def naive_latin_count(n):
    """Count Latin squares by trying every tuple of permutation rows."""
    perms = list(itertools.permutations(range(n)))
    count = 0
    for rows in itertools.product(perms, repeat=n):
        if all(len({r[c] for r in rows}) == n for c in range(n)):
            count += 1
    return count


def naive_latin_squares(n):
    perms = list(itertools.permutations(range(1, n + 1)))
    out = []
    for rows in itertools.product(perms, repeat=n):
        if all(len({r[c] for r in rows}) == n for c in range(n)):
            out.append(tuple(rows))
    return out


def pascal_binomial(n, k):
    row = [1]
    for _ in range(n):
        row = [1] + [row[j] + row[j + 1] for j in range(len(row) - 1)] + [1]
    return row[k] if 0 <= k <= n else 0


def product_factorial(n):
    out = 1
    for t in range(2, n + 1):
        out *= t
    return out


def entry(T, i, j, k):
    return T.entry(i, j, k)


def brute_line_sums(T):
    """All 3n^2 line sums computed with explicit triple loops."""
    n = T.n
    r = range(1, n + 1)
    sums = []
    for j in r:
        for k in r:
            sums.append(sum(T.entry(i, j, k) for i in r))
    for i in r:
        for k in r:
            sums.append(sum(T.entry(i, j, k) for j in r))
    for i in r:
        for j in r:
            sums.append(sum(T.entry(i, j, k) for k in r))
    return sums


def brute_is_stochastic(T):
    return all(v >= 0 for v in T.data) and all(s == 1 for s in brute_line_sums(T))


def sympy_rank(rows):
    import sympy
    return sympy.Matrix([[Fraction(v) for v in r] for r in rows]).rank()
