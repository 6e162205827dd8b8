"""Brute-force vertex enumeration by scanning every choice of tight constraints.

This is the cross-check for :mod:`stochtensor.ddm`; it shares no code with it.
The affine hull of the stochastic cubes is parametrised by the ``(n-1)^3``
entries with all indices below ``n``; every other entry is an integer affine
expression in those.  A vertex is a point where some ``(n-1)^3`` of the
nonnegativity constraints are tight with a nonsingular system and all the
others hold.  Every such subset is solved with fraction-free (Bareiss)
elimination on int64 arrays, then Cramer-style back substitution, so no
rounding occurs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .errors import ResourceGuardError

MAX_SUBSETS = 5_000_000


def subcube_parametrization(n: int):
    """``(const, coeffs)`` with ``x_ijk = const + coeffs . y`` for every entry.

    Rows follow storage order (k outer, i middle, j inner); ``y`` is the
    vector of entries with ``i, j, k < n`` in the same order.
    """
    m = n - 1
    free_index = {(i, j, k): (k * m + i) * m + j
                  for k in range(m) for i in range(m) for j in range(m)}

    @lru_cache(maxsize=None)
    def expr(i, j, k):
        if (i, j, k) in free_index:
            coeff = [0] * m ** 3
            coeff[free_index[(i, j, k)]] = 1
            return 0, tuple(coeff)
        # resolve the first index sitting at n-1 through its line sum
        idx = [i, j, k]
        mode = idx.index(n - 1)
        const, coeff = 1, [0] * m ** 3
        for a in range(m):
            idx[mode] = a
            c, v = expr(*idx)
            const -= c
            coeff = [x - y for x, y in zip(coeff, v)]
        return const, tuple(coeff)

    rows = [expr(i, j, k) for k in range(n) for i in range(n) for j in range(n)]
    const = np.array([c for c, _ in rows], dtype=np.int64)
    coeffs = np.array([v for _, v in rows], dtype=np.int64).reshape(n ** 3, m ** 3)
    return const, coeffs


def _solve_batch(G, b, subsets):
    """For each subset S solve ``G[S] y = -b[S]``.

    Returns ``(det, z)`` with ``z = det * y`` exactly; ``det == 0`` marks a
    singular choice.
    """
    B, d = subsets.shape
    M = np.concatenate([G[subsets], -b[subsets][:, :, None]], axis=2)
    alive = np.ones(B, dtype=bool)
    prev = np.ones(B, dtype=np.int64)
    rows = np.arange(B)
    for k in range(d):
        nz = M[:, k:, k] != 0
        alive &= nz.any(axis=1)
        p = nz.argmax(axis=1) + k
        sw = np.nonzero(p != k)[0]
        if sw.size:
            tmp = M[sw, k].copy()
            M[sw, k] = M[sw, p[sw]]
            M[sw, p[sw]] = tmp
        piv = np.where(alive, M[:, k, k], 1)
        if k + 1 < d:
            M[:, k + 1:, :] = (piv[:, None, None] * M[:, k + 1:, :]
                               - M[:, k + 1:, k:k + 1] * M[:, k:k + 1, :]) // prev[:, None, None]
        prev = piv
    det = np.where(alive, M[:, d - 1, d - 1], 0)
    z = np.zeros((B, d), dtype=np.int64)
    safe = np.where(alive, 1, 0)
    for l in range(d - 1, -1, -1):
        num = det * M[:, l, d] - (M[:, l, l + 1:d] * z[:, l + 1:]).sum(axis=1)
        diag = np.where(alive, M[:, l, l], 1)
        if np.any((num % diag != 0) & alive):
            raise ArithmeticError("inexact division in back substitution")
        z[:, l] = (num // diag) * safe
    return det, z


def scan_vertices(n: int, batch: int = 100_000):
    """All vertices of the stochastic-cube polytope of side ``n``, as Fraction tuples.

    Entries are in storage order; the list is sorted.
    """
    const, coeffs = subcube_parametrization(n)
    rows, d = coeffs.shape
    if d == 0:
        return [tuple(Fraction(int(c)) for c in const)]
    total = comb(rows, d)
    if total > MAX_SUBSETS:
        raise ResourceGuardError(f"{total} tight-set candidates for n={n}; scan is limited to n <= 3")
    found = set()
    combos = itertools.combinations(range(rows), d)
    while True:
        chunk = np.array(list(itertools.islice(combos, batch)), dtype=np.intp)
        if chunk.size == 0:
            break
        det, z = _solve_batch(coeffs, const, chunk)
        ok = det != 0
        det, z = det[ok], z[ok]
        # x * det for every entry, sign-normalised so det > 0
        X = det[:, None] * const[None, :] + z @ coeffs.T
        s = np.sign(det)
        X = X * s[:, None]
        det = det * s
        feas = (X >= 0).all(axis=1)
        X, det = X[feas], det[feas]
        if not len(det):
            continue
        g = np.gcd.reduce(np.concatenate([X, det[:, None]], axis=1), axis=1)
        X //= g[:, None]
        det //= g
        uniq = np.unique(np.concatenate([X, det[:, None]], axis=1), axis=0)
        for row in uniq:
            found.add(tuple(int(v) for v in row))
    return sorted(tuple(Fraction(v, r[-1]) for v in r[:-1]) for r in found)
