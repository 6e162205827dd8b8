"""Double description method over the integers.

Converts ``{z : G z >= 0}`` (a pointed polyhedral cone) into its extreme
rays.  A polytope ``{x : A x = u, x >= 0}`` is handled by parametrising the
affine hull and homogenising, see :func:`vertices_of_system`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ._exact import integer_row, rref


def _primitive(vec):
    g = 0
    for v in vec:
        g = gcd(g, v)
    return tuple(v // g for v in vec) if g > 1 else tuple(vec)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _initial_basis(G, dim):
    """Indices of ``dim`` linearly independent rows of ``G`` (greedy, in order)."""
    chosen = []
    echelon = []  # rows in echelon form with their pivot column
    for idx, row in enumerate(G):
        r = [Fraction(v) for v in row]
        for piv_col, erow in echelon:
            if r[piv_col] != 0:
                f = r[piv_col] / erow[piv_col]
                r = [a - f * b for a, b in zip(r, erow)]
        piv = next((c for c, v in enumerate(r) if v != 0), None)
        if piv is not None:
            echelon.append((piv, r))
            chosen.append(idx)
            if len(chosen) == dim:
                break
    if len(chosen) < dim:
        raise ValueError("constraint matrix does not have full column rank; cone is not pointed")
    return chosen


def _inverse_columns(H):
    """Columns of ``H^{-1}`` as primitive integer vectors (positive multiples)."""
    dim = len(H)
    aug = [[Fraction(v) for v in H[i]] + [Fraction(int(i == j)) for j in range(dim)]
           for i in range(dim)]
    red, pivots = rref(aug)
    assert pivots[:dim] == list(range(dim))
    inv = [row[dim:] for row in red]
    return [_primitive(integer_row([inv[i][j] for i in range(dim)])) for j in range(dim)]


def extreme_rays(G, order=None):
    """Extreme rays of the pointed cone ``{z : g . z >= 0 for g in G}``.

    Rays are primitive integer tuples; each comes with the set of constraint
    indices it makes tight.  ``order`` optionally fixes the insertion order of
    the constraints beyond the initial simplicial cone.
    """
    G = [tuple(int(v) for v in row) for row in G]
    dim = len(G[0])
    init = _initial_basis(G, dim)
    rays = []
    for j, r in enumerate(_inverse_columns([G[i] for i in init])):
        # H r = (positive) e_j: tight on every initial row but the j-th
        zero = 0
        for t, i in enumerate(init):
            if t != j:
                zero |= 1 << i
        rays.append((r, zero))

    init_set = set(init)
    rest = [i for i in (order if order is not None else range(len(G))) if i not in init_set]
    for idx in rest:
        h = G[idx]
        bit = 1 << idx
        plus, zero_rays, minus = [], [], []
        for r, z in rays:
            s = _dot(h, r)
            if s > 0:
                plus.append((r, z, s))
            elif s < 0:
                minus.append((r, z, s))
            else:
                zero_rays.append((r, z | bit))
        new = []
        if minus and plus:
            zsets = [z for _, z in rays]
            for p, zp, sp in plus:
                for m, zm, sm in minus:
                    common = zp & zm
                    if bin(common).count("1") < dim - 2:
                        continue
                    # combinatorial adjacency: no third ray is tight on all of `common`
                    adjacent = True
                    for z in zsets:
                        if z != zp and z != zm and common & ~z == 0:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    v = _primitive([sp * a - sm * b for a, b in zip(m, p)])
                    new.append((v, common | bit))
        rays = [(r, z) for r, z, _ in plus] + zero_rays + new
    return rays


def parametrize(equalities, rhs):
    """Write the solution set of ``E x = rhs`` as ``x = c + M y``.

    Returns ``(const, coeffs, free_columns)`` with ``coeffs[c]`` the row of
    ``M`` for variable ``c``.  Free variables are the non-pivot columns of the
    reduced row echelon form.
    """
    ncols = len(equalities[0])
    aug = [list(row) + [r] for row, r in zip(equalities, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent equality system")
    free = [c for c in range(ncols) if c not in pivots]
    const = [Fraction(0)] * ncols
    coeffs = [[Fraction(0)] * len(free) for _ in range(ncols)]
    for row, p in zip(red, pivots):
        const[p] = row[ncols]
        for t, f in enumerate(free):
            coeffs[p][t] = -row[f]
    for t, f in enumerate(free):
        coeffs[f][t] = Fraction(1)
    return const, coeffs, free


def vertices_of_system(equalities, rhs):
    """Vertices of the bounded polytope ``{x : E x = rhs, x >= 0}`` as Fraction tuples.

    Each nonnegativity ``x_c >= 0`` becomes ``const_c t + coeffs_c . y >= 0``
    on the homogenised space ``(t, y)``, plus ``t >= 0``; rays with ``t > 0``
    are the vertices.
    """
    const, coeffs, free = parametrize(equalities, rhs)
    d = len(free)
    G = [tuple(integer_row([const[c]] + coeffs[c])) for c in range(len(const))]
    G.append((1,) + (0,) * d)
    rays = extreme_rays(G)
    out = []
    for r, _ in rays:
        t = r[0]
        if t <= 0:
            raise ValueError("polytope is unbounded")
        y = [Fraction(v, t) for v in r[1:]]
        out.append(tuple(const[c] + sum((a * b for a, b in zip(coeffs[c], y)), Fraction(0))
                         for c in range(len(const))))
    return out
