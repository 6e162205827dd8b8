"""Phase-one simplex over the rationals with Bland's rule."""

from __future__ import annotations

from fractions import Fraction


def phase_one(A, b):
    """Find ``x >= 0`` with ``A x = b``, or return ``None`` if there is none.

    Exact tableau method: one artificial per row, minimise their sum,
    entering/leaving choices by smallest index so cycling cannot occur.
    Artificials that leave the basis are never re-admitted.  The returned
    point is a basic feasible solution.
    """
    m = len(A)
    N = len(A[0]) if m else 0
    rows = []
    rhs = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        rows.append(row + [Fraction(int(t == i)) for t in range(m)])
        rhs.append(bi)
    basis = [N + i for i in range(m)]
    width = N + m
    # reduced costs of the phase-one objective (sum of artificials)
    cost = [-sum((rows[i][j] for i in range(m)), Fraction(0)) for j in range(N)] + [Fraction(0)] * m
    value = sum(rhs, Fraction(0))

    while True:
        enter = next((j for j in range(N) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                key = (rhs[i] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            # cannot happen: the phase-one objective is bounded below by 0
            raise ArithmeticError("unbounded phase-one problem")
        r = best[1]
        piv = rows[r][enter]
        prow = [v / piv for v in rows[r]]
        prhs = rhs[r] / piv
        rows[r], rhs[r] = prow, prhs
        nz = [j for j in range(width) if prow[j] != 0]
        for i in range(m):
            if i != r:
                f = rows[i][enter]
                if f != 0:
                    ri = rows[i]
                    for j in nz:
                        ri[j] -= f * prow[j]
                    rhs[i] -= f * prhs
        f = cost[enter]
        for j in nz:
            cost[j] -= f * prow[j]
        value += f * prhs
        basis[r] = enter

    if value != 0:
        return None
    x = [Fraction(0)] * N
    for i, j in enumerate(basis):
        if j < N:
            x[j] = rhs[i]
    return x
