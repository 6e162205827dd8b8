"""The two 3 x 3 x 3 reference cubes E and F, plus the witness pattern for F.

Both are given in the flattened layout (block = k, row = i, column = j).
"""

from fractions import Fraction

from .tensor_core import FlatSlices, Tensor3, unflatten

_E_TWICE = (
    ((0, 1, 1), (1, 1, 0), (1, 0, 1)),
    ((1, 1, 0), (0, 1, 1), (1, 0, 1)),
    ((1, 0, 1), (1, 0, 1), (0, 2, 0)),
)

_F = (
    (("0", "0.6", "0.4"), ("0.6", "0", "0.4"), ("0.4", "0.4", "0.2")),
    (("1", "0", "0"), ("0", "0.4", "0.6"), ("0", "0.6", "0.4")),
    (("0", "0.4", "0.6"), ("0.4", "0.6", "0"), ("0.6", "0", "0.4")),
)

# marked entries of F, as the Latin square L(j, k) = i
F_WITNESS_CELLS = ((2, 1, 3), (1, 3, 2), (3, 2, 1))


def tensor_E() -> Tensor3:
    """Stochastic, extreme, and without a positive diagonal."""
    half = Fraction(1, 2)
    blocks = tuple(tuple(tuple(half * v for v in row) for row in b) for b in _E_TWICE)
    return unflatten(FlatSlices(3, blocks))


def tensor_F() -> Tensor3:
    """Has a positive diagonal but is not a convex combination of permutation tensors."""
    blocks = tuple(tuple(tuple(Fraction(v) for v in row) for row in b) for b in _F)
    return unflatten(FlatSlices(3, blocks))
